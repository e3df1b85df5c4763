"""Quotient matrices of equitable partitions and exact family spectra."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from stlab.canon import refine
from stlab.families import FamilySpec, build
from stlab.graph import Graph, mask_of
from stlab.spectral.poly import Poly, RootInterval, charpoly, largest_root


class NotEquitableError(ValueError):
    pass


@dataclass(frozen=True)
class QuotientMatrix:
    """``matrix[i][j]`` is the number of part-``j`` neighbours of any part-``i``
    vertex, with that vertex's degree added on the diagonal."""

    parts: tuple[tuple[int, ...], ...]
    matrix: tuple[tuple[int, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    @classmethod
    def from_partition(cls, g: Graph, parts) -> QuotientMatrix:
        parts = tuple(tuple(sorted(p)) for p in parts if len(p))
        covered = sorted(v for p in parts for v in p)
        if covered != list(range(g.n)):
            raise ValueError("parts must partition the vertex set")
        masks = [mask_of(p) for p in parts]
        rows = []
        for i, part in enumerate(parts):
            profile = None
            for v in part:
                r = g.rows[v]
                counts = tuple((r & m).bit_count() for m in masks)
                if profile is None:
                    profile = counts
                elif counts != profile:
                    raise NotEquitableError(f"part {i} is not equitable (vertex {v})")
            assert profile is not None
            deg = sum(profile)
            rows.append(tuple(c + (deg if j == i else 0) for j, c in enumerate(profile)))
        return cls(parts, tuple(rows))

    def charpoly(self) -> Poly:
        return charpoly(self.matrix)


def _blocks(spec: FamilySpec) -> list[list[int]]:
    """Declared partition of each family's layout, before any refinement."""
    n, h, kind = spec.n, spec.h, spec.kind
    if kind == "Complete":
        return [list(range(n))]
    if kind == "N6":
        return [[0, 1, 2], [3, 4, 5]]
    if kind == "S":
        return [list(range(h)), list(range(h, n))]
    if kind == "S_plus":
        return [list(range(h)), [h, h + 1], list(range(h + 2, n))]
    if kind == "L":
        split = 1 + spec.t1 * h
        return [[0], list(range(1, split)), list(range(split, n))]
    if kind == "H_n1":
        return [[0], [1], [2, 3], list(range(4, n))]
    c = spec.clique_order
    att = spec.attachment_order if kind == "F_attach" else 0
    out = [list(range(c))]
    if att:
        out.append(list(range(c, c + att)))
    start = c + att
    out.append(list(range(start, start + 2 * spec.p)))
    out.append(list(range(start + 2 * spec.p, n)))
    return out


def family_quotient(spec: FamilySpec, g: Graph | None = None) -> QuotientMatrix:
    g = build(spec) if g is None else g
    blocks = [b for b in _blocks(spec) if b]
    if spec.kind == "F_attach":
        # an arbitrary attachment graph has no declared symmetry; use the
        # coarsest equitable refinement of the declared blocks
        blocks = refine(g.rows, blocks)
    return QuotientMatrix.from_partition(g, blocks)


@dataclass(frozen=True)
class ExactSpectrum:
    spec: FamilySpec
    quotient: QuotientMatrix
    poly: Poly
    root: RootInterval

    def to_json(self) -> dict:
        return {"family": str(self.spec), "quotient": [list(r) for r in self.quotient.matrix], **self.root.to_json()}


def q_exact(spec: FamilySpec, width=Fraction(1, 2**40)) -> ExactSpectrum:
    """Characteristic polynomial of the family's quotient matrix and an
    isolating interval for its largest root, which is ``q`` of the family."""
    quo = family_quotient(spec)
    poly = quo.charpoly()
    return ExactSpectrum(spec, quo, poly, largest_root(poly, width))
