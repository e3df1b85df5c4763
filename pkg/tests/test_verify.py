import json

import pytest

from stlab.hosts import PreconditionError
from stlab.verify import CLAIMS, Instance, Report, merge_status, parse_grid, run_claim
from stlab.verify.claims import stability_threshold, verify_stability


def test_parse_grid():
    g = parse_grid(["h=2..4", "n=100,200 k=3", "m=1..9:4"])
    assert g == {"h": [2, 3, 4], "n": [100, 200], "k": [3], "m": [1, 5, 9]}
    for bad in (["h"], ["h=a"], ["h=1..3:0"], ["=3"]):
        with pytest.raises(ValueError):
            parse_grid(bad)


def test_status_aggregation():
    r = Report("x", {})
    assert r.status == "unknown"  # nothing checked is not a pass
    r.add(Instance({}, "pass"))
    assert r.status == "pass" and r.exit_code == 0
    r.add(Instance({}, "unknown"))
    assert r.status == "unknown" and r.exit_code == 2
    r.add(Instance({}, "fail", graph6="A_", recheck=lambda: True))
    assert r.status == "fail" and r.exit_code == 1
    w = r.witnesses()
    assert w == [{"instance": 2, "params": {}, "graph6": "A_", "violation_rechecked": True}]
    obs = Report("y", {})
    obs.add(Instance({}, "observed"))
    assert obs.status == "observational" and obs.exit_code == 0
    assert merge_status([r, obs]) == "fail"
    assert merge_status([obs, Report("z", {}, unlisted_passes=3)]) == "pass"
    with pytest.raises(ValueError):
        Instance({}, "maybe")


def test_report_serialisation():
    r = Report("x", {"n": [1]})
    r.add(Instance({"n": 1}, "pass", {"a": 1}))
    r.unlisted_passes = 4
    r.timing["wall_seconds"] = 1.0
    data = json.loads(r.dumps())
    assert data["schema"] == "stlab/1" and data["counts"]["pass"] == 5
    assert "timing" not in json.loads(r.dumps(include_timing=False))
    csv = r.to_csv().splitlines()
    assert csv[0] == "claim,index,params,verdict,graph6" and len(csv) == 3


def test_preconditions_and_relaxed_mode():
    with pytest.raises(PreconditionError):
        run_claim("lem:hn1", {"n": [20]})
    r = run_claim("lem:hn1", {"n": [20, 30]}, relaxed=True)
    verdicts = [i.verdict for i in r.instances]
    assert verdicts[0] == "observed" and verdicts[1] == "pass"
    assert r.instances[0].detail["outside_hypothesis"]
    with pytest.raises(PreconditionError):
        run_claim("thm:stability", {"n": [20], "samples": [1]})
    with pytest.raises(PreconditionError):
        run_claim("lem:2p3-free", {"n": [5]})
    with pytest.raises(KeyError):
        run_claim("lem:nope")


def test_stability_threshold():
    assert stability_threshold(2) == 25
    assert stability_threshold(3) == 54


def test_claims_are_deterministic():
    a = run_claim("thm:stability", {"samples": [300]}, seed=5).dumps(include_timing=False)
    b = run_claim("thm:stability", {"samples": [300]}, seed=5).dumps(include_timing=False)
    assert a == b
    c = run_claim("thm:stability", {"samples": [300]}, seed=6).dumps(include_timing=False)
    assert json.loads(c)["status"] == "pass"


def test_stability_budget_exhaustion_is_unknown(monkeypatch):
    import stlab.verify.claims as claims
    from stlab.forbidden import SearchBudgetExceeded

    def exhausted(g, k, budget):
        raise SearchBudgetExceeded(budget + 1)

    monkeypatch.setattr(claims, "contains_k_p3", exhausted)
    r = verify_stability(samples=5, per_host=0)
    assert r.status == "unknown" and r.exit_code == 2
    assert r.counts()["pass"] == 0
    assert r.summary["branches"]["unknown"] == r.counts()["unknown"]


def test_stability_records_branches():
    r = verify_stability(samples=200, per_host=3)
    assert r.status == "pass"
    branches = r.summary["branches"]
    assert branches["host"] >= 4 and branches["containment"] >= 1
    planted = [i for i in r.instances if i.params["source"].startswith("planted:")]
    assert planted and planted[0].detail["branch"] == "containment"
    host = [i for i in r.instances if i.params["source"] == "host:F(n=30,k=2)"]
    assert host[0].detail["branch"] == "host"


def test_small_claim_runs():
    assert run_claim("lem:q-chain", {"h": [2], "n": [28, 100]}).status == "pass"
    assert run_claim("lem:L", {"h": [3], "n": [63, 64]}).status == "pass"
    assert run_claim("lem:F-bounds", {"k": [3], "n": [18, 40]}).status == "pass"
    assert run_claim("lem:Kh-attach", {"k": [3], "n": [23, 60]}).status == "pass"
    assert run_claim("lem:N6-attach", {"k": [2], "n": [6, 7]}).status == "pass"
    assert run_claim("thm:spectral-kp3", {"n": [16, 40]}).status == "pass"
    assert run_claim("thm:turan-kp3", {"k": [3], "n": [8]}).status == "pass"
    assert run_claim("lem:bounds", {"n": [5], "trials": [20]}).status == "pass"


def test_linear_forest_claim_is_observational():
    r = run_claim("thm:linear-forest", {"forest": [4, 2], "n": [6, 7]})
    assert r.status == "observational" and r.exit_code == 0
    assert {i.verdict for i in r.instances} == {"observed"}


def test_registry_covers_claims():
    for cid in ["thm:turan-kp3", "thm:stability", "lem:q-chain", "lem:hn1", "lem:L", "lem:F-bounds",
                "lem:Kh-attach", "lem:N6-attach", "lem:q-all", "thm:spectral-kp3", "lem:bounds", "lem:2p3-free"]:
        assert cid in CLAIMS
