import random

from outerlink import verify
from outerlink.graph import standard_graph


def test_trial_seeds_are_reproducible():
    a = verify.trial_seeds(42, 5)
    assert a == verify.trial_seeds(42, 5)
    rng = random.Random(42)
    assert a == [rng.getrandbits(64) for _ in range(5)]
    assert a != verify.trial_seeds(43, 5)


def test_is_hamiltonian():
    assert verify.is_hamiltonian(standard_graph("K4"))
    assert verify.is_hamiltonian(standard_graph("C6"))
    assert not verify.is_hamiltonian(standard_graph("P4"))
    assert not verify.is_hamiltonian(standard_graph("K32"))


def test_sweep_result_records_seed():
    res = verify.outer_link_parity("K5", trials=20, seed=7)
    d = res.as_dict()
    assert d["passed"] and d["seed"] == 7 and d["checked"] == 20
    assert d["details"]["vertex_orders"] == 12


def test_expansion_counts():
    res = verify.expansion_preservation()
    assert res.passed
    assert res.checked == 16 + 14


def test_small_exhaustive_sweeps():
    for fn in (verify.s1_equivalence, verify.forbidden_minors, verify.outer_equivalence):
        res = fn(4)
        assert res.passed and res.checked == 1 + 2 + 4 + 11


def test_failure_is_reported():
    res = verify._first_failure("demo", [None, "bad graph", "worse graph"])
    assert not res.passed and res.counterexample == "bad graph"
