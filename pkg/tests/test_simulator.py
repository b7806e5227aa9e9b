import json
import random

import pytest

from boolecode.boolfn import BooleanFunction, anf_from_truth_table
from boolecode.schemes import SchemeInstance
from boolecode.simulator import (
    AES_SBOX,
    AdversaryModel,
    child_seed,
    run_trial,
    sbox_bit_functions,
    sbox_casestudy,
    sweep_threshold,
)
from conftest import make_example_dnf


def test_adversary_validation():
    with pytest.raises(ValueError):
        AdversaryModel(1, "weird")
    with pytest.raises(ValueError):
        AdversaryModel(-1)


def test_child_seed_deterministic_and_split():
    assert child_seed(7, 1, 2) == child_seed(7, 1, 2)
    assert child_seed(7, 1, 2) != child_seed(7, 2, 1)
    assert child_seed(7, 1, 2, 0) != child_seed(7, 1, 2, 1)


def test_trial_b0_always_succeeds(and3, example_dnf4):
    rng = random.Random(0)
    cases = [
        SchemeInstance("anf", 6, 2, function=example_dnf4),
        SchemeInstance("dnf", 6, 2, function=example_dnf4),
        SchemeInstance("ptf", 8, 2, function=example_dnf4),
        SchemeInstance("dptf", 8, 2, function=example_dnf4, d_parts=2),
        SchemeInstance("lcc", 10, 2, function=and3),
    ]
    for inst in cases:
        pipe = inst.build()
        for t in range(10):
            inputs = pipe.random_inputs(rng)
            out = run_trial(pipe, inputs, AdversaryModel(0), trial_seed=t)
            assert out.success and out.corrupted == ()


def test_trial_deterministic(example_dnf4):
    inst = SchemeInstance("anf", 8, 3, function=example_dnf4)
    pipe = inst.build()
    inputs = [(1, 0, 1, 1), (0, 0, 0, 0), (1, 1, 1, 1)]
    a = run_trial(pipe, inputs, AdversaryModel(2), trial_seed=99)
    b = run_trial(pipe, inputs, AdversaryModel(2), trial_seed=99)
    assert a == b


def test_trial_erase_strategy(example_dnf4):
    inst = SchemeInstance("dnf", 10, 4, function=example_dnf4)
    pipe = inst.build()
    rng = random.Random(1)
    for t in range(30):
        inputs = pipe.random_inputs(rng)
        out = run_trial(pipe, inputs, AdversaryModel(3, "erase"), trial_seed=t)
        assert out.success


def test_trial_additive_offset(example_dnf4):
    inst = SchemeInstance("anf", 10, 4, function=example_dnf4)
    pipe = inst.build()
    rng = random.Random(2)
    for t in range(30):
        inputs = pipe.random_inputs(rng)
        out = run_trial(pipe, inputs, AdversaryModel(3, "additive-offset"), trial_seed=t)
        assert out.success


def test_trial_slot_consistency(example_dnf4):
    # a corrupted worker replaces its whole payload row
    inst = SchemeInstance("dnf", 8, 2, function=example_dnf4)
    pipe = inst.build()
    seen = {}

    class Spy:
        def __getattr__(self, name):
            return getattr(pipe, name)

        def decode(self, received, ctx):
            seen["received"] = received
            return pipe.decode(received, ctx)

    inputs = [(1, 1, 1, 1), (0, 1, 0, 0)]
    out = run_trial(Spy(), inputs, AdversaryModel(3), trial_seed=5)
    shares, ctx = pipe.prepare(inputs)
    honest = [pipe.worker_payload(s, ctx) for s in shares]
    received = seen["received"]
    for i in range(8):
        if i in out.corrupted:
            assert received[i] != honest[i]
        else:
            assert received[i] == honest[i]


def test_sweep_dnf_example():
    inst = SchemeInstance("dnf", 10, 4, function=make_example_dnf(4))
    report = sweep_threshold(inst, trials=60, seed=3)
    assert report.beta == 3
    assert report.b_hat == 3
    assert dict(report.results)[3] == 60


def test_sweep_lcc_and3(and3):
    inst = SchemeInstance("lcc", 10, 2, function=and3)
    report = sweep_threshold(inst, trials=60, seed=4)
    assert report.beta == 3
    assert report.b_hat >= 3


def test_sweep_infeasible_flag():
    fn = BooleanFunction.random(5, random.Random(6))
    # degree-5 function at N=8, K=4 makes the Lagrange baseline infeasible
    while anf_from_truth_table(fn).degree < 5:
        fn = BooleanFunction.random(5, random.Random(7))
    inst = SchemeInstance("lcc", 8, 4, function=fn)
    report = sweep_threshold(inst, trials=10, seed=5)
    assert not report.feasible
    assert report.b_hat == 0
    assert report.results == ()


def test_sweep_reports_reproducible(example_dnf4):
    inst = SchemeInstance("anf", 9, 3, function=example_dnf4)
    a = sweep_threshold(inst, trials=25, seed=11)
    b = sweep_threshold(inst, trials=25, seed=11)
    assert a.csv_text() == b.csv_text()
    assert json.dumps(a.to_json()) == json.dumps(b.to_json())
    c = sweep_threshold(inst, trials=25, seed=12)
    assert json.dumps(c.to_json()) != json.dumps(a.to_json())


def test_sweep_csv_columns(example_dnf4):
    inst = SchemeInstance("dptf", 9, 3, function=example_dnf4, d_parts=2)
    report = sweep_threshold(inst, trials=5, seed=0)
    lines = report.csv_text().strip().split("\n")
    assert lines[0] == "scheme,N,K,D,q,b,trials,successes,beta_theory,outer_bound"
    first = lines[1].split(",")
    assert first[0] == "dptf" and first[1] == "9" and first[3] == "2"


def test_targeted_wrong_value_beyond_threshold(example_dnf4):
    # at b = beta + 1 the planted second codeword must fool the decoder sometimes
    for scheme in ("anf", "dnf"):
        inst = SchemeInstance(scheme, 10, 4, function=example_dnf4)
        pipe = inst.build()
        wrong = 0
        for seed in range(40):
            rng = random.Random(child_seed(77, seed))
            inputs = pipe.random_inputs(rng)
            out = run_trial(pipe, inputs, AdversaryModel(4, "codeword-targeted"), trial_seed=seed)
            if not out.success and out.failure_kind == "wrong-value":
                wrong += 1
        assert wrong >= 1


def test_sbox_fixture():
    assert len(AES_SBOX) == 256
    assert AES_SBOX[0] == 0x63 and AES_SBOX[255] == 0x16
    bits = sbox_bit_functions()
    assert len(bits) == 8
    for i, fn in enumerate(bits):
        assert fn.evaluate(tuple((0x53 >> j) & 1 for j in range(8))) == (AES_SBOX[0x53] >> i) & 1


def test_sbox_casestudy_numbers():
    record = sbox_casestudy(100, 10)
    assert record["lcc_beta"] == 18
    assert record["anf_beta"] == 45
    assert record["dnf_beta"] == 45
    assert record["improvement_ratio"] == 1.5
    assert record["improvement_pct"] == 150.0
    assert record["max_degree"] == 7
    assert record["degree_warnings"] == []
    for row in record["per_bit"]:
        assert row["degree"] == 7
        assert row["weight"] == 128
        assert row["ptf_beta"] == 13  # (100 - 9*8 - 1) // 2
