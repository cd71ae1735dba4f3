import json
import math
import random

import pytest

from frobenius3.errors import (
    InvalidInputError,
    InvariantViolation,
    NotPairwiseCoprimeError,
    StepBudgetExceeded,
)
from frobenius3.oracle import oracle_least_multiple
from frobenius3.walk import (
    MultipleCertificate,
    WalkInput,
    find_least_multiple,
    init_walk,
    pair_representable,
    trace_rows,
    trace_table,
    trace_to_json,
    walk_step,
)

GOLDEN = WalkInput(b=8231, a=7523, c=9533)


def coprime_triples(limit):
    for a1 in range(2, limit - 1):
        for a2 in range(a1 + 1, limit):
            if math.gcd(a1, a2) != 1:
                continue
            for a3 in range(a2 + 1, limit + 1):
                if math.gcd(a1, a3) == 1 and math.gcd(a2, a3) == 1:
                    yield a1, a2, a3


class TestWalkInput:
    def test_rejects_shared_factor(self):
        with pytest.raises(NotPairwiseCoprimeError):
            WalkInput(b=6, a=4, c=9)

    def test_rejects_small_values(self):
        with pytest.raises(InvalidInputError):
            WalkInput(b=1, a=3, c=5)


class TestInitWalk:
    def test_golden(self):
        tr = init_walk(GOLDEN)
        assert (tr.t0, tr.p0) == (5524, 7001)
        assert 7001 * 7523 == 8231 + 5524 * 9533
        assert tr.inv_p0 == 7338

    def test_small(self):
        tr = init_walk(WalkInput(b=5, a=3, c=7))
        assert (tr.t0, tr.p0) == (1, 4)
        tr = init_walk(WalkInput(b=7, a=3, c=5))
        assert (tr.t0, tr.p0) == (1, 4)

    def test_identity_holds_generally(self):
        for a1, a2, a3 in coprime_triples(25):
            tr = init_walk(WalkInput(b=a2, a=a1, c=a3))
            assert tr.p0 * a1 == a2 + tr.t0 * a3
            assert (tr.p0 * a1) % a3 == a2 % a3


class TestWalkStep:
    def test_golden_sequences(self):
        tr = init_walk(GOLDEN)
        for _ in range(6):
            tr = walk_step(tr)
        assert [s.k for s in tr.steps] == [2, 2, 3, 2, 2, 5]
        assert [s.p for s in tr.steps] == [4469, 1937, 1342, 747, 152, 13]
        assert [s.v for s in tr.steps] == [2, 3, 7, 11, 15, 64]

    def test_first_step_small(self):
        tr = walk_step(init_walk(WalkInput(b=5, a=3, c=7)))
        s = tr.steps[0]
        assert (s.k, s.p, s.v) == (2, 1, 2)

    def test_immutability(self):
        tr0 = init_walk(GOLDEN)
        tr1 = walk_step(tr0)
        assert tr0.steps == ()
        assert len(tr1.steps) == 1

    def test_step_after_termination_rejected(self):
        _, tr = find_least_multiple(WalkInput(b=5, a=3, c=7))
        with pytest.raises(InvalidInputError):
            walk_step(tr)


class TestFindLeastMultiple:
    def test_golden(self):
        cert, tr = find_least_multiple(GOLDEN)
        assert (cert.m, cert.u, cert.w) == (64, 13, 45)
        assert 64 * 8231 == 13 * 7523 + 45 * 9533
        assert 526784 == 97799 + 428985

    def test_small(self):
        cert, _ = find_least_multiple(WalkInput(b=5, a=3, c=7))
        assert (cert.m, cert.u, cert.w) == (2, 1, 1)

    def test_m_equals_one(self):
        cert, _ = find_least_multiple(WalkInput(b=12, a=5, c=7))
        assert (cert.m, cert.u, cert.w) == (1, 1, 1)

    def test_budget_exhaustion(self):
        with pytest.raises(StepBudgetExceeded):
            find_least_multiple(GOLDEN, max_steps=2)

    def test_bad_budget(self):
        with pytest.raises(InvalidInputError):
            find_least_multiple(GOLDEN, max_steps=0)

    def test_minimality_vs_oracle_small(self):
        for a1, a2, a3 in coprime_triples(30):
            for target, x, y in ((a1, a2, a3), (a2, a1, a3), (a3, a1, a2)):
                cert, _ = find_least_multiple(WalkInput(b=target, a=x, c=y))
                assert cert.m == oracle_least_multiple(target, (x, y)).m

    def test_role_symmetry_random(self):
        rng = random.Random(314)
        checked = 0
        while checked < 1000:
            vals = sorted(rng.sample(range(2, 400), 3))
            a1, a2, a3 = vals
            if math.gcd(a1, a2) != 1 or math.gcd(a1, a3) != 1 or math.gcd(a2, a3) != 1:
                continue
            c1, _ = find_least_multiple(WalkInput(b=a2, a=a1, c=a3))
            c2, _ = find_least_multiple(WalkInput(b=a2, a=a3, c=a1))
            assert c1.m == c2.m
            assert (c1.u, c1.w) == (c2.w, c2.u)
            checked += 1


class TestTraceInvariants:
    def test_strict_decrease_and_coprime_consecutive(self):
        for a1, a2, a3 in coprime_triples(25):
            _, tr = find_least_multiple(WalkInput(b=a2, a=a1, c=a3))
            ps = [s.p for s in tr.steps]
            for prev, cur in zip(ps, ps[1:]):
                assert cur < prev
                assert math.gcd(prev, cur) == 1

    def test_congruence_quotient_integral(self):
        a, b, c = GOLDEN.a, GOLDEN.b, GOLDEN.c
        _, tr = find_least_multiple(GOLDEN)
        for s in tr.steps:
            assert (s.p * a - s.v * b) % c == 0
            assert s.v == s.p * tr.inv_p0 % c

    def test_v_recurrence_cross_check(self):
        # v_1 = k_1 mod c and v_i = (k_i v_{i-1} - v_{i-2}) mod c for i >= 2
        for inp in (GOLDEN, WalkInput(b=5, a=3, c=7), WalkInput(b=101, a=67, c=89)):
            _, tr = find_least_multiple(inp)
            c = inp.c
            vs = [1] + [s.v for s in tr.steps]
            ks = [s.k for s in tr.steps]
            if ks:
                assert vs[1] == ks[0] % c
            for i in range(2, len(vs)):
                assert vs[i] == (ks[i - 1] * vs[i - 1] - vs[i - 2]) % c

    def test_step_budget_property(self):
        # step count stays far below the default budget on random inputs
        rng = random.Random(5)
        for _ in range(50):
            vals = sorted(rng.sample(range(2, 2000), 3))
            a1, a2, a3 = vals
            if math.gcd(a1, a2) != 1 or math.gcd(a1, a3) != 1 or math.gcd(a2, a3) != 1:
                continue
            _, tr = find_least_multiple(WalkInput(b=a2, a=a1, c=a3))
            assert tr.terminated


class TestCertificate:
    def test_identity_enforced(self):
        with pytest.raises(InvariantViolation):
            MultipleCertificate(m=2, u=1, w=1, target=5, pair_a=3, pair_c=8)

    def test_positivity_enforced(self):
        with pytest.raises(InvariantViolation):
            MultipleCertificate(m=1, u=0, w=1, target=7, pair_a=3, pair_c=7)

    def test_value(self):
        cert, _ = find_least_multiple(GOLDEN)
        assert cert.value == 64 * 8231


class TestPairRepresentable:
    def test_examples(self):
        assert pair_representable(12, 5, 7)
        assert not pair_representable(5, 3, 7)
        assert pair_representable(41, 5, 7)  # 41 = 4*5 + 3*7

    def test_exhaustive(self):
        def brute(n, x, y):
            return any((n - u * x) % y == 0 and (n - u * x) // y >= 1
                       for u in range(1, n // x + 1))
        for x, y in ((3, 7), (5, 7), (2, 9), (11, 13)):
            for n in range(1, x * y + x + y + 5):
                assert pair_representable(n, x, y) == brute(n, x, y)

    def test_non_coprime_rejected(self):
        with pytest.raises(NotPairwiseCoprimeError):
            pair_representable(10, 4, 6)


class TestTraceSerialization:
    def test_rows_golden(self):
        _, tr = find_least_multiple(GOLDEN)
        rows = trace_rows(tr)
        assert rows[0] == (0, None, 7001, 1, 5524)
        assert [r[4] for r in rows[1:6]] == [3525, 1526, 1053, 580, 107]
        assert rows[-1][4] == -45

    def test_table_text(self):
        _, tr = find_least_multiple(GOLDEN)
        text = trace_table(tr)
        lines = text.splitlines()
        assert lines[0].split() == ["step", "k", "v", "p", "(p*a-v*b)/c"]
        assert len(lines) == 8  # header + row 0 + six steps

    def test_json_round_trip(self):
        _, tr = find_least_multiple(GOLDEN)
        doc = json.loads(json.dumps(trace_to_json(tr)))
        assert doc["p0"] == "7001"
        assert int(doc["rows"][-1]["v"]) == 64
        assert doc["terminated"] is True
