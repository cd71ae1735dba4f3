"""Least-multiple walk.

Given pairwise-coprime (a, b, c), find the least multiplier m such that
m*b = u*a + w*c with u, w >= 1.  The iteration is Euclid-like: it develops
sequences k_i, p_i, v_i starting from the unique p0 with p0*a = b (mod c)
and stops at the first index where p_i*a <= v_i*b.  Every answer carries
a certificate whose identity is checked by exact arithmetic.
"""

import math
from dataclasses import dataclass, replace

from .errors import InvalidInputError, InvariantViolation, NotPairwiseCoprimeError, StepBudgetExceeded
from .modarith import canonical_residue, mod_inverse


@dataclass(frozen=True)
class WalkInput:
    """Target b and the pair (a, c) it must be combined from; all pairwise coprime."""

    b: int
    a: int
    c: int

    def __post_init__(self):
        for name, val in (("b", self.b), ("a", self.a), ("c", self.c)):
            if val < 2:
                raise InvalidInputError(f"{name} must be >= 2, got {val}")
        for x, y in ((self.a, self.b), (self.b, self.c), (self.a, self.c)):
            g = math.gcd(x, y)
            if g != 1:
                raise NotPairwiseCoprimeError(x, y, g)


@dataclass(frozen=True)
class WalkStep:
    k: int
    p: int
    v: int


@dataclass(frozen=True)
class WalkTrace:
    """Full execution record: initialization values plus every (k_i, p_i, v_i)."""

    input: WalkInput
    t0: int
    p0: int
    inv_p0: int
    steps: tuple[WalkStep, ...] = ()
    terminated: bool = False

    @property
    def current_p(self) -> int:
        return self.steps[-1].p if self.steps else self.p0

    @property
    def current_v(self) -> int:
        return self.steps[-1].v if self.steps else 1

    def quotient(self, p: int, v: int) -> int:
        """(p*a - v*b)/c for a trace row; exact by the congruence invariant."""
        num = p * self.input.a - v * self.input.b
        q, r = divmod(num, self.input.c)
        if r != 0:
            raise InvariantViolation(f"(p*a - v*b) not divisible by c at p={p}, v={v}")
        return q


@dataclass(frozen=True)
class MultipleCertificate:
    """Witness that m*target = u*pair_a + w*pair_c with u, w >= 1 and m least.

    The identity is re-checked with exact arithmetic at construction;
    minimality is established elsewhere (oracle cross-validation).
    """

    m: int
    u: int
    w: int
    target: int
    pair_a: int
    pair_c: int

    def __post_init__(self):
        if self.m < 1 or self.u < 1 or self.w < 1:
            raise InvariantViolation(
                f"certificate coefficients must be >= 1: m={self.m}, u={self.u}, w={self.w}")
        if self.m * self.target != self.u * self.pair_a + self.w * self.pair_c:
            raise InvariantViolation(
                f"certificate identity fails: {self.m}*{self.target} != "
                f"{self.u}*{self.pair_a} + {self.w}*{self.pair_c}")

    @property
    def value(self) -> int:
        """The least multiple itself, m*target."""
        return self.m * self.target


def init_walk(inp: WalkInput) -> WalkTrace:
    """Initialization: t0 = (-b * c^-1) mod a, p0 = (b + c*t0)/a, inv_p0 = p0^-1 mod c."""
    a, b, c = inp.a, inp.b, inp.c
    t0 = canonical_residue(-b * mod_inverse(c, a), a)
    p0, rem = divmod(b + c * t0, a)
    if rem != 0:
        raise InvariantViolation(f"(b + c*t0) not divisible by a for {inp}")
    inv_p0 = mod_inverse(p0, c)
    return WalkTrace(input=inp, t0=t0, p0=p0, inv_p0=inv_p0)


def walk_step(trace: WalkTrace) -> WalkTrace:
    """Append one (k, p, v) step to the trace and return the new trace."""
    if trace.terminated:
        raise InvalidInputError("walk already terminated")
    c = trace.input.c
    if not trace.steps:
        k = 1 + c // trace.p0
        p = (k * trace.p0) % c
    else:
        prev2 = trace.steps[-2].p if len(trace.steps) >= 2 else trace.p0
        prev1 = trace.steps[-1].p
        k = 1 + prev2 // prev1
        p = (k * prev1) % prev2
    if p == 0:
        raise InvariantViolation("p reached 0; coprimality precondition broken")
    v = (p * trace.inv_p0) % c
    return replace(trace, steps=trace.steps + (WalkStep(k, p, v),))


def default_step_budget(c: int) -> int:
    # The chain occasionally enters slow arithmetic-descent phases
    # (p_i = p_{i-1} - r with small r), so a plain Euclid-length bound is
    # not enough; 100x bit length has ample slack over observed maxima.
    return 100 * c.bit_length() + 100


class _ChainDegenerate(Exception):
    """p reached 1 with the loop condition still true: every later step repeats
    (p=1, same v), so this role assignment can never terminate.  Happens exactly
    when the answer m is at least the modulus c; the swapped roles succeed."""


def _run_walk(inp: WalkInput, max_steps: int) -> WalkTrace:
    trace = init_walk(inp)
    a, b = inp.a, inp.b
    # equality p*a == v*b would give w = 0, which is not a positive
    # representation, so the walk continues through it
    while trace.current_p * a >= trace.current_v * b:
        if trace.current_p == 1:
            raise _ChainDegenerate
        if len(trace.steps) >= max_steps:
            raise StepBudgetExceeded(
                f"walk exceeded {max_steps} steps for (b={b}, a={a}, c={inp.c})")
        trace = walk_step(trace)
    return replace(trace, terminated=True)


def find_least_multiple(inp: WalkInput, max_steps: int | None = None
                        ) -> tuple[MultipleCertificate, WalkTrace]:
    """Run the walk to termination; return the certificate and the full trace.

    The chain enumerates candidate multipliers v below the modulus c, so it
    can only terminate when the answer m is below c.  If the caller's role
    assignment makes that impossible the roles are swapped internally; the
    certificate is still expressed in the caller's (pair_a, pair_c) order.
    """
    if max_steps is None:
        max_steps = default_step_budget(inp.c)
    if max_steps < 1:
        raise InvalidInputError("max_steps must be >= 1")
    a, b, c = inp.a, inp.b, inp.c
    swapped = False
    try:
        trace = _run_walk(inp, max_steps)
    except _ChainDegenerate:
        swapped = True
        trace = _run_walk(WalkInput(b=b, a=c, c=a), max(max_steps, default_step_budget(a)))
    m, p = trace.current_v, trace.current_p
    if swapped:
        # p is the coefficient of the swapped "a" role, i.e. of c
        w = p
        u, rem = divmod(m * b - p * c, a)
    else:
        u = p
        w, rem = divmod(m * b - p * a, c)
    if rem != 0:
        raise InvariantViolation(f"final quotient not integral for (b={b}, a={a}, c={c})")
    cert = MultipleCertificate(m=m, u=u, w=w, target=b, pair_a=a, pair_c=c)
    return cert, trace


def pair_representable(n: int, x: int, y: int) -> bool:
    """True iff n = u*x + w*y has a solution with u, w >= 1 (x, y coprime)."""
    if x < 2 or y < 2:
        raise InvalidInputError("generators must be >= 2")
    g = math.gcd(x, y)
    if g != 1:
        raise NotPairwiseCoprimeError(x, y, g)
    if n < x + y:
        return False
    u0 = canonical_residue(n * mod_inverse(x, y), y)
    if u0 == 0:
        u0 = y
    return n - u0 * x >= y


def trace_rows(trace: WalkTrace) -> list[tuple[int, int | None, int, int, int]]:
    """Rows (i, k_i, p_i, v_i, (p_i*a - v_i*b)/c), starting at the i=0 row (k=None)."""
    rows = [(0, None, trace.p0, 1, trace.quotient(trace.p0, 1))]
    for i, s in enumerate(trace.steps, start=1):
        rows.append((i, s.k, s.p, s.v, trace.quotient(s.p, s.v)))
    return rows


def trace_table(trace: WalkTrace) -> str:
    """Aligned-text table of the trace, columns: step, k, v, p, (p*a - v*b)/c."""
    rows = trace_rows(trace)
    header = ("step", "k", "v", "p", "(p*a-v*b)/c")
    cells = [header] + [
        (str(i), "-" if k is None else str(k), str(v), str(p), str(q))
        for i, k, p, v, q in rows
    ]
    widths = [max(len(r[j]) for r in cells) for j in range(5)]
    lines = ["  ".join(r[j].rjust(widths[j]) for j in range(5)) for r in cells]
    return "\n".join(lines)


def trace_to_json(trace: WalkTrace) -> dict:
    """JSON-friendly trace; all integers as decimal strings."""
    return {
        "input": {"b": str(trace.input.b), "a": str(trace.input.a), "c": str(trace.input.c)},
        "t0": str(trace.t0),
        "p0": str(trace.p0),
        "inv_p0": str(trace.inv_p0),
        "terminated": trace.terminated,
        "rows": [
            {"step": i, "k": None if k is None else str(k),
             "p": str(p), "v": str(v), "quotient": str(q)}
            for i, k, p, v, q in trace_rows(trace)
        ],
    }
