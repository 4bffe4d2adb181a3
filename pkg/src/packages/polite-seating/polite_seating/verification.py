"""
Cross-checks between the closed forms, the bounds and the brute-force oracle

Every check is a module-level function returning a CheckResult so it can be
shipped to joblib workers. Results come back in declaration order, which
keeps the rendered report identical between runs.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from joblib import Parallel, delayed

from .config import SeatingConfig, load_config
from .formulas.bounds import (
    b1_lower,
    b1_upper,
    dyadic_sum_lower,
    far_distance_sum,
    lemma61_product,
    lower_bound_b1,
    lower_bound_U,
    upper_bound_b1,
    upper_bound_O,
)
from .formulas.closed_form import b, d
from .formulas.counting import a, a095236, a095912, a166079, a_extended
from .formulas.factorials import factorial
from .simulation.gaps import FEWEST_NEIGHBORS, LONGEST_RUN, LONGEST_RUN_FEWEST_NEIGHBORS, RULES
from .simulation.oracle import (
    b_census,
    count_sequences,
    count_sequences_naive,
    d_census,
    is_reachable,
    verify_census_invariance,
)
from .simulation.schema import schema_tuple, simulate_insertions

logger = logging.getLogger(__name__)

# (p, k) -> replacement value for b, used to corrupt the closed form on purpose
BOverride = Dict[Tuple[int, int], int]

DYADIC_BOUND_RANGE = range(5, 201)
INTERVAL_PMAX = 10_000
INTERVAL_KMAX = 32
SCHEMA_LEVELS = range(1, 13)
SCHEMA_RUN_LENGTHS = range(1, 4)
SCHEMA_INSERTION_LEVELS = range(1, 4)
TRIVIAL_BOUNDS_NMAX = 20


class VerificationFailure(AssertionError):
    """A check found a mismatch; carries the check name and the first failing tuple."""

    def __init__(self, check: str, first_failure: str):
        super().__init__(f"{check} failed at {first_failure}")
        self.check = check
        self.first_failure = first_failure


@dataclass(frozen=True)
class CheckResult:
    name: str
    count: int
    passed: bool
    first_failure: Optional[str] = None

    def render(self) -> str:
        if self.passed:
            return f"✅ {self.name}: {self.count} cases"
        return f"❌ {self.name}: {self.count} cases, first failure {self.first_failure}"


@dataclass(frozen=True)
class VerificationReport:
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def first_failed(self) -> Optional[CheckResult]:
        return next((check for check in self.checks if not check.passed), None)

    def render(self) -> str:
        lines = [check.render() for check in self.checks]
        total = sum(check.count for check in self.checks)
        failed = sum(1 for check in self.checks if not check.passed)
        if failed:
            lines.append(f"❌ {failed} of {len(self.checks)} checks failed ({total} cases)")
        else:
            lines.append(f"✅ All {len(self.checks)} checks passed ({total} cases)")
        return '\n'.join(lines)

    def raise_for_failure(self):
        failed = self.first_failed
        if failed is not None:
            raise VerificationFailure(failed.name, failed.first_failure)


def _scan(name: str, cases: Iterable[Tuple[str, bool]]) -> CheckResult:
    """Count the cases and remember the first label whose flag is False."""
    count = 0
    first_failure = None
    for label, ok in cases:
        count += 1
        if not ok and first_failure is None:
            first_failure = label
    return CheckResult(name, count, first_failure is None, first_failure)


def check_b_census(pmax: int, b_override: Optional[BOverride] = None) -> CheckResult:
    b_override = b_override or {}

    def cases():
        for p in range(1, pmax + 1):
            census = b_census(p)
            for k in range(1, p):
                expected = b_override.get((p, k), b(p, k))
                yield f"(p={p}, k={k})", expected == census.get(k, 0)

    return _scan('closed-form b vs census', cases())


def check_d_census(pmax: int) -> CheckResult:
    def cases():
        for p in range(1, pmax + 1):
            census = d_census(p)
            for k in range(1, p):
                yield f"(p={p}, k={k})", d(p, k) == census.get(k, 0)

    return _scan('closed-form d vs census', cases())


def check_census_invariance(pmax: int) -> CheckResult:
    return _scan('census invariance', (
        (f"(p={p})", verify_census_invariance(p, cap=pmax)) for p in range(1, pmax + 1)
    ))


def check_plain_oracle(nmax: int, mirror: bool = True) -> CheckResult:
    return _scan('a(n) vs plain oracle', (
        (f"(n={n}, rule=plain)", a(n) == count_sequences(n, RULES['plain'], mirror))
        for n in range(1, nmax + 1)
    ))


VARIANT_FORMULAS = (
    (LONGEST_RUN, a095236),
    (FEWEST_NEIGHBORS, a_extended),
    (LONGEST_RUN_FEWEST_NEIGHBORS, a095912),
)


def check_variant_oracle(nmax: int, mirror: bool = True) -> CheckResult:
    def cases():
        for n in range(1, nmax + 1):
            for rule, formula in VARIANT_FORMULAS:
                yield f"(n={n}, rule={rule.name})", formula(n) == count_sequences(n, rule, mirror)

    return _scan('rule-variant formulas vs oracle', cases())


def check_naive_oracle(nmax: int, cap: int) -> CheckResult:
    def cases():
        for n in range(1, nmax + 1):
            for name, rule in RULES.items():
                memoized = count_sequences(n, rule)
                yield f"(n={n}, rule={name})", memoized == count_sequences_naive(n, rule, cap)

    return _scan('naive vs memoized oracle', cases())


def check_a166079(nmax: int) -> CheckResult:
    return _scan('a166079 vs census', (
        (f"(n={n})", a166079(n) == n - b_census(n).get(1, 0)) for n in range(1, nmax + 1)
    ))


def check_bounds_sandwich(nmax: int) -> CheckResult:
    def cases():
        for n in range(2, nmax + 1):
            count = a(n)
            lower, lower_b1 = lower_bound_U(n), lower_bound_b1(n)
            yield f"(n={n})", lower <= lower_b1 <= count <= upper_bound_b1(n)
            yield f"(n={n}, O)", count <= upper_bound_b1(n) <= upper_bound_O(n)

    return _scan('bounds sandwich U <= a <= O', cases())


def check_trivial_bounds(nmax: int) -> CheckResult:
    return _scan('trivial bounds n <= a <= n!', (
        (f"(n={n})", n <= a(n) <= factorial(n)) for n in range(1, nmax + 1)
    ))


def check_b1_sandwich(pmax: int) -> CheckResult:
    return _scan('b(p, 1) sandwich', (
        (f"(p={p}, k=1)", b1_lower(p) <= b(p, 1) <= b1_upper(p)) for p in range(1, pmax + 1)
    ))


def check_dyadic_factorial_bound() -> CheckResult:
    def cases():
        for p in DYADIC_BOUND_RANGE:
            product = 1
            for j in range(2, p):
                product *= factorial(b(p, j))
            yield f"(p={p})", lemma61_product(p) <= product

    return _scan('dyadic factorial lower bound', cases())


def check_far_distance(nmax: int) -> CheckResult:
    return _scan('far-distance sum lower bound', (
        (f"(n={n})", dyadic_sum_lower(n) <= far_distance_sum(n)) for n in range(2, nmax + 1)
    ))


def interval_points(pmax: int = INTERVAL_PMAX, kmax: int = INTERVAL_KMAX):
    """(p, k, 2^m) with 1 + 2^m * 2k <= p <= 1 + 2^m(2k+2), p <= pmax."""
    for k in range(2, kmax + 1):
        m = 0
        while 1 + ((2 * k) << m) <= pmax:
            lo, hi = 1 + ((2 * k) << m), 1 + ((2 * k + 2) << m)
            for p in range(lo, min(hi, pmax) + 1):
                yield p, k, 1 << m
            m += 1


def check_interval_identity() -> CheckResult:
    return _scan('b(p, k) + b(p, k+1) = 2^m', (
        (f"(p={p}, k={k})", b(p, k) + b(p, k + 1) == power) for p, k, power in interval_points()
    ))


def bit_reversed(j: int, bits: int) -> int:
    return int(format(j, f'0{bits}b')[::-1], 2)


def check_schema_tuples(max_level: int) -> CheckResult:
    def cases():
        for i in SCHEMA_LEVELS:
            if i > max_level:
                break
            entries = schema_tuple(i, max_level).entries
            size = 1 << i
            yield f"(i={i}, permutation)", sorted(entries) == list(range(1, size + 1))
            yield f"(i={i}, bit-reversal)", all(
                entries[j] == bit_reversed(j, i) + 1 for j in range(size)
            )

    return _scan('schema tuples', cases())


def check_schema_reachability(max_level: int) -> CheckResult:
    def cases():
        for l in SCHEMA_RUN_LENGTHS:
            for h in SCHEMA_INSERTION_LEVELS:
                if h > max_level:
                    continue
                kinds = ['empty-seat'] + (['occupied-seat'] if l % 2 == 0 else [])
                for kind in kinds:
                    rows = simulate_insertions(l, h, kind, max_level=max_level)
                    for step, row in enumerate(rows, start=1):
                        yield f"(l={l}, h={h}, kind={kind}, step={step})", is_reachable(row)

    return _scan('schema insertions reachable', cases())


def plan_checks(
    nmax_formula: int,
    nmax_oracle: int,
    config: SeatingConfig,
    b_override: Optional[BOverride] = None,
) -> List[Tuple[Callable[..., CheckResult], tuple]]:
    """
    Check functions with their arguments, in report order.

    Args:
        nmax_formula: Largest n / p for formula-only checks
        nmax_oracle: Largest n for the rule-variant oracle
        config: Caps and defaults
        b_override: Optional corrupted b values for the census check

    Returns:
        List of (function, args)
    """
    if nmax_formula < 1:
        raise ValueError(f"nmax_formula must be >= 1, got {nmax_formula}")
    if nmax_oracle < 1:
        raise ValueError(f"nmax_oracle must be >= 1, got {nmax_oracle}")
    caps = config.verify
    if nmax_oracle > caps.nmax_plain_oracle:
        raise ValueError(
            f"nmax_oracle={nmax_oracle} exceeds verify.nmax_plain_oracle={caps.nmax_plain_oracle}"
        )

    oracle = config.oracle
    census_pmax = min(nmax_formula, caps.census_pmax)
    return [
        (check_b_census, (census_pmax, b_override)),
        (check_d_census, (census_pmax,)),
        (check_census_invariance, (min(nmax_oracle, oracle.census_invariance_cap),)),
        (check_plain_oracle, (min(nmax_formula, caps.nmax_plain_oracle), oracle.mirror_canonicalization)),
        (check_variant_oracle, (min(nmax_formula, nmax_oracle), oracle.mirror_canonicalization)),
        (check_naive_oracle, (min(nmax_oracle, oracle.naive_cap), oracle.naive_cap)),
        (check_a166079, (census_pmax,)),
        (check_bounds_sandwich, (nmax_formula,)),
        (check_trivial_bounds, (min(nmax_formula, TRIVIAL_BOUNDS_NMAX),)),
        (check_b1_sandwich, (caps.b1_pmax,)),
        (check_dyadic_factorial_bound, ()),
        (check_far_distance, (nmax_formula,)),
        (check_interval_identity, ()),
        (check_schema_tuples, (config.schema.max_level,)),
        (check_schema_reachability, (config.schema.max_level,)),
    ]


def run_verification(
    nmax_formula: Optional[int] = None,
    nmax_oracle: Optional[int] = None,
    config: Optional[SeatingConfig] = None,
    b_override: Optional[BOverride] = None,
) -> VerificationReport:
    """
    Run every cross-check and collect the results.

    Args:
        nmax_formula: Defaults to verify.nmax_formula
        nmax_oracle: Defaults to verify.nmax_oracle
        config: Defaults to load_config()
        b_override: Optional corrupted b values (fault injection)

    Returns:
        VerificationReport
    """
    config = config or load_config()
    if nmax_formula is None:
        nmax_formula = config.verify.nmax_formula
    if nmax_oracle is None:
        nmax_oracle = config.verify.nmax_oracle
    plan = plan_checks(nmax_formula, nmax_oracle, config, b_override)

    results = Parallel(n_jobs=config.verify.workers)(
        delayed(check)(*args) for check, args in plan
    )
    report = VerificationReport(checks=list(results))

    for check in report.checks:
        logger.info("Verification check finished", extra={
            "custom_dimensions": {
                "check": check.name,
                "count": check.count,
                "passed": check.passed,
                "first_failure": check.first_failure,
            }
        })
    return report
