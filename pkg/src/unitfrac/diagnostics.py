"""Growth inequalities and producibility screening.

A run with b_n = ceil(t a_n) at every step obeys two-sided ratio bounds
linking consecutive greedy values; a plain greedy run obeys the squared
growth bound.  For arbitrary (a, b) data the classifier counts, per
weakness level t, how many indices satisfy b_n <= ceil(t a_n).  Witnesses
that persist through the second half of the data are evidence the pair
could come from a fixed-t process, but only a declared ratio limit above
one upgrades that to producible: when a_{n+1}/a_n tends to 1 the bracket
forces b_n/a_n to blow up, so any finite window of witnesses is transient.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .greedy import WeakGreedyRun
from .rational import ExactRational, format_rational, greedy_denominator

DEFAULT_T_GRID = (Fraction(1), Fraction(3, 2), Fraction(2), Fraction(3),
                  Fraction(5), Fraction(10))

_SHORT_RUN = 8
_RATIO_SAMPLE_COUNT = 8


@dataclass(frozen=True)
class RatioCheck:
    """Two-sided growth test between steps index and index+1.

    upper_holds is None at t = 1, where no upper bound applies.
    """

    index: int
    lower_holds: bool
    upper_holds: Optional[bool]


@dataclass(frozen=True)
class GreedyGrowthCheck:
    index: int
    holds: bool


def scaled_run_ratio_checks(run: WeakGreedyRun) -> list[RatioCheck]:
    """Evaluate the ceil-t-a growth bounds along a run."""
    t = run.policy.t
    checks = []
    for i in range(len(run.a) - 1):
        a_cur, a_next = run.a[i], run.a[i + 1]
        lower = Fraction(1, a_next) < \
            ((t - 1) * a_cur + 2) / ((t * a_cur + 1) * (a_cur - 1))
        if t == 1:
            upper: Optional[bool] = None
        else:
            upper = Fraction(a_next, a_cur) < t / (t - 1) + Fraction(1, a_cur)
        checks.append(RatioCheck(i + 1, lower, upper))
    return checks


def greedy_ratio_checks(run: WeakGreedyRun) -> list[GreedyGrowthCheck]:
    """b_{n+1} >= b_n(b_n - 1) + 1, the greedy squared-growth bound."""
    return [GreedyGrowthCheck(i + 1,
                              run.b[i + 1] >= run.b[i] * (run.b[i] - 1) + 1)
            for i in range(len(run.b) - 1)]


@dataclass(frozen=True)
class ClassificationReport:
    n_terms: int
    witness_counts: tuple[tuple[ExactRational, int], ...]
    second_half_witness_counts: tuple[tuple[ExactRational, int], ...]
    ratio_samples: tuple[ExactRational, ...]
    closed_form_limit: Optional[ExactRational]
    limit_exceeds_one: Optional[bool]
    verdict: str

    def to_json_dict(self) -> dict:
        return {
            "n-terms": self.n_terms,
            "witness-counts": [{"t": format_rational(t), "count": c}
                               for t, c in self.witness_counts],
            "second-half-witness-counts": [
                {"t": format_rational(t), "count": c}
                for t, c in self.second_half_witness_counts],
            "ratio-samples": [format_rational(r) for r in self.ratio_samples],
            "closed-form-limit": None if self.closed_form_limit is None
            else format_rational(self.closed_form_limit),
            "limit-exceeds-one": self.limit_exceeds_one,
            "verdict": self.verdict,
        }


def classify(a, b, t_grid=DEFAULT_T_GRID,
             declared_limit: Optional[ExactRational] = None,
             declared_limit_exceeds_one: Optional[bool] = None
             ) -> ClassificationReport:
    """Screen (a, b) data for fixed-weakness producibility evidence."""
    a = tuple(a)
    b = tuple(b)
    if not a or len(a) != len(b):
        raise ValueError("need equal-length nonempty sequences")
    for x in a + b:
        if isinstance(x, bool) or not isinstance(x, int) or x < 1:
            raise ValueError("terms must be positive integers")
    n = len(a)
    half_start = n // 2 + 1

    full = []
    second = []
    for t in t_grid:
        t = Fraction(t)
        hits = [b[i] <= math.ceil(t * a[i]) for i in range(n)]
        full.append((t, sum(hits)))
        second.append((t, sum(hits[half_start - 1:])))

    take = min(_RATIO_SAMPLE_COUNT, n - 1)
    samples = tuple(Fraction(a[i + 1], a[i])
                    for i in range(n - 1 - take, n - 1))

    if declared_limit_exceeds_one is not None:
        grows = declared_limit_exceeds_one
    elif declared_limit is not None:
        grows = Fraction(declared_limit) > 1
    else:
        grows = None

    second_len = n - half_start + 1
    witnessed = any(count == second_len for _, count in second)
    if n < _SHORT_RUN:
        verdict = "inconclusive"
    elif not witnessed:
        verdict = "not-producible-evidence"
    elif grows is True:
        verdict = "producible-evidence"
    elif grows is False:
        verdict = "not-producible-evidence"
    else:
        verdict = "inconclusive"

    return ClassificationReport(
        n_terms=n,
        witness_counts=tuple(full),
        second_half_witness_counts=tuple(second),
        ratio_samples=samples,
        closed_form_limit=None if declared_limit is None
        else Fraction(declared_limit),
        limit_exceeds_one=grows,
        verdict=verdict,
    )


def shadow_bound_from_gap(b_prefix, theta: ExactRational,
                          tail_upper: ExactRational) -> tuple[ExactRational, int]:
    """Ceiling on every greedy shadow value when the series misses theta.

    If the full series is at most (prefix sum + tail_upper) and that
    still falls short of theta by a gap c > 0, every residual along the
    expansion stays at least c, so no shadow value can exceed the greedy
    denominator of c.  Returns (c, bound).
    """
    theta = Fraction(theta)
    tail_upper = Fraction(tail_upper)
    if tail_upper < 0:
        raise ValueError("tail bound must be nonnegative")
    partial = sum((Fraction(1, x) for x in b_prefix), Fraction(0))
    gap = theta - partial - tail_upper
    if gap <= 0:
        raise ValueError("series bound reaches theta; no gap to exploit")
    return gap, greedy_denominator(gap)
