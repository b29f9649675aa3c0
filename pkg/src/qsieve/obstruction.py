"""Point- and line-transitivity obstructions for orders with s+1 (or t+1) prime.

For a thick order (s, t) with s > t and s+1 prime, an automorphism of order
s+1 can exist only if

    s * ceil(ceil(t^2 / (s+1)) * (s+1) / t) <= t * (s + t).

When this fails, no automorphism of order s+1 exists, and since s+1 divides
the number of points, the group cannot act transitively on points.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from enum import Enum

from .exactmath import ceil_div, is_prime
from .params import GqOrder


class Verdict(str, Enum):
    NO_CONSTRAINT = "NoConstraint"
    NOT_POINT_TRANSITIVE = "NoAutOfOrderSPlus1_NotPointTransitive"
    NOT_LINE_TRANSITIVE = "NoAutOfOrderTPlus1_NotLineTransitive"

    def __str__(self) -> str:
        return self.value


class HypothesisError(ValueError):
    """An order fails a hypothesis (thickness, s > t, s+1 prime) of the inequality."""


@dataclass(frozen=True)
class ObstructionReport:
    order: GqOrder
    lhs: int | None
    rhs: int | None
    inequality_holds: bool | None
    beta0_min: int | None
    corollary_n: int | None
    family: tuple[int, int] | None
    verdict: Verdict

    def as_dict(self) -> dict:
        d = asdict(self)
        d["order"] = [self.order.s, self.order.t]
        d["family"] = list(self.family) if self.family else None
        d["verdict"] = self.verdict.value
        return d


def _require_hypotheses(o: GqOrder) -> None:
    if not o.thick:
        raise HypothesisError(f"order {o} is not thick")
    if o.s <= o.t:
        raise HypothesisError(f"order {o} does not have s > t")
    if not is_prime(o.s + 1):
        raise HypothesisError(f"s+1 = {o.s + 1} is not prime")


def hypotheses_hold(o: GqOrder) -> bool:
    return o.thick and o.s > o.t and is_prime(o.s + 1)


def main_inequality(o: GqOrder) -> tuple[int, int, bool]:
    """(lhs, rhs, lhs <= rhs) for the order-(s+1) automorphism inequality."""
    _require_hypotheses(o)
    s, t = o.s, o.t
    k = ceil_div(t * t, s + 1)
    lhs = s * ceil_div(k * (s + 1), t)
    rhs = t * (s + t)
    return lhs, rhs, lhs <= rhs


def beta0_lower_bound(o: GqOrder) -> int:
    """Fewest lines an automorphism of order s+1 must fix."""
    _require_hypotheses(o)
    s, t = o.s, o.t
    return ceil_div(t * t, s + 1) * (s + 1) - (t * t - 1)


def interval_criterion_n(o: GqOrder) -> int | None:
    """The n with t^2/(n+1) + t <= s+1 < t^2/n, if any."""
    if not is_prime(o.s + 1):
        raise HypothesisError(f"s+1 = {o.s + 1} is not prime")
    if not o.thick:
        raise HypothesisError(f"order {o} is not thick")
    s1, t = o.s + 1, o.t
    tt = t * t
    for n in range(1, tt + 1):
        if n * s1 >= tt:
            # the right-hand condition only gets harder as n grows
            break
        if tt + (n + 1) * t <= (n + 1) * s1:
            return n
    return None


def family_tag(o: GqOrder) -> tuple[int, int] | None:
    """(q, n) when (s, t) = (q^2 - nq, q) with 2n < q and s+1 prime."""
    q = o.t
    gap = q * q - o.s
    if gap <= 0 or gap % q:
        return None
    n = gap // q
    if 2 * n < q and is_prime(o.s + 1):
        return q, n
    return None


def check_point_transitivity(o: GqOrder) -> ObstructionReport:
    lhs = rhs = holds = beta0 = corollary_n = None
    verdict = Verdict.NO_CONSTRAINT
    if hypotheses_hold(o):
        lhs, rhs, holds = main_inequality(o)
        beta0 = beta0_lower_bound(o)
        corollary_n = interval_criterion_n(o)
        if not holds:
            verdict = Verdict.NOT_POINT_TRANSITIVE
    return ObstructionReport(o, lhs, rhs, holds, beta0, corollary_n, family_tag(o), verdict)


def check_line_transitivity(o: GqOrder) -> ObstructionReport:
    rep = check_point_transitivity(o.dual())
    verdict = rep.verdict
    if verdict is Verdict.NOT_POINT_TRANSITIVE:
        verdict = Verdict.NOT_LINE_TRANSITIVE
    return ObstructionReport(
        o, rep.lhs, rep.rhs, rep.inequality_holds, rep.beta0_min, rep.corollary_n, rep.family, verdict
    )
