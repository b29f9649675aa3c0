"""Arithmetic laws every generalized quadrangle order (s, t) must obey."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import NamedTuple

from .exactmath import checked, divides


class _Order(NamedTuple):
    s: int
    t: int


class GqOrder(_Order):
    """Order (s, t): s+1 points per line, t+1 lines per point."""

    __slots__ = ()

    def __new__(cls, s: int, t: int):
        for name, v in (("s", s), ("t", t)):
            if type(v) is not int:
                if not isinstance(v, int) or isinstance(v, bool):
                    raise TypeError(f"{name} must be an int")
            if v < 1:
                raise ValueError(f"{name} must be >= 1, got {v}")
        return super().__new__(cls, s, t)

    @property
    def thick(self) -> bool:
        return self.s > 1 and self.t > 1

    def dual(self) -> GqOrder:
        return GqOrder(self.t, self.s)

    def __repr__(self) -> str:
        return f"GqOrder(s={self.s}, t={self.t})"

    def __str__(self) -> str:
        return f"({self.s},{self.t})"


@dataclass(frozen=True)
class BasicLawReport:
    point_count: int
    line_count: int
    divisibility_ok: bool
    higman_ok: bool
    interval_ok: bool

    @property
    def feasible(self) -> bool:
        return self.divisibility_ok and self.higman_ok and self.interval_ok

    def as_dict(self) -> dict:
        d = asdict(self)
        d["feasible"] = self.feasible
        return d


def point_count(o: GqOrder) -> int:
    return checked((o.s + 1) * (o.s * o.t + 1))


def line_count(o: GqOrder) -> int:
    return checked((o.t + 1) * (o.s * o.t + 1))


def divisibility_ok(o: GqOrder) -> bool:
    s, t = o.s, o.t
    return divides(s + t, checked(s * t * (s + 1) * (t + 1)))


def higman_ok(o: GqOrder) -> bool:
    if not o.thick:
        return True
    return o.t <= o.s * o.s and o.s <= o.t * o.t


def interval_ok(o: GqOrder) -> bool:
    # s == t**2 is allowed; the restriction only covers 1 < s < t**2.
    if not o.thick:
        return True
    s, t = o.s, o.t
    if s < t * t and s > t * t - t:
        return False
    if t < s * s and t > s * s - s:
        return False
    return True


def basic_laws(o: GqOrder) -> BasicLawReport:
    return BasicLawReport(
        point_count=point_count(o),
        line_count=line_count(o),
        divisibility_ok=divisibility_ok(o),
        higman_ok=higman_ok(o),
        interval_ok=interval_ok(o),
    )


def payne_bound_ok(m: int, n: int, o: GqOrder, dual: bool = False) -> bool:
    """Payne's bound (m-1)(n-1) <= s^2 for m noncollinear points inside the
    perp of n noncollinear points; the dual form uses t^2 and lines.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be >= 1")
    side = o.t if dual else o.s
    if side <= 1:
        raise ValueError(f"{'t' if dual else 's'} must exceed 1 for the Payne bound")
    return (m - 1) * (n - 1) <= side * side
