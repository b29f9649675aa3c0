"""Laws obeyed by an automorphism of prime order p of a GQ of order (s, t).

Two kinds of object live here: orbit-census predicates that take measured
counts (alpha_i, beta_i), and `type_admissible`, which decides from (s, t, p)
alone which of the eight fixed-substructure types an element of order p
could have. Everything is a necessary condition; nothing here proves
existence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import NamedTuple

from .exactmath import is_prime, primes_upto, prime_divisors
from .params import GqOrder, line_count, point_count


class Tag(str, Enum):
    """The eight shapes a fixed substructure can take."""

    T0 = "T0"  # nothing fixed
    T1 = "T1"  # fixed points only, pairwise noncollinear
    T1d = "T1d"  # fixed lines only, pairwise nonconcurrent
    T2 = "T2"  # fixed elements all on/through one fixed point
    T2d = "T2d"
    T3 = "T3"  # grid with s1 < s2
    T3d = "T3d"  # dual grid with t1 < t2
    T4 = "T4"  # subquadrangle of order (s', t')

    def __str__(self) -> str:
        return self.value


TAGS = tuple(Tag)


@dataclass(frozen=True)
class AutStats:
    alpha0: int
    alpha1: int
    alpha2: int
    beta0: int
    beta1: int
    beta2: int

    def check(self, o: GqOrder) -> None:
        """Raise ValueError unless the counts partition the points and lines of `o`."""
        if self.alpha0 + self.alpha1 + self.alpha2 != point_count(o):
            raise ValueError(f"point counts {self} do not sum to {point_count(o)}")
        if self.beta0 + self.beta1 + self.beta2 != line_count(o):
            raise ValueError(f"line counts {self} do not sum to {line_count(o)}")

    def as_tuple(self) -> tuple[int, ...]:
        return (self.alpha0, self.alpha1, self.alpha2, self.beta0, self.beta1, self.beta2)


@dataclass(frozen=True)
class FixedType:
    tag: Tag
    shape: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if self.tag in (Tag.T3, Tag.T3d, Tag.T4):
            if self.shape is None:
                raise ValueError(f"{self.tag} needs shape parameters")
            a, b = self.shape
            if self.tag is not Tag.T4 and not (1 <= a < b):
                raise ValueError(f"{self.tag} shape must satisfy 1 <= first < second")
            if self.tag is Tag.T4 and (a < 1 or b < 1):
                raise ValueError("T4 shape parameters must be >= 1")
        elif self.shape is not None:
            raise ValueError(f"{self.tag} carries no shape")

    def __str__(self) -> str:
        return f"{self.tag}{self.shape}" if self.shape else str(self.tag)


class TagVerdict(NamedTuple):
    tag: Tag
    admissible: bool
    reason: str
    candidates: tuple[tuple[int, int], ...] = ()


@dataclass
class TypeAdmissibility:
    order: GqOrder
    p: int
    verdicts: dict[Tag, TagVerdict] = field(default_factory=dict)

    @property
    def admissible(self) -> frozenset[Tag]:
        return frozenset(t for t, v in self.verdicts.items() if v.admissible)

    @property
    def fixes_no_point(self) -> bool:
        """True when every admissible type has alpha0 = 0 (semiregular on points)."""
        return self.admissible <= {Tag.T0, Tag.T1d}

    @property
    def fixes_no_line(self) -> bool:
        return self.admissible <= {Tag.T0, Tag.T1}


@lru_cache(maxsize=4096)
def _cached_is_prime(p: int) -> bool:
    return is_prime(p)


def _require_prime(p: int) -> None:
    if not _cached_is_prime(p):
        raise ValueError(f"{p} is not prime")


def benson_residue(o: GqOrder, alpha0: int, alpha1: int) -> bool:
    s, t = o.s, o.t
    return ((t + 1) * alpha0 + alpha1 - (s * t + 1)) % (s + t) == 0


def count_relation(o: GqOrder, st: AutStats) -> bool:
    st.check(o)
    return (1 + o.t) * st.alpha0 + st.alpha1 == (1 + o.s) * st.beta0 + st.beta1


def orbit_census_congruences(o: GqOrder, p: int, st: AutStats) -> bool:
    _require_prime(p)
    moved = (st.alpha1, st.alpha2, st.beta1, st.beta2)
    return (
        all(v % p == 0 for v in moved)
        and (st.alpha0 - point_count(o)) % p == 0
        and (st.beta0 - line_count(o)) % p == 0
    )


def type2_fixed_relation(o: GqOrder, p: int, alpha0: int, beta0: int, dual: bool = False) -> bool:
    _require_prime(p)
    if dual:
        return (beta0 - 1 - o.t * alpha0) % p == 0
    return (alpha0 - 1 - o.s * beta0) % p == 0


def type2_admissible(o: GqOrder, p: int, fixed_count: int, dual: bool = False) -> bool:
    """Type 2 (or 2' when `dual`) with a known number of fixed points (lines).

    One fixed point forces p | s; two or more force p | t. Dually with roles
    swapped.
    """
    _require_prime(p)
    if fixed_count < 1:
        raise ValueError("type 2 fixes at least one point and one line")
    near, far = (o.t, o.s) if dual else (o.s, o.t)
    return (near if fixed_count == 1 else far) % p == 0


def type4_stats(o: GqOrder, t_prime: int) -> AutStats:
    """Orbit census of an element fixing a proper subquadrangle of order (s, t')."""
    s, t = o.s, o.t
    if not 1 <= t_prime < t:
        raise ValueError(f"t' must satisfy 1 <= t' < t, got {t_prime}")
    sub = s * t_prime + 1
    return AutStats(
        alpha0=(s + 1) * sub,
        alpha1=0,
        alpha2=s * (s + 1) * (t - t_prime),
        beta0=(t_prime + 1) * sub,
        beta1=(t - t_prime) * (s + 1) * sub,
        beta2=(t + 1) * (s * t + 1) - (t * (s + 1) - s * t_prime + 1) * sub,
    )


def prime_order_bound(o: GqOrder) -> frozenset[int]:
    """Primes that may divide |Aut| for order `o`: p <= max(s+1, t+1) or p | st+1."""
    return frozenset(primes_upto(max(o.s, o.t) + 1)) | frozenset(prime_divisors(o.s * o.t + 1))


def _type4(s: int, t: int, p: int) -> TagVerdict:
    if p >= s:
        # s' = s is forced, so t' < t, t' = t (mod p) and s+t | s t' (st+1)
        congruent = range(t % p or p, t, p)
        if not congruent:
            return TagVerdict(Tag.T4, False, f"no t' < t with t' = t (mod {p}) when s' = s")
        survivors = tuple((s, tp) for tp in congruent if (s * tp * (s * t + 1)) % (s + t) == 0)
        if not survivors:
            return TagVerdict(Tag.T4, False, f"no t' = t (mod {p}) with s+t | s*t'*(st+1)")
        return TagVerdict(Tag.T4, True, "", survivors)
    s_opts = range(s % p or p, s + 1, p)
    t_opts = range(t % p or p, t + 1, p)
    survivors = tuple((a, b) for a in s_opts for b in t_opts if (a, b) != (s, t))
    if not survivors:
        return TagVerdict(Tag.T4, False, f"no proper (s',t') with s' = s, t' = t (mod {p})")
    return TagVerdict(Tag.T4, True, "", survivors)


def type_admissible(o: GqOrder, p: int) -> TypeAdmissibility:
    """Which fixed-substructure types an element of prime order p can have.

    A rejected type's reason names the single condition that failed.
    """
    _require_prime(p)
    if not o.thick:
        raise ValueError(f"order {o} is not thick")
    s, t = o.s, o.t
    v: dict[Tag, TagVerdict] = {}

    ok = ((s + 1) % p == 0 and (t + 1) % p == 0) or (s * t + 1) % p == 0
    v[Tag.T0] = TagVerdict(Tag.T0, ok, "" if ok else f"nothing fixed needs p | s+1 and p | t+1, or p | st+1 (p={p})")

    ok = (t + 1) % p == 0
    v[Tag.T1] = TagVerdict(Tag.T1, ok, "" if ok else f"needs t+1 = 0 (mod {p})")
    ok = (s + 1) % p == 0
    v[Tag.T1d] = TagVerdict(Tag.T1d, ok, "" if ok else f"needs s+1 = 0 (mod {p})")

    # either branch (one fixed point / several) may apply, so the two are OR-ed
    ok = s % p == 0 or t % p == 0
    why = "" if ok else f"needs s+1 = 1 or t+1 = 1 (mod {p})"
    v[Tag.T2] = TagVerdict(Tag.T2, ok, why)
    v[Tag.T2d] = TagVerdict(Tag.T2d, ok, why)

    # Grid shapes s1 < s2 <= s with s1 >= 1 and s1 = s2 = s (mod p) exist iff
    # p <= s - 1, which p < min(s, t) already implies; dually for t1 < t2.
    small = p < min(s, t)
    for tag, other, name in ((Tag.T3, t, "t+1"), (Tag.T3d, s, "s+1")):
        if (other - 1) % p:
            v[tag] = TagVerdict(tag, False, f"needs {name} = 2 (mod {p})")
        elif not small:
            v[tag] = TagVerdict(tag, False, f"needs p < min(s,t) = {min(s, t)}")
        else:
            v[tag] = TagVerdict(tag, True, "")

    v[Tag.T4] = _type4(s, t, p)
    return TypeAdmissibility(o, p, v)
