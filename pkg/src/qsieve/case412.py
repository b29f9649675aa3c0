"""Numeric deduction chain ruling out point- and line-transitive groups for a
hypothetical generalized quadrangle of order (4, 12).

Each step recomputes its evidence from the arithmetic modules and derives its
`verified` flag from that evidence. Group-theoretic inputs that cannot be
computed here are emitted as `axiom` steps carrying a citation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .autlaws import Tag, prime_order_bound, type_admissible
from .exactmath import crt_pair, prime_divisors, prime_power_part
from .obstruction import Verdict, check_line_transitivity, check_point_transitivity
from .params import GqOrder, line_count, point_count

ORDER = GqOrder(4, 12)


@dataclass
class DeductionStep:
    name: str
    claim: str
    status: str  # "verified", "failed" or "axiom"
    evidence: dict = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return self.status == "verified"

    def as_dict(self) -> dict:
        return {"name": self.name, "claim": self.claim, "status": self.status, "evidence": self.evidence}


def _status(ok: bool) -> str:
    return "verified" if ok else "failed"


def allowed_primes(o: GqOrder, readmit: frozenset[int] = frozenset()) -> tuple[frozenset[int], dict]:
    """Primes that survive every arithmetic elimination for order `o`.

    `readmit` forces primes back in (fault injection for tests).
    """
    bound = prime_order_bound(o)
    removed: dict[int, str] = {}
    point_rep = check_point_transitivity(o)
    line_rep = check_line_transitivity(o)
    if point_rep.verdict is Verdict.NOT_POINT_TRANSITIVE:
        removed[o.s + 1] = f"order-(s+1) inequality fails: {point_rep.lhs} > {point_rep.rhs}"
    if line_rep.verdict is Verdict.NOT_LINE_TRANSITIVE:
        removed[o.t + 1] = f"order-(t+1) inequality fails: {line_rep.lhs} > {line_rep.rhs}"
    if o.thick:
        for p in sorted(bound):
            if p not in removed and not type_admissible(o, p).admissible:
                removed[p] = "no fixed-substructure type admissible"
    kept = frozenset(p for p in bound if p not in removed) | (readmit & bound)
    return kept, {"bound": sorted(bound), "removed": {str(p): why for p, why in sorted(removed.items())}}


def allowed_primes_412(readmit: frozenset[int] = frozenset()) -> frozenset[int]:
    return allowed_primes(ORDER, readmit)[0]


def semiregular_sylow_bounds() -> tuple[int, int]:
    """Largest possible Sylow 7- and 5-subgroups; both act semiregularly on points."""
    n = point_count(ORDER)
    bounds = []
    for p in (7, 5):
        if not type_admissible(ORDER, p).fixes_no_point:
            raise RuntimeError(f"elements of order {p} may fix points")
        bounds.append(prime_power_part(n, p))
    return bounds[0], bounds[1]


def orbit_case_analysis() -> list[tuple[int, int]]:
    """(number of orbits, orbit size) for an intransitive normal subgroup whose
    orbits form a nontrivial block system on the points."""
    n = point_count(ORDER)
    return [(n // m, m) for m in range(n - 1, 1, -1) if n % m == 0]


def order35_contradiction() -> DeductionStep:
    o = ORDER
    n = point_count(o)
    adm7, adm5 = type_admissible(o, 7), type_admissible(o, 5)
    both_semiregular = adm7.fixes_no_point and adm5.fixes_no_point
    # alpha0 = 0, so the fixed-point congruence reduces to alpha1 = st+1 (mod s+t)
    m_benson = o.s + o.t
    r_benson = (o.s * o.t + 1) % m_benson
    m_orbit = 35 if both_semiregular else 1
    residue = crt_pair(0, m_orbit, r_benson, m_benson)
    modulus = m_orbit * m_benson
    ok = both_semiregular and residue > n
    return DeductionStep(
        "order-35-element",
        f"an element of order 35 would need alpha1 = {residue} (mod {modulus}) with alpha1 <= {n}",
        _status(ok),
        {
            "alpha0": 0,
            "alpha1_mod_35": 0,
            "benson_modulus": m_benson,
            "benson_residue": r_benson,
            "st_plus_1": o.s * o.t + 1,
            "crt_residue": residue,
            "crt_modulus": modulus,
            "point_count": n,
        },
    )


def run_412_chain(readmit: frozenset[int] = frozenset()) -> list[DeductionStep]:
    o = ORDER
    steps: list[DeductionStep] = []

    kept, ev = allowed_primes(o, readmit)
    line_rep = check_line_transitivity(o)
    ev.update(allowed=sorted(kept), dual_lhs=line_rep.lhs, dual_rhs=line_rep.rhs,
              admissible_11=sorted(str(t) for t in type_admissible(o, 11).admissible))
    steps.append(DeductionStep("prime-divisors", "every prime dividing |G| is at most 7",
                               _status(max(kept) <= 7), ev))

    for p, forced in ((7, Tag.T0), (5, Tag.T1d)):
        adm = type_admissible(o, p)
        ok = adm.admissible == {forced} and adm.fixes_no_point
        steps.append(DeductionStep(
            f"order-{p}-fixes-no-point",
            f"an element of order {p} has fixed type {forced}, so it fixes no point",
            _status(ok),
            {"admissible": sorted(str(t) for t in adm.admissible),
             "reasons": {str(t): v.reason for t, v in adm.verdicts.items() if not v.admissible}},
        ))

    n = point_count(o)
    b7, b5 = (prime_power_part(n, 7), prime_power_part(n, 5))
    semireg = all(s.verified for s in steps[1:3])
    steps.append(DeductionStep(
        "sylow-bounds",
        "Sylow 7- and 5-subgroups act semiregularly on points, so have order at most 49 and 5",
        _status(semireg and (b7, b5) == (49, 5)),
        {"point_count": n, "factorization": {str(p): prime_power_part(n, p) for p in prime_divisors(n)},
         "sylow7_max": b7, "sylow5_max": b5},
    ))

    steps.append(DeductionStep(
        "not-quasiprimitive",
        "a point-transitive G is not quasiprimitive on points: a transitive minimal normal "
        "subgroup would be a simple group T with pi(T) in {2,3,5,7}, 5 || |T| and 7^2 >= |T|_7",
        "axiom",
        {"citation": "Praeger, quasiprimitive permutation groups (structure theorem)"},
    ))
    steps.append(DeductionStep(
        "no-such-simple-group",
        "no nonabelian simple group has order with prime divisors among 2,3,5,7 and the above Sylow limits",
        "axiom",
        {"citation": "Huppert and Lempken, simple groups of order divisible by at most four primes"},
    ))

    cases = orbit_case_analysis()
    steps.append(DeductionStep(
        "orbit-cases",
        "an intransitive normal subgroup has 5x49, 7x35, 35x7 or 49x5 orbits",
        _status(sorted(cases) == [(5, 49), (7, 35), (35, 7), (49, 5)]),
        {"cases": [list(c) for c in cases]},
    ))
    steps.append(DeductionStep(
        "element-of-order-35",
        "in each orbit case a Sylow normalizer supplies an element of order 35",
        "axiom",
        {"citation": "Frattini argument, G = N_G(P) N for P Sylow in normal N"},
    ))

    steps.append(order35_contradiction())

    lines = line_count(o)
    line_ok = lines % 13 == 0 and 13 not in kept
    steps.append(DeductionStep(
        "line-transitivity",
        f"13 divides |L| = {lines} but not |G|",
        _status(line_ok),
        {"line_count": lines, "13_allowed": 13 in kept},
    ))

    computed = [s for s in steps if s.status != "axiom"]
    all_ok = all(s.verified for s in computed)
    steps.append(DeductionStep(
        "verdict",
        "not transitive on points; not transitive on lines",
        _status(all_ok),
        {"computational_steps": len(computed), "axiom_steps": len(steps) - len(computed)},
    ))
    return steps


def chain_to_json(steps: list[DeductionStep]) -> str:
    return json.dumps([s.as_dict() for s in steps], indent=1, sort_keys=True) + "\n"


def chain_to_text(steps: list[DeductionStep]) -> str:
    out = []
    for i, s in enumerate(steps, 1):
        out.append(f"[{s.status:>8}] {i:2d}. {s.name}: {s.claim}")
        for k, v in s.evidence.items():
            out.append(f"             {k} = {v}")
    axioms = sum(s.status == "axiom" for s in steps)
    if steps and steps[-1].verified:
        out.append(f"VERDICT: not point-transitive; not line-transitive ({axioms} axiom steps)")
    else:
        out.append(f"VERDICT: inconclusive ({axioms} axiom steps)")
    return "\n".join(out) + "\n"


@dataclass
class ChainResult:
    order: GqOrder
    allowed: frozenset[int]
    point_transitive: str  # "excluded" or "inconclusive"
    line_transitive: str
    evidence: dict


def transitivity_chain(o: GqOrder) -> ChainResult:
    """Computable part of the argument for an arbitrary order.

    A group transitive on points has order divisible by |P|; if some prime
    divisor of |P| cannot divide |Aut|, point-transitivity is excluded.
    Everything else needs group theory and is reported as inconclusive.
    """
    kept, ev = allowed_primes(o)
    semireg = []
    if o.thick:
        semireg = [p for p in sorted(kept) if type_admissible(o, p).fixes_no_point]
    ev["fixes_no_point"] = semireg

    def verdict(count: int) -> str:
        return "excluded" if any(p not in kept for p in prime_divisors(count)) else "inconclusive"

    return ChainResult(o, kept, verdict(point_count(o)), verdict(line_count(o)), ev)
