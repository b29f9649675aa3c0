"""Explicit small generalized quadrangles and their automorphisms.

These models are the empirical oracle for the arithmetic laws in
`qsieve.autlaws`: every automorphism we can enumerate is measured directly
(fixed / moved-to-collinear / moved-to-noncollinear counts, fixed
substructure) and checked against the laws.

Three builders are provided: the s x s grid of order (s, 1), its dual of
order (1, t), and the doily, the GQ of order (2, 2) whose points are the 15
two-element subsets ("duads") of a 6-set and whose lines are the 15 perfect
matchings ("synthemes"), with a duad on a syntheme iff it is one of its
three pairs.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from math import lcm
from typing import Hashable, Iterable, Iterator, Sequence

from .autlaws import (
    AutStats,
    FixedType,
    Tag,
    benson_residue,
    count_relation,
    orbit_census_congruences,
    type2_admissible,
    type2_fixed_relation,
    type4_stats,
    type_admissible,
)
from .exactmath import is_prime
from .params import GqOrder, payne_bound_ok


class ModelError(ValueError):
    pass


class AutomorphismError(ValueError):
    """A map fails to preserve incidence."""


class StructureError(RuntimeError):
    """A fixed substructure matched none of the eight admissible shapes."""


class IncidenceModel:
    """A finite point-line geometry; lines are stored as sets of point indices.

    Instances are treated as immutable after construction.
    """

    def __init__(
        self,
        points: Sequence[Hashable],
        lines: Iterable[Iterable[int]],
        order: GqOrder,
        kind: str = "custom",
        symmetry: Hashable = None,
    ):
        self.points = tuple(points)
        self.lines = tuple(frozenset(l) for l in lines)
        self.order = order
        self.kind = kind
        # parameter for the symmetry description (s for grids, None for the doily)
        self.symmetry = symmetry
        self.point_index = {lab: i for i, lab in enumerate(self.points)}
        self.line_index = {l: i for i, l in enumerate(self.lines)}
        if len(self.line_index) != len(self.lines):
            raise ModelError("repeated line")
        n = len(self.points)
        for l in self.lines:
            if any(not 0 <= p < n for p in l):
                raise ModelError("line references unknown point")
        through: list[list[int]] = [[] for _ in range(n)]
        for li, l in enumerate(self.lines):
            for p in l:
                through[p].append(li)
        self.lines_through = tuple(frozenset(ls) for ls in through)
        self.collinear = tuple(
            frozenset(q for li in self.lines_through[p] for q in self.lines[li]) | {p} for p in range(n)
        )
        self.concurrent = tuple(
            frozenset(m for p in l for m in self.lines_through[p]) | {li} for li, l in enumerate(self.lines)
        )

    @property
    def npoints(self) -> int:
        return len(self.points)

    @property
    def nlines(self) -> int:
        return len(self.lines)

    def incident(self, p: int, l: int) -> bool:
        return p in self.lines[l]

    def to_json(self) -> str:
        data = {
            "kind": self.kind,
            "order": [self.order.s, self.order.t],
            "points": [str(p) for p in self.points],
            "lines": [sorted(l) for l in self.lines],
        }
        return json.dumps(data, indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> IncidenceModel:
        data = json.loads(text)
        return cls(data["points"], data["lines"], GqOrder(*data["order"]), kind=data.get("kind", "custom"))

    def __repr__(self) -> str:
        return f"IncidenceModel({self.kind}, order={self.order}, {self.npoints} points, {self.nlines} lines)"


# -- axiom checking -----------------------------------------------------------


def axiom_violations(model: IncidenceModel, limit: int = 20) -> list[str]:
    """Violations of the GQ axioms for the model's declared order (empty if none)."""
    s, t = model.order.s, model.order.t
    out: list[str] = []
    for li, l in enumerate(model.lines):
        if len(l) != s + 1:
            out.append(f"line {li} has {len(l)} points, expected {s + 1}")
    for p, ls in enumerate(model.lines_through):
        if len(ls) != t + 1:
            out.append(f"point {p} is on {len(ls)} lines, expected {t + 1}")
    for a, b in itertools.combinations(range(model.nlines), 2):
        if len(model.lines[a] & model.lines[b]) > 1:
            out.append(f"lines {a} and {b} share more than one point")
    for p in range(model.npoints):
        for li, l in enumerate(model.lines):
            if p in l:
                continue
            flags = sum(len(model.lines_through[p] & model.lines_through[q]) for q in l)
            if flags != 1:
                out.append(f"point {p}, line {li}: {flags} connecting flags")
            if len(out) >= limit:
                return out
    return out[:limit]


def is_gq(model: IncidenceModel) -> bool:
    return not axiom_violations(model, limit=1)


# -- builders -----------------------------------------------------------------


def build_grid(s: int) -> IncidenceModel:
    """(s+1) x (s+1) grid, order (s, 1). Lines: rows first, then columns."""
    if s < 1:
        raise ValueError("s must be >= 1")
    pts = [(i, j) for i in range(s + 1) for j in range(s + 1)]
    idx = {p: k for k, p in enumerate(pts)}
    rows = [[idx[i, j] for j in range(s + 1)] for i in range(s + 1)]
    cols = [[idx[i, j] for i in range(s + 1)] for j in range(s + 1)]
    return IncidenceModel(pts, rows + cols, GqOrder(s, 1), kind="grid", symmetry=s)


def dual_model(model: IncidenceModel, kind: str | None = None) -> IncidenceModel:
    """Swap points and lines. Point i of the dual is line i of `model`."""
    lines = [model.lines_through[p] for p in range(model.npoints)]
    labels = [("L", i) for i in range(model.nlines)]
    return IncidenceModel(labels, lines, model.order.dual(), kind=kind or f"dual-{model.kind}",
                          symmetry=model.symmetry)


def build_dual_grid(t: int) -> IncidenceModel:
    if t < 1:
        raise ValueError("t must be >= 1")
    return dual_model(build_grid(t), kind="dual-grid")


def build_doily() -> IncidenceModel:
    duads = list(itertools.combinations(range(6), 2))
    idx = {d: k for k, d in enumerate(duads)}
    synthemes = []
    for a, b in duads:
        if a != 0:
            continue
        rest = [x for x in range(6) if x not in (a, b)]
        c = rest[0]
        for d in rest[1:]:
            e, f = (x for x in rest if x not in (c, d))
            synthemes.append([idx[a, b], idx[c, d], idx[e, f]])
    labels = [f"{a + 1}{b + 1}" for a, b in duads]
    return IncidenceModel(labels, synthemes, GqOrder(2, 2), kind="doily")


def mutate_incidence(model: IncidenceModel, point: int, line: int) -> IncidenceModel:
    """Copy of `model` with the incidence of (point, line) flipped."""
    lines = [set(l) for l in model.lines]
    lines[line] ^= {point}
    return IncidenceModel(model.points, lines, model.order, kind=f"mutated-{model.kind}",
                          symmetry=model.symmetry)


# -- automorphisms ------------------------------------------------------------


@dataclass(frozen=True)
class ModelAutomorphism:
    point_map: tuple[int, ...]
    line_map: tuple[int, ...]
    base: Hashable = field(default=None, compare=False)

    @property
    def order(self) -> int:
        return lcm(_perm_order(self.point_map), _perm_order(self.line_map))


def _perm_order(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    out = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        n, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            n += 1
        out = lcm(out, n)
    return out


def preserves_incidence(model: IncidenceModel, aut: ModelAutomorphism) -> bool:
    pm, lm = aut.point_map, aut.line_map
    if sorted(pm) != list(range(model.npoints)) or sorted(lm) != list(range(model.nlines)):
        return False
    return all(frozenset(pm[p] for p in l) == model.lines[lm[li]] for li, l in enumerate(model.lines))


def automorphism_from_points(model: IncidenceModel, point_map: Sequence[int], base=None) -> ModelAutomorphism:
    """Raw entry point: derive the line map from a point permutation and verify it."""
    pm = tuple(point_map)
    if sorted(pm) != list(range(model.npoints)):
        raise AutomorphismError("point map is not a permutation")
    try:
        lm = tuple(model.line_index[frozenset(pm[p] for p in l)] for l in model.lines)
    except KeyError:
        raise AutomorphismError("a line is not mapped onto a line") from None
    aut = ModelAutomorphism(pm, lm, base)
    if not preserves_incidence(model, aut):
        raise AutomorphismError("incidence not preserved")
    return aut


def _swap_roles(aut: ModelAutomorphism) -> ModelAutomorphism:
    return ModelAutomorphism(aut.line_map, aut.point_map, aut.base)


def induced_automorphism(model: IncidenceModel, base) -> ModelAutomorphism:
    """Automorphism induced by a symmetry of the model's description.

    doily: a permutation of the six symbols 0..5, as a tuple.
    grid / dual-grid: (row_perm, col_perm, swap), with swap transposing axes.
    """
    kind = model.kind
    if kind == "doily":
        perm = tuple(base)
        if sorted(perm) != list(range(6)):
            raise ValueError("doily symmetry must permute 0..5")
        pm = []
        for lab in model.points:
            a, b = int(lab[0]) - 1, int(lab[1]) - 1
            x, y = sorted((perm[a], perm[b]))
            pm.append(model.point_index[f"{x + 1}{y + 1}"])
        return automorphism_from_points(model, pm, base=perm)
    if kind == "grid":
        return automorphism_from_points(model, _grid_point_map(model, base), base=base)
    if kind == "dual-grid":
        grid = build_grid(model.symmetry)
        aut = automorphism_from_points(grid, _grid_point_map(grid, base), base=base)
        swapped = _swap_roles(aut)
        if not preserves_incidence(model, swapped):
            raise AutomorphismError("incidence not preserved")
        return swapped
    raise ValueError(f"no symmetry description for model kind {kind!r}")


def _grid_point_map(grid: IncidenceModel, base) -> list[int]:
    rows, cols, swap = base
    n = grid.symmetry + 1
    if sorted(rows) != list(range(n)) or sorted(cols) != list(range(n)):
        raise ValueError("grid symmetry needs two permutations of range(s+1)")
    pm = []
    for i, j in grid.points:
        img = (rows[i], cols[j])
        if swap:
            img = img[::-1]
        pm.append(grid.point_index[img])
    return pm


def symmetries(model: IncidenceModel) -> Iterator:
    """Every base symmetry of the model's description."""
    if model.kind == "doily":
        yield from itertools.permutations(range(6))
    elif model.kind in ("grid", "dual-grid"):
        n = model.symmetry + 1
        for rows in itertools.permutations(range(n)):
            for cols in itertools.permutations(range(n)):
                for swap in (False, True):
                    yield rows, cols, swap
    else:
        raise ValueError(f"no symmetry description for model kind {model.kind!r}")


def sample_symmetries(model: IncidenceModel, k: int, seed: int = 0) -> list:
    """k random grid symmetries (with replacement), reproducible by seed."""
    if model.kind not in ("grid", "dual-grid"):
        raise ValueError("sampling is only defined for grids")
    rng = random.Random(seed)
    n = model.symmetry + 1
    out = []
    for _ in range(k):
        rows, cols = list(range(n)), list(range(n))
        rng.shuffle(rows)
        rng.shuffle(cols)
        out.append((tuple(rows), tuple(cols), rng.random() < 0.5))
    return out


# -- measurement --------------------------------------------------------------


def measure_stats(model: IncidenceModel, aut: ModelAutomorphism) -> AutStats:
    a = [0, 0, 0]
    for p, img in enumerate(aut.point_map):
        a[0 if img == p else 1 if img in model.collinear[p] else 2] += 1
    b = [0, 0, 0]
    for l, img in enumerate(aut.line_map):
        b[0 if img == l else 1 if img in model.concurrent[l] else 2] += 1
    return AutStats(*a, *b)


def _fixed(aut: ModelAutomorphism) -> tuple[set[int], set[int]]:
    fp = {p for p, q in enumerate(aut.point_map) if p == q}
    fl = {l for l, m in enumerate(aut.line_map) if l == m}
    return fp, fl


# The shape matchers work on a "fixed geometry": fixed elements of one kind
# (called points) and the other kind (lines), with `on[l]` the fixed points
# on fixed line l and `through[p]` the fixed lines through fixed point p.
# Dual shapes are obtained by swapping the arguments.


def _match_one(pts, lns, related) -> bool:
    # fixed points only, pairwise unrelated in the whole model
    return bool(pts) and not lns and all(q not in related[p] for p, q in itertools.combinations(pts, 2))


def _match_two(pts, lns, related, on) -> bool:
    if not pts or not lns:
        return False
    for p in pts:
        if all(q in related[p] for q in pts) and all(p in on[l] for l in lns):
            return True
    return False


def _match_grid(pts, lns, on, through) -> tuple[int, int] | None:
    if not pts or not lns:
        return None
    if any(len(through[p]) != 2 for p in pts):
        return None
    l0 = min(lns)
    cls_b = {m for m in lns if m != l0 and on[m] & on[l0]}
    cls_a = lns - cls_b
    for a, b in itertools.combinations(sorted(cls_a), 2):
        if on[a] & on[b]:
            return None
    for a, b in itertools.combinations(sorted(cls_b), 2):
        if on[a] & on[b]:
            return None
    for a in cls_a:
        for b in cls_b:
            if len(on[a] & on[b]) != 1:
                return None
    if len(pts) != len(cls_a) * len(cls_b):
        return None
    s1, s2 = sorted((len(cls_a) - 1, len(cls_b) - 1))
    if s1 < 1 or s1 == s2:
        return None
    return s1, s2


def _match_subgq(pts, lns, on, through) -> tuple[int, int] | None:
    if not pts or not lns:
        return None
    sizes = {len(on[l]) for l in lns}
    degrees = {len(through[p]) for p in pts}
    if len(sizes) != 1 or len(degrees) != 1:
        return None
    sp, tp = sizes.pop() - 1, degrees.pop() - 1
    if sp < 1 or tp < 1:
        return None
    for p in pts:
        for l in lns:
            if p in on[l]:
                continue
            if sum(len(through[p] & through[q]) for q in on[l]) != 1:
                return None
    return sp, tp


def matching_types(model: IncidenceModel, aut: ModelAutomorphism) -> list[FixedType]:
    """Every fixed-substructure shape the automorphism's fixed elements fit."""
    fp, fl = _fixed(aut)
    on = {l: model.lines[l] & fp for l in fl}
    through = {p: model.lines_through[p] & fl for p in fp}
    out = []
    if not fp and not fl:
        out.append(FixedType(Tag.T0))
    if _match_one(fp, fl, model.collinear):
        out.append(FixedType(Tag.T1))
    if _match_one(fl, fp, model.concurrent):
        out.append(FixedType(Tag.T1d))
    shape = _match_subgq(fp, fl, on, through)
    if shape:
        out.append(FixedType(Tag.T4, shape))
    shape = _match_grid(fp, fl, on, through)
    if shape:
        out.append(FixedType(Tag.T3, shape))
    shape = _match_grid(fl, fp, through, on)
    if shape:
        out.append(FixedType(Tag.T3d, shape))
    if _match_two(fp, fl, model.collinear, on):
        out.append(FixedType(Tag.T2))
    if _match_two(fl, fp, model.concurrent, through):
        out.append(FixedType(Tag.T2d))
    return out


def classify_fixed_substructure(model: IncidenceModel, aut: ModelAutomorphism) -> FixedType:
    """The first matching shape, in the order T0, T1, T1d, T4, T3, T3d, T2, T2d."""
    found = matching_types(model, aut)
    if not found:
        fp, fl = _fixed(aut)
        raise StructureError(f"fixed structure ({len(fp)} points, {len(fl)} lines) matches no shape")
    return found[0]


# -- law verification ---------------------------------------------------------


def law_violations(model: IncidenceModel, aut: ModelAutomorphism, check_incidence: bool = True) -> list[str]:
    """Names of the automorphism laws that fail for `aut` on `model`."""
    o = model.order
    bad = []
    if check_incidence and not preserves_incidence(model, aut):
        bad.append("incidence")
    st = measure_stats(model, aut)
    if not benson_residue(o, st.alpha0, st.alpha1):
        bad.append("benson")
    try:
        if not count_relation(o, st):
            bad.append("count-relation")
    except ValueError:
        bad.append("count-sums")
    p = aut.order
    if p == 1 or not is_prime(p):
        return bad
    if not orbit_census_congruences(o, p, st):
        bad.append("orbit-census")
    found = matching_types(model, aut)
    if not found:
        bad.append("fixed-shape")
        return bad
    for ft in found:
        if ft.tag is Tag.T2:
            if not type2_fixed_relation(o, p, st.alpha0, st.beta0):
                bad.append("type2-relation")
            if o.thick and not type2_admissible(o, p, st.alpha0):
                bad.append("type2-branch")
        if ft.tag is Tag.T2d:
            if not type2_fixed_relation(o, p, st.alpha0, st.beta0, dual=True):
                bad.append("type2-relation")
            if o.thick and not type2_admissible(o, p, st.beta0, dual=True):
                bad.append("type2-branch")
        if ft.tag is Tag.T4 and ft.shape[0] == o.s and ft.shape[1] < o.t:
            if type4_stats(o, ft.shape[1]) != st:
                bad.append("type4-stats")
    if o.thick:
        adm = type_admissible(o, p)
        for ft in found:
            if ft.tag not in adm.admissible:
                bad.append(f"type-{ft.tag}")
            elif ft.tag is Tag.T4 and ft.shape not in adm.verdicts[Tag.T4].candidates:
                bad.append("type4-shape")
    return bad


@dataclass
class VerificationSummary:
    model: str
    total: int = 0
    passed: int = 0
    failures: list[tuple[object, list[str]]] = field(default_factory=list)
    tag_counts: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.total > 0 and self.passed == self.total

    def line(self) -> str:
        return f"{self.passed}/{self.total} automorphisms pass"


def verify_all(model: IncidenceModel, automorphisms: Iterable[ModelAutomorphism],
               check_incidence: bool = True) -> VerificationSummary:
    summary = VerificationSummary(model.kind)
    for aut in automorphisms:
        summary.total += 1
        bad = law_violations(model, aut, check_incidence=check_incidence)
        if bad:
            summary.failures.append((aut.base, bad))
        else:
            summary.passed += 1
        if aut.order > 1 and is_prime(aut.order):
            found = matching_types(model, aut)
            key = str(found[0].tag) if found else "none"
            summary.tag_counts[key] = summary.tag_counts.get(key, 0) + 1
    return summary


def induced_automorphisms(model: IncidenceModel, bases: Iterable | None = None) -> Iterator[ModelAutomorphism]:
    for base in symmetries(model) if bases is None else bases:
        yield induced_automorphism(model, base)


# -- Payne bound on a concrete model ------------------------------------------


def _cocliques(cands: Sequence[int], related) -> Iterator[tuple[int, ...]]:
    """All nonempty pairwise-unrelated subsets of `cands`."""

    def grow(start: int, current: list[int]):
        for i in range(start, len(cands)):
            v = cands[i]
            if all(v not in related[u] for u in current):
                current.append(v)
                yield tuple(current)
                yield from grow(i + 1, current)
                current.pop()

    yield from grow(0, [])


def payne_check(model: IncidenceModel) -> tuple[bool, int]:
    """Exhaustively test (|X|-1)(|Y|-1) <= s^2 over pairwise noncollinear Y and
    pairwise noncollinear X inside Y-perp, disjoint from Y.

    Returns (all hold, number of Y sets examined).
    """
    o = model.order
    rel = model.collinear
    examined = 0
    for ys in _cocliques(list(range(model.npoints)), rel):
        examined += 1
        perp = [p for p in range(model.npoints) if p not in ys and all(p in rel[y] for y in ys)]
        m = max((len(x) for x in _cocliques(perp, rel)), default=0)
        if m and not payne_bound_ok(m, len(ys), o):
            return False, examined
    return True, examined
