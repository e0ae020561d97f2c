"""Conjugate-factorization norms q_x(y) in S_N and S_inf.

q_x(y) is the least number of factors, each conjugate to x or x**-1, whose
product is y; q_x(identity) = 0 by the empty product, and q_x(y) = inf when
y is outside the normal closure of x.  In symmetric groups every element is
conjugate to its inverse, so only the class of x matters.

Three backends:

* q_bruteforce  - exact BFS over the conjugacy classes of a small S_N,
                  expanding one concrete representative per class (sound
                  because u' * c with u' = h u h**-1 is conjugate to
                  u * (h**-1 c h), which ranges over the whole class of c).
* q_classgraph  - BFS over cycle types of S_N with edges from the exact
                  class-algebra structure constants.
* q_infty       - S_inf values: certified fast paths built from
                  constructive witnesses plus parity/support lower bounds,
                  falling back to bidirectional search over cycle types
                  with successors enumerated in a bounded support window.

Every finite answer that was achieved constructively carries a
FactorizationWitness; results are exact integers, never floats, with
math.inf for unreachable targets.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from math import ceil, comb, inf, log

from .characters import class_size, product_classes
from .lemmas import three_conjugates_iota, iota_from_sigma, sigma_from_iota
from .perm import (CycleType, Permutation, canonical_iota, canonical_rep,
                   find_conjugator, type_embeddings)
from .witness import (FactorizationWitness, compose_witnesses,
                      conjugating_witness)

EMPTY = CycleType(())
INFINITE = inf                      # ambient marker for S_inf
FINITE_WINDOW = 20                  # largest S_N used for upper-bound transfer


@dataclass(frozen=True)
class Budget:
    """Search limits: BFS depth, stored/enumerated node count, wall clock."""
    depth: int = 12
    frontier: int = 2_000_000
    seconds: float = 60.0


DEFAULT_BUDGET = Budget()


class BudgetExceeded(Exception):
    pass


@dataclass
class NormResult:
    lower: int | float
    upper: int | float
    witness: FactorizationWitness | None = None
    obstruction: str = "none"           # "sign" | "normal-closure" | "none"
    effort: int = 0

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"bracket [{self.lower}, {self.upper}] is empty")
        if self.witness is not None and self.witness.q != self.upper:
            raise ValueError("witness length disagrees with the upper bound")

    @property
    def certified(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> int | float:
        if not self.certified:
            raise ValueError("bracket is not certified; no single value")
        return self.lower

    def describe(self) -> str:
        if self.certified:
            if self.lower == inf:
                reason = self.obstruction if self.obstruction != "none" else "unreachable"
                return f"q = infinity ({reason} obstruction)"
            return f"q = {int(self.lower)}"
        hi = "inf" if self.upper == inf else str(int(self.upper))
        return f"q in [{int(self.lower)}, {hi}] (uncertified)"


def _as_type(v: Permutation | CycleType) -> CycleType:
    return v.cycle_type() if isinstance(v, Permutation) else CycleType(v)


def _as_perm(v: Permutation | CycleType) -> Permutation:
    return v if isinstance(v, Permutation) else canonical_rep(CycleType(v))


def support_parity_lower_bound(x: Permutation | CycleType,
                               y: Permutation | CycleType) -> tuple[int | float, str]:
    """Ambient-independent lower bound for q_x(y) with its obstruction tag.

    inf with "sign" when x is even and y odd; inf with "normal-closure"
    when x is trivial and y is not.  Otherwise the bound combines
    ceil(nu(y)/nu(x)) from subadditivity of the support norm, the parity
    constraint sign(y) = sign(x)**k, and the exclusion of k = 1 for
    distinct types.
    """
    xt, yt = _as_type(x), _as_type(y)
    if yt == EMPTY:
        return 0, "none"
    if xt == EMPTY:
        return inf, "normal-closure"
    if xt.sign == 1 and yt.is_odd:
        return inf, "sign"
    k = max(1, ceil(yt.nu / xt.nu))
    while (xt.is_odd and (-1) ** k != yt.sign) or (k == 1 and xt != yt):
        k += 1
    return k, "none"


def _trivial_result(xt: CycleType, yt: CycleType,
                    x_perm: Permutation, y_perm: Permutation) -> NormResult | None:
    """Handle q = 0, q = 1 and the two ambient-free infinities."""
    if yt == EMPTY:
        return NormResult(0, 0, FactorizationWitness(x_perm, (), Permutation()))
    bound, obstruction = support_parity_lower_bound(xt, yt)
    if bound == inf:
        return NormResult(inf, inf, None, obstruction)
    if xt == yt:
        h = find_conjugator(x_perm, y_perm)
        return NormResult(1, 1, FactorizationWitness(x_perm, ((h, 1),), y_perm))
    return None


# ---------------------------------------------------------------------------
# constructive iota-family upper bounds

def block_iota_witness(a: int, m: int) -> FactorizationWitness:
    """iota_{m*a} as m disjoint shifted copies of iota_a."""
    base = canonical_iota(a)
    factors = tuple((Permutation(_shift_map(2 * a, 2 * a * j)), 1)
                    for j in range(m))
    return FactorizationWitness(base, factors, canonical_iota(m * a))


def _shift_map(width: int, offset: int) -> dict[int, int]:
    if offset == 0:
        return {}
    m = {i: i + offset for i in range(1, width + 1)}
    m.update({i + offset: i for i in range(1, width + 1)})
    # that is an involution swapping the two windows, a valid conjugator
    return m


def iota_upper_witness(a: int, b: int) -> FactorizationWitness | None:
    """Constructive witness for q over iota_a with target iota_b, when one
    of the closed forms applies; None otherwise."""
    if a == b:
        return FactorizationWitness(canonical_iota(a), ((Permutation(), 1),),
                                    canonical_iota(a))
    if b % a == 0:
        return block_iota_witness(a, b // a)
    if b < a and (a - b) % 2 == 0:
        return three_conjugates_iota(b, a).witness
    return None


def chain_upper_witness(x_perm: Permutation, y_perm: Permutation) -> FactorizationWitness:
    """A generic (not minimal) witness for q_x(y) via the iota skeleton:
    three conjugates of x make some iota_{k0}, iotas convert among
    themselves, three iotas make y exactly."""
    w1 = iota_from_sigma(x_perm).witness          # x^3 -> iota_k0
    k0 = w1.target_rep.cycle_type().nu // 2
    w3 = sigma_from_iota(y_perm).witness          # iota_k1^3 -> y
    k1 = w3.base.cycle_type().nu // 2
    if k0 == k1:
        return compose_witnesses(w1, w3)
    mid = iota_upper_witness(k0, k1)
    if mid is None:
        m = ceil(k1 / k0)
        if (m * k0 - k1) % 2:
            m += 1
        mid = compose_witnesses(block_iota_witness(k0, m),
                                three_conjugates_iota(k1, m * k0).witness)
    return compose_witnesses(compose_witnesses(w1, mid), w3)


# ---------------------------------------------------------------------------
# successor enumeration over cycle types (ambient-free window argument)

_SUCC_CACHE: dict[tuple[CycleType, CycleType, int], frozenset[CycleType]] = {}


def _embedding_count(x: CycleType, window: int) -> int:
    if x == EMPTY:
        return 1
    return comb(window, x.nu) * class_size(x, x.nu)


def successor_types(t: CycleType, x: CycleType, budget: Budget,
                    counter: list[int], cap: int = 0) -> frozenset[CycleType]:
    """Types of u*c for u of type t and c of type x, in S_inf (cap = 0) or
    S_cap.  Complete: any product relabels into a window of
    nu(t) + nu(x) points holding supp(u) fixed."""
    key = (t, x, cap)
    cached = _SUCC_CACHE.get(key)
    if cached is not None:
        return cached
    window = t.nu + x.nu if not cap else min(cap, t.nu + x.nu)
    est = _embedding_count(x, window)
    counter[0] += est
    if counter[0] > budget.frontier:
        raise BudgetExceeded(f"successor enumeration too large ({est} embeddings)")
    u = canonical_rep(t)
    out = set()
    for c in type_embeddings(x, range(1, window + 1)):
        out.add((u * c).cycle_type())
    frozen = frozenset(out)
    _SUCC_CACHE[key] = frozen
    return frozen


# ---------------------------------------------------------------------------
# bidirectional BFS over cycle types

def _bidirectional_search(xt: CycleType, yt: CycleType, succ, budget: Budget):
    """Exact minimal factor count from the identity type to yt, stepping by
    the class of xt; succ(t) must be the complete successor set.

    Returns ("found", q, type_path) with path[0] == EMPTY, path[-1] == yt;
    ("infinite",) when both endpoints saturate without meeting;
    raises BudgetExceeded when limits run out first.
    """
    dist_f: dict[CycleType, int] = {EMPTY: 0}
    par_f: dict[CycleType, CycleType | None] = {EMPTY: None}
    dist_b: dict[CycleType, int] = {yt: 0}
    par_b: dict[CycleType, CycleType | None] = {yt: None}
    frontier_f, frontier_b = [EMPTY], [yt]
    depth_f = depth_b = 0
    sat_f = sat_b = False
    best: tuple[int, CycleType] | None = None
    t0 = time.monotonic()

    def build_path(meet: CycleType) -> list[CycleType]:
        left = []
        t: CycleType | None = meet
        while t is not None:
            left.append(t)
            t = par_f[t]
        left.reverse()
        t = par_b[meet]
        while t is not None:
            left.append(t)
            t = par_b[t]
        return left

    while True:
        if best is not None:
            if sat_f or sat_b or best[0] <= depth_f + depth_b:
                return "found", best[0], build_path(best[1])
        if sat_f and sat_b:
            return ("infinite",)
        if sat_f and not frontier_b:
            sat_b = True
            continue
        if sat_b and not frontier_f:
            sat_f = True
            continue
        if depth_f + depth_b >= budget.depth:
            raise BudgetExceeded(f"depth budget {budget.depth} reached")
        if time.monotonic() - t0 > budget.seconds:
            raise BudgetExceeded(f"time budget {budget.seconds}s reached")
        # expand the smaller live frontier
        forward = not sat_f and (sat_b or len(frontier_f) <= len(frontier_b))
        if forward:
            frontier, dist, par, other = frontier_f, dist_f, par_f, dist_b
        else:
            frontier, dist, par, other = frontier_b, dist_b, par_b, dist_f
        new: list[CycleType] = []
        for t in frontier:
            for t2 in succ(t):
                if t2 in dist:
                    continue
                dist[t2] = dist[t] + 1
                par[t2] = t
                new.append(t2)
                if t2 in other:
                    total = dist_f[t2] + dist_b[t2]
                    if best is None or total < best[0]:
                        best = (total, t2)
        if forward:
            frontier_f = new
            depth_f += 1
            sat_f = not new
        else:
            frontier_b = new
            depth_b += 1
            sat_b = not new
        if len(dist_f) + len(dist_b) > budget.frontier:
            raise BudgetExceeded("frontier budget reached")


def _materialize(path: list[CycleType], xt: CycleType, budget: Budget,
                 counter: list[int], cap: int = 0) -> list[Permutation]:
    """Concrete factors c_1..c_q of type xt realizing the type path.

    Each edge u -> t_next is realized inside supp(u) plus nu(x) fresh
    points, scanning whichever class is smaller there: factors c of the
    base type directly, or products v of the next type with c = u^-1 v.
    """
    u = Permutation()
    out = []
    limit = 4 * budget.frontier
    t0 = time.monotonic()

    def spend() -> None:
        counter[0] += 1
        if counter[0] > limit:
            raise BudgetExceeded("witness materialization too large")
        if counter[0] % 4096 == 0 and time.monotonic() - t0 > budget.seconds:
            raise BudgetExceeded("witness materialization too slow")

    for t_next in path[1:]:
        sup = sorted(u.support)
        extra = []
        p = 1
        while len(extra) < xt.nu and (not cap or p <= cap):
            if p not in u.support:
                extra.append(p)
            p += 1
        window = sup + extra
        found = None
        if _embedding_count(xt, len(window)) <= _embedding_count(t_next, len(window)):
            for c in type_embeddings(xt, window):
                spend()
                if (u * c).cycle_type() == t_next:
                    found = c
                    break
        else:
            u_inv = u.inverse()
            for v in type_embeddings(t_next, window):
                spend()
                c = u_inv * v
                if c.cycle_type() == xt:
                    found = c
                    break
        if found is None:
            raise RuntimeError(f"internal: no embedding realizes {t_next}")
        out.append(found)
        u = u * found
    return out


def _witness_from_factors(x_perm: Permutation, y_perm: Permutation,
                          factors: list[Permutation]) -> FactorizationWitness:
    """Conjugate a concrete factor chain so its product is exactly y_perm."""
    u = Permutation()
    for c in factors:
        u = u * c
    h = find_conjugator(u, y_perm)
    if h is None:
        raise RuntimeError("internal: factor product has the wrong type")
    moved = [c.conjugated_by(h) for c in factors]
    return conjugating_witness(x_perm, moved, y_perm)


# ---------------------------------------------------------------------------
# backends

def q_bruteforce(x: Permutation | CycleType, y: Permutation | CycleType,
                 n: int, budget: Budget = DEFAULT_BUDGET,
                 oracle_bound: int = 8) -> NormResult:
    """Exact q in S_n by class BFS with concrete elements; the oracle
    backend, restricted to small n (default at most 8)."""
    if n > oracle_bound:
        raise ValueError(f"q_bruteforce is an oracle for n <= {oracle_bound}; "
                         f"got n = {n}")
    x_perm, y_perm = _as_perm(x), _as_perm(y)
    xt, yt = x_perm.cycle_type(), y_perm.cycle_type()
    if max(x_perm.max_point, y_perm.max_point) > n:
        raise ValueError(f"inputs do not fit in S_{n}")
    t = _trivial_result(xt, yt, x_perm, y_perm)
    if t is not None:
        return t
    cls_x = list(type_embeddings(xt, range(1, n + 1)))
    dist: dict[CycleType, int] = {EMPTY: 0}
    rep: dict[CycleType, Permutation] = {EMPTY: Permutation()}
    chain: dict[CycleType, tuple[CycleType, Permutation] | None] = {EMPTY: None}
    frontier = [EMPTY]
    effort = 0
    d = 0
    while frontier and d < budget.depth:
        d += 1
        new = []
        for tcur in frontier:
            u = rep[tcur]
            for c in cls_x:
                effort += 1
                p = u * c
                pt = p.cycle_type()
                if pt in dist:
                    continue
                dist[pt] = d
                rep[pt] = p
                chain[pt] = (tcur, c)
                new.append(pt)
                if pt == yt:
                    # rep[t] = rep[parent] * c along the chain, so the
                    # collected factors multiply to rep[yt] exactly
                    factors = []
                    t2: CycleType = pt
                    while chain[t2] is not None:
                        prev, used = chain[t2]
                        factors.append(used)
                        t2 = prev
                    factors.reverse()
                    w = _witness_from_factors(x_perm, y_perm, factors)
                    return NormResult(d, d, w, effort=effort)
        frontier = new
        if effort > budget.frontier:
            lo, _ = support_parity_lower_bound(xt, yt)
            return NormResult(max(lo, d + 1), inf, None, effort=effort)
    if not frontier:
        return NormResult(inf, inf, None, "normal-closure", effort=effort)
    lo, _ = support_parity_lower_bound(xt, yt)
    return NormResult(max(lo, d + 1), inf, None, effort=effort)


def q_classgraph(x: Permutation | CycleType, y: Permutation | CycleType,
                 n: int, budget: Budget = DEFAULT_BUDGET) -> NormResult:
    """Exact q in S_n via the class multiplication graph: edges computed
    from character-theoretic structure constants, bidirectional BFS."""
    x_perm, y_perm = _as_perm(x), _as_perm(y)
    xt, yt = x_perm.cycle_type(), y_perm.cycle_type()
    if xt.nu > n or yt.nu > n:
        raise ValueError(f"inputs do not fit in S_{n}")
    t = _trivial_result(xt, yt, x_perm, y_perm)
    if t is not None:
        return t
    counter = [0]
    tick = [0]

    def succ(tc: CycleType) -> frozenset[CycleType]:
        key = (tc, xt, -n)
        cached = _SUCC_CACHE.get(key)
        if cached is None:
            tick[0] += 1
            cached = frozenset(product_classes(tc, xt, n))
            _SUCC_CACHE[key] = cached
        return cached

    try:
        outcome = _bidirectional_search(xt, yt, succ, budget)
    except BudgetExceeded:
        lo, _ = support_parity_lower_bound(xt, yt)
        return NormResult(lo, inf, None, effort=counter[0])
    if outcome[0] == "infinite":
        return NormResult(inf, inf, None, "normal-closure")
    _, qv, path = outcome
    try:
        factors = _materialize(path, xt, budget, counter, cap=n)
        wit = _witness_from_factors(x_perm, y_perm, factors)
    except BudgetExceeded:
        wit = None
    return NormResult(qv, qv, wit, effort=counter[0])


def q_infty(x: Permutation | CycleType, y: Permutation | CycleType,
            budget: Budget = DEFAULT_BUDGET) -> NormResult:
    """q in S_inf: certified closed forms where the iota witnesses apply,
    otherwise bidirectional window search, otherwise an honest bracket."""
    x_perm, y_perm = _as_perm(x), _as_perm(y)
    xt, yt = x_perm.cycle_type(), y_perm.cycle_type()
    t = _trivial_result(xt, yt, x_perm, y_perm)
    if t is not None:
        return t
    lower, _ = support_parity_lower_bound(xt, yt)
    counter = [0]

    # closed-form iota family
    if set(xt) == {2} and set(yt) == {2}:
        a, b = len(xt), len(yt)
        w = iota_upper_witness(a, b)
        if w is not None and w.q == lower:
            wit = _retarget(w, x_perm, y_perm)
            return NormResult(lower, lower, wit)
        # remaining iota cases (b < a both even, or b > a not a multiple)
        # fall through to the generic search with any witness as a cap
        cap_witness = w

    else:
        cap_witness = None

    # finite-window transfer: a factorization inside S_N embeds in S_inf,
    # so a certified S_N value meeting the ambient-free lower bound settles
    # the query without the open-window search
    finite_cap = None
    if xt.nu + yt.nu <= FINITE_WINDOW:
        try:
            fin = q_classgraph(xt, yt, xt.nu + yt.nu, budget)
        except BudgetExceeded:
            fin = None
        if fin is not None and fin.upper < inf:
            wit = fin.witness and _retarget(fin.witness, x_perm, y_perm)
            if fin.upper == lower:
                return NormResult(lower, lower, wit)
            finite_cap = (int(fin.upper), wit)

    try:
        outcome = _bidirectional_search(
            xt, yt, lambda tc: successor_types(tc, xt, budget, counter), budget)
        if outcome[0] == "infinite":          # cannot happen for valid input
            return NormResult(inf, inf, None, "normal-closure")
        _, qv, path = outcome
        try:
            factors = _materialize(path, xt, budget, counter)
            wit = _witness_from_factors(x_perm, y_perm, factors)
        except BudgetExceeded:
            wit = None
        return NormResult(qv, qv, wit, effort=counter[0])
    except BudgetExceeded:
        pass

    # bracket: best upper bound available (constructive chain, iota cap,
    # or the finite-window value, whose integer bound stands even when its
    # witness was not materialized)
    if cap_witness is None:
        try:
            cap_witness = chain_upper_witness(x_perm, y_perm)
        except Exception:
            cap_witness = None
    upper, wit = inf, None
    if cap_witness is not None:
        cap_witness = _retarget(cap_witness, x_perm, y_perm)
        upper, wit = cap_witness.q, cap_witness
    if finite_cap is not None and finite_cap[0] < upper:
        upper, wit = finite_cap
    if upper < lower:
        raise RuntimeError("internal: witness beats the proven lower bound")
    return NormResult(lower, upper, wit, effort=counter[0])


def _retarget(w: FactorizationWitness, x_perm: Permutation,
              y_perm: Permutation) -> FactorizationWitness:
    """Conjugate a canonical witness so base and target are the query's own
    permutations."""
    if w.base == x_perm and w.target_rep == y_perm:
        return w
    return _witness_from_factors(x_perm, y_perm, w.factor_perms())


# ---------------------------------------------------------------------------
# dispatcher and distances

def q(x: Permutation | CycleType, y: Permutation | CycleType,
      ambient: int | float = INFINITE, backend: str = "auto",
      budget: Budget = DEFAULT_BUDGET, oracle_bound: int = 8) -> NormResult:
    """q_x(y) in the requested ambient group.

    backend: "auto" picks the oracle for small finite n, transfers certified
    S_inf results whose witnesses fit, and otherwise uses the class graph;
    "brute", "chars" and "infty" force a specific engine.
    """
    if ambient == INFINITE:
        if backend not in ("auto", "infty"):
            raise ValueError(f"backend {backend!r} needs a finite ambient")
        return q_infty(x, y, budget)
    n = int(ambient)
    xt, yt = _as_type(x), _as_type(y)
    if xt.nu > n or yt.nu > n:
        raise ValueError(f"inputs do not fit in S_{n}")
    if backend == "infty":
        raise ValueError("backend 'infty' contradicts a finite ambient")
    if backend == "brute":
        return q_bruteforce(x, y, n, budget, oracle_bound)
    if backend == "chars":
        return q_classgraph(x, y, n, budget)
    if backend != "auto":
        raise ValueError(f"unknown backend {backend!r}")
    if n <= oracle_bound:
        return q_bruteforce(x, y, n, budget, oracle_bound)
    r = q_infty(x, y, budget)
    if r.certified:
        if r.upper == inf:
            # an S_inf obstruction is an obstruction in every S_n
            return r
        if r.witness is not None and \
                all(f.max_point <= n for f in r.witness.factor_perms()):
            # lower bound is ambient-free and the witness lives inside S_n
            return r
    return q_classgraph(x, y, n, budget)


@dataclass
class AsymmetricDistance:
    """d_as([f],[g]) = log q_f(g), reported as an exact integer bracket."""
    result: NormResult

    @property
    def certified(self) -> bool:
        return self.result.certified

    @property
    def log_lower(self) -> float:
        return log(self.result.lower) if self.result.lower != inf else inf

    @property
    def log_upper(self) -> float:
        return log(self.result.upper) if self.result.upper != inf else inf


def d_as(f: Permutation | CycleType, g: Permutation | CycleType,
         ambient: int | float = INFINITE,
         budget: Budget = DEFAULT_BUDGET) -> AsymmetricDistance:
    """Asymmetric distance log q_f(g); f and g must be nontrivial."""
    if _as_type(f) == EMPTY or _as_type(g) == EMPTY:
        raise ValueError("distances are defined on nontrivial classes only")
    return AsymmetricDistance(q(f, g, ambient=ambient, budget=budget))


@dataclass
class TsuboiDistance:
    """d([f],[g]) = log max(q_f(g), q_g(f)) with exact integer brackets."""
    q_fg: NormResult
    q_gf: NormResult

    @property
    def q_max_lower(self) -> int | float:
        return max(self.q_fg.lower, self.q_gf.lower)

    @property
    def q_max_upper(self) -> int | float:
        return max(self.q_fg.upper, self.q_gf.upper)

    @property
    def certified(self) -> bool:
        if self.q_max_lower == self.q_max_upper:
            return True
        # one certified side can dominate the other's whole bracket
        return (self.q_fg.certified and self.q_fg.value >= self.q_gf.upper) or \
               (self.q_gf.certified and self.q_gf.value >= self.q_fg.upper)

    @property
    def q_max(self) -> int | float:
        if not self.certified:
            raise ValueError("distance is not certified")
        return self.q_max_lower if self.q_max_lower == self.q_max_upper \
            else max(self.q_fg.upper if self.q_fg.certified else self.q_fg.lower,
                     self.q_gf.upper if self.q_gf.certified else self.q_gf.lower)

    @property
    def log_value(self) -> float:
        v = self.q_max
        return log(v) if v != inf else inf


def tsuboi_d(f: Permutation | CycleType, g: Permutation | CycleType,
             ambient: int | float = INFINITE,
             budget: Budget = DEFAULT_BUDGET) -> TsuboiDistance:
    """The symmetrized metric; in the S_inf ambient both arguments must be
    odd nontrivial classes (points of the metric space)."""
    ft, gt = _as_type(f), _as_type(g)
    if ft == EMPTY or gt == EMPTY:
        raise ValueError("distances are defined on nontrivial classes only")
    if ambient == INFINITE and (not ft.is_odd or not gt.is_odd):
        raise ValueError("in S_inf the metric lives on odd classes; "
                         f"got types {ft} (sign {ft.sign}) and {gt} (sign {gt.sign})")
    return TsuboiDistance(q(f, g, ambient=ambient, budget=budget),
                          q(g, f, ambient=ambient, budget=budget))
