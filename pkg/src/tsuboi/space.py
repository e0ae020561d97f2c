"""Finite truncations of the metric space on odd classes of S_inf.

Points are odd nontrivial cycle types.  This module enumerates truncations,
computes certified distance matrices (exact integer q-max per entry, log
taken only for display), checks the skeleton family iota_{3^k}, builds
machine-checked coarse-density certificates, and fits the empirical
half-line comparison.
"""

from __future__ import annotations

import csv
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import ceil, inf, log

from .characters import enumerate_partitions
from .lemmas import LemmaWitness, iota_from_sigma, sigma_from_iota, \
    three_conjugates_iota
from .norms import Budget, DEFAULT_BUDGET, INFINITE, NormResult, \
    TsuboiDistance, block_iota_witness, q as q_norm, tsuboi_d
from .perm import CycleType, Permutation, canonical_iota, canonical_rep, \
    format_cycles
from .witness import FactorizationWitness, compose_witnesses

LOG3 = log(3)


# ---------------------------------------------------------------------------
# points

@dataclass(frozen=True)
class SpacePoint:
    """A point of the space: an odd nontrivial cycle type."""
    type: CycleType

    def __post_init__(self):
        if not self.type:
            raise ValueError("the identity class is not a point of the space")
        if not self.type.is_odd:
            raise ValueError(f"type {self.type} is even; points are odd classes")

    @property
    def nu(self) -> int:
        return self.type.nu

    @property
    def label(self) -> str:
        return str(self.type)

    @property
    def iota_index(self) -> int | None:
        """k when the type is [2]^k, else None."""
        if set(self.type) == {2}:
            return len(self.type)
        return None

    def rep(self) -> Permutation:
        return canonical_rep(self.type)

    @classmethod
    def from_string(cls, text: str) -> "SpacePoint":
        parts = [int(p) for p in text.replace(",", "+").split("+") if p.strip()]
        return cls(CycleType(parts))


def enumerate_points(max_support: int) -> list[SpacePoint]:
    """All odd cycle types with 2 <= nu <= max_support, ordered by support
    size and then reverse-lexicographically within each size."""
    if max_support < 2:
        raise ValueError("max_support must be at least 2")
    out = []
    for v in range(2, max_support + 1):
        for p in enumerate_partitions(v):
            if p and min(p) >= 2:
                t = CycleType(p)
                if t.is_odd:
                    out.append(SpacePoint(t))
    return out


# ---------------------------------------------------------------------------
# distance matrix

def _num(v):
    """JSON-safe number: inf becomes the string "inf"."""
    return "inf" if v == inf else v


@dataclass(frozen=True)
class MatrixEntry:
    """One matrix cell: the exact integer q-max bracket for d = log q."""
    q_lower: int | float
    q_upper: int | float
    certified: bool

    @property
    def exact(self) -> bool:
        return self.q_lower == self.q_upper

    def render(self) -> str:
        if self.certified and self.exact:
            return str(self.q_lower)
        lo = "inf" if self.q_lower == inf else str(self.q_lower)
        hi = "inf" if self.q_upper == inf else str(self.q_upper)
        return f"[{lo},{hi}]"

    def to_json_dict(self) -> dict:
        # q values are integers >= 1, or inf for obstructions
        return {"q_lower": _num(self.q_lower), "q_upper": _num(self.q_upper),
                "certified": self.certified,
                "d_lower": _num(log(self.q_lower)),
                "d_upper": _num(log(self.q_upper))}


@dataclass
class DistanceMatrix:
    points: list[SpacePoint]
    distances: list[list[TsuboiDistance]]     # full square, index order

    def entry(self, i: int, j: int) -> MatrixEntry:
        d = self.distances[i][j]
        if d.certified:
            v = d.q_max
            return MatrixEntry(v, v, True)
        return MatrixEntry(d.q_max_lower, d.q_max_upper, False)

    def check_invariants(self) -> dict[str, bool]:
        """Zero diagonal, symmetry, and the triangle inequality checked per
        leg in the primitive form q_f(h) <= q_f(g) * q_g(h) on certified
        legs, then the derived symmetrized form.  Exact integers only."""
        n = len(self.points)
        ok_diag = all(self.distances[i][i].certified and
                      self.distances[i][i].q_max == 1 for i in range(n))
        ok_sym = True
        for i in range(n):
            for j in range(n):
                a, b = self.entry(i, j), self.entry(j, i)
                ok_sym &= (a.q_lower == b.q_lower and a.q_upper == b.q_upper
                           and a.certified == b.certified)
        ok_legs = True
        ok_derived = True
        res: dict[tuple[int, int], NormResult] = {}
        for i in range(n):
            for j in range(n):
                res[(i, j)] = self.distances[i][j].q_fg
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    r_ik, r_ij, r_jk = res[(i, k)], res[(i, j)], res[(j, k)]
                    if r_ik.certified and r_ij.certified and r_jk.certified:
                        ok_legs &= r_ik.value <= r_ij.value * r_jk.value
                    a, b, c = (self.entry(i, k), self.entry(i, j),
                               self.entry(j, k))
                    if a.certified and b.certified and c.certified:
                        ok_derived &= a.q_lower <= b.q_lower * c.q_lower
        return {"zero_diagonal": ok_diag, "symmetric": ok_sym,
                "triangle_per_leg": ok_legs, "triangle_derived": ok_derived}

    def to_csv(self, path: str, header_comment: str | None = None) -> None:
        """Cells hold the exact q-max integer, or "[lo,hi]" when the entry
        is not certified; the trailing column counts certified cells."""
        n = len(self.points)
        with open(path, "w", newline="") as fh:
            if header_comment:
                fh.write("# " + header_comment + "\n")
            w = csv.writer(fh)
            w.writerow(["type"] + [p.label for p in self.points] + ["certified"])
            for i in range(n):
                cells = [self.entry(i, j) for j in range(n)]
                done = sum(1 for c in cells if c.certified)
                w.writerow([self.points[i].label] +
                           [c.render() for c in cells] + [f"{done}/{n}"])

    def to_json_dict(self) -> dict:
        n = len(self.points)
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                cell = self.entry(i, j).to_json_dict()
                d = self.distances[i][j]
                cell["q_fg"] = {"lower": _num(d.q_fg.lower),
                                "upper": _num(d.q_fg.upper),
                                "certified": d.q_fg.certified}
                cell["q_gf"] = {"lower": _num(d.q_gf.lower),
                                "upper": _num(d.q_gf.upper),
                                "certified": d.q_gf.certified}
                row.append(cell)
            rows.append(row)
        return {"points": [p.label for p in self.points], "entries": rows}

    def to_json(self, path: str, extra: dict | None = None) -> None:
        doc = self.to_json_dict()
        if extra:
            doc.update(extra)
        with open(path, "w") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")


def distance_matrix(points: list[SpacePoint], backend: str = "auto",
                    ambient: int | float = INFINITE,
                    budget: Budget = DEFAULT_BUDGET,
                    threads: int = 1) -> DistanceMatrix:
    """Pairwise distances, certified where the engine certifies and honest
    brackets elsewhere; entries computed independently, assembled in index
    order."""
    n = len(points)
    pairs = [(i, j) for i in range(n) for j in range(n)]

    def one(pair: tuple[int, int]) -> NormResult:
        i, j = pair
        return q_norm(points[i].type, points[j].type, ambient=ambient,
                      backend=backend, budget=budget)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(one, pairs))
    else:
        results = [one(p) for p in pairs]
    res = {pair: r for pair, r in zip(pairs, results)}
    dist = [[TsuboiDistance(res[(i, j)], res[(j, i)]) for j in range(n)]
            for i in range(n)]
    return DistanceMatrix(points, dist)


# ---------------------------------------------------------------------------
# skeleton

def skeleton_check(kmax: int, budget: Budget = DEFAULT_BUDGET) -> dict:
    """Certify d([iota_{3^k}], [iota_{3^l}]) = |k - l| * log 3 for all
    1 <= k <= l <= kmax: the small-from-big direction is exactly 3 and the
    big-from-small direction exactly 3^(l-k)."""
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    pairs = []
    all_ok = True
    for k in range(1, kmax + 1):
        for l in range(k, kmax + 1):
            tk, tl = CycleType([2] * 3 ** k), CycleType([2] * 3 ** l)
            rec: dict = {"k": k, "l": l, "d_over_log3": l - k}
            if k == l:
                r = q_norm(tk, tl, budget=budget)
                rec.update(q_down=1, q_up=1, expected_down=1, expected_up=1,
                           certified=r.certified, ok=r.certified and r.value == 1)
            else:
                down = q_norm(tl, tk, budget=budget)   # big class, small target
                up = q_norm(tk, tl, budget=budget)
                rec.update(
                    q_down=_num(down.value if down.certified else None),
                    q_up=_num(up.value if up.certified else None),
                    expected_down=3, expected_up=3 ** (l - k),
                    certified=down.certified and up.certified,
                    ok=(down.certified and up.certified and
                        down.value == 3 and up.value == 3 ** (l - k)))
            pairs.append(rec)
            all_ok &= rec["ok"]
    return {"kmax": kmax, "pairs": pairs, "all_ok": all_ok}


# ---------------------------------------------------------------------------
# coarse density

@dataclass(frozen=True)
class ChainLink:
    """One asymmetric-distance inequality d_as(src, dst) <= log(bound),
    backed by a verified factorization witness (derived links are composed
    from earlier ones)."""
    src: str
    dst: str
    bound: int
    witness: FactorizationWitness
    derived: bool = False

    @property
    def q(self) -> int:
        return self.witness.q

    def verify(self) -> bool:
        return self.q <= self.bound and self.witness.verify()

    def to_json_dict(self) -> dict:
        return {"src": self.src, "dst": self.dst, "q": self.q,
                "bound": self.bound, "derived": self.derived,
                "witness": self.witness.to_json_dict()}


@dataclass
class DensityCertificate:
    """Proof-shaped certificate that a point lies within the proved radius
    of the iota skeleton: sigma within log 3 / 4 log 3 of [iota_k0], and
    iota_k0 within log 3 / 2 log 3 of the skeleton point [iota_{3^l}]."""
    sigma: SpacePoint
    k0: int
    k1: int
    nearest_skeleton: int                      # exponent l, 3^l <= k0 < 3^(l+1)
    chain: list[ChainLink] = field(default_factory=list)
    snap: list[ChainLink] = field(default_factory=list)
    radius_bound: float = 0.0
    bounds: dict[str, bool] = field(default_factory=dict)

    @property
    def skeleton_point(self) -> SpacePoint:
        return SpacePoint(CycleType([2] * 3 ** self.nearest_skeleton))

    def verify(self) -> bool:
        return all(l.verify() for l in self.chain + self.snap) and \
            all(self.bounds.values())

    def to_json_dict(self) -> dict:
        return {"sigma": self.sigma.label, "k0": self.k0, "k1": self.k1,
                "nearest_skeleton": self.nearest_skeleton,
                "skeleton_point": self.skeleton_point.label,
                "radius_bound": self.radius_bound,
                "radius_bound_over_log3": round(self.radius_bound / LOG3, 12),
                "chain": [l.to_json_dict() for l in self.chain],
                "snap": [l.to_json_dict() for l in self.snap],
                "bounds": self.bounds, "verified": self.verify()}

    def save(self, path: str) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json_dict(), fh, indent=2)
            fh.write("\n")


def _iota_label(k: int) -> str:
    return str(CycleType([2] * k))


def density_certificate(sigma: SpacePoint | CycleType,
                        budget: Budget = DEFAULT_BUDGET) -> DensityCertificate:
    """Build and verify the two-leg density chain for an odd class.

    Forward leg: iota_k0 is three conjugates of sigma, so
    d_as([sigma],[iota_k0]) <= log 3.  Backward leg: compose
    iota_k0 -> iota_{9 k0} (blocks, q <= 9), iota_{9 k0} -> iota_k1
    (three conjugates), iota_k1 -> sigma (three conjugates), giving
    d_as([iota_k0],[sigma]) <= 4 log 3.  Then snap k0 to the skeleton
    exponent l with 3^l <= k0 < 3^(l+1).
    """
    if isinstance(sigma, CycleType):
        sigma = SpacePoint(sigma)
    idx = sigma.iota_index
    if idx is not None:
        l = 0
        while 3 ** (l + 1) <= idx:
            l += 1
        if 3 ** l == idx:
            # sigma is itself a skeleton point
            return DensityCertificate(sigma, k0=idx, k1=idx,
                                      nearest_skeleton=l, radius_bound=0.0,
                                      bounds={"on the skeleton": True})
    rep = sigma.rep()
    fwd = iota_from_sigma(rep)                  # base sigma, target iota_k0
    k0 = fwd.k
    back_k1 = sigma_from_iota(rep)              # base iota_k1, target sigma
    k1 = back_k1.k

    w_blocks = block_iota_witness(k0, 9)        # iota_k0 -> iota_{9 k0}
    w_drop = three_conjugates_iota(k1, 9 * k0).witness
    w_back = compose_witnesses(compose_witnesses(w_blocks, w_drop),
                               back_k1.witness)
    chain = [
        ChainLink(sigma.label, _iota_label(k0), 3, fwd.witness),
        ChainLink(_iota_label(k0), _iota_label(9 * k0), 9, w_blocks),
        ChainLink(_iota_label(9 * k0), _iota_label(k1), 3, w_drop),
        ChainLink(_iota_label(k1), sigma.label, 3, back_k1.witness),
        ChainLink(_iota_label(k0), sigma.label, 81, w_back, derived=True),
    ]

    l = 0
    while 3 ** (l + 1) <= k0:
        l += 1
    snap: list[ChainLink] = []
    if 3 ** l != k0:
        s = 3 ** l
        w_to = three_conjugates_iota(s, k0).witness       # iota_k0 -> iota_s
        w_up = block_iota_witness(s, 3)                   # iota_s -> iota_{3s}
        w_down = three_conjugates_iota(k0, 3 * s).witness
        w_from = compose_witnesses(w_up, w_down)          # iota_s -> iota_k0
        snap = [
            ChainLink(_iota_label(k0), _iota_label(s), 3, w_to),
            ChainLink(_iota_label(s), _iota_label(3 * s), 3, w_up),
            ChainLink(_iota_label(3 * s), _iota_label(k0), 3, w_down),
            ChainLink(_iota_label(s), _iota_label(k0), 9, w_from, derived=True),
        ]

    nu = sigma.nu
    bounds = {
        f"k0={k0} >= ceil(nu/6)={ceil(nu / 6)}": k0 >= ceil(nu / 6),
        f"k0={k0} odd": k0 % 2 == 1,
        f"k1={k1} <= nu={nu}": k1 <= nu,
        f"k1={k1} odd": k1 % 2 == 1,
        f"k1={k1} <= 9*k0={9 * k0}": k1 <= 9 * k0,
        f"3^{l}={3 ** l} <= k0={k0} < 3^{l + 1}={3 ** (l + 1)}":
            3 ** l <= k0 < 3 ** (l + 1),
    }
    return DensityCertificate(sigma, k0=k0, k1=k1, nearest_skeleton=l,
                              chain=chain, snap=snap,
                              radius_bound=log(81), bounds=bounds)


def density_sweep(max_support: int,
                  budget: Budget = DEFAULT_BUDGET) -> list[DensityCertificate]:
    """Density certificate for every odd type with nu <= max_support."""
    return [density_certificate(p, budget) for p in enumerate_points(max_support)]


# ---------------------------------------------------------------------------
# the half-line comparison

def qi_report(points: list[SpacePoint],
              budget: Budget = DEFAULT_BUDGET) -> dict:
    """Empirical comparison of the space against the half line.

    For each point, the distance to [iota_1] and to the certificate's
    skeleton point, certified where possible and bracketed otherwise; then
    a fitted band A*x - B <= d <= A*x + B against x = log nu.  This is an
    illustration of the quasi-isometry at small support, not a proof.
    """
    iota1 = CycleType([2])
    rows = []
    for p in points:
        cert = density_certificate(p, budget)
        d0 = tsuboi_d(p.type, iota1, budget=budget)
        sk = cert.skeleton_point
        if sk.type == p.type:
            d_sk_lo, d_sk_hi, d_sk_cert = 1, 1, True
        else:
            dsk = tsuboi_d(p.type, sk.type, budget=budget)
            d_sk_lo, d_sk_hi = dsk.q_max_lower, dsk.q_max_upper
            d_sk_cert = dsk.certified
        rows.append({
            "type": p.label, "nu": p.nu, "x_log_nu": log(p.nu),
            "q_to_iota1_lower": _num(d0.q_max_lower),
            "q_to_iota1_upper": _num(d0.q_max_upper),
            "d_to_iota1_certified": d0.certified,
            "skeleton_point": sk.label,
            "q_to_skeleton_lower": _num(d_sk_lo),
            "q_to_skeleton_upper": _num(d_sk_hi),
            "d_to_skeleton_certified": d_sk_cert,
        })

    # fit d(p, iota_1) ~ A * log(nu) with the band wide enough to contain
    # every finite bracket end; points with an infinite upper end are
    # reported but left out of the band
    xs, lows, highs, excluded = [], [], [], []
    for r in rows:
        lo, hi = r["q_to_iota1_lower"], r["q_to_iota1_upper"]
        if hi == "inf":
            excluded.append(r["type"])
            continue
        xs.append(r["x_log_nu"])
        lows.append(log(lo) if lo != "inf" and lo > 0 else 0.0)
        highs.append(log(hi) if hi > 0 else 0.0)
    if xs and sum(x * x for x in xs) > 0:
        mids = [(a + b) / 2 for a, b in zip(lows, highs)]
        slope = sum(x * y for x, y in zip(xs, mids)) / sum(x * x for x in xs)
        band = 0.0
        deviation = 0.0
        for x, lo_v, hi_v in zip(xs, lows, highs):
            band = max(band, slope * x - lo_v, hi_v - slope * x)
            deviation = max(deviation, abs((lo_v + hi_v) / 2 - slope * x))
    else:
        slope, band, deviation = 0.0, 0.0, 0.0
    return {
        "label": "empirical illustration, not a proof",
        "points": rows,
        "fit": {"A": slope, "B": band, "form": "A*x - B <= d <= A*x + B",
                "x": "log nu", "max_mid_deviation": deviation,
                "points_used": len(xs), "excluded": excluded},
    }
