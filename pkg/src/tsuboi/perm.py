"""Finitely supported permutations of the positive integers.

A permutation is stored as a sparse mapping on points 1, 2, 3, ... with
fixed points omitted, so every object lives simultaneously in any S_N
large enough to contain its support and in the direct limit S_inf.

Composition convention, used everywhere in this package: the product
``a * b`` applies ``b`` first, i.e. ``(a * b)(p) == a(b(p))``.  Products
written left to right in factor lists are composed the same way; the
rightmost factor acts first.  Conjugation is ``a ^ h = h * a * h**-1``.

Cycle notation is 1-based: ``"(1 2)(3 4)"`` parses to the double
transposition, ``"()"`` or ``""`` to the identity.
"""
from __future__ import annotations

import itertools
import re
from typing import Iterable, Iterator, Sequence


class CycleType(tuple):
    """Multiset of cycle lengths >= 2, stored sorted in decreasing order.

    The empty type () is the class of the identity.  Fixed points are
    never recorded, so a type is ambient-free: it names one conjugacy
    class of S_inf and, padded with 1s, one class of any S_N with
    N >= nu (nu = sum of the lengths = size of the support).
    """

    def __new__(cls, lengths: Iterable[int] = ()) -> "CycleType":
        parts = sorted((int(l) for l in lengths), reverse=True)
        for l in parts:
            if l < 2:
                raise ValueError(f"cycle length {l} < 2 in cycle type")
        return super().__new__(cls, parts)

    @property
    def nu(self) -> int:
        """Support size: the number of points moved."""
        return sum(self)

    @property
    def sign(self) -> int:
        """Sign of any permutation of this type: (-1)**(nu - #cycles)."""
        return -1 if (self.nu - len(self)) % 2 else 1

    @property
    def is_odd(self) -> bool:
        return self.sign == -1

    def padded(self, n: int) -> tuple[int, ...]:
        """The type as a partition of n, padding with fixed points."""
        if self.nu > n:
            raise ValueError(f"type {self} does not fit in S_{n}")
        return tuple(self) + (1,) * (n - self.nu)

    def __str__(self) -> str:
        return "+".join(str(l) for l in self) if self else "e"

    def __repr__(self) -> str:
        return f"CycleType({list(self)})"


class Permutation:
    """An immutable, finitely supported permutation of {1, 2, 3, ...}."""

    __slots__ = ("_map", "_hash")

    def __init__(self, mapping: dict[int, int] | None = None):
        m = {}
        if mapping:
            for k, v in mapping.items():
                k, v = int(k), int(v)
                if k < 1 or v < 1:
                    raise ValueError("points must be positive integers")
                if k != v:
                    m[k] = v
        if sorted(m) != sorted(m.values()):
            raise ValueError("mapping is not a bijection on its support")
        self._map = m
        self._hash = hash(frozenset(m.items()))

    @staticmethod
    def identity() -> "Permutation":
        return Permutation()

    @staticmethod
    def from_cycles(cycles: Sequence[Sequence[int]]) -> "Permutation":
        """Build from disjoint cycles given as point sequences."""
        m: dict[int, int] = {}
        seen: set[int] = set()
        for cyc in cycles:
            cyc = [int(p) for p in cyc]
            for p in cyc:
                if p in seen:
                    raise ValueError(f"point {p} appears in more than one position")
                seen.add(p)
            if len(cyc) < 2:
                continue
            for a, b in zip(cyc, cyc[1:]):
                m[a] = b
            m[cyc[-1]] = cyc[0]
        return Permutation(m)

    def __call__(self, p: int) -> int:
        return self._map.get(p, p)

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: self after other (other acts first)."""
        if not isinstance(other, Permutation):
            return NotImplemented
        m = {}
        for p in self._map.keys() | other._map.keys():
            q = self(other(p))
            if q != p:
                m[p] = q
        out = Permutation.__new__(Permutation)
        out._map = m
        out._hash = hash(frozenset(m.items()))
        return out

    def __pow__(self, e: int) -> "Permutation":
        if e == 0:
            return Permutation()
        base = self if e > 0 else self.inverse()
        out = base
        for _ in range(abs(e) - 1):
            out = out * base
        return out

    def inverse(self) -> "Permutation":
        out = Permutation.__new__(Permutation)
        out._map = {v: k for k, v in self._map.items()}
        out._hash = hash(frozenset(out._map.items()))
        return out

    def conjugated_by(self, h: "Permutation") -> "Permutation":
        """h * self * h**-1; relabels each point p of self by h(p)."""
        m = {h(p): h(q) for p, q in self._map.items()}
        out = Permutation.__new__(Permutation)
        out._map = m
        out._hash = hash(frozenset(m.items()))
        return out

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self._map)

    @property
    def support_norm(self) -> int:
        """nu: the number of moved points (a conjugation-invariant norm)."""
        return len(self._map)

    @property
    def max_point(self) -> int:
        """Largest moved point, 0 for the identity."""
        return max(self._map, default=0)

    def is_identity(self) -> bool:
        return not self._map

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each rotated to start at its least point,
        listed in increasing order of that point."""
        seen: set[int] = set()
        out = []
        for start in sorted(self._map):
            if start in seen:
                continue
            cyc = [start]
            p = self._map[start]
            while p != start:
                cyc.append(p)
                seen.add(p)
                p = self._map[p]
            seen.add(start)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> CycleType:
        return CycleType(len(c) for c in self.cycles())

    @property
    def sign(self) -> int:
        return self.cycle_type().sign

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self._map == other._map

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation[{format_cycles(self)}]"


# ---------------------------------------------------------------------------
# module-level operation names

def compose(a: Permutation, b: Permutation) -> Permutation:
    """Product a*b under the convention that b acts first."""
    return a * b


def compose_all(factors: Iterable[Permutation]) -> Permutation:
    """Product of a factor list written left to right (rightmost acts first)."""
    out = Permutation()
    for f in factors:
        out = out * f
    return out


def inverse(a: Permutation) -> Permutation:
    return a.inverse()


def conjugate(a: Permutation, h: Permutation) -> Permutation:
    """h * a * h**-1."""
    return a.conjugated_by(h)


def cycle_type(a: Permutation) -> CycleType:
    return a.cycle_type()


def support_norm(a: Permutation) -> int:
    return a.support_norm


def sign(a: Permutation) -> int:
    return a.sign


def canonical_iota(k: int) -> Permutation:
    """iota_k = (1 2)(3 4)...(2k-1 2k); k = 0 gives the identity."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return Permutation({**{2 * i - 1: 2 * i for i in range(1, k + 1)},
                        **{2 * i: 2 * i - 1 for i in range(1, k + 1)}})


def canonical_gamma(n: int) -> Permutation:
    """gamma_n = (1 2 ... n); n <= 1 gives the identity."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n <= 1:
        return Permutation()
    return Permutation.from_cycles([tuple(range(1, n + 1))])


def canonical_rep(t: CycleType) -> Permutation:
    """The packed representative of a type: longest cycles first from point 1.

    canonical_rep(CycleType([3, 2])) == parse_cycles("(1 2 3)(4 5)").
    """
    cycles = []
    p = 1
    for l in t:
        cycles.append(tuple(range(p, p + l)))
        p += l
    return Permutation.from_cycles(cycles)


def find_conjugator(a: Permutation, b: Permutation) -> Permutation | None:
    """Some h with h*a*h**-1 == b, or None when the types differ.

    Cycles of equal length are matched in increasing order of their least
    point; the resulting partial map on supports is completed to a
    finitely supported bijection.
    """
    if a.cycle_type() != b.cycle_type():
        return None
    bya: dict[int, list[tuple[int, ...]]] = {}
    byb: dict[int, list[tuple[int, ...]]] = {}
    for c in a.cycles():
        bya.setdefault(len(c), []).append(c)
    for c in b.cycles():
        byb.setdefault(len(c), []).append(c)
    m: dict[int, int] = {}
    for l, acs in bya.items():
        for ca, cb in zip(acs, byb[l]):
            for p, q in zip(ca, cb):
                m[p] = q
    # close up: points of supp(b) not yet hit must receive the leftovers
    dom_rest = sorted((set(m.values()) | b.support) - set(m))
    img_rest = sorted((set(m) | a.support) - set(m.values()))
    for p, q in zip(dom_rest, img_rest):
        m[p] = q
    return Permutation(m)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> Permutation:
    """Parse 1-based cycle notation like "(1 2)(3 4 5)".

    Separators inside a cycle may be spaces or commas.  The empty string,
    "e", "id" and "()" all denote the identity.  Raises ValueError on
    malformed text or on a point appearing twice.
    """
    s = text.strip()
    if s in ("", "e", "id", "()"):
        return Permutation()
    stripped = _CYCLE_RE.sub("", s)
    if stripped.strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(s):
        toks = [t for t in re.split(r"[\s,]+", body.strip()) if t]
        cyc = []
        for t in toks:
            if not t.isdigit() or int(t) < 1:
                raise ValueError(f"bad point {t!r} in {text!r}")
            cyc.append(int(t))
        cycles.append(cyc)
    return Permutation.from_cycles(cycles)


def format_cycles(a: Permutation) -> str:
    """Cycle notation with least points first; identity prints as "()"."""
    cycs = a.cycles()
    if not cycs:
        return "()"
    return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycs)


# ---------------------------------------------------------------------------
# enumeration helpers used by the search backends

def cycle_arrangements(points: Sequence[int], t: CycleType) -> Iterator[Permutation]:
    """All permutations with cycle type t whose support is exactly set(points).

    Each permutation is produced once.  len(points) must equal t.nu.
    """
    points = sorted(points)
    if len(points) != t.nu:
        raise ValueError("support size does not match the type")

    def rec(remaining: tuple[int, ...], lengths: tuple[int, ...],
            acc: list[tuple[int, ...]]) -> Iterator[list[tuple[int, ...]]]:
        if not lengths:
            yield acc
            return
        lead = remaining[0]
        rest = remaining[1:]
        used_lengths = set()
        for i, l in enumerate(lengths):
            # the least remaining point leads one cycle of each distinct length
            if l in used_lengths:
                continue
            used_lengths.add(l)
            other_lengths = lengths[:i] + lengths[i + 1:]
            for members in itertools.combinations(rest, l - 1):
                member_set = set(members)
                new_rest = tuple(p for p in rest if p not in member_set)
                for order in itertools.permutations(members):
                    yield from rec(new_rest, other_lengths, acc + [(lead,) + order])

    for cycles in rec(tuple(points), tuple(t), []):
        yield Permutation.from_cycles(cycles)


def type_embeddings(t: CycleType, window: Sequence[int]) -> Iterator[Permutation]:
    """All permutations of type t supported inside the given window."""
    window = sorted(window)
    if t.nu > len(window):
        return
    for sup in itertools.combinations(window, t.nu):
        yield from cycle_arrangements(sup, t)
