"""Finite-group engine: conjugacy classes, normal closures, maximum and
maximal normal subgroups, relative-simplicity reports, and the factor-count
norm inside a fixed finite group.

Groups come either from permutation generators (elements enumerated by
closure) or from an explicit multiplication table. Element 0 is always the
identity.
"""

from __future__ import annotations

import csv
import random
import re
from dataclasses import dataclass
from math import inf

from .perm import Permutation, format_cycles, parse_cycles

MAX_ORDER = 20000
LATTICE_ORDER_BOUND = 2000
LATTICE_COUNT_BOUND = 10000


class GroupError(ValueError):
    pass


class FiniteGroup:
    """A finite group with indexed elements; identity at index 0.

    Permutation-backed groups multiply by composing permutations and
    looking the product up; table-backed groups read the table directly.
    """

    def __init__(self, labels: list[str], mul_fn, inv_fn, gens: list[int],
                 name: str, perms: list[Permutation] | None = None):
        self.labels = labels
        self._mul = mul_fn
        self._inv = inv_fn
        self.gens = gens
        self.name = name
        self.perms = perms
        self._classes: list[list[int]] | None = None

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def perm_backed(self) -> bool:
        return self.perms is not None

    def mul(self, i: int, j: int) -> int:
        return self._mul(i, j)

    def inv(self, i: int) -> int:
        return self._inv(i)

    def conj(self, i: int, h: int) -> int:
        """h i h^-1."""
        return self._mul(self._mul(h, i), self._inv(h))

    def element_order(self, i: int) -> int:
        k, cur = 1, i
        while cur != 0:
            cur = self._mul(cur, i)
            k += 1
        return k

    def index_of(self, x) -> int:
        """Resolve an element given as index, label, permutation, or cycle
        string."""
        if isinstance(x, int):
            if not 0 <= x < self.order:
                raise GroupError(f"element index {x} out of range")
            return x
        if isinstance(x, Permutation):
            if not self.perm_backed:
                raise GroupError("group has no permutation realization")
            try:
                return self.perms.index(x)
            except ValueError:
                raise GroupError(f"{format_cycles(x)} is not in {self.name}")
        if isinstance(x, str):
            if x in self.labels:
                return self.labels.index(x)
            if self.perm_backed:
                return self.index_of(parse_cycles(x))
            raise GroupError(f"no element labeled {x!r} in {self.name}")
        raise GroupError(f"cannot interpret {x!r} as a group element")

    # -- structure ---------------------------------------------------------

    def conjugacy_classes(self) -> list[list[int]]:
        """Partition of the element indices, identity class first, then by
        smallest member; conjugation orbit computed over generators."""
        if self._classes is not None:
            return self._classes
        seen = [False] * self.order
        classes = []
        for i in range(self.order):
            if seen[i]:
                continue
            orbit = {i}
            queue = [i]
            while queue:
                cur = queue.pop()
                for g in self.gens:
                    c = self.conj(cur, g)
                    if c not in orbit:
                        orbit.add(c)
                        queue.append(c)
            for j in orbit:
                seen[j] = True
            classes.append(sorted(orbit))
        classes.sort(key=lambda c: c[0])
        self._classes = classes
        return classes

    def class_of(self, i: int) -> list[int]:
        for c in self.conjugacy_classes():
            if i in c:
                return c
        raise GroupError(f"element index {i} out of range")


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by its element-index set; `normal` is verified at
    construction, never assumed."""
    group: FiniteGroup
    elements: frozenset[int]
    normal: bool

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> int:
        return self.group.order // self.order

    @property
    def is_trivial(self) -> bool:
        return self.elements == {0}

    @property
    def is_whole(self) -> bool:
        return self.order == self.group.order

    def __contains__(self, i: int) -> bool:
        return i in self.elements

    def __le__(self, other: "Subgroup") -> bool:
        return self.elements <= other.elements

    def describe(self) -> dict:
        reps = sorted(self.elements)[:8]
        return {"order": self.order, "index": self.index,
                "normal": self.normal,
                "sample": [self.group.labels[i] for i in reps]}


def _check_subgroup(G: FiniteGroup, elems: frozenset[int]) -> Subgroup:
    if 0 not in elems:
        raise GroupError("subgroup misses the identity")
    normal = all(G.conj(i, g) in elems for i in elems for g in G.gens)
    return Subgroup(G, elems, normal)


def subgroup_closure(G: FiniteGroup, gens) -> Subgroup:
    """Smallest subgroup containing the given element indices."""
    gens = [G.index_of(g) for g in gens]
    elems = {0}
    frontier = [0]
    while frontier:
        new = []
        for i in frontier:
            for g in gens:
                p = G.mul(i, g)
                if p not in elems:
                    elems.add(p)
                    new.append(p)
        frontier = new
    return _check_subgroup(G, frozenset(elems))


def normal_closure(G: FiniteGroup, g) -> Subgroup:
    """Smallest normal subgroup containing g: the subgroup generated by
    the full conjugation orbit of g."""
    i = G.index_of(g)
    return subgroup_closure(G, G.class_of(i))


# ---------------------------------------------------------------------------
# constructors

def _from_perm_elements(elements: list[Permutation], gens_idx: list[int],
                        name: str) -> FiniteGroup:
    index = {p: i for i, p in enumerate(elements)}
    labels = [format_cycles(p) for p in elements]

    def mul(i: int, j: int) -> int:
        return index[elements[i] * elements[j]]

    def inv(i: int) -> int:
        return index[elements[i].inverse()]

    return FiniteGroup(labels, mul, inv, gens_idx, name, perms=elements)


def from_generators(gens: list[Permutation], name: str) -> FiniteGroup:
    """Enumerate the group generated by permutations, breadth first."""
    gens = [g for g in gens if not g.is_identity()]
    elements = [Permutation()]
    seen = {Permutation()}
    frontier = [Permutation()]
    while frontier:
        new = []
        for p in frontier:
            for g in gens:
                q = p * g
                if q not in seen:
                    if len(seen) >= MAX_ORDER:
                        raise GroupError(
                            f"generated group exceeds order {MAX_ORDER}")
                    seen.add(q)
                    elements.append(q)
                    new.append(q)
        frontier = new
    gens_idx = [elements.index(g) for g in gens] or [0]
    return _from_perm_elements(elements, gens_idx, name)


def from_table(labels: list[str], table: list[list[int]],
               name: str) -> FiniteGroup:
    """Group from an explicit multiplication table (indices into labels).

    Checks the latin-square property and inverses exactly, associativity by
    deterministic random spot-checks; reorders so the identity is index 0.
    """
    n = len(labels)
    if n > MAX_ORDER:
        raise GroupError(f"table order {n} exceeds bound {MAX_ORDER}")
    if any(len(row) != n for row in table) or len(table) != n:
        raise GroupError("multiplication table is not square")
    e = None
    for i in range(n):
        if all(table[i][j] == j for j in range(n)) and \
                all(table[j][i] == j for j in range(n)):
            e = i
            break
    if e is None:
        raise GroupError("table has no identity element")
    if e != 0:
        # swap labels/indices so the identity sits at 0
        perm = list(range(n))
        perm[0], perm[e] = e, 0
        inv_perm = perm
        labels = [labels[perm[i]] for i in range(n)]
        table = [[inv_perm[table[perm[i]][perm[j]]] for j in range(n)]
                 for i in range(n)]
    full = set(range(n))
    for i in range(n):
        if set(table[i]) != full or {table[j][i] for j in range(n)} != full:
            raise GroupError("table is not a latin square")
    inv_row = [None] * n
    for i in range(n):
        for j in range(n):
            if table[i][j] == 0:
                inv_row[i] = j
                break
        if inv_row[i] is None or table[inv_row[i]][i] != 0:
            raise GroupError(f"element {labels[i]} has no two-sided inverse")
    rng = random.Random(0)
    checks = min(5000, n ** 3)
    for _ in range(checks):
        a, b, c = (rng.randrange(n) for _ in range(3))
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise GroupError("associativity spot-check failed")

    def mul(i: int, j: int) -> int:
        return table[i][j]

    def inv(i: int) -> int:
        return inv_row[i]

    return FiniteGroup(labels, mul, inv, list(range(n)), name)


def symmetric(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("symmetric group needs n >= 1")
    gens = []
    if n >= 2:
        gens.append(parse_cycles("(1 2)"))
    if n >= 3:
        gens.append(Permutation.from_cycles([tuple(range(1, n + 1))]))
    return from_generators(gens, f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("alternating group needs n >= 1")
    gens = []
    if n >= 3:
        gens.append(parse_cycles("(1 2 3)"))
    if n >= 4:
        long = tuple(range(1, n + 1)) if n % 2 == 1 else tuple(range(2, n + 1))
        gens.append(Permutation.from_cycles([long]))
    return from_generators(gens, f"A{n}")


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic group needs n >= 1")
    gens = [] if n == 1 else [Permutation.from_cycles([tuple(range(1, n + 1))])]
    return from_generators(gens, f"C{n}")


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group of the given order (2m = symmetries of an m-gon)."""
    if order < 4 or order % 2:
        raise GroupError("dihedral group needs an even order >= 4")
    m = order // 2
    if m == 2:
        gens = [parse_cycles("(1 2)"), parse_cycles("(3 4)")]
    else:
        rot = Permutation.from_cycles([tuple(range(1, m + 1))])
        refl = Permutation({i: (m + 2 - i - 1) % m + 1 for i in range(2, m + 1)
                            if i != (m + 2 - i - 1) % m + 1})
        gens = [rot, refl]
    G = from_generators(gens, f"D{order}")
    if G.order != order:
        raise GroupError(f"dihedral construction drifted: got {G.order}")
    return G


def direct_product(A: FiniteGroup, B: FiniteGroup) -> FiniteGroup:
    """A x B; permutation groups act on disjoint points, table groups get
    a product table."""
    if A.order * B.order > MAX_ORDER:
        raise GroupError(f"product order {A.order * B.order} exceeds bound")
    name = f"{A.name}x{B.name}"
    if A.perm_backed and B.perm_backed:
        shift = max((p.max_point for p in A.perms), default=0)
        moved = [Permutation({k + shift: p(k) + shift for k in p.support})
                 for p in (B.perms[i] for i in B.gens)]
        gens = [A.perms[i] for i in A.gens] + moved
        G = from_generators(gens, name)
        if G.order != A.order * B.order:
            raise GroupError("direct product drifted: generators interact")
        return G
    na, nb = A.order, B.order
    labels = [f"{A.labels[i]}|{B.labels[j]}" for i in range(na)
              for j in range(nb)]
    table = [[0] * (na * nb) for _ in range(na * nb)]
    for i1 in range(na):
        for j1 in range(nb):
            for i2 in range(na):
                for j2 in range(nb):
                    table[i1 * nb + j1][i2 * nb + j2] = \
                        A.mul(i1, i2) * nb + B.mul(j1, j2)
    return from_table(labels, table, name)


_NAME_RE = re.compile(r"^([SACD])(\d+)$", re.IGNORECASE)


def group_from_name(spec: str) -> FiniteGroup:
    """Parse "S4", "A5", "C6", "D8", products like "C2xC4", or "@file".

    Letters S and A take the number of points, C the order, D the order of
    the whole dihedral group. An @-prefixed path loads a group file.
    """
    spec = spec.strip()
    if spec.startswith("@"):
        return load_group_file(spec[1:])
    factors = []
    for part in spec.split("x"):
        m = _NAME_RE.match(part.strip())
        if not m:
            raise GroupError(f"cannot parse group name {part.strip()!r}")
        kind, num = m.group(1).upper(), int(m.group(2))
        factors.append({"S": symmetric, "A": alternating,
                        "C": cyclic, "D": dihedral}[kind](num))
    G = factors[0]
    for H in factors[1:]:
        G = direct_product(G, H)
    return G


def load_group_file(path: str) -> FiniteGroup:
    """Load a group from a file.

    Generator format: first line the ambient point count (optionally
    "N=<int>"), then one permutation in cycle notation per line.  Table
    format: CSV whose first row lists element labels and whose cell (i, j)
    holds the label of row_i * col_j.
    """
    with open(path) as fh:
        text = fh.read()
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GroupError(f"{path} is empty")
    stem = path.rsplit("/", 1)[-1].rsplit(".", 1)[0]
    head = lines[0]
    m = re.match(r"^(?:N\s*=\s*)?(\d+)$", head)
    if m:
        n = int(m.group(1))
        gens = [parse_cycles(ln) for ln in lines[1:]]
        for g in gens:
            if g.max_point > n:
                raise GroupError(f"generator {format_cycles(g)} leaves "
                                 f"the declared {n} points")
        return from_generators(gens, stem)
    rows = list(csv.reader(text.splitlines()))
    rows = [r for r in rows if any(cell.strip() for cell in r)]
    labels = [c.strip() for c in rows[0]]
    if len(rows) != len(labels) + 1:
        raise GroupError("table CSV needs one row per element plus a header")
    index = {lab: i for i, lab in enumerate(labels)}
    if len(index) != len(labels):
        raise GroupError("duplicate element labels in table header")
    table = []
    for r in rows[1:]:
        if len(r) != len(labels):
            raise GroupError("table row width does not match header")
        table.append([index[c.strip()] for c in r])
    return from_table(labels, table, stem)


# ---------------------------------------------------------------------------
# normal-subgroup structure

def maximum_normal_subgroup(G: FiniteGroup) -> Subgroup | None:
    """The normal subgroup containing every proper normal subgroup, if one
    exists; None otherwise; the trivial subgroup for simple groups.

    Let N be the subgroup generated by the union of all proper normal
    closures of class representatives. N is normal (generated by a
    conjugation-closed set). If N is proper, every proper normal M lies
    inside it: each m in M has normal closure inside M, hence proper,
    hence contained in the union. If N is the whole group, no maximum can
    exist, since it would have to contain each of those closures and so
    all of N.
    """
    if G.order == 1:
        raise GroupError("the trivial group has no proper subgroups")
    union: set[int] = set()
    for cls in G.conjugacy_classes():
        if cls == [0]:
            continue
        ncl = subgroup_closure(G, cls)
        if not ncl.is_whole:
            union |= ncl.elements
    if not union:
        return _check_subgroup(G, frozenset({0}))
    N = subgroup_closure(G, union)
    return None if N.is_whole else N


def all_normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Every normal subgroup, as joins of class closures; bounded."""
    if G.order > LATTICE_ORDER_BOUND:
        raise GroupError(f"order {G.order} exceeds the lattice bound "
                         f"{LATTICE_ORDER_BOUND}")
    atoms = []
    seen_atoms = set()
    for cls in G.conjugacy_classes():
        if cls == [0]:
            continue
        ncl = subgroup_closure(G, cls)
        if ncl.elements not in seen_atoms:
            seen_atoms.add(ncl.elements)
            atoms.append(ncl)
    found: dict[frozenset[int], Subgroup] = {
        frozenset({0}): _check_subgroup(G, frozenset({0}))}
    frontier = list(found.values())
    while frontier:
        new = []
        for sub in frontier:
            for atom in atoms:
                if atom.elements <= sub.elements:
                    continue
                join = subgroup_closure(G, sub.elements | atom.elements)
                if join.elements not in found:
                    if len(found) >= LATTICE_COUNT_BOUND:
                        raise GroupError("normal-subgroup lattice exceeds "
                                         f"{LATTICE_COUNT_BOUND} subgroups")
                    found[join.elements] = join
                    new.append(join)
        frontier = new
    return sorted(found.values(), key=lambda s: (s.order, sorted(s.elements)))


def maximal_normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Proper normal subgroups with nothing normal strictly between them
    and the whole group; each quotient is checked simple."""
    lattice = [s for s in all_normal_subgroups(G) if not s.is_whole]
    maximal = [s for s in lattice
               if not any(s.elements < t.elements for t in lattice)]
    for s in maximal:
        Q = quotient_group(G, s)
        if Q.order > 1 and not _is_simple(Q):
            raise GroupError("internal: quotient by a maximal normal "
                             "subgroup is not simple")
    return maximal


def _is_simple(G: FiniteGroup) -> bool:
    if G.order == 1:
        return False
    top = maximum_normal_subgroup(G)
    return top is not None and top.is_trivial


def quotient_group(G: FiniteGroup, N: Subgroup) -> FiniteGroup:
    """G/N as a table group; cosets are labeled by their smallest member."""
    if not N.normal:
        raise GroupError("cannot quotient by a non-normal subgroup")
    coset_of = {}
    reps = []
    for i in range(G.order):
        if i in coset_of:
            continue
        members = sorted(G.mul(i, m) for m in N.elements)
        rep = members[0]
        reps.append(rep)
        for j in members:
            coset_of[j] = rep
    rep_index = {r: k for k, r in enumerate(reps)}
    labels = [f"[{G.labels[r]}]" for r in reps]
    table = [[rep_index[coset_of[G.mul(a, b)]] for b in reps] for a in reps]
    return from_table(labels, table, f"{G.name}/N{N.order}")


# ---------------------------------------------------------------------------
# the norm inside a finite group

def q_in_group(G: FiniteGroup, x, y) -> int | float:
    """Fewest factors conjugate to x or x^-1 multiplying to y; 0 for the
    identity target, inf outside the normal closure of x."""
    xi, yi = G.index_of(x), G.index_of(y)
    if yi == 0:
        return 0
    multipliers = sorted(set(G.class_of(xi)) | set(G.class_of(G.inv(xi))))
    dist = {0: 0}
    frontier = [0]
    while frontier:
        new = []
        for i in frontier:
            d = dist[i]
            for c in multipliers:
                j = G.mul(i, c)
                if j not in dist:
                    dist[j] = d + 1
                    if j == yi:
                        return d + 1
                    new.append(j)
        frontier = new
    return inf


def _eccentricity(G: FiniteGroup, xi: int) -> int | float:
    """max over f in G of q_x(f): single BFS from the identity."""
    multipliers = sorted(set(G.class_of(xi)) | set(G.class_of(G.inv(xi))))
    dist = {0: 0}
    frontier = [0]
    depth = 0
    while frontier:
        depth += 1
        new = []
        for i in frontier:
            for c in multipliers:
                j = G.mul(i, c)
                if j not in dist:
                    dist[j] = depth
                    new.append(j)
        frontier = new
    if len(dist) < G.order:
        return inf
    return max(dist.values())


# ---------------------------------------------------------------------------
# reports

def relative_simplicity_report(G: FiniteGroup) -> dict:
    """Decide relative simplicity and certify the pieces.

    When the maximum normal subgroup N exists: every class representative
    outside N must normally generate G, the quotient G/N must be simple,
    and the uniform constant k = max over f in G, g outside N of q_g(f)
    is computed by per-class breadth-first search.
    """
    if G.order == 1:
        raise GroupError("the trivial group has no proper subgroups")
    N = maximum_normal_subgroup(G)
    report: dict = {"group": G.name, "order": G.order}
    if N is None:
        maximal = maximal_normal_subgroups(G)
        report.update({
            "relatively_simple": False,
            "maximum_normal_subgroup": None,
            "maximal_normal_subgroups": [s.describe() for s in maximal],
        })
        return report
    outside = [cls[0] for cls in G.conjugacy_classes() if cls[0] not in N]
    all_generate = all(normal_closure(G, r).is_whole for r in outside)
    Q = quotient_group(G, N)
    ecc = {r: _eccentricity(G, r) for r in outside}
    k = max(ecc.values()) if ecc else 0
    report.update({
        "relatively_simple": True,
        "maximum_normal_subgroup": N.describe(),
        "every_outside_class_normally_generates": all_generate,
        "quotient_order": Q.order,
        "quotient_simple": _is_simple(Q),
        "uniform_k": k if k != inf else "inf",
        "per_class_k": {G.labels[r]: (v if v != inf else "inf")
                        for r, v in ecc.items()},
    })
    if not all_generate or not report["quotient_simple"] or k == inf:
        raise GroupError("internal: maximum normal subgroup failed "
                         "its certification checks")
    return report


def maximal_containment_check(G: FiniteGroup) -> dict:
    """For every proper normal subgroup, exhibit a maximal normal subgroup
    containing it."""
    lattice = [s for s in all_normal_subgroups(G) if not s.is_whole]
    maximal = [s for s in lattice
               if not any(s.elements < t.elements for t in lattice)]
    rows = []
    all_ok = True
    for s in lattice:
        cover = next((m for m in maximal if s.elements <= m.elements), None)
        ok = cover is not None
        all_ok &= ok
        rows.append({"subgroup_order": s.order,
                     "maximal_cover_order": cover.order if ok else None,
                     "ok": ok})
    return {"group": G.name, "proper_normal_subgroups": len(lattice),
            "maximal": [m.order for m in maximal], "rows": rows,
            "all_ok": all_ok}
