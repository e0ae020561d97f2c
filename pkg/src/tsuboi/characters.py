"""Exact character theory of the finite symmetric groups.

Everything is integer or rational arithmetic; no floating point.  Classes
of S_n are named by partitions of n (weakly decreasing positive parts);
a sparse CycleType corresponds to the partition obtained by padding with
1s.  Character values come from the Murnaghan-Nakayama recursion run on
beta-sets (first-column hook encodings), with memoization and an optional
on-disk cache controlled by the TSUBOI_CACHE_DIR environment variable.
"""
from __future__ import annotations

import json
import math
import os
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .perm import CycleType

Partition = tuple[int, ...]


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse lexicographic order, (n,) first."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out: list[Partition] = []

    def rec(remaining: int, cap: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        for part in range(min(cap, remaining), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(n, n, [])
    return out


def partition_str(p: Partition) -> str:
    """Notation like "3+2+1"; the empty partition prints as "0"."""
    return "+".join(str(x) for x in p) if p else "0"


def parse_partition(text: str) -> Partition:
    """Inverse of partition_str."""
    s = text.strip()
    if s in ("", "0"):
        return ()
    parts = tuple(int(t) for t in s.split("+"))
    if any(x < 1 for x in parts) or list(parts) != sorted(parts, reverse=True):
        raise ValueError(f"not a partition: {text!r}")
    return parts


def type_to_partition(t: CycleType, n: int) -> Partition:
    return t.padded(n)


def partition_to_type(p: Partition) -> CycleType:
    return CycleType(x for x in p if x >= 2)


def centralizer_order(p: Partition) -> int:
    """Product of i**m_i * m_i! over the part multiplicities m_i."""
    out = 1
    mult: dict[int, int] = {}
    for x in p:
        mult[x] = mult.get(x, 0) + 1
    for i, m in mult.items():
        out *= i ** m * math.factorial(m)
    return out


def class_size(t: CycleType, n: int) -> int:
    """Number of permutations of S_n with cycle type t."""
    return math.factorial(n) // centralizer_order(t.padded(n))


def _beta_set(lam: Partition) -> tuple[int, ...]:
    """First-column hook encoding: lam_i + (rows - 1 - i), strictly decreasing."""
    rows = len(lam)
    return tuple(lam[i] + (rows - 1 - i) for i in range(rows))


def _partition_from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    rows = len(beta)
    lam = [beta[i] - (rows - 1 - i) for i in range(rows)]
    return tuple(x for x in lam if x > 0)


@lru_cache(maxsize=None)
def mn_character(lam: Partition, mu: Partition) -> int:
    """Irreducible character chi_lam evaluated on the class mu.

    Both arguments are partitions of the same n.  Border strips are
    removed for the largest remaining part of mu first; a strip of size r
    is a beta-set move b -> b - r with sign (-1)**(number of beta values
    jumped over).
    """
    if sum(lam) != sum(mu):
        raise ValueError("partitions have different sizes")
    if not mu:
        return 1
    r = mu[0]
    rest = tuple(sorted(mu[1:], reverse=True))
    beta = list(_beta_set(lam))
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in beta_set:
            continue
        crossed = sum(1 for c in beta if nb < c < b)
        new_beta = [nb if c == b else c for c in beta]
        sub = mn_character(_partition_from_beta(new_beta), rest)
        total += (-sub if crossed % 2 else sub)
    return total


def hook_length_dimension(lam: Partition) -> int:
    """dim chi_lam = n! / product of hook lengths (independent of MN)."""
    n = sum(lam)
    if n == 0:
        return 1
    cols = [0] * lam[0]
    for row_len in lam:
        for j in range(row_len):
            cols[j] += 1
    prod = 1
    for i, row_len in enumerate(lam):
        for j in range(row_len):
            prod *= (row_len - j) + (cols[j] - i) - 1
    return math.factorial(n) // prod


class CharacterTable:
    """Full table for one S_n: values[lam_index][mu_index], exact ints."""

    def __init__(self, n: int):
        self.n = n
        self.partitions = enumerate_partitions(n)
        self.index = {p: i for i, p in enumerate(self.partitions)}
        self.class_sizes = [math.factorial(n) // centralizer_order(p)
                            for p in self.partitions]
        cached = _load_cached_table(n)
        if cached is not None:
            self.values = cached
        else:
            self.values = [[mn_character(lam, mu) for mu in self.partitions]
                           for lam in self.partitions]
            _store_cached_table(n, self.values)

    def chi(self, lam: Partition, mu: Partition) -> int:
        return self.values[self.index[lam]][self.index[mu]]

    def dimension(self, lam: Partition) -> int:
        return self.chi(lam, (1,) * self.n if self.n else ())


def _cache_path(n: int) -> str | None:
    root = os.environ.get("TSUBOI_CACHE_DIR")
    if not root:
        return None
    return os.path.join(root, f"chartable_{n}.json")


def _load_cached_table(n: int) -> list[list[int]] | None:
    path = _cache_path(n)
    if not path or not os.path.exists(path):
        return None
    try:
        with open(path) as fh:
            doc = json.load(fh)
        if doc.get("n") == n:
            return [[int(v) for v in row] for row in doc["values"]]
    except (OSError, ValueError, KeyError):
        pass
    return None


def _store_cached_table(n: int, values: list[list[int]]) -> None:
    path = _cache_path(n)
    if not path:
        return
    os.makedirs(os.path.dirname(path), exist_ok=True)
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump({"n": n, "values": values}, fh)
    os.replace(tmp, path)


@lru_cache(maxsize=32)
def character_table(n: int) -> CharacterTable:
    return CharacterTable(n)


def verify_orthogonality(n: int) -> None:
    """Row and column orthogonality with exact arithmetic; raises on failure."""
    tab = character_table(n)
    parts = tab.partitions
    g = math.factorial(n)
    for i, lam in enumerate(parts):
        for j in range(i, len(parts)):
            s = sum(tab.class_sizes[k] * tab.values[i][k] * tab.values[j][k]
                    for k in range(len(parts)))
            expected = g if i == j else 0
            if s != expected:
                raise ArithmeticError(f"row orthogonality fails at {lam}, {parts[j]}")
    for i in range(len(parts)):
        for j in range(i, len(parts)):
            s = sum(tab.values[k][i] * tab.values[k][j] for k in range(len(parts)))
            expected = g // tab.class_sizes[i] if i == j else 0
            if s != expected:
                raise ArithmeticError(f"column orthogonality fails at {i}, {j}")


def verify_hook_dimensions(n: int) -> None:
    """Cross-check MN dimensions against the hook length formula."""
    tab = character_table(n)
    for lam in tab.partitions:
        if tab.dimension(lam) != hook_length_dimension(lam):
            raise ArithmeticError(f"dimension mismatch at {lam}")


def product_classes(a: CycleType, b: CycleType, n: int,
                    want_counts: bool = False):
    """Classes c with nonzero structure constant in Cl_a * Cl_b inside S_n.

    With want_counts, returns {CycleType: count} where count is the number
    of ways to write a fixed u in Cl_c as g*h with g in Cl_a, h in Cl_b.
    Without, returns the set of types.  Exact rational arithmetic; every
    constant is checked to be a nonnegative integer and the counts are
    checked against |Cl_a|*|Cl_b|.
    """
    if a.nu > n or b.nu > n:
        raise ValueError("types do not fit in the ambient group")
    tab = character_table(n)
    pa, pb = a.padded(n), b.padded(n)
    ia, ib = tab.index[pa], tab.index[pb]
    ca, cb = tab.class_sizes[ia], tab.class_sizes[ib]
    g = math.factorial(n)
    # work over integers: sum chi(a)chi(b)chi(c) * (n!/dim) and divide once
    id_col = tab.index[(1,) * n] if n else 0
    cofactors = [g // row[id_col] for row in tab.values]
    ab = [row[ia] * row[ib] * cof for row, cof in zip(tab.values, cofactors)]
    counts: dict[CycleType, int] = {}
    total = 0
    for ic, pc in enumerate(tab.partitions):
        s = sum(t * row[ic] for t, row in zip(ab, tab.values))
        num = ca * cb * s
        # coeff = ca*cb/g * sum chi/dim = num / g**2
        coeff, rem = divmod(num, g * g)
        if rem or coeff < 0:
            raise ArithmeticError(
                f"structure constant not a nonneg integer: {Fraction(num, g * g)}")
        if coeff:
            counts[partition_to_type(pc)] = coeff
            total += coeff * tab.class_sizes[ic]
    if total != ca * cb:
        raise ArithmeticError("structure constants do not sum to |Cl_a|*|Cl_b|")
    return counts if want_counts else set(counts)


def chartable_rows(n: int) -> list[list[str]]:
    """CSV-ready table: header row of class partitions, then one row per
    irreducible labeled by its partition, then a class-size footer row."""
    tab = character_table(n)
    header = ["partition"] + [partition_str(p) for p in tab.partitions]
    rows = [header]
    for i, lam in enumerate(tab.partitions):
        rows.append([partition_str(lam)] + [str(v) for v in tab.values[i]])
    rows.append(["class_size"] + [str(s) for s in tab.class_sizes])
    return rows
