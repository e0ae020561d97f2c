import itertools
import math

import pytest

from tsuboi.characters import (CharacterTable, centralizer_order,
                               character_table, chartable_rows, class_size,
                               enumerate_partitions, hook_length_dimension,
                               mn_character, parse_partition, partition_str,
                               product_classes, verify_hook_dimensions,
                               verify_orthogonality)
from tsuboi.perm import CycleType, Permutation, cycle_type, type_embeddings


def test_partition_counts():
    assert enumerate_partitions(0) == [()]
    assert len(enumerate_partitions(4)) == 5
    assert len(enumerate_partitions(8)) == 22
    for p in enumerate_partitions(6):
        assert list(p) == sorted(p, reverse=True)
        assert sum(p) == 6


def test_partition_order_reverse_lex():
    parts = enumerate_partitions(4)
    assert parts == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_partition_str_roundtrip():
    for p in enumerate_partitions(7):
        assert parse_partition(partition_str(p)) == p


def test_trivial_and_sign_characters():
    n = 6
    for mu in enumerate_partitions(n):
        assert mn_character((n,), mu) == 1
        expected_sign = (-1) ** (n - len(mu))
        assert mn_character(tuple([1] * n), mu) == expected_sign


def test_class_sizes():
    assert class_size(CycleType(), 5) == 1
    assert class_size(CycleType([2]), 4) == 6
    total = 0
    for mu in enumerate_partitions(6):
        t = CycleType([p for p in mu if p > 1])
        total += class_size(t, 6)
    assert total == math.factorial(6)


def test_centralizer_times_class_size():
    for mu in enumerate_partitions(7):
        assert centralizer_order(mu) * math.factorial(7) // centralizer_order(mu) == math.factorial(7)
        t = CycleType([p for p in mu if p > 1])
        assert class_size(t, 7) * centralizer_order(mu) == math.factorial(7)


def test_orthogonality_small():
    for n in range(2, 7):
        verify_orthogonality(n)


def test_hook_dimensions_small():
    for n in range(2, 7):
        verify_hook_dimensions(n)
    assert hook_length_dimension((2, 1)) == 2
    assert hook_length_dimension((3, 2)) == 5


def test_s3_table_values():
    tab = character_table(3)
    # classes ordered by enumerate_partitions(3): (3,), (2,1), (1,1,1)
    assert tab.partitions == [(3,), (2, 1), (1, 1, 1)]
    lookup = {lam: row for lam, row in zip(tab.partitions, tab.values)}
    assert lookup[(3,)] == [1, 1, 1]
    assert lookup[(2, 1)] == [-1, 0, 2]
    assert lookup[(1, 1, 1)] == [1, -1, 1]


def test_product_classes_identity_absorbs():
    # count convention: pairs (g, h) producing one FIXED w in Cl_c, so the
    # identity class acts with coefficient 1 (class sums: C_e * C_b = C_b)
    for b in [CycleType([2]), CycleType([3]), CycleType([2, 2])]:
        out = product_classes(CycleType(), b, 5, want_counts=True)
        assert set(out) == {b}
        assert out[b] == 1
        assert brute_products(CycleType(), b, 5)[b] == 1


def test_product_classes_transpositions_s3():
    out = product_classes(CycleType([2]), CycleType([2]), 3, want_counts=True)
    assert set(out) == {CycleType(), CycleType([3])}
    # 9 ordered products of transpositions in S_3: 3 give id, 6 give 3-cycles
    assert out[CycleType()] == 3
    # count convention: for fixed w in Cl_c, number of (u, v) pairs
    assert out[CycleType([3])] == 3


def brute_products(a: CycleType, b: CycleType, n: int) -> dict[CycleType, int]:
    """Fix w in each class c and count pairs u in Cl_a, v in Cl_b with uv = w."""
    window = list(range(1, n + 1))
    cls_a = list(type_embeddings(a, window))
    cls_b = set(type_embeddings(b, window))
    all_types = {cycle_type(u * v) for u in cls_a for v in cls_b}
    out: dict[CycleType, int] = {}
    for c in all_types:
        w = next(type_embeddings(c, window)) if c else Permutation()
        out[c] = sum(1 for u in cls_a if (u.inverse() * w) in cls_b)
    return out


def test_product_classes_vs_brute_s4():
    parts = enumerate_partitions(4)
    types = [CycleType([p for p in mu if p > 1]) for mu in parts]
    for a, b in itertools.combinations_with_replacement(types, 2):
        want = brute_products(a, b, 4)
        got = product_classes(a, b, 4, want_counts=True)
        assert got == want


def test_product_classes_symmetric_and_mass():
    n = 5
    parts = enumerate_partitions(n)
    types = [CycleType([p for p in mu if p > 1]) for mu in parts]
    for a, b in itertools.combinations(types, 2):
        ab = product_classes(a, b, n, want_counts=True)
        ba = product_classes(b, a, n, want_counts=True)
        assert ab == ba
        assert all(v > 0 for v in ab.values())
        mass = sum(cnt * class_size(c, n) for c, cnt in ab.items())
        assert mass == class_size(a, n) * class_size(b, n)


def test_class_size_rejects_oversized_type():
    with pytest.raises(ValueError):
        class_size(CycleType([4, 3]), 5)


def test_chartable_rows_shape():
    rows = chartable_rows(4)
    assert rows[0][0] == "partition"
    assert len(rows[0]) == 6  # label column + 5 classes
    assert rows[-1][0] == "class_size"
    sizes = [int(v) for v in rows[-1][1:]]
    assert sum(sizes) == 24
    # 5 irreducibles between header and footer
    assert len(rows) == 7
