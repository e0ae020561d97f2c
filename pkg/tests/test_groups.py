import math

import pytest

from tsuboi.groups import (FiniteGroup, GroupError, all_normal_subgroups,
                           alternating, cyclic, dihedral, direct_product,
                           from_generators, from_table, group_from_name,
                           load_group_file, maximal_containment_check,
                           maximal_normal_subgroups, maximum_normal_subgroup,
                           normal_closure, q_in_group, quotient_group,
                           relative_simplicity_report, subgroup_closure,
                           symmetric)
from tsuboi.perm import Permutation, parse_cycles


def test_constructor_orders():
    assert symmetric(4).order == 24
    assert alternating(5).order == 60
    assert cyclic(6).order == 6
    assert dihedral(8).order == 8
    assert direct_product(cyclic(2), cyclic(4)).order == 8
    assert symmetric(6).order == 720
    assert dihedral(4).order == 4
    assert dihedral(12).order == 12


def test_s3_classes():
    G = symmetric(3)
    sizes = sorted(len(c) for c in G.conjugacy_classes())
    assert sizes == [1, 2, 3]
    assert sum(sizes) == 6
    for c in G.conjugacy_classes():
        assert G.order % len(c) == 0


def test_abelian_classes_singletons():
    G = cyclic(8)
    assert all(len(c) == 1 for c in G.conjugacy_classes())


def test_normal_closure_examples():
    G = symmetric(4)
    assert normal_closure(G, G.index_of("(1 2)")).is_whole
    v4 = normal_closure(G, G.index_of("(1 2)(3 4)"))
    assert v4.order == 4 and v4.normal
    assert normal_closure(G, 0).is_trivial


def test_subgroup_closure():
    G = symmetric(4)
    h = subgroup_closure(G, [G.index_of("(1 2)")])
    assert h.order == 2
    h = subgroup_closure(G, [G.index_of("(1 2 3 4)")])
    assert h.order == 4


def test_maximum_normal_regressions():
    # S_n -> A_n, including the S_4 case with the V_4 inside
    for n, half in [(2, 1), (3, 3), (4, 12), (5, 60), (6, 360)]:
        mn = maximum_normal_subgroup(symmetric(n))
        assert mn is not None and mn.order == half
    assert maximum_normal_subgroup(cyclic(4)).order == 2
    assert maximum_normal_subgroup(cyclic(9)).order == 3
    assert maximum_normal_subgroup(cyclic(6)) is None
    assert maximum_normal_subgroup(cyclic(10)) is None
    mn = maximum_normal_subgroup(alternating(5))
    assert mn is not None and mn.is_trivial


def test_maximum_normal_rejects_trivial_group():
    with pytest.raises(GroupError):
        maximum_normal_subgroup(cyclic(1))


def test_maximal_normal_subgroups():
    assert [s.order for s in maximal_normal_subgroups(symmetric(4))] == [12]
    assert sorted(s.order for s in maximal_normal_subgroups(cyclic(6))) == [2, 3]
    ms = maximal_normal_subgroups(alternating(5))
    assert len(ms) == 1 and ms[0].is_trivial


def test_all_normal_subgroups_s4_lattice():
    orders = sorted(s.order for s in all_normal_subgroups(symmetric(4)))
    assert orders == [1, 4, 12, 24]


def test_quotient_group():
    G = symmetric(4)
    N = maximum_normal_subgroup(G)
    Q = quotient_group(G, N)
    assert Q.order == 2
    V = next(s for s in all_normal_subgroups(G) if s.order == 4)
    Q = quotient_group(G, V)
    assert Q.order == 6
    assert sorted(len(c) for c in Q.conjugacy_classes()) == [1, 2, 3]


def test_q_in_group_examples():
    G = symmetric(4)
    x = G.index_of("(1 2)")
    assert q_in_group(G, x, G.index_of("(1 2 3 4)")) == 3
    assert q_in_group(G, G.index_of("(1 2)(3 4)"), x) == math.inf
    assert q_in_group(G, x, 0) == 0


def test_q_in_group_submultiplicative():
    G = symmetric(4)
    reps = [c[0] for c in G.conjugacy_classes()]
    table = {(x, y): q_in_group(G, x, y) for x in reps for y in reps}
    for f in reps:
        for g in reps:
            for h in reps:
                if table[g, f] < math.inf and table[f, h] < math.inf:
                    assert table[g, h] <= table[g, f] * table[f, h]


def test_relative_simplicity_reports():
    rep = relative_simplicity_report(symmetric(4))
    assert rep["relatively_simple"] is True
    assert rep["maximum_normal_subgroup"]["order"] == 12
    assert rep["quotient_simple"] is True
    assert rep["uniform_k"] == 3
    rep = relative_simplicity_report(alternating(5))
    assert rep["relatively_simple"] is True
    assert rep["maximum_normal_subgroup"]["order"] == 1
    rep = relative_simplicity_report(cyclic(6))
    assert rep["relatively_simple"] is False
    assert sorted(s["order"] for s in rep["maximal_normal_subgroups"]) == [2, 3]


def test_relative_simplicity_dihedral_and_product():
    rep = relative_simplicity_report(dihedral(8))
    assert rep["relatively_simple"] is False
    assert sorted(s["order"] for s in rep["maximal_normal_subgroups"]) == [4, 4, 4]
    rep = relative_simplicity_report(direct_product(cyclic(2), cyclic(4)))
    assert rep["relatively_simple"] is False


def test_maximal_containment():
    for G in [cyclic(6), symmetric(4), dihedral(8), alternating(4)]:
        rep = maximal_containment_check(G)
        assert rep["all_ok"], G.name


def test_group_from_name():
    assert group_from_name("S4").order == 24
    assert group_from_name("A5").order == 60
    assert group_from_name("C6").order == 6
    assert group_from_name("D8").order == 8
    assert group_from_name("C2xC4").order == 8
    with pytest.raises(GroupError):
        group_from_name("Q8")


def test_from_generators():
    G = from_generators([parse_cycles("(1 2 3)"), parse_cycles("(1 2)")],
                        name="S3gen")
    assert G.order == 6


def test_from_table_validation():
    # C_3 as a table
    labels = ["e", "a", "b"]
    table = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
    G = from_table(labels, table, name="C3t")
    assert G.order == 3
    assert maximum_normal_subgroup(G).is_trivial
    broken = [[0, 1, 2], [1, 2, 0], [2, 0, 0]]   # not a latin square
    with pytest.raises(GroupError):
        from_table(labels, broken, name="bad")


def test_from_table_nonassociative_rejected():
    # latin square that is not a group table (no identity works)
    labels = ["a", "b", "c", "d", "e"]
    sq = [[0, 1, 2, 3, 4],
          [1, 0, 3, 4, 2],
          [2, 4, 0, 1, 3],
          [3, 2, 4, 0, 1],
          [4, 3, 1, 2, 0]]
    with pytest.raises(GroupError):
        from_table(labels, sq, name="notgroup")


def test_load_group_file_generators(tmp_path):
    path = tmp_path / "a4.grp"
    path.write_text("N=4\n(1 2 3)\n(1 2)(3 4)\n")
    G = load_group_file(str(path))
    assert G.order == 12


def test_load_group_file_table(tmp_path):
    path = tmp_path / "c2.csv"
    path.write_text("e,g\ne,g\ng,e\n")
    G = load_group_file(str(path))
    assert G.order == 2


def test_group_file_via_cli_name(tmp_path):
    path = tmp_path / "c4.grp"
    path.write_text("N=4\n(1 2 3 4)\n")
    G = group_from_name(f"@{path}")
    assert G.order == 4
    assert maximum_normal_subgroup(G).order == 2


def test_dihedral_small_cases():
    D4 = dihedral(4)   # Klein four group
    assert all(len(c) == 1 for c in D4.conjugacy_classes())
    D6 = dihedral(6)   # isomorphic to S_3
    assert sorted(len(c) for c in D6.conjugacy_classes()) == [1, 2, 3]
    with pytest.raises(GroupError):
        dihedral(5)
    with pytest.raises(GroupError):
        dihedral(2)


def test_conj_and_element_order():
    G = symmetric(4)
    i = G.index_of("(1 2 3)")
    assert G.element_order(i) == 3
    h = G.index_of("(3 4)")
    j = G.conj(i, h)
    assert G.labels[j] == "(1 2 4)"
