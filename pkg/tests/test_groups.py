from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fusionkit.errors import InvalidAction, InvalidGroup, NotInSubgroup, OrderLimit, ParseError
from fusionkit.groups import (FiniteGroup, Semidirect, Zn, build_group, centralizes, compose,
                              cyclic, is_normal, parse_cycles, parse_element, parse_group_spec,
                              parse_subgroup, semidirect, subgroup, symmetric, whole_group, x_set)

from conftest import GROUP_SPECS


def brute_classes(G: FiniteGroup) -> set[frozenset[int]]:
    out = set()
    for g in range(G.order):
        out.add(frozenset(G.mul(G.mul(s, g), G.inv(s)) for s in range(G.order)))
    return out


def is_isomorphic_bruteforce(G: FiniteGroup, H: FiniteGroup) -> bool:
    if G.order != H.order:
        return False
    for perm in itertools.permutations(range(1, H.order)):
        f = (0,) + perm
        if all(f[G.mul(a, b)] == H.mul(f[a], f[b]) for a in range(G.order) for b in range(G.order)):
            return True
    return False


@pytest.mark.parametrize("spec", GROUP_SPECS)
def test_classes_match_bruteforce(spec):
    G = build_group(spec)
    assert {frozenset(c) for c in G.classes} == brute_classes(G)
    assert G.classes[0] == (G.identity,)
    assert sum(G.class_sizes) == G.order


@pytest.mark.parametrize("spec", GROUP_SPECS)
def test_cayley_table_is_a_group(spec):
    G = build_group(spec)
    t = G.cayley
    n = G.order
    assert G.identity == 0
    assert all(sorted(row) == list(range(n)) for row in t.tolist())
    a, b, c = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
    assert np.array_equal(t[t[a, b], c], t[a, t[b, c]])


def test_catalog_orders_and_class_counts():
    assert build_group(Zn(2)).order == 2
    assert build_group("S4").num_classes == 5
    assert sorted(build_group("A4").class_sizes.tolist()) == [1, 3, 4, 4]
    assert build_group("Z4").num_classes == 4
    assert sorted(build_group("S3").class_sizes.tolist()) == [1, 2, 3]
    assert build_group("A5").num_classes == 5
    assert build_group("D4").order == 8 and build_group("D6").order == 12


def test_z2_has_one_self_inverse_nonidentity():
    G = build_group("Z2")
    assert G.inv(1) == 1 and G.mul(1, 1) == 0


def test_semidirect_z3_z2_is_s3():
    G = build_group(Semidirect(Zn(3), Zn(2), "inv"))
    assert G.order == 6 and not G.is_abelian()
    assert is_isomorphic_bruteforce(G, build_group("S3"))


def test_dihedral_is_semidirect_by_inversion():
    assert is_isomorphic_bruteforce(build_group("D4"), build_group("semidirect(Z4,Z2,inv)"))


def test_semidirect_rejects_non_automorphism():
    N, K = cyclic(3), cyclic(2)
    with pytest.raises(InvalidAction):
        semidirect(N, K, [[0, 1, 2], [0, 0, 0]])


def test_order_limit():
    with pytest.raises(OrderLimit):
        build_group("S8")


def test_invalid_cayley_tables():
    with pytest.raises(InvalidGroup):
        FiniteGroup([[0, 1], [1, 1]])
    with pytest.raises(InvalidGroup):
        # Latin square without associativity
        FiniteGroup([[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]])


def test_permutation_product_convention():
    p, q = (1, 0, 2), (0, 2, 1)
    assert compose(p, q) == (1, 2, 0)
    assert parse_cycles("(123)", 3) == (1, 2, 0)
    S3 = symmetric(3)
    assert parse_element(S3, "(12)") == S3.index_of("(12)")
    assert S3.mul(S3.index_of("(12)"), S3.index_of("(23)")) == S3.index_of("(123)")


def test_parse_group_spec_and_errors():
    assert build_group(parse_group_spec("Z2xZ2")).order == 4
    assert build_group("semidirect(Z3,Z2,inv)").order == 6
    assert build_group("(Z2xZ3)").order == 6
    for bad in ["Q8", "Z", "semidirect(Z3,Z2,wat)", "S3x", "Z2)"]:
        with pytest.raises((ParseError, InvalidGroup)):
            build_group(bad)


def test_subgroup_examples():
    S3 = build_group("S3")
    H = parse_subgroup(S3, ["(12)"])
    assert (H.order, H.index) == (2, 3)
    E = parse_subgroup(S3, ["e"])
    assert (E.order, E.index) == (1, 6)
    S4 = build_group("S4")
    P = parse_subgroup(S4, ["(12)", "(123)"])
    assert (P.order, P.index) == (6, 4)
    assert not is_normal(S4, P)


@given(st.data())
def test_subgroup_closure_property(data):
    G = build_group(data.draw(st.sampled_from(["S4", "D6", "A4", "Z2xZ2xZ2"])))
    gens = data.draw(st.lists(st.integers(0, G.order - 1), max_size=3))
    H = subgroup(G, gens)
    mem = set(H.members)
    assert set(gens) <= mem
    assert all(G.mul(x, y) in mem for x in mem for y in mem)
    assert G.order % H.order == 0
    assert H.as_group.order == H.order
    # embedding is a homomorphism
    sub = H.as_group
    for i in range(sub.order):
        for j in range(sub.order):
            assert H.to_parent[sub.mul(i, j)] == G.mul(H.to_parent[i], H.to_parent[j])


def test_x_set_examples():
    S3 = build_group("S3")
    H = parse_subgroup(S3, ["(12)"])
    g = S3.index_of("(12)")
    brute = {s for s in range(6) if S3.conjugate(s, g) in H}
    assert x_set(S3, H, g) == brute
    assert len(brute) == 2
    assert x_set(S3, H, S3.identity) == set(range(6))
    N = parse_subgroup(S3, ["(123)"])
    assert all(x_set(S3, N, h) == set(range(6)) for h in N.members)
    with pytest.raises(NotInSubgroup):
        x_set(S3, H, S3.index_of("(123)"))


def test_normality_and_centralizing():
    S3 = build_group("S3")
    N = parse_subgroup(S3, ["(123)"])
    assert is_normal(S3, N) and not centralizes(S3, N)
    V = build_group("Z2xZ2")
    for gen in ["(1,0)", "(0,1)"]:
        F = parse_subgroup(V, [gen])
        assert is_normal(V, F) and centralizes(V, F)
    assert is_normal(S3, whole_group(S3))


def test_cayley_text_round_trip():
    G = build_group("D4")
    H = FiniteGroup.from_cayley_text(G.to_cayley_text())
    assert np.array_equal(G.cayley, H.cayley)
    with pytest.raises(ParseError) as exc:
        FiniteGroup.from_cayley_text("2\n0 1\n1 x\n")
    assert exc.value.line == 3
