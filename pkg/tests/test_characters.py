from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fusionkit.characters import (ClassFunction, character_from_multiplicities, character_table,
                                  decompose, frobenius_multiplicity, induce, induce_average,
                                  inner_product, multiplicities_raw, reciprocity_residuals,
                                  regular_character, restrict, trivial)
from fusionkit.errors import GroupMismatch, NotIntegral, NotNonnegative
from fusionkit.groups import build_group, parse_subgroup

from conftest import CATALOG, GROUP_SPECS
from fusionkit.fixtures import build_pair


def induce_oracle(f: ClassFunction, H):
    """Element-level induction: (1/|H|) sum over x in G with x g x^-1 in H."""
    G = H.parent
    sub_vals = f.on_elements()
    out = np.zeros(G.order, dtype=complex)
    for g in range(G.order):
        for x in range(G.order):
            y = G.conjugate(x, g)
            if y in H:
                out[g] += sub_vals[H.from_parent[y]]
    return out / H.order


@pytest.mark.parametrize("spec", GROUP_SPECS)
def test_table_invariants(spec):
    G = build_group(spec)
    T = character_table(G)
    X = T.matrix
    assert len(T) == G.num_classes
    assert sum(d * d for d in T.degrees) == G.order
    rows = (X * G.class_sizes) @ X.conj().T / G.order
    assert np.allclose(rows, np.eye(len(T)), atol=1e-8)
    cols = X.conj().T @ X
    assert np.allclose(cols, np.diag(G.order / G.class_sizes), atol=1e-8)
    assert np.allclose(T[0].values, 1)
    assert T.degrees == sorted(T.degrees)


def test_known_tables():
    z2 = character_table(build_group("Z2"))
    assert np.allclose(z2.matrix, [[1, 1], [1, -1]])
    assert character_table(build_group("S3")).degrees == [1, 1, 2]
    assert character_table(build_group("A4")).degrees == [1, 1, 1, 3]
    assert character_table(build_group("S4")).degrees == [1, 1, 2, 3, 3]
    assert character_table(build_group("D4")).degrees == [1, 1, 1, 1, 2]


def test_characters_are_class_functions_on_elements():
    # element-level check that each character is a homomorphism trace: chi(xy) = chi(yx)
    G = build_group("S4")
    for chi in character_table(G):
        v = chi.on_elements()
        assert np.allclose(v[G.cayley], v[G.cayley.T])


def test_inner_product_and_mismatch():
    G = build_group("S3")
    T = character_table(G)
    assert abs(inner_product(T[2], T[2]) - 1) < 1e-12
    with pytest.raises(GroupMismatch):
        inner_product(T[0], character_table(build_group("Z6"))[0])


def test_pointwise_product_is_lemma_3_1():
    G = build_group("S3")
    T = character_table(G)
    assert np.array_equal(decompose(T[2] * T[2], T), [1, 1, 1])


@pytest.mark.parametrize("key,group,gens", CATALOG, ids=[c[0] for c in CATALOG])
def test_induce_matches_oracle(key, group, gens):
    G, H = build_pair(group, gens)
    TH = character_table(H.as_group)
    for tau in TH:
        ind = induce(tau, H)
        assert np.allclose(ind.on_elements(), induce_oracle(tau, H), atol=1e-9)
        assert np.allclose(ind.values, H.index * induce_average(tau, H).values, atol=1e-9)
        assert abs(ind.degree_value - H.index * tau.degree) < 1e-9


@pytest.mark.parametrize("key,group,gens", CATALOG, ids=[c[0] for c in CATALOG])
def test_frobenius_reciprocity(key, group, gens):
    G, H = build_pair(group, gens)
    TG, TH = character_table(G), character_table(H.as_group)
    for tau in TH:
        for pi in TG:
            r1, r2 = reciprocity_residuals(tau, pi, H)
            assert r1 < 1e-6 and r2 < 1e-6
            m = frobenius_multiplicity(tau, pi, H)
            assert m == round(inner_product(restrict(pi, H), tau).real)
    m0 = decompose(induce(restrict(trivial(G), H), H), TG)
    assert m0[0] == 1


def test_induce_examples():
    Z2 = build_group("Z2")
    E = parse_subgroup(Z2, ["e"])
    ind = induce(character_table(E.as_group)[0], E)
    assert np.allclose(ind.values, [2, 0])
    S3 = build_group("S3")
    H = parse_subgroup(S3, ["(12)"])
    assert decompose(induce(character_table(H.as_group)[0], H), character_table(S3)).tolist() == [1, 0, 1]


def test_decompose_examples():
    S3 = build_group("S3")
    T = character_table(S3)
    for j in range(len(T)):
        e = np.zeros(len(T), dtype=int)
        e[j] = 1
        assert np.array_equal(decompose(T[j], T), e)
    assert decompose(regular_character(S3), T).tolist() == [1, 1, 2]
    # ind of trivial from <(12)> to S4: total degree 12, so one 3-dimensional
    # constituent appears twice
    S4 = build_group("S4")
    H = parse_subgroup(S4, ["(12)"])
    tau0 = character_table(H.as_group)[0]
    m = decompose(induce(tau0 * tau0, H), character_table(S4))
    assert m.tolist() == [1, 0, 1, 1, 2]
    assert int(m @ character_table(S4).degrees) == 12


def test_decompose_rejects_virtual_characters():
    T = character_table(build_group("S3"))
    with pytest.raises(NotNonnegative):
        decompose(T[1] - T[0], T)
    with pytest.raises(NotIntegral):
        decompose(T[0] * 0.5, T)


def test_restrict_trivial_is_trivial():
    G, H = build_pair("S4", ("(1234)",))
    assert np.allclose(restrict(trivial(G), H).values, 1)


@given(st.data())
def test_decompose_inverts_sum(data):
    spec = data.draw(st.sampled_from(["S3", "S4", "A4", "D4", "Z6", "A5"]))
    T = character_table(build_group(spec))
    mult = data.draw(st.lists(st.integers(0, 4), min_size=len(T), max_size=len(T)).filter(any))
    chi = character_from_multiplicities(T, mult)
    assert decompose(chi, T).tolist() == mult
    assert abs(chi.degree - int(np.dot(mult, T.degrees))) == 0
    assert np.allclose(multiplicities_raw(chi, T), mult)
