from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fusionkit.errors import HaarViolation, NoPositiveSolution, NonIntegralDimensions, ParseError
from fusionkit.fusion import (DimensionFunction, FusionAlgebra, abstract, algebra_isomorphic,
                              associativity_defect, check_fusion_axioms, check_hypergroup_axioms,
                              circle, denormalize, dimension_function, direct_product_with_z2,
                              equation_holds, group_algebra, haar_element, join,
                              normalize_to_hypergroup, parse_equation)
from fusionkit.fixtures import build_pair
from fusionkit.groups import build_group
from fusionkit.characters import character_table
from fusionkit.pair import build_pair_algebra, character_ring


def pair_algebra(group, *gens):
    return build_pair_algebra(*build_pair(group, gens)).algebra


def trivial_algebra():
    return FusionAlgebra([abstract("X0")], [0], [[[1]]])


def test_group_algebra_of_z2_passes():
    F = group_algebra(build_group("Z2"))
    assert F.structure[1, 1, 0] == 1
    assert check_fusion_axioms(F).ok


def test_pair_algebra_z2_passes():
    assert check_fusion_axioms(pair_algebra("Z2", "e")).ok


def test_f3_violation_is_reported():
    a = np.zeros((2, 2, 2), dtype=int)
    a[0, 0, 0] = a[0, 1, 1] = a[1, 0, 1] = 1
    a[1, 1, 0] = 2
    rep = check_fusion_axioms(FusionAlgebra([abstract("X0"), abstract("X1")], [0, 1], a))
    assert not rep["F3"].passed
    assert str(rep["F3"]) == "F3 violated at (1,1,0)"


def test_f2_and_unit_violations():
    a = np.zeros((2, 2, 2), dtype=int)
    a[0, 0, 0] = a[0, 1, 1] = a[1, 0, 1] = a[1, 1, 0] = 1
    a[1, 1, 1] = -1
    rep = check_fusion_axioms(FusionAlgebra([abstract("X0"), abstract("X1")], [0, 1], a))
    assert not rep["F2"].passed
    b = np.zeros((2, 2, 2), dtype=int)
    b[0, 0, 0] = b[1, 1, 0] = 1
    rep = check_fusion_axioms(FusionAlgebra([abstract("X0"), abstract("X1")], [0, 1], b))
    assert not rep["F1 unit"].passed


def brute_associative(a):
    n = a.shape[0]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                left = sum(a[i, j, s] * a[s, k] for s in range(n))
                right = sum(a[j, k, t] * a[i, t] for t in range(n))
                if not np.array_equal(left, right):
                    return False
    return True


@pytest.mark.parametrize("spec", ["Z3", "S3", "D4", "A4", "S4"])
def test_character_ring_axioms(spec):
    F = character_ring(character_table(build_group(spec)))
    assert check_fusion_axioms(F).ok
    assert brute_associative(F.structure)
    assert not associativity_defect(F.structure).any()
    d = dimension_function(F)
    assert np.allclose(d.values, character_table(build_group(spec)).degrees, atol=1e-9)


def test_dimension_examples():
    d = dimension_function(pair_algebra("Z2", "e"))
    assert np.allclose(d.values, [1, 1, math.sqrt(2)], atol=1e-12)
    d = dimension_function(pair_algebra("A4", "(123)"))
    assert np.allclose(d.values, [1, 1, 1, 3, 2, 2, 2], atol=1e-12)


def test_dimension_function_rejects_non_associative():
    a = np.zeros((3, 3, 3), dtype=int)
    for j in range(3):
        a[0, j, j] = a[j, 0, j] = 1
    a[1, 1] = [1, 0, 1]
    a[1, 2] = a[2, 1] = [0, 1, 0]
    a[2, 2] = [1, 1, 0]
    assert associativity_defect(a).any()
    F = FusionAlgebra([abstract(f"X{i}") for i in range(3)], [0, 1, 2], a)
    with pytest.raises(NoPositiveSolution):
        dimension_function(F)


def test_haar_element():
    Z2 = group_algebra(build_group("Z2"))
    R = haar_element(Z2, dimension_function(Z2))
    assert np.allclose(R, [1, 1])
    F = pair_algebra("Z2", "e")
    R = haar_element(F, dimension_function(F))
    assert np.allclose(R, [1, 1, math.sqrt(2)])
    F = pair_algebra("A4", "(123)")
    assert np.allclose(haar_element(F, dimension_function(F)), [1, 1, 1, 3, 2, 2, 2])
    with pytest.raises(HaarViolation):
        haar_element(F, DimensionFunction(np.ones(len(F))))


def test_normalization_examples():
    K = normalize_to_hypergroup(pair_algebra("Z2", "e"))
    assert K.weights[2] == pytest.approx(2.0, abs=1e-12)
    K = normalize_to_hypergroup(group_algebra(build_group("S3")))
    assert np.allclose(K.coefficients, group_algebra(build_group("S3")).structure)
    F = pair_algebra("S3", "(12)")
    K = normalize_to_hypergroup(F)
    r0 = F.index("ρ0")
    assert K.coefficients[r0, r0, F.index("γ0")] == pytest.approx(1 / 3)
    assert K.coefficients[r0, r0, F.index("γ2")] == pytest.approx(2 / 3)
    assert np.allclose(denormalize(K), F.structure, atol=1e-6)
    assert check_hypergroup_axioms(K).ok


def test_join_examples():
    J = join(group_algebra(build_group("Z2")))
    assert J.structure[2, 2].tolist() == [1, 1, 0]
    # group algebra labels are untagged, so compare without tags
    assert algebra_isomorphic(J, pair_algebra("Z2", "e"), respect_tags=False)[0]
    assert algebra_isomorphic(join(group_algebra(build_group("Z3"))), pair_algebra("Z3", "e"),
                              respect_tags=False)[0]
    ring = character_ring(character_table(build_group("Z3")))
    assert algebra_isomorphic(join(ring), pair_algebra("Z3", "e"))[0]
    assert algebra_isomorphic(join(trivial_algebra()), group_algebra(build_group("Z2")),
                              respect_tags=False)[0]
    with pytest.raises(NonIntegralDimensions):
        join(pair_algebra("Z2", "e"))


def test_direct_product_examples():
    assert algebra_isomorphic(direct_product_with_z2(trivial_algebra()),
                              group_algebra(build_group("Z2")), respect_tags=False)[0]
    P = direct_product_with_z2(group_algebra(build_group("Z2")))
    assert len(P) == 4
    assert np.allclose(dimension_function(P).values, 1)
    assert algebra_isomorphic(P, group_algebra(build_group("Z2xZ2")), respect_tags=False)[0]
    S3 = character_ring(character_table(build_group("S3")))
    assert direct_product_with_z2(S3) == pair_algebra("S3", "G")


def test_isomorphism_cases():
    F = pair_algebra("S4", "(12)", "(123)")
    ok, m = algebra_isomorphic(F, F)
    assert ok and sorted(m.values()) == list(range(len(F)))
    # identical diagrams, different algebras
    assert not algebra_isomorphic(pair_algebra("Z4", "2"), pair_algebra("Z2xZ2", "(1,0)"))[0]
    assert not algebra_isomorphic(pair_algebra("S3", "(12)"), pair_algebra("Z2", "e"))[0]


def test_structure_equation_text():
    F = pair_algebra("Z2", "e")
    assert F.equations() == ["γ1 γ1 = γ0", "γ1 ρ0 = ρ0", "ρ0 ρ0 = γ0 + γ1"]
    eq = parse_equation("ρ0 ρ0 = ρ1 ρ1 = γ0 + 2γ2")
    assert eq.products == (("ρ0", "ρ0"), ("ρ1", "ρ1"))
    assert eq.rhs_dict() == {"γ0": 1, "γ2": 2}
    assert equation_holds(F, parse_equation("ρ0 ρ0 = γ0 + γ1")) == [True]
    with pytest.raises(ParseError):
        parse_equation("ρ0 = γ0")


def test_algebra_rejects_bad_shapes():
    with pytest.raises(ValueError):
        FusionAlgebra([circle(0)], [0], np.zeros((2, 2, 2)))
    with pytest.raises(ValueError):
        FusionAlgebra([circle(0), circle(0)], [0, 1], np.zeros((2, 2, 2)))


@given(st.sampled_from(["Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Z6"]),
       st.sampled_from(["Z1", "Z2", "Z3", "S3"]))
def test_group_algebra_properties(spec_a, spec_b):
    G = build_group(f"{spec_a}x{spec_b}")
    if G.order > 24:
        return
    F = group_algebra(G)
    assert check_fusion_axioms(F).ok
    d = dimension_function(F)
    assert np.allclose(d.values, 1)
    K = normalize_to_hypergroup(F)
    assert np.allclose(K.coefficients.sum(axis=2), 1)
    # involution preserves dimensions and fixes the unit
    assert F.involution[0] == 0
    assert np.allclose(d.values, d.values[list(F.involution)])
