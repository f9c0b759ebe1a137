"""fusionkit: fusion rule algebras from finite groups and their subgroups."""

from __future__ import annotations

from .characters import (Character, CharacterTable, ClassFunction, character_table, decompose,
                         frobenius_multiplicity, induce, inner_product, restrict)
from .diagram import FrobeniusDiagram, emit_dot, frobenius_diagram
from .errors import *  # noqa: F401,F403
from .fusion import (BasisLabel, FusionAlgebra, Hypergroup, Tag, algebra_isomorphic,
                     check_fusion_axioms, check_hypergroup_axioms, dimension_function,
                     direct_product_with_z2, haar_element, join, normalize_to_hypergroup)
from .groups import (FiniteGroup, SubgroupEmbedding, build_group, parse_group_spec, parse_subgroup,
                     subgroup, whole_group, x_set)
from .pair import (build_pair_algebra, certificates, character_ring, coadjoint_action,
                   is_admissible, verify_associativity)
from .formats import deserialize, serialize

__version__ = "0.1.0"
