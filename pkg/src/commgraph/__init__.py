"""Commuting graphs of finite groups, with certified graph-class recognition."""

from .classify import (
    ClassReport,
    classify_group,
    is_ac_group,
    is_ca_group,
    is_generalized_dihedral_odd,
    omega_subgroup,
    verify_frobenius,
)
from .errors import CommgraphError
from .families import (
    FamilySpec,
    abelian_product,
    alternating,
    build_family,
    central_product,
    cyclic,
    dihedral,
    direct_product,
    extraspecial_minus_32,
    extraspecial_plus_32,
    frobenius20,
    generalized_dihedral,
    generalized_quaternion,
    parse_family,
    psl2,
    suzuki,
    symmetric,
)
from .gf import GF, FieldElement, FieldSpec, Matrix3
from .graphs import UndirectedGraph, commuting_graph
from .groups import ElementSet, GeneratorSpec, Group, group_from_generators
from .recognition import (
    ClassVerdict,
    Witness,
    find_induced,
    is_2k2_free,
    is_chordal,
    is_cograph,
    is_split,
    is_threshold,
    recognize_all,
    verify_certificate,
    verify_witness,
)
from .suite import run_theorem_suite
from .witnesses import sl3_p4_witness, su3_p4_witness

__version__ = "0.1.0"
