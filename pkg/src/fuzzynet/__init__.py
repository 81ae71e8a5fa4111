"""Fuzzy semantic networks: concept lattices, fuzzy areas and inclusion degrees."""

from .errors import *  # noqa: F401,F403
from .inclusion import (
    area_intersection,
    deg_area_inclusion,
    deg_attribute_inclusion,
    deg_class_inclusion,
    deg_instance_membership,
    deg_system_value_inclusion,
    deg_user_value_inclusion,
)
from .kbfile import parse_kb, read_kb, serialize_kb, write_kb
from .lattice import (
    BinaryContext,
    ConceptLattice,
    FormalConcept,
    build_lattice,
    derive_objects,
    derive_properties,
    duality_check,
    enumerate_concepts,
    hasse_edges,
    net_from_lattice,
)
from .dot import export_dot
from .model import (
    Domain,
    FuzzyArea,
    FuzzyClass,
    FuzzyInstance,
    SystemAttribute,
    SystemValue,
    UserAttribute,
    UserValue,
    make_area,
    membership,
    system_value,
)
from .net import (
    MatchResult,
    SemanticNet,
    ValuedLink,
    add_attribute,
    add_class,
    add_instance,
    add_link,
    classify_instance,
    inherited_procedures,
    learn_user_label,
    match_query,
    value_is_a_link,
    value_kind_of_link,
)

__version__ = "0.1.0"
