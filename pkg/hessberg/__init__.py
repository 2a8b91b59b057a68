"""hessberg - Betti numbers and connectedness of Hessenberg varieties from root data."""

__version__ = "0.1.0"

from .errors import HessbergError, InputError, PropertyViolation
from .rootsys import Root, RootSystem, build_root_system, cartan_datum, parse_cartan, parse_root
from .weyl import WeylElement, WeylGroup, coset_decompose, levi_datum, weyl_from_inversions, weyl_group
from .hessenberg import HessenbergSpace, enumerate_all, from_hessenberg_function, parse_hessenberg
from .semisimple import (
    betti_numbers,
    cell_dimension,
    disconnection_witness,
    is_connected_by_betti,
    is_connected_by_criterion,
)
from .nilpotent import NilpotentSupport, connect_chain, descend, fixed_points, parse_nilpotent
from .catalog import CatalogBuilder, build_catalog, emit_catalog
from .validation import PropertySuite, validate_all

__all__ = [
    'HessbergError',
    'InputError',
    'PropertyViolation',
    'Root',
    'RootSystem',
    'build_root_system',
    'cartan_datum',
    'parse_cartan',
    'parse_root',
    'WeylElement',
    'WeylGroup',
    'weyl_group',
    'levi_datum',
    'coset_decompose',
    'weyl_from_inversions',
    'HessenbergSpace',
    'enumerate_all',
    'from_hessenberg_function',
    'parse_hessenberg',
    'betti_numbers',
    'cell_dimension',
    'is_connected_by_betti',
    'is_connected_by_criterion',
    'disconnection_witness',
    'NilpotentSupport',
    'fixed_points',
    'descend',
    'connect_chain',
    'parse_nilpotent',
    'CatalogBuilder',
    'build_catalog',
    'emit_catalog',
    'PropertySuite',
    'validate_all',
]
