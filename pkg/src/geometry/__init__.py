"""
Orbit dimensions, component classification and fiber bundle towers.
"""

from .orbits import InductiveReport, OrbitAnalysis, a_set, analyze_orbit, inductive_report
from .classify import (
    ComponentReport, ShapeClassification, SingularityVerdict, Verdict, all_bc_singular,
    bc_is_singular, classify_shape, classify_tableau, find_dense_pattern, sum_component_dims,
)
from .bundles import BundleStep, derive_bundle_tower, fiber_bundle_base

__all__ = [
    'InductiveReport',
    'OrbitAnalysis',
    'a_set',
    'analyze_orbit',
    'inductive_report',
    'ComponentReport',
    'ShapeClassification',
    'SingularityVerdict',
    'Verdict',
    'all_bc_singular',
    'bc_is_singular',
    'classify_shape',
    'classify_tableau',
    'find_dense_pattern',
    'sum_component_dims',
    'BundleStep',
    'derive_bundle_tower',
    'fiber_bundle_base'
]
