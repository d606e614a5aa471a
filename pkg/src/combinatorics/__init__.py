"""
Combinatorics of Jordan types: partitions, standard tableaux and link patterns.
"""

from .shapes import (
    Composition, Partition, conjugate, contains_pattern, dim_springer_fiber,
    dim_stabilizer, distinct_permutations, partitions,
)
from .tableaux import (
    StandardTableau, enumerate_standard, evacuation, shape_chain, tableau_from_cocomposition,
    tableau_from_composition, tableau_sum, transpose,
)
from .linkpatterns import (
    LinkPattern, PatternFilter, composition_to_pattern, enumerate_patterns, from_blocks,
    in_pi1, mirror, tableau_of_pattern,
)

__all__ = [
    'Composition',
    'Partition',
    'conjugate',
    'contains_pattern',
    'dim_springer_fiber',
    'dim_stabilizer',
    'distinct_permutations',
    'partitions',
    'StandardTableau',
    'enumerate_standard',
    'evacuation',
    'shape_chain',
    'tableau_from_cocomposition',
    'tableau_from_composition',
    'tableau_sum',
    'transpose',
    'LinkPattern',
    'PatternFilter',
    'composition_to_pattern',
    'enumerate_patterns',
    'from_blocks',
    'in_pi1',
    'mirror',
    'tableau_of_pattern',
]
