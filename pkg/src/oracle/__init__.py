"""
Exact linear-algebra oracle for the closed dimension formulas.
"""

from .exact_linalg import bareiss_rank, nullity
from .realization import (
    NilpotentRealization, commutant_dim, flag_stabilizer_dim, jordan_type_chain, realize,
)

__all__ = [
    'bareiss_rank',
    'nullity',
    'NilpotentRealization',
    'commutant_dim',
    'flag_stabilizer_dim',
    'jordan_type_chain',
    'realize'
]
