"""Exact computation of double (beta, q)-Grothendieck polynomials.

Three independent routes compute the same polynomials: divided-difference
operators, partition functions of colored lattice models, and (at q = 0)
pipe dreams.  The identities relating them are checked in ``identities``.
"""

from .algebra import BETA, Q, X, Y, Z, P, Poly, RatFunc, oplus, ominus, specialize_q_zero, substitute
from .errors import (
    BudgetExceeded,
    GrothlatError,
    Inadmissible,
    NonDivisible,
    NotGrassmannian,
    NotReduced,
    ParseError,
    QPole,
)
from .identities import G_beta, G_q, H_beta, H_q, biaxial
from .kernels import BACKEND
from .lattice import build_system_G, enumerate_states, partition_function
from .pipedreams import PipeDream
from .symgroup import Perm, all_perms, bruhat_leq

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BETA", "Q", "X", "Y", "Z", "P", "Poly", "RatFunc", "oplus", "ominus",
    "specialize_q_zero", "substitute", "BudgetExceeded", "GrothlatError", "Inadmissible",
    "NonDivisible", "NotGrassmannian", "NotReduced", "ParseError", "QPole",
    "G_beta", "G_q", "H_beta", "H_q", "biaxial", "build_system_G", "enumerate_states",
    "partition_function", "PipeDream", "Perm", "all_perms", "bruhat_leq",
]
