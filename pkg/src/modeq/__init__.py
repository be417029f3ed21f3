"""High-precision checks of modular equations and multiplier identities of degrees 7, 23, 15 and 5/3."""

from .numerics import ArbReal, Precision
from .qseries import phi, psi, theta_f
from .hypergeom import hyp2f1_half, nome
from .moduli import alpha_from_q, moduli_pair, multiplier, russell_triple
from .identities import IdentityId, catalog, residual, verify_grid

__version__ = "0.1.0"

__all__ = [
    "ArbReal", "Precision", "phi", "psi", "theta_f", "hyp2f1_half", "nome",
    "alpha_from_q", "moduli_pair", "multiplier", "russell_triple",
    "IdentityId", "catalog", "residual", "verify_grid",
]
