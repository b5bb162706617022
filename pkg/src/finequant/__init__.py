"""Exact fine spo(2|n)-equivariant quantization on the contact super circle S^{1|n}."""

from .contactfields import (BEREZINIAN, CONTACT, SpoBasis, SpoElement, VField, Weight,
                            ber_action, bracket, density_action, hamiltonian_field,
                            lagrange, phi_iso, spo_basis, superdimension)
from .diffops import (DiffOp, apply, compose, fine_symbol, from_canonical_basis, h_symbol,
                      lie_derivative, lift, orders, principal_symbol, supercommutator,
                      to_canonical_basis)
from .errors import (AlgebraError, CriticalValueError, DimensionError, FlavorError,
                     GeneratorIndexError, OrderError, ParityError, ParseError,
                     SuperdimensionError, WeightMismatchError)
from .finesymbols import (act_classical, act_fine, act_fine_definitional, act_heisenberg,
                          basis_symbols, delta_op, div_c, div_symbol, div_t, gamma_map,
                          interior, q_aff, sigma_aff, to_canonical, to_contact)
from .fsym import CANONICAL, FSym
from .parser import parse
from .quantmaps import (CriticalReport, alpha, c_kr, casimir, critical_report, n_sd,
                        q_sl, quantize, quantize_via_casimir, sq_map)
from .superring import SuperPoly, d_theta, d_x, dbar, mul

__version__ = "0.1.0"

__all__ = [
    "AlgebraError", "BEREZINIAN", "CANONICAL", "CONTACT", "CriticalReport",
    "CriticalValueError", "DiffOp", "DimensionError", "FSym", "FlavorError",
    "GeneratorIndexError", "OrderError", "ParityError", "ParseError", "SpoBasis",
    "SpoElement", "SuperPoly", "SuperdimensionError", "VField", "Weight",
    "WeightMismatchError", "act_classical", "act_fine", "act_fine_definitional",
    "act_heisenberg", "alpha", "apply", "basis_symbols", "ber_action", "bracket", "c_kr",
    "casimir", "compose", "critical_report", "d_theta", "d_x", "dbar", "delta_op",
    "density_action", "div_c", "div_symbol", "div_t", "fine_symbol", "from_canonical_basis",
    "gamma_map", "h_symbol", "hamiltonian_field", "interior", "lagrange", "lie_derivative",
    "lift", "mul", "n_sd", "orders", "parse", "phi_iso", "principal_symbol", "q_aff", "q_sl",
    "quantize", "quantize_via_casimir", "sigma_aff", "spo_basis", "sq_map",
    "supercommutator", "superdimension", "to_canonical", "to_canonical_basis", "to_contact",
]
