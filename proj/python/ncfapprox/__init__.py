"""Exact inhomogeneous approximation constants over negative continued fractions."""

from ._core import (
    BoundReport,
    DigitSeq,
    MResult,
    NcfError,
    NcfExpansion,
    QuadNum,
    alpha_expand,
    bound_report,
    digits_from_t,
    expand,
    family,
    gamma_star,
    is_lattice_equivalent,
    m_estimate,
    m_exact,
    m_exact_general,
    parse_ncf,
    parse_number,
    period2_rho,
    rho_lower_via_gamma_star,
    rho_search,
    value_of,
)

__all__ = [
    "BoundReport",
    "DigitSeq",
    "MResult",
    "NcfError",
    "NcfExpansion",
    "QuadNum",
    "alpha_expand",
    "bound_report",
    "digits_from_t",
    "expand",
    "family",
    "gamma_star",
    "is_lattice_equivalent",
    "m_estimate",
    "m_exact",
    "m_exact_general",
    "parse_ncf",
    "parse_number",
    "period2_rho",
    "rho_lower_via_gamma_star",
    "rho_search",
    "value_of",
]
