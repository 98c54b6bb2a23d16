"""Quaternionic Landau operator toolkit.

Thin wrapper over the C++ core: quaternion/field-matrix algebra, the SO(4)
canonicalization, sparse Landau spectra and the identity verification suites.
"""

from qlandau._qlandau import (
    __version__,
    canonical2d_spectrum,
    canonical_rotation,
    field_matrix,
    fock_spectrum,
    frame3,
    landau_csr,
    landau_spectrum,
    landau_terms,
    omega_form,
    quat_mul,
    unit_matrix,
    vector_potential,
    verify_json,
)

__all__ = [
    "__version__",
    "canonical2d_spectrum",
    "canonical_rotation",
    "field_matrix",
    "fock_spectrum",
    "frame3",
    "landau_csr",
    "landau_spectrum",
    "landau_terms",
    "omega_form",
    "quat_mul",
    "unit_matrix",
    "vector_potential",
    "verify_json",
]
