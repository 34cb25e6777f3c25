"""Transmon energy levels, perturbative and exact.

The perturbative path uses the weakly-anharmonic-oscillator expressions
(f_01 = sqrt(8 E_j E_c) - E_c, anharmonicity = -E_c). The exact path
diagonalizes the Cooper-pair-box Hamiltonian in the charge basis,

    H = 4 E_c (n - n_g)^2 - (E_j / 2) (|n><n+1| + h.c.),   n in [-N, N],

and is the independent oracle that the closed-form chain is checked
against. The symmetric eigensolvers used by this module and by the
coupled-system oracle live here too.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import ContractError, ConvergenceWarning, DomainError

DEFAULT_CHARGE_CUTOFF = 25
_CONVERGENCE_RTOL = 1e-9
_CONVERGENCE_LEVELS = 5


@dataclass(frozen=True)
class PerturbativeTransmon:
    """Closed-form transmon transition frequencies."""

    f_01_hz: float
    f_12_hz: float
    anharmonicity_hz: float
    e_j_hz: float
    e_c_hz: float


@dataclass(frozen=True)
class SymmetricEigenResult:
    """Full eigendecomposition of a real symmetric matrix.

    ``eigenvalues`` are ascending; ``eigenvectors`` holds the matching
    orthonormal eigenvectors as columns.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


@dataclass(frozen=True)
class TransmonSpectrum:
    """Exact charge-basis transmon levels, ground-referenced and ascending."""

    levels_hz: tuple[float, ...]
    n_g: float
    charge_cutoff: int
    f_01_exact_hz: float
    anharmonicity_exact_hz: float


def perturbative_levels(e_j_hz: float, e_c_hz: float) -> PerturbativeTransmon:
    """Transition frequencies in the weakly-anharmonic approximation."""
    if not e_j_hz > 0.0:
        raise DomainError(f"Josephson energy must be positive, got {e_j_hz}")
    if not e_c_hz > 0.0:
        raise DomainError(f"charging energy must be positive, got {e_c_hz}")
    f_01 = math.sqrt(8.0 * e_j_hz * e_c_hz) - e_c_hz
    return PerturbativeTransmon(
        f_01_hz=f_01,
        f_12_hz=f_01 - e_c_hz,
        anharmonicity_hz=-e_c_hz,
        e_j_hz=e_j_hz,
        e_c_hz=e_c_hz,
    )


def solve_tridiagonal_symmetric(
    diagonal: np.ndarray, offdiagonal: np.ndarray
) -> SymmetricEigenResult:
    """Eigendecomposition of a symmetric tridiagonal matrix."""
    diagonal = np.asarray(diagonal, dtype=float)
    offdiagonal = np.asarray(offdiagonal, dtype=float)
    if diagonal.ndim != 1 or offdiagonal.ndim != 1:
        raise ContractError("diagonal and offdiagonal must be one-dimensional")
    if offdiagonal.shape[0] != diagonal.shape[0] - 1:
        raise ContractError(
            f"offdiagonal length must be diagonal length - 1, got "
            f"{offdiagonal.shape[0]} for diagonal of length {diagonal.shape[0]}"
        )
    eigenvalues, eigenvectors = eigh_tridiagonal(diagonal, offdiagonal)
    return SymmetricEigenResult(eigenvalues=eigenvalues, eigenvectors=eigenvectors)


def solve_dense_symmetric(matrix: np.ndarray) -> SymmetricEigenResult:
    """Eigendecomposition of a dense real symmetric matrix."""
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ContractError(f"matrix must be square, got shape {matrix.shape}")
    norm = np.linalg.norm(matrix)
    asymmetry = np.linalg.norm(matrix - matrix.T)
    if asymmetry > 1e-12 * norm:
        raise ContractError(
            f"matrix is not symmetric: |A - A^T| = {asymmetry:.3e} vs 1e-12 |A| = {1e-12 * norm:.3e}"
        )
    eigenvalues, eigenvectors = np.linalg.eigh(matrix)
    return SymmetricEigenResult(eigenvalues=eigenvalues, eigenvectors=eigenvectors)


def _charge_basis_levels(
    e_j_hz: float, e_c_hz: float, n_g: float, cutoff: int, count: int
) -> np.ndarray:
    charge = np.arange(-cutoff, cutoff + 1, dtype=float)
    diagonal = 4.0 * e_c_hz * (charge - n_g) ** 2
    offdiagonal = np.full(2 * cutoff, -e_j_hz / 2.0)
    result = solve_tridiagonal_symmetric(diagonal, offdiagonal)
    levels = result.eigenvalues[:count]
    return levels - levels[0]


def exact_transmon_spectrum(
    e_j_hz: float,
    e_c_hz: float,
    n_g: float = 0.0,
    charge_cutoff: int = DEFAULT_CHARGE_CUTOFF,
    n_levels: int = 8,
) -> TransmonSpectrum:
    """Diagonalize the charge-basis transmon Hamiltonian.

    Parameters
    ----------
    e_j_hz, e_c_hz:
        Josephson and charging energies as frequencies.
    n_g:
        Offset charge.
    charge_cutoff:
        Charge states run over n in [-cutoff, cutoff]; at least 10.
    n_levels:
        Number of ground-referenced levels to keep (>= 3).

    The solve is repeated at ``charge_cutoff + 5``; if the first levels
    move by more than 1e-9 relative, a ``ConvergenceWarning`` is issued.
    """
    if not e_j_hz > 0.0 or not e_c_hz > 0.0:
        raise DomainError(f"energies must be positive, got E_j={e_j_hz}, E_c={e_c_hz}")
    if charge_cutoff < 10:
        raise DomainError(f"charge_cutoff must be at least 10, got {charge_cutoff}")
    if n_levels < 3:
        raise DomainError(f"n_levels must be at least 3, got {n_levels}")
    count = min(n_levels, 2 * charge_cutoff + 1)
    levels = _charge_basis_levels(e_j_hz, e_c_hz, n_g, charge_cutoff, count)
    check = _charge_basis_levels(
        e_j_hz, e_c_hz, n_g, charge_cutoff + 5, min(count, _CONVERGENCE_LEVELS + 1)
    )
    upto = check.shape[0]
    drift = np.max(np.abs(levels[1:upto] - check[1:]) / np.abs(check[1:]))
    if drift > _CONVERGENCE_RTOL:
        warnings.warn(
            f"charge basis cutoff {charge_cutoff} not converged: levels moved by "
            f"{drift:.3e} relative when enlarged to {charge_cutoff + 5}",
            ConvergenceWarning,
            stacklevel=2,
        )
    return TransmonSpectrum(
        levels_hz=tuple(float(x) for x in levels),
        n_g=n_g,
        charge_cutoff=charge_cutoff,
        f_01_exact_hz=float(levels[1]),
        anharmonicity_exact_hz=float(levels[2] - 2.0 * levels[1]),
    )
