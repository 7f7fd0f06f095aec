"""Purified mixing decomposition in the Alicki-Fannes-Winter style.

Given close energy-constrained states rho and sigma, joint purifications
phi and psi are chosen with a real overlap c, and the rank-two
difference |phi><phi| - |psi><psi| splits into Jordan parts of trace
delta = sqrt(1 - c^2) each.  The normalized parts tau_hat_plus/minus
obey the exact mixing identity

    (1+delta)^-1 (|phi><phi| + delta tau_hat_minus)
        = (1+delta)^-1 (|psi><psi| + delta tau_hat_plus)

and their energies are controlled by (1+c) E / delta^2.  When a target
epsilon is supplied, the overlap is detuned to sqrt(1 - 2 epsilon) so
delta = sqrt(2 epsilon) exactly and the energy control becomes E/epsilon.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NumericalError, ValidationError
from .operators import (
    DensityMatrix,
    HermitianOperator,
    PureStateVector,
    aligned_purifications,
    jordan_parts,
    partial_trace,
    trace_norm,
)

DELTA_MIN = 1e-10
ENERGY_TOL = 1e-8
MIXING_RESIDUAL_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class AfwCertificate:
    """All pieces of one purified mixing decomposition, ready to audit."""

    overlap: float
    delta: float
    epsilon_used: float
    energy_limit: float
    phi: PureStateVector
    psi: PureStateVector
    tau_hat_plus: DensityMatrix
    tau_hat_minus: DensityMatrix
    tau_plus: DensityMatrix
    tau_minus: DensityMatrix
    omega_star: DensityMatrix
    energy_tau_plus: float
    energy_tau_minus: float
    energy_bound_exact: float
    energy_bound_coarse: float
    mixing_residual: float


def _marginal_energy(vec: np.ndarray, h: np.ndarray, dim: int) -> float:
    mat = vec.reshape(dim, dim)
    return float(np.real(np.einsum("ij,ik,kj->", mat.conj(), h, mat)))


def afw_decompose(
    rho: DensityMatrix,
    sigma: DensityMatrix,
    hamiltonian: HermitianOperator,
    energy_limit: float,
    epsilon: float | None = None,
) -> AfwCertificate:
    """Build the purified mixing decomposition of (rho, sigma).

    Both states must have energy Tr(H .) <= energy_limit.  With
    ``epsilon`` given (in (0, 1/2], at least the trace distance), the
    purified distance is pinned to sqrt(2 epsilon); with ``epsilon``
    omitted the Uhlmann-optimal pair is used and epsilon_used is
    reported as delta^2 / 2.
    """
    d = rho.dim
    if sigma.dim != d or hamiltonian.dim != d:
        raise ValidationError("afw_decompose: rho, sigma, hamiltonian dims must agree")
    h = hamiltonian.matrix
    e_rho = float(np.real(np.trace(h @ rho.matrix)))
    e_sigma = float(np.real(np.trace(h @ sigma.matrix)))
    scale = max(1.0, abs(energy_limit))
    if e_rho > energy_limit + ENERGY_TOL * scale or e_sigma > energy_limit + ENERGY_TOL * scale:
        raise ValidationError(
            f"afw_decompose: state energies ({e_rho:.6g}, {e_sigma:.6g}) exceed the "
            f"limit {energy_limit!r}"
        )
    dist = 0.5 * trace_norm(rho.matrix - sigma.matrix)
    if epsilon is None:
        # The trace distance detects coincident inputs reliably; the
        # purified delta inflates machine noise through sqrt(1 - c^2).
        if dist <= DELTA_MIN:
            raise ValidationError(
                "afw_decompose: states are numerically identical; nothing to decompose"
            )
        phi, psi, delta = aligned_purifications(rho, sigma)
        if delta <= DELTA_MIN:
            raise ValidationError(
                "afw_decompose: states are numerically identical; nothing to decompose"
            )
        epsilon_used = 0.5 * delta * delta
    else:
        if not 0.0 < epsilon <= 0.5 + 1e-12:
            raise ValidationError(f"afw_decompose: epsilon={epsilon!r} outside (0, 1/2]")
        if dist > epsilon + 1e-9:
            raise ValidationError(
                f"afw_decompose: trace distance {dist:.6g} exceeds epsilon={epsilon!r}"
            )
        target = math.sqrt(max(0.0, 1.0 - 2.0 * epsilon))
        phi, psi, delta = aligned_purifications(rho, sigma, overlap=target)
        epsilon_used = float(epsilon)

    overlap = math.sqrt(max(0.0, 1.0 - delta * delta))
    rho_hat = np.outer(phi.vector, phi.vector.conj())
    sigma_hat = np.outer(psi.vector, psi.vector.conj())
    pos, neg = jordan_parts(rho_hat - sigma_hat)
    tr_pos = float(np.real(np.trace(pos)))
    tr_neg = float(np.real(np.trace(neg)))
    delta_parts = 0.5 * (tr_pos + tr_neg)
    if abs(delta_parts - delta) > 1e-8:
        raise NumericalError(
            f"afw_decompose: Jordan-part trace {delta_parts:.12g} disagrees with the "
            f"purified distance {delta:.12g}"
        )
    tau_hat_plus = DensityMatrix(pos / delta_parts)
    tau_hat_minus = DensityMatrix(neg / delta_parts)
    omega = (rho_hat + delta_parts * tau_hat_minus.matrix) / (1.0 + delta_parts)
    omega_other = (sigma_hat + delta_parts * tau_hat_plus.matrix) / (1.0 + delta_parts)
    mixing_residual = float(np.max(np.abs(omega - omega_other)))
    if mixing_residual > MIXING_RESIDUAL_TOL:
        raise NumericalError(f"afw_decompose: mixing identity residual {mixing_residual:.3e}")
    shape = (d, d)
    tau_plus = partial_trace(tau_hat_plus, shape, (0,))
    tau_minus = partial_trace(tau_hat_minus, shape, (0,))
    e_plus = float(np.real(np.trace(h @ tau_plus.matrix)))
    e_minus = float(np.real(np.trace(h @ tau_minus.matrix)))
    dsq = delta_parts * delta_parts
    return AfwCertificate(
        overlap=overlap,
        delta=delta_parts,
        epsilon_used=epsilon_used,
        energy_limit=float(energy_limit),
        phi=phi,
        psi=psi,
        tau_hat_plus=tau_hat_plus,
        tau_hat_minus=tau_hat_minus,
        tau_plus=tau_plus,
        tau_minus=tau_minus,
        omega_star=DensityMatrix(omega),
        energy_tau_plus=e_plus,
        energy_tau_minus=e_minus,
        energy_bound_exact=(1.0 + overlap) * energy_limit / dsq,
        energy_bound_coarse=2.0 * energy_limit / dsq,
        mixing_residual=mixing_residual,
    )


def jordan_vectors(phi: PureStateVector, psi: PureStateVector) -> tuple[PureStateVector, PureStateVector]:
    """Closed-form unit eigenvectors of |phi><phi| - |psi><psi|.

    Returns (gamma_plus, gamma_minus) with eigenvalues +delta and
    -delta, delta = sqrt(1 - c^2), c = |<phi|psi>|.  psi is re-phased
    internally so the overlap is real nonnegative.  Degenerate pairs
    (identical or orthogonal within DELTA_MIN) are rejected; the
    Jordan-parts route has no such restriction.
    """
    if phi.dim != psi.dim:
        raise ValidationError("jordan_vectors: dims differ")
    raw = complex(np.vdot(phi.vector, psi.vector))
    c = abs(raw)
    psi_vec = psi.vector * (raw.conjugate() / c) if c > 0 else psi.vector
    delta_sq = max(0.0, 1.0 - c * c)
    delta = math.sqrt(delta_sq)
    if delta <= DELTA_MIN or delta >= 1.0 - DELTA_MIN:
        raise ValidationError(
            f"jordan_vectors: overlap {c!r} is degenerate (states identical or orthogonal)"
        )
    out = []
    for sign in (+1.0, -1.0):
        denom = delta * math.sqrt(2.0 * (1.0 - sign * delta))
        p = c / denom
        q = -(1.0 - sign * delta) / denom
        out.append(PureStateVector(p * phi.vector + q * psi_vec))
    return out[0], out[1]


def energy_estimate(
    phi: PureStateVector,
    psi: PureStateVector,
    hamiltonian: HermitianOperator,
    energy_limit: float,
) -> float:
    """Energy control (1 + c) E / delta^2 for the decomposition of (phi, psi).

    Both marginals must have energy <= energy_limit; the value bounds
    Tr(H tau) for both normalized Jordan parts and never exceeds
    2 E / delta^2.
    """
    d = hamiltonian.dim
    if phi.dim != d * d or psi.dim != d * d:
        raise ValidationError(
            f"energy_estimate: purification dims {phi.dim}, {psi.dim} do not match "
            f"hamiltonian dim {d} squared"
        )
    h = hamiltonian.matrix
    scale = max(1.0, abs(energy_limit))
    for name, vec in (("phi", phi.vector), ("psi", psi.vector)):
        e = _marginal_energy(vec, h, d)
        if e > energy_limit + ENERGY_TOL * scale:
            raise ValidationError(
                f"energy_estimate: marginal energy of {name} ({e:.6g}) exceeds {energy_limit!r}"
            )
    c = abs(complex(np.vdot(phi.vector, psi.vector)))
    delta_sq = max(0.0, 1.0 - c * c)
    if delta_sq <= DELTA_MIN**2:
        raise ValidationError("energy_estimate: states are numerically identical")
    return (1.0 + c) * energy_limit / delta_sq
