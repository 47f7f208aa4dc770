"""Linear-optical model of the physical two-qubit gate.

One photon travels in each of two spatial arms, a (control) and b (target),
with the qubit encoded in polarisation: |0> = |H>, |1> = |V>.  The four
optical modes are ordered

    (a,H) = 0,  (a,V) = 1,  (b,H) = 2,  (b,V) = 3.

The gate is a partially polarising beam splitter (transmittivities T_H, T_V)
sandwiched between half-wave plates on the target arm, with extra H
attenuators on each output arm that equalise the polarisation losses.  The
attenuators sit directly after the beam splitter, inside the wave-plate
conjugation; only there does the post-selected gate reduce to the ideal
controlled rotation for every plate setting.  Keeping only coincidences
with one photon per output arm leaves the effective two-qubit amplitude
operator G, whose entries are two-photon permanents of the mode transform.

Beam-splitter convention: symmetric, phase i on reflection.  Any other
fixed convention changes only unobservable phases of G.  On (H, V) the
wave-plate identities use sigma_z = diag(+1, -1), the standard
polarisation ordering (note this differs from the logical-qubit sigma_z
in linalg).  A plate at physical angle chi implements u at angle 2 chi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import ModelParams, gate_angle

SUCCESS_FLOOR = 1e-15
_ARMS = ((0, 1), (2, 3))  # (H, V) mode indices of arm a and arm b


@dataclass(frozen=True)
class OpticalParams:
    """Hardware parameters of the optical gate.

    ``hwp_angle`` is the physical wave-plate angle; leave it None to derive
    the angle from the target gate rotation (gamma / 4, realizing plates
    u_{gamma/2}).  ``accidental_eps`` is the weight of a uniform accidental-
    coincidence background mixed into the conditional probabilities.
    """

    T_H: float = 1.0
    T_V: float = 1.0 / 3.0
    atten_H: float = 1.0 / math.sqrt(3.0)
    hwp_angle: float | None = None
    accidental_eps: float = 0.0

    def __post_init__(self):
        for name in ("T_H", "T_V", "atten_H"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {value}")
        if not 0.0 <= self.accidental_eps < 1.0:
            raise ValueError(f"accidental_eps must lie in [0, 1), got {self.accidental_eps}")


def ppbs_transform(t_h: float, t_v: float) -> np.ndarray:
    """Mode transform of the partially polarising beam splitter.

    Each polarisation couples the two arms independently:
    a_p -> sqrt(T_p) a_p + i sqrt(1 - T_p) b_p and symmetrically for b_p.
    """
    for name, value in (("T_H", t_h), ("T_V", t_v)):
        if not 0.0 <= value <= 1.0:
            raise ValueError(f"{name} must lie in [0, 1], got {value}")
    m = np.zeros((4, 4), dtype=complex)
    for pol, T in ((0, t_h), (1, t_v)):
        a, b = _ARMS[0][pol], _ARMS[1][pol]
        m[a, a] = m[b, b] = math.sqrt(T)
        m[a, b] = m[b, a] = 1j * math.sqrt(1.0 - T)
    return m


def hwp_u(theta: float) -> np.ndarray:
    """Polarisation action u_theta = [[cos, sin], [sin, -cos]] of a half-wave plate.

    Satisfies u_theta u_theta = 1 and u_theta sigma_z u_theta = u_{2 theta}
    (sigma_z = diag(+1, -1) on (H, V)).
    """
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, s], [s, -c]], dtype=complex)


def _on_arm_b(u2: np.ndarray) -> np.ndarray:
    m = np.eye(4, dtype=complex)
    m[2:, 2:] = u2
    return m


def _equalizers(atten_h: float) -> np.ndarray:
    return np.diag([atten_h, 1.0, atten_h, 1.0]).astype(complex)


def compose_circuit(params: OpticalParams, gamma: float) -> np.ndarray:
    """Full mode transform of the gate targeting a controlled-u_gamma rotation.

    Composition (rightmost first): plate u_{gamma/2} on arm b, beam
    splitter, H equalizers on both arms, plate u_{gamma/2} on arm b.  The
    transform is unitary without attenuation and sub-unitary otherwise.
    """
    plate = params.hwp_angle if params.hwp_angle is not None else gamma / 4.0
    wave_plate = _on_arm_b(hwp_u(2.0 * plate))
    return (
        wave_plate
        @ _equalizers(params.atten_H)
        @ ppbs_transform(params.T_H, params.T_V)
        @ wave_plate
    )


@dataclass(frozen=True, eq=False)
class PostselectedGate:
    """Effective coincidence amplitudes G[fin, in] and per-input success probability."""

    G: np.ndarray
    success: np.ndarray


def postselect(m: np.ndarray) -> PostselectedGate:
    """Two-photon coincidence amplitudes of the mode transform.

    G[(p', q'), (p, q)] is the permanent of the 2x2 submatrix connecting the
    input modes ((a,p), (b,q)) to the output modes ((a,p'), (b,q')): the
    direct term keeps each photon in its arm, the exchange term swaps them.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4):
        raise ValueError(f"mode transform must be 4x4, got shape {m.shape}")
    g = np.zeros((4, 4), dtype=complex)
    for p_out in (0, 1):
        for q_out in (0, 1):
            row_a, row_b = _ARMS[0][p_out], _ARMS[1][q_out]
            for p in (0, 1):
                for q in (0, 1):
                    col_a, col_b = _ARMS[0][p], _ARMS[1][q]
                    g[2 * p_out + q_out, 2 * p + q] = (
                        m[row_a, col_a] * m[row_b, col_b]
                        + m[row_a, col_b] * m[row_b, col_a]
                    )
    return PostselectedGate(G=g, success=(np.abs(g) ** 2).sum(axis=0))


def photonic_conditional_matrix(gate: PostselectedGate, eps: float = 0.0) -> np.ndarray:
    """Conditional outcome probabilities of the post-selected gate.

    c[fin, in] = (1 - eps) |G[fin, in]|^2 / success[in] + eps / 4: the
    coincidence statistics renormalized by the per-input success
    probability, mixed with a uniform accidental background of weight eps.
    Columns sum to 1 by construction.
    """
    if not 0.0 <= eps < 1.0:
        raise ValueError(f"eps must lie in [0, 1), got {eps}")
    blocked = np.flatnonzero(gate.success <= SUCCESS_FLOOR)
    if blocked.size:
        labels = ", ".join(format(i, "02b") for i in blocked)
        raise ValueError(f"gate blocks basis input(s) {labels}: post-selection never succeeds")
    return (1.0 - eps) * np.abs(gate.G) ** 2 / gate.success[None, :] + eps / 4.0


def gate_for_time(params: OpticalParams, model_params: ModelParams, t: float) -> PostselectedGate:
    """Post-selected gate realizing the controlled rotation reached at time t."""
    return postselect(compose_circuit(params, gate_angle(model_params, t)))


def conditional_for_time(
    params: OpticalParams,
    model_params: ModelParams,
    t: float,
    eps: float | None = None,
) -> np.ndarray:
    """Conditional matrix of the optical gate at time t (eps defaults to params)."""
    background = params.accidental_eps if eps is None else eps
    return photonic_conditional_matrix(gate_for_time(params, model_params, t), background)
