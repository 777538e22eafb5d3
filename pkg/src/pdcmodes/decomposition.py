"""Schmidt decomposition of the JSA, supermodes, and squeezing reports."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import NumericalFailure
from .jsa import JointSpectralAmplitude


@dataclass(frozen=True)
class SchmidtDecomposition:
    """Normalized Schmidt coefficients and discretized temporal modes.

    ``coefficients`` satisfy sum(lambda_k^2) = 1 and are descending.  Mode
    columns carry a 1/sqrt(domega) factor so that
    domega * sum |h_k|^2 = 1 (square-integrable functions on the grid axis).
    """

    coefficients: np.ndarray  # (n,), all of them, not only retained
    signal_modes: np.ndarray  # (n, n), column k = h_k(omega)
    idler_modes: np.ndarray  # (n, n), column k = g_k(omega)
    axis: np.ndarray  # (n,) rad/s
    domega: float
    num_retained: int

    def mode_pair(self, k: int):
        return self.signal_modes[:, k], self.idler_modes[:, k]


def _sign_fix(U, V):
    """Flip each (h_k, g_k) pair so h_k's largest-|.| component is positive."""
    idx = np.argmax(np.abs(U), axis=0)
    signs = np.sign(U[idx, np.arange(U.shape[1])])
    signs[signs == 0] = 1.0
    return U * signs, V * signs


def _pair_degenerate(U, V, lam, rel_gap: float, n_max: int):
    """Re-pair signal/idler modes inside near-degenerate coefficient groups.

    When two Schmidt coefficients nearly coincide, the SVD basis within the
    degenerate subspace is arbitrary and can scramble the physical
    signal/idler pairing.  A common orthogonal rotation applied to both
    sides (which preserves the decomposition up to the coefficient spread)
    is chosen to diagonalize the symmetric part of the cross-Gram matrix,
    restoring the pairing that maximizes per-mode overlap.
    """
    U = U.copy()
    V = V.copy()
    n = min(n_max, len(lam))
    groups, cur = [], [0]
    for i in range(1, n):
        if (lam[i - 1] - lam[i]) < rel_gap * 0.5 * (lam[i - 1] + lam[i]):
            cur.append(i)
        else:
            groups.append(cur)
            cur = [i]
    groups.append(cur)
    for g in groups:
        if len(g) < 2:
            continue
        M = U[:, g].T @ V[:, g]
        w, R = np.linalg.eigh(0.5 * (M + M.T))
        order = np.argsort(-np.abs(w))
        R = R[:, order]
        U[:, g] = U[:, g] @ R
        V[:, g] = V[:, g] @ R
    return U, V


def schmidt_decompose(
    jsa: JointSpectralAmplitude,
    truncation: float = 1e-3,
    pair_degenerate: bool = False,
    degeneracy_gap: float = 0.2,
) -> SchmidtDecomposition:
    """SVD of the JSA matrix with normalized coefficients and modes.

    ``truncation`` is the relative coefficient threshold that sets
    ``num_retained``; every coefficient is kept in the result regardless.
    With ``pair_degenerate`` the near-degenerate mode pairs are re-aligned
    (see :func:`_pair_degenerate`); leave it off when the exact SVD identity
    matters more than the physical signal/idler pairing.
    """
    if not (0.0 < truncation < 1.0):
        raise ValueError("truncation must be in (0, 1)")
    if not np.all(np.isfinite(jsa.values)):
        raise NumericalFailure("JSA contains non-finite entries")
    try:
        U, s, Vt = np.linalg.svd(jsa.values)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure("SVD did not converge") from exc
    norm = np.sqrt(np.sum(s**2))
    if norm == 0.0:
        raise NumericalFailure("JSA is identically zero")
    lam = s / norm
    V = Vt.T
    num_retained = int(np.sum(lam >= truncation * lam[0]))
    if pair_degenerate:
        U, V = _pair_degenerate(U, V, lam, degeneracy_gap, n_max=max(num_retained, 16))
    U, V = _sign_fix(U, V)
    dw = jsa.grid.domega
    scale = 1.0 / np.sqrt(dw)
    return SchmidtDecomposition(
        coefficients=lam,
        signal_modes=U * scale,
        idler_modes=V * scale,
        axis=jsa.grid.axis,
        domega=dw,
        num_retained=num_retained,
    )


def schmidt_number(d: SchmidtDecomposition) -> float:
    """Effective mode count K = 1 / sum(lambda_k^4), using all coefficients."""
    return float(1.0 / np.sum(d.coefficients**4))


@dataclass(frozen=True)
class SupermodeSet:
    """Plus/minus interference combinations of the retained mode pairs."""

    s_plus: np.ndarray  # (n, num_retained)
    s_minus: np.ndarray  # (n, num_retained)
    decomposition: SchmidtDecomposition


def supermodes(d: SchmidtDecomposition) -> SupermodeSet:
    m = d.num_retained
    h = d.signal_modes[:, :m]
    g = d.idler_modes[:, :m]
    inv_sqrt2 = 1.0 / np.sqrt(2.0)
    return SupermodeSet(
        s_plus=(h + g) * inv_sqrt2,
        s_minus=(h - g) * inv_sqrt2,
        decomposition=d,
    )


@dataclass(frozen=True)
class SqueezingReport:
    """Per-mode squeezing derived from the Schmidt coefficients.

    The overall gain is a free scale (the normalized coefficients only fix
    relative squeezing); r_k = gain * lambda_k.
    """

    gain: float
    r: np.ndarray
    variance_squeezed: np.ndarray  # e^{-2 r_k}
    variance_antisqueezed: np.ndarray  # e^{+2 r_k}
    squeezing_db: np.ndarray  # -10 log10 e^{-2 r_k}
    epr_variance: np.ndarray  # 2 e^{-2 r_k}


def squeezing_report(d: SchmidtDecomposition, gain: float = 1.0) -> SqueezingReport:
    if gain < 0:
        raise ValueError("gain must be non-negative")
    r = gain * d.coefficients[: d.num_retained]
    v_sq = np.exp(-2.0 * r)
    return SqueezingReport(
        gain=gain,
        r=r,
        variance_squeezed=v_sq,
        variance_antisqueezed=np.exp(2.0 * r),
        squeezing_db=-10.0 * np.log10(v_sq),
        epr_variance=2.0 * v_sq,
    )


def decomposition_summary(d: SchmidtDecomposition, gain: float = 1.0) -> dict:
    """JSON-ready summary of coefficients, K, and per-mode squeezing."""
    rep = squeezing_report(d, gain)
    return {
        "schmidt_coefficients": [float(v) for v in d.coefficients[: d.num_retained]],
        "schmidt_number": schmidt_number(d),
        "num_retained": d.num_retained,
        "gain": gain,
        "squeezing_db": [float(v) for v in rep.squeezing_db],
        "epr_variance": [float(v) for v in rep.epr_variance],
    }


def write_summary_json(d: SchmidtDecomposition, path, gain: float = 1.0) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(decomposition_summary(d, gain), fh, indent=2)
        fh.write("\n")


def write_modes_csv(d: SchmidtDecomposition, path, n_modes: int | None = None) -> None:
    """Wavelength (nm) vs mode amplitude, one column per retained mode pair."""
    from .dispersion import C_UM_PER_S

    m = d.num_retained if n_modes is None else min(n_modes, d.num_retained)
    lam_nm = 2.0 * np.pi * C_UM_PER_S / d.axis * 1e3
    head = ["lambda_nm"]
    head += [f"h_{k}" for k in range(m)] + [f"g_{k}" for k in range(m)]
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(head) + "\n")
        for i in range(len(lam_nm)):
            row = [f"{lam_nm[i]:.9e}"]
            row += [f"{d.signal_modes[i, k]:.9e}" for k in range(m)]
            row += [f"{d.idler_modes[i, k]:.9e}" for k in range(m)]
            fh.write(",".join(row) + "\n")
