"""Stationarity quartic of the unit-circle subproblem and its minimizer.

The per-variable surrogate reduces to minimizing f(theta) = Re(a e^{2j theta}
- b e^{j theta}) over theta. Its stationary points, after the tangent
half-angle substitution beta = tan(theta/2), are the real roots of

    p4 b^4 + p3 b^3 + p2 b^2 + p1 b + p0 = 0

with p4 = 2*aI + bI, p3 = -8*aR - 2*bR, p2 = -12*aI, p1 = 8*aR - 2*bR,
p0 = 2*aI - bI. The substitution cannot represent theta = pi, so the
minimizer always evaluates that candidate explicitly.

Roots come from companion-matrix eigenvalues on the deflated, monic
polynomial, then two Newton refinement passes; closed forms handle the
degree <= 2 degenerations.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "IdenticallyZeroError",
    "quartic_coeffs",
    "quartic_coeffs_batch",
    "solve_quartic_real",
    "minimize_single",
    "minimize_batch",
]

# A leading coefficient at or below this fraction of the row maximum is deflated.
LEADING_DEFLATION_RTOL = 1e-12

# Companion eigenvalues count as real when |Im| <= this * (1 + |Re|); Newton
# polishing plus the residual gate clean up what the loose filter lets through.
_IMAG_RTOL = 1e-6

# Candidates within this objective gap of the best tie-break to the smallest theta.
_TIE_GAP = 1e-12


class IdenticallyZeroError(ValueError):
    """Signals the identically-zero polynomial: every theta is stationary."""


def quartic_coeffs(a: complex, b: complex) -> np.ndarray:
    """Stationarity-polynomial coefficients [p4, p3, p2, p1, p0] for one (a, b)."""
    a, b = complex(a), complex(b)
    return np.array(
        [
            2.0 * a.imag + b.imag,
            -8.0 * a.real - 2.0 * b.real,
            -12.0 * a.imag,
            8.0 * a.real - 2.0 * b.real,
            2.0 * a.imag - b.imag,
        ]
    )


def quartic_coeffs_batch(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Vectorized quartic_coeffs: complex arrays (M,) -> coefficient rows (M, 5)."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    ar, ai, br, bi = a.real, a.imag, b.real, b.imag
    return np.stack(
        [
            2.0 * ai + bi,
            -8.0 * ar - 2.0 * br,
            -12.0 * ai,
            8.0 * ar - 2.0 * br,
            2.0 * ai - bi,
        ],
        axis=1,
    )


def _polish(coeffs: np.ndarray, roots: np.ndarray, passes: int = 2) -> np.ndarray:
    """Newton-refine NaN-padded roots (M, R) against coefficient rows (M, 5)."""
    c4, c3, c2, c1, c0 = (coeffs[:, i : i + 1] for i in range(5))
    b = roots
    for _ in range(passes):
        val = (((c4 * b + c3) * b + c2) * b + c1) * b + c0
        der = ((4.0 * c4 * b + 3.0 * c3) * b + 2.0 * c2) * b + c1
        with np.errstate(invalid="ignore", divide="ignore"):
            step = np.where(np.abs(der) > 0.0, val / der, 0.0)
        b = b - np.nan_to_num(step, nan=0.0, posinf=0.0, neginf=0.0) * ~np.isnan(b)
    return b


def _companion_real_roots(rows: np.ndarray) -> np.ndarray:
    """Real eigenvalues of companion matrices for monic-normalizable rows.

    rows holds highest-first coefficients of a fixed degree d = rows.shape[1]-1;
    returns (len(rows), d) with NaN in non-real slots.
    """
    m, width = rows.shape
    d = width - 1
    monic = rows[:, 1:] / rows[:, :1]
    comp = np.zeros((m, d, d))
    comp[:, 0, :] = -monic
    idx = np.arange(d - 1)
    comp[:, idx + 1, idx] = 1.0
    eig = np.linalg.eigvals(comp)
    real_like = np.abs(eig.imag) <= _IMAG_RTOL * (1.0 + np.abs(eig.real))
    return np.where(real_like, eig.real, np.nan)


def _real_roots_batch(coeffs: np.ndarray) -> np.ndarray:
    """Real roots of each quartic row, NaN-padded to shape (M, 4).

    Leading coefficients are deflated at LEADING_DEFLATION_RTOL relative to
    the row maximum, so cubic/quadratic/linear degenerations are solved at
    their effective degree. Identically-zero rows yield an all-NaN row.
    """
    coeffs = np.asarray(coeffs, dtype=float)
    m = coeffs.shape[0]
    out = np.full((m, 4), np.nan)
    if m == 0:
        return out

    mags = np.abs(coeffs)
    scale = np.max(mags, axis=1)
    significant = mags > LEADING_DEFLATION_RTOL * scale[:, None]
    has_any = significant.any(axis=1)
    first = np.argmax(significant, axis=1)
    degree = np.where(has_any, 4 - first, -1)

    for d in (4, 3):
        rows = np.flatnonzero(degree == d)
        if rows.size:
            sub = coeffs[np.ix_(rows, np.arange(4 - d, 5))]
            out[rows, :d] = _companion_real_roots(sub)

    rows = np.flatnonzero(degree == 2)
    if rows.size:
        c2, c1, c0 = coeffs[rows, 2], coeffs[rows, 3], coeffs[rows, 4]
        disc = c1 * c1 - 4.0 * c2 * c0
        ok = disc >= 0.0
        sd = np.sqrt(np.where(ok, disc, 0.0))
        with np.errstate(invalid="ignore"):
            out[rows, 0] = np.where(ok, (-c1 + sd) / (2.0 * c2), np.nan)
            out[rows, 1] = np.where(ok, (-c1 - sd) / (2.0 * c2), np.nan)

    rows = np.flatnonzero(degree == 1)
    if rows.size:
        out[rows, 0] = -coeffs[rows, 4] / coeffs[rows, 3]

    # degree 0: a nonzero constant has no roots; degree -1 is the caller's
    # identically-zero case. Both leave the row all-NaN.
    return _polish(coeffs, out)


def _residual_bound(coeffs: np.ndarray, roots: np.ndarray) -> np.ndarray:
    """Acceptance bound 1e-9 * (1 + max|p_i|) * (1 + |beta|)^4 per root."""
    return 1e-9 * (1.0 + np.max(np.abs(coeffs))) * (1.0 + np.abs(roots)) ** 4


def solve_quartic_real(coeffs) -> np.ndarray:
    """Every real root of p4 b^4 + ... + p0, multiplicities collapsed.

    Parameters
    ----------
    coeffs : array-like of 5 reals, highest degree first.

    Returns
    -------
    Sorted 1-D array of distinct real roots, each meeting the residual bound
    |p(beta)| <= 1e-9 * (1 + max|p_i|) * (1 + |beta|)^4.

    Raises
    ------
    IdenticallyZeroError
        If all five coefficients are zero (every theta is stationary; callers
        fall back to direct objective evaluation).
    """
    c = np.asarray(coeffs, dtype=float).ravel()
    if c.size != 5:
        raise ValueError(f"expected 5 coefficients, got {c.size}")
    if not np.all(np.isfinite(c)):
        raise ValueError("coefficients must be finite")
    if np.all(c == 0.0):
        raise IdenticallyZeroError("all coefficients are zero")

    roots = _real_roots_batch(c[None, :])[0]
    roots = roots[~np.isnan(roots)]
    if roots.size == 0:
        return roots
    residual = np.abs(np.polyval(c, roots))
    roots = np.sort(roots[residual <= _residual_bound(c, roots)])
    if roots.size == 0:
        return roots
    keep = np.concatenate(([True], np.diff(roots) > 1e-8 * (1.0 + np.abs(roots[1:]))))
    return roots[keep]


def _objective(a: np.ndarray, b: np.ndarray, theta: np.ndarray) -> np.ndarray:
    """f(theta) = Re(a e^{2j theta} - b e^{j theta}), broadcast over candidates."""
    ar, ai = a.real[:, None], a.imag[:, None]
    br, bi = b.real[:, None], b.imag[:, None]
    return ar * np.cos(2.0 * theta) - ai * np.sin(2.0 * theta) - br * np.cos(theta) + bi * np.sin(theta)


def minimize_batch(a, b, fallback_phases=None) -> np.ndarray:
    """Global minimizers of Re(a_q e^{2j theta} - b_q e^{j theta}) on [0, 2*pi), per row.

    Candidates are theta = 2*arctan(beta) over the real stationarity-quartic
    roots plus the mandatory theta = pi; ties within 1e-12 objective go to the
    smallest theta. Rows whose quartic vanishes identically (a = b = 0, the
    objective is constant) return fallback_phases there, or 0.0 if not given.
    Fixed candidate ordering makes the result deterministic.
    """
    a = np.atleast_1d(np.asarray(a, dtype=np.complex128))
    b = np.atleast_1d(np.asarray(b, dtype=np.complex128))
    coeffs = quartic_coeffs_batch(a, b)

    scale = np.maximum(1.0, np.abs(a) + np.abs(b))
    degenerate = np.max(np.abs(coeffs), axis=1) <= LEADING_DEFLATION_RTOL * scale

    roots = _real_roots_batch(coeffs)
    thetas = np.mod(2.0 * np.arctan(roots), 2.0 * np.pi)
    thetas = np.concatenate([thetas, np.full((len(a), 1), np.pi)], axis=1)
    thetas = np.sort(thetas, axis=1)  # NaN (missing) slots sort to the end

    with np.errstate(invalid="ignore"):
        f = _objective(a, b, thetas)
    f = np.where(np.isnan(f), np.inf, f)
    best = np.min(f, axis=1)
    pick = np.argmax(f <= best[:, None] + _TIE_GAP, axis=1)
    theta = thetas[np.arange(len(a)), pick]

    if np.any(degenerate):
        if fallback_phases is None:
            theta = np.where(degenerate, 0.0, theta)
        else:
            theta = np.where(degenerate, np.asarray(fallback_phases, dtype=float), theta)
    return theta


def minimize_single(a: complex, b: complex) -> float:
    """Minimizer theta* in [0, 2*pi) of Re(a e^{2j theta} - b e^{j theta}).

    For a = b = 0 the objective is constant and 0.0 is returned (smallest
    theta under the tie-break rule).
    """
    return float(minimize_batch(np.array([a]), np.array([b]))[0])
