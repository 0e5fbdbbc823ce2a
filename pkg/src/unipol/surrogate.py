"""Per-variable majorizer construction for the quartic spectral objective.

For the iterate xt, the separable majorizer of sum_p |X_p|^4 restricted to
variable q is (up to an additive constant) Re(a x^2 - b x) on |x| = 1, with

    alpha_p(q) = xt[q] - c_p e^{j omega_p q},   c_p = X_p / N,
    a(q) = sum_p 2 conj(alpha_p)^2,
    b(q) = sum_p 4 conj(alpha_p) (1 + |alpha_p|^2),

on the 2N-point grid omega_p = pi p / N. Two routes are provided:

* the direct route (`alpha_direct` + `ab_from_alphas`, or `ab_all_direct`),
  O(N) per variable, kept as the testing oracle;
* `ab_all_fast`, which expands the p-sums into a handful of length-2N inverse
  transforms (the e^{2j omega_p q} terms alias onto a length-N subgrid) and
  produces every (a(q), b(q)) in O(N log N) total.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from unipol.metrics import as_values

__all__ = [
    "SurrogateCoefficients",
    "omega_grid",
    "alpha_direct",
    "ab_from_alphas",
    "ab_all_direct",
    "ab_all_fast",
    "surrogate_value",
]


class SurrogateCoefficients(NamedTuple):
    """The complex pair (a, b) of the reduced subproblem min Re(a x^2 - b x)."""

    a: complex
    b: complex

    @property
    def a_R(self) -> float:
        return self.a.real

    @property
    def a_I(self) -> float:
        return self.a.imag

    @property
    def b_R(self) -> float:
        return self.b.real

    @property
    def b_I(self) -> float:
        return self.b.imag


def omega_grid(n: int) -> np.ndarray:
    """Frequency grid omega_p = 2*pi*p/(2N) for p = 0..2N-1."""
    return np.pi * np.arange(2 * n) / n


def alpha_direct(xt, q: int) -> np.ndarray:
    """The 2N alpha values for variable q, by direct evaluation.

    alpha_p = xt[q] - (X_p / N) e^{j omega_p q} with X_p the zero-padded
    2N-point transform of xt. Generally |alpha_p| != 1. This is the oracle
    route for `ab_all_fast`.
    """
    v = as_values(xt)
    n = v.size
    if not 0 <= q < n:
        raise ValueError(f"variable index {q} outside 0..{n - 1}")
    c = np.fft.fft(v, 2 * n) / n
    return v[q] - c * np.exp(1j * omega_grid(n) * q)


def ab_from_alphas(alphas) -> SurrogateCoefficients:
    """Reduce one alpha set to (a, b); sums run in fixed ascending-p order."""
    al = np.asarray(alphas, dtype=np.complex128)
    if al.size == 0:
        raise ValueError("empty alpha set")
    ac = np.conj(al)
    a = 2.0 * np.sum(ac * ac)
    b = 4.0 * np.sum(ac * (1.0 + np.abs(al) ** 2))
    return SurrogateCoefficients(complex(a), complex(b))


def ab_all_direct(xt, chunk: int = 256) -> tuple[np.ndarray, np.ndarray]:
    """(a(q), b(q)) for every q via the direct route, chunked over q.

    O(N^2) total; arithmetic identical to alpha_direct + ab_from_alphas.
    """
    v = as_values(xt)
    n = v.size
    c = np.fft.fft(v, 2 * n) / n
    omega = omega_grid(n)
    a = np.empty(n, dtype=np.complex128)
    b = np.empty(n, dtype=np.complex128)
    for start in range(0, n, chunk):
        q = np.arange(start, min(start + chunk, n))
        alphas = v[q, None] - c[None, :] * np.exp(1j * np.outer(q, omega))
        ac = np.conj(alphas)
        a[q] = 2.0 * np.sum(ac * ac, axis=1)
        b[q] = 4.0 * np.sum(ac * (1.0 + np.abs(alphas) ** 2), axis=1)
    return a, b


def ab_all_fast(xt) -> tuple[np.ndarray, np.ndarray]:
    """(a(q), b(q)) for every q in O(N log N) via transforms.

    Expanding the p-sums with alpha_p(q) = xt[q] - c_p e^{j omega_p q} leaves
    three kinds of q-dependent sums, each one inverse transform:

        S1[q] = sum_p c_p          e^{j omega_p q}     (length 2N)
        S3[q] = sum_p |c_p|^2 c_p  e^{j omega_p q}     (length 2N)
        T2[q] = sum_p c_p^2        e^{2j omega_p q}    (aliases to length N)

    giving, with u = xt[q] (|u| carried exactly rather than assumed 1):

        a(q)/2 = 2N conj(u)^2 - 2 conj(u) conj(S1) + conj(T2)
        b(q)/4 = 2N conj(u)(1+|u|^2) + 2 conj(u) P0
                 - (1+2|u|^2) conj(S1) - conj(S3) - conj(u)^2 S1 + u conj(T2)

    where P0 = sum_p |c_p|^2.
    """
    v = as_values(xt)
    n = v.size
    two_n = 2 * n
    c = np.fft.fft(v, two_n) / n
    cmag2 = np.abs(c) ** 2

    s1 = (two_n * np.fft.ifft(c))[:n]
    s3 = (two_n * np.fft.ifft(cmag2 * c))[:n]
    c2 = c * c
    t2 = n * np.fft.ifft(c2[:n] + c2[n:])
    p0 = np.sum(cmag2)

    u = v
    uc = np.conj(v)
    umag2 = np.abs(v) ** 2

    a = 2.0 * (two_n * uc * uc - 2.0 * uc * np.conj(s1) + np.conj(t2))
    b = 4.0 * (
        two_n * uc * (1.0 + umag2)
        + 2.0 * uc * p0
        - (1.0 + 2.0 * umag2) * np.conj(s1)
        - np.conj(s3)
        - uc * uc * s1
        + u * np.conj(t2)
    )
    return a, b


def surrogate_value(x, xt) -> float:
    """Joint majorizer value u(x | xt) of the quartic spectral objective.

    u(x|xt) = N^3 sum_p sum_n |x_n - alpha_p(n)|^4; it touches isl_quartic at
    x = xt and dominates it everywhere on the unimodular set. Direct (N x 2N)
    evaluation, intended for verification rather than inner loops.
    """
    xv = as_values(x)
    tv = as_values(xt)
    if xv.size != tv.size:
        raise ValueError(f"length mismatch: {xv.size} vs {tv.size}")
    n = tv.size
    c = np.fft.fft(tv, 2 * n) / n
    phase = np.exp(1j * np.outer(np.arange(n), omega_grid(n)))
    alphas = tv[:, None] - c[None, :] * phase
    diff2 = np.abs(xv[:, None] - alphas) ** 2
    return float(n**3 * np.sum(diff2 * diff2))
