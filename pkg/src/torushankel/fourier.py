"""Exact arithmetic on truncated Fourier series on T and T^2.

Conventions used throughout the package:

* The Haar measure is normalized, so that ``inner(e^{imx}, e^{inx}) =
  delta_{mn}`` and ``norm2`` is the plain l2 norm of the coefficient
  array (Parseval).
* A frequency is "analytic" when it is >= 0.  The analytic projector
  therefore keeps the constant term, and H^2 contains the constants.
* The Hilbert transform is the frequency multiplier +1 on n >= 0 and
  -1 on n < 0 (per axis), i.e. ``H = 2P - I``.  This makes ``P = (I +
  H)/2`` an exact identity, at the price of ``H(1) = 1``; users
  comparing with the classical conjugate-function convention (multiplier
  ``-i sign(n)``, zero on constants) should translate accordingly.

Coefficient storage is dense on symmetric boxes [-N, N] (1D) and
[-N, N]^2 (2D).  Products grow the box instead of truncating, so no
operation here loses frequencies.  All values are immutable after
construction and all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.signal import fftconvolve


class Sector(Enum):
    """Frequency half-planes / quadrants selected by the projectors.

    ``PFULL`` is the analytic projector P (every axis >= 0); on T^2 it
    coincides with ``PXPY``.  ``I_MINUS_PFULL`` selects H^2-perp: at
    least one negative frequency.
    """

    PX = "Px"
    PY = "Py"
    PMINUS_X = "PminusX"
    PMINUS_Y = "PminusY"
    PXPY = "PxPy"
    PFULL = "Pfull"
    I_MINUS_PFULL = "IminusPfull"


@dataclass(frozen=True)
class FreqBox:
    """Symmetric frequency box [-N, N]^dim."""

    dim: int
    N: int

    def __post_init__(self):
        if self.dim not in (1, 2):
            raise ValueError(f"dim must be 1 or 2, got {self.dim}")
        if self.N < 1:
            raise ValueError(f"N must be >= 1, got {self.N}")

    @property
    def size(self) -> int:
        return 2 * self.N + 1


@dataclass(frozen=True)
class Grid:
    """Uniform grid with nodes 2*pi*k/G per axis.

    When paired with a box of size N, callers should keep G >= 4N + 4 so
    that products of two box-limited factors are alias-free on the grid.
    """

    dim: int
    G: int

    def __post_init__(self):
        if self.dim not in (1, 2):
            raise ValueError(f"dim must be 1 or 2, got {self.dim}")
        if self.G < 4:
            raise ValueError(f"G must be >= 4, got {self.G}")

    def nodes(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.G) / self.G

    def refined(self, factor: int = 4) -> "Grid":
        return Grid(self.dim, factor * self.G)


def default_grid(f) -> Grid:
    """Default alias-free grid for a polynomial or box: G = 4N + 4."""
    box = f if isinstance(f, FreqBox) else f.box
    return Grid(box.dim, 4 * box.N + 4)


def _freqs(N: int) -> np.ndarray:
    return np.arange(-N, N + 1)


class TrigPoly1:
    """Trigonometric polynomial on T: sum_{|n|<=N} c_n e^{inx}.

    ``coeffs[n + N]`` is the coefficient of e^{inx}.
    """

    __slots__ = ("coeffs",)
    dim = 1

    def __init__(self, coeffs):
        c = np.asarray(coeffs, dtype=complex)
        if c.ndim != 1 or c.size % 2 != 1 or c.size < 3:
            raise ValueError("1D coefficient array must have odd length 2N+1 >= 3")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("TrigPoly1 is immutable")

    @property
    def N(self) -> int:
        return (self.coeffs.size - 1) // 2

    @property
    def box(self) -> FreqBox:
        return FreqBox(1, self.N)

    def coeff(self, n: int) -> complex:
        if abs(n) > self.N:
            return 0.0 + 0.0j
        return complex(self.coeffs[n + self.N])

    @classmethod
    def zero(cls, N: int = 1) -> "TrigPoly1":
        return cls(np.zeros(2 * N + 1, dtype=complex))

    @classmethod
    def from_terms(cls, terms: dict, N: int | None = None) -> "TrigPoly1":
        """Build from a {frequency: coefficient} mapping."""
        if N is None:
            N = max(1, max((abs(n) for n in terms), default=1))
        c = np.zeros(2 * N + 1, dtype=complex)
        for n, v in terms.items():
            if abs(n) > N:
                raise ValueError(f"frequency {n} outside box [-{N},{N}]")
            c[n + N] = v
        return cls(c)

    @classmethod
    def one(cls, N: int = 1) -> "TrigPoly1":
        return cls.from_terms({0: 1.0}, N)

    def padded(self, N: int) -> "TrigPoly1":
        if N < self.N:
            raise ValueError("padding cannot shrink the box")
        c = np.zeros(2 * N + 1, dtype=complex)
        c[N - self.N : N + self.N + 1] = self.coeffs
        return TrigPoly1(c)

    def trimmed(self, tol: float = 0.0) -> "TrigPoly1":
        """Smallest box containing all coefficients with |c| > tol."""
        idx = np.nonzero(np.abs(self.coeffs) > tol)[0]
        if idx.size == 0:
            return TrigPoly1.zero(1)
        M = max(1, int(max(abs(idx.min() - self.N), abs(idx.max() - self.N))))
        return TrigPoly1(self.coeffs[self.N - M : self.N + M + 1])

    def conj(self) -> "TrigPoly1":
        return TrigPoly1(np.conj(self.coeffs[::-1]))

    def __add__(self, other):
        if np.isscalar(other):
            other = TrigPoly1.from_terms({0: other}, 1)
        N = max(self.N, other.N)
        return TrigPoly1(self.padded(N).coeffs + other.padded(N).coeffs)

    __radd__ = __add__

    def __neg__(self):
        return TrigPoly1(-self.coeffs)

    def __sub__(self, other):
        return self + (-other if not np.isscalar(other) else -other)

    def __mul__(self, scalar):
        if not np.isscalar(scalar):
            return multiply(self, scalar)
        return TrigPoly1(self.coeffs * scalar)

    __rmul__ = __mul__

    def __repr__(self):
        return f"TrigPoly1(N={self.N})"


class TrigPoly2:
    """Trigonometric polynomial on T^2: sum c_{mn} e^{i(mx+ny)}.

    ``coeffs[m + N, n + N]`` is the coefficient of e^{i(mx+ny)}; axis 0
    is the x-frequency, axis 1 the y-frequency.
    """

    __slots__ = ("coeffs",)
    dim = 2

    def __init__(self, coeffs):
        c = np.asarray(coeffs, dtype=complex)
        if c.ndim != 2 or c.shape[0] != c.shape[1] or c.shape[0] % 2 != 1 or c.shape[0] < 3:
            raise ValueError("2D coefficient array must be square with odd side 2N+1 >= 3")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("TrigPoly2 is immutable")

    @property
    def N(self) -> int:
        return (self.coeffs.shape[0] - 1) // 2

    @property
    def box(self) -> FreqBox:
        return FreqBox(2, self.N)

    def coeff(self, m: int, n: int) -> complex:
        if abs(m) > self.N or abs(n) > self.N:
            return 0.0 + 0.0j
        return complex(self.coeffs[m + self.N, n + self.N])

    @classmethod
    def zero(cls, N: int = 1) -> "TrigPoly2":
        return cls(np.zeros((2 * N + 1, 2 * N + 1), dtype=complex))

    @classmethod
    def from_terms(cls, terms: dict, N: int | None = None) -> "TrigPoly2":
        """Build from a {(m, n): coefficient} mapping."""
        if N is None:
            N = max(1, max((max(abs(m), abs(n)) for m, n in terms), default=1))
        c = np.zeros((2 * N + 1, 2 * N + 1), dtype=complex)
        for (m, n), v in terms.items():
            if abs(m) > N or abs(n) > N:
                raise ValueError(f"frequency {(m, n)} outside box")
            c[m + N, n + N] = v
        return cls(c)

    @classmethod
    def one(cls, N: int = 1) -> "TrigPoly2":
        return cls.from_terms({(0, 0): 1.0}, N)

    @classmethod
    def from_x(cls, f: TrigPoly1) -> "TrigPoly2":
        """Embed a 1D polynomial as a function of x alone."""
        N = f.N
        c = np.zeros((2 * N + 1, 2 * N + 1), dtype=complex)
        c[:, N] = f.coeffs
        return cls(c)

    @classmethod
    def from_y(cls, f: TrigPoly1) -> "TrigPoly2":
        """Embed a 1D polynomial as a function of y alone."""
        N = f.N
        c = np.zeros((2 * N + 1, 2 * N + 1), dtype=complex)
        c[N, :] = f.coeffs
        return cls(c)

    @classmethod
    def outer(cls, fx: TrigPoly1, fy: TrigPoly1) -> "TrigPoly2":
        """Tensor product fx(x) * fy(y)."""
        N = max(fx.N, fy.N)
        return cls(np.outer(fx.padded(N).coeffs, fy.padded(N).coeffs))

    def padded(self, N: int) -> "TrigPoly2":
        if N < self.N:
            raise ValueError("padding cannot shrink the box")
        c = np.zeros((2 * N + 1, 2 * N + 1), dtype=complex)
        s = slice(N - self.N, N + self.N + 1)
        c[s, s] = self.coeffs
        return TrigPoly2(c)

    def trimmed(self, tol: float = 0.0) -> "TrigPoly2":
        idx = np.nonzero(np.abs(self.coeffs) > tol)
        if idx[0].size == 0:
            return TrigPoly2.zero(1)
        M = max(
            1,
            int(
                max(
                    np.max(np.abs(idx[0] - self.N)),
                    np.max(np.abs(idx[1] - self.N)),
                )
            ),
        )
        s = slice(self.N - M, self.N + M + 1)
        return TrigPoly2(self.coeffs[s, s])

    def conj(self) -> "TrigPoly2":
        return TrigPoly2(np.conj(self.coeffs[::-1, ::-1]))

    def __add__(self, other):
        if np.isscalar(other):
            other = TrigPoly2.from_terms({(0, 0): other}, 1)
        N = max(self.N, other.N)
        return TrigPoly2(self.padded(N).coeffs + other.padded(N).coeffs)

    __radd__ = __add__

    def __neg__(self):
        return TrigPoly2(-self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if not np.isscalar(scalar):
            return multiply(self, scalar)
        return TrigPoly2(self.coeffs * scalar)

    __rmul__ = __mul__

    def __repr__(self):
        return f"TrigPoly2(N={self.N})"


TrigPoly = TrigPoly1 | TrigPoly2


# ---------------------------------------------------------------------------
# multiplication


def multiply(f: TrigPoly, g: TrigPoly) -> TrigPoly:
    """Exact product; the result box is N_f + N_g, nothing is truncated."""
    if f.dim != g.dim:
        raise ValueError("dimension mismatch in multiply")
    if f.dim == 1:
        c = np.convolve(f.coeffs, g.coeffs)
        return TrigPoly1(c)
    # fftconvolve keeps every output frequency and is accurate to roundoff
    c = fftconvolve(f.coeffs, g.coeffs)
    return TrigPoly2(c)


def multiply_x(f: TrigPoly2, gx: TrigPoly1) -> TrigPoly2:
    """Product with a function of x alone, convolving along axis 0 only."""
    Nf, Ng = f.N, gx.N
    N = Nf + Ng
    out = np.zeros((2 * N + 1, 2 * N + 1), dtype=complex)
    block = fftconvolve(f.coeffs, gx.coeffs[:, None], axes=0)
    out[:, N - Nf : N + Nf + 1] = block
    return TrigPoly2(out)


def multiply_y(f: TrigPoly2, gy: TrigPoly1) -> TrigPoly2:
    """Product with a function of y alone, convolving along axis 1 only."""
    Nf, Ng = f.N, gy.N
    N = Nf + Ng
    out = np.zeros((2 * N + 1, 2 * N + 1), dtype=complex)
    block = fftconvolve(f.coeffs, gy.coeffs[None, :], axes=1)
    out[N - Nf : N + Nf + 1, :] = block
    return TrigPoly2(out)


# ---------------------------------------------------------------------------
# projectors and Hilbert transforms


def _sector_mask(sector: Sector, N: int, dim: int) -> np.ndarray:
    n = _freqs(N)
    if dim == 1:
        if sector in (Sector.PX, Sector.PFULL):
            return n >= 0
        if sector in (Sector.PMINUS_X, Sector.I_MINUS_PFULL):
            return n < 0
        raise ValueError(f"sector {sector} undefined for 1D polynomials")
    mx = n[:, None] >= 0
    my = n[None, :] >= 0
    if sector == Sector.PX:
        return np.broadcast_to(mx, (n.size, n.size))
    if sector == Sector.PY:
        return np.broadcast_to(my, (n.size, n.size))
    if sector == Sector.PMINUS_X:
        return np.broadcast_to(~mx, (n.size, n.size))
    if sector == Sector.PMINUS_Y:
        return np.broadcast_to(~my, (n.size, n.size))
    if sector in (Sector.PXPY, Sector.PFULL):
        return mx & my
    if sector == Sector.I_MINUS_PFULL:
        return ~(mx & my)
    raise ValueError(f"unknown sector {sector}")


def project(f: TrigPoly, sector: Sector) -> TrigPoly:
    """Zero every coefficient outside the sector's frequency predicate.

    Frequency 0 counts as analytic on each axis, so H^2 contains the
    constants.
    """
    mask = _sector_mask(sector, f.N, f.dim)
    return type(f)(np.where(mask, f.coeffs, 0.0))


def hilbert(f: TrigPoly, axis: str = "x") -> TrigPoly:
    """Frequency multiplier +1 on frequencies >= 0, -1 below, per axis.

    Equals 2*project(., axis-analytic) - I, so H(1) = 1 (see module
    docstring).
    """
    n = _freqs(f.N)
    sign = np.where(n >= 0, 1.0, -1.0)
    if f.dim == 1:
        if axis != "x":
            raise ValueError(f"invalid axis {axis!r} for a 1D polynomial")
        return TrigPoly1(f.coeffs * sign)
    if axis == "x":
        return TrigPoly2(f.coeffs * sign[:, None])
    if axis == "y":
        return TrigPoly2(f.coeffs * sign[None, :])
    raise ValueError(f"invalid axis {axis!r}")


# ---------------------------------------------------------------------------
# inner products and norms


def inner(f: TrigPoly, g: TrigPoly) -> complex:
    """<f, g> = sum fhat conj(ghat), exact by Parseval."""
    if f.dim != g.dim:
        raise ValueError("dimension mismatch in inner")
    N = max(f.N, g.N)
    a = f.padded(N).coeffs
    b = g.padded(N).coeffs
    return complex(np.sum(a * np.conj(b)))


def norm2(f: TrigPoly) -> float:
    """L2 norm (normalized measure), exact from coefficients."""
    return float(np.linalg.norm(f.coeffs))


def sample(f: TrigPoly, grid: Grid) -> np.ndarray:
    """Values of f on the uniform grid, via FFT.

    Requires G >= 2N + 2 so distinct box frequencies stay distinct mod G.
    """
    if grid.dim != f.dim:
        raise ValueError("grid dimension mismatch")
    G, N = grid.G, f.N
    if G < 2 * N + 2:
        raise ValueError(f"aliasing: grid G={G} too coarse for box N={N}")
    n = _freqs(N)
    if f.dim == 1:
        buf = np.zeros(G, dtype=complex)
        np.add.at(buf, n % G, f.coeffs)
        return np.fft.ifft(buf) * G
    buf = np.zeros((G, G), dtype=complex)
    ix = n % G
    buf[np.ix_(ix, ix)] = f.coeffs
    return np.fft.ifft2(buf) * G * G


def interpolate(values: np.ndarray, box: FreqBox) -> TrigPoly:
    """Recover a box-limited polynomial from its grid samples.

    Exact round trip with :func:`sample` when the grid satisfies
    G >= 2N + 2.
    """
    values = np.asarray(values, dtype=complex)
    N = box.N
    if box.dim == 1:
        G = values.size
        if G < 2 * N + 2:
            raise ValueError(f"aliasing: grid G={G} too coarse for box N={N}")
        spec = np.fft.fft(values) / G
        return TrigPoly1(spec[_freqs(N) % G])
    G = values.shape[0]
    if values.shape != (G, G):
        raise ValueError("2D samples must form a square array")
    if G < 2 * N + 2:
        raise ValueError(f"aliasing: grid G={G} too coarse for box N={N}")
    spec = np.fft.fft2(values) / (G * G)
    ix = _freqs(N) % G
    return TrigPoly2(spec[np.ix_(ix, ix)])


def norm1_grid(f: TrigPoly, grid: Grid | None = None) -> float:
    """L1 norm by grid quadrature (mean of |f| over the nodes).

    The quadrature error is that of the trapezoid rule for |f|, which is
    not band-limited; refine the grid to tighten it.
    """
    if grid is None:
        grid = default_grid(f)
    return float(np.mean(np.abs(sample(f, grid))))


def normInf_grid(f: TrigPoly, grid: Grid | None = None, refine: bool = True) -> float:
    """Grid maximum of |f|: a lower bound for the true sup-norm.

    With ``refine`` the maximum is recomputed once on a 4x finer grid and
    the larger value is returned.
    """
    if grid is None:
        grid = default_grid(f)
    v = float(np.max(np.abs(sample(f, grid))))
    if refine:
        v = max(v, float(np.max(np.abs(sample(f, grid.refined())))))
    return v


# ---------------------------------------------------------------------------
# analytic evaluation helpers (used by the interpolation and model modules)


def eval_analytic1(f: TrigPoly1, z: complex, tol: float = 1e-8) -> complex:
    """Value at z in the disk of the analytic extension of f.

    f must be analytic: negative-frequency coefficients below tol in
    magnitude.
    """
    neg = f.coeffs[: f.N]
    if neg.size and np.max(np.abs(neg)) > tol:
        raise ValueError("polynomial has a non-negligible anti-analytic part")
    pw = z ** np.arange(f.N + 1)
    return complex(np.dot(f.coeffs[f.N :], pw))


def slice_x(f: TrigPoly2, z: complex, tol: float = 1e-8) -> TrigPoly1:
    """f(z, .) as a polynomial in y, for f analytic in x and |z| < 1."""
    neg = f.coeffs[: f.N, :]
    if neg.size and np.max(np.abs(neg)) > tol:
        raise ValueError("polynomial has a non-negligible anti-analytic part in x")
    pw = z ** np.arange(f.N + 1)
    return TrigPoly1(pw @ f.coeffs[f.N :, :])


def slice_y(f: TrigPoly2, w: complex, tol: float = 1e-8) -> TrigPoly1:
    """f(., w) as a polynomial in x, for f analytic in y and |w| < 1."""
    neg = f.coeffs[:, : f.N]
    if neg.size and np.max(np.abs(neg)) > tol:
        raise ValueError("polynomial has a non-negligible anti-analytic part in y")
    pw = w ** np.arange(f.N + 1)
    return TrigPoly1(f.coeffs[:, f.N :] @ pw)


def eval_analytic2(f: TrigPoly2, z: complex, w: complex, tol: float = 1e-8) -> complex:
    """Value of the analytic extension of f at (z, w) in the bidisk."""
    return eval_analytic1(slice_x(f, z, tol), w, tol)
