"""su(3) root-system primitives acting on trace-zero Hermitian matrices.

The dual of su(3) is modelled by trace-zero 3x3 Hermitian matrices, paired
with skew-Hermitian generators through Im(tr(mu.xi)).  A coadjoint orbit is
identified with its sorted spectrum, a point of the closed positive Weyl
chamber ``l1 >= l2 >= l3`` inside the sum-zero plane.

Scalars may be int, Fraction or float.  Operations keep exact inputs exact
wherever the mathematics allows it: diagonal spectra, root arithmetic, the
star involution and chamber sorting never leave the rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import permutations
from typing import Iterator, Optional, Sequence, Tuple, Union

Scalar = Union[int, Fraction, float]

SQRT2 = math.sqrt(2.0)
SQRT6 = math.sqrt(6.0)

#: Default relative tolerance for floating-point sum-zero / tie checks.
SUM_TOL = 1e-9


class SumNotZero(ValueError):
    """A would-be spectrum whose entries do not sum to zero."""


def is_exact(x) -> bool:
    """True for int/Fraction scalars (bool excluded)."""
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def all_exact(xs) -> bool:
    return all(is_exact(x) for x in xs)


def sgn(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def exact_div(a: Scalar, b: Scalar) -> Scalar:
    """a / b, staying in Fraction when both operands are exact."""
    if is_exact(a) and is_exact(b):
        return Fraction(a) / Fraction(b)
    return a / b


def third(x: Scalar) -> Scalar:
    return exact_div(x, 3)


# ---------------------------------------------------------------------------
# Spectra and the chamber embedding
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Spectrum:
    """Sorted trace-zero eigenvalue triple ``l1 >= l2 >= l3``."""

    l1: Scalar
    l2: Scalar
    l3: Scalar

    def __post_init__(self):
        scale = max(abs(self.l1), abs(self.l2), abs(self.l3), 1)
        slack = 0 if self.is_exact else SUM_TOL * scale
        if not (self.l1 >= self.l2 - slack and self.l2 >= self.l3 - slack):
            raise ValueError(f"spectrum not sorted: {(self.l1, self.l2, self.l3)}")
        if abs(self.l1 + self.l2 + self.l3) > slack:
            raise SumNotZero(f"spectrum does not sum to zero: {(self.l1, self.l2, self.l3)}")

    @property
    def is_exact(self) -> bool:
        return all_exact((self.l1, self.l2, self.l3))

    def __iter__(self) -> Iterator[Scalar]:
        return iter((self.l1, self.l2, self.l3))

    def astuple(self) -> Tuple[Scalar, Scalar, Scalar]:
        return (self.l1, self.l2, self.l3)

    def as_floats(self) -> Tuple[float, float, float]:
        return (float(self.l1), float(self.l2), float(self.l3))

    def scale(self) -> Scalar:
        return max(abs(self.l1), abs(self.l2), abs(self.l3))

    def has_repeated_eigenvalue(self, tol: float = 0.0) -> bool:
        return self.l1 - self.l2 <= tol or self.l2 - self.l3 <= tol


ZERO_SPECTRUM = Spectrum(0, 0, 0)


@dataclass(frozen=True)
class ChamberPoint:
    """Image of a spectrum under the fixed isometric plane embedding."""

    p: float
    q: float

    def distance(self, other: "ChamberPoint") -> float:
        return math.hypot(self.p - other.p, self.q - other.q)


def to_chamber(s: Spectrum) -> ChamberPoint:
    """Isometric coordinates of a spectrum in the sum-zero plane.

    Uses the orthonormal basis f1 = (1,-1,0)/sqrt2, f2 = (1,1,-2)/sqrt6, so
    Euclidean distances and angles between spectra are preserved; adjacent
    roots come out at 120 degrees.
    """
    l1, l2, l3 = s.as_floats()
    return ChamberPoint((l1 - l2) / SQRT2, (l1 + l2 - 2 * l3) / SQRT6)


def chamber_to_spectrum_floats(p: float, q: float) -> Tuple[float, float, float]:
    """Inverse of :func:`to_chamber` (floating point)."""
    l1 = p / SQRT2 + q / SQRT6
    l2 = -p / SQRT2 + q / SQRT6
    l3 = -2 * q / SQRT6
    return (l1, l2, l3)


def to_positive_chamber(raw: Sequence[Scalar], tol: float = SUM_TOL):
    """Sort a sum-zero triple into the chamber, reporting the permutation.

    Returns ``(Spectrum, perm)`` where ``sorted[i] == raw[perm[i]]``.  Among
    permutations achieving the descending order (ties) the lexicographically
    smallest index tuple is reported.  Raises :class:`SumNotZero` when the
    input does not sum to zero (exactly for exact input, within ``tol``
    relative to scale otherwise).
    """
    raw = tuple(raw)
    if len(raw) != 3:
        raise ValueError("expected a triple")
    scale = max((abs(x) for x in raw), default=0)
    total = raw[0] + raw[1] + raw[2]
    if all_exact(raw):
        if total != 0:
            raise SumNotZero(f"sum is {total}")
    elif abs(total) > tol * max(float(scale), 1.0):
        raise SumNotZero(f"sum is {total}")
    best: Optional[Tuple[int, int, int]] = None
    for perm in permutations(range(3)):
        a, b, c = (raw[perm[0]], raw[perm[1]], raw[perm[2]])
        if a >= b >= c and (best is None or perm < best):
            best = perm
    assert best is not None
    return Spectrum(raw[best[0]], raw[best[1]], raw[best[2]]), best


def star_involution(s: Spectrum) -> Spectrum:
    """Chamber representative of ``-s``; an involution.

    Acts as the reflection of the chamber across the line l2 = 0.
    """
    return Spectrum(-s.l3, -s.l2, -s.l1)


def star_vector(v: Sequence[Scalar]) -> Tuple[Scalar, Scalar, Scalar]:
    """The star involution as a linear map on sum-zero triples."""
    return (-v[2], -v[1], -v[0])


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------


def _is_zero(z) -> bool:
    return z == 0


@dataclass(frozen=True)
class Hermitian3:
    """Trace-zero 3x3 Hermitian matrix.

    Stores the two free diagonal entries (``d3 = -d1-d2``) and the three
    upper-triangular entries; the lower triangle is implied by Hermiticity,
    the trace is zero by construction.
    """

    d1: Scalar
    d2: Scalar
    off12: complex = 0
    off13: complex = 0
    off23: complex = 0

    @property
    def d3(self) -> Scalar:
        return -self.d1 - self.d2

    @classmethod
    def diag(cls, a: Scalar, b: Scalar, c: Scalar) -> "Hermitian3":
        scale = max(abs(a), abs(b), abs(c), 1)
        tol = 0 if all_exact((a, b, c)) else SUM_TOL * scale
        if abs(a + b + c) > tol:
            raise SumNotZero(f"diagonal sums to {a + b + c}")
        return cls(a, b)

    @classmethod
    def from_numpy(cls, m, tol: float = 1e-9) -> "Hermitian3":
        import numpy as np

        m = np.asarray(m, dtype=complex)
        scale = max(float(np.abs(m).max()), 1.0)
        if np.abs(m - m.conj().T).max() > tol * scale:
            raise ValueError("matrix is not Hermitian")
        if abs(m.trace()) > tol * scale:
            raise SumNotZero(f"trace is {m.trace()}")
        return cls(m[0, 0].real, m[1, 1].real, m[0, 1], m[0, 2], m[1, 2])

    def as_numpy(self):
        import numpy as np

        return np.array(
            [
                [complex(self.d1), complex(self.off12), complex(self.off13)],
                [complex(self.off12).conjugate(), complex(self.d2), complex(self.off23)],
                [complex(self.off13).conjugate(), complex(self.off23).conjugate(), complex(self.d3)],
            ]
        )

    @property
    def is_diagonal(self) -> bool:
        return _is_zero(self.off12) and _is_zero(self.off13) and _is_zero(self.off23)

    def __add__(self, other: "Hermitian3") -> "Hermitian3":
        return Hermitian3(
            self.d1 + other.d1,
            self.d2 + other.d2,
            self.off12 + other.off12,
            self.off13 + other.off13,
            self.off23 + other.off23,
        )

    def __neg__(self) -> "Hermitian3":
        return self.scaled(-1)

    def scaled(self, c: Scalar) -> "Hermitian3":
        return Hermitian3(c * self.d1, c * self.d2, c * self.off12, c * self.off13, c * self.off23)

    def frobenius(self) -> float:
        off = abs(complex(self.off12)) ** 2 + abs(complex(self.off13)) ** 2 + abs(complex(self.off23)) ** 2
        return math.sqrt(float(self.d1) ** 2 + float(self.d2) ** 2 + float(self.d3) ** 2 + 2 * off)


ZERO_HERMITIAN = Hermitian3(0, 0)


@dataclass(frozen=True)
class SkewHermitian3:
    """Trace-zero 3x3 skew-Hermitian matrix, diag = (i t1, i t2, -i(t1+t2))."""

    t1: Scalar
    t2: Scalar
    off12: complex = 0
    off13: complex = 0
    off23: complex = 0

    @property
    def t3(self) -> Scalar:
        return -self.t1 - self.t2

    def as_numpy(self):
        import numpy as np

        return np.array(
            [
                [1j * complex(self.t1), complex(self.off12), complex(self.off13)],
                [-complex(self.off12).conjugate(), 1j * complex(self.t2), complex(self.off23)],
                [-complex(self.off13).conjugate(), -complex(self.off23).conjugate(), 1j * complex(self.t3)],
            ]
        )

    @property
    def is_diagonal(self) -> bool:
        return _is_zero(self.off12) and _is_zero(self.off13) and _is_zero(self.off23)


#: Cartan basis of diagonal skew-Hermitian generators.
XI1 = SkewHermitian3(0, 1)  # diag[0, i, -i]
XI2 = SkewHermitian3(-1, 0)  # diag[-i, 0, i]


def pairing(mu: Hermitian3, xi: SkewHermitian3) -> Scalar:
    """Duality pairing Im(tr(mu.xi)); bilinear in both arguments.

    Exact for diagonal arguments with exact entries.
    """
    diag = mu.d1 * xi.t1 + mu.d2 * xi.t2 + mu.d3 * xi.t3
    if mu.is_diagonal and xi.is_diagonal:
        return diag
    off = 0.0
    for m, x in ((mu.off12, xi.off12), (mu.off13, xi.off13), (mu.off23, xi.off23)):
        off += 2.0 * (complex(m).conjugate() * complex(x)).imag
    return float(diag) + off


# ---------------------------------------------------------------------------
# Roots
# ---------------------------------------------------------------------------


class Root(Enum):
    """The three root axes of A2, as sum-zero diagonal vectors."""

    ALPHA1 = (0, 1, -1)
    ALPHA2 = (-1, 0, 1)
    ALPHA3 = (1, -1, 0)

    @property
    def vector(self) -> Tuple[int, int, int]:
        return self.value

    @property
    def hermitian(self) -> Hermitian3:
        a, b, _ = self.value
        return Hermitian3(a, b)

    @property
    def label(self) -> str:
        return {"ALPHA1": "alpha1", "ALPHA2": "alpha2", "ALPHA3": "alpha3"}[self.name]


@dataclass(frozen=True)
class SignedRoot:
    """A root axis together with a sign, i.e. one of the six roots."""

    sign: int
    root: Root

    @property
    def vector(self) -> Tuple[int, int, int]:
        v = self.root.vector
        return (self.sign * v[0], self.sign * v[1], self.sign * v[2])

    @property
    def label(self) -> str:
        return ("" if self.sign > 0 else "-") + self.root.label


def identify_signed_root(v: Sequence[Scalar]) -> SignedRoot:
    """Match a vector that is exactly a root against the six roots."""
    t = tuple(v)
    for root in Root:
        if t == root.vector:
            return SignedRoot(1, root)
        if t == tuple(-c for c in root.vector):
            return SignedRoot(-1, root)
    raise ValueError(f"{v!r} is not a root")


def apply_perm(v: Sequence, perm: Sequence[int]) -> tuple:
    """Coordinate permutation ``out[k] = v[perm[k]]``."""
    return tuple(v[perm[k]] for k in range(len(perm)))


# ---------------------------------------------------------------------------
# Eigenvalues
# ---------------------------------------------------------------------------


def spectrum(mu: Hermitian3) -> Spectrum:
    """Sorted eigenvalues of a trace-zero Hermitian matrix.

    Diagonal matrices are sorted exactly (Fractions stay Fractions).  The
    general case uses the trigonometric solution of the depressed cubic
    ``u^3 + p u + q = 0``: with m = 2 sqrt(-p/3) the eigenvalues are
    m cos((acos(4 det / m^3) + 2 pi k) / 3); the acos argument is clamped to
    [-1, 1], which keeps the formula stable near repeated eigenvalues.
    """
    if mu.is_diagonal:
        return to_positive_chamber((mu.d1, mu.d2, mu.d3))[0]

    d1, d2, d3 = float(mu.d1), float(mu.d2), float(mu.d3)
    o12, o13, o23 = complex(mu.off12), complex(mu.off13), complex(mu.off23)
    a12, a13, a23 = abs(o12) ** 2, abs(o13) ** 2, abs(o23) ** 2

    tr2 = d1 * d1 + d2 * d2 + d3 * d3 + 2 * (a12 + a13 + a23)
    p = -tr2 / 2.0
    if p == 0.0:
        return ZERO_SPECTRUM
    det = (
        d1 * (d2 * d3 - a23)
        - (o12 * (o12.conjugate() * d3 - o23 * o13.conjugate())).real
        + (o13 * (o12.conjugate() * o23.conjugate() - d2 * o13.conjugate())).real
    )
    m = 2.0 * math.sqrt(-p / 3.0)
    arg = 4.0 * det / (m * m * m)
    arg = max(-1.0, min(1.0, arg))
    theta = math.acos(arg) / 3.0
    eig = [m * math.cos(theta + 2.0 * math.pi * k / 3.0) for k in range(3)]
    eig.sort(reverse=True)
    # Recentre the tiny rounding drift so the triple sums to zero.
    drift = (eig[0] + eig[1] + eig[2]) / 3.0
    return Spectrum(eig[0] - drift, eig[1] - drift, eig[2] - drift)
