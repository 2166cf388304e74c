"""Matrix algebra over O_d, projective canonicalization, isometry
classification, and the Heisenberg boundary action.

Matrices are small (2x2 or 3x3) with QuadRat entries; all catalog matrices
are in fact integral. Everything here is exact: no floating point enters
any decision.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .exactring import QuadInt, QuadRat, RingMismatchError, units


class NormalizationError(ValueError):
    """No unit rescaling reaches determinant 1."""


@dataclass(frozen=True)
class Mat:
    """Square matrix (2x2 or 3x3) over the fraction field of O_d."""

    d: int
    rows: tuple[tuple[QuadRat, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    @staticmethod
    def from_entries(d: int, entries) -> "Mat":
        rows = []
        for row in entries:
            out = []
            for e in row:
                if isinstance(e, int):
                    e = QuadRat(QuadInt.of_int(d, e), 1)
                elif isinstance(e, QuadInt):
                    e = QuadRat(e, 1)
                elif not isinstance(e, QuadRat):
                    raise TypeError(f"bad matrix entry {e!r}")
                if e.d != d:
                    raise RingMismatchError(f"entry in O_{e.d} inside O_{d} matrix")
                out.append(e)
            rows.append(tuple(out))
        n = len(rows)
        if any(len(r) != n for r in rows) or n not in (2, 3):
            raise ValueError("matrix must be square, 2x2 or 3x3")
        return Mat(d, tuple(rows))

    @staticmethod
    def identity(d: int, n: int = 3) -> "Mat":
        one, zero = QuadRat.one(d), QuadRat.zero(d)
        return Mat(d, tuple(
            tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    def __getitem__(self, ij) -> QuadRat:
        i, j = ij
        return self.rows[i][j]

    def __mul__(self, other: "Mat") -> "Mat":
        if not isinstance(other, Mat):
            return NotImplemented
        if other.d != self.d:
            raise RingMismatchError("matrix rings differ")
        if other.n != self.n:
            raise ValueError("matrix sizes differ")
        n = self.n
        return Mat(self.d, tuple(
            tuple(
                sum((self.rows[i][k] * other.rows[k][j] for k in range(n)),
                    QuadRat.zero(self.d))
                for j in range(n))
            for i in range(n)))

    def __add__(self, other: "Mat") -> "Mat":
        return self._zip(other, lambda x, y: x + y)

    def __sub__(self, other: "Mat") -> "Mat":
        return self._zip(other, lambda x, y: x - y)

    def _zip(self, other, op) -> "Mat":
        if other.d != self.d or other.n != self.n:
            raise ValueError("incompatible matrices")
        return Mat(self.d, tuple(
            tuple(op(a, b) for a, b in zip(ra, rb))
            for ra, rb in zip(self.rows, other.rows)))

    def __neg__(self) -> "Mat":
        return self.scale(QuadRat.of_fraction(self.d, -1))

    def scale(self, c) -> "Mat":
        c = QuadRat.of(c) if not isinstance(c, int) else QuadRat.of_fraction(self.d, c)
        return Mat(self.d, tuple(tuple(c * e for e in row) for row in self.rows))

    def conj_transpose(self) -> "Mat":
        n = self.n
        return Mat(self.d, tuple(
            tuple(self.rows[j][i].conj() for j in range(n)) for i in range(n)))

    def trace(self) -> QuadRat:
        return sum((self.rows[i][i] for i in range(self.n)), QuadRat.zero(self.d))

    def det(self) -> QuadRat:
        r = self.rows
        if self.n == 2:
            return r[0][0] * r[1][1] - r[0][1] * r[1][0]
        return (r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
                - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
                + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]))

    def adjugate(self) -> "Mat":
        r = self.rows
        if self.n == 2:
            return Mat(self.d, ((r[1][1], -r[0][1]), (-r[1][0], r[0][0])))

        def cof(i, j):
            rs = [k for k in range(3) if k != i]
            cs = [k for k in range(3) if k != j]
            m = (r[rs[0]][cs[0]] * r[rs[1]][cs[1]]
                 - r[rs[0]][cs[1]] * r[rs[1]][cs[0]])
            return m if (i + j) % 2 == 0 else -m

        return Mat(self.d, tuple(tuple(cof(j, i) for j in range(3)) for i in range(3)))

    def inverse(self) -> "Mat":
        det = self.det()
        if det.is_zero():
            raise ZeroDivisionError("singular matrix")
        inv_det = QuadRat.one(self.d) / det
        return self.adjugate().scale(inv_det)

    def __pow__(self, k: int) -> "Mat":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Mat.identity(self.d, self.n)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.rows for e in row)

    def is_integral(self) -> bool:
        return all(e.is_integral() for row in self.rows for e in row)

    def key(self) -> tuple:
        """Flattened (num-a, num-b, den) triples, row-major."""
        return tuple(e.key() for row in self.rows for e in row)

    def max_coeff_bits(self) -> int:
        return max(max(abs(v).bit_length() for v in e.key())
                   for row in self.rows for e in row)

    def __str__(self) -> str:
        return "[" + "; ".join(
            ", ".join(str(e) for e in row) for row in self.rows) + "]"


# -- Hermitian forms -------------------------------------------------------

def herm_form_h1(d: int) -> Mat:
    """Diag(1, 1, -1), the ball-model form."""
    return Mat.from_entries(d, ((1, 0, 0), (0, 1, 0), (0, 0, -1)))


def herm_form_h2(d: int) -> Mat:
    """Antidiagonal Siegel-model form."""
    return Mat.from_entries(d, ((0, 0, 1), (0, 1, 0), (1, 0, 0)))


def disk_form(d: int) -> Mat:
    """Diag(1, -1), the 2x2 disk-model form."""
    return Mat.from_entries(d, ((1, 0), (0, -1)))


def is_unitary(m: Mat, h: Mat) -> bool:
    """Exact check of M* H M = H."""
    return (m.conj_transpose() * h * m - h).is_zero()


# -- projective classes ----------------------------------------------------

@dataclass(frozen=True)
class ProjIsom:
    """A matrix canonicalized modulo the unit group of O_d."""

    rep: Mat

    @property
    def d(self) -> int:
        return self.rep.d

    def key(self) -> tuple:
        return self.rep.key()

    def __str__(self) -> str:
        return str(self.rep)


def canonical_rep(m: Mat) -> ProjIsom:
    """The unit multiple of m minimal in the fixed entry-key order."""
    if m.is_zero():
        raise ValueError("zero matrix has no projective class")
    best = min((m.scale(QuadRat.of(u)) for u in units(m.d)), key=Mat.key)
    return ProjIsom(best)


def proj_eq(m: Mat, n: Mat) -> bool:
    """Equality in PU(2,1): n = u*m for some unit u."""
    return canonical_rep(m).key() == canonical_rep(n).key()


# -- isometry classification ----------------------------------------------

class IsometryClass(enum.Enum):
    REGULAR_ELLIPTIC = "regular-elliptic"
    LOXODROMIC = "loxodromic"
    UNIPOTENT_2_STEP = "unipotent-2-step"
    UNIPOTENT_3_STEP = "unipotent-3-step"
    OTHER_BOUNDARY = "other-boundary"


def goldman_f(tau: QuadRat) -> Fraction:
    """|t|^4 - 8 Re(t^3) + 18 |t|^2 - 27, evaluated in exact rationals."""
    n = tau.norm()
    re_cube = (tau * tau * tau).real_part()
    return n * n - 8 * re_cube + 18 * n - 27


def su_normalize(m: Mat) -> Mat:
    """Rescale by a unit to reach det = 1, or raise NormalizationError."""
    det = m.det()
    for u in units(m.d):
        uq = QuadRat.of(u)
        if (uq * uq * uq * det - QuadRat.one(m.d)).is_zero():
            return m.scale(uq)
    raise NormalizationError(
        f"no unit rescaling of this O_{m.d} matrix reaches determinant 1 "
        f"(det = {det})")


def _cube_roots_of_unity(d: int) -> list[QuadRat]:
    roots = [QuadRat.one(d)]
    if d == 3:
        w = QuadRat.of(QuadInt.tau(3))
        roots += [w, w * w]
    return roots


def classify(m: Mat) -> IsometryClass:
    """Trace-discriminant classification of an element of SU(2,1).

    The input is unit-rescaled to determinant 1; non-unimodular input
    raises NormalizationError.
    """
    m = su_normalize(m)
    f = goldman_f(m.trace())
    if f < 0:
        return IsometryClass.REGULAR_ELLIPTIC
    if f > 0:
        return IsometryClass.LOXODROMIC
    ident = Mat.identity(m.d, m.n)
    for lam in _cube_roots_of_unity(m.d):
        nil = m - ident.scale(lam)
        if nil.is_zero():
            return IsometryClass.OTHER_BOUNDARY
        nil2 = nil * nil
        if nil2.is_zero():
            return IsometryClass.UNIPOTENT_2_STEP
        if (nil2 * nil).is_zero():
            return IsometryClass.UNIPOTENT_3_STEP
    return IsometryClass.OTHER_BOUNDARY


def projective_order(m: Mat, limit: int = 24) -> int | None:
    """Smallest k >= 1 with m^k a unit multiple of Id, or None past limit."""
    ident = Mat.identity(m.d, m.n)
    power = m
    for k in range(1, limit + 1):
        if proj_eq(power, ident):
            return k
        power = power * m
    return None


# -- Heisenberg boundary ---------------------------------------------------

@dataclass(frozen=True)
class BoundaryPoint:
    """Point of the boundary in Heisenberg coordinates, or Infinity.

    The finite variant stores z exactly in Q(i sqrt d) and t as the exact
    rational coefficient t_coeff with t = t_coeff * sqrt(d).
    """

    d: int
    at_infinity: bool = False
    z: QuadRat | None = None
    t_coeff: Fraction = Fraction(0)

    @staticmethod
    def infinity(d: int) -> "BoundaryPoint":
        return BoundaryPoint(d, at_infinity=True)

    @staticmethod
    def finite(z: QuadRat | QuadInt, t_coeff: Fraction | int = 0) -> "BoundaryPoint":
        z = QuadRat.of(z)
        return BoundaryPoint(z.d, False, z, Fraction(t_coeff))

    @staticmethod
    def origin(d: int) -> "BoundaryPoint":
        return BoundaryPoint.finite(QuadRat.zero(d))

    def key(self) -> tuple:
        if self.at_infinity:
            return ("inf",)
        return self.z.key() + (self.t_coeff.numerator, self.t_coeff.denominator)

    def lift(self) -> tuple[QuadRat, QuadRat, QuadRat]:
        """The column psi(z, t, 0) = ((-|z|^2 + it)/2, z, 1)."""
        if self.at_infinity:
            one = QuadRat.one(self.d)
            zero = QuadRat.zero(self.d)
            return (one, zero, zero)
        half_norm = QuadRat.of_fraction(self.d, -self.z.norm() / 2)
        it_half = QuadRat.of(QuadInt.sqrt_minus_d(self.d)) * QuadRat.of_fraction(
            self.d, self.t_coeff / 2)
        return (half_norm + it_half, self.z, QuadRat.one(self.d))

    def approx(self) -> tuple[complex, float]:
        if self.at_infinity:
            raise ValueError("point at infinity has no Heisenberg coordinates")
        return self.z.approx(), float(self.t_coeff) * self.d ** 0.5


def heis_translation(z: QuadRat | QuadInt, s: QuadRat | QuadInt) -> Mat:
    """Heisenberg translation matrix with horizontal part z and s = it/2.

    s must be purely imaginary; the top-right entry is -|z|^2/2 + s, which
    must be expressible over Q(i sqrt d) (it always is for QuadRat input).
    """
    z = QuadRat.of(z)
    s = QuadRat.of(s)
    if s.real_part() != 0:
        raise ValueError(f"s = {s} is not purely imaginary")
    d = z.d
    top_right = QuadRat.of_fraction(d, -z.norm() / 2) + s
    one, zero = QuadRat.one(d), QuadRat.zero(d)
    return Mat.from_entries(d, (
        (one, -z.conj(), top_right),
        (zero, one, z),
        (zero, zero, one)))


def boundary_action(m: Mat | ProjIsom, p: BoundaryPoint) -> BoundaryPoint:
    """Apply the projective action of m to a boundary point."""
    if isinstance(m, ProjIsom):
        m = m.rep
    if m.d != p.d:
        raise RingMismatchError("matrix and point live over different rings")
    v = p.lift()
    w = tuple(
        sum((m.rows[i][k] * v[k] for k in range(3)), QuadRat.zero(m.d))
        for i in range(3))
    if w[2].is_zero():
        return BoundaryPoint.infinity(m.d)
    z = w[1] / w[2]
    first = w[0] / w[2]
    # first = (-|z|^2 + it)/2, so it/2 = first + |z|^2/2 must be imaginary
    it_half = first + QuadRat.of_fraction(m.d, z.norm() / 2)
    assert it_half.real_part() == 0, "image left the boundary"
    t_coeff = 2 * it_half.isqrtd_coeff()
    return BoundaryPoint.finite(z, t_coeff)
