"""Simulability classes of Gaussian operations.

Rational symplectic operations are handled by the lattice engine.  The
wider class reached by diagonal rotations with rational cotangent, where
the projector 1 - S S^+ stays rational although M does not, is reported
as ExtendedClassD.  Anything else is Unknown.
"""

from __future__ import print_function, division, absolute_import
from __future__ import unicode_literals
from gkpTools.circuitLib.gaussianOp import GaussianOp, is_symplectic, gate_rotation
from gkpTools.misc.rationalTools import RatMatrix, invert, vstack, hstack
from gkpTools.error import RationalError
from fractions import Fraction
import math

__all__ = [
    "RATIONAL_SYMPLECTIC", "EXTENDED_CLASS_D", "UNKNOWN", "NON_RATIONAL",
    "Direction", "DSpDescription", "UnclassifiableCircuit", "classify",
    "dsp_projector", "gate_rotation_direction",
]

RATIONAL_SYMPLECTIC = "RationalSymplectic"
EXTENDED_CLASS_D = "ExtendedClassD"
UNKNOWN = "Unknown"


class _NonRational(object):
    """Marker for a rotation angle whose cotangent is not rational."""

    def __repr__(self):
        return "NON_RATIONAL"


NON_RATIONAL = _NonRational()


def _isqrt_exact(n):
    r = math.isqrt(n)
    return r if r * r == n else None


class Direction(object):
    """Rotation angle given by an integer direction (u, v): cot = u/v.

    >>> Direction(1, 1).isRational()
    False
    >>> Direction(3, 4).cos_sin()
    (Fraction(3, 5), Fraction(4, 5))
    >>> (Direction(1, 1) * Direction(1, 1)).cos_sin()
    (Fraction(0, 1), Fraction(1, 1))
    """

    def __init__(self, u, v):
        u, v = int(u), int(v)
        if not (u or v):
            raise ValueError("Direction (0, 0) has no angle")
        g = math.gcd(u, v)
        self.u, self.v = u // g, v // g

    @classmethod
    def fromCot(cls, cot):
        cot = Fraction(cot)
        return cls(cot.numerator, cot.denominator)

    @classmethod
    def fromTan(cls, tan):
        tan = Fraction(tan)
        return cls(tan.denominator, tan.numerator)

    @classmethod
    def fromCosSin(cls, cos, sin):
        cos, sin = Fraction(cos), Fraction(sin)
        den = cos.denominator * sin.denominator // math.gcd(cos.denominator, sin.denominator)
        return cls(cos * den, sin * den)

    def norm2(self):
        return self.u * self.u + self.v * self.v

    def isRational(self):
        return _isqrt_exact(self.norm2()) is not None

    def cos_sin(self):
        r = _isqrt_exact(self.norm2())
        if r is None:
            raise RationalError("Direction (%d, %d) has irrational cos/sin" % (self.u, self.v))
        return Fraction(self.u, r), Fraction(self.v, r)

    def cos2(self):
        return Fraction(self.u * self.u, self.norm2())

    def sin2(self):
        return Fraction(self.v * self.v, self.norm2())

    def cos_times_sin(self):
        return Fraction(self.u * self.v, self.norm2())

    def __mul__(self, other):
        return Direction(self.u * other.u - self.v * other.v,
                         self.u * other.v + self.v * other.u)

    def __eq__(self, other):
        return isinstance(other, Direction) and (self.u, self.v) == (other.u, other.v)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.u, self.v))

    def __repr__(self):
        return "<Direction %d,%d>" % (self.u, self.v)


class DSpDescription(object):
    """[[A0, 0], [C0, A0^-T]] times a block-diagonal rotation.

    directions holds one Direction (or NON_RATIONAL) per mode.
    """

    def __init__(self, A0, C0, directions):
        n = A0.rows
        if A0.shape != (n, n) or C0.shape != (n, n) or len(directions) != n:
            raise ValueError("Malformed DSp description: inconsistent sizes")
        try:
            A0invT = invert(A0).T
        except RationalError:
            raise ValueError("Malformed DSp description: A0 is singular")
        lower = vstack(hstack(A0, RatMatrix.zeros(n, n)), hstack(C0, A0invT))
        if not is_symplectic(lower):
            raise ValueError("Malformed DSp description: lower factor is not symplectic")
        for d in directions:
            if d is not NON_RATIONAL and not isinstance(d, Direction):
                raise ValueError("Malformed DSp description: bad direction %r" % (d,))
        self.A0, self.C0, self.directions = A0, C0, tuple(directions)
        self.lower = lower
        self.n_modes = n

    def hasNonRational(self):
        return any(d is NON_RATIONAL for d in self.directions)

    def isRational(self):
        return not self.hasNonRational() and all(d.isRational() for d in self.directions)

    def toGaussianOp(self):
        """The rational operation; only valid when isRational()."""
        n = self.n_modes
        rows = RatMatrix.identity(2 * n).toRows()
        for j, d in enumerate(self.directions):
            cos, sin = d.cos_sin()
            rows[j][j], rows[j][n + j] = cos, sin
            rows[n + j][j], rows[n + j][n + j] = -sin, cos
        return GaussianOp(self.lower * RatMatrix(rows, 2 * n))

    def __repr__(self):
        return "<DSpDescription n=%d directions=%r>" % (self.n_modes, self.directions)


class UnclassifiableCircuit(object):
    """A circuit with irrational rotations outside the DSp form."""

    def __init__(self, n_modes, reason):
        self.n_modes = n_modes
        self.reason = reason

    def __repr__(self):
        return "<UnclassifiableCircuit n=%d: %s>" % (self.n_modes, self.reason)


def gate_rotation_direction(n, j, u, v):
    """Rotation of mode j whose direction is the integer vector (u, v).

    Returns a GaussianOp when u^2 + v^2 is a perfect square, otherwise
    the DSpDescription of the rotation (rational cotangent u/v).
    """
    if not 0 <= j < n:
        raise IndexError("Mode %d out of range for %d modes" % (j, n))
    d = Direction(u, v)
    if d.isRational():
        return gate_rotation(n, j, *d.cos_sin())
    directions = [Direction(1, 0)] * n
    # The DSp factor rotates q to cos q + sin p.
    directions[j] = Direction(d.u, -d.v)
    return DSpDescription(RatMatrix.identity(n), RatMatrix.zeros(n, n), directions)


def dsp_projector(desc):
    """Exact 1 - S S^+ for a DSp description with rational cotangents.

    With A = A0 X and B = A0 Y, the Gram matrix A A^T + B B^T is A0 A0^T
    and S S^+ reduces to [[X^T X, X^T Y], [Y^T X, Y^T Y]].
    """
    if desc.hasNonRational():
        raise RationalError("Projector needs rational cotangents")
    n = desc.n_modes
    rows = RatMatrix.identity(2 * n).toRows()
    for j, d in enumerate(desc.directions):
        rows[j][j] -= d.cos2()
        rows[j][n + j] -= d.cos_times_sin()
        rows[n + j][j] -= d.cos_times_sin()
        rows[n + j][n + j] -= d.sin2()
    return RatMatrix(rows, 2 * n)


def classify(op):
    if isinstance(op, GaussianOp):
        return RATIONAL_SYMPLECTIC
    if isinstance(op, DSpDescription):
        if op.hasNonRational():
            return UNKNOWN
        if op.isRational():
            return RATIONAL_SYMPLECTIC
        dsp_projector(op)
        return EXTENDED_CLASS_D
    if isinstance(op, UnclassifiableCircuit):
        return UNKNOWN
    raise TypeError("Cannot classify %r" % (op,))


if __name__ == "__main__":
    import sys
    import doctest
    sys.exit(doctest.testmod().failed)
