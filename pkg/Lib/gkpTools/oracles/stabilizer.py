"""Direct check of the stabilizer phase condition on measurement points.

For l = R m the operator g(l) = exp(i phi) prod_j exp(i sqrt(pi) l_j Q_j)
stabilizes the output state, with

	phi(l) = -pi/2 l^T A B^T l - sqrt(pi) l.c

A point x can only be measured if sqrt(pi) l.x + phi(l) = 0 mod 2 pi for
every such l.  All phases here are in units of pi.
"""

from __future__ import print_function, division, absolute_import
from gkpTools.latticeLib.pdf import build_S
from gkpTools.error import GkpError
from gkpTools.misc.rationalTools import pseudoinverse_full_column_rank
from gkpTools.misc.smithForm import smith_decompose
from gkpTools.misc.splitReal import SQRT_PI
from fractions import Fraction

__all__ = ["StabilizerWitness", "witness_basis", "witness_for",
           "check_phase_condition", "PHASE_TOLERANCE"]

PHASE_TOLERANCE = 1e-9


class StabilizerWitness(object):
    """l with its phase phi(l) = pi * (phase_exact + phase_remainder)."""

    def __init__(self, l, phase_exact, phase_remainder=0.0):
        self.l = tuple(l)
        self.phase_exact = phase_exact
        self.phase_remainder = phase_remainder

    @property
    def phase(self):
        return float(self.phase_exact) + self.phase_remainder

    def __repr__(self):
        return "<StabilizerWitness l=%r phase=%s>" % (self.l, self.phase)


def witness_basis(h):
    """R = S^+ V (I; 0): its columns generate every admissible l."""
    S = build_S(h)
    snf = smith_decompose(S)
    V = snf.V.submatrix(range(S.rows), range(h.n))
    return pseudoinverse_full_column_rank(S) * V


def _quadratic(h, l):
    a = h.A.T.apply(l)
    b = h.B.T.apply(l)
    return sum((x * y for x, y in zip(a, b)), Fraction(0)), a, b


def witness_for(h, m, R=None):
    if R is None:
        R = witness_basis(h)
    l = R.apply(m)
    quad, a, b = _quadratic(h, l)
    if any(x.denominator != 1 for x in a):
        raise GkpError("A^T l = %r is not integer" % (a,))
    if any(x.denominator != 1 or x.numerator % 2 for x in b):
        raise GkpError("B^T l = %r is not even" % (b,))
    exact = -quad / 2 - sum((x * c.coeff for x, c in zip(l, h.c)), Fraction(0))
    remainder = -sum(float(x) * c.remainder for x, c in zip(l, h.c)) / SQRT_PI
    return StabilizerWitness(l, exact, remainder)


def check_phase_condition(h, x, witness):
    """True when sqrt(pi) l.x + phi(l) is a multiple of 2 pi."""
    l = witness.l
    exact = sum((a * xi.coeff for a, xi in zip(l, x)), Fraction(0)) + witness.phase_exact
    remainder = (sum(float(a) * xi.remainder for a, xi in zip(l, x)) / SQRT_PI +
                 witness.phase_remainder)
    if remainder == 0.0:
        return exact % 2 == 0
    total = float(exact % 2) + remainder
    return abs(total - 2 * round(total / 2)) <= PHASE_TOLERANCE
