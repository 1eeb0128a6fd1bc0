"""Gaussian operations as rational symplectic matrices plus displacements.

Quadratures are ordered (q_0 .. q_{n-1}, p_0 .. p_{n-1}).  An operation U
acts in the Heisenberg picture as U^dag r U = M r + d, so the first n
rows of M and d give the evolved positions Q = A q + B p + c.

Displacement entries are SplitReal values.  Rational amounts given to
the gate constructors are multiples of sqrt(pi); floats are absolute.
"""

from __future__ import print_function, division, absolute_import
from __future__ import unicode_literals
from gkpTools.error import SymplecticError
from gkpTools.misc.rationalTools import RatMatrix, toRational, invert, vstack, hstack
from gkpTools.misc.splitReal import SplitReal
from fractions import Fraction

__all__ = [
    "GaussianOp", "HeisenbergQuadratures", "omega", "is_symplectic",
    "compose", "sequence", "transport",
    "gate_shift_q", "gate_shift_p", "gate_rotation", "gate_squeeze",
    "gate_shear", "gate_sum", "gate_fourier", "gate_phase", "gate_x",
    "gate_z", "gate_cx", "gate_identity",
]


def omega(n):
    zero, one = RatMatrix.zeros(n, n), RatMatrix.identity(n)
    return vstack(hstack(zero, one), hstack(-one, zero))


def is_symplectic(M):
    if not M.isSquare() or M.rows % 2:
        return False
    W = omega(M.rows // 2)
    return M.T * W * M == W


def toSplit(amount):
    if isinstance(amount, SplitReal):
        return amount
    if isinstance(amount, float):
        return SplitReal(0, amount)
    return SplitReal(toRational(amount))


def transport(M, disp):
    """M applied to a SplitReal vector: exact on coefficients."""
    out = []
    for i in range(M.rows):
        row = M.row(i)
        coeff = sum((a * d.coeff for a, d in zip(row, disp)), Fraction(0))
        rem = sum(float(a) * d.remainder for a, d in zip(row, disp) if a)
        out.append(SplitReal(coeff, rem))
    return tuple(out)


class HeisenbergQuadratures(object):
    """Evolved positions Q_j = sum_k A[j,k] q_k + B[j,k] p_k + c_j."""

    def __init__(self, A, B, c):
        self.A, self.B, self.c = A, B, tuple(c)
        self.n = A.rows

    def row(self, j):
        return self.A.row(j), self.B.row(j), self.c[j]

    def __repr__(self):
        return "<HeisenbergQuadratures A=%r B=%r c=%r>" % (self.A, self.B, self.c)


class GaussianOp(object):

    def __init__(self, M, disp=None, check=True):
        if check and not is_symplectic(M):
            raise SymplecticError("Matrix is not symplectic: %r" % (M,))
        self.M = M
        self.n_modes = M.rows // 2
        if disp is None:
            disp = (SplitReal(),) * M.rows
        disp = tuple(toSplit(d) for d in disp)
        if len(disp) != M.rows:
            raise ValueError("Displacement has %d entries, expected %d"
                             % (len(disp), M.rows))
        self.disp = disp

    def block(self, r, c):
        n = self.n_modes
        return self.M.submatrix(range(r * n, (r + 1) * n), range(c * n, (c + 1) * n))

    @property
    def A(self):
        return self.block(0, 0)

    @property
    def B(self):
        return self.block(0, 1)

    @property
    def C(self):
        return self.block(1, 0)

    @property
    def D(self):
        return self.block(1, 1)

    def heisenberg(self):
        return HeisenbergQuadratures(self.A, self.B, self.disp[:self.n_modes])

    def isInteger(self):
        return self.M.isInteger()

    def inverse(self):
        Minv = invert(self.M)
        return GaussianOp(Minv, [-d for d in transport(Minv, self.disp)], check=False)

    def then(self, other):
        """self acts first, other second."""
        return compose(other, self)

    def __eq__(self, other):
        if not isinstance(other, GaussianOp):
            return NotImplemented
        return self.M == other.M and self.disp == other.disp

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.M)

    def __repr__(self):
        return "<GaussianOp n=%d M=%r disp=%r>" % (self.n_modes, self.M, self.disp)


def compose(*ops):
    """Operator product ops[0] * ops[1] * ... ; the last operator acts first.

    U_a U_b conjugates r to M_a (M_b r + d_b) + d_a.
    """
    if len(ops) == 1 and not isinstance(ops[0], GaussianOp):
        ops = tuple(ops[0])
    if not ops:
        raise ValueError("compose() needs at least one operation")
    n = ops[0].n_modes
    for op in ops:
        if op.n_modes != n:
            raise ValueError("Mode count mismatch: %d vs %d" % (op.n_modes, n))
    result = ops[-1]
    for op in reversed(ops[:-1]):
        disp = transport(op.M, result.disp)
        disp = [a + b for a, b in zip(op.disp, disp)]
        result = GaussianOp(op.M * result.M, disp, check=False)
    return result


def sequence(ops, n_modes=None):
    """Compose in time order; an empty list gives the identity."""
    ops = list(ops)
    if not ops:
        return gate_identity(n_modes)
    return compose(*reversed(ops))


def _check_mode(n, j):
    if not 0 <= j < n:
        raise IndexError("Mode %d out of range for %d modes" % (j, n))


def _single_mode(n, j, a, b, c, d):
    _check_mode(n, j)
    rows = RatMatrix.identity(2 * n).toRows()
    rows[j][j], rows[j][n + j] = a, b
    rows[n + j][j], rows[n + j][n + j] = c, d
    return RatMatrix(rows, 2 * n)


def gate_identity(n):
    return GaussianOp(RatMatrix.identity(2 * n), check=False)


def gate_shift_q(n, j, amount):
    """exp(-i d p_j): displaces q_j by +d."""
    _check_mode(n, j)
    disp = [SplitReal()] * (2 * n)
    disp[j] = toSplit(amount)
    return GaussianOp(RatMatrix.identity(2 * n), disp, check=False)


def gate_shift_p(n, j, amount):
    """exp(i c q_j): displaces p_j by +c."""
    _check_mode(n, j)
    disp = [SplitReal()] * (2 * n)
    disp[n + j] = toSplit(amount)
    return GaussianOp(RatMatrix.identity(2 * n), disp, check=False)


def gate_rotation(n, j, cos, sin):
    cos, sin = toRational(cos), toRational(sin)
    if cos * cos + sin * sin != 1:
        raise ValueError("(%s, %s) is not on the unit circle" % (cos, sin))
    return GaussianOp(_single_mode(n, j, cos, -sin, sin, cos), check=False)


def gate_squeeze(n, j, s):
    s = toRational(s)
    if s == 0:
        raise ValueError("Squeezing parameter must be non-zero")
    return GaussianOp(_single_mode(n, j, s, 0, 0, 1 / s), check=False)


def gate_shear(n, j, c):
    """exp(i c q_j^2 / 2): p_j -> p_j + c q_j."""
    return GaussianOp(_single_mode(n, j, 1, 0, toRational(c), 1), check=False)


def gate_sum(n, j, k):
    """exp(-i q_j p_k): q_k -> q_k + q_j and p_j -> p_j - p_k."""
    _check_mode(n, j)
    _check_mode(n, k)
    if j == k:
        raise ValueError("SUM needs two distinct modes, got %d twice" % j)
    rows = RatMatrix.identity(2 * n).toRows()
    rows[k][j] = 1
    rows[n + j][n + k] = -1
    return GaussianOp(RatMatrix(rows, 2 * n), check=False)


def gate_fourier(n, j):
    return gate_rotation(n, j, 0, 1)


def gate_phase(n, j):
    return gate_shear(n, j, 1)


def gate_cx(n, j, k):
    return gate_sum(n, j, k)


def gate_x(n, j):
    return gate_shift_q(n, j, 1)


def gate_z(n, j):
    return gate_shift_p(n, j, 1)
