"""Exact rational matrices.

Entries are fractions.Fraction values, so every product, inverse and
elimination is exact.  Matrices are immutable.

>>> m = RatMatrix([[1, 0], [1, 1]])
>>> m
<RatMatrix [[1, 0], [1, 1]]>
>>> invert(m)
<RatMatrix [[1, 0], [-1, 1]]>
>>> m * invert(m) == RatMatrix.identity(2)
True
>>> lcm_of_denominators(RatMatrix([["1/2", "1/3"], [1, "1/6"]]))
6
>>> format_rational(parse_rational("-6/4"))
'-3/2'
>>> format_rational(parse_rational("7"))
'7'
>>> rational_gcd([Fraction(1, 2), Fraction(1, 3)])
Fraction(1, 6)
"""

from __future__ import print_function, division, absolute_import
from gkpTools.error import RationalError
from fractions import Fraction
from functools import reduce
import math

__all__ = [
	"RatMatrix", "toRational", "parse_rational", "format_rational",
	"lcm_of_denominators", "rational_gcd", "determinant", "rank",
	"invert", "pseudoinverse_full_column_rank", "pseudoinverse_via_gram",
	"hstack", "vstack",
]


def toRational(value):
	"""Convert an int, Fraction or "p/q" string to a Fraction."""
	if isinstance(value, Fraction):
		return value
	if isinstance(value, bool):
		raise TypeError("Not a rational: %r" % value)
	if isinstance(value, int):
		return Fraction(value)
	if isinstance(value, str):
		return parse_rational(value)
	raise TypeError("Not a rational: %r" % (value,))


def parse_rational(text):
	text = text.strip()
	if not text:
		raise ValueError("Empty rational")
	num, sep, den = text.partition('/')
	try:
		p = int(num, 10)
		q = int(den, 10) if sep else 1
	except ValueError:
		raise ValueError("Malformed rational: %r" % text)
	if sep and den.strip().startswith(('-', '+')):
		raise ValueError("Sign belongs on the numerator: %r" % text)
	if q == 0:
		raise ValueError("Zero denominator: %r" % text)
	return Fraction(p, q)


def format_rational(value):
	value = toRational(value)
	if value.denominator == 1:
		return "%d" % value.numerator
	return "%d/%d" % (value.numerator, value.denominator)


def _lcm(a, b):
	return a * b // math.gcd(a, b)


def rational_gcd(values):
	"""Largest positive rational g with every value an integer multiple of g.

	Returns 0 when all values are zero.
	"""
	values = [toRational(v) for v in values]
	den = reduce(_lcm, (v.denominator for v in values), 1)
	g = reduce(math.gcd, (abs(v.numerator * (den // v.denominator)) for v in values), 0)
	return Fraction(g, den)


class RatMatrix(object):

	__slots__ = ('rows', 'cols', '_data')

	def __init__(self, rows, cols=None):
		data = tuple(tuple(toRational(x) for x in row) for row in rows)
		if cols is None:
			cols = len(data[0]) if data else 0
		for row in data:
			if len(row) != cols:
				raise ValueError("Ragged matrix rows")
		self.rows = len(data)
		self.cols = cols
		self._data = data

	@classmethod
	def identity(cls, n):
		return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

	@classmethod
	def zeros(cls, rows, cols):
		return cls([[0] * cols for _ in range(rows)], cols)

	@classmethod
	def diagonal(cls, values):
		n = len(values)
		return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

	@classmethod
	def column(cls, values):
		return cls([[v] for v in values], 1)

	@property
	def shape(self):
		return (self.rows, self.cols)

	def __getitem__(self, index):
		i, j = index
		return self._data[i][j]

	def row(self, i):
		return self._data[i]

	def col(self, j):
		return tuple(row[j] for row in self._data)

	def toRows(self):
		return [list(row) for row in self._data]

	def diag(self):
		return tuple(self._data[i][i] for i in range(min(self.rows, self.cols)))

	def __eq__(self, other):
		if not isinstance(other, RatMatrix):
			return NotImplemented
		return self.shape == other.shape and self._data == other._data

	def __ne__(self, other):
		result = self.__eq__(other)
		return result if result is NotImplemented else not result

	def __hash__(self):
		return hash((self.shape, self._data))

	def __repr__(self):
		return "<RatMatrix [%s]>" % ", ".join(
			"[%s]" % ", ".join(format_rational(x) for x in row) for row in self._data)

	@property
	def T(self):
		return RatMatrix(zip(*self._data), self.rows) if self.rows else RatMatrix.zeros(self.cols, 0)

	def __add__(self, other):
		if self.shape != other.shape:
			raise ValueError("Shape mismatch: %r vs %r" % (self.shape, other.shape))
		return RatMatrix([[a + b for a, b in zip(r, s)]
				for r, s in zip(self._data, other._data)], self.cols)

	def __neg__(self):
		return RatMatrix([[-a for a in r] for r in self._data], self.cols)

	def __sub__(self, other):
		return self + (-other)

	def __mul__(self, other):
		if isinstance(other, RatMatrix):
			if self.cols != other.rows:
				raise ValueError("Shape mismatch: %r * %r" % (self.shape, other.shape))
			cols = other.col
			ocols = [cols(j) for j in range(other.cols)]
			return RatMatrix([[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in ocols]
					for r in self._data], other.cols)
		s = toRational(other)
		return RatMatrix([[a * s for a in r] for r in self._data], self.cols)

	def __rmul__(self, other):
		s = toRational(other)
		return RatMatrix([[s * a for a in r] for r in self._data], self.cols)

	def apply(self, vector):
		"""Matrix-vector product, returned as a tuple."""
		vector = [toRational(v) for v in vector]
		if len(vector) != self.cols:
			raise ValueError("Vector length %d, expected %d" % (len(vector), self.cols))
		return tuple(sum((a * b for a, b in zip(r, vector)), Fraction(0)) for r in self._data)

	def submatrix(self, rows, cols):
		"""Select rows and columns; each argument is a range or index list."""
		return RatMatrix([[self._data[i][j] for j in cols] for i in rows], len(cols))

	def isSquare(self):
		return self.rows == self.cols

	def isInteger(self):
		return all(x.denominator == 1 for row in self._data for x in row)

	def isUnimodular(self):
		return self.isSquare() and self.isInteger() and abs(determinant(self)) == 1


def hstack(*matrices):
	rows = matrices[0].rows
	if any(m.rows != rows for m in matrices):
		raise ValueError("hstack needs equal row counts")
	return RatMatrix([sum((m.row(i) for m in matrices), ()) for i in range(rows)],
			sum(m.cols for m in matrices))


def vstack(*matrices):
	cols = matrices[0].cols
	if any(m.cols != cols for m in matrices):
		raise ValueError("vstack needs equal column counts")
	return RatMatrix([r for m in matrices for r in m._data], cols)


def lcm_of_denominators(m):
	"""Smallest positive integer sigma with sigma*m integral."""
	if not m.rows or not m.cols:
		raise ValueError("Empty matrix")
	sigma = 1
	for row in m._data:
		for x in row:
			sigma = _lcm(sigma, x.denominator)
	return sigma


def _row_echelon(m):
	"""Reduced row echelon form of m; returns (rows, pivot columns, sign).

	sign is the determinant factor from row swaps and scaling when m is
	square, accumulated as the product of pivots.
	"""
	a = [list(row) for row in m._data]
	pivots = []
	det = Fraction(1)
	r = 0
	for c in range(m.cols):
		p = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
		if p is None:
			det = Fraction(0)
			continue
		if p != r:
			a[r], a[p] = a[p], a[r]
			det = -det
		pivot = a[r][c]
		det *= pivot
		a[r] = [x / pivot for x in a[r]]
		for i in range(m.rows):
			if i != r and a[i][c] != 0:
				f = a[i][c]
				a[i] = [x - f * y for x, y in zip(a[i], a[r])]
		pivots.append(c)
		r += 1
		if r == m.rows:
			if c != m.cols - 1:
				det = Fraction(0)
			break
	return a, pivots, det


def determinant(m):
	if not m.isSquare():
		raise ValueError("Determinant of non-square %dx%d matrix" % m.shape)
	if not m.rows:
		return Fraction(1)
	return _row_echelon(m)[2]


def rank(m):
	return len(_row_echelon(m)[1])


def invert(m):
	if not m.isSquare():
		raise RationalError("Cannot invert non-square %dx%d matrix" % m.shape)
	n = m.rows
	a, pivots, det = _row_echelon(hstack(m, RatMatrix.identity(n)))
	if len(pivots) < n or pivots[n - 1] != n - 1:
		raise RationalError("Singular matrix (determinant %s)" % format_rational(determinant(m)))
	return RatMatrix([row[n:] for row in a[:n]], n)


def pseudoinverse_full_column_rank(m):
	"""Moore-Penrose pseudoinverse (m^T m)^-1 m^T of a full-column-rank matrix.

	>>> S = RatMatrix([[-1, -1], [0, 1], [1, 1], [0, 0]])
	>>> pseudoinverse_full_column_rank(S)
	<RatMatrix [[-1/2, -1, 1/2, 0], [0, 1, 0, 0]]>
	"""
	_, pivots, _ = _row_echelon(m)
	if len(pivots) < m.cols:
		dependent = [j for j in range(m.cols) if j not in pivots]
		raise RationalError("Rank-deficient matrix: columns %s depend on the others"
				% ", ".join(str(j) for j in dependent))
	mt = m.T
	return invert(mt * m) * mt


def pseudoinverse_via_gram(A, B):
	"""Pseudoinverse of (A^T; B^T / 2) through its Gram matrix A A^T + B B^T / 4.

	>>> A = RatMatrix([[-1, 0], [-1, 1]])
	>>> B = RatMatrix([[2, 0], [2, 0]])
	>>> pseudoinverse_via_gram(A, B)
	<RatMatrix [[-1/2, -1, 1/2, 0], [0, 1, 0, 0]]>
	"""
	half = Fraction(1, 2) * B
	return invert(A * A.T + half * half.T) * hstack(A, half)


if __name__ == "__main__":
	import sys
	import doctest
	sys.exit(doctest.testmod().failed)
