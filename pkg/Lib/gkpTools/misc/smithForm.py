"""Smith normal form of integer matrices with unimodular factors.

The decomposition keeps the product V * Dmat * U equal to the input at
every step, so V and U come out directly (no inversion at the end).

>>> snf = smith_normal_form(RatMatrix([[-1, -1], [0, 1], [1, 1], [0, 0]]))
>>> snf.Dmat
<RatMatrix [[1, 0], [0, 1], [0, 0], [0, 0]]>
>>> snf.V * snf.Dmat * snf.U == RatMatrix([[-1, -1], [0, 1], [1, 1], [0, 0]])
True
"""

from __future__ import print_function, division, absolute_import
from gkpTools.misc.rationalTools import RatMatrix, lcm_of_denominators
from gkpTools.error import RationalError

__all__ = ["SmithDecomposition", "smith_normal_form", "smith_decompose"]


class SmithDecomposition(object):

	def __init__(self, V, Dmat, U, sigma=1):
		self.V = V
		self.Dmat = Dmat
		self.U = U
		self.sigma = sigma

	def invariants(self):
		"""Non-zero diagonal entries, in divisibility order."""
		return tuple(d for d in self.Dmat.diag() if d != 0)

	def verify(self, m):
		"""True when this is a Smith decomposition of sigma * m."""
		if not (self.V.isUnimodular() and self.U.isUnimodular()):
			return False
		if self.V * self.Dmat * self.U != self.sigma * m:
			return False
		D = self.Dmat
		if any(D[i, j] != 0 for i in range(D.rows) for j in range(D.cols) if i != j):
			return False
		diag = D.diag()
		if any(d < 0 for d in diag):
			return False
		# Zeros trail the non-zero invariants, each dividing the next.
		invariants = self.invariants()
		if list(diag[:len(invariants)]) != list(invariants):
			return False
		return all(b % a == 0 for a, b in zip(invariants, invariants[1:]))

	def __repr__(self):
		return "<SmithDecomposition sigma=%d invariants=%r>" % (
			self.sigma, tuple(int(d) for d in self.invariants()))


class _Reducer(object):

	def __init__(self, rows):
		self.D = rows
		self.r = len(rows)
		self.c = len(rows[0]) if rows else 0
		self.V = [[int(i == j) for j in range(self.r)] for i in range(self.r)]
		self.U = [[int(i == j) for j in range(self.c)] for i in range(self.c)]

	# Row operations on D are mirrored as inverse column operations on V,
	# column operations on D as inverse row operations on U.

	def swapRows(self, i, j):
		D, V = self.D, self.V
		D[i], D[j] = D[j], D[i]
		for row in V:
			row[i], row[j] = row[j], row[i]

	def addRow(self, i, j, k):
		"""row_i += k * row_j"""
		D, V = self.D, self.V
		D[i] = [a + k * b for a, b in zip(D[i], D[j])]
		for row in V:
			row[j] -= k * row[i]

	def negateRow(self, i):
		self.D[i] = [-a for a in self.D[i]]
		for row in self.V:
			row[i] = -row[i]

	def swapCols(self, i, j):
		for row in self.D:
			row[i], row[j] = row[j], row[i]
		U = self.U
		U[i], U[j] = U[j], U[i]

	def addCol(self, i, j, k):
		"""col_i += k * col_j"""
		for row in self.D:
			row[i] += k * row[j]
		U = self.U
		U[j] = [a - k * b for a, b in zip(U[j], U[i])]

	def smallest(self, t):
		best = None
		for i in range(t, self.r):
			for j in range(t, self.c):
				a = abs(self.D[i][j])
				if a and (best is None or a < best[0]):
					best = (a, i, j)
		return best

	def reduce(self):
		D = self.D
		for t in range(min(self.r, self.c)):
			best = self.smallest(t)
			if best is None:
				break
			_, i, j = best
			self.swapRows(t, i)
			self.swapCols(t, j)
			while True:
				done = True
				for i in range(t + 1, self.r):
					if D[i][t]:
						self.addRow(i, t, -(D[i][t] // D[t][t]))
						if D[i][t]:
							done = False
				for j in range(t + 1, self.c):
					if D[t][j]:
						self.addCol(j, t, -(D[t][j] // D[t][t]))
						if D[t][j]:
							done = False
				if not done:
					# A remainder survived; bring the smallest one to the pivot.
					cands = [(abs(D[i][t]), i, 'r') for i in range(t + 1, self.r) if D[i][t]]
					cands += [(abs(D[t][j]), j, 'c') for j in range(t + 1, self.c) if D[t][j]]
					_, k, kind = min(cands)
					if kind == 'r':
						self.swapRows(t, k)
					else:
						self.swapCols(t, k)
					continue
				p = D[t][t]
				bad = next(((i, j) for i in range(t + 1, self.r) for j in range(t + 1, self.c)
					if D[i][j] % p), None)
				if bad is None:
					break
				self.addRow(t, bad[0], 1)
			if D[t][t] < 0:
				self.negateRow(t)


def smith_normal_form(m, sigma=1):
	"""Decompose integer matrix m as V * Dmat * U.

	sigma is recorded on the result when m is a scaled rational matrix.
	"""
	if not m.isInteger():
		raise RationalError("Smith normal form needs integer entries")
	red = _Reducer([[int(x) for x in row] for row in m.toRows()])
	red.reduce()
	return SmithDecomposition(RatMatrix(red.V, m.rows), RatMatrix(red.D, m.cols),
			RatMatrix(red.U, m.cols), sigma)


def smith_decompose(S):
	"""Clear denominators of S and decompose: V * Dmat * U == sigma * S."""
	sigma = lcm_of_denominators(S)
	return smith_normal_form(sigma * S, sigma)


if __name__ == "__main__":
	import sys
	import doctest
	sys.exit(doctest.testmod().failed)
