"""Exact output distributions of GKP circuits.

Measuring every position quadrature after a rational Gaussian circuit on
|0_GKP>^n gives an equal-weight comb of delta peaks on the shifted lattice

	x = sqrt(pi) * R^-T (t + 2m) + c,   m in Z^n.

compute_pdf() finds R^-T and t from the Smith normal form of
S = (A^T; B^T / 2), where Q = A q + B p + c are the evolved positions.
All lattice quantities are kept in units of sqrt(pi).
"""

from __future__ import print_function, division, absolute_import
from gkpTools.circuitLib.gaussianOp import GaussianOp
from gkpTools.circuitLib.classify import classify
from gkpTools.error import NonRationalError, SupportError
from gkpTools.misc.rationalTools import (
	RatMatrix, vstack, hstack, invert, rational_gcd, format_rational,
	parse_rational, pseudoinverse_full_column_rank, toRational)
from gkpTools.misc.smithForm import smith_decompose
from gkpTools.misc.splitReal import SplitReal, TOLERANCE
from gkpTools.misc.xmlReader import elements
from fractions import Fraction
import itertools

__all__ = [
	"LatticePDF", "PeriodicityLattice", "ModeSupport", "build_S",
	"compute_pdf", "periodicity_lattice", "contains_point", "mode_support",
	"reachability_holds",
]


def build_S(h):
	return vstack(h.A.T, Fraction(1, 2) * h.B.T)


class PeriodicityLattice(object):
	"""P = (A  B/2): support points repeat under x -> x + 2 sqrt(pi) P (k; k')."""

	def __init__(self, P):
		self.P = P

	def displacement(self, k, kp):
		"""The shift 2 P (k; k') in units of sqrt(pi)."""
		return tuple(2 * x for x in self.P.apply(list(k) + list(kp)))


def periodicity_lattice(h):
	return PeriodicityLattice(hstack(h.A, Fraction(1, 2) * h.B))


class ModeSupport(object):
	"""Projection of a support onto one mode: offset + period * sqrt(pi) * Z.

	The offset coefficient is reduced into [0, period).
	"""

	def __init__(self, period, offset):
		self.period = period
		self.offset = offset

	def points(self, window):
		return [self.offset + SplitReal(self.period * m) for m in range(-window, window + 1)]

	def contains(self, x):
		if abs(x.remainder - self.offset.remainder) > TOLERANCE:
			return False
		return ((x.coeff - self.offset.coeff) / self.period).denominator == 1

	def __repr__(self):
		return "<ModeSupport period=%s offset=%s>" % (format_rational(self.period), self.offset)


class LatticePDF(object):

	def __init__(self, G, offset_sqrtpi, offset_real, **diagnostics):
		self.G = G
		self.n = G.rows
		self.offset_sqrtpi = tuple(toRational(x) for x in offset_sqrtpi)
		self.offset_real = tuple(offset_real)
		if len(self.offset_sqrtpi) != self.n or len(self.offset_real) != self.n:
			raise ValueError("Offsets must have %d entries" % self.n)
		self._Ginv = invert(G) if self.n else G
		# S, sigma, V, T, t, R and Rinv_T when built by compute_pdf().
		self.diagnostics = diagnostics

	def __getattr__(self, name):
		diagnostics = self.__dict__.get('diagnostics', {})
		if name in diagnostics:
			return diagnostics[name]
		raise AttributeError(name)

	def center(self):
		"""Exact part of the m = 0 point, in units of sqrt(pi)."""
		return tuple(o + c.coeff for o, c in zip(self.offset_sqrtpi, self.offset_real))

	def point(self, m):
		lat = self.G.apply(m)
		return tuple(SplitReal(g + o + c.coeff, c.remainder)
				for g, o, c in zip(lat, self.offset_sqrtpi, self.offset_real))

	def points(self, box):
		"""Support points for m in [-box, box]^n, in lexicographic m order."""
		rng = range(-box, box + 1)
		return [self.point(m) for m in itertools.product(rng, repeat=self.n)]

	def latticeIndex(self, x):
		"""The m with point(m) == x, or None if x is off the support."""
		x = tuple(x)
		if len(x) != self.n:
			raise ValueError("Point has %d coordinates, expected %d" % (len(x), self.n))
		for xi, c in zip(x, self.offset_real):
			if abs(xi.remainder - c.remainder) > TOLERANCE:
				return None
		diff = [xi.coeff - o for xi, o in zip(x, self.center())]
		m = self._Ginv.apply(diff)
		if any(v.denominator != 1 for v in m):
			return None
		return tuple(int(v) for v in m)

	def contains(self, x):
		return self.latticeIndex(x) is not None

	def modeSupport(self, j):
		if not 0 <= j < self.n:
			raise IndexError("Mode %d out of range for %d modes" % (j, self.n))
		period = rational_gcd(self.G.row(j))
		offset = self.center()[j] % period
		return ModeSupport(period, SplitReal(offset, self.offset_real[j].remainder))

	def isLogical(self):
		"""True when every support point is an integer multiple of sqrt(pi)."""
		return (self.G.isInteger() and
			all(c.denominator == 1 for c in self.center()) and
			all(c.remainder == 0.0 for c in self.offset_real))

	def logicalDistribution(self, modes=None):
		"""Exact distribution of per-mode bins (x / sqrt(pi)) mod 2.

		Only defined for logical supports; the image of m in {0,1}^n
		covers every reachable bit pattern equally often.
		"""
		if not self.isLogical():
			raise SupportError("Support is not on the sqrt(pi) grid")
		if modes is None:
			modes = range(self.n)
		modes = list(modes)
		counts = {}
		center = self.center()
		for m in itertools.product((0, 1), repeat=self.n):
			lat = self.G.apply(m)
			bits = tuple(int(lat[j] + center[j]) % 2 for j in modes)
			counts[bits] = counts.get(bits, 0) + 1
		total = 2 ** self.n
		return {bits: Fraction(c, total) for bits, c in sorted(counts.items())}

	def sameSupport(self, other):
		"""Lattice equality: same point set, whatever generator or offset."""
		if self.n != other.n:
			return False
		if not (self._Ginv * other.G).isUnimodular():
			return False
		return other.contains(self.point((0,) * self.n))

	def toXML(self, writer):
		with writer.element("latticePDF", n=self.n):
			writer.matrix("generator", self.G)
			writer.line("offset", values=self.offset_sqrtpi)
			with writer.element("displacement"):
				for c in self.offset_real:
					writer.line("entry", [("sqrtpi", c.coeff), ("remainder", c.remainder)])

	@classmethod
	def fromXML(cls, element):
		name, attrs, content = element
		if name != "latticePDF":
			raise ValueError("Expected latticePDF element, got %s" % name)
		n = int(attrs["n"])
		rows = [[parse_rational(v) for v in r[1]["values"].split()]
				for r in elements(elements(content, "generator")[0][2], "row")]
		offset_elements = elements(content, "offset")
		offset = [parse_rational(v) for v in offset_elements[0][1]["values"].split()] if n else []
		entries = elements(elements(content, "displacement")[0][2], "entry")
		real = [SplitReal(parse_rational(e[1]["sqrtpi"]), float(e[1]["remainder"]))
				for e in entries]
		return cls(RatMatrix(rows, n), offset, real)

	def summary(self):
		"""Human-readable lines: generator, offsets and per-mode supports."""
		lines = ["modes: %d" % self.n]
		lines.append("generator (sqrt(pi) units):")
		for i in range(self.n):
			lines.append("  " + " ".join(format_rational(x) for x in self.G.row(i)))
		lines.append("offset (sqrt(pi) units): " +
				" ".join(format_rational(x) for x in self.offset_sqrtpi))
		lines.append("displacement: " + " ".join(str(c) for c in self.offset_real))
		if "t" in self.diagnostics:
			lines.append("t mod 2: " + " ".join(format_rational(x) for x in self.t))
			lines.append("sigma: %d" % self.sigma)
		for j in range(self.n):
			support = self.modeSupport(j)
			lines.append("mode %d: %s" % (j, describe_mode(support)))
		return lines

	def __repr__(self):
		return "<LatticePDF n=%d G=%r offset=%r>" % (self.n, self.G, self.offset_sqrtpi)


def describe_mode(support):
	period, offset = support.period, support.offset
	if offset.isExact() and period == 2 and offset.coeff in (0, 1):
		return "%s multiples of sqrt(pi)" % ("even" if offset.coeff == 0 else "odd")
	return "%s + %s*sqrt(pi)*Z" % (offset, format_rational(period))


def compute_pdf(op):
	"""Run the Smith-form pipeline on a rational Gaussian operation."""
	if not isinstance(op, GaussianOp):
		raise NonRationalError("Operation has no rational symplectic matrix",
				classify(op))
	n = op.n_modes
	h = op.heisenberg()
	S = build_S(h)
	snf = smith_decompose(S)
	V = snf.V
	first = range(n)
	# R^-T = S^T V^-T (I; 0): the first n columns of V^-T.
	RinvT = S.T * invert(V).T.submatrix(range(2 * n), first)
	V11 = V.submatrix(first, first)
	V21 = V.submatrix(range(n, 2 * n), first)
	T = V11.T * V21
	t = tuple(x % 2 for x in T.diag())
	R = pseudoinverse_full_column_rank(S) * V.submatrix(range(2 * n), first)
	return LatticePDF(2 * RinvT, RinvT.apply(t), h.c,
			S=S, sigma=snf.sigma, V=V, T=T, t=t, R=R, Rinv_T=RinvT, snf=snf)


def contains_point(pdf, x):
	return pdf.contains(x)


def mode_support(pdf, j):
	return pdf.modeSupport(j)


def reachability_holds(pdf, m):
	"""S^T (S^T)^+ R^-T m == R^-T m, exactly."""
	S = pdf.S
	StPinv = pseudoinverse_full_column_rank(S).T
	target = pdf.Rinv_T.apply(m)
	return (S.T * StPinv).apply(target) == target
