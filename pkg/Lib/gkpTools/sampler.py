"""Weak simulation: homodyne samples from lattice distributions.

A modular measurement reports x mod k*sqrt(pi).  The projection of a
lattice support onto one mode is offset + period*sqrt(pi)*Z, so the
modular outcomes form a finite set of k/gcd(period, k) equally likely
values.  Plain measurements have no normalizable distribution; they are
drawn uniformly from an explicit window of lattice indices.

Adaptive circuits chain single-measurement strong simulations: each stage
composes all operations so far, conditions the lattice on earlier
outcomes and samples the next mode.
"""

from __future__ import print_function, division, absolute_import
from gkpTools.circuitLib.gaussianOp import sequence
from gkpTools.latticeLib.pdf import LatticePDF, compute_pdf
from gkpTools.error import GkpError, StageError, SupportError
from gkpTools.misc.rationalTools import (
	RatMatrix, rational_gcd, toRational, format_rational, invert)
from gkpTools.misc.smithForm import smith_normal_form
from gkpTools.misc.splitReal import SplitReal, TOLERANCE
from fractions import Fraction
from functools import reduce
import math
import numpy as np

__all__ = [
	"ModularSupport", "Stage", "AdaptiveCircuit", "StageRecord",
	"OutcomeRecord", "logical_bin", "make_rng", "stage_rng",
	"modular_support", "sample_modular", "sample_plain", "condition_on",
	"sample_joint", "sample_shots", "conditioned_pdf", "run_adaptive", "histogram", "DEFAULT_WINDOW",
]

DEFAULT_WINDOW = 2


def make_rng(seed):
	"""A numpy Generator from a seed, SeedSequence or Generator."""
	if isinstance(seed, np.random.Generator):
		return seed
	return np.random.default_rng(seed)


def stage_rng(seed, shot, stage):
	"""Independent stream per (shot, stage); adding stages never shifts earlier draws."""
	return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(shot, stage)))


def logical_bin(outcome):
	"""Nearest multiple of sqrt(pi), mod 2; ties go to 0.

	>>> logical_bin(SplitReal(3))
	1
	>>> logical_bin(SplitReal("1/2"))
	0
	>>> logical_bin(SplitReal(-1, 0.1))
	1
	"""
	if outcome.isExact():
		r = outcome.coeff % 2
	else:
		r = outcome.inSqrtPi() % 2.0
	d0 = min(r, 2 - r)
	d1 = abs(r - 1)
	return 1 if d1 < d0 else 0


class ModularSupport(object):

	def __init__(self, modulus, outcomes):
		self.modulus = modulus
		self.outcomes = list(outcomes)

	def probability(self):
		return Fraction(1, len(self.outcomes))

	def __len__(self):
		return len(self.outcomes)

	def __repr__(self):
		return "<ModularSupport mod %s: %s>" % (
			format_rational(self.modulus), " ".join(str(o) for o in self.outcomes))


def modular_support(pdf, j, k):
	k = toRational(k)
	if k <= 0:
		raise ValueError("Modulus must be positive")
	support = pdf.modeSupport(j)
	g = rational_gcd([support.period, k])
	count = k / g
	assert count.denominator == 1
	base = support.offset.coeff % g
	rem = support.offset.remainder
	outcomes = [SplitReal(base + i * g, rem) % k for i in range(int(count))]
	outcomes.sort(key=lambda o: (o.coeff, o.remainder))
	return ModularSupport(k, outcomes)


def sample_modular(pdf, j, k, rng):
	support = modular_support(pdf, j, k)
	rng = make_rng(rng)
	return support.outcomes[int(rng.integers(len(support)))]


def sample_plain(pdf, j, window, rng):
	if window < 1:
		raise ValueError("Window must be at least 1")
	support = pdf.modeSupport(j)
	rng = make_rng(rng)
	m = int(rng.integers(-window, window + 1))
	return support.offset + SplitReal(support.period * m)


def _solve_row(coeffs, rhs):
	"""Integer solutions of coeffs . y == rhs as (y0, W): y = y0 + W z.

	Returns None when no integer solution exists.
	"""
	N = len(coeffs)
	snf = smith_normal_form(RatMatrix([coeffs], N))
	d = snf.Dmat[0, 0] * snf.V[0, 0]
	if d == 0:
		return None if rhs else ((Fraction(0),) * N, RatMatrix.identity(N))
	z0 = Fraction(rhs) / d
	if z0.denominator != 1:
		return None
	Uinv = invert(snf.U)
	y0 = tuple(Uinv[i, 0] * z0 for i in range(N))
	return y0, Uinv.submatrix(range(N), range(1, N))


def _lattice_basis(generators, rank):
	"""A basis (as columns) of the lattice spanned by the given columns."""
	scale = reduce(lambda a, b: a * b // math.gcd(a, b),
			(x.denominator for row in generators.toRows() for x in row), 1)
	snf = smith_normal_form(scale * generators)
	diag = snf.Dmat.diag()
	cols = [[snf.V[i, c] * diag[c] / scale for c in range(rank)]
			for i in range(generators.rows)]
	return RatMatrix(cols, rank)


def condition_on(pdf, j, value, modulus=None):
	"""Support of the other modes given x_j == value (mod modulus*sqrt(pi))."""
	if not 0 <= j < pdf.n:
		raise IndexError("Mode %d out of range for %d modes" % (j, pdf.n))
	n = pdf.n
	center = pdf.center()
	if abs(value.remainder - pdf.offset_real[j].remainder) > TOLERANCE:
		raise SupportError("Value %s is off the support of mode %d" % (value, j))
	target = value.coeff - center[j]
	row = list(pdf.G.row(j))
	extra = [] if modulus is None else [toRational(modulus)]
	scale = reduce(lambda a, b: a * b // math.gcd(a, b),
			(x.denominator for x in row + extra + [target]), 1)
	coeffs = [int(x * scale) for x in row] + [-int(x * scale) for x in extra]
	solution = _solve_row(coeffs, int(target * scale))
	if solution is None:
		raise SupportError("Value %s is off the support of mode %d" % (value, j))
	y0, W = solution
	if n == 1:
		return LatticePDF(RatMatrix.zeros(0, 0), [], [])
	others = [i for i in range(n) if i != j]
	Gothers = pdf.G.submatrix(others, range(n))
	Wm = W.submatrix(range(n), range(W.cols))
	generators = Gothers * Wm
	if modulus is None:
		G = generators
	else:
		G = _lattice_basis(generators, n - 1)
	shift = Gothers.apply(y0[:n])
	offset = [shift[a] + center[i] for a, i in enumerate(others)]
	real = [SplitReal(0, pdf.offset_real[i].remainder) for i in others]
	return LatticePDF(G, offset, real)


def sample_joint(pdf, rng, modulus=None, window=DEFAULT_WINDOW):
	"""Sample every mode in order, conditioning after each draw."""
	rng = make_rng(rng)
	outcomes = []
	while pdf.n:
		if modulus is not None:
			x = sample_modular(pdf, 0, modulus, rng)
		else:
			x = sample_plain(pdf, 0, window, rng)
		outcomes.append(x)
		pdf = condition_on(pdf, 0, x, modulus)
	return outcomes


def sample_shots(op, seed, shots, modulus=None, window=DEFAULT_WINDOW):
	"""Joint samples of every mode, one independent stream per shot."""
	pdf = compute_pdf(op)
	return [sample_joint(pdf, stage_rng(seed, shot, 0), modulus, window)
			for shot in range(shots)]


class Stage(object):
	"""ops: callable from earlier outcomes to a GaussianOp; mode: int or callable."""

	def __init__(self, ops, mode, modulus=None, window=None):
		self.ops = ops
		self.mode = mode
		self.modulus = None if modulus is None else toRational(modulus)
		self.window = window

	def measuredMode(self, outcomes):
		return self.mode(outcomes) if callable(self.mode) else self.mode


class AdaptiveCircuit(object):

	def __init__(self, n_modes, stages):
		self.n_modes = n_modes
		self.stages = list(stages)


class StageRecord(object):

	def __init__(self, mode, outcome, modulus=None, window=None):
		self.mode, self.outcome = mode, outcome
		self.modulus, self.window = modulus, window

	def toDict(self):
		record = {"mode": self.mode, "outcome": str(self.outcome)}
		if self.modulus is not None:
			record["modulus"] = format_rational(self.modulus)
		else:
			record["window"] = self.window
		return record

	def __repr__(self):
		return "<StageRecord mode=%d outcome=%s>" % (self.mode, self.outcome)


class OutcomeRecord(object):

	def __init__(self, seed, shot=0):
		self.seed, self.shot = seed, shot
		self.stages = []

	def outcomes(self):
		return [s.outcome for s in self.stages]

	def __len__(self):
		return len(self.stages)

	def __eq__(self, other):
		if not isinstance(other, OutcomeRecord):
			return NotImplemented
		return ([(s.mode, s.outcome, s.modulus, s.window) for s in self.stages] ==
			[(s.mode, s.outcome, s.modulus, s.window) for s in other.stages])

	def __ne__(self, other):
		result = self.__eq__(other)
		return result if result is NotImplemented else not result

	__hash__ = None


def _leaves_measured(op, modes):
	n = op.n_modes
	for i in modes:
		unit = tuple(Fraction(int(c == i)) for c in range(2 * n))
		if op.M.row(i) != unit or op.disp[i] != SplitReal():
			return False
	return True


def conditioned_pdf(ops, measured, n_modes):
	"""The lattice PDF of sequence(ops) after the (mode, outcome, modulus)
	measurements, with the indices of the modes left unmeasured."""
	pdf = compute_pdf(sequence(ops, n_modes))
	remaining = list(range(n_modes))
	for m, x, k in measured:
		pdf = condition_on(pdf, remaining.index(m), x, k)
		remaining.remove(m)
	return pdf, remaining


def run_adaptive(circ, seed, shot=0, log=None, window=DEFAULT_WINDOW):
	"""Run one shot.  Plain stages without a window of their own use window."""
	default_window = window
	record = OutcomeRecord(seed, shot)
	ops = []
	measured = []
	for s, stage in enumerate(circ.stages):
		outcomes = record.outcomes()
		try:
			op = stage.ops(outcomes)
			mode = stage.measuredMode(outcomes)
			if not 0 <= mode < circ.n_modes:
				raise IndexError("Mode %d out of range for %d modes" % (mode, circ.n_modes))
			if mode in [m for m, _, _ in measured]:
				raise GkpError("Mode %d was already measured" % mode)
			if not _leaves_measured(op, [m for m, _, _ in measured]):
				raise GkpError("Operation acts on the position of a measured mode")
			ops.append(op)
			pdf, remaining = conditioned_pdf(ops, measured, circ.n_modes)
			j = remaining.index(mode)
			rng = stage_rng(seed, shot, s)
			if stage.modulus is not None:
				x = sample_modular(pdf, j, stage.modulus, rng)
				window = None
			else:
				window = stage.window or default_window
				x = sample_plain(pdf, j, window, rng)
		except StageError:
			raise
		except (GkpError, ValueError, IndexError) as e:
			err = StageError(str(e), s)
			err.cause = e
			raise err
		if log is not None:
			log("stage", s, "mode", mode, "outcome", x)
		measured.append((mode, x, stage.modulus))
		record.stages.append(StageRecord(mode, x, stage.modulus, window))
	return record


def histogram(samples):
	"""Counts of outcome tuples, sorted by exact value."""
	counts = {}
	for sample in samples:
		key = tuple(sample)
		counts[key] = counts.get(key, 0) + 1
	return sorted(counts.items(),
			key=lambda item: [(o.coeff, o.remainder) for o in item[0]])


if __name__ == "__main__":
	import sys
	import doctest
	sys.exit(doctest.testmod().failed)
