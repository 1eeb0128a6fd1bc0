"""Finitely squeezed GKP input through the error-correction gadget.

The input wavefunction is a Gaussian-enveloped comb of Gaussian peaks

	psi(x) = sum_s exp(-2 kappa^2 s^2 pi) exp(-(x - 2 s sqrt(pi))^2 / (2 Delta^2))

Correcting against an ideal GKP ancilla with outcome t = (t_q, t_p)
leaves the logical state c0|0> + c1|1> with

	c_mu = <mu_GKP| exp(i t_q p) exp(-i t_p q) |psi>
	     = sum_{n = mu mod 2} exp(-i t_p (n sqrt(pi) + t_q)) psi(n sqrt(pi) + t_q)

The outcome density over one 2 sqrt(pi) cell is proportional to
|c0|^2 + |c1|^2.  The module reports fidelities to the nearest H-type
state and the probability that the output beats the distillation
threshold F*.  All arithmetic here is floating point (numpy).
"""

from __future__ import print_function, division, absolute_import
from gkpTools.misc.splitReal import SQRT_PI
import csv
import math
import numpy as np

__all__ = [
	"F_STAR", "FIDELITY_TOLERANCE", "MIN_GRID", "FiniteGKP", "GadgetOutcome",
	"HTarget", "target_set", "coeffs", "fidelity_to_nearest_H",
	"outcome_pdf_cell", "fraction_above", "prob_fidelity_above", "fidelity_map",
	"probability_curve", "cell_grid", "write_fidelity_map_csv",
	"write_probability_curve_csv",
]

F_STAR = 0.5 * (1 + 1 / math.sqrt(2))

# Fidelities must beat F* by more than this to count.
FIDELITY_TOLERANCE = 1e-12

MIN_GRID = 32

CELL = 2 * SQRT_PI


class FiniteGKP(object):
	"""Finitely squeezed |0_GKP> with peak width delta and envelope kappa."""

	def __init__(self, delta, kappa=None, s_max=None):
		if kappa is None:
			kappa = delta
		if not (delta > 0 and kappa > 0):
			raise ValueError("delta and kappa must be positive, got %r and %r" % (delta, kappa))
		self.delta = float(delta)
		self.kappa = float(kappa)
		if s_max is None:
			width = max(1 / self.kappa, self.delta)
			s_max = int(math.ceil(4 + 6 * width / CELL))
		if s_max < 1:
			raise ValueError("s_max must be at least 1")
		self.s_max = s_max

	def withTruncation(self, s_max):
		return FiniteGKP(self.delta, self.kappa, s_max)

	def peaks(self):
		s = np.arange(-self.s_max, self.s_max + 1)
		return s, np.exp(-2 * self.kappa ** 2 * s ** 2 * math.pi)

	def siteRange(self):
		"""Comb sites n (x = n sqrt(pi)) that can carry weight."""
		k = int(math.ceil(8 * self.delta / SQRT_PI)) + 2
		top = 2 * self.s_max + k
		return np.arange(-top - 2, top + 1)

	def psi(self, x):
		x = np.asarray(x, dtype=float)
		s, weights = self.peaks()
		centers = 2 * s * SQRT_PI
		diff = x[..., None] - centers
		return (weights * np.exp(-diff ** 2 / (2 * self.delta ** 2))).sum(axis=-1)

	def vacuum_overlap(self):
		"""|<vacuum|psi>|^2 / <psi|psi>, from closed-form Gaussian integrals."""
		s, weights = self.peaks()
		centers = 2 * s * SQRT_PI
		d2 = self.delta ** 2
		overlap = (math.pi ** -0.25 * math.sqrt(2 * math.pi * d2 / (1 + d2)) *
			(weights * np.exp(-centers ** 2 / (2 * (1 + d2)))).sum())
		gap = centers[:, None] - centers[None, :]
		norm = (SQRT_PI * self.delta *
			(np.outer(weights, weights) * np.exp(-gap ** 2 / (4 * d2))).sum())
		return float(overlap ** 2 / norm)

	def __repr__(self):
		return "<FiniteGKP delta=%g kappa=%g s_max=%d>" % (self.delta, self.kappa, self.s_max)


class GadgetOutcome(object):

	def __init__(self, t_q, t_p, c0, c1, pdf_weight=None):
		self.t_q, self.t_p = t_q, t_p
		self.c0, self.c1 = complex(c0), complex(c1)
		self.pdf_weight = pdf_weight

	@property
	def norm2(self):
		return abs(self.c0) ** 2 + abs(self.c1) ** 2

	def normalized(self):
		scale = math.sqrt(self.norm2)
		return self.c0 / scale, self.c1 / scale

	def __repr__(self):
		return "<GadgetOutcome t=(%g, %g) c=(%s, %s)>" % (self.t_q, self.t_p, self.c0, self.c1)


class HTarget(object):

	def __init__(self, a0, a1):
		norm = math.sqrt(abs(a0) ** 2 + abs(a1) ** 2)
		if abs(norm - 1) > 1e-12:
			raise ValueError("Target amplitudes are not normalized")
		self.a0, self.a1 = complex(a0), complex(a1)

	@classmethod
	def fromBloch(cls, x, y, z):
		theta = math.acos(max(-1.0, min(1.0, z)))
		phi = math.atan2(y, x)
		return cls(math.cos(theta / 2), complex(math.cos(phi), math.sin(phi)) * math.sin(theta / 2))

	def __repr__(self):
		return "<HTarget %s|0> + %s|1>>" % (self.a0, self.a1)


def target_set(name="orbit"):
	"""H-type targets: Bloch vectors (+-e_a +- e_b)/sqrt(2).

	"orbit" is the full single-qubit Clifford orbit of
	cos(pi/8)|0> + sin(pi/8)|1> (12 states); "real" keeps the 4 with
	real amplitudes.

	>>> len(target_set()), len(target_set("real"))
	(12, 4)
	"""
	if name == "orbit":
		pairs = [(0, 1), (0, 2), (1, 2)]
	elif name == "real":
		pairs = [(0, 2)]
	else:
		raise ValueError("Unknown target set %r" % name)
	r = 1 / math.sqrt(2)
	targets = []
	for a, b in pairs:
		for sa in (1, -1):
			for sb in (1, -1):
				v = [0.0, 0.0, 0.0]
				v[a], v[b] = sa * r, sb * r
				targets.append(HTarget.fromBloch(*v))
	return targets


def _target_array(targets):
	if targets is None:
		targets = target_set()
	elif isinstance(targets, str):
		targets = target_set(targets)
	return np.array([[t.a0, t.a1] for t in targets], dtype=complex)


def _coeff_grid(state, tq, tp):
	"""c0, c1 with shape (len(tq), len(tp))."""
	tq = np.atleast_1d(np.asarray(tq, dtype=float))
	tp = np.atleast_1d(np.asarray(tp, dtype=float))
	n = state.siteRange()
	x = n[None, :] * SQRT_PI + tq[:, None]
	amplitude = state.psi(x)
	phase = np.exp(-1j * tp[None, :, None] * x[:, None, :])
	terms = phase * amplitude[:, None, :]
	even = (n % 2 == 0)
	return terms[..., even].sum(axis=-1), terms[..., ~even].sum(axis=-1)


def coeffs(state, t_q, t_p):
	c0, c1 = _coeff_grid(state, [t_q], [t_p])
	return complex(c0[0, 0]), complex(c1[0, 0])


def _fidelities(c0, c1, targets):
	a = _target_array(targets).conj()
	overlap = a[:, 0, None, None] * c0[None] + a[:, 1, None, None] * c1[None]
	norm = np.abs(c0) ** 2 + np.abs(c1) ** 2
	return (np.abs(overlap) ** 2).max(axis=0) / norm


def fidelity_to_nearest_H(outcome, targets=None):
	c0 = np.array([[outcome.c0]])
	c1 = np.array([[outcome.c1]])
	return float(_fidelities(c0, c1, targets)[0, 0])


def cell_grid(grid):
	if grid < MIN_GRID:
		raise ValueError("Grid resolution must be at least %d, got %d" % (MIN_GRID, grid))
	return np.arange(grid) * (CELL / grid)


def outcome_pdf_cell(state, grid):
	"""Grid points and normalized weights; weights[i, j] is at (t[i], t[j])."""
	t = cell_grid(grid)
	c0, c1 = _coeff_grid(state, t, t)
	weights = np.abs(c0) ** 2 + np.abs(c1) ** 2
	return t, weights / weights.sum()


def fidelity_map(state, grid, targets=None):
	"""Grid points, fidelities and normalized weights over one cell."""
	t = cell_grid(grid)
	c0, c1 = _coeff_grid(state, t, t)
	weights = np.abs(c0) ** 2 + np.abs(c1) ** 2
	return t, _fidelities(c0, c1, targets), weights / weights.sum()


def fraction_above(values, level):
	"""Share of each periodic grid cell where values exceed level.

	Cells the level set crosses get a linear estimate from central
	differences; all others count 0 or 1.

	>>> fraction_above(np.array([[0.0, 1.0, 2.0, 1.0]]), 1.0).tolist()
	[[0.0, 0.5, 1.0, 0.5]]
	"""
	s = values - level
	above = s > 0
	spread = np.zeros_like(s)
	crossed = np.zeros_like(above)
	for axis in range(s.ndim):
		forward, backward = np.roll(s, -1, axis), np.roll(s, 1, axis)
		spread += np.abs(forward - backward) / 2
		crossed |= ((forward > 0) != above) | ((backward > 0) != above)
	crossed &= spread > 0
	fraction = above.astype(float)
	fraction[crossed] = np.clip(0.5 + s[crossed] / spread[crossed], 0.0, 1.0)
	return fraction


def prob_fidelity_above(state, F_star=F_STAR, grid=64, targets=None):
	_, fidelity, weights = fidelity_map(state, grid, targets)
	return float((weights * fraction_above(fidelity, F_star + FIDELITY_TOLERANCE)).sum())


def probability_curve(deltas, kappas=None, grid=64, F_star=F_STAR, targets=None, log=None):
	"""(delta, kappa, P(F > F*)) rows; kappas default to the deltas."""
	if kappas is None:
		kappas = deltas
	if len(kappas) != len(deltas):
		raise ValueError("Got %d deltas but %d kappas" % (len(deltas), len(kappas)))
	rows = []
	for delta, kappa in zip(deltas, kappas):
		p = prob_fidelity_above(FiniteGKP(delta, kappa), F_star, grid, targets)
		if log is not None:
			log("delta", delta, "kappa", kappa, "P", p)
		rows.append((delta, kappa, p))
	return rows


def _fmt(value):
	return "%.12g" % value


def write_fidelity_map_csv(f, t, fidelity):
	writer = csv.writer(f, lineterminator="\n")
	writer.writerow(["t_q", "t_p", "F"])
	for i, tq in enumerate(t):
		for j, tp in enumerate(t):
			writer.writerow([_fmt(tq), _fmt(tp), _fmt(fidelity[i, j])])


def write_probability_curve_csv(f, rows):
	writer = csv.writer(f, lineterminator="\n")
	writer.writerow(["delta", "kappa", "P"])
	for delta, kappa, p in rows:
		writer.writerow([_fmt(delta), _fmt(kappa), _fmt(p)])


if __name__ == "__main__":
	import sys
	import doctest
	sys.exit(doctest.testmod().failed)
