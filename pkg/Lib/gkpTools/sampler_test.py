from __future__ import print_function, division, absolute_import
from gkpTools.circuitLib.builder import buildProgram, loadCircuit, parseCircuit
from gkpTools.circuitLib.clifford import CliffordWord, compile_clifford
from gkpTools.circuitLib.gaussianOp import gate_identity, gate_squeeze
from gkpTools.error import GkpError, StageError, SupportError
from gkpTools.latticeLib.pdf import compute_pdf
from gkpTools.misc.splitReal import SplitReal
from gkpTools.sampler import (
	AdaptiveCircuit, condition_on, conditioned_pdf, histogram, modular_support, run_adaptive,
	sample_joint, sample_modular, sample_plain, sample_shots, stage_rng)
from fractions import Fraction
import os
import unittest


def getpath(testfile):
	path, _ = os.path.split(__file__)
	return os.path.join(path, "circuitLib", "testdata", testfile)


def program(name):
	return buildProgram(parseCircuit(getpath(name)))


GOLDEN = compile_clifford(CliffordWord.fromString("CX(0,1) F(0) P(0) P(0) F(0)"))


# Upper 0.001 quantiles of the chi-square distribution, by degrees of freedom.
CHI2_999 = {1: 10.828, 2: 13.816, 3: 16.266, 4: 18.467, 5: 20.515,
	6: 22.458, 7: 24.322, 8: 26.124, 9: 27.877, 10: 29.588}


def chi_square(counts, probabilities, shots):
	return sum((counts.get(key, 0) - shots * float(p)) ** 2 / (shots * float(p))
		for key, p in probabilities.items())


def joint_modular_distribution(pdf, modes, k):
	"""Exact distribution of modular outcomes measured in the given mode order."""
	if not modes:
		return {(): Fraction(1)}
	j = modes[0]
	support = modular_support(pdf, j, k)
	rest = [m - (m > j) for m in modes[1:]]
	result = {}
	for x in support.outcomes:
		tail = joint_modular_distribution(condition_on(pdf, j, x, k), rest, k)
		for key, p in tail.items():
			result[(x,) + key] = support.probability() * p
	return result


def adaptive_modular_distribution(circ, ops=(), measured=()):
	"""Exact outcome distribution of a program whose stages are all modular."""
	s = len(measured)
	if s == len(circ.stages):
		return {(): Fraction(1)}
	stage = circ.stages[s]
	outcomes = [x for _, x, _ in measured]
	ops = list(ops) + [stage.ops(outcomes)]
	pdf, remaining = conditioned_pdf(ops, measured, circ.n_modes)
	mode = stage.measuredMode(outcomes)
	support = modular_support(pdf, remaining.index(mode), stage.modulus)
	result = {}
	for x in support.outcomes:
		tail = adaptive_modular_distribution(
			circ, ops, list(measured) + [(mode, x, stage.modulus)])
		for key, p in tail.items():
			result[(x,) + key] = support.probability() * p
	return result


class ModularTest(unittest.TestCase):

	def test_golden(self):
		for shot in sample_shots(GOLDEN, 11, 20, modulus=2):
			self.assertEqual(shot, [SplitReal(1), SplitReal(1)])

	def test_support_sizes(self):
		pdf = compute_pdf(gate_identity(1))
		support = modular_support(pdf, 0, 3)
		self.assertEqual(support.outcomes, [SplitReal(0), SplitReal(1), SplitReal(2)])
		self.assertEqual(support.probability(), Fraction(1, 3))
		self.assertEqual(modular_support(pdf, 0, 4).outcomes, [SplitReal(0), SplitReal(2)])
		self.assertEqual(len(modular_support(pdf, 0, 1)), 1)
		self.assertRaises(ValueError, modular_support, pdf, 0, 0)

	def test_six_outcomes_at_period_one_third(self):
		pdf = compute_pdf(gate_squeeze(1, 0, Fraction(1, 6)))
		self.assertEqual(pdf.modeSupport(0).period, Fraction(1, 3))
		support = modular_support(pdf, 0, 2)
		self.assertEqual([o.coeff for o in support.outcomes],
				[Fraction(i, 3) for i in range(6)])
		self.assertEqual(support.probability(), Fraction(1, 6))

	def test_chi_square_uniform(self):
		bell = compute_pdf(loadCircuit(getpath("bell.gkp")))
		cases = [
			(compute_pdf(gate_identity(1)), 0, 3, 3),
			(compute_pdf(gate_identity(1)), 0, 6, 3),
			(compute_pdf(gate_squeeze(1, 0, Fraction(1, 6))), 0, 2, 6),
			(compute_pdf(gate_squeeze(1, 0, Fraction(1, 5))), 0, 2, 5),
			(compute_pdf(gate_squeeze(1, 0, Fraction(3, 4))), 0, 1, 2),
			(compute_pdf(GOLDEN), 1, 3, 3),
			(bell, 0, 2, 2),
			(bell, 1, 5, 5),
			(compute_pdf(gate_identity(3)), 2, 10, 5),
			(compute_pdf(gate_squeeze(2, 1, Fraction(5, 3))), 1, 4, 6),
		]
		shots = 10000
		for i, (pdf, j, k, size) in enumerate(cases):
			support = modular_support(pdf, j, k)
			self.assertEqual(len(support), size)
			rng = stage_rng(2016, i, 0)
			counts = {}
			for _ in range(shots):
				x = sample_modular(pdf, j, k, rng)
				counts[x] = counts.get(x, 0) + 1
			self.assertEqual(set(counts), set(support.outcomes))
			expected = dict((o, support.probability()) for o in support.outcomes)
			self.assertLess(chi_square(counts, expected, shots), CHI2_999[size - 1],
					(i, counts))

	def test_displaced(self):
		pdf = compute_pdf(loadCircuit(getpath("displaced.gkp")))
		support = modular_support(pdf, 0, 2)
		self.assertEqual(support.outcomes, [SplitReal(Fraction(1, 2), 0.25)])

	def test_bell_correlated(self):
		shots = sample_shots(loadCircuit(getpath("bell.gkp")), 5, 400, modulus=2)
		self.assertTrue(all(a == b for a, b in shots))
		counts = dict(histogram(shots))
		self.assertEqual(sorted(counts), [(SplitReal(0), SplitReal(0)),
				(SplitReal(1), SplitReal(1))])
		# Fair coin over 400 shots; 5 standard deviations either way.
		self.assertTrue(150 <= counts[(SplitReal(0), SplitReal(0))] <= 250)

	def test_single_mode_uniform(self):
		pdf = compute_pdf(gate_identity(1))
		rng = stage_rng(3, 0, 0)
		counts = {}
		for _ in range(600):
			x = sample_modular(pdf, 0, 6, rng)
			counts[x] = counts.get(x, 0) + 1
		self.assertEqual(sorted(counts), [SplitReal(0), SplitReal(2), SplitReal(4)])
		self.assertTrue(all(140 <= c <= 260 for c in counts.values()))


class PlainTest(unittest.TestCase):

	def test_window(self):
		pdf = compute_pdf(GOLDEN)
		rng = stage_rng(1, 0, 0)
		seen = set(sample_plain(pdf, 0, 2, rng).coeff for _ in range(200))
		self.assertEqual(seen, {-3, -1, 1, 3, 5})
		self.assertRaises(ValueError, sample_plain, pdf, 0, 0, rng)

	def test_joint_in_support(self):
		pdf = compute_pdf(loadCircuit(getpath("bell.gkp")))
		for shot in range(30):
			x = sample_joint(pdf, stage_rng(9, shot, 0), window=3)
			self.assertTrue(pdf.contains(x))

	def test_deterministic(self):
		op = loadCircuit(getpath("bell.gkp"))
		self.assertEqual(sample_shots(op, 42, 10), sample_shots(op, 42, 10))
		self.assertNotEqual(sample_shots(op, 42, 10), sample_shots(op, 43, 10))


class ConditionTest(unittest.TestCase):

	def setUp(self):
		self.bell = compute_pdf(loadCircuit(getpath("bell.gkp")))

	def test_plain(self):
		rest = condition_on(self.bell, 0, SplitReal(3))
		self.assertEqual(rest.n, 1)
		support = rest.modeSupport(0)
		self.assertEqual((support.period, support.offset), (2, SplitReal(1)))
		self.assertTrue(rest.contains([SplitReal(-5)]))

	def test_modular(self):
		rest = condition_on(self.bell, 0, SplitReal(0), modulus=2)
		support = rest.modeSupport(0)
		self.assertEqual((support.period, support.offset), (2, SplitReal(0)))

	def test_coarse_modulus(self):
		pdf = compute_pdf(gate_identity(2))
		rest = condition_on(pdf, 1, SplitReal(0), modulus=1)
		self.assertEqual(rest.modeSupport(0).period, 2)

	def test_off_support(self):
		self.assertRaises(SupportError, condition_on, self.bell, 0, SplitReal(Fraction(1, 2)))
		self.assertRaises(SupportError, condition_on, self.bell, 0, SplitReal(1, 0.5))
		golden = compute_pdf(GOLDEN)
		self.assertRaises(SupportError, condition_on, golden, 1, SplitReal(0), 2)
		self.assertRaises(IndexError, condition_on, self.bell, 2, SplitReal(0))

	def test_last_mode(self):
		pdf = compute_pdf(gate_identity(1))
		self.assertEqual(condition_on(pdf, 0, SplitReal(4)).n, 0)


class AdaptiveTest(unittest.TestCase):

	def test_teleport_correction(self):
		circ = program("teleport.gkp")
		first = set()
		for shot in range(40):
			record = run_adaptive(circ, 2016, shot)
			self.assertEqual(len(record), 2)
			first.add(record.outcomes()[0])
			self.assertEqual(record.outcomes()[1], SplitReal(0))
		self.assertEqual(first, {SplitReal(0), SplitReal(1)})

	def test_constant_stages(self):
		circ = program("bell_stages.gkp")
		for shot in range(20):
			a, b = run_adaptive(circ, 5, shot).outcomes()
			self.assertEqual(a, b)

	def test_constant_stages_match_joint_sampling(self):
		for name, joint, order in [("bell_stages.gkp", "fourier 0; cx 0 1;", [0, 1]),
				("ghz_stages.gkp", "fourier 0; cx 0 1; cx 1 2;", [0, 2, 1])]:
			circ = program(name)
			text = "modes %d; %s" % (circ.n_modes, joint)
			pdf = compute_pdf(loadCircuit("joint.gkp", text))
			expected = joint_modular_distribution(pdf, order, 2)
			self.assertEqual(adaptive_modular_distribution(circ), expected)
			self.assertEqual(dict((tuple(int(x.coeff) for x in key), p)
					for key, p in expected.items()), pdf.logicalDistribution(order))
			shots = 2000
			counts = dict(histogram(run_adaptive(circ, 31, shot).outcomes()
					for shot in range(shots)))
			self.assertEqual(set(counts), set(expected))
			self.assertLess(chi_square(counts, expected, shots),
					CHI2_999[len(expected) - 1], (name, counts))

	def test_error_correction_output_comb(self):
		circ = program("kec.gkp")
		for shot in range(10):
			record = run_adaptive(circ, 77, shot)
			outcomes = record.outcomes()
			ops = [stage.ops(outcomes[:s]) for s, stage in enumerate(circ.stages)]
			measured = [(r.mode, r.outcome, r.modulus) for r in record.stages[:2]]
			pdf, remaining = conditioned_pdf(ops, measured, circ.n_modes)
			self.assertEqual(remaining, [0])
			self.assertTrue(pdf.isLogical())
			support = pdf.modeSupport(0)
			self.assertIn(support.period, (1, 2))
			self.assertEqual(support.offset.coeff.denominator, 1)
			self.assertEqual(support.offset.remainder, 0.0)
			self.assertTrue(support.contains(outcomes[2]))


	def test_error_correction_outcomes(self):
		circ = program("kec.gkp")
		for shot in range(10):
			record = run_adaptive(circ, 77, shot)
			self.assertEqual([s.mode for s in record.stages], [1, 2, 0])
			for x in record.outcomes():
				self.assertEqual(x.remainder, 0.0)
				self.assertEqual(x.coeff.denominator, 1)
			self.assertEqual(record.stages[0].toDict()["window"], 2)

	def test_deterministic(self):
		circ = program("kec.gkp")
		self.assertEqual(run_adaptive(circ, 7, 3), run_adaptive(circ, 7, 3))

	def test_prefix_stable(self):
		circ = program("kec.gkp")
		prefix = AdaptiveCircuit(circ.n_modes, circ.stages[:2])
		for shot in range(5):
			full = run_adaptive(circ, 8, shot).outcomes()
			self.assertEqual(run_adaptive(prefix, 8, shot).outcomes(), full[:2])

	def test_remeasure(self):
		with self.assertRaises(StageError) as cm:
			run_adaptive(program("remeasure.gkp"), 1)
		self.assertEqual(cm.exception.stage, 1)
		self.assertIsInstance(cm.exception.cause, GkpError)
		self.assertIn("already measured", str(cm.exception))

	def test_touch_measured_mode(self):
		text = ("modes 2; stage { measure 0 mod=2; } "
			"stage { fourier 0; measure 1 mod=2; }")
		circ = buildProgram(parseCircuit("test.gkp", text))
		self.assertRaisesRegex(StageError, "measured mode", run_adaptive, circ, 1)

	def test_log(self):
		lines = []
		run_adaptive(program("bell_stages.gkp"), 1, log=lambda *args: lines.append(args))
		self.assertEqual([l[:4] for l in lines], [("stage", 0, "mode", 0), ("stage", 1, "mode", 1)])


if __name__ == "__main__":
	unittest.main()
