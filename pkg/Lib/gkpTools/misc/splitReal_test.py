from __future__ import print_function, division, absolute_import
from gkpTools.misc.splitReal import SplitReal, SQRT_PI, parse_split
from fractions import Fraction
import math
import unittest


class SplitRealTest(unittest.TestCase):

	def test_float(self):
		self.assertAlmostEqual(float(SplitReal(2, 0.5)), 2 * math.sqrt(math.pi) + 0.5)
		self.assertAlmostEqual(SplitReal(1, SQRT_PI).inSqrtPi(), 2.0)

	def test_fromFloat(self):
		x = SplitReal.fromFloat(1.25)
		self.assertEqual(x.coeff, 0)
		self.assertFalse(x.isExact())

	def test_arithmetic(self):
		x = SplitReal("1/2", 0.25)
		self.assertEqual(x + x, SplitReal(1, 0.5))
		self.assertEqual(x - x, SplitReal())
		self.assertEqual(x * 2, SplitReal(1, 0.5))
		self.assertEqual(Fraction(1, 2) * x, SplitReal("1/4", 0.125))

	def test_mod_exact(self):
		self.assertEqual(SplitReal("-1/2") % 2, SplitReal("3/2"))
		self.assertEqual(SplitReal(7) % Fraction(3, 2), SplitReal(1))

	def test_mod_folds_remainder(self):
		x = SplitReal(0, -0.1) % 2
		self.assertEqual(x.coeff, 2)
		self.assertAlmostEqual(x.remainder, -0.1)
		self.assertTrue(0 <= x.inSqrtPi() < 2)

	def test_mod_rejects_nonpositive(self):
		self.assertRaises(ValueError, lambda: SplitReal(1) % 0)

	def test_equality_tolerance(self):
		self.assertEqual(SplitReal(1, 0.1), SplitReal(1, 0.1 + 1e-15))
		self.assertNotEqual(SplitReal(1, 0.1), SplitReal(1, 0.2))
		self.assertNotEqual(SplitReal(1), SplitReal(2))

	def test_str(self):
		self.assertEqual(str(SplitReal("3/2")), "3/2")
		self.assertEqual(str(SplitReal(1, -0.5)), "1-0.5")

	def test_parse_split(self):
		self.assertEqual(parse_split("3/2-0.5"), SplitReal("3/2", -0.5))
		self.assertEqual(parse_split("-2"), SplitReal(-2))
		self.assertEqual(parse_split("1+1e-3"), SplitReal(1, 0.001))


if __name__ == "__main__":
	unittest.main()
