from __future__ import print_function, division, absolute_import
from __future__ import unicode_literals
from gkpTools.circuitLib.classify import (
    RATIONAL_SYMPLECTIC, EXTENDED_CLASS_D, UNKNOWN, NON_RATIONAL, Direction,
    DSpDescription, UnclassifiableCircuit, classify, dsp_projector,
    gate_rotation_direction)
from gkpTools.circuitLib.gaussianOp import GaussianOp, gate_fourier, gate_rotation
from gkpTools.error import RationalError
from gkpTools.misc.rationalTools import RatMatrix
from fractions import Fraction
import unittest


def identity_dsp(directions):
    n = len(directions)
    return DSpDescription(RatMatrix.identity(n), RatMatrix.zeros(n, n), directions)


class DirectionTest(unittest.TestCase):

    def test_reduced(self):
        self.assertEqual(Direction(2, 4), Direction(1, 2))
        self.assertRaises(ValueError, Direction, 0, 0)

    def test_fromCot_fromTan(self):
        self.assertEqual(Direction.fromCot(Fraction(3, 4)), Direction(3, 4))
        self.assertEqual(Direction.fromTan(Fraction(3, 4)), Direction(4, 3))
        self.assertEqual(Direction.fromCosSin("3/5", "-4/5"), Direction(3, -4))

    def test_rational(self):
        self.assertTrue(Direction(3, 4).isRational())
        self.assertFalse(Direction(1, 2).isRational())
        self.assertRaises(RationalError, Direction(1, 2).cos_sin)

    def test_squares(self):
        d = Direction(1, 2)
        self.assertEqual(d.cos2(), Fraction(1, 5))
        self.assertEqual(d.sin2(), Fraction(4, 5))
        self.assertEqual(d.cos_times_sin(), Fraction(2, 5))

    def test_product_adds_angles(self):
        self.assertEqual(Direction(1, 1) * Direction(1, -1), Direction(1, 0))


class ClassifyTest(unittest.TestCase):

    def test_gaussian_op(self):
        self.assertEqual(classify(gate_fourier(1, 0)), RATIONAL_SYMPLECTIC)

    def test_rational_dsp(self):
        desc = identity_dsp([Direction(3, 4)])
        self.assertEqual(classify(desc), RATIONAL_SYMPLECTIC)
        self.assertIsInstance(desc.toGaussianOp(), GaussianOp)

    def test_pi_over_4(self):
        self.assertEqual(classify(identity_dsp([Direction.fromCot(1)])), EXTENDED_CLASS_D)

    def test_non_rational(self):
        self.assertEqual(classify(identity_dsp([NON_RATIONAL])), UNKNOWN)
        self.assertEqual(classify(UnclassifiableCircuit(1, "test")), UNKNOWN)

    def test_not_an_operation(self):
        self.assertRaises(TypeError, classify, "F(0)")

    def test_projector(self):
        P = dsp_projector(identity_dsp([Direction(1, 1)]))
        self.assertEqual(P, RatMatrix([["1/2", "-1/2"], ["-1/2", "1/2"]]))
        self.assertEqual(P * P, P)

    def test_projector_kills_direction(self):
        P = dsp_projector(identity_dsp([Direction(3, 4)]))
        self.assertEqual(P * P, P)
        self.assertEqual(P.T, P)
        self.assertEqual(P.apply([Fraction(3, 5), Fraction(4, 5)]),
                         (Fraction(0), Fraction(0)))

    def test_projector_needs_rational_cotangent(self):
        self.assertRaises(RationalError, dsp_projector, identity_dsp([NON_RATIONAL]))

    def test_malformed(self):
        self.assertRaises(ValueError, DSpDescription, RatMatrix.zeros(1, 1),
                          RatMatrix.zeros(1, 1), [Direction(1, 0)])
        self.assertRaises(ValueError, DSpDescription, RatMatrix.identity(1),
                          RatMatrix.zeros(1, 1), ["F"])

    def test_gate_rotation_direction(self):
        op = gate_rotation_direction(1, 0, 3, 4)
        self.assertEqual(op, gate_rotation(1, 0, "3/5", "4/5"))
        desc = gate_rotation_direction(2, 1, 1, 1)
        self.assertIsInstance(desc, DSpDescription)
        self.assertEqual(desc.directions, (Direction(1, 0), Direction(1, -1)))
        self.assertEqual(classify(desc), EXTENDED_CLASS_D)


if __name__ == "__main__":
    unittest.main()
