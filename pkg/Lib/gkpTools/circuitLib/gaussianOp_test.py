from __future__ import print_function, division, absolute_import
from __future__ import unicode_literals
from gkpTools.circuitLib.gaussianOp import (
    GaussianOp, compose, sequence, is_symplectic, omega, gate_identity,
    gate_shift_q, gate_shift_p, gate_rotation, gate_squeeze, gate_shear,
    gate_sum, gate_fourier, gate_phase, gate_cx, gate_x, gate_z)
from gkpTools.circuitLib.clifford import random_symplectic_word
from gkpTools.error import SymplecticError
from gkpTools.misc.rationalTools import RatMatrix
from gkpTools.misc.splitReal import SplitReal
from fractions import Fraction
import numpy as np
import unittest


class GaussianOpTest(unittest.TestCase):

    def test_omega(self):
        self.assertEqual(omega(1), RatMatrix([[0, 1], [-1, 0]]))
        self.assertTrue(is_symplectic(RatMatrix.identity(4)))
        self.assertFalse(is_symplectic(RatMatrix([[1, 1], [1, 1]])))
        self.assertFalse(is_symplectic(RatMatrix.identity(3)))

    def test_not_symplectic(self):
        self.assertRaises(SymplecticError, GaussianOp, RatMatrix([[2, 0], [0, 1]]))

    def test_blocks(self):
        op = gate_sum(2, 0, 1)
        self.assertEqual(op.A, RatMatrix([[1, 0], [1, 1]]))
        self.assertEqual(op.B, RatMatrix.zeros(2, 2))
        self.assertEqual(op.C, RatMatrix.zeros(2, 2))
        self.assertEqual(op.D, RatMatrix([[1, -1], [0, 1]]))

    def test_rotation(self):
        op = gate_rotation(1, 0, "3/5", "4/5")
        self.assertEqual(op.M, RatMatrix([["3/5", "-4/5"], ["4/5", "3/5"]]))
        self.assertRaises(ValueError, gate_rotation, 1, 0, "1/2", "1/2")
        self.assertEqual(gate_fourier(1, 0).M, RatMatrix([[0, -1], [1, 0]]))

    def test_squeeze_and_shear(self):
        self.assertEqual(gate_squeeze(1, 0, 2).M, RatMatrix([[2, 0], [0, "1/2"]]))
        self.assertRaises(ValueError, gate_squeeze, 1, 0, 0)
        self.assertEqual(gate_shear(1, 0, "1/3").M, RatMatrix([[1, 0], ["1/3", 1]]))
        self.assertEqual(gate_phase(1, 0), gate_shear(1, 0, 1))

    def test_sum_distinct_modes(self):
        self.assertRaises(ValueError, gate_sum, 2, 1, 1)
        self.assertRaises(IndexError, gate_sum, 2, 0, 2)
        self.assertEqual(gate_cx(2, 0, 1), gate_sum(2, 0, 1))

    def test_shifts(self):
        op = gate_shift_q(2, 1, "1/2")
        self.assertEqual(op.disp[1], SplitReal("1/2"))
        op = gate_shift_p(2, 1, 0.25)
        self.assertEqual(op.disp[3], SplitReal(0, 0.25))
        self.assertEqual(gate_x(1, 0).disp, (SplitReal(1), SplitReal()))
        self.assertEqual(gate_z(1, 0).disp, (SplitReal(), SplitReal(1)))

    def test_golden_word(self):
        F, P, CX = gate_fourier(2, 0), gate_phase(2, 0), gate_cx(2, 0, 1)
        op = compose(CX, F, P, P, F)
        self.assertEqual(op.A, RatMatrix([[-1, 0], [-1, 1]]))
        self.assertEqual(op.B, RatMatrix([[2, 0], [2, 0]]))
        self.assertEqual(sequence([F, P, P, F, CX]), op)

    def test_compose_displacement(self):
        # Shift then Fourier: the shift lands on the momentum.
        op = sequence([gate_shift_q(1, 0, 1), gate_fourier(1, 0)])
        self.assertEqual(op.disp, (SplitReal(0), SplitReal(1)))

    def test_then(self):
        a, b = gate_fourier(1, 0), gate_shear(1, 0, 2)
        self.assertEqual(a.then(b), compose(b, a))

    def test_inverse(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            op, _ = random_symplectic_word(2, 6, rng)
            self.assertEqual(compose(op, op.inverse()), gate_identity(2))

    def test_pythagorean_rotation_has_infinite_order(self):
        op = gate_rotation(1, 0, "3/5", "4/5")
        power = op
        for _ in range(8):
            self.assertNotEqual(power, gate_identity(1))
            self.assertTrue(is_symplectic(power.M))
            power = compose(op, power)
        self.assertEqual(compose(*[gate_fourier(1, 0)] * 4), gate_identity(1))

    def test_compose_associative(self):
        rng = np.random.default_rng(11)
        for n in (1, 2, 3):
            for _ in range(5):
                a, _ = random_symplectic_word(n, 5, rng)
                b, _ = random_symplectic_word(n, 5, rng)
                c, _ = random_symplectic_word(n, 5, rng)
                self.assertEqual(compose(a, compose(b, c)), compose(compose(a, b), c))
                self.assertEqual(compose(a, b, c), compose(a, compose(b, c)))
                self.assertEqual(sequence([c, b, a]), compose(a, b, c))

    def test_sequence_empty(self):
        self.assertEqual(sequence([], 3), gate_identity(3))
        self.assertRaises(ValueError, compose)

    def test_mode_mismatch(self):
        self.assertRaises(ValueError, compose, gate_identity(1), gate_identity(2))

    def test_heisenberg(self):
        op = compose(gate_shift_q(1, 0, 2), gate_shear(1, 0, 1))
        h = op.heisenberg()
        self.assertEqual(h.row(0), ((Fraction(1),), (Fraction(0),), SplitReal(2)))


if __name__ == "__main__":
    unittest.main()
