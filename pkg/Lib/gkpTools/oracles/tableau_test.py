from __future__ import print_function, division, absolute_import
from gkpTools.circuitLib.clifford import (
    CliffordWord, compile_clifford, random_clifford_word)
from gkpTools.latticeLib.pdf import compute_pdf
from gkpTools.oracles.tableau import Tableau, tableau_run
from fractions import Fraction
import unittest
import numpy as np


class TableauTest(unittest.TestCase):

    def test_initial_state(self):
        self.assertEqual(tableau_run(CliffordWord([], 3)), {(0, 0, 0): Fraction(1)})

    def test_single_qubit(self):
        self.assertEqual(tableau_run("X(0)"), {(1,): Fraction(1)})
        self.assertEqual(tableau_run("Z(0)"), {(0,): Fraction(1)})
        self.assertEqual(tableau_run("F(0)"), {(0,): Fraction(1, 2), (1,): Fraction(1, 2)})
        # H S S H = X
        self.assertEqual(tableau_run("F(0) P(0) P(0) F(0)"), {(1,): Fraction(1)})

    def test_measured_subset(self):
        dist = tableau_run("CX(0,1) F(0)", measured_modes=[1])
        self.assertEqual(dist, {(0,): Fraction(1, 2), (1,): Fraction(1, 2)})

    def test_measure_collapses(self):
        t = Tableau(1)
        t.h(0)
        self.assertFalse(t.isDeterministic(0))
        self.assertEqual(t.measure(0, forced=1), 1)
        self.assertTrue(t.isDeterministic(0))
        self.assertEqual(t.measure(0), 1)

    def test_ghz(self):
        dist = tableau_run("CX(1,2) CX(0,1) F(0)")
        self.assertEqual(dist, {(0, 0, 0): Fraction(1, 2), (1, 1, 1): Fraction(1, 2)})

    def test_matches_lattice(self):
        rng = np.random.default_rng(1234)
        for n in range(1, 7):
            for _ in range(34):
                word = random_clifford_word(n, 4 * n + 8, rng)
                pdf = compute_pdf(compile_clifford(word))
                self.assertEqual(pdf.logicalDistribution(), tableau_run(word), str(word))

    def test_distribution_sums_to_one(self):
        rng = np.random.default_rng(99)
        for _ in range(10):
            dist = tableau_run(random_clifford_word(3, 10, rng))
            self.assertEqual(sum(dist.values()), 1)


if __name__ == "__main__":
    unittest.main()
