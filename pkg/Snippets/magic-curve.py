#! /usr/bin/env python

# Prints how often a finitely squeezed GKP input beats the distillation
# threshold after correction against ideal GKP ancillas, for peak widths
# from 0.1 to 1.0 (envelope width equal to the peak width).  The last
# column compares the input with the vacuum.
#
# Usage:
# $ ./magic-curve.py [grid]

from __future__ import print_function, division, absolute_import
from gkpTools.magic import F_STAR, FiniteGKP, prob_fidelity_above
import sys

grid = int(sys.argv[1]) if len(sys.argv) > 1 else 64

print("F* = %.6f" % F_STAR)
print("%6s %10s %10s" % ("delta", "P(F>F*)", "vacuum"))
for i in range(1, 11):
	state = FiniteGKP(i / 10)
	print("%6.2f %10.6f %10.6f" % (state.delta, prob_fidelity_above(state, grid=grid),
			state.vacuum_overlap()))
