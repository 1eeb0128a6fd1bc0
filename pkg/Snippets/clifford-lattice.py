#! /usr/bin/env python

# Sample script that compiles a GKP Clifford word, prints the lattice
# support of measuring every mode, and compares the logical outcome
# distribution with a qubit stabilizer tableau.  The word is written in
# operator order: the leftmost token acts last.
#
# Usage:
# $ ./clifford-lattice.py "CX(0,1) F(0) P(0) P(0) F(0)"

from __future__ import print_function, division, absolute_import
from gkpTools.circuitLib.clifford import CliffordWord, compile_clifford
from gkpTools.latticeLib.pdf import compute_pdf
from gkpTools.oracles.tableau import tableau_run
import sys

if len(sys.argv) != 2:
	print("usage: clifford-lattice.py WORD")
	sys.exit(1)
word = CliffordWord.fromString(sys.argv[1])
pdf = compute_pdf(compile_clifford(word))

for line in pdf.summary():
	print(line)

lattice = pdf.logicalDistribution()
tableau = tableau_run(word)
print()
for bits in sorted(set(lattice) | set(tableau)):
	print("%s  lattice %s  tableau %s" % (
		"".join(str(b) for b in bits), lattice.get(bits, 0), tableau.get(bits, 0)))
if lattice != tableau:
	print("MISMATCH", file=sys.stderr)
	sys.exit(1)
