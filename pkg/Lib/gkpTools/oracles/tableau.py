"""Qubit stabilizer tableau for GKP-encoded Clifford words.

The tableau keeps n destabilizer rows, n stabilizer rows and one scratch
row, with the usual X/Z bit matrices and a phase bit per row.  Tokens map
to qubit gates as F -> H, P -> S, CX -> CNOT, X -> X and Z -> Z.
"""

from __future__ import print_function, division, absolute_import
from gkpTools.circuitLib.clifford import CliffordWord
from fractions import Fraction
import numpy as np

__all__ = ["Tableau", "tableau_run"]


def _g(x1, z1, x2, z2):
    """Exponent of i picked up when multiplying Pauli (x1,z1) into (x2,z2)."""
    x1, z1, x2, z2 = (a.astype(np.int64) for a in (x1, z1, x2, z2))
    return np.where(
        x1 & z1, z2 - x2,
        np.where(x1, z2 * (2 * x2 - 1),
                 np.where(z1, x2 * (1 - 2 * z2), 0)))


class Tableau(object):

    def __init__(self, n):
        self.n = n
        self.x = np.zeros((2 * n + 1, n), dtype=bool)
        self.z = np.zeros((2 * n + 1, n), dtype=bool)
        self.r = np.zeros(2 * n + 1, dtype=bool)
        idx = np.arange(n)
        self.x[idx, idx] = True
        self.z[n + idx, idx] = True

    def copy(self):
        other = Tableau.__new__(Tableau)
        other.n = self.n
        other.x, other.z, other.r = self.x.copy(), self.z.copy(), self.r.copy()
        return other

    def h(self, a):
        self.r ^= self.x[:, a] & self.z[:, a]
        self.x[:, a], self.z[:, a] = self.z[:, a].copy(), self.x[:, a].copy()

    def s(self, a):
        self.r ^= self.x[:, a] & self.z[:, a]
        self.z[:, a] ^= self.x[:, a]

    def cx(self, a, b):
        x, z = self.x, self.z
        self.r ^= x[:, a] & z[:, b] & ~(x[:, b] ^ z[:, a])
        x[:, b] ^= x[:, a]
        z[:, a] ^= z[:, b]

    def pauli_x(self, a):
        self.r ^= self.z[:, a]

    def pauli_z(self, a):
        self.r ^= self.x[:, a]

    def rowsum(self, h, i):
        total = (2 * int(self.r[h]) + 2 * int(self.r[i]) +
                 int(_g(self.x[i], self.z[i], self.x[h], self.z[h]).sum()))
        self.r[h] = total % 4 == 2
        self.x[h] ^= self.x[i]
        self.z[h] ^= self.z[i]

    def isDeterministic(self, a):
        n = self.n
        return not self.x[n:2 * n, a].any()

    def measure(self, a, forced=0):
        """Measure Z on qubit a; forced picks the outcome of a random measurement."""
        n = self.n
        hits = np.nonzero(self.x[n:2 * n, a])[0]
        if len(hits):
            p = n + int(hits[0])
            for i in range(2 * n):
                if i != p and self.x[i, a]:
                    self.rowsum(i, p)
            self.x[p - n], self.z[p - n], self.r[p - n] = self.x[p], self.z[p], self.r[p]
            self.x[p] = False
            self.z[p] = False
            self.z[p, a] = True
            self.r[p] = bool(forced)
            return int(forced)
        scratch = 2 * n
        self.x[scratch] = False
        self.z[scratch] = False
        self.r[scratch] = False
        for i in range(n):
            if self.x[i, a]:
                self.rowsum(scratch, i + n)
        return int(self.r[scratch])

    def apply(self, token):
        name, modes = token.name, token.modes
        if name == "F":
            self.h(*modes)
        elif name == "P":
            self.s(*modes)
        elif name == "CX":
            self.cx(*modes)
        elif name == "X":
            self.pauli_x(*modes)
        elif name == "Z":
            self.pauli_z(*modes)
        else:
            raise ValueError("Token %s is not a qubit Clifford" % token)

    def run(self, word):
        """Apply a word; the rightmost token acts first."""
        for token in reversed(word.tokens):
            self.apply(token)
        return self


def _branch(tableau, modes, weight, bits, out):
    if not modes:
        key = tuple(bits)
        out[key] = out.get(key, Fraction(0)) + weight
        return
    a, rest = modes[0], modes[1:]
    if tableau.isDeterministic(a):
        bit = tableau.measure(a)
        _branch(tableau, rest, weight, bits + [bit], out)
        return
    for bit in (0, 1):
        branch = tableau.copy()
        branch.measure(a, forced=bit)
        _branch(branch, rest, weight / 2, bits + [bit], out)


def tableau_run(word, measured_modes=None):
    """Exact distribution of Z outcomes on |0...0> after the word.

    >>> tableau_run(CliffordWord.fromString("CX(0,1) F(0) P(0) P(0) F(0)"))
    {(1, 1): Fraction(1, 1)}
    >>> tableau_run(CliffordWord.fromString("CX(0,1) F(0)"))
    {(0, 0): Fraction(1, 2), (1, 1): Fraction(1, 2)}
    """
    if isinstance(word, str):
        word = CliffordWord.fromString(word)
    if measured_modes is None:
        measured_modes = range(word.n_modes)
    tableau = Tableau(word.n_modes).run(word)
    out = {}
    _branch(tableau, list(measured_modes), Fraction(1), [], out)
    return dict(sorted(out.items()))


if __name__ == "__main__":
    import sys
    import doctest
    sys.exit(doctest.testmod().failed)
