"""GKP-encoded Clifford words and their compilation to Gaussian operations.

A word is written in operator-product order: the leftmost token acts
last.  "CX(0,1) F(0) P(0) P(0) F(0)" is CX * F * P * P * F, which on
|0>|0> gives |1>|1>.
"""

from __future__ import print_function, division, absolute_import
from __future__ import unicode_literals
from gkpTools.circuitLib.gaussianOp import (
    compose, gate_identity, gate_fourier, gate_phase, gate_cx, gate_x, gate_z,
    gate_rotation, gate_squeeze, gate_shear, gate_sum, gate_shift_q,
    gate_shift_p)
from fractions import Fraction
import re

__all__ = ["CliffordToken", "CliffordWord", "compile_clifford",
           "random_clifford_word", "random_symplectic_word"]


class CliffordToken(object):

    ARITY = {"F": 1, "P": 1, "X": 1, "Z": 1, "CX": 2}

    def __init__(self, name, modes):
        if name not in self.ARITY:
            raise ValueError("Unknown Clifford token %r" % name)
        modes = tuple(modes)
        if len(modes) != self.ARITY[name]:
            raise ValueError("%s takes %d mode(s), got %d"
                             % (name, self.ARITY[name], len(modes)))
        if name == "CX" and modes[0] == modes[1]:
            raise ValueError("CX needs two distinct modes")
        self.name, self.modes = name, modes

    def __eq__(self, other):
        return (isinstance(other, CliffordToken) and
                (self.name, self.modes) == (other.name, other.modes))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.name, self.modes))

    def __str__(self):
        return "%s(%s)" % (self.name, ",".join(str(m) for m in self.modes))

    __repr__ = __str__


class CliffordWord(object):

    RE_TOKEN = re.compile(r"\s*([A-Z]+)\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)\s*")

    def __init__(self, tokens, n_modes=None):
        self.tokens = tuple(tokens)
        highest = max((m for t in self.tokens for m in t.modes), default=-1)
        if n_modes is None:
            n_modes = max(highest + 1, 1)
        if highest >= n_modes:
            raise IndexError("Mode %d out of range for %d modes" % (highest, n_modes))
        self.n_modes = n_modes

    @classmethod
    def fromString(cls, text, n_modes=None):
        tokens, pos = [], 0
        text = text.strip()
        while pos < len(text):
            m = cls.RE_TOKEN.match(text, pos)
            if not m:
                raise ValueError("Malformed Clifford word at %d: %r" % (pos, text[pos:]))
            modes = [int(m.group(2))]
            if m.group(3) is not None:
                modes.append(int(m.group(3)))
            tokens.append(CliffordToken(m.group(1), modes))
            pos = m.end()
        return cls(tokens, n_modes)

    def __len__(self):
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __str__(self):
        return " ".join(str(t) for t in self.tokens)

    def __repr__(self):
        return "<CliffordWord %d modes: %s>" % (self.n_modes, self)


_GATES = {
    "F": gate_fourier,
    "P": gate_phase,
    "X": gate_x,
    "Z": gate_z,
    "CX": gate_cx,
}


def compile_clifford(word):
    n = word.n_modes
    if not len(word):
        return gate_identity(n)
    return compose(*[_GATES[t.name](n, *t.modes) for t in word])


def random_clifford_word(n, length, rng, paulis=True):
    """A uniformly drawn token sequence; rng is a numpy Generator."""
    names = ["F", "P", "X", "Z"] if paulis else ["F", "P"]
    if n > 1:
        names.append("CX")
    tokens = []
    for _ in range(length):
        name = names[int(rng.integers(len(names)))]
        if name == "CX":
            j, k = (int(x) for x in rng.choice(n, size=2, replace=False))
            tokens.append(CliffordToken(name, (j, k)))
        else:
            tokens.append(CliffordToken(name, (int(rng.integers(n)),)))
    return CliffordWord(tokens, n)


_PYTHAGOREAN = [(Fraction(3, 5), Fraction(4, 5)), (Fraction(5, 13), Fraction(12, 13)),
                (Fraction(8, 17), Fraction(15, 17)), (0, 1)]


def _random_fraction(rng, max_denominator, nonzero=False):
    while True:
        value = Fraction(int(rng.integers(-max_denominator, max_denominator + 1)),
                         int(rng.integers(1, max_denominator + 1)))
        if value or not nonzero:
            return value


def random_symplectic_word(n, length, rng, max_denominator=9, displacements=True):
    """A random rational Gaussian operation built from generator gates.

    Returns (op, description) where description lists the gates in
    time order.
    """
    kinds = ["rotation", "squeeze", "shear"]
    if n > 1:
        kinds.append("sum")
    if displacements:
        kinds += ["shift_q", "shift_p"]
    ops, description = [], []
    for _ in range(length):
        kind = kinds[int(rng.integers(len(kinds)))]
        j = int(rng.integers(n))
        if kind == "rotation":
            cos, sin = _PYTHAGOREAN[int(rng.integers(len(_PYTHAGOREAN)))]
            if rng.integers(2):
                sin = -sin
            op, args = gate_rotation(n, j, cos, sin), (j, cos, sin)
        elif kind == "squeeze":
            s = abs(_random_fraction(rng, max_denominator, nonzero=True))
            op, args = gate_squeeze(n, j, s), (j, s)
        elif kind == "shear":
            c = _random_fraction(rng, max_denominator)
            op, args = gate_shear(n, j, c), (j, c)
        elif kind == "sum":
            j, k = (int(x) for x in rng.choice(n, size=2, replace=False))
            op, args = gate_sum(n, j, k), (j, k)
        elif kind == "shift_q":
            a = _random_fraction(rng, max_denominator)
            op, args = gate_shift_q(n, j, a), (j, a)
        else:
            a = _random_fraction(rng, max_denominator)
            op, args = gate_shift_p(n, j, a), (j, a)
        ops.append(op)
        description.append((kind,) + args)
    if not ops:
        return gate_identity(n), description
    return compose(*reversed(ops)), description
