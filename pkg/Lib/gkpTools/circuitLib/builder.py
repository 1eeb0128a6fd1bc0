from __future__ import print_function, division, absolute_import
from __future__ import unicode_literals
from gkpTools.circuitLib.error import CircuitLibError
from gkpTools.circuitLib.parser import Parser
from gkpTools.circuitLib.classify import (
    Direction, DSpDescription, UnclassifiableCircuit, NON_RATIONAL, classify)
from gkpTools.circuitLib.clifford import compile_clifford
from gkpTools.circuitLib.gaussianOp import (
    GaussianOp, sequence, gate_fourier, gate_phase, gate_x, gate_z, gate_sum,
    gate_cx, gate_shear, gate_squeeze, gate_rotation, gate_shift_q,
    gate_shift_p)
from gkpTools.error import SymplecticError, NonRationalError
from gkpTools.misc.rationalTools import RatMatrix


def parseCircuit(path, text=None):
    return Parser(path, text).parse()


def loadCircuit(path, text=None):
    """Parse and build a circuit file without stages."""
    doc = parseCircuit(path, text)
    if doc.isProgram():
        raise CircuitLibError("Expected a circuit, found a staged program",
                              doc.location)
    return buildCircuit(doc)


def buildCircuit(doc):
    builder = Builder(doc.n_modes)
    doc.build(builder)
    return builder.result()


def buildProgram(doc):
    """An AdaptiveCircuit running the stages of a program file."""
    from gkpTools.sampler import AdaptiveCircuit, Stage
    if not doc.isProgram():
        raise CircuitLibError("Expected stage blocks in a program", doc.location)
    stages = []
    for block in doc.stages():
        m = block.measurement
        stages.append(Stage(_StageOps(doc.n_modes, block), m.mode,
                            modulus=m.modulus, window=m.window))
    return AdaptiveCircuit(doc.n_modes, stages)


class _StageOps(object):
    """Callable building one stage's operation from earlier outcomes."""

    def __init__(self, n_modes, block):
        self.n_modes, self.block = n_modes, block

    def __call__(self, outcomes):
        builder = Builder(self.n_modes, outcomes)
        self.block.build(builder)
        result = builder.result()
        if not isinstance(result, GaussianOp):
            raise NonRationalError("Stage %d is not rational symplectic"
                                   % self.block.index, classify(result))
        return result


class Builder(object):
    def __init__(self, n_modes, outcomes=None):
        self.n_modes = n_modes
        self.outcomes = outcomes
        # Time-ordered: GaussianOp, or (location, mode, Direction) for
        # rotations whose rationality is decided at the end.
        self.items_ = []

    def add_gate(self, location, gate, args):
        n = self.n_modes
        try:
            if gate == "fourier":
                op = gate_fourier(n, *args)
            elif gate == "phase":
                op = gate_phase(n, *args)
            elif gate == "x":
                op = gate_x(n, *args)
            elif gate == "z":
                op = gate_z(n, *args)
            elif gate == "sum":
                op = gate_sum(n, *args)
            elif gate == "cx":
                op = gate_cx(n, *args)
            elif gate == "shear":
                op = gate_shear(n, *args)
            elif gate == "squeeze":
                op = gate_squeeze(n, *args)
            else:
                raise CircuitLibError("Unknown gate \"%s\"" % gate, location)
        except (ValueError, IndexError) as e:
            raise CircuitLibError(str(e), location)
        self.items_.append(op)

    def add_shift(self, location, quadrature, mode, amount):
        if quadrature == "q":
            self.items_.append(gate_shift_q(self.n_modes, mode, amount))
        else:
            self.items_.append(gate_shift_p(self.n_modes, mode, amount))

    def add_rotation(self, location, mode, cos=None, sin=None,
                     direction=None, angle=None):
        if direction is None:
            direction = Direction.fromCosSin(cos, sin)
        self.items_.append((location, mode, direction))

    def add_matrix(self, location, rows):
        size = 2 * self.n_modes
        if len(rows) != size or any(len(r) != size for r in rows):
            raise CircuitLibError("Expected a %dx%d matrix" % (size, size),
                                  location)
        try:
            op = GaussianOp(RatMatrix(rows, size))
        except SymplecticError:
            raise SymplecticError("%s:%d:%d: matrix is not symplectic" % location)
        self.items_.append(op)

    def add_clifford(self, location, word):
        self.items_.append(compile_clifford(word))

    def outcome(self, location, stage):
        if self.outcomes is None or stage >= len(self.outcomes):
            raise CircuitLibError("No outcome recorded for stage %d" % stage,
                                  location)
        return self.outcomes[stage]

    def bit(self, location, stage):
        from gkpTools.sampler import logical_bin
        return logical_bin(self.outcome(location, stage)) == 1

    @staticmethod
    def rotation_op_(n, mode, direction):
        cos, sin = direction.cos_sin()
        return gate_rotation(n, mode, cos, sin)

    def result(self):
        """GaussianOp, DSpDescription or UnclassifiableCircuit."""
        n = self.n_modes
        items = self.items_
        rational = lambda d: d is not NON_RATIONAL and d.isRational()
        if all(isinstance(i, GaussianOp) or rational(i[2]) for i in items):
            return sequence([i if isinstance(i, GaussianOp)
                             else self.rotation_op_(n, i[1], i[2])
                             for i in items], n)
        prefix = 0
        while prefix < len(items) and not isinstance(items[prefix], GaussianOp):
            prefix += 1
        rest = []
        for item in items[prefix:]:
            if isinstance(item, GaussianOp):
                rest.append(item)
            elif rational(item[2]):
                rest.append(self.rotation_op_(n, item[1], item[2]))
            else:
                return UnclassifiableCircuit(
                    n, "irrational rotation at %s:%d:%d follows other gates"
                    % item[0])
        directions = [Direction(1, 0)] * n
        for _, mode, d in items[:prefix]:
            if directions[mode] is NON_RATIONAL or d is NON_RATIONAL:
                directions[mode] = NON_RATIONAL
            else:
                directions[mode] = directions[mode] * d
        lower = sequence(rest, n)
        if any(x != 0 for row in lower.B.toRows() for x in row):
            return UnclassifiableCircuit(
                n, "gates after the rotations are not block lower triangular")
        # Gate rotations map q to cos q - sin p; the DSp factor uses +sin.
        directions = [d if d is NON_RATIONAL else Direction(d.u, -d.v)
                      for d in directions]
        return DSpDescription(lower.A, lower.C, directions)
