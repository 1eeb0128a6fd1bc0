from __future__ import print_function, division, absolute_import
from __future__ import unicode_literals


class Statement(object):
    def __init__(self, location):
        self.location = location

    def build(self, builder):
        pass


class Block(Statement):
    def __init__(self, location):
        Statement.__init__(self, location)
        self.statements = []

    def build(self, builder):
        for s in self.statements:
            s.build(builder)


class CircuitFile(Block):
    def __init__(self, location, n_modes):
        Block.__init__(self, location)
        self.n_modes = n_modes

    def stages(self):
        return [s for s in self.statements if isinstance(s, StageBlock)]

    def isProgram(self):
        return bool(self.stages())


class StageBlock(Block):
    def __init__(self, location, index):
        Block.__init__(self, location)
        self.index = index
        self.measurement = None


class ConditionalBlock(Block):
    """Statements applied only when the logical bin of a stage outcome is 1."""

    def __init__(self, location, stage):
        Block.__init__(self, location)
        self.stage = stage

    def build(self, builder):
        if builder.bit(self.location, self.stage):
            Block.build(self, builder)


class GateStatement(Statement):
    """One of the generator or Clifford gates; args are modes then parameters."""

    def __init__(self, location, gate, args):
        Statement.__init__(self, location)
        self.gate, self.args = gate, tuple(args)

    def build(self, builder):
        builder.add_gate(self.location, self.gate, self.args)


class ShiftStatement(Statement):
    def __init__(self, location, quadrature, mode, amount):
        Statement.__init__(self, location)
        self.quadrature, self.mode, self.amount = quadrature, mode, amount

    def build(self, builder):
        builder.add_shift(self.location, self.quadrature, self.mode, self.amount)


class OutcomeShiftStatement(Statement):
    """Shift by scale times the outcome of an earlier stage."""

    def __init__(self, location, quadrature, mode, stage, scale):
        Statement.__init__(self, location)
        self.quadrature, self.mode = quadrature, mode
        self.stage, self.scale = stage, scale

    def build(self, builder):
        amount = builder.outcome(self.location, self.stage) * self.scale
        builder.add_shift(self.location, self.quadrature, self.mode, amount)


class RotationStatement(Statement):
    """Rotation by cos/sin, by a rational cot/tan, or by a float angle."""

    def __init__(self, location, mode, cos=None, sin=None, direction=None,
                 angle=None):
        Statement.__init__(self, location)
        self.mode = mode
        self.cos, self.sin = cos, sin
        self.direction, self.angle = direction, angle

    def build(self, builder):
        builder.add_rotation(self.location, self.mode, self.cos, self.sin,
                             self.direction, self.angle)


class MatrixStatement(Statement):
    def __init__(self, location, rows):
        Statement.__init__(self, location)
        self.rows = rows

    def build(self, builder):
        builder.add_matrix(self.location, self.rows)


class CliffordStatement(Statement):
    def __init__(self, location, word):
        Statement.__init__(self, location)
        self.word = word

    def build(self, builder):
        builder.add_clifford(self.location, self.word)


class MeasureStatement(Statement):
    def __init__(self, location, mode, modulus=None, window=None):
        Statement.__init__(self, location)
        self.mode, self.modulus, self.window = mode, modulus, window
