from __future__ import print_function, division, absolute_import
from __future__ import unicode_literals
from gkpTools.circuitLib.error import CircuitLibError
from gkpTools.circuitLib.lexer import Lexer
from gkpTools.circuitLib.classify import Direction, NON_RATIONAL
from gkpTools.circuitLib.clifford import CliffordWord
from gkpTools.misc.splitReal import SplitReal
import gkpTools.circuitLib.ast as ast
from fractions import Fraction


class Parser(object):
    SINGLE_MODE_GATES = {"fourier", "phase", "x", "z"}
    TWO_MODE_GATES = {"sum", "cx"}
    PARAMETER_GATES = {"shear", "squeeze"}

    def __init__(self, path, text=None):
        self.next_token_type_, self.next_token_ = (None, None)
        self.next_token_location_ = None
        if text is None:
            self.lexer_ = Lexer.fromPath(path)
        else:
            self.lexer_ = Lexer(text, path)
        self.stage_count_ = 0
        self.advance_lexer_()

    def parse(self):
        self.expect_keyword_("modes")
        location = self.cur_token_location_
        n_modes = self.expect_number_()
        if n_modes < 1:
            raise CircuitLibError("Expected at least one mode", location)
        self.expect_symbol_(";")
        self.doc_ = doc = ast.CircuitFile(location, n_modes)
        statements = doc.statements
        while self.next_token_type_ is not None:
            self.advance_lexer_()
            if self.is_cur_keyword_("stage"):
                if statements and not doc.stages():
                    raise CircuitLibError("A program keeps all gates inside "
                                          "stage blocks", self.cur_token_location_)
                statements.append(self.parse_stage_())
            elif doc.stages():
                raise CircuitLibError("Gates after the first stage block must "
                                      "be inside a stage", self.cur_token_location_)
            else:
                statements.append(self.parse_gate_())
        return doc

    def parse_stage_(self):
        assert self.is_cur_keyword_("stage")
        location = self.cur_token_location_
        block = ast.StageBlock(location, self.stage_count_)
        self.expect_symbol_("{")
        while self.next_token_ != "}":
            self.advance_lexer_()
            if self.cur_token_type_ is None:
                raise CircuitLibError("Expected '}'", location)
            if self.is_cur_keyword_("measure"):
                if block.measurement is not None:
                    raise CircuitLibError("A stage measures exactly one mode",
                                          self.cur_token_location_)
                block.measurement = self.parse_measure_()
            elif block.measurement is not None:
                raise CircuitLibError("The measurement must end the stage",
                                      self.cur_token_location_)
            elif self.is_cur_keyword_("if"):
                block.statements.append(self.parse_conditional_())
            else:
                block.statements.append(self.parse_gate_())
        self.expect_symbol_("}")
        if block.measurement is None:
            raise CircuitLibError("Stage %d has no measurement" % block.index,
                                  location)
        self.stage_count_ += 1
        return block

    def parse_conditional_(self):
        location = self.cur_token_location_
        self.expect_keyword_("bit")
        block = ast.ConditionalBlock(location, self.expect_stage_reference_())
        self.expect_symbol_("{")
        while self.next_token_ != "}":
            self.advance_lexer_()
            if self.cur_token_type_ is None:
                raise CircuitLibError("Expected '}'", location)
            block.statements.append(self.parse_gate_())
        self.expect_symbol_("}")
        return block

    def parse_measure_(self):
        location = self.cur_token_location_
        mode = self.expect_mode_()
        modulus = window = None
        if self.next_token_ == "mod":
            self.expect_keyword_("mod")
            self.expect_symbol_("=")
            modulus = self.expect_rational_()
            if modulus <= 0:
                raise CircuitLibError("Modulus must be positive",
                                      self.cur_token_location_)
        elif self.next_token_ == "window":
            self.expect_keyword_("window")
            self.expect_symbol_("=")
            window = self.expect_number_()
            if window < 1:
                raise CircuitLibError("Window must be at least 1",
                                      self.cur_token_location_)
        self.expect_symbol_(";")
        return ast.MeasureStatement(location, mode, modulus, window)

    def parse_gate_(self):
        location = self.cur_token_location_
        if self.cur_token_type_ is not Lexer.NAME:
            raise CircuitLibError("Expected a gate name", location)
        gate = self.cur_token_
        if gate in self.SINGLE_MODE_GATES:
            statement = ast.GateStatement(location, gate, [self.expect_mode_()])
        elif gate in self.TWO_MODE_GATES:
            statement = ast.GateStatement(
                location, gate, [self.expect_mode_(), self.expect_mode_()])
        elif gate in self.PARAMETER_GATES:
            statement = ast.GateStatement(
                location, gate, [self.expect_mode_(), self.expect_rational_()])
        elif gate == "rotation":
            statement = self.parse_rotation_()
        elif gate in ("shift_q", "shift_p"):
            statement = self.parse_shift_()
        elif gate == "matrix":
            statement = self.parse_matrix_()
        elif gate == "clifford":
            statement = self.parse_clifford_()
        else:
            raise CircuitLibError("Unknown gate \"%s\"" % gate, location)
        self.expect_symbol_(";")
        return statement

    def parse_rotation_(self):
        location = self.cur_token_location_
        mode = self.expect_mode_()
        key = self.expect_name_()
        self.expect_symbol_("=")
        if key == "cos":
            cos = self.expect_rational_()
            self.expect_keyword_("sin")
            self.expect_symbol_("=")
            sin = self.expect_rational_()
            if cos * cos + sin * sin != 1:
                raise CircuitLibError("cos^2 + sin^2 must equal 1", location)
            return ast.RotationStatement(location, mode, cos=cos, sin=sin)
        if key in ("cot", "tan"):
            value = self.expect_rational_()
            if key == "cot":
                direction = Direction.fromCot(value)
            else:
                direction = Direction.fromTan(value)
            return ast.RotationStatement(location, mode, direction=direction)
        if key == "angle":
            angle = self.expect_real_()
            return ast.RotationStatement(location, mode, direction=NON_RATIONAL,
                                         angle=angle)
        raise CircuitLibError("Expected cos, cot, tan or angle", location)

    def parse_shift_(self):
        location, quadrature = self.cur_token_location_, self.cur_token_[-1]
        mode = self.expect_mode_()
        if self.next_token_ == "outcome":
            self.expect_keyword_("outcome")
            self.expect_symbol_("=")
            stage = self.expect_stage_reference_()
            scale = Fraction(1)
            if self.next_token_ == "scale":
                self.expect_keyword_("scale")
                self.expect_symbol_("=")
                scale = self.expect_rational_()
            return ast.OutcomeShiftStatement(location, quadrature, mode, stage, scale)
        coeff, remainder = Fraction(0), 0.0
        seen = set()
        while self.next_token_ in ("sqrtpi", "rem") and self.next_token_ not in seen:
            key = self.expect_name_()
            seen.add(key)
            self.expect_symbol_("=")
            if key == "sqrtpi":
                coeff = self.expect_rational_()
            else:
                remainder = self.expect_real_()
        if not seen:
            raise CircuitLibError("Expected sqrtpi=, rem= or outcome=", location)
        return ast.ShiftStatement(location, quadrature, mode,
                                  SplitReal(coeff, remainder))

    def parse_matrix_(self):
        location = self.cur_token_location_
        rows = []
        while self.next_token_ == "[":
            self.expect_symbol_("[")
            row = []
            while self.next_token_ != "]":
                row.append(self.expect_rational_())
            self.expect_symbol_("]")
            rows.append(row)
        if not rows:
            raise CircuitLibError("Expected matrix rows", location)
        return ast.MatrixStatement(location, rows)

    def parse_clifford_(self):
        location = self.cur_token_location_
        self.advance_lexer_()
        if self.cur_token_type_ is not Lexer.STRING:
            raise CircuitLibError("Expected a quoted Clifford word", location)
        try:
            word = CliffordWord.fromString(self.cur_token_, self.doc_.n_modes)
        except (ValueError, IndexError) as e:
            raise CircuitLibError(str(e), self.cur_token_location_)
        return ast.CliffordStatement(location, word)

    def expect_stage_reference_(self):
        stage = self.expect_number_()
        if not 0 <= stage < self.stage_count_:
            raise CircuitLibError("Stage %d has no outcome yet" % stage,
                                  self.cur_token_location_)
        return stage

    def expect_mode_(self):
        mode = self.expect_number_()
        if not 0 <= mode < self.doc_.n_modes:
            raise CircuitLibError("Mode %d out of range for %d modes"
                                  % (mode, self.doc_.n_modes),
                                  self.cur_token_location_)
        return mode

    def is_cur_keyword_(self, k):
        return (self.cur_token_type_ is Lexer.NAME) and (self.cur_token_ == k)

    def expect_symbol_(self, symbol):
        self.advance_lexer_()
        if self.cur_token_type_ is Lexer.SYMBOL and self.cur_token_ == symbol:
            return symbol
        raise CircuitLibError("Expected '%s'" % symbol,
                              self.cur_token_location_)

    def expect_keyword_(self, keyword):
        self.advance_lexer_()
        if self.cur_token_type_ is Lexer.NAME and self.cur_token_ == keyword:
            return self.cur_token_
        raise CircuitLibError("Expected \"%s\"" % keyword,
                              self.cur_token_location_)

    def expect_name_(self):
        self.advance_lexer_()
        if self.cur_token_type_ is Lexer.NAME:
            return self.cur_token_
        raise CircuitLibError("Expected a name", self.cur_token_location_)

    def expect_number_(self):
        self.advance_lexer_()
        if self.cur_token_type_ is Lexer.NUMBER:
            return self.cur_token_
        raise CircuitLibError("Expected a number", self.cur_token_location_)

    def expect_rational_(self):
        self.advance_lexer_()
        if self.cur_token_type_ is Lexer.NUMBER:
            return Fraction(self.cur_token_)
        if self.cur_token_type_ is Lexer.RATIONAL:
            return self.cur_token_
        raise CircuitLibError("Expected a rational number",
                              self.cur_token_location_)

    def expect_real_(self):
        self.advance_lexer_()
        if self.cur_token_type_ in (Lexer.NUMBER, Lexer.FLOAT):
            return float(self.cur_token_)
        if self.cur_token_type_ is Lexer.RATIONAL:
            return float(self.cur_token_)
        raise CircuitLibError("Expected a real number",
                              self.cur_token_location_)

    def advance_lexer_(self):
        self.cur_token_type_, self.cur_token_, self.cur_token_location_ = (
            self.next_token_type_, self.next_token_, self.next_token_location_)
        try:
            (self.next_token_type_, self.next_token_,
             self.next_token_location_) = self.lexer_.next()
        except StopIteration:
            self.next_token_type_, self.next_token_ = (None, None)
