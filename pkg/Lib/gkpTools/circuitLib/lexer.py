"""Tokenizer for .gkp circuit and program files.

Tokens are (type, value, location) triples; location is
(filename, line, column) with 1-based line and column.
"""

from __future__ import print_function, division, absolute_import
from __future__ import unicode_literals
from gkpTools.circuitLib.error import CircuitLibError
from fractions import Fraction
import codecs
import re

_BLANK = re.compile(r"[ \t]*")
_NEWLINE = re.compile(r"\r\n?|\n")
_COMMENT = re.compile(r"#[^\r\n]*")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INTEGER = re.compile(r"[+-]?[0-9]+")
_DENOMINATOR = re.compile(r"/([0-9]*)")
_DECIMAL = re.compile(r"(?:\.[0-9]*)?(?:[eE][+-]?([0-9]*))?")
_STRING = re.compile(r'"([^"\r\n]*)"')


class Lexer(object):
    NUMBER = "NUMBER"
    RATIONAL = "RATIONAL"
    FLOAT = "FLOAT"
    STRING = "STRING"
    NAME = "NAME"
    SYMBOL = "SYMBOL"
    COMMENT = "COMMENT"
    NEWLINE = "NEWLINE"

    SYMBOLS = frozenset(";{}[]=")

    def __init__(self, text, filename):
        self.filename = filename
        self.text = text
        self.pos = 0
        self.line = 1
        self.lineStart = 0

    def __iter__(self):
        return self

    def next(self):
        return self.__next__()

    def __next__(self):
        while True:
            token = self.token()
            if token[0] not in (Lexer.COMMENT, Lexer.NEWLINE):
                return token

    def location(self):
        return (self.filename, self.line, self.pos - self.lineStart + 1)

    def _match(self, pattern):
        m = pattern.match(self.text, self.pos)
        if m is not None:
            self.pos = m.end()
        return m

    def token(self):
        """Next token of any type, comments and newlines included."""
        self._match(_BLANK)
        location = self.location()
        if self.pos >= len(self.text):
            raise StopIteration()
        char = self.text[self.pos]

        if self._match(_NEWLINE):
            self.line += 1
            self.lineStart = self.pos
            return (Lexer.NEWLINE, None, location)
        m = self._match(_COMMENT)
        if m:
            return (Lexer.COMMENT, m.group(), location)
        m = self._match(_NAME)
        if m:
            return (Lexer.NAME, m.group(), location)
        m = self._match(_INTEGER)
        if m:
            return self._number(m.group(), location)
        if char in Lexer.SYMBOLS:
            self.pos += 1
            return (Lexer.SYMBOL, char, location)
        if char == '"':
            m = self._match(_STRING)
            if m is None:
                raise CircuitLibError("Expected '\"' to terminate string", location)
            return (Lexer.STRING, m.group(1), location)
        raise CircuitLibError("Unexpected character: '%s'" % char, location)

    def _number(self, integer, location):
        m = self._match(_DENOMINATOR)
        if m:
            if not m.group(1):
                raise CircuitLibError("Expected denominator after '/'", location)
            den = int(m.group(1))
            if den == 0:
                raise CircuitLibError("Zero denominator", location)
            return (Lexer.RATIONAL, Fraction(int(integer), den), location)
        start = self.pos
        m = self._match(_DECIMAL)
        if self.pos == start:
            return (Lexer.NUMBER, int(integer), location)
        if m.group(1) == "":
            raise CircuitLibError("Malformed exponent", location)
        return (Lexer.FLOAT, float(integer + m.group()), location)

    @staticmethod
    def fromPath(filename):
        try:
            with codecs.open(filename, "rb", "utf-8") as f:
                return Lexer(f.read(), filename)
        except IOError as err:
            raise CircuitLibError(str(err), (filename, 0, 0))
