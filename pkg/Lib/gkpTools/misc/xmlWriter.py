"""xmlWriter.py -- structured output for lattices, shots and reports.

Attribute values may be strings, numbers, Fractions, split reals or
sequences of those; sequences are written space separated.
"""

from __future__ import print_function, division, absolute_import
from gkpTools.misc.rationalTools import format_rational
from contextlib import contextmanager
from fractions import Fraction
import sys

INDENT = "  "


def formatValue(value):
	"""Attribute text for a value.

	>>> formatValue(Fraction(-3, 4))
	'-3/4'
	>>> formatValue((Fraction(2), 0, Fraction(1, 2)))
	'2 0 1/2'
	>>> formatValue(0.25)
	'0.25'
	"""
	if isinstance(value, str):
		return value
	if isinstance(value, Fraction):
		return format_rational(value)
	if isinstance(value, float):
		return repr(value)
	if isinstance(value, (list, tuple)):
		return " ".join(formatValue(v) for v in value)
	return str(value)


class XMLWriter(object):
	"""Writes indented XML to a text stream.

	Indentation follows the depth of open elements. Newlines are always
	"\\n" so output is byte-identical across platforms.
	"""

	def __init__(self, fileOrPath, indentwhite=INDENT, declaration=True):
		if fileOrPath == '-':
			fileOrPath = sys.stdout
		self.ownsFile = not hasattr(fileOrPath, "write")
		if self.ownsFile:
			fileOrPath = open(fileOrPath, "w", encoding="utf-8", newline="\n")
		self.file = fileOrPath
		self.indentwhite = indentwhite
		self.stack = []
		self._lineStart = True
		if declaration:
			self._emit('<?xml version="1.0" encoding="UTF-8"?>')
			self.newline()

	def close(self):
		if self.ownsFile:
			self.file.close()

	def _emit(self, data):
		if self._lineStart:
			self.file.write(self.indentwhite * len(self.stack))
			self._lineStart = False
		self.file.write(data)

	def newline(self):
		self.file.write("\n")
		self._lineStart = True

	def simpletag(self, tag, *args, **kwargs):
		self._emit("<%s%s/>" % (tag, _attributes(args, kwargs)))

	def begintag(self, tag, *args, **kwargs):
		self._emit("<%s%s>" % (tag, _attributes(args, kwargs)))
		self.stack.append(tag)

	def endtag(self, tag):
		if not self.stack or self.stack[-1] != tag:
			raise ValueError("Closing <%s> but the open element is %s"
					% (tag, "<%s>" % self.stack[-1] if self.stack else "none"))
		self.stack.pop()
		self._emit("</%s>" % tag)

	def line(self, tag, *args, **kwargs):
		"""Self-closing element on a line of its own."""
		self.simpletag(tag, *args, **kwargs)
		self.newline()

	@contextmanager
	def element(self, tag, *args, **kwargs):
		self.begintag(tag, *args, **kwargs)
		self.newline()
		yield self
		self.endtag(tag)
		self.newline()

	def matrix(self, tag, m, **kwargs):
		"""A RatMatrix as one <row values="..."/> per row."""
		with self.element(tag, **kwargs):
			for i in range(m.rows):
				self.line("row", values=m.row(i))


def _attributes(args, kwargs):
	# Keywords are sorted; pass one list of pairs to keep a given order.
	if args and kwargs:
		raise TypeError("Attributes must be given as pairs or as keywords, not both")
	pairs = args[0] if args else sorted(kwargs.items())
	return "".join(' %s="%s"' % (name, escapeattr(formatValue(value)))
			for name, value in pairs)


def escape(data):
	return (data.replace("&", "&amp;").replace("<", "&lt;")
			.replace(">", "&gt;").replace("\r", "&#13;"))


def escapeattr(data):
	return escape(data).replace('"', "&quot;")


if __name__ == "__main__":
	import doctest
	sys.exit(doctest.testmod().failed)
