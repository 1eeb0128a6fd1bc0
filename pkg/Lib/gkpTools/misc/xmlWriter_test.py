from __future__ import print_function, division, absolute_import
from gkpTools.misc.rationalTools import RatMatrix
from gkpTools.misc.splitReal import SplitReal
from gkpTools.misc.xmlWriter import XMLWriter, escapeattr
from fractions import Fraction
import io
import unittest

HEADER = '<?xml version="1.0" encoding="UTF-8"?>\n'


class TestXMLWriter(unittest.TestCase):

	def test_no_declaration(self):
		writer = XMLWriter(io.StringIO(), declaration=False)
		writer.simpletag("row")
		self.assertEqual("<row/>", writer.file.getvalue())

	def test_tags(self):
		writer = XMLWriter(io.StringIO())
		writer.begintag("latticePDF", n=2)
		writer.newline()
		writer.simpletag("offset", values="1 1")
		writer.newline()
		writer.endtag("latticePDF")
		self.assertEqual(HEADER + '<latticePDF n="2">\n  <offset values="1 1"/>\n</latticePDF>',
				writer.file.getvalue())

	def test_element_nesting(self):
		writer = XMLWriter(io.StringIO(), declaration=False)
		with writer.element("shot", index=0):
			with writer.element("stages"):
				writer.line("stage", mode=1)
		self.assertEqual('<shot index="0">\n  <stages>\n    <stage mode="1"/>\n'
				'  </stages>\n</shot>\n', writer.file.getvalue())

	def test_matrix(self):
		writer = XMLWriter(io.StringIO(), declaration=False)
		writer.matrix("generator", RatMatrix([[2, 0], [Fraction(-1, 2), 1]]))
		self.assertEqual('<generator>\n  <row values="2 0"/>\n  <row values="-1/2 1"/>\n'
				'</generator>\n', writer.file.getvalue())

	def test_attribute_values(self):
		writer = XMLWriter(io.StringIO(), declaration=False)
		writer.simpletag("entry", [("coeff", Fraction(3, 4)), ("outcome", SplitReal(Fraction(1))),
				("remainder", 0.5), ("values", [Fraction(1, 3), 2])])
		self.assertEqual('<entry coeff="3/4" outcome="1" remainder="0.5" values="1/3 2"/>',
				writer.file.getvalue())

	def test_attribute_order(self):
		writer = XMLWriter(io.StringIO(), declaration=False)
		writer.simpletag("entry", b="2", a="1")
		writer.simpletag("entry", [("b", 2), ("a", '"1"')])
		self.assertEqual('<entry a="1" b="2"/><entry b="2" a="&quot;1&quot;"/>',
				writer.file.getvalue())

	def test_mixed_attributes(self):
		writer = XMLWriter(io.StringIO())
		self.assertRaises(TypeError, writer.simpletag, "entry", [("a", 1)], b=2)

	def test_escape(self):
		self.assertEqual(escapeattr('<a & "b">'), '&lt;a &amp; &quot;b&quot;&gt;')

	def test_nonmatching_endtag(self):
		writer = XMLWriter(io.StringIO())
		writer.begintag("a")
		self.assertRaisesRegex(ValueError, "Closing <b> but the open element is <a>",
				writer.endtag, "b")
		self.assertRaisesRegex(ValueError, "open element is none",
				XMLWriter(io.StringIO()).endtag, "a")


if __name__ == "__main__":
	unittest.main()
