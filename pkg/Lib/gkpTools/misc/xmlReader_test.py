from __future__ import print_function, division, absolute_import
from gkpTools.misc.xmlReader import XMLParseError, readXML, readXMLString, elements
from gkpTools.misc.xmlWriter import XMLWriter
import io
import unittest


class TestXMLReader(unittest.TestCase):

	def test_tree(self):
		root = readXMLString('<a><b x="1"/><c>text</c><b x="2"/></a>')
		name, attrs, content = root
		self.assertEqual(name, "a")
		self.assertEqual(attrs, {})
		self.assertEqual([e[1]["x"] for e in elements(content, "b")], ["1", "2"])
		self.assertEqual(elements(content, "c")[0][2], ["text"])

	def test_whitespace_dropped(self):
		root = readXMLString('<a>\n  <b/>\n</a>')
		self.assertEqual(root, ("a", {}, [("b", {}, [])]))

	def test_roundtrip_writer(self):
		f = io.StringIO()
		writer = XMLWriter(f)
		writer.begintag("gkpsim", version="1.0")
		writer.newline()
		writer.simpletag("row", values="1 -1/2")
		writer.newline()
		writer.endtag("gkpsim")
		writer.newline()
		root = readXML(io.StringIO(f.getvalue()))
		self.assertEqual(root, ("gkpsim", {"version": "1.0"},
				[("row", {"values": "1 -1/2"}, [])]))

	def test_malformed(self):
		self.assertRaises(XMLParseError, readXMLString, "<a><b></a>")


if __name__ == "__main__":
	unittest.main()
