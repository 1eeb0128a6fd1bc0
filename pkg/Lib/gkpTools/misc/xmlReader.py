"""Read XML written by xmlWriter into (name, attrs, content) tuples.

Content lists hold child element tuples and character data strings;
whitespace-only character data is dropped.

>>> readXMLString('<a x="1"><b/> text </a>')
('a', {'x': '1'}, [('b', {}, []), ' text '])
"""

from __future__ import print_function, division, absolute_import
from gkpTools.error import GkpError
from xml.parsers.expat import ParserCreate, ExpatError

__all__ = ["XMLParseError", "readXML", "readXMLString", "elements"]


class XMLParseError(GkpError): pass


class _TreeBuilder(object):

	def __init__(self):
		self.parser = ParserCreate()
		self.parser.StartElementHandler = self.startElement_
		self.parser.EndElementHandler = self.endElement_
		self.parser.CharacterDataHandler = self.addCharacterData_
		self.root = None
		self.stack = []

	def startElement_(self, name, attrs):
		element = (name, attrs, [])
		if self.stack:
			self.stack[-1][2].append(element)
		else:
			self.root = element
		self.stack.append(element)

	def endElement_(self, name):
		self.stack.pop()

	def addCharacterData_(self, data):
		if not self.stack or not data.strip():
			return
		content = self.stack[-1][2]
		if content and isinstance(content[-1], str):
			content[-1] += data
		else:
			content.append(data)

	def feed(self, data):
		try:
			self.parser.Parse(data, 1)
		except ExpatError as e:
			raise XMLParseError(str(e))
		return self.root


def readXMLString(data):
	return _TreeBuilder().feed(data)


def readXML(fileOrPath):
	if hasattr(fileOrPath, "read"):
		return readXMLString(fileOrPath.read())
	with open(fileOrPath, "r", encoding="utf-8") as f:
		return readXMLString(f.read())


def elements(content, name=None):
	"""Child elements of a content list, optionally filtered by tag."""
	return [c for c in content if isinstance(c, tuple) and (name is None or c[0] == name)]


if __name__ == "__main__":
	import sys
	import doctest
	sys.exit(doctest.testmod().failed)
