"""Real numbers split into an exact multiple of sqrt(pi) and a float remainder.

>>> x = SplitReal("1/2", 0.25)
>>> x
<SplitReal 1/2+0.25>
>>> x + SplitReal(1)
<SplitReal 3/2+0.25>
>>> (SplitReal(5) % 2).coeff
Fraction(1, 1)
>>> SplitReal(-1) % 2
<SplitReal 1>
>>> str(SplitReal("-3/2"))
'-3/2'
"""

from __future__ import print_function, division, absolute_import
from gkpTools.misc.rationalTools import toRational, format_rational, parse_rational
from fractions import Fraction
import math

__all__ = ["SQRT_PI", "SplitReal", "parse_split", "TOLERANCE"]

SQRT_PI = math.sqrt(math.pi)

# Remainders compare equal within this absolute tolerance.
TOLERANCE = 1e-12


class SplitReal(object):

	__slots__ = ('coeff', 'remainder')

	def __init__(self, coeff=0, remainder=0.0):
		self.coeff = toRational(coeff)
		self.remainder = float(remainder)

	@classmethod
	def fromFloat(cls, value):
		return cls(0, value)

	def __float__(self):
		return float(self.coeff) * SQRT_PI + self.remainder

	def inSqrtPi(self):
		"""The value divided by sqrt(pi), as a float."""
		return float(self.coeff) + self.remainder / SQRT_PI

	def isExact(self):
		return self.remainder == 0.0

	def __add__(self, other):
		if not isinstance(other, SplitReal):
			other = SplitReal(other)
		return SplitReal(self.coeff + other.coeff, self.remainder + other.remainder)

	__radd__ = __add__

	def __neg__(self):
		return SplitReal(-self.coeff, -self.remainder)

	def __sub__(self, other):
		return self + (-other)

	def __mul__(self, scale):
		scale = toRational(scale)
		return SplitReal(self.coeff * scale, self.remainder * float(scale))

	__rmul__ = __mul__

	def __mod__(self, k):
		"""Reduce into [0, k*sqrt(pi)); the shift is an exact multiple of k."""
		k = toRational(k)
		if k <= 0:
			raise ValueError("Modulus must be positive")
		if self.remainder == 0.0:
			return SplitReal(self.coeff % k)
		n = math.floor(self.inSqrtPi() / float(k))
		return SplitReal(self.coeff - n * k, self.remainder)

	def __eq__(self, other):
		if not isinstance(other, SplitReal):
			return NotImplemented
		return (self.coeff == other.coeff and
			abs(self.remainder - other.remainder) <= TOLERANCE)

	def __ne__(self, other):
		result = self.__eq__(other)
		return result if result is NotImplemented else not result

	def __hash__(self):
		# Only the exact part hashes; equal values may differ in remainder noise.
		return hash(self.coeff)

	def __str__(self):
		if self.remainder == 0.0:
			return format_rational(self.coeff)
		return "%s%+.12g" % (format_rational(self.coeff), self.remainder)

	def __repr__(self):
		return "<SplitReal %s>" % self


def parse_split(text):
	"""Parse "p/q" or "p/q+r" / "p/q-r" where r is a decimal remainder.

	>>> parse_split("3/2-0.5")
	<SplitReal 3/2-0.5>
	"""
	text = text.strip()
	for i in range(1, len(text)):
		if text[i] in "+-" and text[i - 1] not in "eE":
			return SplitReal(parse_rational(text[:i]), float(text[i:]))
	return SplitReal(parse_rational(text))


if __name__ == "__main__":
	import sys
	import doctest
	sys.exit(doctest.testmod().failed)
