"""Exception classes shared by the gkpTools packages."""

from __future__ import print_function, division, absolute_import


class GkpError(Exception):
	pass


class RationalError(GkpError, ValueError):
	"""Singular, rank-deficient or non-integer input to exact linear algebra."""


class SymplecticError(GkpError):
	"""A matrix failed the exact check M^T Omega M == Omega."""


class NonRationalError(GkpError):
	"""The operation has no rational symplectic matrix.

	The verdict of classify() travels with the exception so callers can
	report which simulability class the operation falls into.
	"""

	def __init__(self, message, verdict):
		GkpError.__init__(self, message)
		self.verdict = verdict

	def __str__(self):
		return "%s (%s)" % (GkpError.__str__(self), self.verdict)


class SupportError(GkpError, ValueError):
	"""A value lies off the support of a lattice distribution."""


class StageError(GkpError):

	def __init__(self, message, stage):
		GkpError.__init__(self, message)
		self.stage = stage

	def __str__(self):
		return "stage %d: %s" % (self.stage, GkpError.__str__(self))
