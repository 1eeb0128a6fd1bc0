"""Progress and timing messages for gkpsim runs, written to standard error."""

from __future__ import print_function, division, absolute_import
import sys
import time


class Logger(object):
	"""Callable progress log.

	log("stage", 1, "outcome", x) prints when verbose; log.lapse("...")
	prints the time since the previous lapse when timing.
	"""

	FLAGS = {"--verbose": "verbose", "-v": "verbose", "--timing": "timing"}

	def __init__(self, verbose=False, timing=False, file=None, prefix="gkpsim"):
		self.verbose = verbose
		self.timing = timing
		self.file = file
		self.prefix = prefix
		self.last_time = self.start_time = time.perf_counter()

	def parse_opts(self, argv):
		"""Take the logging flags out of argv."""
		rest = []
		for arg in argv:
			if arg in self.FLAGS:
				setattr(self, self.FLAGS[arg], True)
			else:
				rest.append(arg)
		return rest

	def _print(self, text):
		out = self.file if self.file is not None else sys.stderr
		print("%s: %s" % (self.prefix, text), file=out)

	def __call__(self, *things):
		if self.verbose:
			self._print(" ".join(str(x) for x in things))

	def lapse(self, *things):
		now = time.perf_counter()
		if self.timing:
			self._print("Took %.3fs to %s" % (now - self.last_time, " ".join(str(x) for x in things)))
		self.last_time = now

	def total(self, what):
		if self.timing:
			self._print("Took %.3fs in total for %s" % (time.perf_counter() - self.start_time, what))
