from __future__ import print_function, division, absolute_import
from gkpTools.misc.loggingTools import Logger
import io
import unittest


class LoggerTest(unittest.TestCase):

	def test_parse_opts(self):
		log = Logger()
		rest = log.parse_opts(["sample", "-v", "--timing", "--seed=3", "x.gkp"])
		self.assertEqual(rest, ["sample", "--seed=3", "x.gkp"])
		self.assertTrue(log.verbose)
		self.assertTrue(log.timing)

	def test_quiet_by_default(self):
		f = io.StringIO()
		log = Logger(file=f)
		log("stage", 0, "outcome", 1)
		log.lapse("sample")
		log.total("sample")
		self.assertEqual(f.getvalue(), "")

	def test_verbose(self):
		f = io.StringIO()
		log = Logger(verbose=True, file=f)
		log("stage", 0, "mode", 1)
		self.assertEqual(f.getvalue(), "gkpsim: stage 0 mode 1\n")

	def test_timing(self):
		f = io.StringIO()
		log = Logger(timing=True, file=f)
		log.lapse("compute lattice")
		log.total("pdf")
		lines = f.getvalue().splitlines()
		self.assertEqual(len(lines), 2)
		self.assertRegex(lines[0], r"^gkpsim: Took \d+\.\d{3}s to compute lattice$")
		self.assertRegex(lines[1], r"^gkpsim: Took \d+\.\d{3}s in total for pdf$")


if __name__ == "__main__":
	unittest.main()
