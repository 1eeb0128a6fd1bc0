#! /usr/bin/env python

from __future__ import print_function
import os, sys

# if setuptools is not installed, fall back to distutils
try:
	from setuptools import setup
except ImportError:
	from distutils.core import setup

try:
	import numpy
except ImportError:
	print("*** Warning: gkpTools needs numpy, see:")
	print("        https://numpy.org/")


# Force distutils to use py_compile.compile() function with 'doraise' argument
# set to True, in order to raise an exception on compilation errors
import py_compile
orig_py_compile = py_compile.compile

def doraise_py_compile(file, cfile=None, dfile=None, doraise=False):
    orig_py_compile(file, cfile=cfile, dfile=dfile, doraise=True)

py_compile.compile = doraise_py_compile


# Trove classifiers for PyPI
classifiers = {"classifiers": [
	"Development Status :: 4 - Beta",
	"Environment :: Console",
	"Intended Audience :: Science/Research",
	"License :: OSI Approved :: BSD License",
	"Natural Language :: English",
	"Operating System :: OS Independent",
	"Programming Language :: Python :: 3",
	"Topic :: Scientific/Engineering :: Physics",
]}

long_description = """\
gkpTools simulates circuits of ideal GKP states, rational symplectic
Gaussian operations, arbitrary real displacements and homodyne position
measurements. It computes the exact lattice support of the measurement
outcomes with rational arithmetic, samples from it (including adaptive,
outcome-dependent circuits), classifies circuits by simulability, and
estimates the magic-state yield of finitely squeezed GKP inputs. The
package also contains a tool called "gkpsim" that drives all of these
from circuit files.
"""

setup(
		name = "gkptools",
		version = "1.0",
		description = "Exact simulation of GKP circuits with rational Gaussian operations",
		license = "OpenSource, BSD-style",
		platforms = ["Any"],
		long_description = long_description,
		python_requires = ">=3.5",
		install_requires = ["numpy"],

		packages = [
			"gkpTools",
			"gkpTools.circuitLib",
			"gkpTools.latticeLib",
			"gkpTools.misc",
			"gkpTools.oracles",
		],
		package_dir = {'': 'Lib'},
		package_data = {'gkpTools.circuitLib': ['testdata/*.gkp']},
		entry_points = {
				'console_scripts': [
					"gkpsim = gkpTools.gkpsim:main",
				]
			},
		**classifiers
	)
