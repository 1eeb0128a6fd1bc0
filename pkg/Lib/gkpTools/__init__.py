from __future__ import print_function, division, absolute_import

version = "1.0"
