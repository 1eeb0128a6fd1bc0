from __future__ import print_function, division, absolute_import
from __future__ import unicode_literals
from gkpTools.error import GkpError


class CircuitLibError(GkpError):
    def __init__(self, message, location):
        GkpError.__init__(self, message)
        self.location = location

    def __str__(self):
        message = GkpError.__str__(self)
        if self.location:
            path, line, column = self.location
            return "%s:%d:%d: %s" % (path, line, column, message)
        else:
            return message
