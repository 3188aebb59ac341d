"""Context organization pipeline for multi-document QA."""

from corg._corg import *  # noqa: F401,F403
from corg._corg import __doc__  # noqa: F401
