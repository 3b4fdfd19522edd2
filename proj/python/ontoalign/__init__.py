from ._ontoalign import *  # noqa: F401,F403
from ._ontoalign import __doc__  # noqa: F401
