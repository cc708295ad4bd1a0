from ._braess import *  # noqa: F401,F403
from ._braess import __doc__  # noqa: F401
