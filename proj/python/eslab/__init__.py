from ._eslab import *  # noqa: F401,F403
