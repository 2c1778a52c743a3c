from .constants import *
from .errors import *
from .misc import *
from .parsing import *
from .workflow import *
