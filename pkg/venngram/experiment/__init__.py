from .sweep import *
from .fit import *
from .csvio import *
