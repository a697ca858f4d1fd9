from .counts import *
from .scorer import *
