from .backends import *
from .visualize import *
from .logger import *
