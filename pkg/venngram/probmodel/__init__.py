from .joint import *
from .feasibility import *
