from .montecarlo import *
