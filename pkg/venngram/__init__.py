from venngram import geometry
from venngram import oracle
from venngram import probmodel
from venngram import experiment
from venngram import ngram
from venngram import logging

__version__ = 'v0.1.0'

name = "venngram"
