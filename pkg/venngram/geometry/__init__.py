from .circles import *
from .discs import *
from .central import *
from .triple import *
from ..errors import ConfigurationInfeasible
