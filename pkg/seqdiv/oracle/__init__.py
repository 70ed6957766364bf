from .exhaustive import *
from .simulation import *
