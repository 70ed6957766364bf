from .batch import *
from .diversity import *
from .engagement import *
from .sequential import *
