from .distances import *
from .mf import *
from .regimes import *
from .synthetic import *
from .tables import *
