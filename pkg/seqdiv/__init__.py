__version__ = '0.0.1'


from . import (algorithms, baselines, bench, data, objective, oracle, utils)
from .algorithms import *
from .baselines import *
from .core import *
from .errors import *
from .objective import *
from .oracle import *
from .settings_ import *
from .typing_ import (ProbabilityMode, ExtensionMode, ObjectiveKind,
                      ExploreAdaptation, DatasetKind, TableFormat, RegimeName)
