from .config import *
from .dpp import *
from .explore import *
from .greedy_rerank import *
from .simple import *
from .tuning import *
