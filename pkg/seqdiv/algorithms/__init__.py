from .best_k import *
from .bounds import *
from .greedy import *
from .matching import *
