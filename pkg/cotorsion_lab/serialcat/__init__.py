from .intervals import Interval, Obj, parse_interval, parse_obj, sum_positions
from .category import CategoryCtx, CATEGORY_KIND, generate, category_from_dict
from .morphisms import ObjMorphism, composition_constants
from .conflations import Conflation
