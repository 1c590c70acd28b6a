from .subcategory import (Subcategory, add, zero, everything, projectives, injectives, oplus, inter, right_perp,
                          left_perp)
from .parser import parse_expression, define_subcategories, referenced_names, Evaluator
from .verdict import Verdict, VerdictKind
from .search import (SearchBounds, DEFAULT_BOUNDS, StarNonMembership, enumerate_objs, canonical_deflation,
                     canonical_inflation, kernel_conflation, cokernel_conflation, find_left_approx, find_right_approx,
                     star_member, subcat_in_star)
