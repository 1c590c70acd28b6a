import logging.config

logging_config = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'standard': {
            'format': '%(asctime)s [%(levelname)s] %(name)s: %(message)s'
        },
    },
    'handlers': {
        'default': {
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
            'formatter': 'standard',
        },
    },
    'loggers': {
        '': {
            'handlers': ['default'],
            'level': 'ERROR',
            'propagate': True
        }
    }
}

logging.config.dictConfig(logging_config)

from .exception import (CotorsionLabException, PresentationError, ArgumentMismatchError, ValidationError,
                        DecompositionInconclusive, EnumerationRefused, ExpressionError, FixtureValidationError,
                        InputFileError, CriterionDisagreement, ReplayMismatch, ApproximationUnavailable)
from .contexts import (get_decomposition_seed, set_decomposition_seed, decomposition_seed_as,
                       get_idempotent_search_cap, set_idempotent_search_cap, idempotent_search_cap_as,
                       get_fitting_attempts, set_fitting_attempts, fitting_attempts_as, get_cross_check_enabled,
                       set_cross_check_enabled, cross_check_enabled_as)
from .manager import memoize, memo_property

# categories
from .repcore import PrimeField, QuiverPresentation
from .serialcat import CategoryCtx, Interval, Obj, ObjMorphism, Conflation, generate, parse_interval, parse_obj

# subcategories and pairs
from .subcat import (Subcategory, SearchBounds, DEFAULT_BOUNDS, Verdict, VerdictKind, define_subcategories,
                     star_member, subcat_in_star, find_left_approx, find_right_approx)
from .pairs import CotorsionPair, TwinPair, verify_cotorsion, verify_twin, compute_hearts

# hearts
from .heartcat import (Heart, HeartMorphism, is_epi_in_heart, is_mono_in_heart, kernel_in_heart, cokernel_in_heart,
                       enum_epi_triangles, enum_mono_triangles, check_integral, check_abelian, probe_integral_direct,
                       probe_right_integral, replay_certificate)
