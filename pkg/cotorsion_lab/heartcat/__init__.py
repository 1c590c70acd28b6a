from .heart import Heart, HeartMorphism, sum_conflations
from .epimono import (is_epi_in_heart, is_mono_in_heart, is_epi_by_criterion, is_mono_by_criterion, is_epi_direct,
                      is_mono_direct, epi_cokernel_class, mono_kernel_class)
from .kernels import (HeartKernel, kernel_in_heart, cokernel_in_heart, validate_kernel, validate_cokernel,
                      pullback_map, pushout_map, pullback_leg, pushout_leg)
from .triangles import EpiTriangle, EPI, MONO, enum_epi_triangles, enum_mono_triangles, epi_triangle_for, \
    mono_triangle_for
from .certificates import (NonIntegralCertificate, NonAbelianCertificate, BadSquare, certificate_from_dict,
                           replay_certificate)
from .conditions import HeartComparison, compare_hearts, abelian_holds_route
from .integral import check_integral, containment_route, find_main_certificate, find_dual_certificate
from .abelian import check_abelian
from .probe import probe_integral_direct, probe_right_integral
