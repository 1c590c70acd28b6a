from .cotorsion import (CotorsionPair, ApproximationRecord, OrthogonalityFailure, MissingApproximation,
                        orthogonality_failure, verify_cotorsion)
from .twin import TwinPair, InclusionFailure, verify_twin
from .hearts import HeartClasses, compute_hearts, membership_bplus, membership_bminus
