"""Bounded representations n = x^2 + y^2 - z^2 via binary quadratic forms of discriminant 4n."""

from .classgeom import (ClassData, class_data, class_number, fundamental_automorph,
                        reduced_forms, reduction_cycles, rho, vol_proxy)
from .dictionary import Triple, form_to_triple, triple_to_form, verify_bounded
from .discenum import EnumWindow, enumerate_forms, lambda_count, patch_hit
from .errors import ConsistencyError, InvalidDiscriminantError, InvalidInputError, ParityError
from .measure import MeasureEstimate, measure_of
from .pipeline import (EquidistRow, Path, RepresentationResult, brute_force_oracle, equidist,
                       omega_hit_rates, represent, scan)
from .qform import (IntForm, Move, ParityFixOutcome, apply_S, apply_T, apply_U, discriminant,
                    is_primitive, parity_fix)
from .region import (BallPatch, SurfacePoint, base_point, certified_patch, certify_patch,
                     default_patch, in_K_exact, in_patch)

__version__ = "0.1.0"
