"""Exact slice regular polynomials in several quaternionic variables.

The ring H[q1, ..., qn] with the star product, monic division, vanishing
certificates on spherical sets and balloons, zero-set enlargement for right
ideals, and the slice decomposition of zero sets.  All arithmetic is exact
over the rationals.
"""

from .division import div_monic, double_remainder, reduce_chain
from .errors import *  # noqa: F401,F403
from .ideals import (RightIdeal, balloon_ideal, commuting_tail_index, empty_set,
                     enlarge_zero, full_set, head_blocks, intersect, leaf,
                     set_from_json, slice_set, union, v_contains)
from .parser import parse, parse_poly
from .polyring import (SlicePoly, eval_star_product, evaluate, format_poly,
                       linear_poly, sphere_poly, star_mul, substitute_tail)
from .quatcore import (I, J, K, ONE, ZERO, Quaternion, SphereDescriptor, aligner,
                       commutes, conjugate_by, sphere_of)
from .slicegeom import (ArrangedBase, Balloon, SliceFrame, SphericalSet, membership,
                        represent, sample, split)
from .vanishing import (NotVanishing, VanishingCertificate, balloon_divisors,
                        decompose_at_point, factor_slab, q_ell_poly,
                        vanishes_on_arranged_sphere, vanishes_on_balloon,
                        vanishes_on_sphere_point_set, vanishes_on_sphere_product)

__version__ = "0.1.0"
