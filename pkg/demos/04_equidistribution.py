"""
How often does the patch get hit?
=================================

Point counts of primitive forms in K grow like the closed-orbit volume,
approximated here by h(d) * 2 * log(eps_d). The fraction of n whose
discriminant 4n has a form inside the small certified patch increases with n,
which is the empirical face of the equidistribution statement.
"""

import numpy as np

from boundedrep import class_data, equidist, measure_of, omega_hit_rates, default_patch
from boundedrep.pipeline import even_nonsquare_discriminants

print(class_data(4 * 1009).as_dict())

ds = even_nonsquare_discriminants(40000, 42000)
rep = equidist(ds)
nk = np.array([r.normalized_K for r in rep.rows])
print(f"{len(ds)} discriminants: lambda_K / vol_proxy mean {nk.mean():.3f}, "
      f"dispersion {nk.std() / nk.mean():.3f}")

predicted = measure_of(default_patch()).value / measure_of("K").value
ratio = np.mean([r.ratio_patch_over_K for r in rep.rows])
print(f"patch/K count ratio {ratio:.2e} vs measure ratio {predicted:.2e}")

for block in omega_hit_rates(10, 15):
    print(f"n in [{block.lo}, {block.hi}): hit rate {block.fraction:.3f}")
