"""
The region K and a certified ball around P0
============================================

Scaled forms (a, b, c)/sqrt(d) live on the hyperboloid B^2 - 4AC = 1. The box
region K bounds |A - C|, |B| and |A + C| by 1, which is exactly the condition
that the resulting triple satisfies max(x^2, y^2, z^2) < n. A small ball around
P0 = (2/5, -2/5, -21/40) is certified to stay inside K under the identity, T and
U, so any patch form repairs into a bounded triple.
"""

from fractions import Fraction

from boundedrep import base_point, certify_patch, measure_of, default_patch
from boundedrep.region import apply_map, k_functionals

P0 = base_point()
for name in ("Identity", "T", "U"):
    image = apply_map(name, P0)
    print(name, [str(x) for x in image], "functionals", [str(x) for x in k_functionals(image)])

for radius in (Fraction(1, 40), Fraction(1, 20), Fraction(1, 10)):
    report = certify_patch(radius)
    w = report.worst
    print(f"radius {radius}: passed={report.passed}, tightest ({w.map}, {w.functional}) "
          f"slack {w.slack:+.4f}")

# invariant measure of K (closed form 2 log 2) and of the patch
k = measure_of("K")
p = measure_of(default_patch())
print(f"mu(K) = {k.value:.10f} +- {k.abs_error_bound:.1e}")
print(f"mu(patch) = {p.value:.4e} +- {p.abs_error_bound:.1e}; ratio {p.value / k.value:.3e}")
