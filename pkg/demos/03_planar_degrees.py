"""Local degrees of z -> z^m and z -> conj(z)^m, computed exactly and numerically.

The exact value comes from the signature of a bilinear form on the local
algebra. The numerical estimate counts preimages of small targets with
their orientation.
"""

from mixedindex.elindex import signed_degree
from mixedindex.generators import planar_realization
from mixedindex.oracle import estimate_degree

print(f"{'map':<18}{'dim':>5}{'exact':>7}{'numeric':>9}  confidence")
for m in (1, 2, 3, 4):
    for kind, label in (("power", f"z^{m}"), ("conjugatePower", f"conj(z)^{m}")):
        system = planar_realization(kind, m)
        exact = signed_degree(system)
        est = estimate_degree(system)
        print(f"{label:<18}{exact.dimension:>5}{exact.signed_degree:>7}"
              f"{est.estimate:>9}  {est.confidence}")

# The fold (x^2, y) has a two-dimensional local algebra but degree zero:
# nearby targets have either no preimage or two of opposite orientation.
fold = signed_degree(planar_realization("cusp"))
print("fold: dimension", fold.dimension, "degree", fold.signed_degree,
      "isotropic dimension", fold.i_max_dimension)
