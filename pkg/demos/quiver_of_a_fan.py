"""Print the ice quiver with potential of the fan at P_1, with theta-lengths."""

import sys

from punctured.polygon import PolygonCtx
from punctured.quiver import build_ice_qp, check_potential_homogeneous
from punctured.triangulation import fan

n = int(sys.argv[1]) if len(sys.argv) > 1 else 4
qp = build_ice_qp(fan(PolygonCtx(n)))

print(f"fan, n = {n}: {len(qp.vertices)} vertices, {len(qp.arrows)} arrows")
for a in qp.arrows:
    print(f"  a{a.id:<2} {str(a.source):>8} -> {str(a.target):<8} theta {a.theta:>2}  {a.kind}")
print("potential:")
for t in qp.potential:
    print(f"  {'+' if t.sign > 0 else '-'} {' '.join(f'a{i}' for i in t.cycle):<22} theta {qp.term_theta(t)}")
print("homogeneous of theta-length 2n:", check_potential_homogeneous(qp))
