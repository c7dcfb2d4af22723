"""Lift every triangulation to the graded category and check the tilting window."""

import sys
from collections import Counter

from punctured.graded import ar_shape, free_vertex, is_tilting_window, lift_triangulation
from punctured.polygon import PolygonCtx
from punctured.triangulation import enumerate_all, fan

n = int(sys.argv[1]) if len(sys.argv) > 1 else 4
print("AR shape:", ar_shape(n))
how = Counter()
for t in enumerate_all(PolygonCtx(n)):
    lift = lift_triangulation(t)
    assert is_tilting_window(lift), t
    how["free vertex" if free_vertex(t) else "puncture star"] += 1
print(f"n = {n}: all lifts tilting for k in [-4, 4];", dict(how))
print("fan lift:", ", ".join(map(str, lift_triangulation(fan(PolygonCtx(n))))))
