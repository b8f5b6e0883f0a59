"""
Points and lines off the binary Klein quadric
=============================================

Evaluate x1 x2 + x3 x4 + x5 x6 on the 63 points of PG(5, 2), keep the 28
points where it is 1, and collect the 56 lines that miss the quadric.
"""

from collections import Counter

from kleingrass import (
    LineClass,
    QuadraticForm,
    all_lines,
    classify_line,
    enumerate_points,
    external_lines,
    measure_params,
    off_quadric_points,
    off_quadric_structure,
)

f = QuadraticForm.canonical()
points = enumerate_points()
off = off_quadric_points(f)
print(f"{len(points)} points, {len(off)} off the quadric, {len(points) - len(off)} on it")

# every line meets the quadric in 0, 1, 2 or 3 points
classes = Counter(classify_line(f, line) for line in all_lines())
for cls in LineClass:
    print(f"{cls.name:<16} {classes[cls]}")

ext = external_lines(f)
print(f"{len(ext)} external lines, e.g. {sorted(ext)[0]}")

# the external lines turn the 28 points into a configuration
print("parameters:", measure_params(off_quadric_structure(f)))
