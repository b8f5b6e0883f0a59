"""
Removing heptads one at a time
==============================

Each removal deletes a heptad's surviving points and every line through
them.  Whatever the order, the structures pass through G_2(7), G_2(6), ...,
G_2(2) and end empty.
"""

from kleingrass import (
    QuadraticForm,
    build_collinearity_graph,
    external_lines,
    find_heptads,
    off_quadric_points,
    off_quadric_structure,
    removal_sequence,
)
from kleingrass.conwell import random_orders
from kleingrass.fixtures import NESTED

f = QuadraticForm.canonical()
s = off_quadric_structure(f)
heptads = find_heptads(build_collinearity_graph(off_quadric_points(f), external_lines(f)))

for step, row in zip(removal_sequence(s, heptads), NESTED):
    config = "empty" if step.is_empty else str(step.params)
    target = "" if step.grassmannian is None else "G_%d(%d)" % step.grassmannian
    print(f"{step.step}  {config:<14} {target:<8} {row.remark}".rstrip())

# the parameter trajectory does not depend on which heptads go first
for order in random_orders(8, 5, seed=1):
    steps = removal_sequence(s, heptads, order)
    print(order, [len(st.structure.points) for st in steps])
