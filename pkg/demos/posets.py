"""The posets behind the basis changes, printed as DOT.

Pipe a section into ``dot -Tpng`` to draw it.
"""

from superhopf import parse_index
from superhopf.combinat import alpha_of
from superhopf.posets import dotted_downset, fiber_bounds, mobius_weak, sc_upset, weak_interval

P = parse_index

down = dotted_downset(P("(1,2,.0,1,.3,3)"))
print(f"refinements of (1,2,.0,1,.3,3): {len(down)} elements")

up = sc_upset(P("{0}|{1}|{2}|{4}|{0,3}"))
print(up.to_dot("upset"))
for J in up.elements:
    print(f"  alpha({J}) = {alpha_of(J)}")

lo, hi = fiber_bounds(P("(1,.1,1)"))
hexagon = weak_interval(lo, hi)
print(hexagon.to_dot("fiber"))
for J in hexagon.elements:
    print(f"  mu({lo}, {J}) = {mobius_weak(lo, J)}")
