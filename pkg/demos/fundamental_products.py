"""L-products computed through different superpermutation lifts agree."""

from superhopf import parse_index
from superhopf.checks import representatives
from superhopf.hopf import product_L

P = parse_index

alpha, beta = P("(2,.1)"), P("(1,.0)")
reference = product_L(alpha, beta)
print(f"L{alpha} * L{beta} =")
print(reference.to_text())
for I in representatives(alpha):
    for J in representatives(beta):
        same = product_L(alpha, beta, I, J) == reference
        print(f"  via Q[{I}] * Q[{J}]: {'same' if same else 'DIFFERENT'}")
