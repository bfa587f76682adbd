"""Checking formulas against brute-force polynomial expansions."""

from superhopf import parse_index
from superhopf.linear import Basis
from superhopf.oracle import (
    CMonomial,
    NCMonomial,
    check_invariance,
    expand,
    qs_action,
    std_and_I,
    verify_coproduct,
    verify_product,
)

P = parse_index

f = expand(Basis.M_nc, P("{2,4}|{0,1,5}|{0,3}"), 4)
print(f"M[{{2,4}}|{{0,1,5}}|{{0,3}}] in 4 variables has {len(f)} monomials:")
print(f.to_text())
print("quasisymmetric:", check_invariance(f, 3))

u = NCMonomial((2, 8), (7, 2, 7, 5, 9, 2, 5, 7))
std, I = std_and_I(u)
print(f"\n{u} standardizes to {std} with pattern {I}")

print(qs_action("commutative", [5, 3, 2], CMonomial((2, 5), ((3, 3), (4, 1), (5, 2), (7, 1)))))
print(qs_action("noncommutative", [4, 3, 6, 1], NCMonomial((2, 4), (3, 3, 2, 6, 3, 2, 6))))

# the engine's m-product agrees with multiplying the two expansions
print("\nm product matches expansions:", verify_product("m", P("{0}|{0,3}|{1,2}"), P("{0,2}|{1}"), 5))
print("MonF coproduct matches doubled alphabet:", verify_coproduct("MonF", P("{0,4}|{1}|{0,2,3}"), 3))
