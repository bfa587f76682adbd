"""Coproducts, the antipode, and the sign rule for tensors."""

from superhopf import basis_element, parse_index
from superhopf.hopf import antipode, coproduct, super_tensor_mul

P = parse_index

print("coproduct of m[{0,2,4}|{0,3}|{1}]")
print(coproduct(basis_element("m", P("{0,2,4}|{0,3}|{1}"))).to_text())

# MonF only splits at global descents
print("coproduct of MonF[{0,6}|{3}|{0,4,5}|{1}|{2}]")
print(coproduct(basis_element("MonF", P("{0,6}|{3}|{0,4,5}|{1}|{2}"))).to_text())

for text in ("{1}|{2}", "{0}", "{0,1}|{2}"):
    print(f"S(Q[{text}]) =", antipode(basis_element("Q", P(text))))

# (a # b)(c # d) = (-1)^{|b||c|} ac # bd
d = coproduct(basis_element("Q", P("{0}")))
print("\nD(Q[{0}]) * D(Q[{0}]) =", super_tensor_mul(d, d))
