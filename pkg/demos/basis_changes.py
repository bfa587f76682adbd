"""Moving between bases, and down to sQSym."""

from superhopf import basis_element, parse_index
from superhopf.hopf import abelianize, change_basis, symmetric_to_m

P = parse_index

m = basis_element("m", P("{0,2,4}|{0,3}|{1}"))
as_M = change_basis(m, "Mnc")
print("m[{0,2,4}|{0,3}|{1}] in the M basis:")
print(as_M.to_text())
print("and back:", symmetric_to_m(as_M))

print("\nMonF[{1}|{0,2}|{3}] in the Q basis:")
print(change_basis(basis_element("MonF", P("{1}|{0,2}|{3}")), "Q").to_text())

print("L(1,2,.0,1,.3,3) in the Mc basis:")
print(change_basis(basis_element("L", P("(1,2,.0,1,.3,3)")), "Mc").to_text())

# forgetting the order of variables
print("pi(M[{0}|{3,5}|{0,2,4}|{0,1}]) =", abelianize(basis_element("Mnc", P("{0}|{3,5}|{0,2,4}|{0,1}"))))
print("pi(Q[{1}|{2}|{0,3}]) =", abelianize(basis_element("Q", P("{1}|{2}|{0,3}"))))
