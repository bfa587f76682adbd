"""Products in the four noncommutative bases and in sQSym.

Run with ``python3 demos/products.py``.
"""

from superhopf import basis_element, parse_index

P = parse_index


def show(title, x):
    print(title)
    print(x.to_text())


# monomial basis: quasi-shuffles, signed by fermionic crossings
show("M[{1,2}|{0}] * M[{0,2}|{1,3}]", basis_element("Mnc", P("{1,2}|{0}")) * basis_element("Mnc", P("{0,2}|{1,3}")))

# Q-basis: super-shuffles only; two fermionic singletons anticommute
show("Q[{0,2}|{0,1,3}] * Q[{0,1,2}|{0}]", basis_element("Q", P("{0,2}|{0,1,3}")) * basis_element("Q", P("{0,1,2}|{0}")))
show("Q[{0}] * Q[{0}]", basis_element("Q", P("{0}")) * basis_element("Q", P("{0}")))

# symmetric part: indices are set superpartitions
show("m[{0}|{0,3}|{1,2}] * m[{0,2}|{1}]", basis_element("m", P("{0}|{0,3}|{1,2}")) * basis_element("m", P("{0,2}|{1}")))

# the superpermutation subalgebra
show("MonF[{1}] * MonF[{1}]", basis_element("MonF", P("{1}")) * basis_element("MonF", P("{1}")))

# commutative images
show("L(2,.1) * L(2)", basis_element("L", P("(2,.1)")) * basis_element("L", P("(2)")))
show("Mc(.0) * Mc(.0)", basis_element("Mc", P("(.0)")) * basis_element("Mc", P("(.0)")))
