# Working with bigraded Hodge classes.
#
# A class is a finite table (n, p, q) -> multiplicity.  Multiplicities may be
# negative, which is how differences in the Grothendieck group are written.

from hodgeledger import POINT, angle, numerics, super_sym, super_wedge, tensor
from hodgeledger.render import render
from hodgeledger.spaces import L, abelian, fixture

# The cohomology of an abelian surface J, split into even and odd parts.

J = abelian(2)
U, W = fixture("U"), fixture("W")
print("J     ", render(J, "betti"))
print("U     ", render(U, "betti"))
print("W     ", render(W, "betti"))
print(render(J, "diamond"))


# Angle brackets shift and twist at once, so the Lefschetz class is Q<1>.

print(angle(1, POINT) == L, render(L, "json"))


# Super symmetric powers respect the Koszul sign rule: odd classes are
# antisymmetric under Sym and symmetric under wedge.

print("Sym^3 U  dim", super_sym(3, U).dimension(), "betti", render(super_sym(3, U), "betti"))
print("wedge^3 U dim", super_wedge(3, U).dimension())
print("Sym^2 H^1(J) = H^2(J):", super_sym(2, J.degree_part(1)) == J.degree_part(2))


# W (x) W shifted by <1> splits as wedge^3 U plus U<2>.

lhs = angle(1, tensor(W, W))
rhs = super_wedge(3, U) + angle(2, U)
print("W^2<1> == wedge^3 U + U<2>:", lhs == rhs)
print(render(lhs, "epoly"))


# Euler characteristics multiply under tensor products.

A = fixture("A")
print("euler(A) =", numerics(A).euler, " euler(U (x) U) =", numerics(tensor(U, U)).euler)
