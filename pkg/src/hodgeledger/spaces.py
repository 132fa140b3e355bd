"""
Cohomology tables of the standard spaces used in the OG6 computation.

Only the bigraded multiplicity tables are modelled.  ``J`` is a principally
polarized abelian surface, and ``H^*(J^v)`` is identified with ``H^*(J)``
through the polarization, so ``A = J^v x J`` has the table of ``J (x) J``.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from math import comb

from .errors import BadInput, DimensionGuard, UnknownName
from .hodge_core import POINT, HodgeClass, angle, linear_combine, tensor

MAX_ABELIAN_DIM = 8

#: the Lefschetz class Q[-2](-1)
L = angle(1, POINT)


@lru_cache(maxsize=None)
def abelian(g: int) -> HodgeClass:
    """Abelian variety of dimension ``g``: ``h^{p,q} = C(g,p) C(g,q)``."""
    if g < 0:
        raise BadInput(f"dimension must be nonnegative, got {g}")
    if g > MAX_ABELIAN_DIM:
        raise DimensionGuard(f"abelian({g}) exceeds the guard g <= {MAX_ABELIAN_DIM}")
    return HodgeClass(
        {
            (p + q, p, q): comb(g, p) * comb(g, q)
            for p in range(g + 1)
            for q in range(g + 1)
        }
    )


def parity_part(a: HodgeClass, which: str) -> HodgeClass:
    """Keep the even- or odd-degree entries of ``a``."""
    if which not in ("even", "odd"):
        raise BadInput(f"which must be 'even' or 'odd', got {which!r}")
    r = 0 if which == "even" else 1
    return HodgeClass({k: m for k, m in a.items() if k[0] % 2 == r})


def curve(g: int) -> HodgeClass:
    if g < 0:
        raise BadInput(f"genus must be nonnegative, got {g}")
    h1 = HodgeClass({(1, 1, 0): g, (1, 0, 1): g})
    return POINT + h1 + L


def projective(n: int) -> HodgeClass:
    if n < 0:
        raise BadInput(f"dimension must be nonnegative, got {n}")
    return linear_combine((1, angle(k, POINT)) for k in range(n + 1))


def classical_spaces(kind: str, n: int) -> HodgeClass:
    """Dispatch ``curve(g)`` / ``projective(n)`` by name."""
    if kind == "curve":
        return curve(n)
    if kind == "projective":
        return projective(n)
    raise UnknownName(f"unknown classical space {kind!r}")


def kummer_k3(j: HodgeClass) -> HodgeClass:
    """Kummer K3 of the abelian surface ``j``: ``H^ev(J) + 16 L``."""
    if j != abelian(2):
        raise BadInput("kummer_k3 expects the class of an abelian surface")
    return add_exceptional(parity_part(j, "even"), 16)


def add_exceptional(a: HodgeClass, k: int) -> HodgeClass:
    """Add ``k`` exceptional curves (blowing up ``k`` points of a surface)."""
    if k < 0:
        raise BadInput(f"number of exceptional curves must be nonnegative, got {k}")
    return linear_combine([(1, a), (k, L)])


class FixtureName(str, Enum):
    J = "J"
    A = "A"
    U = "U"
    W = "W"
    KummerK3 = "KummerK3"
    Z = "Z"
    Sigma = "Sigma"


def _build(name: FixtureName) -> HodgeClass:
    J = abelian(2)
    if name is FixtureName.J:
        return J
    if name is FixtureName.A:
        # A = J^v x J with H*(J^v) identified with H*(J)
        return tensor(J, J)
    if name is FixtureName.U:
        return parity_part(J, "even")
    if name is FixtureName.W:
        return parity_part(J, "odd")
    if name is FixtureName.Sigma:
        # singular locus of M, isomorphic to A/+-1; H^*(A/+-1) = H^ev(A)
        return parity_part(tensor(J, J), "even")
    if name is FixtureName.KummerK3:
        return kummer_k3(J)
    if name is FixtureName.Z:
        # double cover of the Kummer K3, blown up at eight points of the
        # Kummer surface of an isogenous J': H^ev(J) + 24 L
        return add_exceptional(parity_part(J, "even"), 24)
    raise UnknownName(f"unknown fixture {name!r}")  # pragma: no cover


_ALIASES = {"kummerk3": FixtureName.KummerK3, "kummer_k3": FixtureName.KummerK3}


@lru_cache(maxsize=None)
def fixture(name: str | FixtureName) -> HodgeClass:
    """Resolve one of the named fixtures ``J, A, U, W, KummerK3, Z, Sigma``."""
    if not isinstance(name, FixtureName):
        key = str(name)
        try:
            name = FixtureName(key)
        except ValueError:
            if key.lower() not in _ALIASES:
                raise UnknownName(f"unknown fixture {key!r}") from None
            name = _ALIASES[key.lower()]
    return _build(name)
