"""
Exact arithmetic on bigraded Hodge classes.

A :class:`HodgeClass` is a finitely supported table

    (n, p, q) -> m

where ``n`` is a cohomological degree, ``(p, q)`` a Hodge bidegree and ``m``
an integer multiplicity.  Tables with negative multiplicities are allowed;
they are the virtual elements of the Grothendieck group of graded pure Hodge
structures, and only compare via their multiplicities.

Conventions: an honest ``H^n`` of a smooth projective variety sits in weight
``n = p + q``.  The shift ``[-k]`` moves a class up ``k`` degrees, the Tate
twist ``(k)`` moves ``(p, q)`` to ``(p - k, q - k)``, and the combined
operator ``<k> = [-2k](-k)`` is :func:`angle`.

    >>> L = angle(1, POINT)
    >>> L
    HodgeClass({(2, 1, 1): 1})
    >>> numerics(POINT + L).betti
    {0: 1, 2: 1}
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping

from .errors import BadInput, VirtualInput, WeightParityError

FORMAT = "hodgeclass/v1"

Key = tuple[int, int, int]


class HodgeClass:
    """An immutable element of the Grothendieck group of bigraded classes.

    Entries are stored in canonical form: no zero multiplicity, keys sorted
    lexicographically in ``(n, p, q)``.  Every entry satisfies the weight
    parity condition ``p + q = n (mod 2)``.
    """

    __slots__ = ("_entries", "_table", "_hash")

    def __init__(self, entries: Mapping[Key, int] | None = None):
        clean = {}
        for key, m in (entries or {}).items():
            n, p, q = (int(x) for x in key)
            m = int(m)
            if m == 0:
                continue
            if (p + q - n) % 2:
                raise WeightParityError(
                    f"entry (n={n}, p={p}, q={q}) has p + q of the wrong parity"
                )
            clean[(n, p, q)] = m
        self._entries = tuple(sorted(clean.items()))
        self._table = dict(self._entries)
        self._hash = None

    # -- container protocol ---------------------------------------------------

    def items(self):
        return iter(self._entries)

    def keys(self):
        return [k for k, _ in self._entries]

    def __getitem__(self, key: Key) -> int:
        return self._table.get(tuple(key), 0)

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self.keys())

    def __bool__(self):
        return bool(self._entries)

    def as_dict(self) -> dict[Key, int]:
        return dict(self._table)

    def __eq__(self, other):
        if not isinstance(other, HodgeClass):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._entries)
        return self._hash

    def __repr__(self):
        return f"HodgeClass({dict(self._entries)!r})"

    # -- predicates -----------------------------------------------------------

    def is_effective(self) -> bool:
        return all(m >= 0 for _, m in self._entries)

    def weight_parity(self) -> bool:
        return all((p + q - n) % 2 == 0 for (n, p, q), _ in self._entries)

    def is_pure(self) -> bool:
        """True if every entry sits in weight equal to its degree."""
        return all(p + q == n for (n, p, q), _ in self._entries)

    def dimension(self) -> int:
        """Total (signed) dimension, i.e. the sum of all multiplicities."""
        return sum(m for _, m in self._entries)

    def degree_part(self, n: int) -> "HodgeClass":
        return HodgeClass({k: m for k, m in self._entries if k[0] == n})

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, HodgeClass):
            return NotImplemented
        return linear_combine([(1, self), (1, other)])

    def __sub__(self, other):
        if not isinstance(other, HodgeClass):
            return NotImplemented
        return linear_combine([(1, self), (-1, other)])

    def __neg__(self):
        return linear_combine([(-1, self)])

    def __mul__(self, other):
        if isinstance(other, HodgeClass):
            return tensor(self, other)
        if isinstance(other, int):
            return linear_combine([(other, self)])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return linear_combine([(other, self)])
        return NotImplemented


ZERO = HodgeClass()
POINT = HodgeClass({(0, 0, 0): 1})


def make_class(raw: Iterable[tuple[int, int, int, int]]) -> HodgeClass:
    """Build a class from ``(n, p, q, m)`` rows, summing duplicate keys."""
    acc: dict[Key, int] = defaultdict(int)
    for n, p, q, m in raw:
        acc[(n, p, q)] += m
    return HodgeClass(acc)


def linear_combine(terms: Iterable[tuple[int, HodgeClass]]) -> HodgeClass:
    acc: dict[Key, int] = defaultdict(int)
    for c, a in terms:
        if c == 0:
            continue
        for key, m in a.items():
            acc[key] += c * m
    return HodgeClass(acc)


def tensor(a: HodgeClass, b: HodgeClass) -> HodgeClass:
    """Kunneth product: degrees and bidegrees add, multiplicities multiply."""
    acc: dict[Key, int] = defaultdict(int)
    for (n1, p1, q1), m1 in a.items():
        for (n2, p2, q2), m2 in b.items():
            acc[(n1 + n2, p1 + p2, q1 + q2)] += m1 * m2
    return HodgeClass(acc)


def _remap(a: HodgeClass, f) -> HodgeClass:
    return HodgeClass({f(*key): m for key, m in a.items()})


def shift_up(k: int, a: HodgeClass) -> HodgeClass:
    """The shift ``[-k]``: raise every degree by ``k``."""
    if k < 0:
        raise BadInput(f"shift amount must be nonnegative, got {k}")
    return _remap(a, lambda n, p, q: (n + k, p, q))


def tate(k: int, a: HodgeClass) -> HodgeClass:
    """The Tate twist ``(k)``: ``(p, q) -> (p - k, q - k)`` at fixed degree."""
    return _remap(a, lambda n, p, q: (n, p - k, q - k))


def angle(k: int, a: HodgeClass) -> HodgeClass:
    """The operator ``<k> = [-2k](-k)``."""
    if k < 0:
        raise BadInput(f"angle index must be nonnegative, got {k}")
    return _remap(a, lambda n, p, q: (n + 2 * k, p + k, q + k))


def dual(a: HodgeClass) -> HodgeClass:
    return _remap(a, lambda n, p, q: (-n, -p, -q))


# -- super symmetric and exterior powers ---------------------------------------


def _super_power(k: int, a: HodgeClass, even_sym: bool) -> HodgeClass:
    # Per-cell coefficient polynomials in the power variable, then convolution.
    # A cell of m generators contributes C(m+i-1, i) (symmetric) or C(m, i)
    # (exterior) in tensor power i, placed at i times its trigrading.
    if k < 0:
        raise BadInput(f"power must be nonnegative, got {k}")
    if not a.is_effective():
        raise VirtualInput("super powers are only defined for effective classes")
    # state: power used -> partial class (as dict)
    state: dict[int, dict[Key, int]] = {0: {(0, 0, 0): 1}}
    for (n, p, q), m in a.items():
        symmetric = (n % 2 == 0) == even_sym
        new: dict[int, dict[Key, int]] = defaultdict(lambda: defaultdict(int))
        for used, partial in state.items():
            for i in range(k - used + 1):
                c = comb(m + i - 1, i) if symmetric else comb(m, i)
                if c == 0:
                    break
                target = new[used + i]
                for (n0, p0, q0), m0 in partial.items():
                    target[(n0 + i * n, p0 + i * p, q0 + i * q)] += c * m0
        state = new
    return HodgeClass(state.get(k, {}))


def super_sym(k: int, a: HodgeClass) -> HodgeClass:
    """Symmetric power with the Koszul sign rule.

    Odd-degree generators anticommute, so they enter through exterior
    powers; even-degree generators through symmetric powers.
    """
    return _super_power(k, a, even_sym=True)


def super_wedge(k: int, a: HodgeClass) -> HodgeClass:
    """Exterior power with the Koszul sign rule (roles of parities swapped)."""
    return _super_power(k, a, even_sym=False)


# -- numerical invariants ------------------------------------------------------


@dataclass(frozen=True)
class Numerics:
    betti: dict[int, int]
    euler: int
    e_polynomial: dict[tuple[int, int], int]

    def betti_vector(self, top: int | None = None) -> list[int]:
        """Betti numbers from degree 0 to ``top`` (default: highest degree)."""
        if top is None:
            top = max(self.betti, default=0)
        return [self.betti.get(n, 0) for n in range(top + 1)]


def numerics(a: HodgeClass) -> Numerics:
    betti: dict[int, int] = defaultdict(int)
    epoly: dict[tuple[int, int], int] = defaultdict(int)
    for (n, p, q), m in a.items():
        betti[n] += m
        epoly[(p, q)] += (-1) ** (n % 2) * m
    betti = {n: b for n, b in sorted(betti.items()) if b}
    euler = sum((-1) ** (n % 2) * b for n, b in betti.items())
    epoly = {k: v for k, v in sorted(epoly.items()) if v}
    return Numerics(betti, euler, epoly)


def hodge_numbers(a: HodgeClass) -> dict[tuple[int, int], int]:
    """``h^{p,q}`` summed over degrees; for a pure class this is the diamond."""
    out: dict[tuple[int, int], int] = defaultdict(int)
    for (_, p, q), m in a.items():
        out[(p, q)] += m
    return {k: v for k, v in sorted(out.items()) if v}


def symmetry_checks(a: HodgeClass, d: int) -> tuple[bool, bool]:
    """Return ``(poincare_ok, hodge_ok)`` for a class of complex dimension ``d``."""
    table = a.as_dict()
    poincare = all(
        table.get((2 * d - n, d - p, d - q), 0) == m for (n, p, q), m in table.items()
    )
    hodge = all(table.get((n, q, p), 0) == m for (n, p, q), m in table.items())
    return poincare, hodge


# -- serialization -------------------------------------------------------------


def to_json(a: HodgeClass) -> str:
    entries = [[n, p, q, m] for (n, p, q), m in a.items()]
    return json.dumps({"format": FORMAT, "entries": entries}, separators=(",", ":"))


def from_json(text: str | Mapping) -> HodgeClass:
    doc = json.loads(text) if isinstance(text, str) else text
    if not isinstance(doc, Mapping) or doc.get("format") != FORMAT:
        raise BadInput(f"not a {FORMAT} document")
    try:
        rows = [tuple(int(x) for x in row) for row in doc["entries"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise BadInput(f"malformed entries: {exc}") from None
    if any(len(row) != 4 for row in rows):
        raise BadInput("every entry must be [n, p, q, m]")
    return make_class(rows)
