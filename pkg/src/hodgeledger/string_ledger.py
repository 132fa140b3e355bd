"""
Top-degree stalk bookkeeping over the stratified base ``B = |2 theta|``.

The base carries seven strata (``S, N1, N2, N3, R1, R2, NR``).  Each summand
(string) of the decomposition of ``R m_* Q`` for the fibrations ``Mtilde``
and ``N`` contributes a known rank to the degree-6 stalk over each stratum,
possibly depending on the two undetermined skyscraper multiplicities ``r``
and ``r24``.  Summing these contributions gives ``rank R^6`` as an affine
integer expression, which must agree with the number of irreducible
components of the fibers.  Solving those equalities pins down the unknowns.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from importlib import resources
from itertools import product
from math import comb
from pathlib import Path
from typing import Any, Mapping

from .errors import FixtureInvalid, Inconsistent
from .report import VerificationReport, scalar_check

FORMAT = "ledger/v1"
ENV_VAR = "HODGELEDGER_FIXTURES"

STRATA = ("S", "N1", "N2", "N3", "R1", "R2", "NR")
STRATUM_DIMS = {"S": 3, "N1": 2, "N2": 1, "N3": 0, "R1": 2, "R2": 1, "NR": 0}
STRATUM_COUNTS = {"N3": 240, "NR": 16}
# a < closure(b)
POSET_EDGES = frozenset(
    {("NR", "R2"), ("R2", "R1"), ("R1", "S"), ("N3", "N2"), ("N2", "N1"), ("N1", "S"), ("NR", "N2")}
)
STRING_FIBRATIONS = ("Mtilde", "N")
TABLE_FIBRATIONS = ("Mtilde", "M", "N")
STRINGS = ("I_B", "IR_plus", "IR_minus", "INpq_plus", "INpq_minus", "Sky_NR")
# closed stratum each string is supported on
STRING_SUPPORT = {
    "I_B": "S",
    "IR_plus": "R1",
    "IR_minus": "R1",
    "INpq_plus": "N2",
    "INpq_minus": "N2",
    "Sky_NR": "NR",
}
UNKNOWNS = ("r", "r24")

# Points of Omega (the 16 polystable sheaves F + F) lying over each NR point;
# each contributes one quadric threefold to the fiber of Mtilde -> B.
OMEGA_POINTS_PER_NR = 16

# Expected invariant rank of R^6 over positive-dimensional strata where the
# monodromy on fiber components is known.
MONODROMY = {
    ("Mtilde", "R1"): (2, 2),
    ("Mtilde", "R2"): (2, 2),
    ("Mtilde", "N2"): (2, 2),
    ("N", "R1"): (2, 1),
    ("N", "R2"): (2, 1),
    ("N", "N2"): (2, 1),
}


@dataclass(frozen=True)
class LinearIntExpr:
    """``const + coeff_r * r + coeff_r24 * r24`` with integer coefficients."""

    const: int = 0
    coeff_r: int = 0
    coeff_r24: int = 0

    def __add__(self, other):
        if isinstance(other, int):
            other = LinearIntExpr(other)
        if not isinstance(other, LinearIntExpr):
            return NotImplemented
        return LinearIntExpr(
            self.const + other.const,
            self.coeff_r + other.coeff_r,
            self.coeff_r24 + other.coeff_r24,
        )

    __radd__ = __add__

    def __neg__(self):
        return LinearIntExpr(-self.const, -self.coeff_r, -self.coeff_r24)

    def __sub__(self, other):
        if isinstance(other, int):
            other = LinearIntExpr(other)
        return self + (-other)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return LinearIntExpr(self.const * k, self.coeff_r * k, self.coeff_r24 * k)

    __rmul__ = __mul__

    def is_constant(self) -> bool:
        return self.coeff_r == 0 and self.coeff_r24 == 0

    def evaluate(self, r: int, r24: int) -> int:
        return self.const + self.coeff_r * r + self.coeff_r24 * r24

    def linear_part(self) -> str:
        return _format_terms(0, self.coeff_r, self.coeff_r24, drop_zero_const=True)

    def __str__(self):
        return _format_terms(self.const, self.coeff_r, self.coeff_r24)

    @classmethod
    def from_dict(cls, doc: Mapping[str, Any]) -> "LinearIntExpr":
        return cls(int(doc.get("const", 0)), int(doc.get("r", 0)), int(doc.get("r24", 0)))

    def to_dict(self) -> dict:
        return {"const": self.const, "r": self.coeff_r, "r24": self.coeff_r24}


def _format_terms(const, a, b, drop_zero_const=False):
    parts = []
    if const or not (drop_zero_const or a or b):
        parts.append(str(const))
    for c, name in ((a, "r"), (b, "r24")):
        if c == 0:
            continue
        mag = abs(c)
        term = name if mag == 1 else f"{mag}*{name}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {term}")
    return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class Stratum:
    name: str
    dim: int
    count: int | None
    specializes_to: tuple[str, ...]


@dataclass(frozen=True)
class IncidenceData:
    lines_total: int
    lines_through_NR_point: int
    lines_through_N3_point: int
    N3_points_per_line: int = 6
    NR_points_per_line: int = 2


@dataclass(frozen=True)
class StalkEntry:
    rank: LinearIntExpr
    cite: str
    invariant: int | None = None


@dataclass(frozen=True)
class Ledger:
    strata: dict[str, Stratum]
    incidence: IncidenceData
    stalks: dict[tuple[str, str, str], StalkEntry]
    components: dict[tuple[str, str], int]
    source: str = "<memory>"
    closure: dict[str, frozenset[str]] = field(default_factory=dict, compare=False)

    def in_closure(self, stratum: str, of: str) -> bool:
        """True if ``stratum`` lies in the closure of stratum ``of``."""
        return of in self.closure[stratum]

    def lines_through(self, stratum: str) -> int:
        """Number of lines ``N_pq`` through a point of ``stratum``."""
        if stratum == "N2":
            return 1
        if stratum == "N3":
            return self.incidence.lines_through_N3_point
        if stratum == "NR":
            return self.incidence.lines_through_NR_point
        return 0

    def multiplicity(self, string: str, stratum: str) -> int:
        if not self.in_closure(stratum, STRING_SUPPORT[string]):
            return 0
        if string.startswith("INpq"):
            return self.lines_through(stratum)
        return 1

    def strings_of(self, fibration: str) -> list[str]:
        return [s for s in STRINGS if any(k[:2] == (fibration, s) for k in self.stalks)]


# -- loading -----------------------------------------------------------------


def _fail(msg: str):
    raise FixtureInvalid(msg)


def _int(value, what):
    if isinstance(value, bool) or not isinstance(value, int):
        _fail(f"{what} must be an integer, got {value!r}")
    return value


def _transitive_closure(edges) -> dict[str, frozenset[str]]:
    up: dict[str, set[str]] = {s: {s} for s in STRATA}
    changed = True
    while changed:
        changed = False
        for a, b in edges:
            new = up[b] - up[a]
            if new:
                up[a] |= new
                changed = True
    return {s: frozenset(v) for s, v in up.items()}


def _parse_strata(raw) -> dict[str, Stratum]:
    if not isinstance(raw, list):
        _fail("strata must be a list")
    strata: dict[str, Stratum] = {}
    for item in raw:
        if not isinstance(item, Mapping):
            _fail("every stratum must be an object")
        name = item.get("name")
        if name not in STRATUM_DIMS:
            _fail(f"unknown stratum {name!r}")
        if name in strata:
            _fail(f"duplicate stratum {name!r}")
        dim = _int(item.get("dim"), f"dim of {name}")
        if dim != STRATUM_DIMS[name]:
            _fail(f"stratum {name} must have dimension {STRATUM_DIMS[name]}, got {dim}")
        count = item.get("count")
        expected = STRATUM_COUNTS.get(name)
        if count != expected:
            _fail(f"stratum {name} must have count {expected}, got {count!r}")
        targets = tuple(item.get("specializes_to", ()))
        strata[name] = Stratum(name, dim, count, targets)
    missing = [s for s in STRATA if s not in strata]
    if missing:
        _fail(f"missing strata: {', '.join(missing)}")
    edges = set()
    for s in strata.values():
        for t in s.specializes_to:
            if t not in strata:
                _fail(f"stratum {s.name} specializes to unknown {t!r}")
            if strata[t].dim <= s.dim:
                _fail(f"edge {s.name} -> {t} does not increase dimension")
            edges.add((s.name, t))
    if _transitive_closure(edges) != _transitive_closure(POSET_EDGES):
        _fail("specialization edges do not form the stratification poset")
    return strata


def _parse_incidence(raw, strata) -> IncidenceData:
    if not isinstance(raw, Mapping):
        _fail("incidence must be an object")
    try:
        inc = IncidenceData(**{k: _int(v, k) for k, v in raw.items()})
    except TypeError as exc:
        _fail(f"bad incidence fields: {exc}")
    n_two_torsion = strata["NR"].count
    if inc.lines_total != comb(n_two_torsion, 2):
        _fail(f"lines_total must be C({n_two_torsion},2) = {comb(n_two_torsion, 2)}")
    if inc.lines_through_NR_point != comb(6, 2):
        _fail("lines_through_NR_point must be C(6,2) = 15")
    if inc.lines_through_N3_point != comb(3, 2):
        _fail("lines_through_N3_point must be 3")
    # double counting of (point, line) incidences
    if inc.lines_total * inc.N3_points_per_line != strata["N3"].count * inc.lines_through_N3_point:
        _fail("N3 point/line incidences do not double-count")
    if inc.lines_total * inc.NR_points_per_line != strata["NR"].count * inc.lines_through_NR_point:
        _fail("NR point/line incidences do not double-count")
    return inc


def _parse_stalks(raw, closure) -> dict[tuple[str, str, str], StalkEntry]:
    if not isinstance(raw, list):
        _fail("stalks must be a list")
    stalks: dict[tuple[str, str, str], StalkEntry] = {}
    for item in raw:
        if not isinstance(item, Mapping):
            _fail("every stalk entry must be an object")
        fib, string, stratum = item.get("fibration"), item.get("string"), item.get("stratum")
        if fib not in STRING_FIBRATIONS:
            _fail(f"stalk fibration must be one of {STRING_FIBRATIONS}, got {fib!r}")
        if string not in STRINGS:
            _fail(f"unknown string {string!r}")
        if stratum not in STRATUM_DIMS:
            _fail(f"unknown stratum {stratum!r} in stalk entry")
        key = (fib, string, stratum)
        if key in stalks:
            _fail(f"duplicate stalk entry {key}")
        cite = item.get("cite")
        if not isinstance(cite, str) or not cite.strip():
            _fail(f"stalk entry {key} lacks a citation")
        rank = item.get("rank")
        if not isinstance(rank, Mapping):
            _fail(f"stalk entry {key} lacks a rank")
        extra = set(rank) - {"const", *UNKNOWNS}
        if extra:
            _fail(f"stalk entry {key} introduces unknowns {sorted(extra)}; only r and r24 exist")
        for k, v in rank.items():
            _int(v, f"rank.{k} of {key}")
        expr = LinearIntExpr.from_dict(rank)
        if expr.const < 0:
            _fail(f"stalk entry {key} has a negative constant rank")
        if STRING_SUPPORT[string] not in closure[stratum]:
            _fail(f"string {string} is not supported over stratum {stratum}")
        inv = item.get("invariant")
        if inv is not None:
            _int(inv, f"invariant of {key}")
            if not expr.is_constant() or not 0 <= inv <= expr.const:
                _fail(f"invariant rank of {key} must lie between 0 and the stalk rank")
        stalks[key] = StalkEntry(expr, cite, inv)
    for fib in STRING_FIBRATIONS:
        for s in STRATA:
            if (fib, "I_B", s) not in stalks:
                _fail(f"missing I_B stalk for {fib} over {s}")
    return stalks


def _parse_components(raw) -> dict[tuple[str, str], int]:
    if not isinstance(raw, list):
        _fail("components must be a list")
    table: dict[tuple[str, str], int] = {}
    for item in raw:
        if not isinstance(item, Mapping):
            _fail("every component entry must be an object")
        fib, stratum = item.get("fibration"), item.get("stratum")
        if fib not in TABLE_FIBRATIONS:
            _fail(f"component fibration must be one of {TABLE_FIBRATIONS}, got {fib!r}")
        if stratum not in STRATUM_DIMS:
            _fail(f"unknown stratum {stratum!r} in component table")
        if (fib, stratum) in table:
            _fail(f"duplicate component entry {(fib, stratum)}")
        count = _int(item.get("count"), f"component count {fib}/{stratum}")
        if count < 1:
            _fail(f"component count {fib}/{stratum} must be positive")
        table[(fib, stratum)] = count
    missing = [f"{f}/{s}" for f in TABLE_FIBRATIONS for s in STRATA if (f, s) not in table]
    if missing:
        _fail(f"component table is missing {', '.join(missing)}")
    return table


def builtin_fixture_path() -> Path:
    return Path(str(resources.files("hodgeledger") / "data" / "ledger_v1.json"))


def default_fixture_path() -> Path:
    """The built-in fixture, unless ``HODGELEDGER_FIXTURES`` points elsewhere."""
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else builtin_fixture_path()


def load_ledger(source: str | os.PathLike | Mapping | None = None) -> Ledger:
    """Load and validate a ``ledger/v1`` document.

    ``source`` may be a parsed document, a path, or ``None`` for the default
    fixture.  Stratum data and incidences are checked exactly; stalks and
    component counts are checked for shape only, since their agreement is
    what :func:`solve_unknowns` and :func:`verify_component_table` test.
    """
    if source is None:
        source = default_fixture_path()
    if isinstance(source, Mapping):
        doc, origin = source, "<memory>"
    else:
        origin = str(source)
        try:
            with open(source, encoding="utf-8") as fh:
                doc = json.load(fh)
        except OSError as exc:
            raise FixtureInvalid(f"cannot read fixture {origin}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise FixtureInvalid(f"fixture {origin} is not valid JSON: {exc}") from None
    if not isinstance(doc, Mapping) or doc.get("format") != FORMAT:
        _fail(f"fixture format must be {FORMAT!r}")
    for key in ("strata", "incidence", "stalks", "components"):
        if key not in doc:
            _fail(f"fixture lacks {key!r}")
    strata = _parse_strata(doc["strata"])
    closure = _transitive_closure(POSET_EDGES)
    incidence = _parse_incidence(doc["incidence"], strata)
    stalks = _parse_stalks(doc["stalks"], closure)
    components = _parse_components(doc["components"])
    return Ledger(strata, incidence, stalks, components, origin, closure)


# -- queries -------------------------------------------------------------------


def r6_rank(ledger: Ledger, fibration: str, stratum: str) -> LinearIntExpr:
    """Degree-6 stalk rank over ``stratum`` summed over the strings of ``fibration``."""
    if fibration not in STRING_FIBRATIONS:
        raise ValueError(f"{fibration!r} is not a string target; use one of {STRING_FIBRATIONS}")
    total = LinearIntExpr()
    for (fib, string, s), entry in ledger.stalks.items():
        if fib == fibration and s == stratum:
            total = total + entry.rank * ledger.multiplicity(string, stratum)
    return total


def r6_invariant_rank(ledger: Ledger, fibration: str, stratum: str) -> LinearIntExpr:
    """Rank of the monodromy invariants of ``R^6`` over ``stratum``."""
    total = LinearIntExpr()
    for (fib, string, s), entry in ledger.stalks.items():
        if fib == fibration and s == stratum:
            part = entry.rank if entry.invariant is None else LinearIntExpr(entry.invariant)
            total = total + part * ledger.multiplicity(string, stratum)
    return total


def m_rank(ledger: Ledger, stratum: str) -> LinearIntExpr:
    """Components of the singular model ``M``, read off from ``Mtilde``.

    The resolution adds one exceptional component per component of the
    singular locus in the fiber (counted by the ``IR_plus`` stalk) and one
    quadric threefold per point of ``Omega`` over ``NR``.
    """
    expr = r6_rank(ledger, "Mtilde", stratum)
    plus = ledger.stalks.get(("Mtilde", "IR_plus", stratum))
    if plus is not None:
        expr = expr - plus.rank * ledger.multiplicity("IR_plus", stratum)
    if stratum == "NR":
        expr = expr - OMEGA_POINTS_PER_NR
    return expr


def cell_rank(ledger: Ledger, fibration: str, stratum: str) -> LinearIntExpr:
    if fibration == "M":
        return m_rank(ledger, stratum)
    return r6_rank(ledger, fibration, stratum)


def _cells():
    return [(f, s) for f in TABLE_FIBRATIONS for s in STRATA]


def _equations(ledger):
    # a*r + b*r24 = c for every cell
    out = []
    for f, s in _cells():
        expr = cell_rank(ledger, f, s)
        out.append(((f, s), expr.coeff_r, expr.coeff_r24, ledger.components[(f, s)] - expr.const))
    return out


def _explain(equations) -> str:
    for cell, a, b, c in equations:
        if a == 0 and b == 0 and c != 0:
            f, s = cell
            return f"{f}/{s}: computed rank differs from the table by {-c}"
    groups: dict[tuple[int, int], list[tuple[tuple[str, str], int]]] = {}
    for cell, a, b, c in equations:
        if a or b:
            groups.setdefault((a, b), []).append((cell, c))
    for (a, b), rows in groups.items():
        values = [c for _, c in rows]
        if len(set(values)) < 2:
            continue
        # blame the value shared by the fewest cells; contrast with a string target
        odd = min(set(values), key=lambda v: (values.count(v), v))
        cell, c = next(row for row in rows if row[1] == odd)
        others = [row for row in rows if row[1] != odd]
        others.sort(key=lambda row: row[0][0] not in STRING_FIBRATIONS)
        other, c0 = others[0]
        lin = LinearIntExpr(0, a, b).linear_part()
        return (
            f"{lin} = {c} from {cell[0]}/{cell[1]} contradicts "
            f"{other[0]}/{other[1]} ({lin} = {c0})"
        )
    return "no nonnegative integer solution"


def solve_unknowns(ledger: Ledger) -> frozenset[tuple[int, int]]:
    """All ``(r, r24)`` with ``r, r24 >= 0`` matching every component count."""
    equations = _equations(ledger)
    bounds = {}
    for idx, name in enumerate(UNKNOWNS):
        cands = [
            c // coeffs[idx]
            for _, *coeffs, c in equations
            if coeffs[idx] > 0 and min(coeffs) >= 0
        ]
        if not cands:
            raise FixtureInvalid(f"unknown {name} is not bounded by any component count")
        bounds[name] = max(min(cands), -1)
    solutions = frozenset(
        (r, r24)
        for r, r24 in product(range(bounds["r"] + 1), range(bounds["r24"] + 1))
        if all(a * r + b * r24 == c for _, a, b, c in equations)
    )
    if not solutions:
        raise Inconsistent(_explain(equations))
    return solutions


def verify_component_table(ledger: Ledger) -> VerificationReport:
    """Compare every computed rank with the table under ``r + r24 = 1``."""
    report = VerificationReport()
    on_constraint = [(0, 1), (1, 0)]
    for f, s in _cells():
        expr = cell_rank(ledger, f, s)
        table = ledger.components[(f, s)]
        values = sorted({expr.evaluate(r, r24) for r, r24 in on_constraint})
        lhs = values[0] if len(values) == 1 else str(expr)
        label = "components" if f == "M" else "rank R^6"
        report.add(scalar_check(f"components:{f}/{s}", lhs, table, note=f"{label} = {expr}"))
    for (f, s), (stalk, invariant) in MONODROMY.items():
        got = (
            r6_rank(ledger, f, s).evaluate(0, 1),
            r6_invariant_rank(ledger, f, s).evaluate(0, 1),
        )
        report.add(
            scalar_check(
                f"monodromy:{f}/{s}",
                list(got),
                [stalk, invariant],
                note=f"stalk rank {got[0]}, invariant rank {got[1]}",
            )
        )
    return report
