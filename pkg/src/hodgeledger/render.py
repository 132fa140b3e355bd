"""Text renderers for Hodge classes.  Every format is byte-deterministic."""

from __future__ import annotations

from . import hodge_core as hc
from . import spaces

FORMATS = ("json", "diamond", "betti", "epoly", "tex")


def _degree_range(a: hc.HodgeClass) -> range:
    degrees = [n for n, _, _ in a.keys()]
    lo = min(0, min(degrees))
    return range(lo, max(degrees) + 1)


def render_betti(a: hc.HodgeClass) -> str:
    if not a:
        return "0"
    betti = hc.numerics(a).betti
    return " ".join(str(betti.get(n, 0)) for n in _degree_range(a))


def _grid(cells: dict[tuple[int, int], int], width: int | None = None) -> list[str]:
    ps = [p for p, _ in cells]
    qs = [q for _, q in cells]
    prange = range(max(ps), min(ps) - 1, -1)
    qrange = range(min(qs), max(qs) + 1)
    if width is None:
        width = max(len(str(v)) for v in [*cells.values(), *prange, *qrange, "p\\q"])
    rows = ["p\\q".rjust(width) + " | " + " ".join(f"{q:>{width}}" for q in qrange)]
    for p in prange:
        vals = " ".join(f"{cells.get((p, q), 0):>{width}}" for q in qrange)
        rows.append(f"{p:>{width}} | {vals}")
    return rows


def render_diamond(a: hc.HodgeClass) -> str:
    """One ``(p, q)`` grid per cohomological degree."""
    if not a:
        return "(empty)"
    out = []
    for n in sorted({k[0] for k in a.keys()}):
        part = {(p, q): m for (d, p, q), m in a.items() if d == n}
        out.append(f"H^{n}:")
        out.extend("  " + row for row in _grid(part))
    return "\n".join(out)


def render_epoly(a: hc.HodgeClass) -> str:
    """Signed table ``e(p, q) = sum_n (-1)^n m(n, p, q)``."""
    epoly = hc.numerics(a).e_polynomial
    if not epoly:
        return "(zero)"
    return "\n".join(_grid(epoly))


def render_tex(a: hc.HodgeClass) -> str:
    """LaTeX ``tabular`` laying out ``h^{p,q}`` (summed over degrees) as a diamond."""
    h = hc.hodge_numbers(a)
    if not h:
        return "\\begin{tabular}{c}\n$0$ \\\\\n\\end{tabular}"
    p0 = min(p for p, _ in h)
    q0 = min(q for _, q in h)
    d = max(max(p - p0, q - q0) for p, q in h)
    cols = 2 * d + 1
    lines = ["\\begin{tabular}{" + "c" * cols + "}"]
    for w in range(2 * d, -1, -1):
        row = [""] * cols
        for i in range(w + 1):
            p, q = w - i, i
            if p > d or q > d:
                continue
            row[d - p + q] = f"${h.get((p + p0, q + q0), 0)}$"
        lines.append(" & ".join(row) + " \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines)


def render(a: hc.HodgeClass, format: str = "json") -> str:
    if format == "json":
        return hc.to_json(a)
    if format == "betti":
        return render_betti(a)
    if format == "diamond":
        return render_diamond(a)
    if format == "epoly":
        return render_epoly(a)
    if format == "tex":
        return render_tex(a)
    raise ValueError(f"unknown format {format!r}; choose from {', '.join(FORMATS)}")


def _named():
    U, W = spaces.fixture("U"), spaces.fixture("W")
    return [
        ("Q", hc.POINT),
        ("U", U),
        ("W", W),
        ("H*(J)", spaces.fixture("J")),
        ("H*(A)", spaces.fixture("A")),
        ("U⊗U", hc.tensor(U, U)),
        ("U⊗W", hc.tensor(U, W)),
        ("W⊗W", hc.tensor(W, W)),
    ]


def describe(a: hc.HodgeClass) -> str:
    """Short name like ``U⟨2⟩`` or ``-3·Q⟨1⟩`` when ``a`` is a multiple of a
    shifted standard class; the canonical JSON otherwise."""
    if not a:
        return "0"
    lo = min(a.keys())
    for name, base in _named():
        blo = min(base.keys())
        shift2 = lo[0] - blo[0]
        if shift2 < 0 or shift2 % 2:
            continue
        k = shift2 // 2
        moved = hc.angle(k, base)
        c, rem = divmod(a[lo], moved[lo]) if moved[lo] else (0, 1)
        if rem or c == 0 or hc.linear_combine([(c, moved)]) != a:
            continue
        text = name + (f"⟨{k}⟩" if k else "")
        if c == 1:
            return text
        if c == -1:
            return "-" + text
        return f"{c}·{text}"
    return hc.to_json(a)
