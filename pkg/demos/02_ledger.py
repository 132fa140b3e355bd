# The stalk ledger over the stratified base B.
#
# Each (fibration, string, stratum) row carries the rank of the degree-6
# stalk as an affine expression in the two unknowns r and r24.  Summing the
# rows with their incidence multiplicities predicts the number of fiber
# components, which is then compared with the table.

from hodgeledger import string_ledger as sl

ledger = sl.load_ledger()
print("fixture:", ledger.source)

for name in sl.STRATA:
    s = ledger.strata[name]
    print(f"  {name:<3} dim {s.dim}  count {s.count}")


# Predicted ranks over each stratum.

for fib in sl.TABLE_FIBRATIONS:
    row = [str(sl.cell_rank(ledger, fib, s)) for s in sl.STRATA]
    print(f"{fib:<7}", " | ".join(row))


# The unknowns are pinned down to the line r + r24 = 1, and never further.

print("solutions (r, r24):", sorted(sl.solve_unknowns(ledger)))


# Perturbing a single cell makes the system inconsistent, and the hint
# names the pair of cells that disagree.

import copy, json

with open(sl.builtin_fixture_path(), encoding="utf-8") as fh:
    doc = json.load(fh)
bad = copy.deepcopy(doc)
for item in bad["components"]:
    if (item["fibration"], item["stratum"]) == ("Mtilde", "NR"):
        item["count"] = 35
try:
    sl.solve_unknowns(sl.load_ledger(bad))
except sl.Inconsistent as exc:
    print("perturbed:", exc)

print(sl.verify_component_table(ledger).to_text())
