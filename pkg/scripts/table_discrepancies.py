"""Show the disagreements between the ingested tables, with the arithmetic behind each."""
import argparse

from qatlas import cohomology as coh
from qatlas import octonions as octo


def ennead(ts) -> None:
    cons = ts.characters["ennead"].constituents
    table = ts["Sp6_level2"]
    print("ennead character:", " + ".join(cons))
    for i, row in enumerate(coh.ROWS):
        parts = [table.entry(i, c) for c in cons]
        print(f"  {row}: {' + '.join(map(str, parts))} = {sum(parts)}  (printed {ts.printed_poincare['ennead'].coeff(i)})")


def dimensions(ts) -> None:
    sp, s7 = ts["Sp6_level2"], ts["S7_level2"]
    for i, a, b in coh.dimension_pairs(ts):
        flag = "" if a == b else "   <-- differ"
        print(f"  dim H^{i}: Sp6 {a:6d}  S7 {b:6d}{flag}")
        if a != b:
            terms = [f"{sp.entry(i, c)}*{coh.irreducible_degree(c)}" for c in sp.cols if sp.entry(i, c)]
            print("    Sp6:", " + ".join(terms))
            terms = [f"{s7.entry(i, c)}*{coh.irreducible_degree(c)}" for c in s7.cols if s7.entry(i, c)]
            print("    S7: ", " + ".join(terms))


def octonion_cells() -> None:
    for x, y, got, want in octo.table_mismatches():
        rev = octo.printed_table()[y][x]
        print(f"  (e{x}, e{y}): printed {want}, generated {got}; printed transpose (e{y}, e{x}) is {rev}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--data-dir", default=None)
    args = ap.parse_args()
    ts = coh.load_tables(args.data_dir)
    print("ennead Poincare coefficients")
    ennead(ts)
    print("\nQ[2] dimensions from the two group tables")
    dimensions(ts)
    print("\noctonion table cells")
    octonion_cells()


if __name__ == "__main__":
    main()
