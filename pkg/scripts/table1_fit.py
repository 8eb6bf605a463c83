"""Cleveland sewer table: model areas, both R^2 conventions, and the
closed-form Cleveland offset next to the tabulated one.

    python scripts/table1_fit.py [path/to/table.csv]
"""

import argparse

from eggcurve.inverse import (bundled_table_path, cleveland_params, evaluate_table, r_squared,
                              read_table)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("csv", nargs="?", default=str(bundled_table_path()))
    args = parser.parse_args()

    with open(args.csv, encoding="utf-8", newline="") as fh:
        records, warnings = read_table(fh)
    r2 = evaluate_table(records)

    print(f"{'No.':>4} {'L':>6} {'B':>6} {'w':>6} {'w_clev':>8} {'A':>7} {'model':>12} {'ref':>12} {'rel':>9}")
    for r in records:
        w_clev = cleveland_params(r.L, r.B).w
        ref = f"{r.reference:12.10g}" if r.reference else " " * 12
        dev = f"{abs(r.predicted - r.reference) / r.reference:9.1e}" if r.reference else ""
        print(f"{r.no or '':>4} {r.L:6.2f} {r.B:6.2f} {r.w:6.3f} {w_clev:8.4f} {r.observed:7.2f} "
              f"{r.predicted:12.10g} {ref} {dev}")
    swapped = r_squared([r.predicted for r in records], [r.observed for r in records])
    print(f"\nR^2 (observed = A column)    {r2:.7f}")
    print(f"R^2 (observed = model area)  {swapped:.7f}")
    if warnings:
        print(f"{len(warnings)} rows skipped")


if __name__ == "__main__":
    main()
