"""Run every verification suite, time it, and print a one-line summary per suite."""
import argparse
import time

from qatlas import cohomology as coh
from qatlas import suites


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--data-dir", default=None)
    ap.add_argument("--verbose", action="store_true", help="print failing checks")
    args = ap.parse_args()
    ts = coh.load_tables(args.data_dir)
    for name in suites.SUITES:
        t0 = time.perf_counter()
        checks = suites.run_suite(name, ts)
        dt = time.perf_counter() - t0
        bad = [c for c in checks if not c.passed]
        print(f"{name:12s} {len(checks) - len(bad):3d}/{len(checks):<3d} {dt:7.2f}s")
        if args.verbose:
            for c in bad:
                print(f"    {c.name}: expected {c.expected}, observed {c.observed}")


if __name__ == "__main__":
    main()
