"""Run every verification suite at its default size and print timings."""

import argparse
import time

from jackkernel.suites import SUITES


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("names", nargs="*", default=sorted(SUITES))
    args = ap.parse_args()
    bad = 0
    for name in args.names:
        t0 = time.perf_counter()
        res = SUITES[name]()
        dt = time.perf_counter() - t0
        bad += not res.passed
        print(f"{name:12s} {'ok' if res.passed else 'FAIL':4s} {res.cases:5d} cases {dt:7.2f}s")
        for f in res.failures[:5]:
            print("    ", f)
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
