"""Run the full finite re-verification suite and print every report.

Each check re-derives a finite fact the classification leans on: the
order-128 permutation group that no two elements generate, the six
closure-degree bound rows, the subdirect products of S3 x S3, the
normal-core index bound, the order-272 affine witness, the rank-4 orbit
trace, and the flagship classifier runs.
"""

from heavenly import run_all


def main():
    reports = run_all()
    for report in reports:
        state = "pass" if report.passed else "FAIL"
        print(f"{report.lemma:10s} {state}  ({report.elapsed_seconds:.2f}s)")
        for name, value in report.evidence:
            print(f"    {name} = {value}")
        for failure in report.failures:
            print(f"    FAIL: {failure}")
        print()
    passed = sum(r.passed for r in reports)
    print(f"{passed}/{len(reports)} checks passed")


if __name__ == "__main__":
    main()
