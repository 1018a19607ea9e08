"""Check the built-in example gadgets against the equation suites that
separate them: all four are linear monoids, but only some have a dagger
structure, and only the qubit pair is a complementary Hopf system."""
from __future__ import annotations

from ldckit import SUITES, check_suite, fixture_names, load_gadget

CHECKS = ["linear-monoid", "dagger-linear-monoid", "frobenius-coincidence",
          "linear-bialgebra", "complementary", "hopf"]


def main() -> None:
    header = f"{'gadget':12s}" + "".join(f"{name:>24s}" for name in CHECKS)
    print(header)
    for name in fixture_names():
        g = load_gadget(name)
        row = [f"{name:12s}"]
        for suite_name in CHECKS:
            suite = SUITES[suite_name]
            try:
                report = check_suite(g, suite, tol=1e-9)
            except Exception:
                row.append(f"{'n/a':>24s}")
                continue
            mark = "pass" if report.passed else f"fail {report.worst():.1e}"
            row.append(f"{mark:>24s}")
        print("".join(row))


if __name__ == "__main__":
    main()
