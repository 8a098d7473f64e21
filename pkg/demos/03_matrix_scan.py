"""Scan small integer matrices for hyperbolic monodromies.

For each hyperbolic matrix (|det| = 1, no eigenvalue of modulus one) the
scan records the dominant root modulus Lambda exactly as a quadratic surd
and the growth bound it implies.  The per-determinant summary shows why
the det = +1 and det = -1 classes behave differently: only det = +1
forces Lambda > 2.
"""

from groupgrowth import scan_hyperbolic

if __name__ == "__main__":
    report = scan_hyperbolic(3)
    print(f"hyperbolic matrices with |entries| <= 3: {len(report.rows)}")
    print()
    for summary in report.classes:
        print(f"det = {summary.det:+d}: {summary.count} matrices")
        print(f"    minimal Lambda = {summary.min_lambda.exact_str()}"
              f" = {float(summary.min_lambda):.6f}")
        print(f"    minimal growth bound = {summary.min_osin:.6f}")
        print(f"    witness matrix (a,b,c,d) = {summary.witness}")
        print(f"    any Lambda <= 2: {summary.lambda_le_2}")
        if summary.note:
            print(f"    note: {summary.note}")
        print()

    print("ten smallest Lambda values across both classes:")
    for row in sorted(report.rows, key=lambda r: float(r.lam))[:10]:
        print(f"    [{row.a:2d} {row.b:2d}; {row.c:2d} {row.d:2d}]  det={row.det:+d}"
              f"  Lambda={row.lam.exact_str():>14s}  bound={row.osin:.5f}")
