#!/usr/bin/env python3
"""q,t generating series: finite polynomials and gap-truncated series.

For coprime rectangles the sum of q^area t^dinv over paths is a finite,
q<->t symmetric polynomial.  Over invariant subsets the sum of
q^gap t^dinv becomes an infinite series once gcd(N, M) > 1; for the
square case it matches the torus-link homology series of Elias and
Hogancamp term by term.
"""

from ratcat import (
    C_series,
    F_series,
    GridParams,
    QTPoly,
    bizley_count,
    count_equivalence_classes,
    fuss_catalan,
    qt_catalan,
    springer_poincare,
)


def main():
    for n, m in [(3, 2), (5, 3), (4, 3)]:
        poly = qt_catalan(GridParams(n, m, 1))
        print(f"c_({n},{m})(q,t) = {poly!r}   symmetric: {poly.is_qt_symmetric()}")
    print()

    series = C_series(GridParams(1, 1, 2), 8)
    print("C_(2,2)(q,t) through q^8:", repr(series.poly))
    print("  (this is t + q/(1-q) expanded)")
    print()

    one_minus_q = QTPoly({(0, 0): 1, (1, 0): -1})
    for n in (2, 3):
        c = C_series(GridParams(1, 1, n), 5)
        f = F_series(n, 5, restricted=True)
        print(f"C_({n},{n}) == restricted F_{n} through q^5:", c.agrees_with(f))
        full = F_series(n, 5)
        print(f"  (1-q) F_{n} == restricted F_{n}:",
              (one_minus_q * full.poly).truncate_q(5) == f.poly.truncate_q(5))
    print()

    print("Poincare polynomial of the (3,5) invariant-subspace variety:",
          repr(springer_poincare(3, 5)))
    print()

    print("path counts vs class counts vs Fuss-Catalan:")
    for (n, m, d, N, k) in [(1, 1, 2, 2, 1), (1, 2, 2, 2, 2), (1, 2, 3, 3, 2)]:
        print(f"  ({d*n},{d*m}): |Y| = {bizley_count(n, m, d)},"
              f" classes = {count_equivalence_classes(GridParams(n, m, d))},"
              f" c_{N}({k}) = {fuss_catalan(N, k)}")


if __name__ == "__main__":
    main()
