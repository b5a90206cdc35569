"""Sweep a two-parameter family and fit each image's Hankel transform.

For inputs (1+ax)/(1+bx) the transform's Hankel sequence appears to follow
(1 - b(a+b)x) / (1 - 2(1+ab)x + (a+b)^2 x^2).  This script recomputes the
Hankel transform for every cell of a small grid, fits a rational generating
function to it, and compares the fit against the predicted formula.
"""

from riordan import (
    RationalGF,
    c_transform,
    expand_gf,
    fit_rational_gf,
    hankel_transform,
)


def main():
    order = 24
    grid = range(-3, 4)
    mismatches = 0
    for a in grid:
        for b in grid:
            image = c_transform(expand_gf(f"(1+({a})*x)/(1+({b})*x)", order))
            h = hankel_transform(image.int_prefix(2 * 10 - 1), 10)
            fitted = fit_rational_gf(h, 6, 7)
            predicted = RationalGF.from_fractions(
                [1, -b * (a + b)],
                [1, -2 * (1 + a * b), (a + b) ** 2],
            )
            ok = fitted.equivalent(predicted)
            mismatches += not ok
            flag = "ok " if ok else "BAD"
            print(f"  a={a:+d} b={b:+d}  {flag}  h = {h[:5]}...  "
                  f"fit = {fitted.to_text()}")
    total = len(grid) ** 2
    print(f"\n{total - mismatches}/{total} cells match the predicted "
          "Hankel generating function.")


if __name__ == "__main__":
    main()
