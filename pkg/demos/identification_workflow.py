"""Identify a transformed sequence: expand, transform, analyze, look up.

Takes a generating function, applies the central transform and its inverse,
computes the Hankel transform of the image, fits a rational generating
function where one exists, and finally tries to identify the image prefix
against the local OEIS response cache (offline; a cache miss simply reports
the sequence as unidentified).
"""

from riordan import (
    FitError,
    c_inverse,
    c_transform,
    expand_gf,
    fit_rational_gf,
    hankel_transform,
    oeis_lookup,
)


def analyze(gf_text, order=24):
    print(f"\ninput generating function: {gf_text}")
    g = expand_gf(gf_text, order)
    print("  coefficients:", g.int_prefix(10))

    image = c_transform(g)
    print("  transform:   ", image.int_prefix(10))

    back = c_inverse(image)
    assert back == g
    print("  inverse transform recovers the input exactly")

    h = hankel_transform(image.int_prefix(19), 10)
    print("  Hankel:      ", h)
    try:
        fitted = fit_rational_gf(h, 6, 7)
        print("  Hankel GF:   ", fitted.to_text())
    except FitError:
        print("  Hankel GF:    no low-degree rational form found")

    result = oeis_lookup(image.int_prefix(6), mode="offline",
                         cache_dir="tests/fixtures")
    print("  lookup:      ", result.to_text().replace("\n", "; "))


def main():
    for gf_text in ("1/(1-x)", "(1-2*x)/(1-x)", "1/(1-2*x)"):
        analyze(gf_text)


if __name__ == "__main__":
    main()
