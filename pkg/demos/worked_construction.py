"""Walk through the matrix construction behind the central transform.

Starting from the all-ones sequence we build the associated triangular
arrays, extract their vertical and horizontal halves, and read the image
sequence (the Catalan numbers) off the central column -- then confirm the
closed-form route gives the same answer.
"""

from riordan import (
    PowerSeries,
    RiordanArray,
    c_transform,
    expand_gf,
    pascal,
)


def show(title, matrix):
    print(f"\n{title}")
    print(matrix.to_text())


def main():
    order = 14

    print("input sequence: 1, 1, 1, ... with generating function 1/(1-x)")
    appell = RiordanArray.from_gf("1-x", "x", order)
    product = pascal(order) * appell
    show("binomial array times (1-x, x):", product.matrix(8))

    central = [product.element(2 * n, n) for n in range(order // 2 + 1)]
    print("\ncentral elements t(2n, n):", central)

    vertical = product.vertical_half()
    horizontal = product.horizontal_half()
    show("vertical half:", vertical.matrix(7))
    show("horizontal half:", horizontal.matrix(7))

    quotient = vertical.inverse() * horizontal
    print("\nvertical-inverse times horizontal gives (1, F):")
    print("  g =", quotient.g.prefix(6))
    print("  f =", quotient.f.prefix(6), " (the series x/(1-x))")

    image = c_transform(expand_gf("1/(1-x)", order))
    print("\nclosed-form transform of 1/(1-x):", image.int_prefix(8))
    assert image.int_prefix(len(central)) == central
    print("matches the central column exactly.")


if __name__ == "__main__":
    main()
