#!/usr/bin/env python3
"""Generate the classical degree-4 polynomial files in data/.

Each polynomial is (b1 + cos phi)^2 (b2 + cos phi)^2, which factors over the
unit circle as |p(z)|^2 / 16 with

    p(z) = (z^2 + 2 b1 z + 1)(z^2 + 2 b2 z + 1),

so the spectral factor is c = (1, 2(b1+b2), 2 + 4 b1 b2, 2(b1+b2), 1) and the
a-coefficients are its normalized autocorrelation.  de la Vallee Poussin's
(1 + cos phi)^2 is the single-factor degree-2 case.
"""
import os

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, "..", "data")

POLYS = {
    "poly2_dlvp": None,  # degree 2, (1 + cos)^2
    "poly4_westphal": (1.0, 0.25),
    "poly4_rosser_schoenfeld": (1.0, 0.3),
    "poly4_stechkin": (0.91, 0.28),
    "poly4_ford": (0.9, 0.225),
    "poly4_kadiri": (0.91, 0.265),
}


def autocorr(c):
    n = len(c) - 1
    a = [sum(x * x for x in c)]
    for k in range(1, n + 1):
        a.append(2.0 * sum(c[j] * c[j + k] for j in range(n - k + 1)))
    return a


def write_poly(name, c, note):
    a = autocorr(c)
    a = [x / a[0] for x in a]
    path = os.path.join(DATA, name + ".poly")
    with open(path, "w") as f:
        f.write("# %s\n" % note)
        f.write("n %d\n" % (len(c) - 1))
        for k, v in enumerate(c):
            f.write("c %d %.17g\n" % (k, v))
        for k, v in enumerate(a):
            f.write("a %d %.17g\n" % (k, v))
    print("wrote", path)


def main():
    os.makedirs(DATA, exist_ok=True)
    for name, b in POLYS.items():
        if b is None:
            write_poly(name, [1.0, 2.0, 1.0], "(1 + cos phi)^2")
        else:
            b1, b2 = b
            c = [1.0, 2.0 * (b1 + b2), 2.0 + 4.0 * b1 * b2, 2.0 * (b1 + b2), 1.0]
            write_poly(name, c, "(%g + cos phi)^2 (%g + cos phi)^2" % (b1, b2))


if __name__ == "__main__":
    main()
