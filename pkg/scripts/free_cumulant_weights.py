"""Check the composition weights for free cumulants against non-crossing partitions.

Falling factorials (n)_{l-1}/l! match; rising factorials do not.
"""

from fractions import Fraction
from math import factorial

from jackkernel.spectral import compositions_min2, moments_from_free_noncrossing

R = {k: Fraction(k * k - 3) for k in range(2, 10)}


def via(weight, L):
    out = [1]
    for n in range(1, L + 1):
        acc = Fraction(0)
        for comp in compositions_min2(n):
            term = Fraction(weight(n, len(comp) - 1), factorial(len(comp)))
            for k in comp:
                term *= R[k]
            acc += term
        out.append(acc)
    return out


def falling(n, m):
    out = 1
    for i in range(m):
        out *= n - i
    return out


def rising(n, m):
    out = 1
    for i in range(m):
        out *= n + i
    return out


def main():
    L = 9
    oracle = moments_from_free_noncrossing(R, L)
    print("falling matches:", via(falling, L) == oracle)
    print("rising matches: ", via(rising, L) == oracle)


if __name__ == "__main__":
    main()
