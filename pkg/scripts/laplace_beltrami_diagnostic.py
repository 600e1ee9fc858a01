"""Compare (sqrt(alpha)/2) P L P^dagger with the Laplace-Beltrami operator on small inputs."""

from jackkernel.arith import SQRT
from jackkernel.cli import dumps
from jackkernel.jack import jack_polynomial
from jackkernel.spectral import ns_dalpha_diagnostic
from jackkernel.symfun import PSPoly, partitions


def main():
    inputs = [("p" + "".join(map(str, mu)) if mu else "1", PSPoly.p(mu, SQRT.one))
              for n in range(4) for mu in partitions(n)]
    inputs += [(f"J{''.join(map(str, lam))}", jack_polynomial(lam)) for lam in [(2,), (2, 1), (3, 1)]]
    for name, f in inputs:
        rep = ns_dalpha_diagnostic(f)
        print(f"{name:6s} difference = (alpha-1)/2 * Euler: {rep.matches_correction}")
        if not rep.matches_correction:
            print("   ", dumps(rep.difference))


if __name__ == "__main__":
    main()
