"""Compare the two sign conventions of Young's symmetrizer sum with J_lambda at alpha = 1."""

from jackkernel.jack import jack_polynomial, specialize_alpha, young_oracle
from jackkernel.symfun import partitions


def main():
    for n in range(1, 6):
        for lam in partitions(n):
            rep = young_oracle(lam, report=True)
            target = specialize_alpha(jack_polynomial(lam), 1)
            print(f"{str(list(lam)):18s} permutation sign: {rep.polynomial == target!s:5s} "
                  f"cycle sign: {rep.cycle_sign_polynomial == target}")


if __name__ == "__main__":
    main()
