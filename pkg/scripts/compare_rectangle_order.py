"""Which nesting order of the rectangle exponentials reproduces the characters?

For each small mu and a few two-rectangle diagrams, evaluate both orders and
compare with the Jack character computed directly.
"""

from jackkernel.jack import jack_character_b
from jackkernel.stanley import coords_partition, evaluate_stanley, stanley_theta
from jackkernel.symfun import partitions

COORDS = [((3, 1), (1, 2)), ((2, 1), (2, 1)), ((4, 2), (1, 1))]


def main():
    for order in ("first_outer", "last_outer"):
        good = bad = 0
        for s, r in COORDS:
            lam = coords_partition(s, r)
            for n in range(1, 5):
                for mu in partitions(n):
                    ok = evaluate_stanley(stanley_theta(mu, 2, order), s, r) == jack_character_b(mu, lam)
                    good += ok
                    bad += not ok
        print(f"{order:12s} agree={good} disagree={bad}")


if __name__ == "__main__":
    main()
