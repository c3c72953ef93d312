"""Relaxing sand piles, step by step.

The classic rule: a column sheds one grain to its right neighbour when it
towers more than one level above it, and absorbs one from the left when
it sits more than one level below. Heights are exact integers, columns
extend infinitely in both directions, and grains are conserved.

Run:  python3 demos/01_sandpile_relaxation.py
"""

from sandlab import Configuration, apply, iterate, render_ascii, sum_grains, zoo

S = zoo.make("S")


def show(c, lo, hi, label):
    print(label)
    print(render_ascii(c, lo, hi))


def main():
    pile = Configuration.finite({0: 6})
    print(f"A pile of {sum_grains(pile)} grains dropped on one column:\n")
    c = pile
    for step in range(7):
        show(c, -5, 6, f"t = {step}   (grains: {sum_grains(c)})")
        nxt = apply(S, c)
        if nxt == c:
            print("fixed point reached: nothing towers over its neighbour\n")
            break
        c = nxt

    print("The same endpoint in one call:")
    final = iterate(S, pile, 50)
    show(final, -5, 6, "t = 50")
    assert final == c
    assert sum_grains(final) == 6

    print("A ridge next to a trench cancels in a single step:")
    ridge = Configuration.finite({0: 1, 1: -1})
    show(ridge, -3, 4, "before")
    show(apply(S, ridge), -3, 4, "after")

    print("Infinite columns are walls: they never change, and their")
    print("neighbours see them as maximal differences.")
    from sandlab import PLUS_INF

    walled = Configuration.finite({-2: PLUS_INF, 1: 3})
    show(walled, -4, 4, "before")
    show(iterate(S, walled, 4), -4, 4, "after 4 steps")


if __name__ == "__main__":
    main()
