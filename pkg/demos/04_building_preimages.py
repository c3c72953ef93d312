"""Three ways to construct a pre-image or lift a witness.

1. For the left-drift rule, a pre-image of any infinity-free
   configuration can be written down directly, by undoing the +/-1 drift
   whose sign is governed by the nearest height variation to the right.
2. The crown construction turns a colliding pair of finite
   configurations into a colliding pair of periodic ones.
3. The splice construction cuts a periodic pre-image out of an arbitrary
   pre-image of a periodic target by matching local windows.

Run:  python3 demos/04_building_preimages.py
"""

from sandlab import (
    Configuration,
    Tail,
    apply,
    build_L_preimage,
    crown_lift,
    equals,
    periodic_splice,
    render_ascii,
    splice_match_indices,
    zoo,
)

S = zoo.make("S")
L = zoo.make("L")


def main():
    print("1. Explicit pre-image under the left-drift rule")
    step = Configuration.general(0, (), Tail((0,), 0), Tail((2,), 0))
    pre = build_L_preimage(step)
    print("target (a two-level step):")
    print(render_ascii(step, -4, 6))
    print("constructed pre-image (alternating tail, not finite, not periodic):")
    print(render_ascii(pre, -4, 6))
    assert equals(apply(L, pre), step)
    print("applying the rule to the pre-image reproduces the step exactly.\n")

    print("2. Crown: from a finite collision to a periodic collision")
    a = Configuration.finite({})
    b = Configuration.finite({0: 1, 1: -1})
    d1, d2 = crown_lift(a, b, S)
    print("the finite pair collides; its crown lift is the pair")
    print(render_ascii(d2, -6, 8))
    print("(period 5) versus the flat configuration, and still collides:")
    assert equals(apply(S, d1), apply(S, d2))
    print(f"  images equal: {equals(apply(S, d1), apply(S, d2))}\n")

    print("3. Splice: from any pre-image to a periodic pre-image")
    target = Configuration.finite({})  # 1-periodic
    k1, k2 = splice_match_indices(S, b, target, 1)
    print(f"scanning windows at period multiples: match at multiples {k1} and {k2}")
    spliced = periodic_splice(S, b, target, 1)
    print("splicing the block between the matches yields a periodic")
    print(f"pre-image of the flat target: {spliced.canonicalize()}")
    assert equals(apply(S, spliced), target)
    assert equals(spliced.shift(1), spliced)


if __name__ == "__main__":
    main()
