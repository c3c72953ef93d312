"""Can a sand rule be run backwards?

The mirror rule undoes one relaxation step: applying the sandpile rule
after the mirror restores any configuration. The other order fails,
because the sandpile rule loses information: two different inputs can
relax to the same output. This demo exhibits both facts concretely.

Run:  python3 demos/03_reversing_the_sandpile.py
"""

from sandlab import (
    Configuration,
    apply,
    equals,
    render_ascii,
    verify_right_inverse,
    zoo,
)

S = zoo.make("S")
Sr = zoo.make("Sr")


def main():
    print("Relax, then un-relax: the mirror rule as a right inverse.\n")
    c = Configuration.finite({0: 4, 3: -2})
    back = apply(S, apply(Sr, c))
    print("original:")
    print(render_ascii(c, -3, 6))
    print("after mirror, then sandpile:")
    print(render_ascii(back, -3, 6))
    assert equals(back, c)

    print("Checked on 500 seeded random configurations of every class:")
    report = verify_right_inverse(S, Sr, 500, 1)
    print(f"  verdict: {report.verdict} ({report.evidence_note})\n")

    print("The opposite order is NOT the identity. The search finds a")
    print("counterexample immediately:")
    report = verify_right_inverse(Sr, S, 500, 1)
    w = report.witness
    print(f"  verdict: {report.verdict}")
    print(f"  note:    {report.evidence_note}")
    print(render_ascii(w, -4, 5))

    print("Why it must fail: the sandpile rule maps two configurations to")
    print("the same place, so no post-processing can recover the input.")
    flat = Configuration.finite({})
    ridge = Configuration.finite({0: 1, 1: -1})
    print("these two both relax to the flat configuration:")
    print(render_ascii(flat, -2, 3))
    print(render_ascii(ridge, -2, 3))
    assert equals(apply(S, flat), apply(S, ridge))


if __name__ == "__main__":
    main()
