"""Bounded verification: what a desk-sized search can and cannot settle.

Injectivity and surjectivity questions for these automata are explored
by exhaustive search over bounded configuration classes. A found witness
is re-verified by direct application, so it is a proof; an exhausted
search is only evidence, scoped to its bounds. Nilpotency is different:
reaching the flat configuration within the step budget proves it for
that input, but not reaching it proves nothing, and the report says so.

Run:  python3 demos/05_bounded_verification.py
"""

from sandlab import (
    Configuration,
    check_injective_bounded,
    check_nilpotent_bounded,
    check_preimage_bounded,
    render_ascii,
    zoo,
)


def show_report(title, report):
    print(title)
    print(f"  verdict: {report.verdict}  (grade: {report.grade})")
    print(f"  bounds:  {report.bounds}")
    print(f"  note:    {report.evidence_note}")
    for w in report.witness_configurations():
        print(render_ascii(w, -4, 5))


def main():
    S, Sr, Y = zoo.make("S"), zoo.make("Sr"), zoo.make("Y")

    print("= Injectivity =")
    show_report(
        "sandpile rule over finite configurations (window 1, height 1):",
        check_injective_bounded(S, "F", 1, 1),
    )
    show_report(
        "mirror rule over finite configurations (window 2, height 2):",
        check_injective_bounded(Sr, "F", 2, 2),
    )

    print("= Surjectivity =")
    two = Configuration.finite({0: 2})
    show_report(
        "does a two-grain column have a finite pre-image under the mirror "
        "rule? (window 4, height 6):",
        check_preimage_bounded(Sr, two, "F", 4, 6),
    )
    show_report(
        "and under the sandpile rule? (window 2, height 3):",
        check_preimage_bounded(S, two, "F", 2, 3),
    )

    print("= Nilpotency =")
    show_report(
        "three grains under the sandpile rule, 100 steps:",
        check_nilpotent_bounded(S, Configuration.finite({0: 3}), 100),
    )
    show_report(
        "ridge and trench under the sandpile rule, 10 steps:",
        check_nilpotent_bounded(
            S, Configuration.finite({0: 1, 1: -1}), 10
        ),
    )

    print("= Scope of an exhausted search =")
    print("the sloped-witness rule has NO collision among finite or small")
    print("periodic configurations, yet it does collide on sloped ones:")
    show_report(
        "finite configurations (window 2, height 3):",
        check_injective_bounded(Y, "F", 2, 3),
    )
    a = Configuration.affine((0, 2), 1)
    b = Configuration.affine((0, 3), 1)
    from sandlab import apply, equals

    print("two staircase configurations with the same image:")
    print(render_ascii(a, -4, 6))
    print(render_ascii(b, -4, 6))
    assert equals(apply(Y, a), apply(Y, b))
    print("bounded searches are honest about their bounds.")


if __name__ == "__main__":
    main()
