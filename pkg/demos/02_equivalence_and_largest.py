"""Explore a Markov equivalence class: pattern, members, and largest element.

Run with: python3 demos/02_equivalence_and_largest.py
"""

from chaingraphs import (
    arrow,
    build_graph,
    equivalence_class,
    is_larger,
    pattern_of,
    recover_largest,
    serialize_graph,
)


def main():
    g = build_graph("abcd", [arrow("b", "a"), arrow("b", "c"),
                             arrow("a", "d"), arrow("c", "d")])
    print("starting graph:")
    print(serialize_graph(g))

    pat = pattern_of(g)
    print("pattern (skeleton plus complex arrows):")
    print(serialize_graph(pat))

    cls = sorted(equivalence_class(g), key=serialize_graph)
    print(f"equivalence class has {len(cls)} members; arrow counts:",
          sorted(sum(1 for _ in h.arrows()) for h in cls))
    print()

    largest = recover_largest(pat)
    print("largest member (every other member keeps all of its arrows):")
    print(serialize_graph(largest))
    assert all(is_larger(h, largest) for h in cls)

    # the largest member is itself in the class, with the fewest arrows
    assert largest in cls
    print("members, lines first:")
    for h in sorted(cls, key=lambda x: -sum(1 for _ in x.lines())):
        marks = []
        if h == g:
            marks.append("start")
        if h == largest:
            marks.append("largest")
        suffix = f"   <- {', '.join(marks)}" if marks else ""
        line = "; ".join(f"{u}--{v}" for u, v in h.lines())
        arrows = "; ".join(f"{u}->{v}" for u, v in h.arrows())
        print(f"  [{line or '-'} | {arrows or '-'}]{suffix}")


if __name__ == "__main__":
    main()
