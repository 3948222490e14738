"""Smoke test for the brushkit extension module.

Build and install first:

    pip install maturin
    maturin build --release -m crates/py/Cargo.toml -o target/wheels
    pip install --force-reinstall target/wheels/brushkit-*.whl
    python python/smoke_test.py
"""

import json

import brushkit
from brushkit import Graph


def main():
    p5 = Graph.path(5)
    assert p5.n == 5 and p5.degrees() == [1, 2, 2, 2, 1]
    assert Graph.parse(p5.to_json()) == p5
    assert Graph.parse("3\n1 2\n2 3\n") == Graph.path(3)

    value, ordering, allocation = brushkit.brush_number(Graph.complete(4))
    assert value == 4 and sum(allocation.values()) == 4
    trace = brushkit.clean(Graph.complete(4), allocation, ordering)
    assert trace.cleaned
    assert brushkit.brush_number_permutations(Graph.cycle(5)) == 2

    j5 = brushkit.jaco(5)
    assert brushkit.jaco_arcs(5) == [(1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]
    out, inn, prime = brushkit.jaco_info(9)
    assert out == [1, 1, 2, 3, 3, 3, 2, 1, 0] and prime == 5
    assert [brushkit.formula_jaco(n) for n in range(2, 8)] == [1, 1, 1, 2, 3, 4]

    m = brushkit.mycielskian(brushkit.jaco(3))
    assert m.n == 7 and len(m.edges) == 9

    trace = brushkit.clean(Graph.path(3), {1: 1})
    assert trace.cleaned and trace.end == {3: 1}
    back = trace.reverse()
    assert back.cleaned and back.end == {1: 1}
    assert json.loads(trace.to_json())["outcome"] == "cleaned"
    assert not brushkit.clean(Graph.path(3), {2: 1}).cleaned
    assert brushkit.clean(Graph.star(3), {2: 1, 1: 1}, "exhaustive").cleaned

    centre = brushkit.brush_centre(j5)
    assert centre["b_r"] == 2 and centre["cardinality"] == 1
    assert [s["vertices"] for s in centre["supports"]] == [[4], [5]]

    rows = brushkit.compare_claims("thm22", 3)
    assert [(r["n"], r["formula"], r["oracle"]) for r in rows] == [(2, 2, 2), (3, 4, 3)]
    assert brushkit.theorem_31(7)["pass"]

    for bad in (lambda: Graph(2, [(1, 1)]), lambda: brushkit.clean(p5, {9: 1}), lambda: brushkit.compare_claims("x", 3)):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")
    try:
        brushkit.brush_number_permutations(Graph.path(12))
    except OverflowError:
        pass
    else:
        raise AssertionError("expected OverflowError")

    print("brushkit smoke test passed")


if __name__ == "__main__":
    main()
