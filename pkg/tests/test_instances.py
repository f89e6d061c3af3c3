from tricover.instances import (bench_unit_instance, near_complete_hypergraphs, planted_instance,
                                random_graph, random_hypergraph, random_rects)


def test_seeds_reproduce():
    assert random_rects(5, 20) == random_rects(5, 20)
    assert planted_instance(7, True, True) == planted_instance(7, True, True)
    assert bench_unit_instance(50, 3) == bench_unit_instance(50, 3)
    assert random_graph(2, 6, weighted=True) == random_graph(2, 6, weighted=True)
    assert random_hypergraph(4) == random_hypergraph(4)
    assert random_rects(5, 20) != random_rects(6, 20)


def test_bench_squares_are_unit():
    P, R = bench_unit_instance(30)
    assert all(all(s.hi - s.lo == 1 for s in r.sides) for r in R)
    assert len(P) == len(R) == 30


def test_near_complete_count():
    assert sum(1 for _ in near_complete_hypergraphs()) == 1 + 20 + 190
