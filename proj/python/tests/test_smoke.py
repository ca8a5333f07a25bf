"""Smoke tests for the python module; run directly with python3."""

import lextor


def test_fixture():
    g = lextor.fixture_g10()
    assert g.n == 10
    assert g.m == 19
    assert g.neighbors(0) == [1]
    assert lextor.is_prime_bruteforce(g)


def test_orientation_verifies():
    g = lextor.fixture_g10()
    res = lextor.transitive_orientation(g, check_invariants=True)
    assert res["order"] == [0, 4, 5, 6, 7, 8, 2, 3, 9, 1]
    assert lextor.verify_transitive(g, res["edges"])
    assert res["counters"]["total"] > 0


def test_lbfs_matches_naive():
    g = lextor.random_poset_graph(9, 0.5, 12345)
    for start in range(g.n):
        assert lextor.lbfs_from(g, start) == lextor.naive_lbfs_from(g, start)


def test_analyze_partitions_edges():
    g = lextor.fixture_g10()
    info = lextor.analyze(g, 0)
    seen = set()
    for per_slice in info["active_edges"]:
        for u, v in per_slice:
            key = (min(u, v), max(u, v))
            assert key not in seen
            seen.add(key)
    assert len(seen) == g.m
    assert info["cocomponents"][3] == [[3], [4, 5, 6]]


def test_prime_instances_match_oracle():
    for i in range(20):
        g = lextor.random_prime_comparability(4 + i % 4, 0.5, 4242 + i)
        options = lextor.enumerate_transitive_orientations(g)
        if not options:
            continue
        assert len(options) == 2
        res = lextor.transitive_orientation(g)
        oriented = {tuple(e) for e in res["edges"]}
        assert any(oriented == {tuple(e) for e in cand} for cand in options)


def test_round_trip():
    g = lextor.path_graph(12)
    text = lextor.serialize_edge_list(g)
    back = lextor.parse_edge_list(text)
    assert back.n == g.n and back.m == g.m


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for fn in tests:
        fn()
        print(f"ok {fn.__name__}")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
