import math

import pytest

import incdfs


@pytest.mark.parametrize("algorithm", ["sdfs", "sdfs-int", "adfs1", "adfs2", "sdfs2", "sdfs3"])
def test_undirected_stream_stays_valid(algorithm):
    dfs = incdfs.Dfs(algorithm, 30, "undirected")
    for u, v in incdfs.gen_gnm(30, 200, seed=3):
        dfs.insert(u, v)
        assert dfs.is_valid()
    assert dfs.counters["insertions"] == 200
    assert dfs.algorithm == algorithm


@pytest.mark.parametrize("mode", ["directed", "dag"])
def test_fdfs_on_directed_input(mode):
    dfs = incdfs.Dfs("fdfs", 25, mode)
    edges = incdfs.gen_gnm(25, incdfs.max_edges(25, mode), seed=1, mode=mode)
    dfs.insert_batch(edges[:100])
    for u, v in edges[100:]:
        dfs.insert(u, v)
    assert dfs.is_valid()
    assert dfs.m == len(edges)


def test_invalid_input_raises_value_error():
    dfs = incdfs.Dfs("adfs1", 4)
    dfs.insert(1, 2)
    with pytest.raises(ValueError):
        dfs.insert(2, 1)
    with pytest.raises(ValueError):
        incdfs.Dfs("adfs1", 4, "directed")
    with pytest.raises(ValueError):
        incdfs.Dfs("nope", 4)


def test_tree_and_stick_of_a_complete_graph():
    n = 12
    dfs = incdfs.Dfs("adfs2", n)
    for u, v in incdfs.gen_gnm(n, incdfs.max_edges(n), seed=5):
        dfs.insert(u, v)
    tree = dfs.tree
    assert sorted(tree.depth[1:]) == list(range(1, n + 1))
    profile = incdfs.stick_profile(tree)
    assert profile.length == n - 1
    assert tree.is_ancestor(0, 5)


def test_analysis_helpers():
    slope, _, residual = incdfs.fit_exponent([(x, 7 * x**3) for x in (2.0, 4.0, 8.0, 16.0)])
    assert slope == pytest.approx(3.0)
    assert residual < 1e-9
    assert incdfs.predict_stick(100, 10) == 0
    # n0 >= 2 (ln n0 + 1) first holds at n0 = 6
    assert incdfs.predict_stick(1000, 250000) == 994
    star = incdfs.Dfs("sdfs", 6).tree
    assert incdfs.compute_pc(star, 0) == 1.0
    rows = incdfs.run_experiment("sdfs", 10)
    assert len(rows) == 45
    assert rows[-1]["cumulative"] == sum(r["delta"] for r in rows)


def test_streaming_scc_and_space():
    st = incdfs.StreamState(3, directed=True)
    for u, v in [(1, 2), (2, 3), (3, 1)]:
        st.stream_edge(u, v)
    assert st.scc_query() == [[1, 2, 3]]

    n = 150
    und = incdfs.StreamState(n)
    for u, v in incdfs.gen_gnm(n, incdfs.max_edges(n), seed=2):
        und.stream_edge(u, v)
    assert und.peak_retained <= 4 * n * math.log(n)
    with pytest.raises(RuntimeError):
        und.scc_query()
