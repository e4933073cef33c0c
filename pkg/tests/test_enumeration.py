import json

import pytest

from gttrees.core import canonical_code
from gttrees.enumeration import (
    CLAIMS,
    EnumerationReport,
    check_tree,
    exhaustive_check,
    free_trees,
    otter_count,
    prufer_codes,
    prufer_decode,
    prufer_sequences,
    resolve_claims,
)
from gttrees.operations import gap_tree_tk

COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]


@pytest.mark.parametrize("n, count", list(enumerate(COUNTS, 1)))
def test_counts(n, count):
    assert sum(1 for _ in free_trees(n)) == count


@pytest.mark.parametrize("n", range(1, 10))
def test_matches_prufer(n):
    codes = [canonical_code(T) for T in free_trees(n)]
    assert len(set(codes)) == len(codes)
    assert set(codes) == prufer_codes(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_restricted_prufer_matches_full(n):
    assert prufer_codes(n, restricted=True) == prufer_codes(n, restricted=False)


def test_prufer_labeled_count():
    # Cayley: 4^2 labeled trees on 4 vertices, deduped to 2 shapes
    assert sum(1 for _ in prufer_sequences(4, restricted=False)) == 16
    assert len(prufer_codes(4, restricted=False)) == 2


def test_prufer_decode():
    assert prufer_decode((1, 2), 4).edges == ((0, 1), (1, 2), (2, 3))
    assert prufer_decode((0, 0), 4).edges == ((0, 1), (0, 2), (0, 3))


def test_stream_determinism():
    assert list(free_trees(10)) == list(free_trees(10))


def test_order_bounds():
    with pytest.raises(ValueError):
        next(free_trees(0))
    with pytest.raises(ValueError):
        next(free_trees(21))


def test_resolve_claims():
    assert resolve_claims("all") == CLAIMS
    assert resolve_claims("main") == ("recognizer_matches_oracle",)
    assert len(resolve_claims("lemmas,main")) == 4
    with pytest.raises(ValueError):
        resolve_claims("nonsense")


def test_check_tree_gap():
    out = check_tree(gap_tree_tk(1), CLAIMS)
    assert all(v is None for v in out.values())
    assert "primed_ops_preserve_equality" not in out  # gamma_t != tau


def test_report_n8():
    r = exhaustive_check(8, "all")
    assert r.passed
    assert r.orders[8].trees == 23
    assert r.orders[8].with_gtt_set < r.orders[8].gtt_trees <= r.orders[8].trees
    assert r.orders[4].with_gtt_set == 1


def test_containment_each_order():
    r = exhaustive_check(11, "dp_matches_oracle", n_min=4)
    for st in r.orders.values():
        assert st.with_gtt_set <= st.gtt_trees <= st.trees


def test_merge_order_independent():
    whole = exhaustive_check(8, "all", n_min=4)
    parts = [exhaustive_check(n, "all", n_min=n) for n in (8, 6, 4, 7, 5)]
    merged = EnumerationReport()
    for p in parts:
        merged.merge(p)
    assert merged.as_dict()["claims"] == whole.as_dict()["claims"]
    assert {n: (s.trees, s.gtt_trees, s.with_gtt_set) for n, s in merged.orders.items()} == \
        {n: (s.trees, s.gtt_trees, s.with_gtt_set) for n, s in whole.orders.items()}


def test_threads_same_result():
    a = exhaustive_check(8, "all", threads=1)
    b = exhaustive_check(8, "all", threads=2)
    assert a.as_dict()["claims"] == b.as_dict()["claims"]


def test_report_format():
    r = exhaustive_check(5, "main")
    text = r.format()
    assert "claim recognizer_matches_oracle checked 5 discrepancies 0" in text
    assert text.strip().endswith("passed true")
    json.dumps(r.as_dict())


def test_discrepancy_is_data(monkeypatch):
    import gttrees.enumeration as E
    monkeypatch.setattr(E, "gamma_t_tree", lambda T, root=0: 0)
    r = E.exhaustive_check(4, "dp_matches_oracle", n_min=4)
    assert not r.passed
    assert len(r.claims["dp_matches_oracle"].discrepancies) == 2


@pytest.mark.parametrize("n, count", list(enumerate(COUNTS, 1)))
def test_otter_count(n, count):
    assert otter_count(n) == count
