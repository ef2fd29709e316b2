import pytest

from bstar import (GF2, InfeasibleParameterError, UnknownSuiteError,
                   __version__, corpus, explore_question,
                   random_balanced_complex, random_pure_complex, run_suite)


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError):
        run_suite("no-such-suite")


def test_random_pure_complex_determinism():
    a = random_pure_complex(7, 6, 2, 5)
    b = random_pure_complex(7, 6, 2, 5)
    assert a == b
    c = random_pure_complex(8, 6, 2, 5)
    assert a != c
    assert a.is_pure and a.dim == 2 and len(a.facets) == 5


def test_random_pure_complex_full_skeleton():
    full = random_pure_complex(0, 5, 1, 10)
    assert len(full.faces_of_dim(1)) == 10  # the whole K_5 one-skeleton
    assert full.n_vertices == 5


def test_random_pure_complex_infeasible():
    with pytest.raises(InfeasibleParameterError):
        random_pure_complex(0, 4, 2, 5)
    with pytest.raises(InfeasibleParameterError):
        random_pure_complex(0, 3, 3, 1)
    with pytest.raises(InfeasibleParameterError):
        random_pure_complex(0, 4, 1, 0)


def test_random_balanced_complex_validates():
    for seed in range(10):
        cx, coloring = random_balanced_complex(seed)
        coloring.validate(cx)
        assert cx.is_pure
        assert cx.dim == coloring.d - 1
        assert cx.n_vertices <= 8


def test_suite_determinism_and_metadata():
    a = run_suite("stanley-hnums", seed=3)
    b = run_suite("stanley-hnums", seed=3)
    da, db = a.to_dict(), b.to_dict()
    da.pop("duration_s"), db.pop("duration_s")
    assert da == db
    assert a.version == __version__
    assert a.seed == 3
    assert "Q" in a.fields


def test_report_renderings_carry_same_verdicts():
    rep = run_suite("euler-corollary")
    text = rep.render_text()
    assert ("PASS" in text) == rep.passed
    for case in rep.cases:
        assert case.case_id in text
    assert [c.case_id for c in rep.cases] == \
        sorted(c.case_id for c in rep.cases)


def test_corpus_entries_are_usable():
    entries = corpus()
    ids = {e.cid for e in entries}
    assert {"octahedron", "rp2_min", "scps(12,4)", "P(3,3)"} <= ids
    for e in entries:
        assert not e.complex.is_void
        if e.coloring is not None:
            e.coloring.validate(e.complex)


def test_explorer_exhaustive_small_flag_case():
    rep = explore_question(2, 1, 2, n_max=5)
    assert rep.passed
    assert not rep.incomplete
    assert any("no_violation" in c.case_id for c in rep.cases)
    assert any("not resolved" in note for note in rep.notes)


def test_explorer_samples_when_too_large():
    rep = explore_question(2, 1, 2, n_max=8, sample_budget=5,
                           max_enumeration=1 << 10)
    assert rep.incomplete


def test_explorer_dimension_three():
    rep = explore_question(2, 2, 3, n_max=5)
    assert rep.passed and not rep.incomplete


def test_suite_field_override():
    rep = run_suite("rank-selection", fields=(GF2,))
    assert rep.fields == ("F2",)
    assert rep.passed


def test_explorer_exhaustive_six_vertex_graphs():
    # the flag (i = 1) graph case is fully enumerable through six vertices;
    # every 2-CM triangle-free graph satisfies the 4-cycle h-bound
    rep = explore_question(2, 1, 2, n_max=6)
    assert rep.passed and not rep.incomplete
    summary = [c for c in rep.cases if "no_violation" in c.case_id]
    assert summary and "checked=" in summary[0].case_id
