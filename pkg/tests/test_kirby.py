"""Handle slides, cancellations, blow-ups, and the embedding replay."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plumb.exact import smith_invariant_factors
from plumb.graphs import SymIntMatrix
from plumb.kirby import FramedPresentation, embedding_presentation, replay_embedding


@st.composite
def presentations(draw, max_two=4, max_one=2):
    t = draw(st.integers(min_value=1, max_value=max_two))
    o = draw(st.integers(min_value=0, max_value=max_one))
    form = [[0] * t for _ in range(t)]
    for i in range(t):
        for j in range(i, t):
            form[i][j] = form[j][i] = draw(st.integers(min_value=-4, max_value=4))
    linking = tuple(
        tuple(draw(st.integers(min_value=-3, max_value=3)) for _ in range(o)) for _ in range(t)
    )
    return FramedPresentation(
        one_handles=tuple(f"x{u}" for u in range(o)),
        two_handles=tuple(f"a{i}" for i in range(t)),
        form=SymIntMatrix.from_rows(form),
        linking=linking,
    )


def nontrivial_factors(pres: FramedPresentation) -> list[int]:
    """Smith data of the full relation block, with unit factors dropped."""
    block = pres.block_matrix()
    if not block:
        return []
    return [d for d in smith_invariant_factors(block) if d != 1]


# -- construction -------------------------------------------------------------

def test_presentation_validates_dimensions():
    with pytest.raises(ValueError):
        FramedPresentation(("x",), ("a",), SymIntMatrix.from_rows([[1, 0], [0, 1]]), ((1,),))
    with pytest.raises(ValueError):
        FramedPresentation(("x",), ("a",), SymIntMatrix.from_rows([[1]]), ((1, 2),))


def test_embedding_presentation_examples():
    pres = embedding_presentation(3, 1)
    assert pres.one_handles == ("x",)
    assert pres.two_handles == ("a", "b")
    assert pres.form.entries == ((2, -1), (-1, 1))
    assert pres.linking == ((3,), (-1,))
    # whole diagram is simply connected for any (p, m)
    for p, m in [(2, 1), (3, 1), (5, -2), (7, 4)]:
        assert embedding_presentation(p, m).first_homology() == (0, ())
    with pytest.raises(ValueError):
        embedding_presentation(1, 1)


@pytest.mark.parametrize("p", [2, 3, 5, 11])
def test_ball_sub_presentation_has_cyclic_homology(p):
    pres = embedding_presentation(p, 3)
    ball = FramedPresentation(
        one_handles=pres.one_handles,
        two_handles=pres.two_handles[:1],
        form=SymIntMatrix.from_rows([[pres.form.entry(0, 0)]]),
        linking=pres.linking[:1],
    )
    assert ball.first_homology() == (0, (p,))
    assert ball.first_homology_order() == p


# -- slides ---------------------------------------------------------------------

def test_slide_framing_update_formula():
    # f(a) = p-1, f(b) = m, lk(a,b) = -1, c = p gives p^2 m - p - 1
    for p, m in [(2, 1), (3, 1), (4, 2), (5, -3)]:
        pres = embedding_presentation(p, m)
        slid = pres.slide(0, 1, p)
        assert slid.form.entry(0, 0) == p * p * m - p - 1
        assert slid.linking[0][0] == 0


def test_slide_rejects_self_slide():
    pres = embedding_presentation(3, 1)
    with pytest.raises(ValueError):
        pres.slide(0, 0, 1)


@settings(max_examples=80, deadline=None)
@given(presentations(), st.data())
def test_slide_inverse(pres, data):
    t = len(pres.two_handles)
    if t < 2:
        return
    i = data.draw(st.integers(0, t - 1))
    j = data.draw(st.integers(0, t - 1).filter(lambda x: x != i))
    c = data.draw(st.integers(-3, 3))
    assert pres.slide(i, j, c).slide(i, j, -c) == pres


@settings(max_examples=80, deadline=None)
@given(presentations(), st.data())
def test_slide_framing_identity_and_block_invariance(pres, data):
    t = len(pres.two_handles)
    if t < 2:
        return
    i = data.draw(st.integers(0, t - 1))
    j = data.draw(st.integers(0, t - 1).filter(lambda x: x != i))
    c = data.draw(st.integers(-3, 3))
    slid = pres.slide(i, j, c)
    # framing identity recomputed from the pre-slide matrix
    assert slid.form.entry(i, i) == (
        pres.form.entry(i, i) + c * c * pres.form.entry(j, j) + 2 * c * pres.form.entry(i, j)
    )
    # 1-handle linking transforms linearly
    for u in range(len(pres.one_handles)):
        assert slid.linking[i][u] == pres.linking[i][u] + c * pres.linking[j][u]
    # unimodular congruence: full Smith data of the block matrix is unchanged
    assert smith_invariant_factors(slid.block_matrix()) == smith_invariant_factors(pres.block_matrix())


# -- cancellations ----------------------------------------------------------------

def test_cancel_minimal_pair():
    single = FramedPresentation(("x",), ("b",), SymIntMatrix.from_rows([[7]]), ((1,),))
    empty = single.cancel(0, 0)
    assert empty.one_handles == () and empty.two_handles == ()
    assert empty.form.n == 0 and empty.linking == ()


def test_cancel_requires_unit_linking():
    pres = embedding_presentation(3, 1)
    with pytest.raises(ValueError):
        pres.cancel(0, 0)  # lk(a, x) = 3


def test_cancel_auto_clears_other_handles():
    pres = FramedPresentation(
        ("x",),
        ("a", "b"),
        SymIntMatrix.from_rows([[2, -1], [-1, 1]]),
        ((3,), (-1,)),
    )
    reduced = pres.cancel(1, 0)  # must first slide a over b three times
    assert reduced.one_handles == ()
    assert reduced.two_handles == ("a",)
    assert reduced.linking == ((),)
    assert nontrivial_factors(reduced) == nontrivial_factors(pres)


@settings(max_examples=80, deadline=None)
@given(presentations(max_two=3, max_one=2), st.data())
def test_cancel_preserves_homology_and_determinant(pres, data):
    pairs = [
        (i, u)
        for i in range(len(pres.two_handles))
        for u in range(len(pres.one_handles))
        if abs(pres.linking[i][u]) == 1
    ]
    if not pairs:
        return
    i, u = data.draw(st.sampled_from(pairs))
    reduced = pres.cancel(i, u)
    assert len(reduced.two_handles) == len(pres.two_handles) - 1
    assert len(reduced.one_handles) == len(pres.one_handles) - 1
    assert nontrivial_factors(reduced) == nontrivial_factors(pres)
    assert reduced.first_homology() == pres.first_homology()


# -- blow-ups ---------------------------------------------------------------------

def test_blow_up_then_down_is_identity():
    pres = embedding_presentation(3, 2)
    up = pres.blow_up(1)
    assert up.form.entry(2, 2) == 1
    assert up.blow_down(2) == pres
    down_other_sign = pres.blow_up(-1)
    assert down_other_sign.blow_down(2) == pres


def test_blow_down_requires_unit_framing():
    pres = embedding_presentation(3, 2)  # framings 2 and 2
    with pytest.raises(ValueError):
        pres.blow_down(0)


def test_blow_down_clears_linked_handles():
    pres = FramedPresentation(
        (),
        ("a", "e"),
        SymIntMatrix.from_rows([[-3, 1], [1, -1]]),
        ((), ()),
    )
    down = pres.blow_down(1)
    assert down.two_handles == ("a",)
    assert down.form.entries == ((-2,),)  # -3 + 1^2 * (-1) + 2 * 1 * 1


def test_blow_down_rejects_linked_dotted_circle():
    pres = FramedPresentation(
        ("x",),
        ("e",),
        SymIntMatrix.from_rows([[1]]),
        ((2,),),
    )
    with pytest.raises(ValueError):
        pres.blow_down(0)


def test_blow_up_changes_b2_and_signature_by_one():
    pres = embedding_presentation(2, 3)
    for sign in (1, -1):
        up = pres.blow_up(sign)
        assert len(up.two_handles) == len(pres.two_handles) + 1
        assert up.form.entry(2, 2) == sign


# -- the replay -------------------------------------------------------------------

@pytest.mark.parametrize("p,m,final", [(3, 1, 5), (2, 1, 1), (4, 2, 27)])
def test_replay_final_framing(p, m, final):
    report = replay_embedding(p, m)
    assert report.passed
    assert report.trace is not None and report.trace[-1]["F"] == [[final]]
    assert report.trace[-1]["L"] == [[]]


def test_replay_grid():
    from plumb.families import handlebody_model
    from plumb.graphs import invariants

    for p in range(2, 13):
        for m in range(-5, 6):
            report = replay_embedding(p, m)
            assert report.passed, (p, m)
            names = [c.name for c in report.checks]
            assert names == ["slide-unlinks", "framing-identity", "final-form"]
            # final determinant equals that of the handlebody's rank-one form
            final = report.trace[-1]["F"]
            model_form = handlebody_model(p, m).intersection_form()
            assert final == [list(r) for r in model_form.entries]
            assert invariants(model_form).determinant == final[0][0]


def test_replay_trace_shape():
    report = replay_embedding(5, -2)
    assert [t["move"] for t in report.trace] == ["slide", "cancel"]
    assert report.trace[0]["args"] == {"handle": "a", "over": "b", "coefficient": 5}
    assert report.trace[1]["args"] == {"handle": "b", "one_handle": "x"}
