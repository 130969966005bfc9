"""
Tangle Tests

Parsing, boundary validation, component tracing and the local rewrites.
"""

import pytest

from ribbon_invariants.domain.models import Direction, SliceKind
from ribbon_invariants.domain.tangle import (
    braid_closure,
    crossing_sign,
    homology_is_finite,
    insert_free_loop,
    insert_loop_pass,
    insert_reidemeister_ii,
    insert_reidemeister_iii,
    insert_s_move,
    insert_twist_pair,
    mirror,
    parse_braid_word,
    parse_tangle,
    render_tangle,
    strand_count,
    tangle_to_json,
    trace_components,
)
from ribbon_invariants.errors import TangleParseError, TangleValidationError
from tests.conftest import (
    A1,
    A2,
    TREFOIL_TEXT,
    UNKNOT_TEXT,
    create_sample_figure_eight,
    create_sample_strand,
    create_sample_trefoil,
    create_sample_unknot,
)


# ==========================================
# PARSING
# ==========================================


def test_parse_unknot():
    """Test comments, an empty bottom and a cup/cap pair"""
    tangle = parse_tangle(UNKNOT_TEXT)

    assert tangle.algebra == A1
    assert tangle.is_closed
    assert [s.kind for s in tangle.slices] == [SliceKind.CUP_CW, SliceKind.CAP_CW]
    assert tangle == create_sample_unknot()


def test_parse_trefoil_matches_braid_closure():
    """Test the trefoil file equals the closure of s1^3"""
    assert parse_tangle(TREFOIL_TEXT) == create_sample_trefoil()


def test_parse_open_tangle():
    """Test a bottom boundary propagates to the top"""
    tangle = parse_tangle("algebra A1\nbottom: [1;up] [2;down]\ncross_pos 0\n")

    assert not tangle.is_closed
    assert [s.label for s in tangle.top] == [(2,), (1,)]
    assert [s.direction for s in tangle.top] == [Direction.DOWN, Direction.UP]


@pytest.mark.parametrize(
    ("text", "line"),
    [
        ("cup_cw 0 [1]\n", 1),
        ("algebra A1\nwiggle 0\n", 2),
        ("algebra Q7\n", 1),
        ("algebra D2\n", 1),
        ("algebra A1\nalgebra A2\n", 2),
        ("algebra A1\ncup_cw x [1]\n", 2),
        ("algebra A1\ncup_cw 0\n", 2),
        ("algebra A1\ncross_pos 0 [1]\n", 2),
        ("algebra A1\ncup_cw 0 [1]\nbottom: [1;up]\n", 3),
        ("algebra A1\nbottom: [1;sideways]\n", 2),
        ("# only a comment\n", 1),
    ],
)
def test_parse_errors_carry_line(text, line):
    """Test syntax errors report the offending line"""
    with pytest.raises(TangleParseError) as exc_info:
        parse_tangle(text)
    assert exc_info.value.line == line
    assert str(exc_info.value).startswith(f"line {line}:")


@pytest.mark.parametrize(
    ("text", "index", "reason"),
    [
        ("algebra A1\ncup_cw 0 [1]\ncup_cw 0 [1]\ncap_cw 1\n", 2, "cap orientation violation"),
        ("algebra A1\ncup_cw 0 [1]\ncross_pos 1\n", 1, "boundary mismatch"),
        ("algebra A1\ncup_cw 2 [1]\n", 0, "boundary mismatch"),
        ("algebra A2\ncup_cw 0 [1]\n", 0, "has 1 entries"),
        ("algebra A1\ncup_cw 0 [-1]\n", 0, "not dominant"),
        (
            "algebra A1\ncup_cw 0 [1]\ncup_cw 0 [2]\ncross_pos 1\ncap_cw 1\n",
            3,
            "cap label mismatch",
        ),
    ],
)
def test_validation_errors_carry_slice(text, index, reason):
    """Test boundary errors report the offending slice"""
    with pytest.raises(TangleValidationError) as exc_info:
        parse_tangle(text)
    assert exc_info.value.slice_index == index
    assert reason in str(exc_info.value)


def test_render_round_trip():
    """Test render_tangle output parses back to the same tangle"""
    for tangle in (
        create_sample_figure_eight(2),
        create_sample_unknot(1, twists=-2, clockwise=False),
        parse_tangle("algebra A2\nbottom: [1,0;up] [0,1;down]\ncross_neg 0\ntwist_pos 1\n"),
    ):
        assert parse_tangle(render_tangle(tangle)) == tangle


def test_tangle_json():
    """Test the JSON form carries algebra and slices"""
    payload = tangle_to_json(create_sample_unknot())
    assert payload["algebra"] == {"series": "A", "rank": 1}
    assert payload["slices"][0] == {"kind": "cup_cw", "position": 0, "payload": [1]}


# ==========================================
# COMPONENTS
# ==========================================


def test_trefoil_components():
    """Test the trefoil is one component of writhe 3"""
    (component,) = trace_components(create_sample_trefoil()).components
    assert component.writhe == 3
    assert component.label == (1,)


def test_figure_eight_writhe_zero():
    """Test the figure-eight closure is one component of writhe 0"""
    data = trace_components(create_sample_figure_eight())
    assert len(data.components) == 1
    assert data.writhe == {0: 0}


def test_twists_count_toward_writhe():
    """Test twist slices add to the framing"""
    (component,) = trace_components(create_sample_unknot(twists=-3)).components
    assert component.writhe == -3


def test_hopf_link_components():
    """Test crossings between different components do not count as writhe"""
    hopf = braid_closure(A1, [1, 1], [(1,), (2,)])
    data = trace_components(hopf)

    assert len(data.components) == 2
    assert sorted(data.labels.values()) == [(1,), (2,)]
    assert set(data.writhe.values()) == {0}


def test_crossing_sign_follows_orientation():
    """Test a crossing between antiparallel strands flips its sign"""
    up = create_sample_strand(1, Direction.UP)
    down = create_sample_strand(1, Direction.DOWN)

    assert crossing_sign(SliceKind.CROSS_POS, up, up) == 1
    assert crossing_sign(SliceKind.CROSS_POS, up, down) == -1
    assert crossing_sign(SliceKind.CROSS_NEG, down, down) == -1
    assert crossing_sign(SliceKind.CROSS_NEG, down, up) == 1


def test_open_tangle_has_no_components():
    """Test tracing requires a closed tangle"""
    with pytest.raises(ValueError):
        trace_components(parse_tangle("algebra A1\nbottom: [1;up]\n"))


def test_homology_finiteness():
    """Test minuscule labels give finite homology"""
    assert homology_is_finite(create_sample_trefoil(1))
    assert not homology_is_finite(create_sample_unknot(2))
    assert homology_is_finite(create_sample_unknot(1, lie_type=A2))


# ==========================================
# CONSTRUCTORS AND REWRITES
# ==========================================


def test_braid_word_parsing():
    """Test spaces and commas both separate generators"""
    assert parse_braid_word("1 -2, 1,-2") == [1, -2, 1, -2]
    with pytest.raises(ValueError):
        parse_braid_word("1 x")


def test_braid_closure_rejects_bad_generators():
    """Test out-of-range and zero generators"""
    with pytest.raises(ValueError):
        braid_closure(A1, [2], [(1,), (1,)])
    with pytest.raises(ValueError):
        braid_closure(A1, [0], [(1,), (1,)])
    with pytest.raises(ValueError):
        braid_closure(A1, [], [])


def test_mirror_negates_writhe():
    """Test mirroring swaps crossings and twists"""
    tangle = insert_twist_pair(create_sample_trefoil(), 2, 0)
    mirrored = mirror(tangle)

    assert trace_components(mirrored).writhe == {0: -3}
    assert mirror(mirrored) == tangle


def test_moves_preserve_writhe_and_components():
    """Test each local move keeps components and framing"""
    base = create_sample_figure_eight()
    index = 4
    assert strand_count(base, index) == 6
    moved = [
        insert_reidemeister_ii(base, index, 1),
        insert_reidemeister_iii(base, index, 2),
        insert_s_move(base, index, 3, 0),
        insert_s_move(base, index, 4, 1),
        insert_twist_pair(base, index, 0),
    ]
    for tangle in moved:
        assert tangle.is_closed
        assert trace_components(tangle).writhe == trace_components(base).writhe


def test_s_move_on_down_strand():
    """Test zig-zags on a down strand use the counter-clockwise pieces"""
    base = create_sample_unknot()
    moved = insert_s_move(base, 1, 1, 0)
    assert moved.slices[1].kind is SliceKind.CUP_CCW
    assert len(moved.slices) == 4


def test_insert_out_of_range():
    """Test rewrites reject bad heights and positions"""
    base = create_sample_unknot()
    with pytest.raises(ValueError):
        insert_twist_pair(base, 5, 0)
    with pytest.raises(ValueError):
        insert_s_move(base, 0, 0)


def test_loop_pass_shape():
    """Test a loop pass crosses both legs of a fresh counterclockwise loop"""
    base = create_sample_unknot()
    moved = insert_loop_pass(base, 1, 0, (2,), positive=False)

    kinds = [s.kind for s in moved.slices[1:5]]
    assert kinds == [
        SliceKind.CUP_CCW,
        SliceKind.CROSS_NEG,
        SliceKind.CROSS_NEG,
        SliceKind.CAP_CCW,
    ]
    assert moved.slices[1].position == 1
    assert moved.slices[1].payload == (2,)
    assert moved.is_closed


@pytest.mark.parametrize("positive", [True, False])
def test_loop_pass_adds_unlinked_component(positive):
    """Test the passing strand keeps its writhe and the loop has none"""
    base = create_sample_trefoil()
    moved = insert_loop_pass(base, 2, 1, (1,), positive=positive)
    reference = insert_free_loop(base, 2, 1, (1,))

    assert trace_components(moved).writhe == {0: 3, 1: 0}
    assert trace_components(reference).writhe == {0: 3, 1: 0}
    assert len(moved.slices) == len(reference.slices) + 2


def test_loop_pass_out_of_range():
    """Test a loop pass needs a strand at the given position"""
    base = create_sample_unknot()
    with pytest.raises(ValueError):
        insert_loop_pass(base, 0, 0, (1,))
    with pytest.raises(ValueError):
        insert_loop_pass(base, 1, 2, (1,))
