import random

import pytest

from twopro.elevator import (
    ElevatorExpr,
    equal_elevator,
    eval_elevator,
    expr_boundary,
    normalize_elevator,
    parse_elevator,
)
from twopro.errors import BoundaryMismatch, ElevatorSyntaxError, UnknownCell
from twopro.fixtures import chain_iso_host, iso_host
from twopro.twocat import validate_two_category

HOST = validate_two_category(chain_iso_host())
SMALL = validate_two_category(iso_host())


def test_parse_identity_column():
    e = parse_elevator("[id(f)]", SMALL)
    assert eval_elevator(e) == "if"


def test_parse_reports_position():
    with pytest.raises(ElevatorSyntaxError) as err:
        parse_elevator("[s |", SMALL)
    assert err.value.line == 1
    with pytest.raises(UnknownCell):
        parse_elevator("[nope]", SMALL)


def test_boundary_mismatch_between_columns():
    with pytest.raises(BoundaryMismatch):
        parse_elevator("[s | s]", SMALL)


def test_boundary_mismatch_between_rows():
    with pytest.raises(BoundaryMismatch):
        parse_elevator("[s] ; [s]", SMALL)


def test_single_row_horizontal_composite():
    e = parse_elevator("[t | s]", HOST)
    assert eval_elevator(e) == HOST.hcompose("t", "s")


def test_exchange_both_arrangements():
    left = parse_elevator("[t | id(f)] ; [id(k) | s]", HOST)
    right = parse_elevator("[id(h) | s] ; [t | id(g)]", HOST)
    both = parse_elevator("[t | s]", HOST)
    v = eval_elevator(both)
    assert eval_elevator(left) == v
    assert eval_elevator(right) == v
    verdict = equal_elevator(left, right)
    assert verdict["equal"]
    assert verdict["left_normal"] == verdict["right_normal"]


def test_vertical_composition_reads_top_down():
    e = parse_elevator("[s] ; [si]", SMALL)
    assert eval_elevator(e) == "if"
    e2 = parse_elevator("[si] ; [s]", SMALL)
    assert eval_elevator(e2) == "ig"


def test_normalize_is_idempotent_and_preserves_value():
    exprs = [
        "[t | s]",
        "[t | id(f)] ; [id(k) | s]",
        "[id(h) | s] ; [t | id(g)]",
        "[id(h) | id(f)] ; [t | s] ; [id(k) | id(g)]",
        "[s] ; [si] ; [s]",
    ]
    for text in exprs:
        e = parse_elevator(text, HOST if "t" in text else SMALL)
        n = normalize_elevator(e)
        assert eval_elevator(n) == eval_elevator(e)
        n2 = normalize_elevator(n)
        assert n2.render() == n.render()


def test_normal_form_is_left_greedy():
    # the left cell fires first when a row is split
    e = parse_elevator("[t | s]", HOST)
    n = normalize_elevator(e)
    assert n.render() == "[t | id(f)] ; [id(k) | s]"
    # a lower-left cell rides above an upper-right one
    e2 = parse_elevator("[id(h) | s] ; [t | id(g)]", HOST)
    n2 = normalize_elevator(e2)
    assert n2.render() == "[t | id(f)] ; [id(k) | s]"


def test_all_identity_expression_keeps_first_row():
    e = parse_elevator("[id(h) | id(f)] ; [id(h) | id(f)]", HOST)
    n = normalize_elevator(e)
    assert n.render() == "[id(h) | id(f)]"
    assert eval_elevator(n) == eval_elevator(e)


def test_unequal_parallel_cells():
    e1 = parse_elevator("[s]", SMALL)
    e2 = parse_elevator("[s] ; [si] ; [s]", SMALL)
    assert equal_elevator(e1, e2)["equal"]
    # distinct parallel cells in the chain host
    a = parse_elevator("[m_hf_hg]", HOST)
    b = parse_elevator("[m_hf_kg] ; [m_kg_hg]", HOST)
    assert equal_elevator(a, b)["equal"]


def test_boundary_mismatch_overall():
    e1 = parse_elevator("[s]", SMALL)
    e2 = parse_elevator("[si]", SMALL)
    with pytest.raises(BoundaryMismatch):
        equal_elevator(e1, e2)


def random_expression(rng, C, rows=3):
    """A random valid expression built by extending downward."""
    twos = sorted(C.two_cells)
    start = rng.choice(twos)
    grid = [[_cell_column(start)]]
    bottom = C.two_cells[start][1]
    for _ in range(rows - 1):
        # either whisker with identities or continue vertically
        nxt = [c for c in twos if C.two_cells[c][0] == bottom]
        if not nxt or rng.random() < 0.3:
            grid.append([_identity_column(bottom)])
        else:
            cell = rng.choice(nxt)
            grid.append([_cell_column(cell)])
            bottom = C.two_cells[cell][1]
    return ElevatorExpr(grid, C)


def _cell_column(name):
    from twopro.elevator import Column

    return Column(name, False)


def _identity_column(name):
    from twopro.elevator import Column

    return Column(name, True)


def test_randomized_normalization_preserves_evaluation():
    rng = random.Random(42)
    for C in (SMALL, HOST):
        for _ in range(50):
            e = random_expression(rng, C)
            n = normalize_elevator(e)
            assert eval_elevator(n) == eval_elevator(e)
            assert normalize_elevator(n).render() == n.render()


def test_random_composable_pairs_satisfy_exchange():
    rng = random.Random(7)
    pairs = [(bp, b) for bp in HOST.two_cells for b in HOST.two_cells
             if HOST.two_src_obj(bp) == HOST.two_tgt_obj(b)]
    for _ in range(100):
        bp, b = rng.choice(pairs)
        f, g = HOST.two_cells[b]
        fp, gp = HOST.two_cells[bp]
        one = ElevatorExpr([[_cell_column(bp), _identity_column(f)],
                            [_identity_column(gp), _cell_column(b)]], HOST)
        two = ElevatorExpr([[_identity_column(fp), _cell_column(b)],
                            [_cell_column(bp), _identity_column(g)]], HOST)
        both = ElevatorExpr([[_cell_column(bp), _cell_column(b)]], HOST)
        v = eval_elevator(both)
        assert eval_elevator(one) == v
        assert eval_elevator(two) == v
        assert equal_elevator(one, two)["equal"]
