import pytest

from src.brieskorn import (
    BrieskornCell,
    Family,
    LegendrianParams,
    StatusKind,
    cell_from_lr,
    certify_via_mixed_surgery,
    enumerate_cells,
    lr_params,
    render_triangle,
    status,
    to_records,
)
from src.fillability import FillLevel
from src.utils import InvalidParameter

ETA, XI = Family.ETA, Family.XI
TEN_CELLS = [(3, 0), (2, -1), (2, 1), (1, -2), (1, 0), (1, 2)]
TEN_CELLS += [(0, -3), (0, -1), (0, 1), (0, 3)]


def all_cells(max_n: int = 50):
    for family in Family:
        for n in range(family.min_n, max_n + 1):
            yield from enumerate_cells(family, n)


@pytest.mark.parametrize("family,n", [(ETA, 5), (XI, 4)])
def test_ten_cell_triangles(family, n):
    cells = enumerate_cells(family, n)
    assert [(c.i, c.j) for c in cells] == TEN_CELLS


def test_smallest_spheres():
    assert [(c.i, c.j) for c in enumerate_cells(ETA, 2)] == [(0, 0)]
    assert [(c.i, c.j) for c in enumerate_cells(XI, 1)] == [(0, 0)]
    with pytest.raises(InvalidParameter):
        enumerate_cells(ETA, 1)
    with pytest.raises(InvalidParameter):
        enumerate_cells(XI, 0)


@pytest.mark.parametrize("n", range(2, 51))
def test_counts(n):
    assert len(enumerate_cells(ETA, n)) == n * (n - 1) // 2
    assert len(enumerate_cells(XI, n)) == n * (n + 1) // 2


@pytest.mark.parametrize(
    "family,n,i,j",
    [(ETA, 5, 4, 0), (ETA, 5, 1, 1), (ETA, 5, 0, 5), (XI, 4, 1, 1), (XI, 4, -1, 0)],
)
def test_invalid_cells(family, n, i, j):
    with pytest.raises(InvalidParameter):
        BrieskornCell(family, n, i, j)


@pytest.mark.parametrize(
    "family,n,i,j,expected",
    [
        (ETA, 5, 1, 0, StatusKind.STRONG_NOT_LIOUVILLE),
        (ETA, 4, 1, 1, StatusKind.STEIN_FILLABLE),
        (ETA, 4, 1, -1, StatusKind.STEIN_FILLABLE),
        (ETA, 5, 3, 0, StatusKind.STRONG_NOT_LIOUVILLE),
        (ETA, 5, 2, 1, StatusKind.EDGE_CONJECTURED_STEIN),
        (ETA, 5, 0, -3, StatusKind.STEIN_FILLABLE),
        (ETA, 3, 1, 0, StatusKind.STRONG_NOT_LIOUVILLE),
        (XI, 4, 1, 0, StatusKind.STRONG_NOT_LIOUVILLE),
        (XI, 4, 2, 1, StatusKind.EDGE_CONJECTURED_STEIN),
        (XI, 4, 2, -1, StatusKind.EDGE_CONJECTURED_STEIN),
        (XI, 4, 3, 0, StatusKind.STRONG_NOT_LIOUVILLE),
        (XI, 6, 1, 2, StatusKind.STRONG_NOT_LIOUVILLE),
    ],
)
def test_status(family, n, i, j, expected):
    assert status(BrieskornCell(family, n, i, j)).kind is expected


def test_status_citations():
    cell_status = status(BrieskornCell(ETA, 4, 1, 1))
    assert [c.key for c in cell_status.citations] == [
        "eta-classification",
        "eta-four-stein",
    ]
    assert cell_status.citations[1].state == "announced"

    edge = status(BrieskornCell(XI, 4, 2, 1))
    assert edge.conjectural
    assert (edge.lower, edge.upper) == (FillLevel.STRONG, FillLevel.STEIN)
    assert edge.code == "C"


def test_status_partition():
    for cell in all_cells():
        cell_status = status(cell)
        assert isinstance(cell_status.kind, StatusKind)
        if cell.i == 0:
            assert cell_status.kind is StatusKind.STEIN_FILLABLE
        if cell.family is ETA and cell.i == cell.n - 3:
            # The band below the apex holds only edge cells
            assert abs(cell.j) == cell.span


def test_mixedness_equivalence():
    for cell in all_cells():
        assert lr_params(cell).mixed is (abs(cell.j) < cell.span)


def test_mixed_cells_are_not_liouville():
    for cell in all_cells():
        cell_status = status(cell)
        keys = [c.key for c in cell_status.citations]
        if cell.i > 0 and lr_params(cell).mixed:
            assert cell_status.kind is StatusKind.STRONG_NOT_LIOUVILLE
        if "inner-triangle" in keys:
            assert lr_params(cell).mixed


@pytest.mark.parametrize(
    "family,n,i,j,l,r,mixed",
    [
        (ETA, 5, 1, 0, 1, 1, True),
        (ETA, 5, 2, 1, 1, 0, False),
        (XI, 4, 1, 2, 2, 0, False),
        (XI, 4, 3, 0, 0, 0, False),
    ],
)
def test_lr_params(family, n, i, j, l, r, mixed):  # noqa: E741
    params = lr_params(BrieskornCell(family, n, i, j))
    assert params == LegendrianParams(l, r)
    assert params.mixed is mixed


def test_lr_round_trip():
    for cell in all_cells(20):
        assert cell_from_lr(cell.family, cell.i, lr_params(cell)) == cell
    for family in Family:
        for l in range(6):  # noqa: E741
            for r in range(6):
                params = LegendrianParams(l, r)
                assert lr_params(cell_from_lr(family, 2, params)) == params


def test_lr_params_rejects_negative():
    with pytest.raises(InvalidParameter):
        LegendrianParams(-1, 0)


def test_certify_via_mixed_surgery():
    for cell in all_cells(15):
        certified = certify_via_mixed_surgery(cell)
        if cell.i == 0 or not lr_params(cell).mixed:
            assert certified is None
            continue
        cell_status = status(cell)
        assert (certified.lower, certified.upper) == (
            cell_status.lower,
            cell_status.upper,
        )
        assert "weak-to-strong" in [c.key for c in certified.citations]


@pytest.mark.parametrize("family,n", [(ETA, 5), (XI, 4)])
def test_render_triangle(family, n):
    lines = render_triangle(family, n).splitlines()
    assert lines[0] == f"{family.value} n={n}"
    body = lines[1:-1]
    assert [len(line.split()) for line in body] == [1, 2, 3, 4]
    assert body[0].strip() == "(3,0)N"
    assert "S = SteinFillable" in lines[-1]

    # Rows are centered on the widest one
    assert body[0].startswith(" ")
    assert not body[-1].startswith(" ")


def test_render_triangle_labels():
    eta = render_triangle(ETA, 5)
    for label in ["(1,0)N", "(2,-1)C", "(2,1)C", "(1,-2)C", "(0,-3)S", "(0,3)S"]:
        assert label in eta
    xi = render_triangle(XI, 4)
    for label in ["(1,0)N", "(2,-1)C", "(1,2)C", "(0,1)S"]:
        assert label in xi


def test_render_smallest_triangle():
    lines = render_triangle(ETA, 2).splitlines()
    assert lines[1] == "(0,0)S"
    assert len(lines) == 3


def test_to_records():
    records = to_records(ETA, 5)
    assert len(records) == 10
    assert records[0] == {
        "family": "eta",
        "n": 5,
        "i": 3,
        "j": 0,
        "status": "StrongNotLiouville",
        "l": 0,
        "r": 0,
        "mixed": False,
        "citations": records[0]["citations"],
    }
    assert [c["key"] for c in records[0]["citations"]] == [
        "eta-classification",
        "eta-apex",
    ]
