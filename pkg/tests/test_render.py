from goodsemi.points import Box
from goodsemi.render import render_grid
from goodsemi.rep import GoodSemigroup


def test_text_grid_one_branch():
    S = GoodSemigroup.numerical(2, 5)
    out = render_grid(S, Box((0,), (6,)), "text")
    lines = out.splitlines()
    assert lines[0] == " | * o * o * * *"
    assert lines[-1] == "   0 1 2 3 4 5 6"


def test_text_grid_two_branch_y_axis_up():
    S = GoodSemigroup.from_members([(0, 0), (3, 1)], (3, 1))
    out = render_grid(S, Box((0, 0), (4, 2)), "text")
    lines = out.splitlines()
    # top line is the highest y
    assert lines[0].startswith("2 |")
    assert lines[0] == "2 | o o o * *"
    assert lines[2] == "0 | * o o o o"


def test_render_deterministic():
    S = GoodSemigroup.numerical(4, 6, 11, 13)
    window = Box((0,), (14,))
    a = render_grid(S, window, "svg")
    b = render_grid(S, window, "svg")
    assert a == b
    assert a.startswith("<svg ") and a.rstrip().endswith("</svg>")
    # filled marker count equals the member count on the window
    assert a.count('fill="black"') == sum(
        1 for _ in S.members_within((0,), (14,))
    )


def test_svg_two_branch():
    S = GoodSemigroup.two_branch_diagonal(2)
    out = render_grid(S, Box((0, 0), (3, 3)), "svg")
    assert out.count("<circle") == 16
    assert out.count('fill="black"') == 6  # diagonal plus the visible cone


def test_listing_fallback_many_branches():
    S = GoodSemigroup.ambient(3)
    for fmt in ("text", "svg"):
        out = render_grid(S, Box((0, 0, 0), (1, 1, 1)), fmt)
        assert "0,0,0" in out and "1,1,1" in out


def test_matplotlib_figure(tmp_path):
    from goodsemi.plotting import save_figure

    S = GoodSemigroup.numerical(2, 7)
    path = tmp_path / "values.svg"
    save_figure(S, Box((0,), (8,)), path)
    body = path.read_text()
    assert body.lstrip().startswith("<?xml")
