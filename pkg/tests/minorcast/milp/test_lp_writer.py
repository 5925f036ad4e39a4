import os
import tempfile

from minorcast.milp import Model, export_lp, write_lp_file


def test_empty_model():
    document = export_lp(Model("empty"))
    assert document == (
        "\\ Problem: empty\nMinimize\n obj: 0\nSubject To\nBinary\nEnd\n"
    )


def test_single_variable_model():
    model = Model("single")
    x0 = model.add_variable("x0")
    model.add([(1, x0)], lower=1, tag="demand")
    model.set_objective([(1, x0)])
    lines = export_lp(model).splitlines()
    assert "Minimize" in lines
    assert " obj: x0" in lines
    assert " demand_0: x0 >= 1" in lines
    assert lines[lines.index("Binary") + 1] == " x0"
    assert lines[-1] == "End"


def test_row_kinds_and_coefficients():
    model = Model("kinds")
    a, b, c = (model.add_variable(name) for name in ("a", "b", "c"))
    model.add([(1, a), (-2, b)], 0, 0, tag="eq")
    model.add([(-1, a), (3, c)], -1, 2, tag="range")
    model.add([(1, b), (1, c)], upper=1)
    model.set_objective([(2, a), (-1, c)], sense="maximize")
    lines = export_lp(model).splitlines()
    assert "Maximize" in lines
    assert " obj: 2 a - c" in lines
    assert " eq_0: a - 2 b = 0" in lines
    assert " range_1_lo: - a + 3 c >= -1" in lines
    assert " range_1_hi: - a + 3 c <= 2" in lines
    assert " c_2: b + c <= 1" in lines


def test_long_rows_wrap():
    model = Model("wide")
    xs = [model.add_variable(f"x{i}") for i in range(20)]
    model.add([(1, x) for x in xs], upper=3, tag="wide")
    document = export_lp(model)
    assert "\n    + x8" in document
    assert "\n    + x16" in document


def test_export_is_deterministic():
    def build():
        model = Model("det")
        xs = [model.add_variable(f"x{i}") for i in range(5)]
        model.add([(1, x) for x in xs], lower=2, tag="cover")
        model.set_objective([(i + 1, x) for i, x in enumerate(xs)])
        return model

    first, second = build(), build()
    assert export_lp(first) == export_lp(second)
    with tempfile.TemporaryDirectory() as tmp_dir:
        paths = [os.path.join(tmp_dir, name) for name in ("a.lp", "b.lp")]
        write_lp_file(first, paths[0])
        write_lp_file(second, paths[1])
        with open(paths[0], "rb") as f1, open(paths[1], "rb") as f2:
            assert f1.read() == f2.read()
