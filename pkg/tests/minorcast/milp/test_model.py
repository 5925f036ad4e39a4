import pytest

from minorcast.exceptions import UnknownVariableError
from minorcast.milp import LinearConstraint, Model, merge_terms


@pytest.fixture
def two_var_model():
    model = Model("two")
    model.add_variable("x0")
    model.add_variable("x1")
    return model


def test_add_constraint(two_var_model):
    two_var_model.add_constraint(LinearConstraint.build([(1, 0), (1, 1)], upper=1))
    assert len(two_var_model.constraints) == 1
    assert two_var_model.is_feasible([1, 0])
    assert not two_var_model.is_feasible([1, 1])


def test_add_constraint_unknown_variable(two_var_model):
    with pytest.raises(UnknownVariableError):
        two_var_model.add_constraint(LinearConstraint.build([(1, 2)], upper=1))
    with pytest.raises(UnknownVariableError):
        two_var_model.add([(1, -1)], upper=1)
    with pytest.raises(UnknownVariableError):
        two_var_model.variable("x9")


def test_merge_terms(two_var_model):
    constraint = two_var_model.add([(2, 0), (-1, 0)], upper=0, tag="merged")
    assert constraint.terms == ((1, 0),)
    assert merge_terms([(1, 1), (-1, 1), (3, 0)]) == ((3, 0),)
    with pytest.raises(ValueError):
        merge_terms([(0.5, 0)])


def test_constraint_bounds():
    with pytest.raises(ValueError):
        LinearConstraint.build([(1, 0)], lower=2, upper=1)
    c = LinearConstraint.build([(1, 0), (-2, 1)], lower=-1, upper=0, tag="range")
    assert c.activity([1, 1]) == -1
    assert c.is_satisfied([1, 1])
    assert not c.is_satisfied([1, 0])
    assert c.variables == [0, 1]


def test_duplicate_variable(two_var_model):
    with pytest.raises(ValueError):
        two_var_model.add_variable("x0")
    assert two_var_model.variable("x1") == 1


def test_objective_and_tags(two_var_model):
    two_var_model.add([(1, 0)], lower=0, tag="a")
    two_var_model.add([(1, 1)], lower=0, tag="a")
    two_var_model.add([(1, 0), (1, 1)], upper=2, tag="b")
    assert two_var_model.tag_counts() == {"a": 2, "b": 1}
    assert two_var_model.objective_value([1, 1]) == 0
    two_var_model.set_objective([(3, 0), (1, 1)])
    assert two_var_model.objective_value([1, 1]) == 4
    with pytest.raises(ValueError):
        two_var_model.set_objective([(1, 0)], sense="sideways")
    two_var_model.clear_objective()
    assert two_var_model.objective is None


def test_violated_constraints(two_var_model):
    two_var_model.add([(1, 0)], lower=1)
    two_var_model.add([(1, 1)], upper=0)
    assert two_var_model.violated_constraints([0, 1]) == [0, 1]
    assert not two_var_model.is_feasible([1, 2])
    with pytest.raises(ValueError):
        two_var_model.violated_constraints([1])


def test_copy_is_independent(two_var_model):
    two_var_model.add([(1, 0)], lower=1)
    clone = two_var_model.copy()
    clone.add([(1, 1)], lower=1)
    assert len(two_var_model.constraints) == 1
    assert len(clone.constraints) == 2
