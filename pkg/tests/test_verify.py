import pytest

from arcphi import DomainError
from arcphi.verify import SUITES, _scan, run_suite


class TestScanPlumbing:
    def test_passing_stream(self):
        res = _scan("demo", 3, 0, iter([(0.5, {"a": 1}), (0.1, {"a": 2})]))
        assert res.passed
        assert res.checked == 2
        assert res.worst == pytest.approx(0.1)
        assert res.counterexample is None

    def test_captures_first_violation(self):
        items = [(0.5, {"i": 0}), (-0.2, {"i": 1}), (-0.9, {"i": 2})]
        res = _scan("demo", 3, 0, iter(items))
        assert not res.passed
        assert res.worst == pytest.approx(-0.9)
        assert res.counterexample == {"i": 1}

    def test_json_shape(self):
        res = _scan("demo", 1, 7, iter([(-1.0, {"bad": True})]))
        data = res.to_json_dict()
        assert data["passed"] is False
        assert data["counterexample"] == {"bad": True}
        assert data["seed"] == 7


class TestRunSuite:
    def test_unknown_suite(self):
        with pytest.raises(DomainError):
            run_suite("nope", 10, 0)

    @pytest.mark.parametrize("name", sorted(SUITES))
    def test_all_suites_pass_smoke(self, name):
        res = run_suite(name, 25, 0)
        assert res.passed, name
        assert res.checked > 0
