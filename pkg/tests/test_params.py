import pytest

from signed_ste.params import (AdmissibleTriple, admissible_triples, classify,
                               feasible_orders, is_admissible, table1)
from signed_ste.qext import QExt


class TestAdmissible:
    def test_k6(self):
        assert [t.as_tuple() for t in admissible_triples(6)] == [
            (5, 6, -1), (1, 3, -2), (0, QExt.sqrt(6), -QExt.sqrt(6)), (-1, 2, -3), (-5, 1, -6)]

    @pytest.mark.parametrize("k", range(1, 30))
    def test_product_and_sum(self, k):
        for tr in admissible_triples(k):
            assert tr.lambda1 * tr.lambda2 == -k
            assert tr.lambda1 + tr.lambda2 == tr.t
            assert float(tr.lambda1) > float(tr.lambda2)

    @pytest.mark.parametrize("k", range(1, 30))
    def test_closed_under_negation(self, k):
        ts = {tr.t for tr in admissible_triples(k)}
        assert ts == {-t for t in ts}

    def test_bounds(self):
        assert not is_admissible(5, 5)
        assert is_admissible(5, 4)
        assert not is_admissible(5, 1)

    def test_invalid_k(self):
        with pytest.raises(ValueError):
            admissible_triples(0)

    def test_str(self):
        assert str(AdmissibleTriple(8, 0)) == "(0, 2*√2, -2*√2)"


class TestClassify:
    @pytest.mark.parametrize("k, t, tag", [
        (6, 5, "Type1"), (6, -5, "Type1"),
        (6, 1, "Type2"), (8, -2, "Type2"), (10, 3, "Type2"),
        (7, 0, "Type3"), (9, 0, "Type3"),
        (6, -1, "Type2"),
    ])
    def test_tags(self, k, t, tag):
        assert classify(AdmissibleTriple(k, t)) == tag

    def test_other(self):
        # k = 12, t = 1 gives eigenvalues 4 and -3
        assert classify(AdmissibleTriple(12, 1)) == "Other"


class TestReferenceTable:
    def test_matches_enumeration(self):
        ref = table1()
        for k in range(5, 11):
            assert [t.as_tuple() for t in admissible_triples(k)] == ref[k]

    def test_count(self):
        assert sum(len(v) for v in table1().values()) == 24


class TestFeasibleOrders:
    def test_line_graph_family(self):
        # (1, 3, -2) at k = 6: n must be a multiple of 5
        assert feasible_orders(AdmissibleTriple(6, 1), 30) == [5, 10, 15, 20, 25, 30]

    def test_t_zero_even(self):
        assert feasible_orders(AdmissibleTriple(5, 0), 12) == [2, 4, 6, 8, 10, 12]
