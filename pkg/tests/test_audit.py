import pytest
from hypothesis import given, settings, strategies as st

from goldbach_lab.audit import (
    ALL_RELATIONS,
    EVEN_RELATIONS,
    ROW_RELATIONS,
    audit_range,
    audit_row,
    implication_eval,
)
from goldbach_lab.rowrange import Range, Row


def check_by_id(checks, relation_id):
    matches = [c for c in checks if c.relation_id == relation_id]
    assert len(matches) == 1
    return matches[0]


def rows_strategy():
    return st.builds(
        lambda start, size: Row(start, start + size - 1),
        start=st.integers(1, 10**5),
        size=st.integers(1, 60),
    )


class TestRowLevelRelations:
    def test_first_decade_bound_vs_half(self):
        report = audit_row(Row(1, 10))
        check = check_by_id(report.row_checks, "(27)")
        assert (check.lhs_value, check.rhs_value, check.holds) == (16, 5, False)

    def test_first_decade_total_vs_primes(self):
        check = check_by_id(audit_row(Row(1, 10)).row_checks, "(31)")
        assert (check.lhs_value, check.rhs_value, check.holds) == (10, 4, False)

    def test_first_decade_sandwich(self):
        check = check_by_id(audit_row(Row(1, 10)).row_checks, "(3)")
        assert check.rhs_value == (1, 5)
        assert check.holds

    def test_half_values_are_exact_on_odd_m(self):
        report = audit_row(Row(1, 3))  # m = 3
        check = check_by_id(report.row_checks, "(27)")
        assert check.rhs_value == 1.5

    @settings(max_examples=100, deadline=None)
    @given(row=rows_strategy())
    def test_identity_relation_always_holds(self, row):
        check = check_by_id(audit_row(row).row_checks, "(23)")
        assert check.holds

    @settings(max_examples=100, deadline=None)
    @given(start=st.integers(1, 10**5), half=st.integers(1, 30))
    def test_even_width_rows_balance(self, start, half):
        row = Row(start, start + 2 * half - 1)
        check = check_by_id(audit_row(row).row_checks, "A2")
        assert check.holds

    @settings(max_examples=100, deadline=None)
    @given(row=rows_strategy())
    def test_chain_28_29_31(self, row):
        checks = audit_row(row).row_checks
        c28 = check_by_id(checks, "(28)").holds
        c29 = check_by_id(checks, "(29)").holds
        c31 = check_by_id(checks, "(31)").holds
        if c28:
            assert c29
        if c29:
            assert c31


class TestPerEvenRelations:
    def test_eight_resolves_to_two(self):
        report = audit_row(Row(1, 10))
        even = [e for e in report.per_even if e.target == 8][0]
        assert even.dc_value == 2
        assert check_by_id(even.checks, "(11-3)").holds
        assert not check_by_id(even.checks, "(11-1)").holds

    def test_tiny_row_breaks_even_count_bound(self):
        report = audit_row(Row(3, 4))
        even = report.per_even[0]
        assert even.target == 4
        check = check_by_id(even.checks, "(4)")
        assert (check.lhs_value, check.rhs_value, check.holds) == (2, 1, False)

    def test_no_evens_above_two(self):
        assert audit_row(Row(2, 3)).per_even == ()
        assert audit_row(Row(1, 2)).per_even == ()

    def test_every_even_above_two_appears_once(self):
        report = audit_row(Row(1, 30))
        assert [e.target for e in report.per_even] == list(range(4, 31, 2))

    @settings(max_examples=60, deadline=None)
    @given(row=rows_strategy())
    def test_exactly_one_of_gt2_eq2(self, row):
        for even in audit_row(row).per_even:
            gt2 = check_by_id(even.checks, "(11-1)").holds
            eq2 = check_by_id(even.checks, "(11-3)").holds
            assert gt2 != eq2


class TestImplicationEval:
    @pytest.mark.parametrize(
        "p,q,r,conjunction,implication",
        [
            (False, False, False, False, True),
            (False, False, True, False, True),
            (False, True, False, False, True),
            (False, True, True, True, True),
            (True, False, False, False, False),
            (True, False, True, False, False),
            (True, True, False, False, False),
            (True, True, True, True, True),
        ],
    )
    def test_truth_table(self, p, q, r, conjunction, implication):
        assert implication_eval(p, q, r) == (conjunction, implication)


class TestAuditReportShape:
    def test_relation_partition_is_exact(self):
        report = audit_row(Row(1, 10))
        assert [c.relation_id for c in report.row_checks] == list(ROW_RELATIONS)
        for even in report.per_even:
            assert [c.relation_id for c in even.checks] == list(EVEN_RELATIONS)
        assert set(ROW_RELATIONS) | set(EVEN_RELATIONS) == set(ALL_RELATIONS)
        assert not set(ROW_RELATIONS) & set(EVEN_RELATIONS)

    def test_relation_subset_configuration(self):
        report = audit_row(Row(1, 10), relations=["(27)", "(11-3)"])
        assert [c.relation_id for c in report.row_checks] == ["(27)"]
        for even in report.per_even:
            assert [c.relation_id for c in even.checks] == ["(11-3)"]

    def test_unknown_relation_rejected(self):
        with pytest.raises(ValueError):
            audit_row(Row(1, 10), relations=["(99)"])

    def test_verdict_summary_counts(self):
        summary = audit_row(Row(1, 10)).verdict_summary()
        assert summary["(11-3)"] == {"failed": 0, "held": 4}
        assert summary["(27)"] == {"failed": 1, "held": 0}


class TestAuditRange:
    def test_hundred_by_ten_ground_truth(self):
        result = audit_range(Range(1, 100), 10)
        assert len(result.reports) == 10
        summary = result.summary
        for rid in ("A1", "A2", "A3", "(3)", "(23)"):
            assert summary[rid] == {"failed": 0, "held": 10}
        for rid in ("(27)", "(28)", "(29)", "(31)"):
            assert summary[rid] == {"failed": 10, "held": 0}
        assert summary["(11-3)"] == {"failed": 0, "held": 49}
        assert summary["(11-1)"] == {"failed": 49, "held": 0}

    def test_no_evens_gives_empty_section(self):
        result = audit_range(Range(2, 3), 2)
        assert len(result.reports) == 1
        assert result.reports[0].per_even == ()

    def test_deterministic_across_runs(self):
        a = audit_range(Range(1, 100), 10)
        b = audit_range(Range(1, 100), 10)
        assert a == b

    def test_workers_do_not_change_the_result(self):
        sequential = audit_range(Range(1, 200), 10)
        parallel = audit_range(Range(1, 200), 10, workers=2)
        assert sequential == parallel

    def test_propagates_partition_errors(self):
        from goldbach_lab.errors import NonDivisibleWidth

        with pytest.raises(NonDivisibleWidth):
            audit_range(Range(1, 100), 7)
