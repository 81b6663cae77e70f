"""Tests for Betti tables and derived invariants."""

import pytest
from pydantic import ValidationError

from src.algebra.errors import BettiConsistencyError, DegenerateIdealError, HochsterLimitError
from src.algebra.homology import (
    InvariantReport,
    bight,
    check_hochster_limit,
    compute_invariants,
    depth,
    field_disagreement,
    graded_betti,
    height,
    multigraded_betti,
    pd,
    reg,
)
from src.algebra.line_formulas import line_facet_ideal, p_ideal
from src.algebra.monomials import ideal_from_supports, unit_ideal
from src.algebra.settings import BettiView, InvariantSource


class TestGradedBetti:
    """Test graded_betti()"""

    def test_two_variables(self):
        """Should give the Koszul table of (x1, x2)."""
        table = graded_betti(ideal_from_supports(2, [(1,), (2,)]))
        assert table.entries == {(0, 1): 2, (1, 2): 1}
        assert (table.pd, table.reg) == (1, 1)

    def test_line_four(self):
        """Should give β_{0,2}=3 and β_{1,3}=2 for F(L_4)."""
        table = graded_betti(line_facet_ideal(4))
        assert table.entries == {(0, 2): 3, (1, 3): 2}
        assert (table.pd, table.reg) == (1, 2)

    def test_p_seven(self):
        """Should give pd 1 and reg 3 for P_7."""
        table = graded_betti(p_ideal(7))
        assert (table.pd, table.reg) == (1, 3)

    def test_principal(self):
        """Should give a single free generator."""
        table = graded_betti(ideal_from_supports(3, [(1, 2, 3)]))
        assert table.entries == {(0, 3): 1}
        assert (table.pd, table.reg) == (0, 3)

    def test_row_zero_is_degree_census(self):
        """Should count generators by degree in homological degree 0."""
        ideal = line_facet_ideal(7)
        assert graded_betti(ideal).row(0) == dict(sorted(ideal.degree_census().items()))

    def test_quotient_view(self):
        """Should shift the ideal table by one and add β_{0,0}."""
        table = graded_betti(line_facet_ideal(4)).quotient_view()
        assert table.view is BettiView.QUOTIENT
        assert table.entries == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
        assert table.pd == 2

    def test_records_and_text(self):
        """Should expose sorted records and a printable table."""
        table = graded_betti(line_facet_ideal(4))
        assert table.as_records() == [{"i": 0, "j": 2, "beta": 3}, {"i": 1, "j": 3, "beta": 2}]
        assert "total:" in str(table)

    def test_degenerate(self):
        """Should reject the unit ideal."""
        with pytest.raises(DegenerateIdealError):
            graded_betti(unit_ideal(2))

    def test_parallel_matches_serial(self):
        """Should not depend on the number of workers."""
        ideal = line_facet_ideal(8)
        assert graded_betti(ideal, jobs=2) == graded_betti(ideal, jobs=1)

    def test_fine_grading_sums_to_coarse(self):
        """Should add fine entries up to the coarse table."""
        ideal = line_facet_ideal(5)
        fine = multigraded_betti(ideal)
        total = sum(fine.values())
        assert total == sum(graded_betti(ideal).entries.values())

    def test_row_zero_mismatch_raises(self, monkeypatch):
        """Should raise when row 0 contradicts the generator degrees."""
        monkeypatch.setattr(
            "src.algebra.homology.multigraded_betti",
            lambda I, characteristic=0, jobs=1: {(0, frozenset({1, 2})): 1},
        )
        with pytest.raises(BettiConsistencyError):
            graded_betti(ideal_from_supports(2, [(1,), (2,)]))

    def test_syzygy_bound(self):
        """Should vanish beyond homological degree nvars - 1."""
        for n in range(1, 8):
            assert graded_betti(line_facet_ideal(n)).pd <= n - 1


class TestInvariants:
    """Test pd(), reg(), depth(), height(), bight()"""

    @pytest.mark.parametrize(
        "n, expected_pd, expected_reg",
        [(2, 1, 1), (3, 1, 2), (4, 1, 2), (5, 2, 3), (6, 2, 4), (7, 2, 4)],
    )
    def test_line_values(self, n, expected_pd, expected_reg):
        """Should reproduce pd and reg of F(L_2) through F(L_7)."""
        ideal = line_facet_ideal(n)
        assert pd(ideal) == expected_pd
        assert reg(ideal) == expected_reg

    def test_depth(self):
        """Should follow nvars - pd."""
        assert depth(line_facet_ideal(6)) == 4
        assert depth(line_facet_ideal(5)) == 3
        assert depth(ideal_from_supports(1, [(1,)])) == 1

    def test_height_bight(self):
        """Should take min and max sizes of minimal primes."""
        assert (height(line_facet_ideal(5)), bight(line_facet_ideal(5))) == (2, 3)
        assert (height(line_facet_ideal(7)), bight(line_facet_ideal(7))) == (2, 3)
        principal = ideal_from_supports(2, [(1, 2)])
        assert (height(principal), bight(principal)) == (1, 1)

    def test_compute_invariants(self):
        """Should report Hochster values for F(L_6)."""
        report = compute_invariants(line_facet_ideal(6), n=6)
        assert (report.pd, report.reg, report.depth, report.height, report.bight) == (2, 4, 4, 2, 3)
        assert report.source is InvariantSource.HOCHSTER
        assert report.field == "QQ"

    def test_report_consistency(self):
        """Should refuse a report with bight below height."""
        with pytest.raises(ValidationError):
            InvariantReport(nvars=3, pd=1, reg=2, depth=2, height=3, bight=2, source=InvariantSource.CLOSED_FORM)

    def test_report_depth_rule(self):
        """Should refuse a Hochster report violating depth + pd = nvars."""
        with pytest.raises(ValidationError):
            InvariantReport(nvars=3, pd=1, reg=2, depth=1, height=1, bight=1, source=InvariantSource.HOCHSTER)

    def test_field_disagreement(self):
        """Should find no difference over GF(2) for F(L_5)."""
        assert field_disagreement(line_facet_ideal(5)) == []


class TestHochsterLimit:
    """Test check_hochster_limit()"""

    def test_over_limit(self):
        """Should refuse a sweep above the limit."""
        with pytest.raises(HochsterLimitError):
            check_hochster_limit(13, limit=12)

    def test_force(self):
        """Should allow the sweep when forced."""
        check_hochster_limit(13, limit=12, force=True)
        check_hochster_limit(12, limit=12)
