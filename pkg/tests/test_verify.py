import itertools
import random

import pytest

from circuitcodes import (
    CodeParams,
    InapplicableError,
    InternalConsistencyError,
    NotACircuitCodeError,
    Segment,
    StructuralError,
    ViolationReport,
    are_isomorphic,
    audit_delta_inequalities,
    bit_runs,
    brute_force_check,
    check_spread,
    check_window_bitrun_property,
    delta,
    expand_vertices,
    hamming_distance,
    in_family,
    is_symmetric,
    is_valid_code,
    normalize_to_bitrun_form,
    rotate,
    segment_labels,
)

from conftest import closed_words

GRAY3 = (1, 2, 1, 3, 1, 2, 1, 3)


class TestCheckSpread:
    def test_square_valid(self):
        assert check_spread((1, 2, 1, 2), CodeParams(2, 1)) is None

    def test_gray3_fails_spread_2(self):
        report = check_spread(GRAY3, CodeParams(3, 2))
        assert report == ViolationReport(
            i=1, j=4, code_dist=3, cube_dist=1, required=2, segment=(1, 2, 1)
        )

    def test_search_witness_is_valid(self, rec_52):
        assert rec_52.n == 14
        for w in rec_52.witnesses:
            assert len(w) == 14
            assert check_spread(w, CodeParams(5, 2)) is None

    def test_non_closed_raises_structural(self):
        with pytest.raises(StructuralError):
            check_spread((1, 2, 3, 4), CodeParams(4, 1))

    def test_too_short_raises_structural(self):
        with pytest.raises(StructuralError):
            check_spread((1, 1), CodeParams(2, 1))
        with pytest.raises(StructuralError):
            check_spread((), CodeParams(2, 1))

    def test_duplicate_vertices_reported_as_zero_cube_dist(self):
        # walk of (1,1,2,2) revisits the origin at step 2
        report = check_spread((1, 1, 2, 2), CodeParams(2, 1))
        assert report is not None
        assert report.cube_dist == 0
        assert report == ViolationReport(
            i=1, j=3, code_dist=2, cube_dist=0, required=1, segment=(1, 1)
        )

    def test_first_violation_is_lexicographic(self):
        # several violating pairs exist; the (i, j)-smallest must be reported
        report = check_spread(GRAY3, CodeParams(3, 3))
        assert report is not None
        fast = check_spread(GRAY3, CodeParams(3, 2))
        assert (report.i, report.j) <= (fast.i, fast.j)

    def test_report_is_recheckable_by_core_ops(self):
        report = check_spread(GRAY3, CodeParams(3, 2))
        walk = expand_vertices(GRAY3, 3)
        assert hamming_distance(walk[report.i - 1], walk[report.j - 1]) == report.cube_dist
        assert report.cube_dist < report.required
        assert delta(GRAY3, Segment(report.i, report.j - report.i)) == report.cube_dist
        assert segment_labels(GRAY3, Segment(report.i, report.j - report.i)) == report.segment

    def test_violation_line_format(self):
        report = check_spread(GRAY3, CodeParams(3, 2))
        assert report.to_line() == (
            "violation i=1 j=4 code_dist=3 cube_dist=1 required=2 segment=1,2,1"
        )

    def test_spread_monotonicity(self, rec_52, rec_63):
        words = list(rec_52.witnesses) + list(rec_63.witnesses)
        words += [(1, 2, 1, 2), (1, 2, 3, 1, 2, 3)]
        for w in words:
            d = max(w)
            ks = [k for k in range(1, 7) if check_spread(w, CodeParams(d, k)) is None]
            assert ks == list(range(1, len(ks) + 1))


class TestBruteForce:
    def test_square_spread_3(self):
        assert brute_force_check((1, 2, 1, 2), CodeParams(2, 3)) is None

    def test_hexagon_spread_3(self):
        assert brute_force_check((1, 2, 3, 1, 2, 3), CodeParams(3, 3)) is None

    @staticmethod
    def _verdict(checker, word, params):
        try:
            return "valid" if checker(word, params) is None else "violation"
        except StructuralError:
            return "structural"

    def test_agreement_smoke(self):
        # the full exhaustive cross-validation lives in the acceptance suite
        for w in closed_words(3, 8):
            for k in (1, 2, 3):
                params = CodeParams(3, k)
                assert self._verdict(check_spread, w, params) == self._verdict(
                    brute_force_check, w, params
                )

    def test_same_structural_errors(self):
        for bad in [(1, 2, 3), (1, 1)]:
            with pytest.raises(StructuralError):
                brute_force_check(bad, CodeParams(3, 1))

    def test_is_valid_code_helper(self):
        assert is_valid_code((1, 2, 1, 2), CodeParams(2, 1))
        assert not is_valid_code(GRAY3, CodeParams(3, 2))
        assert not is_valid_code((1, 2, 3), CodeParams(3, 1))


class TestBitRuns:
    def test_square(self):
        assert bit_runs((1, 2, 1, 2)).longest == 2

    def test_wrapping_run(self):
        report = bit_runs((1, 2, 3, 1))
        assert report.longest == 3
        assert Segment(2, 3) in report.runs  # (2,3,1)

    def test_all_distinct_whole_cycle(self):
        report = bit_runs((1, 2, 3))
        assert report.longest == 3
        assert report.runs == (Segment(1, 3),)

    def test_empty(self):
        report = bit_runs(())
        assert report.longest == 0 and report.runs == ()

    def test_maximum_symmetric_code_has_k_plus_3_run(self, rec_84_sym):
        for w in rec_84_sym.witnesses:
            assert bit_runs(w).longest >= 7

    def test_runs_are_maximal(self):
        rng = random.Random(31)
        for _ in range(300):
            n = rng.randint(1, 14)
            w = tuple(rng.randint(1, 5) for _ in range(n))
            report = bit_runs(w)
            for seg in report.runs:
                labels = segment_labels(w, seg)
                assert len(set(labels)) == seg.length
                if seg.length < n:
                    grown_left = segment_labels(w, Segment((seg.start - 2) % n + 1, seg.length + 1))
                    grown_right = segment_labels(w, Segment(seg.start, seg.length + 1))
                    assert len(set(grown_left)) <= seg.length
                    assert len(set(grown_right)) <= seg.length
            assert report.longest == max(s.length for s in report.runs)
            assert all(
                report.runs[i].start < report.runs[i + 1].start
                for i in range(len(report.runs) - 1)
            )


class TestBitRunsAgainstDefinitionOracle:
    """Compare against a literal scan: a maximal run is any distinct-label
    segment that repeats a label when grown one step in either direction."""

    @staticmethod
    def oracle(word):
        n = len(word)
        if n == 0:
            return set(), 0
        if len(set(word)) == n:
            return {Segment(1, n)}, n
        runs = set()
        for start in range(1, n + 1):
            for length in range(1, n + 1):
                labels = segment_labels(word, Segment(start, length))
                if len(set(labels)) != length:
                    continue
                left = segment_labels(word, Segment((start - 2) % n + 1, length + 1))
                right = segment_labels(word, Segment(start, length + 1))
                if len(set(left)) <= length and len(set(right)) <= length:
                    runs.add(Segment(start, length))
        return runs, max(s.length for s in runs)

    def test_exhaustive_tiny(self):
        for n in range(1, 7):
            for w in itertools.product((1, 2, 3), repeat=n):
                report = bit_runs(w)
                want_runs, want_longest = self.oracle(w)
                assert set(report.runs) == want_runs, w
                assert report.longest == want_longest, w

    def test_random(self):
        rng = random.Random(71)
        for _ in range(400):
            n = rng.randint(1, 12)
            w = tuple(rng.randint(1, 6) for _ in range(n))
            report = bit_runs(w)
            want_runs, want_longest = self.oracle(w)
            assert set(report.runs) == want_runs and report.longest == want_longest


class TestDeltaAuditAgainstRecountOracle:
    """The prefix-mask audit must agree with a naive recount over every
    segment in the claimed ranges."""

    @staticmethod
    def oracle(word, params):
        n, k = len(word), params.k
        offenders = []
        for length in range(1, min(k + 1, n - 1) + 1):
            for start in range(1, n + 1):
                if delta(word, Segment(start, length)) != length:
                    offenders.append(Segment(start, length))
        for length in range(k + 2, n - k + 1):
            for start in range(1, n + 1):
                if delta(word, Segment(start, length)) < k:
                    offenders.append(Segment(start, length))
        return tuple(offenders)

    def test_on_maxima_and_invalid_words(self, rec_52, rec_63):
        cases = [(w, CodeParams(5, 2)) for w in rec_52.witnesses]
        cases += [(w, CodeParams(6, 3)) for w in rec_63.witnesses]
        cases += [(GRAY3, CodeParams(3, 2)), (GRAY3, CodeParams(3, 1))]
        for w, params in cases:
            assert audit_delta_inequalities(w, params) == self.oracle(w, params)

    def test_random_closed_words(self):
        rng = random.Random(73)
        checked = 0
        for w in closed_words(3, 10):
            if rng.random() < 0.2:
                for k in (1, 2, 3):
                    if len(w) > 2 * k:
                        params = CodeParams(3, k)
                        assert audit_delta_inequalities(w, params) == self.oracle(w, params)
                        checked += 1
        assert checked > 500


class TestInFamily:
    def test_max_symmetric_code_in_family_3(self, rec_84_sym):
        assert in_family(rec_84_sym.witnesses[0], CodeParams(8, 4), 3)

    def test_square_not_in_family(self):
        assert not in_family((1, 2, 1, 2), CodeParams(2, 1), 2)

    def test_run_cannot_exceed_dimension(self):
        # k + l > d forces False: a run longer than d repeats a label
        assert not in_family((1, 2, 1, 2), CodeParams(2, 1), 4)

    def test_invalid_code_rejected(self):
        with pytest.raises(NotACircuitCodeError):
            in_family(GRAY3, CodeParams(3, 2), 2)

    def test_l_validation(self):
        with pytest.raises(ValueError):
            in_family((1, 2, 1, 2), CodeParams(2, 1), 1)


class TestWindowBitrunProperty:
    def test_valid_on_gray3(self):
        assert check_window_bitrun_property(GRAY3, CodeParams(3, 1)) is None

    def test_valid_on_all_enumerated_maxima(self, rec_52, rec_63, rec_84_sym):
        for rec, params in [
            (rec_52, CodeParams(5, 2)),
            (rec_63, CodeParams(6, 3)),
            (rec_84_sym, CodeParams(8, 4)),
        ]:
            for w in rec.witnesses:
                assert check_window_bitrun_property(w, params) is None

    def test_inapplicable_when_short(self):
        with pytest.raises(InapplicableError):
            check_window_bitrun_property((1, 2, 1, 2), CodeParams(2, 1))


class TestDeltaAudit:
    def test_valid_on_enumerated_maxima(self, rec_52, rec_63):
        for rec, params in [(rec_52, CodeParams(5, 2)), (rec_63, CodeParams(6, 3))]:
            for w in rec.witnesses:
                assert audit_delta_inequalities(w, params) == ()

    def test_gray3_fails_at_spread_2(self):
        offenders = audit_delta_inequalities(GRAY3, CodeParams(3, 2))
        assert offenders
        first = offenders[0]
        assert first == Segment(1, 3)
        assert segment_labels(GRAY3, first) == (1, 2, 1)
        assert delta(GRAY3, first) == 1

    def test_inapplicable_when_short(self):
        with pytest.raises(InapplicableError):
            audit_delta_inequalities((1, 2, 1, 2), CodeParams(2, 2))

    def test_non_closed_is_structural(self):
        with pytest.raises(StructuralError):
            audit_delta_inequalities((1, 2, 3, 4, 5), CodeParams(5, 1))

    def test_short_segments_of_valid_codes_are_bit_runs(self, rec_52, rec_63):
        # odd-count == length forces pairwise-distinct labels
        for rec, k in [(rec_52, 2), (rec_63, 3)]:
            for w in rec.witnesses:
                n = len(w)
                for start in range(1, n + 1):
                    for length in range(1, k + 2):
                        labels = segment_labels(w, Segment(start, length))
                        assert len(set(labels)) == length


class TestIsSymmetric:
    @pytest.mark.parametrize(
        "word,want",
        [
            ((1, 2, 1, 2), True),
            ((1, 2, 2, 1), False),
            ((1, 2, 3, 1, 2, 3), True),
            ((1, 2, 3), False),
        ],
    )
    def test_examples(self, word, want):
        assert is_symmetric(word) is want


class TestNormalize:
    def test_unique_symmetric_84_code(self, rec_84_sym):
        params = CodeParams(8, 4)
        w = rec_84_sym.witnesses[0]
        form = normalize_to_bitrun_form(w, params)
        assert form.head_run == (1, 2, 3, 4, 5, 6)
        assert form.link in {1, 2, 7}
        assert len(form.tail) == 4
        assert form.word[:11] == form.word[11:]
        # output is a genuine relabeled rotation of the input
        assert are_isomorphic(form.word, w)
        assert check_spread(form.word, params) is None
        # normalizing the normalized word is stable
        again = normalize_to_bitrun_form(form.word, params)
        assert again.word == form.word

    def test_tail_constraints_hold(self, rec_84_sym):
        form = normalize_to_bitrun_form(rec_84_sym.witnesses[0], CodeParams(8, 4))
        k = 4
        for i0, label in enumerate(form.tail):
            assert label > i0 + 1
        for j0 in range(k - 1):
            assert not (j0 + 4 <= form.tail[j0] <= k + 2)

    def test_wrong_length_inapplicable(self):
        with pytest.raises(InapplicableError):
            normalize_to_bitrun_form((1, 2, 1, 2), CodeParams(8, 4))

    def test_asymmetric_inapplicable(self, rec_84_sym):
        w = list(rec_84_sym.witnesses[0])
        w[1], w[3] = w[3], w[1]  # break the symmetry, keep the length
        with pytest.raises(InapplicableError):
            normalize_to_bitrun_form(tuple(w), CodeParams(8, 4))

    def test_odd_spread_inapplicable(self, rec_63):
        with pytest.raises(InapplicableError):
            normalize_to_bitrun_form(rec_63.witnesses[0], CodeParams(6, 3))

    def test_invalid_code_inapplicable(self):
        # symmetric, right length for k=4 if padded wrong: use a bogus doubled word
        bogus = tuple(([1, 2] * 6)[:11]) * 2
        with pytest.raises(InapplicableError):
            normalize_to_bitrun_form(bogus, CodeParams(8, 4))
