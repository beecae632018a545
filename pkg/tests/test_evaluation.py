"""
Unit tests for verdicts, summaries, prevalence, comparison, persistence and oracle scores
"""
import random
import unittest
from unittest.mock import patch

from models.clustering import Method, Qualification, ResilientFingerprint, select
from models.errors import EmptyDatasetError
from models.evaluation import (
    Feature,
    Technique,
    Verdict,
    accuracies,
    comparison_table,
    coverage,
    flag_histogram,
    pairwise_scores,
    persistence,
    prevalence,
    report_filter,
    summarize,
    verdict,
)
from models.evaluation.verdicts import EvaluationSummary
from tests.helpers import dataset, fingerprint, report, resource, section, sha256_of

GROUP_SIZE = 1061151

# (method+group, qualification, printed fp acc, fp redundancy, printed tp acc, tp redundancy)
PUBLISHED_ROWS = [
    ("TD1", "ILRS", 6.8, 40034, 93.1, 544613),
    ("TD1", "ILCS", 1.3, 3070, 98.6, 224803),
    ("TD1", "ILMS", 2.2, 7572, 97.7, 335062),
    ("TD1", "ILCSMS", 1.3, 3070, 98.6, 223513),
    ("TD1", "IL_CS_or_MS", 2.2, 7572, 97.7, 339278),
    ("TD2", "ILRS", 9.0, 53682, 90.9, 540439),
    ("TD2", "ILCS", 2.0, 4407, 97.9, 213656),
    ("TD2", "ILMS", 2.9, 9993, 97.0, 323728),
    ("TD2", "ILCSMS", 2.0, 4407, 97.9, 213021),
    ("TD2", "IL_CS_or_MS", 2.9, 9993, 97.0, 324363),
    ("TD3", "ILRS", 9.3, 56581, 90.6, 548525),
    ("TD3", "ILCS", 2.8, 6499, 97.1, 218264),
    ("TD3", "ILMS", 3.4, 11753, 96.5, 329789),
    ("TD3", "ILCSMS", 2.8, 6499, 97.1, 217782),
    ("TD3", "IL_CS_or_MS", 3.4, 11753, 96.6, 330271),
    ("TD4", "ILRS", 4.3, 29309, 95.6, 652168),
    ("TD4", "ILCS", 2.7, 6403, 97.2, 229597),
    ("TD4", "ILMS", 3.9, 17678, 96.0, 434068),
    ("TD4", "ILCSMS", 2.6, 6236, 97.3, 227134),
    ("TD4", "IL_CS_or_MS", 3.9, 17845, 96.0, 436531),
    ("BU1", "RS", 5.1, 34640, 94.9, 656219),
    ("BU1", "CS", 0.1, 7, 99.9, 457365),
    ("BU1", "MS", 4.1, 4038, 95.9, 105719),
    ("BU1", "CS_or_MS", 0.8, 4448, 99.2, 563084),
    ("BU2", "RS", 6.1, 43071, 93.9, 665236),
    ("BU2", "CS", 0.1, 2, 100.0, 467425),
    ("BU2", "MS", 5.1, 6987, 94.9, 132010),
    ("BU2", "CS_or_MS", 1.2, 6987, 98.8, 599435),
    ("BU3", "RS", 6.3, 42984, 93.7, 648942),
    ("BU3", "CS", 0.1, 217, 99.9, 462836),
    ("BU3", "MS", 4.5, 5511, 95.5, 118403),
    ("BU3", "CS_or_MS", 0.9, 5728, 99.1, 581239),
    ("BU4", "RS", 3.3, 25803, 96.7, 758426),
    ("BU4", "CS", 0.1, 73, 99.9, 451284),
    ("BU4", "MS", 4.2, 7575, 95.8, 173785),
    ("BU4", "CS_or_MS", 1.3, 7648, 98.7, 625069),
]

KNOWN_ERRATA = {("BU1", "MS")}
TOLERANCE = 0.1 + 1e-6


class TestVerdict(unittest.TestCase):
    """Test cases for per-fingerprint verdicts"""

    def test_examples(self):
        self.assertEqual(verdict(fingerprint(3, [5, 7, 30]), 4), Verdict.FULLY_MALICIOUS)
        self.assertEqual(verdict(fingerprint(3, [0, 1, 2]), 4), Verdict.FALSE_POSITIVE)
        self.assertEqual(verdict(fingerprint(2, [0, 12]), 4), Verdict.PARTIAL)

    def test_threshold_one(self):
        self.assertEqual(verdict(fingerprint(2, [1, 3]), 1), Verdict.FULLY_MALICIOUS)

    def test_permutation_invariant(self):
        self.assertEqual(verdict(fingerprint(3, [30, 0, 5]), 4), verdict(fingerprint(3, [0, 5, 30]), 4))

    def test_histogram(self):
        fp = fingerprint(3, [30, 30, 25])
        self.assertEqual(flag_histogram(fp), {30: 2, 25: 1})
        self.assertEqual(sum(flag_histogram(fp).values()), fp.redundancy)

    def test_empty_histogram(self):
        self.assertEqual(flag_histogram(fingerprint(0, 0)), {})
        self.assertEqual(verdict(fingerprint(0, 0), 4), Verdict.FALSE_POSITIVE)


class TestSummarize(unittest.TestCase):
    """Test cases for redundancy-weighted accuracy"""

    def test_published_ilrs_row(self):
        self.assertEqual(accuracies(40034, 544613, "half_up"), (6.8, 93.2))
        self.assertEqual(accuracies(40034, 544613, "down"), (6.8, 93.1))

    def test_trivial_rows(self):
        self.assertEqual(accuracies(0, 500), (0.0, 100.0))
        self.assertEqual(accuracies(1, 1), (50.0, 50.0))

    def test_summary_counts(self):
        fps = [
            fingerprint(10, [0, 1], prefix="fp"),
            fingerprint(5, [0, 12], prefix="part"),
            fingerprint(5, 30, prefix="full"),
        ]
        summary = summarize(fps, Qualification.ILRS, 4)

        self.assertEqual(summary.fingerprint_count, 3)
        self.assertEqual((summary.fp_count, summary.partial_count, summary.full_count), (1, 1, 1))
        self.assertEqual((summary.fp_redundancy, summary.tp_redundancy), (10, 10))
        self.assertEqual((summary.fp_accuracy_pct, summary.tp_accuracy_pct), (50.0, 50.0))
        self.assertFalse(summary.empty)
        self.assertEqual(summary.as_row(), ("ILRS", "3", "1", "50.0", "10", "1", "1", "50.0", "10"))

    def test_empty_selection(self):
        summary = summarize([], Qualification.CS_OR_MS, 4)
        self.assertTrue(summary.empty)
        self.assertEqual(summary.as_row(), ("CS_or_MS", "0", "0", "0.0", "0", "0", "0", "0.0", "0"))

    def test_random_summaries_close_to_hundred(self):
        rng = random.Random(7)
        for _ in range(1000):
            fp_red, tp_red = rng.randint(0, 10**6), rng.randint(1, 10**6)
            fp_acc, tp_acc = accuracies(fp_red, tp_red)
            self.assertLessEqual(abs(fp_acc + tp_acc - 100.0), 0.1 + 1e-9)
            low_fp, low_tp = accuracies(fp_red, tp_red, "down")
            self.assertLessEqual(fp_acc - low_fp, 0.1 + 1e-9)
            self.assertLessEqual(tp_acc - low_tp, 0.1 + 1e-9)

    def test_published_group_summaries(self):
        """Every published (redundancy, accuracy) row reproduces except the known erratum"""
        for mode in ("half_up", "down"):
            misses = set()
            for row_id, qualification, fp_acc, fp_red, tp_acc, tp_red in PUBLISHED_ROWS:
                got_fp, got_tp = accuracies(fp_red, tp_red, mode)
                if abs(got_fp - fp_acc) > TOLERANCE or abs(got_tp - tp_acc) > TOLERANCE:
                    misses.add((row_id, qualification))
            with self.subTest(mode=mode):
                self.assertEqual(misses, KNOWN_ERRATA)

    def test_bottom_up_cs_or_ms_erratum(self):
        """The combined row's FP redundancy is not the sum of its CS and MS rows"""
        bu = Method.BOTTOM_UP
        fps = (
            planted(("RS", "CS"), 1, 7, 0, 1, 457365, bu)
            + planted(("RS", "MS"), 1, 4038, 0, 1, 105719, bu)
            + planted(("RS",), 1, 50, 0, 1, 50, bu)
        )
        combined = summarize(select(fps, Qualification.CS_OR_MS), Qualification.CS_OR_MS, 4)
        self.assertEqual(combined.tp_redundancy, 563084)
        self.assertEqual(combined.fp_redundancy, 4045)
        self.assertNotEqual(combined.fp_redundancy, 4448)


def _split(total, parts):
    base, extra = divmod(total, parts)
    return [base + 1] * extra + [base] * (parts - extra)


def planted(quals, fp_count, fp_red, partial, full, tp_red, method=Method.TOP_DOWN):
    """Fingerprints of one flag set with a given verdict mix and redundancy."""
    tag = "".join(quals)
    fps = []
    if fp_count:
        for n, size in enumerate(_split(fp_red, fp_count)):
            fps.append(fingerprint(size, 0, quals, method, prefix=f"{tag}-fp{n}-"))
    if partial + full:
        for n, size in enumerate(_split(tp_red, partial + full)):
            flags = [30, 0] if n < partial else 30
            fps.append(fingerprint(size, flags, quals, method, prefix=f"{tag}-tp{n}-"))
    return fps


# Top-Down groups split into disjoint flag sets:
# (fp count, fp redundancy, partial, full, tp redundancy)
TOP_DOWN_GROUPS = {
    "TD2": {
        ("RS", "CS", "MS"): (13, 4407, 66, 116, 213021),
        ("RS", "CS"): (0, 0, 1, 1, 635),
        ("RS", "MS"): (26, 5586, 31, 92, 110707),
        ("RS",): (17, 43689, 50, 65, 216076),
    },
    "TD3": {
        ("RS", "CS", "MS"): (17, 6499, 61, 117, 217782),
        ("RS", "CS"): (0, 0, 0, 1, 482),
        ("RS", "MS"): (26, 5254, 32, 102, 112007),
        ("RS",): (19, 44828, 51, 68, 218254),
    },
    "TD4": {
        ("RS", "CS", "MS"): (14, 6236, 78, 255, 227134),
        ("RS", "CS"): (1, 167, 0, 3, 2463),
        ("RS", "MS"): (46, 11442, 49, 579, 206934),
        ("RS",): (27, 11464, 37, 330, 215637),
    },
}

# (fingerprints, fp count, fp redundancy, partial, full, tp redundancy) as printed
PUBLISHED_TOP_DOWN = {
    "TD2": {
        "ILRS": (478, 56, 53682, 148, 274, 540439),
        "ILCS": (197, 13, 4407, 67, 117, 213656),
        "ILMS": (344, 39, 9993, 97, 208, 323728),
        "ILCSMS": (195, 13, 4407, 66, 116, 213021),
        "IL_CS_or_MS": (346, 39, 9993, 98, 209, 324363),
    },
    "TD3": {
        "ILRS": (494, 62, 56581, 144, 288, 548525),
        "ILCS": (196, 17, 6499, 61, 118, 218264),
        "ILMS": (355, 43, 11753, 93, 219, 329789),
        "ILCSMS": (195, 17, 6499, 61, 117, 217782),
        "IL_CS_or_MS": (356, 43, 11753, 93, 220, 330271),
    },
    "TD4": {
        "ILRS": (1419, 88, 29309, 164, 1167, 652168),
        "ILCS": (351, 15, 6403, 15, 258, 229597),
        "ILMS": (1021, 60, 17678, 127, 834, 434068),
        "ILCSMS": (347, 14, 6236, 78, 255, 227134),
        "IL_CS_or_MS": (1025, 61, 17845, 127, 837, 436531),
    },
}

# The printed partial count here does not add up to the row's own total (15 + 15 + 258 != 351).
PARTIAL_COUNT_ERRATA = {("TD4", "ILCS"): 78}


def summary_counts(summary):
    return (
        summary.fingerprint_count,
        summary.fp_count,
        summary.fp_redundancy,
        summary.partial_count,
        summary.full_count,
        summary.tp_redundancy,
    )


class TestTopDownSelections(unittest.TestCase):
    """Published Top-Down group rows rebuilt through select() and summarize()"""

    @classmethod
    def setUpClass(cls):
        cls.groups = {
            group_id: [fp for quals, row in categories.items() for fp in planted(quals, *row)]
            for group_id, categories in TOP_DOWN_GROUPS.items()
        }

    def _summary(self, group_id, qualification):
        picked = select(self.groups[group_id], qualification)
        return summarize(picked, qualification, 4)

    def test_group_rows(self):
        for group_id, rows in PUBLISHED_TOP_DOWN.items():
            for name, printed in rows.items():
                with self.subTest(group=group_id, qualification=name):
                    expected = list(printed)
                    if (group_id, name) in PARTIAL_COUNT_ERRATA:
                        expected[3] = PARTIAL_COUNT_ERRATA[(group_id, name)]
                        self.assertEqual(expected[0], expected[1] + expected[3] + expected[4])
                    got = summary_counts(self._summary(group_id, Qualification.from_text(name)))
                    self.assertEqual(got, tuple(expected))

    def test_either_is_union_of_cs_and_ms(self):
        for group_id in TOP_DOWN_GROUPS:
            with self.subTest(group=group_id):
                ilcs = self._summary(group_id, Qualification.ILCS)
                ilms = self._summary(group_id, Qualification.ILMS)
                both = self._summary(group_id, Qualification.ILCSMS)
                either = self._summary(group_id, Qualification.IL_CS_OR_MS)
                for field in ("fingerprint_count", "fp_redundancy", "tp_redundancy"):
                    self.assertEqual(
                        getattr(either, field),
                        getattr(ilcs, field) + getattr(ilms, field) - getattr(both, field),
                    )

    def test_group_one_either_row_erratum(self):
        """The printed combined row of group 1 disagrees with its own ILCS/ILMS/ILCSMS rows"""
        fps = (
            planted(("RS", "CS", "MS"), 11, 3070, 66, 142, 223513)
            + planted(("RS", "CS"), 0, 0, 1, 2, 1290)
            + planted(("RS", "MS"), 21, 4502, 37, 117, 111549)
        )
        ilcs = summarize(select(fps, Qualification.ILCS), Qualification.ILCS, 4)
        ilms = summarize(select(fps, Qualification.ILMS), Qualification.ILMS, 4)
        both = summarize(select(fps, Qualification.ILCSMS), Qualification.ILCSMS, 4)
        either = summarize(select(fps, Qualification.IL_CS_OR_MS), Qualification.IL_CS_OR_MS, 4)

        self.assertEqual((ilcs.fingerprint_count, ilms.fingerprint_count, both.fingerprint_count), (222, 394, 219))
        self.assertEqual((ilcs.tp_redundancy, ilms.tp_redundancy, both.tp_redundancy), (224803, 335062, 223513))
        self.assertEqual(either.fingerprint_count, 397)
        self.assertNotEqual(either.fingerprint_count, 345)
        self.assertEqual(either.tp_redundancy, 336352)
        self.assertNotEqual(either.tp_redundancy, 339278)
        self.assertEqual(either.fp_redundancy, 7572)


def summary_with(tp_redundancy, qualification):
    return EvaluationSummary(qualification, 1, 0, 0.0, 0, 0, 1, 100.0, tp_redundancy)


class _SizedDataset:
    """Stand-in exposing only what comparison_table reads for a large group."""

    def __init__(self, size):
        self.size = size
        self.group_id = "G1"
        self.is_empty = False
        self.reports = ()

    def __len__(self):
        return self.size


class TestComparison(unittest.TestCase):
    """Test cases for the baseline comparison table"""

    def test_rows_and_order(self):
        data = dataset([
            report("a", sha=sha256_of("x"), tlsh="T1A"),
            report("b", sha=sha256_of("x"), tlsh="T1A"),
            report("c", tlsh="T1A"),
            report("d"),
        ])
        rows = comparison_table(data, summary_with(2, Qualification.IL_CS_OR_MS), summary_with(3, Qualification.CS_OR_MS))

        self.assertEqual([r.technique for r in rows], [Technique.SHA256, Technique.TLSH, Technique.TOP_DOWN, Technique.BOTTOM_UP])
        self.assertEqual([r.files_identified for r in rows], [1, 2, 2, 3])
        self.assertEqual([r.accuracy_pct for r in rows], [25.0, 50.0, 50.0, 75.0])
        self.assertEqual(rows[3].as_row(), ("BottomUp", "3", "75.0"))

    def test_empty_summaries(self):
        rows = comparison_table(dataset([report("a")]), None, None)
        self.assertEqual([(r.files_identified, r.accuracy_pct) for r in rows[2:]], [(0, 0.0), (0, 0.0)])

    def test_published_group_one(self):
        big = _SizedDataset(GROUP_SIZE)
        td = summary_with(339278, Qualification.IL_CS_OR_MS)
        bu = summary_with(563084, Qualification.CS_OR_MS)
        with patch("models.evaluation.comparison.baseline_row") as baseline:
            baseline.return_value.files_identified = 0
            baseline.return_value.accuracy_pct = 0.0
            half_up = comparison_table(big, td, bu, "half_up")
            down = comparison_table(big, td, bu, "down")

        self.assertEqual(half_up[2].accuracy_pct, 32.0)
        self.assertEqual(down[2].accuracy_pct, 31.9)
        self.assertEqual(half_up[3].accuracy_pct, 53.1)

    def test_empty_dataset(self):
        with self.assertRaises(EmptyDatasetError):
            comparison_table(dataset([]), None, None)


class TestPrevalence(unittest.TestCase):
    """Test cases for per-feature redundancy"""

    def test_worked_example(self):
        reports = [report(f"r{n}", sha=sha256_of(f"x{n % 84}")) for n in range(100)]
        rows = prevalence(dataset(reports))
        sha_row = rows[0]
        self.assertEqual(sha_row.feature, Feature.SHA256)
        self.assertEqual(sha_row.as_row(), ("SHA256", "100", "16", "16.0"))

    def test_populations(self):
        reports = [
            report("a", tlsh="T1A", sections=[section("s1"), section("s1")], resources=[resource("r")]),
            report("b", imports_=(), sections=[section("s2")], resources=[resource("r")]),
        ]
        rows = {row.feature: row for row in prevalence(dataset(reports))}

        self.assertEqual(rows[Feature.TLSH].population, 1)
        self.assertEqual(rows[Feature.IMPORT_LIST].population, 1)
        self.assertEqual((rows[Feature.SECTIONS].population, rows[Feature.SECTIONS].redundancy), (3, 1))
        self.assertEqual(rows[Feature.RESOURCES].redundancy_pct, 50.0)

    def test_distinct_sections(self):
        reports = [report("a", sections=[section("s1")]), report("b", sections=[section("s2")])]
        rows = {row.feature: row for row in prevalence(dataset(reports))}
        self.assertEqual(rows[Feature.SECTIONS].redundancy_pct, 0.0)

    def test_empty(self):
        with self.assertRaises(EmptyDatasetError):
            prevalence(dataset([]))


class TestPersistence(unittest.TestCase):
    """Test cases for cross-group tracking"""

    def test_rows(self):
        shared = fingerprint(3, 30, key="aaaa")
        later = fingerprint(5, 30, key="aaaa")
        only_g1 = fingerprint(2, 30, key="bbbb")
        only_g2 = fingerprint(2, 30, key="0000")

        rows = persistence([("G1", [shared, only_g1]), ("G2", [later, only_g2])])

        self.assertEqual([r.key for r in rows], ["aaaa", "0000", "bbbb"])
        self.assertEqual(rows[0].groups, ("G1", "G2"))
        self.assertEqual(rows[0].redundancy_by_group, (3, 5))
        self.assertEqual(rows[0].as_row(), ("aaaa", "TopDown", "G1;G2", "3;5"))

    def test_methods_tracked_separately(self):
        td = fingerprint(2, 30, key="k")
        bu = fingerprint(2, 30, key="k", method=Method.BOTTOM_UP)
        self.assertEqual(len(persistence([("G1", [td, bu])])), 2)


class TestOracle(unittest.TestCase):
    """Test cases for pairwise scores, coverage and report filtering"""

    def _fp(self, ids):
        return ResilientFingerprint(Method.TOP_DOWN, sha256_of("".join(ids)), tuple(sorted(ids)), fingerprint(len(ids), 30).file_stats)

    def test_perfect_partition(self):
        truth = {"a": "C1", "b": "C1", "c": "C2", "d": "C2", "n": None}
        self.assertEqual(pairwise_scores([self._fp(["a", "b"]), self._fp(["c", "d"])], truth), (1.0, 1.0))

    def test_merged_clusters(self):
        truth = {"a": "C1", "b": "C1", "c": "C2", "d": "C2"}
        precision, recall = pairwise_scores([self._fp(["a", "b", "c", "d"])], truth)
        self.assertAlmostEqual(precision, 2 / 6)
        self.assertEqual(recall, 1.0)

    def test_zero_denominators(self):
        self.assertEqual(pairwise_scores([], {}), (0.0, 0.0))

    def test_coverage(self):
        fps = [self._fp(["a", "b"]), self._fp(["b", "c"])]
        self.assertEqual(coverage(fps, ["a", "b", "c", "d"]), 0.75)
        self.assertEqual(coverage(fps, []), 0.0)

    def test_report_filter(self):
        fps = [fingerprint(900, 30, prefix="big"), fingerprint(899, 30, prefix="small")]
        self.assertEqual(report_filter(fps, 900), fps[:1])
        self.assertEqual(report_filter(fps, 1), fps)


if __name__ == "__main__":
    unittest.main()
