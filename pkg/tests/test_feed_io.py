"""
Unit tests for feed ingestion, validation, writing and summaries
"""
import json
import os
import shutil
import tempfile
import unittest

from models.evaluation_config import EvaluationConfig
from models.feed import encode_report, feed_summary, ingest, ingest_groups, validate, write_feed
from models.feed.codec import decode_report
from models.feed.summary import bucket_labels
from models.report import FileType
from tests.helpers import dataset, imports, report, resource, section


def line(obj):
    return json.dumps(obj) + "\n"


class TestFeedReader(unittest.TestCase):
    """Test cases for JSON-lines ingestion"""

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()
        self.good = encode_report(report("a", flags=5, sections=[section("s1")], tlsh="T1ABC"))

    def tearDown(self):
        shutil.rmtree(self.temp_dir)

    def _write(self, name, lines):
        path = os.path.join(self.temp_dir, name)
        with open(path, "w", encoding="utf-8") as f:
            f.writelines(lines)
        return path

    def test_round_trip(self):
        """Reports written by write_feed come back field for field"""
        originals = [
            report("a", flags=5, sections=[section("s1"), section("s2", entropy=0.0, raw_size=7)], tlsh="T1AA"),
            report("b", imports_=imports("GetProcAddress", "LoadLibraryA"), resources=[resource("r1")]),
            report("c", imports_=(), first_seen=17),
        ]
        path = os.path.join(self.temp_dir, "feed.jsonl")
        self.assertEqual(write_feed(originals, path), 3)

        loaded = ingest(path, "G1", show_progress=False)

        self.assertEqual(loaded.reports, tuple(originals))
        self.assertEqual(loaded.ingest_stats.accepted, 3)
        self.assertEqual(loaded.ingest_stats.missing_imports, 1)
        self.assertEqual(loaded.ingest_stats.missing_tlsh, 2)

    def test_write_is_byte_stable(self):
        path_a = os.path.join(self.temp_dir, "a.jsonl")
        path_b = os.path.join(self.temp_dir, "b.jsonl")
        reports = [report("a", sections=[section("s1")])]
        write_feed(reports, path_a)
        write_feed(reports, path_b)
        with open(path_a, "rb") as a, open(path_b, "rb") as b:
            self.assertEqual(a.read(), b.read())

    def test_malformed_lines_are_counted(self):
        bad_vendor = dict(self.good, id="v", vendor_malicious_count=72)
        bad_entropy = dict(self.good, id="e")
        bad_entropy["sections"] = [dict(self.good["sections"][0], entropy=9.5)]
        path = self._write(
            "feed.jsonl",
            [
                line(self.good),
                "{not json\n",
                "\n",
                line([1, 2, 3]),
                line(bad_vendor),
                line(bad_entropy),
                line(dict(self.good)),  # duplicate id
                line({"id": "x", "type": "Win32EXE"}),
            ],
        )

        stats = ingest(path, "G1", show_progress=False).ingest_stats

        self.assertEqual(stats.accepted, 1)
        self.assertEqual(stats.skipped_malformed, 6)
        self.assertEqual(stats.lines_read, 7)
        self.assertEqual(stats.lines_read, stats.accepted + stats.skipped_malformed + stats.skipped_non_pe)

    def test_undecodable_bytes_are_malformed(self):
        path = os.path.join(self.temp_dir, "feed.jsonl")
        with open(path, "wb") as f:
            f.write(line(self.good).encode("utf-8"))
            f.write(b'{"id": "\xff\xfe"}\n')
            f.write(line(dict(self.good, id="b")).encode("utf-8"))

        loaded = ingest(path, "G1", show_progress=False)

        self.assertEqual([r.file_id for r in loaded.reports], ["a", "b"])
        self.assertEqual(loaded.ingest_stats.skipped_malformed, 1)
        self.assertEqual(loaded.ingest_stats.lines_read, 3)

    def test_non_object_nested_entries_are_malformed(self):
        bad_import = dict(self.good, id="i", imports=["kernel32.dll"])
        bad_section = dict(self.good, id="s", sections=["s1"])
        bad_resource = dict(self.good, id="r", resources=[7])
        path = self._write(
            "feed.jsonl",
            [line(bad_import), line(bad_section), line(bad_resource), line(self.good)],
        )

        stats = ingest(path, "G1", show_progress=False).ingest_stats

        self.assertEqual(stats.accepted, 1)
        self.assertEqual(stats.skipped_malformed, 3)

    def test_non_pe_records_skipped(self):
        pdf = dict(self.good, id="p", type="PDF")
        path = self._write("feed.jsonl", [line(self.good), line(pdf)])

        filtered = ingest(path, "G1", show_progress=False)
        unfiltered = ingest(path, "G1", filter_pe=False, show_progress=False)

        self.assertEqual(filtered.ingest_stats.skipped_non_pe, 1)
        self.assertEqual(len(filtered), 1)
        self.assertEqual(len(unfiltered), 2)
        self.assertEqual(unfiltered.reports[1].file_type, FileType.OTHER)

    def test_group_id_tags_reports(self):
        path = self._write("feed.jsonl", [line(self.good)])
        loaded = ingest(path, "G3", show_progress=False)
        self.assertEqual(loaded.group_id, "G3")
        self.assertEqual(loaded.reports[0].group_id, "G3")

    def test_directory_is_read_as_batches(self):
        batch_dir = os.path.join(self.temp_dir, "batches")
        os.makedirs(batch_dir)
        for n in range(3):
            with open(os.path.join(batch_dir, f"batch{n}.jsonl"), "w", encoding="utf-8") as f:
                f.write(line(dict(self.good, id=f"id{n}")))

        loaded = ingest(batch_dir, "G1", show_progress=False)

        self.assertEqual([r.file_id for r in loaded.reports], ["id0", "id1", "id2"])

    def test_empty_file_gives_empty_dataset(self):
        path = self._write("empty.jsonl", [])
        self.assertTrue(ingest(path, "G1", show_progress=False).is_empty)

    def test_ingest_groups(self):
        first = self._write("g1.jsonl", [line(self.good)])
        second = self._write("g2.jsonl", [line(self.good), line(dict(self.good, id="b"))])

        groups = ingest_groups([first, second], ["G1", "G2"], show_progress=False)

        self.assertEqual([g.group_id for g in groups], ["G1", "G2"])
        self.assertEqual([len(g) for g in groups], [1, 2])
        with self.assertRaises(ValueError):
            ingest_groups([first, second], ["G1"])


class TestValidation(unittest.TestCase):
    """Test cases for record invariants"""

    def test_valid_report(self):
        self.assertEqual(validate(report("a", sections=[section("s")])), [])

    def test_vendor_count_range(self):
        violations = validate(report("a", flags=72))
        self.assertEqual(len(violations), 1)
        self.assertIn("vendor count", violations[0])

    def test_bad_hashes(self):
        bad = report("a", sha="XYZ")
        self.assertTrue(any("sha256" in v for v in validate(bad)))

    def test_section_violations(self):
        bad = section("s", entropy=float("nan"), raw_size=-1)
        violations = validate(report("a", sections=[section("ok"), bad]))
        self.assertEqual(len(violations), 2)
        self.assertTrue(all(v.startswith("section 1") for v in violations))
        infinite = section("t", chi2=float("inf"))
        self.assertEqual(len(validate(report("b", sections=[infinite]))), 1)

    def test_decode_blank_tlsh_is_missing(self):
        obj = encode_report(report("a"))
        obj["tlsh"] = "  "
        self.assertIsNone(decode_report(obj, "G1").tlsh)

    def test_decode_rejects_boolean_count(self):
        obj = encode_report(report("a"))
        obj["vendor_malicious_count"] = True
        with self.assertRaises(TypeError):
            decode_report(obj, "G1")


class TestFeedSummary(unittest.TestCase):
    """Test cases for ingest-check summaries"""

    def test_summary_counts(self):
        reports = [
            report("a", flags=0, sections=[section("s1"), section("s2")]),
            report("b", flags=2, resources=[resource("r")]),
            report("c", flags=4, file_type=FileType.WIN64_DLL),
            report("d", flags=30),
        ]

        summary = feed_summary(dataset(reports), EvaluationConfig(vendor_threshold=4))
        data = summary.as_dict()

        self.assertEqual(data["file_count"], 4)
        self.assertEqual(data["label_buckets"], {"0": 1, "1-3": 1, ">=4": 2})
        self.assertEqual(data["file_types"]["Win32EXE"], 3)
        self.assertEqual(data["file_types"]["Win64DLL"], 1)
        self.assertEqual(data["avg_sections"], 0.5)
        self.assertEqual(data["avg_resources"], 0.25)

    def test_buckets_follow_threshold(self):
        reports = [report(n, flags=f) for n, f in (("a", 0), ("b", 1), ("c", 5), ("d", 12))]

        strict = feed_summary(dataset(reports), EvaluationConfig(vendor_threshold=1)).as_dict()
        loose = feed_summary(dataset(reports), EvaluationConfig(vendor_threshold=10)).as_dict()

        self.assertEqual(strict["label_buckets"], {"0": 1, ">=1": 3})
        self.assertEqual(loose["label_buckets"], {"0": 1, "1-9": 2, ">=10": 1})
        self.assertEqual(bucket_labels(2), ("0", "1", ">=2"))
        with self.assertRaises(ValueError):
            bucket_labels(0)

    def test_section_labels(self):
        reports = [
            report("a", sections=[section("m", entropy=7.9), section("p", entropy=0.0, raw_size=7)]),
            report("b", sections=[section("m", entropy=7.9), section("s", entropy=3.0)]),
        ]
        data = feed_summary(dataset(reports), EvaluationConfig()).as_dict()
        self.assertEqual(data["section_labels"], {"Malicious": 2, "Standard": 1, "Camouflage": 1})
        self.assertEqual(sum(data["section_labels"].values()), data["section_count"])


if __name__ == "__main__":
    unittest.main()
