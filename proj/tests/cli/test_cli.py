"""End-to-end checks of the netspread command line: outputs and exit codes."""

import os
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

BINARY = os.environ.get("NETSPREAD_CLI", "netspread")
if os.sep in BINARY:
    BINARY = os.path.abspath(BINARY)


def run(*args, cwd=None):
    return subprocess.run([BINARY, *map(str, args)], capture_output=True, text=True, cwd=cwd)


class CliTest(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmp.name)
        self.triangle = self.dir / "tri.txt"
        self.triangle.write_text("a b\nb c\nc a\n")
        self.path = self.dir / "path.txt"
        self.path.write_text("a b\nb c\n")

    def tearDown(self):
        self.tmp.cleanup()

    def test_generate_is_seeded(self):
        a = run("generate", "--kind", "ba", "-n", 200, "-m", 2, "--seed", 5)
        b = run("generate", "--kind", "ba", "-n", 200, "-m", 2, "--seed", 5)
        c = run("generate", "--kind", "ba", "-n", 200, "-m", 2, "--seed", 6)
        self.assertEqual(a.returncode, 0, a.stderr)
        self.assertEqual(a.stdout, b.stdout)
        self.assertNotEqual(a.stdout, c.stdout)
        self.assertEqual(len(a.stdout.splitlines()), 2 * (200 - 3) + 3)

    def test_generate_to_file_then_classify(self):
        out = self.dir / "ws.txt"
        r = run("generate", "--kind", "ws", "-n", 1000, "-k", 10, "-p", 0.01, "-o", out)
        self.assertEqual(r.returncode, 0, r.stderr)
        r = run("classify", out)
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("label=small-world", r.stdout)
        r = run("classify", out, "--format", "json-like")
        self.assertIn('"label": "small-world"', r.stdout)

    def test_histogram(self):
        r = run("histogram", self.triangle)
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(r.stdout, "k,count\n2,3\n")

    def test_simulate_hand_trace(self):
        log = self.dir / "infections.csv"
        r = run("simulate", self.path, "--beta", 1, "--gamma", 1, "--infected", "a", "--infections", log)
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(r.stdout, "t,S,I,R\n0,2,1,0\n1,1,1,1\n2,0,1,2\n3,0,0,3\n")
        self.assertEqual(log.read_text(), "t,infector,infectee\n1,a,b\n2,b,c\n")

    def test_percolate(self):
        r = run("percolate", self.triangle, "--sweep", 0, 0.5, 1)
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(r.stdout, "theta,members,giant_fraction\n0,3,1\n0.5,3,1\n1,3,1\n")
        r = run("percolate", self.triangle, "--theta", 0.5, "--output-dir", self.dir / "out")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual((self.dir / "out" / "cluster.txt").read_text(), "a\nb\nc\n")

    def test_compare_immunization(self):
        graph = self.dir / "ba.txt"
        run("generate", "--kind", "ba", "-n", 500, "-m", 3, "-o", graph)
        r = run("compare-immunization", graph, "--runs", 5, "--seed", 2)
        self.assertEqual(r.returncode, 0, r.stderr)
        for name in ("percolation-cluster,", "random,", "none,"):
            self.assertIn(name, r.stdout)

    def test_experiment_relative_paths(self):
        cfg = self.dir / "exp.cfg"
        cfg.write_text("input = file\ninput.path = tri.txt\nactions = histogram, classify\noutput_dir = res\n")
        r = run("experiment", cfg, cwd="/")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual((self.dir / "res" / "histogram.csv").read_text(), "k,count\n2,3\n")
        self.assertTrue((self.dir / "res" / "classify.txt").exists())

    def test_usage_errors_exit_1(self):
        for args in [(), ("bogus",), ("generate", "--kind", "ws", "-n", 10, "-k", 3),
                     ("simulate", self.path, "--beta", 2), ("simulate", self.path, "--infected", "zz"),
                     ("percolate", self.path, "--sweep", 0.5, 0.1)]:
            with self.subTest(args=args):
                r = run(*args)
                self.assertEqual(r.returncode, 1, r.stderr)
                self.assertTrue(r.stderr.strip())

    def test_bad_config_names_field(self):
        cfg = self.dir / "bad.cfg"
        cfg.write_text("input = file\ninput.path = tri.txt\nactions = histogram\nepidemic.gamma = 7\n")
        r = run("experiment", cfg)
        self.assertEqual(r.returncode, 1)
        self.assertIn("epidemic.gamma", r.stderr)
        self.assertEqual(len(r.stderr.strip().splitlines()), 1)

    def test_runtime_errors_exit_2(self):
        r = run("histogram", self.dir / "missing.txt")
        self.assertEqual(r.returncode, 2)
        self.assertIn("missing.txt", r.stderr)
        bad = self.dir / "bad.txt"
        bad.write_text("a b\nc\n")
        r = run("histogram", bad)
        self.assertEqual(r.returncode, 2)
        self.assertIn("line 2", r.stderr)
        cfg = self.dir / "exp.cfg"
        cfg.write_text("input = file\ninput.path = nowhere.txt\nactions = histogram\n")
        r = run("experiment", cfg)
        self.assertEqual(r.returncode, 2)
        self.assertIn("nowhere.txt", r.stderr)
        r = run("experiment", self.dir / "absent.cfg")
        self.assertEqual(r.returncode, 2)


if __name__ == "__main__":
    sys.exit(unittest.main())
