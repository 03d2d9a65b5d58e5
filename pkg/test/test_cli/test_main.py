import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stdout

from fincat.cli.__main__ import main


DATA = os.path.join(os.path.dirname(__file__), os.pardir, os.pardir, "data")


class TestMain(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def write(self, name, text):
        path = os.path.join(self.tmp.name, name)
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
        return path

    def run_main(self, *argv):
        out = io.StringIO()
        with redirect_stdout(out):
            code = main(list(argv))
        return code, out.getvalue()

    def test_json_output(self):
        code, out = self.run_main(
            "homology", os.path.join(DATA, "posets.json"),
            "--category", "CirclePoset", "--format", "json")
        self.assertEqual(code, 0)
        document = json.loads(out)
        self.assertEqual(document["groups"], "H0 = Z, H1 = Z, H2 = 0")
        self.assertEqual(document["command"], "homology")
        self.assertNotIn("verdict", document)

    def test_text_output(self):
        code, out = self.run_main("pi1", "--category", "BZ3")
        self.assertEqual(code, 0)
        self.assertIn("pi1.order: 3", out.splitlines())

    def test_validate(self):
        code, _ = self.run_main("validate", os.path.join(DATA, "bs2.json"))
        self.assertEqual(code, 0)
        broken = self.write("broken.json", json.dumps({"categories": [{
            "name": "Half",
            "objects": ["o"],
            "morphisms": [{"id": "s", "src": "o", "tgt": "o"}],
            "compose": [],
        }]}))
        code, out = self.run_main("validate", broken, "--format", "json")
        self.assertEqual(code, 1)
        self.assertEqual(json.loads(out)["verdict"], "Fails")

    def test_input_errors(self):
        code, out = self.run_main("pi1", "--category", "Nowhere", "--format", "json")
        self.assertEqual(code, 2)
        self.assertEqual(json.loads(out)["type"], "UnresolvedReference")
        code, _ = self.run_main("homology", os.path.join(self.tmp.name, "missing.json"))
        self.assertEqual(code, 2)
        syntax = self.write("syntax.json", '{"categories": [\n  {"name": "X",\n  ]}')
        code, out = self.run_main("validate", syntax, "--format", "json")
        self.assertEqual(code, 2)
        self.assertEqual(json.loads(out)["type"], "WorkspaceSyntaxError")
        code, _ = self.run_main("lascar", "--category", "FinInj3")
        self.assertEqual(code, 2)

    def test_verdict_codes(self):
        code, _ = self.run_main(
            "props", os.path.join(DATA, "posets.json"), "--category", "Span", "--property", "AP")
        self.assertEqual(code, 1)
        code, _ = self.run_main("pi1", "--category", "CirclePoset", "--max-cosets", "50")
        self.assertEqual(code, 3)
        code, _ = self.run_main(
            "equiv", os.path.join(DATA, "equivalence.json"),
            "--functor", "collapse", "--functor", "top",
            "--transformation", "unit", "--transformation", "counit")
        self.assertEqual(code, 0)


if __name__ == '__main__':
    unittest.main()
