import os
import unittest

from fincat.category import Verdict
from fincat.cli import parse_workspace, run_command, Workspace
from fincat.config import config
from fincat.corpus import bundled_categories
from fincat.errors import ValidationError


DATA = os.path.join(os.path.dirname(__file__), os.pardir, os.pardir, "data")


class TestCommands(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.workspace = parse_workspace([
            os.path.join(DATA, name)
            for name in ("posets.json", "complexes.json", "equivalence.json")])

    def run_command(self, command, **flags):
        return run_command(self.workspace, command, flags)

    def test_pi1_identify(self):
        report = self.run_command("pi1", category="BS3", identify=1000)
        self.assertIsNone(report.verdict)
        self.assertEqual(report.exit_code, 0)
        self.assertEqual(report.data["pi1"]["order"], 6)
        self.assertEqual(report.data["identified"], "S3")
        self.assertEqual(report.data["basepoint"], "o")

    def test_pi1_identify_symmetric(self):
        report = self.run_command("pi1", category="BS4", identify=2000)
        self.assertEqual(report.data["pi1"]["order"], 24)
        self.assertEqual(report.data["identified"], "S4")

    def test_pi1_cyclic_identify(self):
        report = self.run_command("pi1", category="BZ6", identify=100)
        self.assertEqual(report.data["identified"], "Z/6")

    def test_pi1_unknown(self):
        report = self.run_command("pi1", category="CirclePoset", max_cosets=50)
        self.assertEqual(report.verdict, Verdict.UNKNOWN)
        self.assertEqual(report.exit_code, 3)
        self.assertEqual(report.data["pi1"]["abelianization"]["group"], "Z")
        self.assertEqual(report.flags["budgets"]["max_cosets"], 50)

    def test_homology(self):
        report = self.run_command("homology", category="CirclePoset", max_dim=2)
        self.assertEqual(report.data["groups"], "H0 = Z, H1 = Z, H2 = 0")
        self.assertEqual(report.flags["budgets"]["max_dim"], 2)
        report = self.run_command("homology", complex="Boundary3")
        self.assertEqual(report.data["groups"], "H0 = Z, H1 = 0, H2 = Z")

    def test_lascar(self):
        report = self.run_command("lascar", category="FinInj5", sub="U0,U1,U2,U3", at="U5")
        lascar = report.data["lascar"]
        self.assertEqual(lascar["aut_order"], 120)
        self.assertEqual(lascar["lst_order"], 120)
        self.assertEqual(lascar["gal_l"]["order"], 1)
        bounded = self.run_command("lascar", category="FinInj5", sub="size<=3", at="U5")
        self.assertEqual(bounded.data["lascar"]["small"], ["U0", "U1", "U2", "U3"])
        self.assertEqual(bounded.data["lascar"]["lst_order"], 120)
        with self.assertRaises(ValidationError):
            self.run_command("lascar", category="FinInj3", sub="size<=4", at="U3")

    def test_lascar_basepoints(self):
        report = self.run_command("lascar", category="FinInj3", sub="U0,U1", at="U2,U3")
        self.assertEqual(report.verdict, Verdict.HOLDS)
        with self.assertRaises(ValidationError):
            self.run_command("lascar", category="FinInj3", sub="U0", at="U1,U2,U3")

    def test_props(self):
        report = self.run_command("props", category="Span", property=["AP"])
        self.assertEqual(report.verdict, Verdict.FAILS)
        self.assertEqual(report.exit_code, 1)
        self.assertEqual(
            report.data["properties"]["AP"]["witness"], {"span": ["A", "f", "g"]})
        report = self.run_command("props", category="PosetWithTop")
        self.assertIsNone(report.verdict)
        self.assertEqual(report.data["properties"]["Contractible"]["verdict"], "Holds")

    def test_props_functor(self):
        report = self.run_command("props", functor=["first"], property=["Fibration,Opfibration"])
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertEqual(set(report.data["functors"]["first"]), {"Fibration", "Opfibration"})

    def test_main_theorem(self):
        report = self.run_command("main-theorem", category="FinInj3", sub="U0,U1", at="U3")
        self.assertEqual(report.verdict, Verdict.HOLDS)
        report = self.run_command("main-theorem", category="FinInj3", sub="U0,U3", at="U2")
        self.assertEqual(report.verdict, Verdict.HYPOTHESES_NOT_MET)
        self.assertEqual(report.exit_code, 3)

    def test_quillen_a(self):
        report = self.run_command("quillen-a", functor=["first"])
        self.assertEqual(report.verdict, Verdict.HOLDS)
        report = self.run_command("quillen-a", functor=["first"], side="Fiber", at="a")
        self.assertEqual(report.data["report"]["witness"]["certificates"], {"a": "Terminal"})

    def test_equiv(self):
        report = self.run_command(
            "equiv", functor=["collapse", "top"], transformation=["unit,counit"])
        self.assertEqual(report.verdict, Verdict.HOLDS)
        with self.assertRaises(ValidationError):
            self.run_command("equiv", functor=["collapse"])

    def test_amalgamate(self):
        report = self.run_command("amalgamate", category="Span")
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertEqual(len(report.data["stages"]), 2)
        report = self.run_command("amalgamate", category="Span", steps=0)
        self.assertIsNone(report.verdict)

    def test_karoubi(self):
        report = self.run_command("karoubi", category="Idempotent")
        self.assertEqual(report.data["idempotents"], ["e"])
        self.assertEqual(len(report.data["envelope"]["objects"]), 2)

    def test_face_poset_and_subdivision(self):
        report = self.run_command("face-poset", complex="Boundary2")
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertEqual((report.data["objects"], report.data["morphisms"]), (6, 12))
        report = self.run_command("subdivide", complex="Boundary3")
        self.assertEqual(report.verdict, Verdict.HOLDS)

    def test_validate(self):
        report = self.run_command("validate")
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertEqual(report.data["categories"]["CirclePoset"]["morphisms"], 8)
        self.assertTrue(report.data["complexes"]["Edge"]["file"].endswith("complexes.json"))

    def test_input_errors(self):
        with self.assertRaises(ValidationError):
            self.run_command("pi1")
        with self.assertRaises(ValueError):
            self.run_command("draw", category="Span")

    def test_deterministic(self):
        runs = [("pi1", {"max_cosets": 200}), ("homology", {}), ("props", {})]
        with config.override(max_steps=50_000):
            for name in sorted(bundled_categories()):
                for command, flags in runs:
                    flags = dict(flags, category=name)
                    first = run_command(Workspace(), command, flags).render("json")
                    second = run_command(Workspace(), command, flags).render("json")
                    self.assertEqual(first, second, (command, name))

    def test_text_rendering(self):
        text = self.run_command("homology", category="CirclePoset").render("text")
        self.assertIn('command: "homology"', text.splitlines())
        self.assertIn('groups: "H0 = Z, H1 = Z, H2 = 0"', text.splitlines())
        self.assertIn("homology.degrees[1].rank: 1", text.splitlines())
        with self.assertRaises(ValueError):
            self.run_command("homology", category="CirclePoset").render("yaml")


if __name__ == '__main__':
    unittest.main()
