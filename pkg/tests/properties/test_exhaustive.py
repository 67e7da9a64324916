import logging
import unittest
import pytest
from TSW.properties.runner import PropertyRunner


@pytest.mark.slow
class ExhaustiveSuitesTest(unittest.TestCase):
    """ Whole instance spaces at desk scale; run with `pytest -m slow`. """

    @classmethod
    def setUpClass(cls):
        logging.disable(logging.CRITICAL)

    def run_exhaustive(self, name, **bounds):
        result = PropertyRunner(count=0, suites=[name], **bounds).run_suite(name)
        self.assertGreater(result.passed, 0)
        self.assertEqual(result.failed, 0, result.counterexample)
        return result

    def test_flatness(self):
        self.run_exhaustive('flatness', max_structure=3, max_team=2, max_formula_size=3)

    def test_locality(self):
        self.run_exhaustive('locality', max_structure=3, max_team=2, max_formula_size=2)

    def test_downward_closure(self):
        self.run_exhaustive('downward-closure', max_structure=3, max_team=2, max_formula_size=3)

    def test_union_closure(self):
        self.run_exhaustive('union-closure', max_structure=3, max_team=2, max_formula_size=3)

    def test_fot_translation(self):
        self.run_exhaustive('fot-translation', max_structure=2, max_team=4, max_formula_size=3)

    def test_foil_translation(self):
        result = self.run_exhaustive('foil-translation', max_structure=2, max_team=4, max_formula_size=4)
        self.assertEqual(result.cases, result.passed + result.skipped)


if __name__ == '__main__':
    unittest.main()
