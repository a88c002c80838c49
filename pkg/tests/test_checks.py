import random

import pytest

from utils.checks import (
    check_clifford_relations, check_dirac, check_sl2_values, check_weyl_characters, check_zero_weight_vanishing,
    mu_corpus, random_invariant_character, run_suite,
)


class TestIndividualChecks:
    def test_clifford_relations(self):
        result = check_clifford_relations()
        assert result.passed, result.detail
        assert result.cases > 0

    def test_dirac(self):
        assert check_dirac().passed

    def test_fixture_checks(self, fixtures):
        assert check_weyl_characters(fixtures).passed
        assert check_sl2_values(fixtures).passed

    def test_zero_weight_vanishing(self, fixtures):
        result = check_zero_weight_vanishing(fixtures, random.Random(3), quick=True)
        assert result.passed
        assert result.cases == 5 * len(fixtures)

    def test_invariant_character_is_invariant(self, su3):
        ch = random_invariant_character(random.Random(5), su3)
        for element in su3.weyl:
            assert ch.mapped(element.matrix) == ch

    def test_mu_corpus_starts_with_empty_list(self):
        corpus = mu_corpus(random.Random(0), quick=True)
        assert corpus[0] == []
        assert [(0,)] in corpus


class TestSuite:
    @pytest.mark.parametrize("seed", [0, 17])
    def test_quick_suite_passes(self, fixtures, seed, capsys):
        results = run_suite(fixtures, seed=seed, quick=True)
        failed = [(r.name, r.detail) for r in results if not r.passed]
        assert failed == []
        assert len({r.name for r in results}) == len(results)
        assert "[Spinlat] selftest" in capsys.readouterr().err
