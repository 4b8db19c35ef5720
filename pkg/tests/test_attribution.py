import pytest

from pulso import (
    CandidateLabel,
    LocationResolver,
    LocationRule,
    LocationRuleError,
    UNKNOWN_LOCATION,
    classify,
    load_location_rules,
    normalize_location,
    unmatched_locations,
)


class TestClassify:
    def test_single_candidate(self):
        assert classify("Gana Macri") is CandidateLabel.MACRI
        assert classify("vamos scioli") is CandidateLabel.SCIOLI

    def test_both_candidates(self):
        assert classify("Macri o Scioli, hay que elegir") is CandidateLabel.SCIOLI_MACRI

    def test_neither(self):
        assert classify("lindo domingo de elecciones") is CandidateLabel.SIN_CANDIDATO
        assert classify("") is CandidateLabel.SIN_CANDIDATO

    def test_case_insensitive(self):
        assert classify("MACRI") is CandidateLabel.MACRI
        assert classify("ScIoLi") is CandidateLabel.SCIOLI

    def test_substring_inside_words_counts(self):
        assert classify("#sciolimacri debate") is CandidateLabel.SCIOLI_MACRI
        assert classify("macrismo puro") is CandidateLabel.MACRI

    def test_labels_serialize_as_plain_strings(self):
        assert CandidateLabel.SCIOLI_MACRI.value == "Scioli-Macri"
        assert CandidateLabel.SIN_CANDIDATO.value == "Sin Candidato"
        assert "{}".format(CandidateLabel.MACRI.value) == "Macri"


def _rules_file(tmp_path, body):
    path = tmp_path / "rules.tsv"
    path.write_text(body, encoding="utf-8")
    return path


SAMPLE_RULES = (
    "10\tla plata\tBuenos Aires\tArgentina\n"
    "20\tmar del plata\tBuenos Aires\tArgentina\n"
    "30\tsanta fe\tSanta Fe\tArgentina\n"
    "40\tbuenos aires\tBuenos Aires\tArgentina\n"
    "50\targentina\tSin Provincia\tArgentina\n"
)


class TestLoadRules:
    def test_sorted_by_order(self, tmp_path):
        shuffled = "30\tc\tC\tX\n10\ta\tA\tX\n20\tb\tB\tX\n"
        rules = load_location_rules(_rules_file(tmp_path, shuffled))
        assert [r.order for r in rules] == [10, 20, 30]
        assert [r.pattern for r in rules] == ["a", "b", "c"]

    def test_patterns_folded(self, tmp_path):
        rules = load_location_rules(_rules_file(tmp_path, "10\tCórdoba\tCórdoba\tArgentina\n"))
        assert rules[0].pattern == "córdoba"
        assert rules[0].province == "Córdoba"

    def test_blank_lines_skipped(self, tmp_path):
        rules = load_location_rules(_rules_file(tmp_path, "\n10\ta\tA\tX\n\n"))
        assert len(rules) == 1

    def test_missing_file(self, tmp_path):
        with pytest.raises(LocationRuleError, match="missing rule file"):
            load_location_rules(tmp_path / "nope.tsv")

    def test_wrong_column_count(self, tmp_path):
        with pytest.raises(LocationRuleError, match="4 tab-separated columns"):
            load_location_rules(_rules_file(tmp_path, "10\ta\tA\n"))

    def test_non_integer_order(self, tmp_path):
        with pytest.raises(LocationRuleError, match="not an integer"):
            load_location_rules(_rules_file(tmp_path, "x\ta\tA\tX\n"))

    def test_duplicate_order(self, tmp_path):
        body = "10\ta\tA\tX\n10\tb\tB\tX\n"
        with pytest.raises(LocationRuleError, match="duplicate order"):
            load_location_rules(_rules_file(tmp_path, body))

    def test_empty_column(self, tmp_path):
        with pytest.raises(LocationRuleError, match="empty column"):
            load_location_rules(_rules_file(tmp_path, "10\t\tA\tX\n"))


@pytest.fixture(scope="module")
def sample(tmp_path_factory):
    path = tmp_path_factory.mktemp("rules") / "rules.tsv"
    path.write_text(SAMPLE_RULES, encoding="utf-8")
    return load_location_rules(path)


class TestNormalizeLocation:
    def test_first_matching_rule_wins(self, sample):
        entry = normalize_location("La Plata, Buenos Aires", sample)
        assert (entry.province, entry.country) == ("Buenos Aires", "Argentina")
        entry = normalize_location("mar del plata argentina", sample)
        assert entry.province == "Buenos Aires"

    def test_case_and_accents_folded_on_input(self, sample):
        assert normalize_location("SANTA FE", sample).province == "Santa Fe"

    def test_general_rule_catches_rest(self, sample):
        entry = normalize_location("en algun lugar de argentina", sample)
        assert (entry.province, entry.country) == ("Sin Provincia", "Argentina")

    def test_no_match_and_empty(self, sample):
        assert normalize_location("Paris, France", sample) == UNKNOWN_LOCATION
        assert normalize_location("", sample) == UNKNOWN_LOCATION

    def test_substring_match_inside_longer_text(self, sample):
        entry = normalize_location("vivo en santa fe capital!", sample)
        assert entry.province == "Santa Fe"


class TestDefaultRules:
    def test_specific_city_beats_province_keyword(self, rules):
        entry = normalize_location("La Ciudad de Buenos Aires", rules)
        assert entry.province == "Capital Federal"

    def test_caba_variants(self, rules):
        for raw in ("CABA", "caba", "Capital Federal", "Ciudad Autónoma"):
            assert normalize_location(raw, rules).province == "Capital Federal", raw

    def test_province_names(self, rules):
        assert normalize_location("Rosario, Santa Fe", rules).province == "Santa Fe"
        assert normalize_location("Córdoba capital", rules).province == "Córdoba"
        assert normalize_location("cordoba", rules).province == "Córdoba"
        assert normalize_location("Ushuaia", rules).province == "Tierra del Fuego"
        entry = normalize_location("Mar del Plata", rules)
        assert entry.province == "Provincia de Buenos Aires"

    def test_rule_provinces_join_official_results(self, rules, official):
        official_names = {row.province for row in official}
        argentine = {
            rule.province
            for rule in rules
            if rule.country == "Argentina" and rule.province != "Sin Provincia"
        }
        assert argentine <= official_names

    def test_country_fallback(self, rules):
        entry = normalize_location("algún pueblo de Argentina", rules)
        assert (entry.province, entry.country) == ("Sin Provincia", "Argentina")

    def test_foreign_locations(self, rules):
        assert normalize_location("Montevideo, Uruguay", rules).country == "Uruguay"
        assert normalize_location("Madrid, España", rules).country == "España"

    def test_all_rules_have_positive_order(self, rules):
        assert all(rule.order > 0 for rule in rules)
        assert [rule.order for rule in rules] == sorted(rule.order for rule in rules)


class TestResolver:
    def test_same_answer_as_direct_call(self, rules):
        resolver = LocationResolver(rules)
        for raw in ("CABA", "Paris", "", "Rosario"):
            assert resolver.resolve(raw) == normalize_location(raw, rules)

    def test_caches_distinct_strings(self, rules):
        resolver = LocationResolver(rules)
        resolver.resolve("CABA")
        resolver.resolve("CABA")
        resolver.resolve("Rosario")
        assert len(resolver._cache) == 2


class TestUnmatchedLocations:
    def test_counts_and_ordering(self, rules):
        records = ["Narnia", "Mordor", "Narnia", "CABA", "", "Atlantis"]
        result = unmatched_locations(records, rules)
        assert result == [("Narnia", 2), ("Atlantis", 1), ("Mordor", 1)]

    def test_reads_user_location_attribute(self, rules):
        class Stub:
            def __init__(self, raw):
                self.user_location = raw

        result = unmatched_locations([Stub("Narnia"), Stub("CABA")], rules)
        assert result == [("Narnia", 1)]
