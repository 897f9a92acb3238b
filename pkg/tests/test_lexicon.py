import pytest

from nligen.lexicon import (
    Lexicon,
    MalformedRow,
    UnknownRelationTag,
    load_lexicon_lines,
    load_paraphrases,
)


def lex_from(text: str) -> Lexicon:
    return load_lexicon_lines(text.splitlines())


def test_basic_load_and_order():
    lex = lex_from(
        "hypernym\talcohol\tbeverage\n"
        "hypernym\talcohol\tdrink\n"
        "# comment line\n"
        "\n"
        "antonym\tbig\tsmall\n"
    )
    assert lex.hypernyms("alcohol") == ["beverage", "drink"]
    assert lex.antonyms("big") == ["small"]
    assert lex.hypernyms("unknown") == []


def test_source_matching_case_insensitive():
    lex = lex_from("hypernym\tDog\tanimal\n")
    assert lex.hypernyms("dog") == ["animal"]
    assert lex.hypernyms("DOG") == ["animal"]


def test_duplicate_rows_deduplicated():
    lex = lex_from(
        "hypernym\tdog\tanimal\nhypernym\tdog\tanimal\nhypernym\tdog\tAnimal\n"
    )
    assert lex.hypernyms("dog") == ["animal"]
    assert lex.relation_counts() == {"hypernym": 1}


def test_self_pairs_dropped():
    lex = lex_from("antonym\tbig\tbig\nantonym\tbig\tBig\nantonym\tbig\tsmall\n")
    assert lex.antonyms("big") == ["small"]
    assert lex.self_pairs_dropped == 2
    for source in ("big",):
        for target in lex.antonyms(source):
            assert target.lower() != source.lower()


def test_malformed_row():
    with pytest.raises(MalformedRow):
        lex_from("hypernym\tdog\n")
    with pytest.raises(MalformedRow):
        lex_from("hypernym\tdog\tanimal\textra\n")
    with pytest.raises(MalformedRow):
        lex_from("hypernym\t\tanimal\n")


def test_unknown_relation_tag():
    with pytest.raises(UnknownRelationTag):
        lex_from("synonym\tdog\thound\n")
    with pytest.raises(UnknownRelationTag):
        lex_from("conceptnet:\tdog\tbone\n")


def test_conceptnet_relations():
    lex = lex_from(
        "conceptnet:AtLocation\ttable\tkitchen\n"
        "conceptnet:MadeOf\tglass\tplastic\n"
        "conceptnet:AtLocation\ttable\tdining room\n"
    )
    assert lex.conceptnet_relations() == ["AtLocation", "MadeOf"]
    assert lex.conceptnet_facts("table") == [
        ("AtLocation", "kitchen"),
        ("AtLocation", "dining room"),
    ]
    assert lex.conceptnet_facts("glass") == [("MadeOf", "plastic")]


def test_pronoun_defaults():
    lex = Lexicon()
    assert lex.pronoun_for("man") == "he"
    assert lex.pronoun_for("boy") == "he"
    assert lex.pronoun_for("grandfather") == "he"
    assert lex.pronoun_for("woman") == "she"
    assert lex.pronoun_for("girl") == "she"
    assert lex.pronoun_for("aunt") == "she"
    assert lex.pronoun_for("table") == "it"
    assert lex.pronoun_for("dog", plural=True) == "they"


def test_pronoun_rows_override_defaults():
    lex = lex_from("pronoun\tship\tshe\n")
    assert lex.pronoun_for("ship") == "she"
    assert lex.pronoun_for("ship", plural=True) == "they"


def test_number_word_relation():
    lex = lex_from("number_word\ttwo\tfive\nnumber_word\ttwo\tnine\n")
    assert lex.number_words("two") == ["five", "nine"]


def test_relation_counts():
    lex = lex_from(
        "hypernym\tdog\tanimal\nhypernym\tcat\tanimal\nantonym\tbig\tsmall\n"
    )
    assert lex.relation_counts() == {"antonym": 1, "hypernym": 2}


def test_load_paraphrases(tmp_path):
    p = tmp_path / "paras.tsv"
    p.write_text(
        "# comment\n"
        "s1\tA dog is running\n"
        "s1\tA dog runs\n"
        "s1\tA dog is running\n"
        "s2\tA cat sits\n",
        encoding="utf-8",
    )
    paras = load_paraphrases(p)
    assert paras == {
        "s1": ["A dog is running", "A dog runs"],
        "s2": ["A cat sits"],
    }


def test_load_paraphrases_malformed(tmp_path):
    p = tmp_path / "paras.tsv"
    p.write_text("s1\n", encoding="utf-8")
    with pytest.raises(MalformedRow):
        load_paraphrases(p)
