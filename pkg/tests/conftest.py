import pytest

from morfo.analyzer import Analyzer, load_default_table
from morfo.clitics import CliticSplitter, load_pronoun_table
from morfo.derivers import Lemmatizer, Nominalizer, load_nominal_flags
from morfo.lexicon import load_dictionary
from morfo.rules import load_rules
from morfo.resources import data_path


def _read(name):
    return data_path(name).read_text(encoding="utf-8").splitlines()


@pytest.fixture(scope="session")
def lexicon():
    return load_dictionary(_read("dictionary.txt"))


@pytest.fixture(scope="session")
def rule_table():
    return load_rules(_read("rules.tsv"))


@pytest.fixture(scope="session")
def default_table():
    return load_default_table(_read("defaults.tsv"))


@pytest.fixture(scope="session")
def pronoun_table():
    return load_pronoun_table(_read("pronouns.tsv"))


@pytest.fixture(scope="session")
def nominal_flags():
    return load_nominal_flags(_read("nominal_flags.txt"))


@pytest.fixture(scope="session")
def analyzer(lexicon, rule_table, default_table):
    return Analyzer(lexicon, rule_table, default_table)


@pytest.fixture(scope="session")
def lemmatizer(analyzer):
    return Lemmatizer(analyzer)


@pytest.fixture(scope="session")
def nominalizer(lemmatizer, nominal_flags):
    return Nominalizer(lemmatizer, nominal_flags)


@pytest.fixture(scope="session")
def splitter(analyzer, pronoun_table):
    return CliticSplitter(analyzer, pronoun_table)


@pytest.fixture(scope="session")
def generation_set(lexicon, rule_table):
    """Brute-force expansion of every entry: list of (root, form, rule_id, features)."""
    from morfo.rules import expand_entry

    out = []
    for entry in lexicon:
        for form, rule_id, features in expand_entry(entry, rule_table):
            out.append((entry.root, form, rule_id, features))
    return out
