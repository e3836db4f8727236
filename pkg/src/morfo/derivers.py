"""Lemmatization and verb nominalization, each with its own lookup memo."""

from __future__ import annotations

import threading
from typing import Dict, Iterable, List, Optional, Set, TextIO, Tuple, Union

from morfo.analyzer import Analyzer
from morfo.errors import LoadError
from morfo.features import Pos
from morfo.lexicon import normalize
from morfo.rules import apply_rule


def load_nominal_flags(source: Union[TextIO, Iterable[str]]) -> Set[str]:
    """Read the nominal-derivation flag manifest: one flag character per line."""
    flags: Set[str] = set()
    for line_no, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if len(line) != 1:
            raise LoadError(f"expected a single flag character, got {line!r}", line_no)
        flags.add(line)
    return flags


class Lemmatizer:
    """Resolves a surface form to its dictionary root via the analyzer."""

    def __init__(self, analyzer: Analyzer):
        self.analyzer = analyzer
        self._memo: Dict[Tuple[str, Optional[Pos]], str] = {}
        self._lock = threading.Lock()

    def lemmatize(self, word: str, pos_hint: Optional[Pos] = None) -> str:
        """The preferred analysis's lemma; the word itself when only the fallback applies."""
        surface = normalize(word)
        key = (surface, pos_hint)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        lemma = self.analyzer.preferred_analysis(surface, pos_hint).lemma
        with self._lock:
            self._memo[key] = lemma
        return lemma


class Nominalizer:
    """Converts a verb (conjugated or infinitive) to its flagged nominal form."""

    def __init__(self, lemmatizer: Lemmatizer, nominal_flags: Set[str]):
        self.lemmatizer = lemmatizer
        self.analyzer = lemmatizer.analyzer
        self.nominal_flags = set(nominal_flags)
        self._memo: Dict[str, Optional[str]] = {}
        self._lock = threading.Lock()
        self._lint_single_flag()

    def _lint_single_flag(self) -> None:
        # Each verb may use only one nominal derivation; more is a data error.
        for entry in self.analyzer.lexicon:
            licensed = [f for f in entry.flags if f in self.nominal_flags]
            if len(licensed) > 1:
                raise LoadError(
                    f"entry {entry.root!r} carries multiple nominalization flags: "
                    f"{''.join(licensed)}"
                )

    def nominalize(self, verb: str) -> Optional[str]:
        """The rule-specified nominal form, or None when no such form is on record."""
        infinitive = self.lemmatizer.lemmatize(normalize(verb), Pos.VERB)
        hit = self._memo.get(infinitive, self)  # sentinel: self is never a value
        if hit is not self:
            return hit
        nominal = self._convert(infinitive)
        with self._lock:
            self._memo[infinitive] = nominal
        return nominal

    def _convert(self, infinitive: str) -> Optional[str]:
        entry = self.analyzer.lexicon.lookup_exact(infinitive)
        if entry is None:
            return None
        flags = [f for f in entry.flags if f in self.nominal_flags]
        if not flags:
            return None
        for rule in self.analyzer.rules.by_flag.get(flags[0], ()):
            form = apply_rule(entry.root, rule)
            if form is not None:
                return form
        return None
