"""Surface-form analysis: hybrid lazy search over roots with a growing form memo.

A word is resolved by consulting, in order, the irregular-form table (forms
whose first letter differs from their root's, which the same-first-letter
neighbor walk could never reach), the memo of already-compiled forms, and a
neighbor search that expands nearby roots' forms on demand. When no
dictionary-backed reading exists, a single fallback analysis is produced from
an ordered table of word-ending defaults.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Optional, TextIO, Tuple, Union

from morfo.errors import LoadError
from morfo.features import FeatureSet, Mood, Pos
from morfo.lexicon import Lexicon, normalize
from morfo.rules import MorphRule, RuleTable, apply_rule, expand_entry


class Provenance(str, Enum):
    DICTIONARY = "dictionary"
    DEFAULT_FALLBACK = "default_fallback"
    IRREGULAR_TABLE = "irregular_table"


@dataclass(frozen=True)
class Analysis:
    surface: str
    lemma: str
    rule_id: Optional[int]
    features: FeatureSet
    provenance: Provenance


@dataclass(frozen=True)
class DefaultRow:
    ending: str  # "*" matches any word
    features: FeatureSet


_DEFAULT_COLUMNS = ("ending", "pos", "gender", "number", "person", "mood", "tense", "animate")


def load_default_table(source: Union[TextIO, Iterable[str]]) -> List[DefaultRow]:
    """Load the ending-default TSV; rows are kept longest-ending-first."""
    header = None
    rows: List[DefaultRow] = []
    for line_no, raw in enumerate(source, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        cells = [c.strip() for c in line.split("\t")]
        if header is None:
            header = [c.lower().replace(" ", "_") for c in cells]
            unknown = [c for c in header if c not in _DEFAULT_COLUMNS]
            if unknown:
                raise LoadError(f"unknown column name(s): {', '.join(unknown)}", line_no)
            continue
        if len(cells) < len(header):
            cells = cells + [""] * (len(header) - len(cells))
        row = dict(zip(header, cells))
        ending = normalize(row.get("ending", ""))
        if not ending:
            raise LoadError("empty ending cell (use '*' for the catch-all row)", line_no)
        try:
            features = FeatureSet.from_cells(row)
        except ValueError as exc:
            raise LoadError(str(exc), line_no) from None
        rows.append(DefaultRow(ending=ending, features=features))
    if header is None:
        raise LoadError("default table has no header row")
    rows.sort(key=lambda r: -len(r.ending) if r.ending != "*" else 1)
    return rows


class Analyzer:
    """Feature extraction over a lexicon and rule table.

    Thread-safe: memo insertion is guarded by a lock, and results are
    independent of interleaving (the memo only ever caches what a cold run
    would compute for the same word).
    """

    def __init__(self, lexicon: Lexicon, rules: RuleTable, defaults: List[DefaultRow]):
        self.lexicon = lexicon
        self.rules = rules
        self.defaults = defaults
        self._lock = threading.Lock()
        # surface form -> [(lemma, rule_id, features)], grown one first letter at a time
        self._form_memo: Dict[str, List[Tuple[str, int, FeatureSet]]] = {}
        self._done_letters: set = set()
        self._irregular = self._build_irregular_table()

    # -- irregular-form table -------------------------------------------------

    def _build_irregular_table(self) -> Dict[str, List[Tuple[str, int, FeatureSet]]]:
        """Eagerly expand rules that replace a whole root and change its first letter."""
        entries_by_flag: Dict[str, list] = {}
        for entry in self.lexicon:
            for flag in entry.flags:
                entries_by_flag.setdefault(flag, []).append(entry)
        table: Dict[str, List[Tuple[str, int, FeatureSet]]] = {}
        for rule in self.rules.rules:
            if rule.pattern.context_len != 0 or rule.pattern.replaced_len == 0:
                continue
            for entry in entries_by_flag.get(rule.flag, ()):
                if len(entry.root) != rule.pattern.replaced_len:
                    continue
                form = apply_rule(entry.root, rule)
                if form and form[:1] != entry.root[:1]:
                    table.setdefault(form, []).append((entry.root, rule.rule_id, rule.features))
        return table

    # -- memoized neighbor search ---------------------------------------------

    def _ensure_letter(self, first: str) -> None:
        """Expand every root sharing ``first`` into the form memo, once.

        Walking the whole same-first-letter neighborhood (rather than stopping
        at the first matching root) keeps results complete and makes the memo
        observationally invisible: warm lookups return exactly what a cold
        search would.
        """
        if first in self._done_letters:
            return
        with self._lock:
            if first in self._done_letters:
                return
            memo_updates: Dict[str, List[Tuple[str, int, FeatureSet]]] = {}
            for entry in self.lexicon.neighbor_roots(first):
                for form, rule_id, features in expand_entry(entry, self.rules):
                    memo_updates.setdefault(form, []).append((entry.root, rule_id, features))
            for form, hits in memo_updates.items():
                self._form_memo.setdefault(form, []).extend(hits)
            self._done_letters.add(first)

    def _dictionary_hits(self, surface: str) -> List[Tuple[str, int, FeatureSet]]:
        self._ensure_letter(surface[0])
        hits = list(self._form_memo.get(surface, ()))
        hits.sort(key=lambda h: (h[0], h[1]))
        return hits

    # -- fallback -------------------------------------------------------------

    def default_features(self, word: str, pos_hint: Optional[Pos] = None) -> FeatureSet:
        """Features from the ordered ending-default table (longest ending first)."""
        word = normalize(word)
        if len(word) <= 1 or not word.isalpha():
            return FeatureSet(pos=Pos.OTHER)
        passes: List[Iterable[DefaultRow]] = []
        if pos_hint is not None:
            passes.append([r for r in self.defaults if r.features.pos == pos_hint])
        passes.append(self.defaults)
        for rows in passes:
            for row in rows:
                if row.ending == "*" or word.endswith(row.ending):
                    return row.features
        return FeatureSet()

    # -- public API -----------------------------------------------------------

    def analyze(self, word: str, pos_hint: Optional[Pos] = None) -> List[Analysis]:
        """All dictionary analyses of ``word`` (POS-filtered when hinted), or one fallback."""
        surface = normalize(word)
        if not surface:
            raise ValueError("empty word")
        results: List[Analysis] = []
        seen = set()
        for lemma, rule_id, features in self._irregular.get(surface, ()):
            if (lemma, rule_id) not in seen:
                seen.add((lemma, rule_id))
                results.append(Analysis(surface, lemma, rule_id, features, Provenance.IRREGULAR_TABLE))
        if surface.isalpha():
            for lemma, rule_id, features in self._dictionary_hits(surface):
                if (lemma, rule_id) not in seen:
                    seen.add((lemma, rule_id))
                    results.append(Analysis(surface, lemma, rule_id, features, Provenance.DICTIONARY))
        if pos_hint is not None:
            results = [a for a in results if a.features.pos == pos_hint]
        if not results:
            results = [Analysis(surface, surface, None,
                                self.default_features(surface, pos_hint),
                                Provenance.DEFAULT_FALLBACK)]
        return results

    def preferred_analysis(self, word: str, pos_hint: Optional[Pos] = None) -> Analysis:
        """One analysis under the documented preference order."""
        results = self.analyze(word, pos_hint)
        if len(results) == 1:
            return results[0]
        surface = results[0].surface
        nominal_ending = surface.endswith(("o", "a", "os", "as"))

        def rank(a: Analysis):
            # pos_hint conformance is already enforced by analyze(); dictionary
            # readings outrank fallback by construction (fallback never mixes).
            if nominal_ending and a.features.pos == Pos.NOUN:
                shape = 0
            elif nominal_ending and a.features.mood == Mood.PARTICIPLE:
                shape = 2
            else:
                shape = 1
            return (shape, a.rule_id if a.rule_id is not None else 1 << 30, a.lemma)

        return min(results, key=rank)

    def memo_size(self) -> int:
        return len(self._form_memo)
