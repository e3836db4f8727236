"""Enclitic pronoun detachment for imperative, infinitive, and gerund verb forms.

Spanish attaches object pronouns to these verb forms (dame = da + me,
dámelo = da + me + lo), sometimes adding a written accent to preserve stress.
The splitter greedily strips up to two trailing pronouns and accepts a split
only when the remaining part (accented or de-accented) analyzes as a
dictionary verb in one of the three hosting moods.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, TextIO, Tuple, Union

from morfo.analyzer import Analyzer, Provenance
from morfo.errors import LoadError
from morfo.features import FeatureSet, Mood, Pos
from morfo.lexicon import normalize

HOST_MOODS = (Mood.IMPERATIVE, Mood.INFINITIVE, Mood.GERUND)

_DEACCENT = str.maketrans("áéíóú", "aeiou")


def strip_stress_accents(text: str) -> str:
    """Remove acute accents from vowels (ñ is untouched)."""
    return text.translate(_DEACCENT)


def load_pronoun_table(source: Union[TextIO, Iterable[str]]) -> Dict[str, FeatureSet]:
    """Load the clitic pronoun TSV: pronoun, person, number, gender."""
    header = None
    table: Dict[str, FeatureSet] = {}
    for line_no, raw in enumerate(source, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        cells = [c.strip() for c in line.split("\t")]
        if header is None:
            header = [c.lower() for c in cells]
            expected = ["pronoun", "person", "number", "gender"]
            if header != expected:
                raise LoadError(f"expected columns {expected}, got {header}", line_no)
            continue
        if len(cells) < len(header):
            cells = cells + [""] * (len(header) - len(cells))
        row = dict(zip(header, cells))
        pronoun = normalize(row["pronoun"])
        if not pronoun:
            raise LoadError("empty pronoun cell", line_no)
        try:
            features = FeatureSet.from_cells({"pos": "pronoun", **{k: row[k] for k in ("person", "number", "gender")}})
        except ValueError as exc:
            raise LoadError(str(exc), line_no) from None
        table[pronoun] = features
    if not table:
        raise LoadError("pronoun table is empty")
    return table


@dataclass(frozen=True)
class CliticSplit:
    verb_part: str
    clitics: tuple  # 0, 1, or 2 pronoun strings, in surface order
    pronoun_features: tuple  # FeatureSet per clitic

    @property
    def is_split(self) -> bool:
        return bool(self.clitics)


class CliticSplitter:
    def __init__(self, analyzer: Analyzer, pronoun_table: Dict[str, FeatureSet]):
        self.analyzer = analyzer
        self.pronouns = dict(pronoun_table)
        # longest first so that e.g. -los wins over -os
        self._ordered = sorted(self.pronouns, key=len, reverse=True)

    def _validates_as_host(self, verb_part: str) -> bool:
        if not verb_part:
            return False
        for analysis in self.analyzer.analyze(verb_part, pos_hint=Pos.VERB):
            if analysis.provenance is Provenance.DEFAULT_FALLBACK:
                continue
            if analysis.features.mood in HOST_MOODS:
                return True
        return False

    def _candidates(self, token: str):
        """Candidate (base, clitics) splits, longer clitic sequences first."""
        for last in self._ordered:
            if not token.endswith(last) or len(token) <= len(last):
                continue
            rest = token[:-len(last)]
            for inner in self._ordered:
                if rest.endswith(inner) and len(rest) > len(inner):
                    yield rest[:-len(inner)], (inner, last)
            yield rest, (last,)

    def split_clitics(self, token: str) -> CliticSplit:
        """Split trailing pronouns off ``token``; unsplit when no variant validates."""
        surface = normalize(token)
        for base, clitics in self._candidates(surface):
            for verb_part in self._verb_variants(base):
                if self._validates_as_host(verb_part):
                    features = tuple(self.pronouns[c] for c in clitics)
                    return CliticSplit(verb_part, clitics, features)
        return CliticSplit(surface, (), ())

    @staticmethod
    def _verb_variants(base: str) -> List[str]:
        plain = strip_stress_accents(base)
        return [base] if plain == base else [base, plain]
