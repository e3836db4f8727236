"""The morphological rule table: suffix substitutions with feature columns.

A rule's stem-ending pattern is a restricted regular expression over the end
of a root word: literal letters, character classes ``[...]``, negated classes
``[^...]``, and an optional leading context marker ``(?<=...)`` whose match is
kept rather than replaced. Nothing else (no alternation, no quantifiers), so
every pattern has a fixed length and reverse application stays tractable.
"""

from __future__ import annotations

import csv
import logging
import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, NamedTuple, Optional, TextIO, Tuple, Union

from morfo.errors import LoadError
from morfo.features import FeatureSet
from morfo.lexicon import LexEntry

logger = logging.getLogger(__name__)

COLUMNS = ("flag", "stem_ending", "morph_ending", "pos", "gender", "number",
           "person", "mood", "tense", "animate")

_CONTEXT_MARK = "(?<="


def _tokenize(src: str, what: str) -> List[str]:
    """Split a pattern body into single-character-match tokens."""
    tokens = []
    i = 0
    while i < len(src):
        ch = src[i]
        if ch == "[":
            j = src.find("]", i)
            if j < 0:
                raise ValueError(f"unclosed class in {what} {src!r}")
            inner = src[i + 1:j]
            body = inner[1:] if inner.startswith("^") else inner
            if not body or not all(c.isalpha() for c in body):
                raise ValueError(f"invalid class {src[i:j + 1]!r} in {what} {src!r}")
            tokens.append(src[i:j + 1])
            i = j + 1
        elif ch.isalpha():
            tokens.append(ch)
            i += 1
        else:
            raise ValueError(f"unsupported character {ch!r} in {what} {src!r}")
    return tokens


def _token_regex(token: str) -> str:
    return token if token.startswith("[") else re.escape(token)


@dataclass(frozen=True)
class StemPattern:
    """Compiled stem-ending pattern, split into kept context and replaced part."""

    source: str
    context: tuple
    replaced: tuple
    regex: "re.Pattern" = field(compare=False, repr=False, default=None)

    @property
    def context_len(self) -> int:
        return len(self.context)

    @property
    def replaced_len(self) -> int:
        return len(self.replaced)


def compile_stem_pattern(source: str) -> StemPattern:
    src = source.strip()
    context_src = ""
    if src.startswith(_CONTEXT_MARK):
        end = src.find(")")
        if end < 0:
            raise ValueError(f"unclosed context marker in {source!r}")
        context_src = src[len(_CONTEXT_MARK):end]
        src = src[end + 1:]
        if _CONTEXT_MARK in src:
            raise ValueError(f"context marker must be leading and unique in {source!r}")
    context = tuple(_tokenize(context_src, "context"))
    replaced = tuple(_tokenize(src, "pattern"))
    regex = re.compile(
        "".join(_token_regex(t) for t in context)
        + "(" + "".join(_token_regex(t) for t in replaced) + ")$"
    )
    return StemPattern(source=source.strip(), context=context, replaced=replaced, regex=regex)


@dataclass(frozen=True)
class MorphRule:
    rule_id: int
    flag: str
    stem_ending: str
    morph_ending: str
    features: FeatureSet
    pattern: StemPattern = field(compare=False, repr=False)


class RuleTable:
    """Rules in file order, bucketed by flag."""

    def __init__(self, rules: List[MorphRule]):
        self.rules = list(rules)
        self.by_flag: Dict[str, List[MorphRule]] = {}
        for rule in self.rules:
            self.by_flag.setdefault(rule.flag, []).append(rule)
        self.by_id = {r.rule_id: r for r in self.rules}

    def __len__(self) -> int:
        return len(self.rules)


def _normalize_header(name: str) -> str:
    return name.strip().lower().replace(" ", "_")


def load_rules(source: Union[TextIO, Iterable[str]]) -> RuleTable:
    """Load the tab-separated rule table; raises LoadError naming the bad row."""
    header: Optional[List[str]] = None
    rules: List[MorphRule] = []
    rule_id = 0
    for line_no, raw in enumerate(source, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        cells = line.split("\t")
        if header is None:
            header = [_normalize_header(c) for c in cells]
            unknown = [c for c in header if c not in COLUMNS]
            if unknown:
                raise LoadError(f"unknown column name(s): {', '.join(unknown)}", line_no)
            missing = [c for c in COLUMNS if c not in header]
            if missing:
                raise LoadError(f"missing column(s): {', '.join(missing)}", line_no)
            continue
        if len(cells) < len(header):
            cells = cells + [""] * (len(header) - len(cells))
        row = {name: cells[i].strip() for i, name in enumerate(header)}
        flag = row["flag"]
        if len(flag) != 1:
            raise LoadError(f"flag must be a single character, got {flag!r}", line_no)
        stem = row["stem_ending"]
        if stem == "-":
            stem = ""
        morph = row["morph_ending"]
        if morph == "-":
            morph = ""
        try:
            pattern = compile_stem_pattern(stem)
            features = FeatureSet.from_cells(row)
        except ValueError as exc:
            raise LoadError(str(exc), line_no) from None
        rule_id += 1
        rules.append(MorphRule(
            rule_id=rule_id,
            flag=flag,
            stem_ending=pattern.source,
            morph_ending=morph,
            features=features,
            pattern=pattern,
        ))
    if header is None:
        raise LoadError("rule table has no header row")
    return RuleTable(rules)


def apply_rule(root: str, rule: MorphRule) -> Optional[str]:
    """Apply one rule forward; None when the root's ending does not match."""
    m = rule.pattern.regex.search(root)
    if m is None:
        return None
    return root[:m.start(1)] + rule.morph_ending


class ExpandedForm(NamedTuple):
    form: str
    rule_id: int
    features: FeatureSet


def expand_entry(entry: LexEntry, table: RuleTable) -> List[ExpandedForm]:
    """All forms produced by the entry's licensed rules, in flag then rule order."""
    out: List[ExpandedForm] = []
    for flag in entry.flags:
        bucket = table.by_flag.get(flag)
        if bucket is None:
            logger.warning("entry %r: unknown flag %r skipped", entry.root, flag)
            continue
        for rule in bucket:
            form = apply_rule(entry.root, rule)
            if form is not None:
                out.append(ExpandedForm(form, rule.rule_id, rule.features))
    return out


def reverse_candidates(surface: str, entry: LexEntry, table: RuleTable) -> List[MorphRule]:
    """Licensed rules of ``entry`` whose application to its root yields ``surface``."""
    out = []
    for flag in entry.flags:
        for rule in table.by_flag.get(flag, ()):
            if apply_rule(entry.root, rule) == surface:
                out.append(rule)
    return out
