"""Cyclic-related group presentations: data model, validation and text I/O.

A cyclic relation of length t on generators ``x_{i_1}, ..., x_{i_t}``
(indices increasing) states that all cyclic rotations of the product
``x_{i_t}^{s_t} ... x_{i_1}^{s_1}`` coincide.  A presentation is
*cyclic-related* when every pair of generators lies in the support of
exactly one relation and two supports never share more than one generator.

Text format::

    # comment
    generators 7
    strict                       # optional: no implicit commutators
    relation 1 2 3
    relation 1 2 3 conj e ; e ; x4        # x3 conjugated by x4
    relation 2 5 conj x3 ; e

Without ``strict``, every pair not covered by a listed relation becomes a
length-2 conjugation-free relation (a plain commutator).
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import PresentationError, PresentationSyntaxError

Letter = tuple[int, int]  # (generator index, +1 or -1)


@dataclass(frozen=True)
class Word:
    """A word in the generators; the empty word is the identity ``e``."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        for gen, sign in self.letters:
            if gen < 1:
                raise PresentationError(f"generator index {gen} must be positive")
            if sign not in (1, -1):
                raise PresentationError(f"exponent {sign} must be +1 or -1")

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def generators(self) -> set[int]:
        return {gen for gen, _ in self.letters}

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return " ".join(f"x{g}" if s == 1 else f"x{g}^-1" for g, s in self.letters)


IDENTITY = Word()

_LETTER_RE = re.compile(r"x(\d+)(?:\^([+-]?1))?$")


def parse_word(text: str) -> Word:
    """Parse ``e`` or a product such as ``x3 x1^-1``."""
    tokens = text.split()
    if tokens == ["e"] or not tokens:
        if not tokens:
            raise PresentationError("empty conjugator; write 'e' for the identity")
        return IDENTITY
    letters = []
    for tok in tokens:
        m = _LETTER_RE.match(tok)
        if m is None:
            raise PresentationError(f"bad letter {tok!r}; expected x<i> or x<i>^-1")
        letters.append((int(m.group(1)), int(m.group(2) or 1)))
    return Word(tuple(letters))


@dataclass(frozen=True)
class CyclicRelation:
    """Cyclic relation on an increasing support; ``conjugators[j]`` acts on ``support[j]``."""

    support: tuple[int, ...]
    conjugators: tuple[Word, ...] = ()

    def __post_init__(self):
        support = tuple(self.support)
        object.__setattr__(self, "support", support)
        if not self.conjugators:
            object.__setattr__(self, "conjugators", (IDENTITY,) * len(support))
        else:
            object.__setattr__(self, "conjugators", tuple(self.conjugators))
        if len(support) < 2:
            raise PresentationError(f"relation {support} has length < 2")
        if any(a >= b for a, b in zip(support, support[1:])):
            raise PresentationError(f"support {support} is not strictly increasing")
        if len(self.conjugators) != len(support):
            raise PresentationError(
                f"relation {support} has {len(self.conjugators)} conjugators, expected {len(support)}"
            )

    @property
    def length(self) -> int:
        return len(self.support)

    @property
    def is_multiple(self) -> bool:
        return len(self.support) >= 3

    @property
    def is_conjugation_free(self) -> bool:
        return all(w.is_identity for w in self.conjugators)

    def pairs(self) -> Iterable[tuple[int, int]]:
        return combinations(self.support, 2)

    def sort_key(self) -> tuple:
        return (-len(self.support), self.support)


def canonical_order(relations: Iterable[CyclicRelation]) -> tuple[CyclicRelation, ...]:
    """Sort by length descending, then support lexicographically."""
    return tuple(sorted(relations, key=lambda r: (r.sort_key(), tuple(map(str, r.conjugators)))))


@dataclass(frozen=True)
class Presentation:
    """Generators ``x_1..x_n`` and cyclic relations, kept in canonical order.

    Build with :meth:`from_relations`, which checks index ranges and, in
    implicit mode, materializes commutators for uncovered pairs.
    """

    n: int
    relations: tuple[CyclicRelation, ...]
    implicit_commutators: bool = True

    @classmethod
    def from_relations(
        cls,
        n: int,
        relations: Iterable[CyclicRelation | Sequence[int]],
        implicit_commutators: bool = True,
    ) -> "Presentation":
        if n < 0:
            raise PresentationError("generator count must be non-negative")
        rels = [r if isinstance(r, CyclicRelation) else CyclicRelation(tuple(r)) for r in relations]
        for r in rels:
            used = set(r.support)
            for w in r.conjugators:
                used |= w.generators()
            bad = [g for g in used if not 1 <= g <= n]
            if bad:
                raise PresentationError(f"generator index {min(bad)} out of range 1..{n} in relation {r.support}")
        if implicit_commutators:
            covered = {pair for r in rels for pair in r.pairs()}
            rels += [CyclicRelation(pair) for pair in combinations(range(1, n + 1), 2) if pair not in covered]
        return cls(n, canonical_order(rels), implicit_commutators)

    @property
    def multiple_relations(self) -> tuple[CyclicRelation, ...]:
        return tuple(r for r in self.relations if r.is_multiple)


@dataclass(frozen=True)
class Violation:
    requirement: int  # 2 = pair coverage, 3 = overlap bound
    message: str
    relations: tuple[tuple[int, ...], ...] = ()
    pair: tuple[int, int] | None = None


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate(p: Presentation) -> ValidationReport:
    """Check pair coverage and the overlap bound; violations are returned, not raised."""
    violations: list[Violation] = []
    cover: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    for r in p.relations:
        for pair in r.pairs():
            cover.setdefault(pair, []).append(r.support)
    for pair in combinations(range(1, p.n + 1), 2):
        owners = cover.get(pair, [])
        if len(owners) == 0:
            violations.append(Violation(2, f"pair {set(pair)} lies in no relation", (), pair))
        elif len(owners) > 1:
            violations.append(
                Violation(2, f"pair {set(pair)} lies in {len(owners)} relations", tuple(owners), pair)
            )
    for r1, r2 in combinations(p.relations, 2):
        common = set(r1.support) & set(r2.support)
        if len(common) > 1:
            violations.append(
                Violation(
                    3,
                    f"relations {r1.support} and {r2.support} share {sorted(common)}",
                    (r1.support, r2.support),
                )
            )
    return ValidationReport(tuple(violations))


def is_conjugation_free(p: Presentation) -> bool:
    return all(r.is_conjugation_free for r in p.relations)


@dataclass(frozen=True)
class IncidenceData:
    """Relation supports of a presentation (or points of an arrangement), sorted."""

    n: int
    supports: tuple[tuple[int, ...], ...]
    conjugation_free: bool = True

    def __post_init__(self):
        object.__setattr__(self, "supports", tuple(sorted(tuple(sorted(s)) for s in self.supports)))

    def counts(self) -> dict[int, int]:
        """``{i: n_i}``, the number of supports of each size."""
        return dict(sorted(Counter(len(s) for s in self.supports).items()))

    @property
    def multiple_supports(self) -> tuple[tuple[int, ...], ...]:
        return tuple(s for s in self.supports if len(s) >= 3)

    def covers_all_pairs(self) -> bool:
        pairs = Counter(pair for s in self.supports for pair in combinations(s, 2))
        return len(pairs) == comb(self.n, 2) and all(c == 1 for c in pairs.values())

    def to_presentation(self) -> Presentation:
        return Presentation.from_relations(self.n, self.supports, implicit_commutators=False)


def incidence_of(p: Presentation) -> IncidenceData:
    return IncidenceData(p.n, tuple(r.support for r in p.relations), is_conjugation_free(p))


# -- text format -------------------------------------------------------------


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def parse_presentation(text: str, strict: bool | None = None) -> Presentation:
    """Parse the line-oriented presentation format.

    ``strict`` overrides the file's own ``strict`` directive when given.
    """
    n = None
    file_strict = False
    raw: list[tuple[int, CyclicRelation]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = _strip_comment(line)
        if not body.strip():
            continue
        col0 = len(body) - len(body.lstrip()) + 1
        tokens = body.split()
        head = tokens[0]
        if n is None and head != "generators":
            raise PresentationSyntaxError("first directive must be 'generators <n>'", lineno, col0)
        if head == "generators":
            if n is not None:
                raise PresentationSyntaxError("duplicate 'generators' directive", lineno, col0)
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise PresentationSyntaxError("expected 'generators <n>'", lineno, col0)
            n = int(tokens[1])
        elif head == "strict":
            if len(tokens) != 1:
                raise PresentationSyntaxError("'strict' takes no arguments", lineno, col0)
            file_strict = True
        elif head == "relation":
            raw.append((lineno, _parse_relation(body, lineno, n)))
        else:
            raise PresentationSyntaxError(f"unknown directive {head!r}", lineno, col0)
    if n is None:
        raise PresentationSyntaxError("missing 'generators <n>' directive", 1, 1)
    implicit = not (file_strict if strict is None else strict)
    return Presentation.from_relations(n, [r for _, r in raw], implicit_commutators=implicit)


def _parse_relation(body: str, lineno: int, n: int) -> CyclicRelation:
    head, sep, conj_part = body.partition(" conj ")
    if not sep and body.rstrip().endswith(" conj"):
        raise PresentationSyntaxError("'conj' needs a conjugator list", lineno, len(body.rstrip()))
    support: list[int] = []
    pos = body.index("relation") + len("relation")
    for m in re.finditer(r"\S+", head[pos:]):
        col = pos + m.start() + 1
        tok = m.group()
        if not tok.isdigit():
            raise PresentationSyntaxError(f"expected generator index, got {tok!r}", lineno, col)
        idx = int(tok)
        if not 1 <= idx <= n:
            raise PresentationSyntaxError(f"generator index {idx} out of range 1..{n}", lineno, col)
        if support and idx <= support[-1]:
            raise PresentationSyntaxError(
                f"support is not strictly increasing ({support[-1]} then {idx})", lineno, col
            )
        support.append(idx)
    if len(support) < 2:
        raise PresentationSyntaxError("a relation needs at least two generators", lineno, 1)
    conjugators: tuple[Word, ...] = ()
    if sep:
        col = len(head) + len(" conj ") + 1
        parts = conj_part.split(";")
        if len(parts) != len(support):
            raise PresentationSyntaxError(
                f"expected {len(support)} conjugators, got {len(parts)}", lineno, col
            )
        words = []
        for part in parts:
            try:
                w = parse_word(part)
            except PresentationError as exc:
                raise PresentationSyntaxError(str(exc), lineno, col) from None
            bad = [g for g in w.generators() if g > n]
            if bad:
                raise PresentationSyntaxError(f"generator index {bad[0]} out of range 1..{n}", lineno, col)
            words.append(w)
            col += len(part) + 1
        conjugators = tuple(words)
    return CyclicRelation(tuple(support), conjugators)


def format_presentation(p: Presentation) -> str:
    """Canonical text; ``parse_presentation(format_presentation(p)) == p``."""
    lines = [f"generators {p.n}"]
    if not p.implicit_commutators:
        lines.append("strict")
    for r in p.relations:
        line = "relation " + " ".join(map(str, r.support))
        if not r.is_conjugation_free:
            line += " conj " + " ; ".join(map(str, r.conjugators))
        lines.append(line)
    return "\n".join(lines) + "\n"


def read_presentation(path, strict: bool | None = None) -> Presentation:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read(), strict=strict)
