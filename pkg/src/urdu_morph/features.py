"""Typed inflectional features and the per-class form enumerations.

Enumeration orders are frozen: exports, index ordering and tests depend on
them.  Nouns iterate (Sg,Nom),(Sg,Obl),(Sg,Voc),(Pl,Nom),(Pl,Obl),(Pl,Voc);
adjectives gender-major then number then case; verbs list all finite cells
(causation level, then tense, person, number, gender) followed by the twelve
non-finite cells (Inf, Inf_Fem, Inf_Obl, Root, each at Base/Caus1/Caus2).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class Case(enum.Enum):
    Nom = "Nom"
    Obl = "Obl"
    Voc = "Voc"


class Number(enum.Enum):
    Sg = "Sg"
    Pl = "Pl"


class Gender(enum.Enum):
    Masc = "Masc"
    Fem = "Fem"


class Person(enum.Enum):
    Pers1 = "Pers1"
    Pers2Casual = "Pers2Casual"
    Pers2Familiar = "Pers2Familiar"
    Pers2Respect = "Pers2Respect"
    Pers3 = "Pers3"


class Tense(enum.Enum):
    Subj = "Subj"
    Perf = "Perf"
    Imperf = "Imperf"


class CausLevel(enum.Enum):
    Base = ""
    Caus1 = "Caus1"
    Caus2 = "Caus2"


@dataclass(frozen=True)
class NounForm:
    number: Number
    case: Case

    def tokens(self) -> tuple[str, ...]:
        return (self.number.value, self.case.value)

    @staticmethod
    def all() -> list["NounForm"]:
        return [NounForm(n, c) for n in Number for c in Case]


@dataclass(frozen=True)
class AdjForm:
    gender: Gender
    number: Number
    case: Case

    def tokens(self) -> tuple[str, ...]:
        return (self.gender.value, self.number.value, self.case.value)

    @staticmethod
    def all() -> list["AdjForm"]:
        return [AdjForm(g, n, c) for g in Gender for n in Number for c in Case]


# VerbForm kinds; non-finite token names follow the Inf/Inf_Fem/Inf_Obl/Root
# analysis-tag convention, with a Caus1_/Caus2_ prefix at causative levels.
_NONFINITE_TAG = {
    "inf": "Inf",
    "inf_fem": "Inf_Fem",
    "inf_obl": "Inf_Obl",
    "root": "Root",
}


@dataclass(frozen=True)
class VerbForm:
    kind: str  # "finite" | "inf" | "inf_fem" | "inf_obl" | "root"
    level: CausLevel
    tense: Tense | None = None
    person: Person | None = None
    number: Number | None = None
    gender: Gender | None = None

    def tokens(self) -> tuple[str, ...]:
        if self.kind == "finite":
            toks = (self.tense.value, self.person.value,
                    self.number.value, self.gender.value)
            if self.level is CausLevel.Base:
                return toks
            return (self.level.value,) + toks
        tag = _NONFINITE_TAG[self.kind]
        if self.level is CausLevel.Base:
            return (tag,)
        return ("%s_%s" % (self.level.value, tag),)

    @staticmethod
    def finite(level, tense, person, number, gender) -> "VerbForm":
        return VerbForm("finite", level, tense, person, number, gender)

    @staticmethod
    def all() -> list["VerbForm"]:
        forms = [
            VerbForm.finite(l, t, p, n, g)
            for l in CausLevel for t in Tense for p in Person
            for n in Number for g in Gender
        ]
        for kind in ("inf", "inf_fem", "inf_obl", "root"):
            forms.extend(VerbForm(kind, l) for l in CausLevel)
        return forms


@dataclass(frozen=True)
class ClosedForm:
    """Feature cell of a closed-class entry: literal tokens from the data file."""

    feature_tokens: tuple[str, ...]

    def tokens(self) -> tuple[str, ...]:
        return self.feature_tokens


@dataclass(frozen=True)
class AdvForm:
    """Adverbs do not inflect; single featureless cell."""

    def tokens(self) -> tuple[str, ...]:
        return ()

    @staticmethod
    def all() -> list["AdvForm"]:
        return [AdvForm()]
