"""Freely reduced words in the generators of B_3, pi_1(M_{0,4}) and the five-point loops."""

from __future__ import annotations

import re
from dataclasses import dataclass

ALPHABETS = {
    "braid": ("g1", "g2"),
    "sigma": ("s1", "s2", "s3"),
    "xi": ("x1", "x2", "x3"),
    # Dehn twists of the 4-holed sphere, named by the circle gamma_ij
    "dehn": ("T23", "T13", "T12"),
}

ALIASES = {"g": "braid", "b": "braid", "M04": "sigma", "s": "sigma", "FIVE": "xi", "x": "xi"}

_TOKEN = re.compile(r"\s*([A-Za-z]+\d*)(?:\^\{?\s*([+-]?\d+)\s*\}?)?\s*\*?")


class WordSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _reduce(letters):
    out: list[list[int]] = []
    for gen, exp in letters:
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            out[-1][1] += exp
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([gen, exp])
    return tuple((g, e) for g, e in out)


@dataclass(frozen=True)
class Word:
    """Letters are (generator index starting at 1, nonzero exponent)."""

    alphabet: str
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        alpha = ALIASES.get(self.alphabet, self.alphabet)
        if alpha not in ALPHABETS:
            raise ValueError(f"unknown alphabet {self.alphabet!r}")
        size = len(ALPHABETS[alpha])
        for g, _ in self.letters:
            if not 1 <= g <= size:
                raise ValueError(f"generator index {g} out of range for {alpha}")
        object.__setattr__(self, "alphabet", alpha)
        object.__setattr__(self, "letters", _reduce(self.letters))

    @classmethod
    def gen(cls, alphabet: str, index: int, exp: int = 1) -> "Word":
        return cls(alphabet, ((index, exp),))

    @classmethod
    def parse(cls, text: str, alphabet: str) -> "Word":
        alpha = ALIASES.get(alphabet, alphabet)
        names = ALPHABETS.get(alpha)
        if names is None:
            raise ValueError(f"unknown alphabet {alphabet!r}")
        letters = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise WordSyntaxError(f"unexpected character {text[pos]!r}", pos)
            name = m.group(1)
            if name not in names:
                start = m.start(1)
                raise WordSyntaxError(f"unknown generator {name!r} for alphabet {alpha}", start)
            exp = int(m.group(2)) if m.group(2) is not None else 1
            letters.append((names.index(name) + 1, exp))
            pos = m.end()
        return cls(alpha, tuple(letters))

    def __mul__(self, other: "Word") -> "Word":
        if other.alphabet != self.alphabet:
            raise ValueError("cannot concatenate words over different alphabets")
        return Word(self.alphabet, self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(self.alphabet, tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        return Word(self.alphabet, base.letters * abs(n))

    def __len__(self):
        return sum(abs(e) for _, e in self.letters)

    def is_empty(self) -> bool:
        return not self.letters

    def exponent_sum(self) -> int:
        return sum(e for _, e in self.letters)

    def __str__(self):
        names = ALPHABETS[self.alphabet]
        return " ".join(names[g - 1] + (f"^{e}" if e != 1 else "") for g, e in self.letters)


def substitute(word: Word, images: dict[int, Word], target: str) -> Word:
    """Apply the homomorphism sending generator i to images[i]."""
    out = Word(target)
    for g, e in word.letters:
        out = out * (images[g] ** e)
    return out


def eliminate_s3(word: Word) -> Word:
    """Rewrite s3 as (s2 s1)^-1 in a sigma-word."""
    if word.alphabet != "sigma":
        raise ValueError("eliminate_s3 expects a sigma-word")
    s1, s2 = Word.gen("sigma", 1), Word.gen("sigma", 2)
    return substitute(word, {1: s1, 2: s2, 3: (s2 * s1).inverse()}, "sigma")
