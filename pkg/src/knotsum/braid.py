"""Braid words, writhe, closures and Markov moves.

A braid word on n strands is a sequence of nonzero integers: the letter k
with 1 <= k <= n-1 denotes the positive elementary crossing between strands
k and k+1, and -k denotes its inverse.  The writhe is the exponent sum.
Markov's theorem says two braids have isotopic closures iff they are
related by conjugation and (de)stabilisation; seeded random sequences of
those moves drive the invariance test suites.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field


class BraidSyntaxError(ValueError):
    """Malformed braid text: bad token or a zero letter."""


class BraidRangeError(ValueError):
    """A letter refers to a strand outside 1..n-1."""


@dataclass(frozen=True)
class BraidWord:
    """A word in the elementary braid generators of the n-strand braid group."""

    strands: int
    letters: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.strands < 1:
            raise BraidRangeError(f"strand count must be >= 1, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if letter == 0:
                raise BraidSyntaxError("letter 0 is not a braid generator")
            if abs(letter) > self.strands - 1:
                raise BraidRangeError(
                    f"letter {letter} out of range for {self.strands} strands")

    @property
    def writhe(self) -> int:
        return sum(1 if letter > 0 else -1 for letter in self.letters)

    def __len__(self):
        return len(self.letters)

    def to_text(self) -> str:
        return " ".join(str(letter) for letter in self.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-letter for letter in reversed(self.letters)))

    def permutation(self) -> tuple[int, ...]:
        """Underlying permutation: position i (0-based) of the bottom endpoints
        is sent to perm[i] at the top."""
        perm = list(range(self.strands))
        for letter in self.letters:
            i = abs(letter) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return tuple(perm)

    def is_knot_closure(self) -> bool:
        """True iff the closure is a single-component link (one permutation cycle)."""
        perm = self.permutation()
        seen = 0
        j = 0
        while True:
            seen += 1
            j = perm[j]
            if j == 0:
                break
        return seen == self.strands


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse whitespace-separated signed integers, e.g. ``"1 -2 1 -2"``."""
    letters = []
    for token in text.split():
        try:
            letter = int(token)
        except ValueError:
            raise BraidSyntaxError(f"bad braid token {token!r}") from None
        letters.append(letter)
    return BraidWord(strands, tuple(letters))


def writhe(b: BraidWord) -> int:
    return b.writhe


def extend_by_identity(b: BraidWord, k: int) -> BraidWord:
    """The same word regarded in the braid group on ``strands + k`` strands;
    the appended strands are never permuted."""
    if k < 0:
        raise ValueError(f"cannot extend by {k} strands")
    return BraidWord(b.strands + k, b.letters)


# ---------------------------------------------------------------------------
# Markov moves
# ---------------------------------------------------------------------------

def free_reduce(b: BraidWord) -> BraidWord:
    """Cancel adjacent pairs of mutually inverse letters until none remain."""
    letters = list(b.letters)
    changed = True
    while changed:
        changed = False
        for i in range(len(letters) - 1):
            if letters[i] == -letters[i + 1]:
                del letters[i:i + 2]
                changed = True
                break
    return BraidWord(b.strands, tuple(letters))


def conjugate(b: BraidWord, letter: int) -> BraidWord:
    return BraidWord(b.strands, (letter,) + b.letters + (-letter,))


def stabilize(b: BraidWord, sign: int) -> BraidWord:
    """Append sigma_n^(+-1) on a fresh strand (Markov stabilisation)."""
    if b.strands < 1 or sign not in (1, -1):
        raise ValueError("stabilisation needs sign +-1")
    return BraidWord(b.strands + 1, b.letters + (sign * b.strands,))


def _relation_rewrites(letters: tuple[int, ...]):
    """All single-spot rewrites by far commutation or the braid relation."""
    out = []
    for i in range(len(letters) - 1):
        a, b = letters[i], letters[i + 1]
        if abs(abs(a) - abs(b)) >= 2:
            out.append(letters[:i] + (b, a) + letters[i + 2:])
    for i in range(len(letters) - 2):
        a, b, c = letters[i:i + 3]
        if a == c and abs(abs(a) - abs(b)) == 1 and (a > 0) == (b > 0):
            out.append(letters[:i] + (b, a, b) + letters[i + 3:])
    return out


_MOVES = ("conjugate", "stabilize+", "stabilize-", "reduce", "relation")


def _markov_variants_logged(b: BraidWord, count: int, seed: int,
                            max_extra_strands: int = 3,
                            max_extra_length: int = 8):
    """Seeded Markov variants together with the list of moves applied.

    Closure-preserving by construction.  Strand count is capped at
    ``b.strands + max_extra_strands`` and word length at
    ``len(b) + max_extra_length`` to keep downstream state sums desk-sized.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    rng = random.Random(seed)
    variants = []
    for _ in range(count):
        word = b
        log = []
        for _ in range(rng.randint(1, 5)):
            move = rng.choice(_MOVES)
            if move == "conjugate":
                if word.strands < 2:
                    continue
                g = rng.randint(1, word.strands - 1) * rng.choice((1, -1))
                if len(word) + 2 > len(b) + max_extra_length:
                    continue
                word = conjugate(word, g)
            elif move in ("stabilize+", "stabilize-"):
                if (word.strands - b.strands >= max_extra_strands
                        or len(word) + 1 > len(b) + max_extra_length):
                    continue
                word = stabilize(word, 1 if move == "stabilize+" else -1)
            elif move == "reduce":
                word = free_reduce(word)
            else:
                options = _relation_rewrites(word.letters)
                if not options:
                    continue
                word = BraidWord(word.strands, rng.choice(options))
            log.append(move)
        variants.append((word, tuple(log)))
    return variants


def markov_variants(b: BraidWord, count: int, seed: int,
                    max_extra_strands: int = 3,
                    max_extra_length: int = 8) -> list[BraidWord]:
    """Deterministic list of braids whose closures are isotopic to that of b."""
    return [word for word, _ in _markov_variants_logged(
        b, count, seed, max_extra_strands, max_extra_length)]


# ---------------------------------------------------------------------------
# Knot tables (JSON Lines: {"name": ..., "strands": ..., "word": [...]})
# ---------------------------------------------------------------------------

def parse_knot_record(line: str):
    doc = json.loads(line)
    word = BraidWord(int(doc["strands"]), tuple(int(x) for x in doc["word"]))
    return str(doc["name"]), word


def read_knot_table(path) -> list[tuple[str, BraidWord]]:
    """Read a JSON-Lines knot table; blank lines are skipped."""
    records = []
    with open(path, "r", encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if line:
                records.append(parse_knot_record(line))
    return records


def knot_record_to_json(name: str, b: BraidWord) -> str:
    return json.dumps({"name": name, "strands": b.strands, "word": list(b.letters)})
