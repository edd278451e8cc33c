"""Reduced words in free groups of finite rank.

Words are immutable and every operation is a pure function, so the whole
module is safe for unrestricted concurrent use.  A word carries the rank
of its ambient free group; operations on words of different ranks are
rejected instead of silently coerced (use :func:`embed` to move a word
into a larger group explicitly).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

__all__ = [
    "Letter",
    "Word",
    "RankMismatchError",
    "WordParseError",
    "empty",
    "gen",
    "reduce",
    "mul",
    "inv",
    "conj",
    "power",
    "ab_vector",
    "embed",
    "substitute",
    "cyclic_reduce",
    "parse_word",
    "format_word",
]


class RankMismatchError(ValueError):
    """Operands live in free groups of different ranks."""


class WordParseError(ValueError):
    """Malformed word text; ``position`` is the character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"char {position}: {message}")
        self.position = position


class Letter(NamedTuple):
    """A generator (sign +1) or inverse generator (sign -1); 1-based index."""

    index: int
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.index, -self.sign)


def _check_letter(rank: int, let: Letter) -> None:
    if let.sign not in (1, -1):
        raise ValueError(f"letter sign must be +1 or -1, got {let.sign}")
    if not 1 <= let.index <= rank:
        raise ValueError(f"generator index {let.index} out of range for rank {rank}")


@dataclass(frozen=True)
class Word:
    """A freely reduced word: no adjacent pair cancels, all indices <= rank."""

    rank: int
    letters: tuple[Letter, ...]

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError(f"rank must be positive, got {self.rank}")
        prev = None
        for let in self.letters:
            _check_letter(self.rank, let)
            if prev is not None and prev.index == let.index and prev.sign == -let.sign:
                raise ValueError("letter sequence is not freely reduced")
            prev = let

    def __len__(self) -> int:
        return len(self.letters)

    def __repr__(self) -> str:
        return f"Word({self.rank}, {format_word(self)!r})"


def empty(rank: int) -> Word:
    return Word(rank, ())


def gen(rank: int, index: int, sign: int = 1) -> Word:
    """The one-letter word a_index, or its inverse for sign -1."""
    return Word(rank, (Letter(index, sign),))


def _push(stack: list[Letter], let: Letter) -> None:
    if stack and stack[-1].index == let.index and stack[-1].sign == -let.sign:
        stack.pop()
    else:
        stack.append(let)


def reduce(rank: int, raw: Iterable[Letter | tuple[int, int]]) -> Word:
    """Freely reduce a raw letter sequence in a single stack pass.

    Idempotent: reducing an already reduced sequence returns it unchanged.
    """
    stack: list[Letter] = []
    for item in raw:
        let = item if isinstance(item, Letter) else Letter(*item)
        _check_letter(rank, let)
        _push(stack, let)
    return Word(rank, tuple(stack))


def _same_rank(u: Word, v: Word) -> int:
    if u.rank != v.rank:
        raise RankMismatchError(f"rank {u.rank} vs rank {v.rank}")
    return u.rank


def mul(u: Word, v: Word) -> Word:
    """Product u*v, reduced.  len(mul(u,v)) <= len(u)+len(v)."""
    rank = _same_rank(u, v)
    stack = list(u.letters)
    for let in v.letters:
        _push(stack, let)
    return Word(rank, tuple(stack))


def inv(w: Word) -> Word:
    """Inverse word: reversed letters with negated signs."""
    return Word(w.rank, tuple(let.inverse() for let in reversed(w.letters)))


def conj(w: Word, g: Word) -> Word:
    """Conjugate g * w * g^-1."""
    return mul(mul(g, w), inv(g))


def power(w: Word, k: int) -> Word:
    """k-th power of w (k may be negative or zero)."""
    if k == 0:
        return empty(w.rank)
    base = w if k > 0 else inv(w)
    stack: list[Letter] = []
    for _ in range(abs(k)):
        for let in base.letters:
            _push(stack, let)
    return Word(w.rank, tuple(stack))


def ab_vector(w: Word) -> tuple[int, ...]:
    """Image in Z^rank: entry i is the exponent sum of a_{i+1}."""
    out = [0] * w.rank
    for let in w.letters:
        out[let.index - 1] += let.sign
    return tuple(out)


def embed(w: Word, new_rank: int) -> Word:
    """Reinterpret w inside a free group of a different rank.

    Every letter of w must fit in the new rank; shrinking below the
    largest used index is rejected.
    """
    for let in w.letters:
        if let.index > new_rank:
            raise ValueError(
                f"word uses generator a{let.index}, cannot embed into rank {new_rank}"
            )
    return Word(new_rank, w.letters)


def substitute(w: Word, images: Sequence[Word]) -> Word:
    """Homomorphic image of w under a_i -> images[i-1], reduced.

    The images fix the target rank and must all agree on it.
    """
    if len(images) != w.rank:
        raise ValueError(f"need {w.rank} generator images, got {len(images)}")
    target = images[0].rank
    for img in images:
        if img.rank != target:
            raise RankMismatchError("generator images have mixed ranks")
    stack: list[Letter] = []
    for let in w.letters:
        img = images[let.index - 1].letters
        if let.sign == 1:
            for x in img:
                _push(stack, x)
        else:
            for x in reversed(img):
                _push(stack, x.inverse())
    return Word(target, tuple(stack))


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Split w = u * core * u^-1 with core cyclically reduced.

    Returns (core, u).  For a reduced word this strips matching
    first/last letters; the stripped prefix is the witness u.
    """
    letters = w.letters
    i, j = 0, len(letters) - 1
    while i < j and letters[i] == letters[j].inverse():
        i += 1
        j -= 1
    return Word(w.rank, letters[i : j + 1]), Word(w.rank, letters[:i])


_TOKEN = re.compile(r"([aA])(\d+)(?:\^(-?\d+))?\Z")


def parse_word(text: str, rank: int) -> Word:
    """Parse whitespace-separated tokens like ``a1 a2^-1 A3`` into a Word.

    Uppercase ``A3`` is shorthand for ``a3^-1``; ``1`` denotes the empty
    word.  Indices must not exceed the rank.  Raises WordParseError with
    the character position of the first bad token.
    """
    raw: list[Letter] = []
    for m in re.finditer(r"\S+", text):
        tok = m.group(0)
        if tok == "1":
            continue
        mt = _TOKEN.match(tok)
        if mt is None:
            raise WordParseError(f"bad token {tok!r}", m.start())
        idx = int(mt.group(2))
        exp = 1 if mt.group(3) is None else int(mt.group(3))
        if mt.group(1) == "A":
            exp = -exp
        if not 1 <= idx <= rank:
            raise WordParseError(
                f"generator a{idx} out of range for rank {rank}", m.start()
            )
        sign = 1 if exp > 0 else -1
        raw.extend([Letter(idx, sign)] * abs(exp))
    return reduce(rank, raw)


def format_word(w: Word) -> str:
    """Render a word in the text grammar; parse_word(format_word(w)) == w.

    Maximal runs of one letter are compressed to ``a1^3`` style tokens;
    the empty word renders as ``1``.
    """
    if not w.letters:
        return "1"
    parts: list[str] = []
    i = 0
    letters = w.letters
    while i < len(letters):
        j = i
        while j + 1 < len(letters) and letters[j + 1] == letters[i]:
            j += 1
        count = (j - i + 1) * letters[i].sign
        if count == 1:
            parts.append(f"a{letters[i].index}")
        else:
            parts.append(f"a{letters[i].index}^{count}")
        i = j + 1
    return " ".join(parts)
