"""The five-letter burger stack machine.

Words are plain Python strings over the alphabet H, C, h, c, F:

    H  produce a hamburger (push)
    C  produce a cheeseburger (push)
    h  order a hamburger (pop the topmost unmatched hamburger)
    c  order a cheeseburger (pop the topmost unmatched cheeseburger)
    F  fresh order (pop the topmost burger, whatever its type)

A word is perfect when every order is fulfilled and the stack ends empty.
All positions in this module are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ImperfectWordError, InvalidInputError

HAMBURGER = "H"
CHEESEBURGER = "C"
HAM_ORDER = "h"
CHEESE_ORDER = "c"
FRESH_ORDER = "F"

ALPHABET = "HChcF"
PRODUCE_LETTERS = "HC"
ORDER_LETTERS = "hcF"


@dataclass(frozen=True)
class StackState:
    """Burger stack contents, bottom to top, as 'H'/'C' characters."""

    stack: tuple[str, ...] = ()

    @property
    def size(self) -> int:
        """Burgers minus orders so far (the u coordinate)."""
        return len(self.stack)

    @property
    def discrepancy(self) -> int:
        """Unmatched hamburgers minus unmatched cheeseburgers (the v coordinate)."""
        return 2 * self.stack.count(HAMBURGER) - len(self.stack)

    @property
    def open_hamburgers(self) -> int:
        return self.stack.count(HAMBURGER)

    @property
    def open_cheeseburgers(self) -> int:
        return self.stack.count(CHEESEBURGER)

    def top(self) -> str | None:
        return self.stack[-1] if self.stack else None


def step(state: StackState, letter: str) -> StackState:
    """Apply one letter to a stack state, returning the new state.

    Raises ImperfectWordError (position -1; callers know the position) when an
    order has no fulfilling burger.
    """
    stack = state.stack
    if letter == HAMBURGER or letter == CHEESEBURGER:
        return StackState(stack + (letter,))
    if letter == FRESH_ORDER:
        if not stack:
            raise ImperfectWordError(-1, "fresh order on empty stack")
        return StackState(stack[:-1])
    if letter == HAM_ORDER:
        want = HAMBURGER
    elif letter == CHEESE_ORDER:
        want = CHEESEBURGER
    else:
        raise InvalidInputError(f"letter {letter!r} not in alphabet {ALPHABET!r}")
    for i in range(len(stack) - 1, -1, -1):
        if stack[i] == want:
            return StackState(stack[:i] + stack[i + 1:])
    raise ImperfectWordError(-1, f"no unmatched {want} for order {letter}")


@dataclass(frozen=True)
class MatchPairing:
    """Pairing between order positions and the burger positions they consume.

    match[i] is the producing position for the order at i; inverse is the
    reverse map.  f_matches lists (fresh order position, matched burger
    position) pairs in word order.
    """

    match: dict[int, int]
    inverse: dict[int, int] = field(default_factory=dict)
    f_matches: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if not self.inverse:
            object.__setattr__(self, "inverse", {v: k for k, v in self.match.items()})


def validate(word: str) -> MatchPairing:
    """Run the stack machine over the word; return the full pairing.

    Raises ImperfectWordError at the first failing position (an unfulfillable
    order), or at position len(word) when the stack ends nonempty.
    """
    ham: list[int] = []     # positions of unmatched hamburgers, bottom to top
    cheese: list[int] = []
    match: dict[int, int] = {}
    f_matches: list[tuple[int, int]] = []
    for i, letter in enumerate(word):
        if letter == HAMBURGER:
            ham.append(i)
        elif letter == CHEESEBURGER:
            cheese.append(i)
        elif letter == HAM_ORDER:
            if not ham:
                raise ImperfectWordError(i, "hamburger order with no unmatched hamburger")
            match[i] = ham.pop()
        elif letter == CHEESE_ORDER:
            if not cheese:
                raise ImperfectWordError(i, "cheeseburger order with no unmatched cheeseburger")
            match[i] = cheese.pop()
        elif letter == FRESH_ORDER:
            if not ham and not cheese:
                raise ImperfectWordError(i, "fresh order on empty stack")
            # the overall top is the latest-produced unmatched burger
            if ham and (not cheese or ham[-1] > cheese[-1]):
                match[i] = ham.pop()
            else:
                match[i] = cheese.pop()
            f_matches.append((i, match[i]))
        else:
            raise InvalidInputError(f"letter {letter!r} not in alphabet {ALPHABET!r}")
    if ham or cheese:
        raise ImperfectWordError(len(word), "stack nonempty at end")
    return MatchPairing(match=match, f_matches=tuple(f_matches))


def is_perfect(word: str) -> bool:
    try:
        validate(word)
    except ImperfectWordError:
        return False
    return True


def classify_f_matches(word: str, pairing: MatchPairing) -> tuple[int, int]:
    """Count fresh orders by match type: (matching cheeseburgers, matching hamburgers)."""
    n_cheese = sum(1 for _, b in pairing.f_matches if word[b] == CHEESEBURGER)
    return n_cheese, len(pairing.f_matches) - n_cheese


@dataclass(frozen=True)
class LoopRecord:
    """Length and area of the loop closed by one fresh order.

    ell counts h-orders strictly between the matched pair that are fulfilled
    by hamburgers produced before the fresh cheeseburger; m is half the count
    of the other intervening letters.  length = ell + 1 and
    area = 1 + ell + 2*m, so area >= length and area == length (mod 2).
    """

    f_position: int
    fresh_burger_position: int
    length: int
    area: int
    ell: int
    m: int


def loop_stats_from_word(word: str, pairing: MatchPairing) -> list[LoopRecord]:
    """One LoopRecord per fresh order; requires every F to match a cheeseburger."""
    records = []
    for b, a in pairing.f_matches:
        if word[a] != CHEESEBURGER:
            raise InvalidInputError(
                f"fresh order at {b} matches a hamburger; loop statistics undefined")
        ell = sum(1 for t in range(a + 1, b)
                  if word[t] == HAM_ORDER and pairing.match[t] < a)
        two_m = (b - a - 1) - ell
        assert two_m % 2 == 0, (word, a, b)
        records.append(LoopRecord(
            f_position=b, fresh_burger_position=a,
            length=ell + 1, area=1 + ell + two_m, ell=ell, m=two_m // 2))
    return records


def is_double_excursion(word: str) -> bool:
    """Fast perfection test for F-free words.

    With no fresh orders the stack order is irrelevant: the word is perfect
    iff each type's produce/order counts form a nonnegative excursion ending
    at zero.
    """
    x = y = 0
    for letter in word:
        if letter == HAMBURGER:
            x += 1
        elif letter == HAM_ORDER:
            x -= 1
            if x < 0:
                return False
        elif letter == CHEESEBURGER:
            y += 1
        elif letter == CHEESE_ORDER:
            y -= 1
            if y < 0:
                return False
        elif letter == FRESH_ORDER:
            raise InvalidInputError("is_double_excursion requires an F-free word")
        else:
            raise InvalidInputError(f"letter {letter!r} not in alphabet {ALPHABET!r}")
    return x == 0 and y == 0


def read_words(lines) -> list[str]:
    """Parse the word text format: one word per line, '#' lines ignored."""
    words = []
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        bad = set(line) - set(ALPHABET)
        if bad:
            raise InvalidInputError(f"invalid letters {sorted(bad)} in word {line!r}")
        words.append(line)
    return words
