"""Exact counting of perfect words.

Tree words are the F-free perfect words (their maps carry a spanning tree);
k-excess words additionally contain exactly k fresh orders, all fulfilled by
cheeseburgers.  All counts here are exact integers; no floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import InvalidInputError, ResourceLimitError
from . import words as W

# The exhaustive count walks stack profiles (2^n of them); past this order the
# state space is out of reach for the profile walk.
EXCESS_WORD_ORDER_CAP = 14


def catalan(j: int) -> int:
    if j < 0:
        raise InvalidInputError("catalan index must be nonnegative")
    return comb(2 * j, j) // (j + 1)


def count_tree_words_by_hamburgers(n: int, j: int) -> int:
    """Tree words of order n containing exactly j hamburger pairs.

    Choose the 2j slots of the hamburger letters, then fill each type's slots
    with an excursion of its own: comb(2n, 2j) * Cat_j * Cat_{n-j}.
    """
    if not 0 <= j <= n:
        raise InvalidInputError(f"need 0 <= j <= n, got j={j}, n={n}")
    return comb(2 * n, 2 * j) * catalan(j) * catalan(n - j)


def count_tree_words(n: int) -> int:
    """Number of perfect F-free words of order n."""
    if n < 0:
        raise InvalidInputError("order must be nonnegative")
    return sum(count_tree_words_by_hamburgers(n, j) for j in range(n + 1))


def count_excess_words(n: int, k: int, order_cap: int = EXCESS_WORD_ORDER_CAP) -> int:
    """Exact number of perfect words of order n with exactly k fresh orders,
    all fulfilled by cheeseburgers.

    Exhaustive walk over letter sequences, merged by identical futures: the
    remaining feasibility of a prefix depends only on the stack contents and
    the number of fresh orders used, so prefixes are aggregated by the stack
    profile (a bit per burger, cheeseburger = 1) and the fresh-order count.
    Infeasible branches (order underflow, a fresh order whose top burger is a
    hamburger, stacks that cannot empty in the remaining letters) are pruned.
    """
    if n < 0 or k < 0:
        raise InvalidInputError("n and k must be nonnegative")
    if n > order_cap:
        raise ResourceLimitError(
            f"exhaustive count capped at order {order_cap} (asked for {n})")
    # state: (stack size u, profile bits, fresh used) -> count
    cur = {(0, 0, 0): 1}
    for t in range(2 * n):
        rem = 2 * n - t
        nxt: dict[tuple[int, int, int], int] = {}
        for (u, bits, f), cnt in cur.items():
            if u > rem:
                continue
            if u < n and u + 1 <= rem - 1:
                key = (u + 1, bits, f)                 # push hamburger (bit 0)
                nxt[key] = nxt.get(key, 0) + cnt
                key = (u + 1, bits | (1 << u), f)      # push cheeseburger (bit 1)
                nxt[key] = nxt.get(key, 0) + cnt
            if u > 0:
                for target in (0, 1):                  # h pops topmost 0, c topmost 1
                    pos = -1
                    for b in range(u - 1, -1, -1):
                        if (bits >> b) & 1 == target:
                            pos = b
                            break
                    if pos >= 0:
                        low = bits & ((1 << pos) - 1)
                        nb = low | ((bits >> (pos + 1)) << pos)
                        key = (u - 1, nb, f)
                        nxt[key] = nxt.get(key, 0) + cnt
                if f < k and (bits >> (u - 1)) & 1 == 1:   # fresh order on a cheese top
                    key = (u - 1, bits & ((1 << (u - 1)) - 1), f + 1)
                    nxt[key] = nxt.get(key, 0) + cnt
        cur = nxt
    return cur.get((0, 0, k), 0)


def iter_tree_words(n: int):
    """Yield every perfect F-free word of order n, in lexicographic DFS order."""
    prefix: list[str] = []

    def rec(x: int, y: int, produced: int):
        t = len(prefix)
        if t == 2 * n:
            yield "".join(prefix)
            return
        rem = 2 * n - t
        if x + y > rem:
            return
        if produced < n and x + y + 1 <= rem - 1:
            for letter, dx, dy in ((W.HAMBURGER, 1, 0), (W.CHEESEBURGER, 0, 1)):
                prefix.append(letter)
                yield from rec(x + dx, y + dy, produced + 1)
                prefix.pop()
        if x > 0:
            prefix.append(W.HAM_ORDER)
            yield from rec(x - 1, y, produced)
            prefix.pop()
        if y > 0:
            prefix.append(W.CHEESE_ORDER)
            yield from rec(x, y - 1, produced)
            prefix.pop()

    yield from rec(0, 0, 0)


def fresh_site_count(word: str) -> int:
    """Number of positions where a c consumes the overall top of the stack.

    Replacing any such c by F leaves a perfect word whose fresh order matches
    a cheeseburger; these are exactly the sites the canonical injection hits.
    """
    ham: list[int] = []
    cheese: list[int] = []
    count = 0
    for i, letter in enumerate(word):
        if letter == W.HAMBURGER:
            ham.append(i)
        elif letter == W.CHEESEBURGER:
            cheese.append(i)
        elif letter == W.HAM_ORDER:
            ham.pop()
        elif letter == W.CHEESE_ORDER:
            if cheese and (not ham or cheese[-1] > ham[-1]):
                count += 1
            cheese.pop()
        else:
            raise InvalidInputError("fresh_site_count requires an F-free word")
    return count


def count_injection_image(n: int, k: int, order_cap: int = EXCESS_WORD_ORDER_CAP) -> int:
    """Pairs (tree word, k marked positions) in the canonical injection's image.

    A pair qualifies when every marked position holds a c whose pre-state has a
    cheeseburger on top.  Must equal count_excess_words(n, k).
    """
    if n > order_cap:
        raise ResourceLimitError(
            f"injection image enumeration capped at order {order_cap}")
    return sum(comb(fresh_site_count(w), k) for w in iter_tree_words(n))


def moment_ratio(n: int, k: int, order_cap: int = EXCESS_WORD_ORDER_CAP) -> Fraction:
    """|k-excess words| / (n^k * |tree words|) as an exact rational."""
    if n < 1:
        raise InvalidInputError("order must be positive")
    return Fraction(count_excess_words(n, k, order_cap),
                    n ** k * count_tree_words(n))
