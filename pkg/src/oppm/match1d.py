"""One-dimensional order-preserving matching.

The duel-and-sweep matcher runs in three phases: a witness table built from
the pattern's Z-array, a dueling stage that prunes the text windows
("candidates") down to a pairwise consistent set, and a sweeping stage that
verifies the survivors left to right while reusing verified overlap.

Positions in and out are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

from .core import (
    Counter,
    PrevNext,
    cmp,
    is_order_isomorphic_bruteforce,
    prev_next,
    z_array,
)

NO_WITNESS = None

Witness = Optional[tuple[int, int]]


def pick_partner(p, pn: PrevNext, q, shift: int, j: int) -> int:
    """Return the partner ``i`` of mismatch position ``j``.

    Assumes ``p[1:j-1] ~ q[shift+1:shift+j-1]`` and that position ``j``
    breaks the isomorphism.  The result is ``prev[j]`` or ``next[j]``,
    whichever comparison flips; prev wins when both do.
    """
    lo = pn.prev[j - 1]
    hi = pn.next[j - 1]
    c = q[shift + j - 1]
    if lo and p[lo - 1] == p[j - 1]:
        return lo if q[shift + lo - 1] != c else hi
    if lo and c <= q[shift + lo - 1]:
        return lo
    return hi


def witness_table(p: Sequence[int], pn: PrevNext | None = None, z=None) -> list[Witness]:
    """Witness pair for every offset ``0 <= a < m``.

    ``wit[a]`` is ``NO_WITNESS`` when ``p[1:m-a] ~ p[a+1:m]`` (always so for
    ``a == 0``), else a pair ``(i, j)`` with ``i < j`` and
    ``cmp(p[i], p[j]) != cmp(p[i+a], p[j+a])`` having the smallest ``j``.
    """
    m = len(p)
    if pn is None:
        pn = prev_next(p)
    if z is None:
        z = z_array(p, pn)
    wit: list[Witness] = [NO_WITNESS] * max(m, 1)
    for a in range(1, m):
        zk = z[a]  # Z_P at position a + 1
        if zk == m - a:
            continue
        j = zk + 1
        wit[a] = (pick_partner(p, pn, p, a, j), j)
    return wit


@dataclass
class Pattern1D:
    """A pattern preprocessed for repeated matching; immutable once built."""

    chars: tuple[int, ...]
    pn: PrevNext = field(repr=False)
    z: tuple[int, ...] = field(repr=False)
    wit: list[Witness] = field(repr=False)

    @classmethod
    def build(cls, p: Sequence[int]) -> "Pattern1D":
        chars = tuple(p)
        if not chars:
            raise ValueError("pattern must be non-empty")
        pn = prev_next(chars)
        z = z_array(chars, pn)
        return cls(chars, pn, z, witness_table(chars, pn, z))

    def __len__(self) -> int:
        return len(self.chars)

    @cached_property
    def fail(self) -> list[int]:
        return order_border_table(self.chars, self.pn)


def duel(t: Sequence[int], x: int, a: int, pat: Pattern1D, counter: Counter | None = None) -> int:
    """Duel candidates ``x`` and ``x + a``; return the one eliminated.

    One text comparison at the witness cells decides which window cannot
    match the pattern.
    """
    i, j = pat.wit[a]
    p = pat.chars
    base = x + a - 2
    if counter is not None:
        counter.comparisons += 1
        counter.duels += 1
    if cmp(t[base + i], t[base + j]) != cmp(p[i - 1], p[j - 1]):
        return x + a
    return x


def dueling_stage(t: Sequence[int], pat: Pattern1D, counter: Counter | None = None) -> list[int]:
    """Prune candidates to a pairwise consistent set containing every match.

    Left-to-right scan keeping a stack of mutually consistent survivors.
    Consistency with the stack top implies consistency with everything below
    it, since consistency is transitive.
    """
    n, m = len(t), len(pat)
    if m > n:
        return []
    wit = pat.wit
    p = pat.chars
    stack: list[int] = []
    duels = 0
    for x in range(1, n - m + 2):
        alive = True
        while stack:
            y = stack[-1]
            a = x - y
            if a >= m or wit[a] is NO_WITNESS:
                break
            i, j = wit[a]
            duels += 1
            if cmp(t[x + i - 2], t[x + j - 2]) != cmp(p[i - 1], p[j - 1]):
                alive = False
                break
            stack.pop()
        if alive:
            stack.append(x)
    if counter is not None:
        counter.comparisons += duels
        counter.duels += duels
    return stack


def sweeping_stage(
    t: Sequence[int],
    pat: Pattern1D,
    candidates: Sequence[int],
    counter: Counter | None = None,
) -> list[int]:
    """Verify pairwise consistent candidates, reusing checked overlap.

    ``candidates`` must be increasing.  Returns the ones that match.
    """
    m = len(pat)
    p = pat.chars
    prev = pat.pn.prev
    nxt = pat.pn.next
    out: list[int] = []
    calls = 0
    comps = 0
    start = 1
    count = len(candidates)
    for idx in range(count):
        x = candidates[idx]
        base = x - 1
        k = max(start, 1)
        while k <= m:
            calls += 1
            lo = prev[k - 1]
            hi = nxt[k - 1]
            c = t[base + k - 1]
            if lo and p[lo - 1] == p[k - 1]:
                comps += 1
                if t[base + lo - 1] != c:
                    break
                if hi:
                    comps += 1
                    if t[base + hi - 1] != c:
                        break
            else:
                if lo:
                    comps += 1
                    if not t[base + lo - 1] < c:
                        break
                if hi:
                    comps += 1
                    if not c < t[base + hi - 1]:
                        break
            k += 1
        if k > m:
            out.append(x)
        start = 1
        if idx + 1 < count:
            a = candidates[idx + 1] - x
            if a < m:
                # matched: the next window is verified up to m - a;
                # mismatch at k: it is verified up to k - 1 - a
                start = m - a + 1 if k > m else k - a
    if counter is not None:
        counter.verify_calls += calls
        counter.comparisons += comps
    return out


def match_1d(t: Sequence[int], p, counter: Counter | None = None) -> list[int]:
    """All 1-based ``x`` with ``t[x:x+m-1] ~ p``, by duel-and-sweep.

    >>> match_1d((10, 50, 30, 60, 40), (1, 3, 2))
    [1, 3]
    """
    pat = p if isinstance(p, Pattern1D) else Pattern1D.build(p)
    if len(pat) > len(t):
        return []
    survivors = dueling_stage(t, pat, counter)
    return sweeping_stage(t, pat, survivors, counter)


def naive_match_1d(t: Sequence[int], p: Sequence[int], counter: Counter | None = None) -> list[int]:
    """Reference matcher applying the all-pairs definition to every window."""
    m = len(p)
    if m == 0:
        raise ValueError("pattern must be non-empty")
    return [
        x + 1
        for x in range(len(t) - m + 1)
        if is_order_isomorphic_bruteforce(p, t[x : x + m], counter)
    ]


def order_border_table(p: Sequence[int], pn: PrevNext) -> list[int]:
    """``fail[q]`` is the longest proper order-border of ``p[1:q]``."""
    m = len(p)
    fail = [0] * (m + 1)
    k = 0
    for q in range(2, m + 1):
        while k > 0 and not _extends(p, pn, p, q - k - 1, k + 1):
            k = fail[k]
        k += 1
        fail[q] = k
    return fail


def _extends(p, pn: PrevNext, w, base: int, k: int) -> bool:
    # p[1:k] ~ w[base+1:base+k], given the first k - 1 already agree
    lo = pn.prev[k - 1]
    hi = pn.next[k - 1]
    c = w[base + k - 1]
    if lo and p[lo - 1] == p[k - 1]:
        return w[base + lo - 1] == c and (not hi or w[base + hi - 1] == c)
    return (not lo or w[base + lo - 1] < c) and (not hi or c < w[base + hi - 1])


def kmp_match_1d(t: Sequence[int], p, counter: Counter | None = None) -> list[int]:
    """Order-preserving KMP baseline (order-border failure function).

    ``p`` may be a :class:`Pattern1D` to reuse preprocessing across texts.
    """
    pat = p if isinstance(p, Pattern1D) else Pattern1D.build(p)
    p = pat.chars
    pn = pat.pn
    fail = pat.fail
    m = len(p)
    prev = pn.prev
    nxt = pn.next
    out: list[int] = []
    calls = comps = 0
    q = 0
    for pos in range(1, len(t) + 1):
        c = t[pos - 1]
        while True:
            # window starts at pos - q; test pattern position q + 1
            k = q + 1
            base = pos - k
            lo = prev[k - 1]
            hi = nxt[k - 1]
            calls += 1
            ok = True
            if lo and p[lo - 1] == p[k - 1]:
                comps += 1
                if t[base + lo - 1] != c:
                    ok = False
                elif hi:
                    comps += 1
                    ok = t[base + hi - 1] == c
            else:
                if lo:
                    comps += 1
                    ok = t[base + lo - 1] < c
                if ok and hi:
                    comps += 1
                    ok = c < t[base + hi - 1]
            if ok or q == 0:
                break
            q = fail[q]
        q += 1
        if q == m:
            out.append(pos - m + 1)
            q = fail[q]
    if counter is not None:
        counter.verify_calls += calls
        counter.comparisons += comps
    return out
