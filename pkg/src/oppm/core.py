"""Order-isomorphism primitives.

Sequences are any indexable sequence of integers.  All positions exposed by
this module are 1-based; ``prev``/``next`` entries use 0 for "undefined".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class PrevNext:
    prev: tuple[int, ...]
    next: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.prev)


@dataclass
class Counter:
    """Instrumentation shared by the matchers.

    ``comparisons`` counts three-way character comparisons on the text,
    ``verify_calls`` counts incremental verification steps.
    """

    comparisons: int = 0
    verify_calls: int = 0
    duels: int = 0

    def add(self, other: "Counter") -> None:
        self.comparisons += other.comparisons
        self.verify_calls += other.verify_calls
        self.duels += other.duels


def cmp(u: int, v: int) -> int:
    return (u > v) - (u < v)


def _prev_from_order(order: Sequence[int], n: int) -> list[int]:
    # `order` lists 1-based positions sorted so that ties keep position order.
    # Walk positions right to left, unlinking each from a doubly linked list
    # over `order`; the list predecessor is then the rightmost earlier
    # position with the largest value <= S[i].
    before = [0] * (n + 2)
    after = [0] * (n + 2)
    last = 0
    for pos in order:
        before[pos] = last
        after[last] = pos
        last = pos
    after[last] = n + 1
    before[n + 1] = last
    prev = [0] * (n + 1)
    for i in range(n, 0, -1):
        b, a = before[i], after[i]
        prev[i] = b
        after[b] = a
        before[a] = b
    return prev


def prev_next(s: Sequence[int]) -> PrevNext:
    """Nearest predecessor arrays used for incremental isomorphism checks.

    >>> pn = prev_next((18, 22, 12, 50, 10, 17))
    >>> pn.prev, pn.next
    ((0, 1, 0, 2, 0, 3), (0, 0, 1, 0, 3, 1))
    """
    n = len(s)
    by_value = sorted(range(1, n + 1), key=lambda p: s[p - 1])
    return prev_next_from_order(s, by_value)


def prev_next_from_order(s: Sequence[int], by_value: Sequence[int]) -> PrevNext:
    """Same as :func:`prev_next` given positions already sorted by value.

    ``by_value`` must be a stable ascending sort of the 1-based positions.
    """
    n = len(s)
    prev = _prev_from_order(by_value, n)
    # Next is Prev of the negated sequence: reverse the value order, keeping
    # ties in position order.
    desc: list[int] = []
    k = n
    while k > 0:
        v = s[by_value[k - 1] - 1]
        start = k
        while k > 0 and s[by_value[k - 1] - 1] == v:
            k -= 1
        desc.extend(by_value[k:start])
    nxt = _prev_from_order(desc, n)
    return PrevNext(tuple(prev[1:]), tuple(nxt[1:]))


def is_order_isomorphic_bruteforce(
    s: Sequence[int], t: Sequence[int], counter: Counter | None = None
) -> bool:
    """All-pairs definition; quadratic, meant as a test oracle.

    Each pair of ``t`` positions examined counts as one comparison.
    """
    if len(s) != len(t):
        raise ValueError(f"length mismatch: {len(s)} != {len(t)}")
    n = len(s)
    pairs = 0
    ok = True
    for i in range(n):
        si, ti = s[i], t[i]
        for j in range(i + 1, n):
            pairs += 1
            if cmp(si, s[j]) != cmp(ti, t[j]):
                ok = False
                break
        if not ok:
            break
    if counter is not None:
        counter.comparisons += pairs
    return ok


def verify_step(
    p: Sequence[int],
    pn: PrevNext,
    w: Sequence[int],
    i: int,
    counter: Counter | None = None,
) -> bool:
    """Check whether ``p[1:i] ~ w[1:i]`` given ``p[1:i-1] ~ w[1:i-1]``.

    ``i`` is 1-based; ``w`` may be longer than ``i``.
    """
    lo = pn.prev[i - 1]
    hi = pn.next[i - 1]
    c = w[i - 1]
    done = 0
    ok = True
    if lo and p[lo - 1] == p[i - 1]:
        done += 1
        if w[lo - 1] != c:
            ok = False
        elif hi:
            done += 1
            ok = w[hi - 1] == c
    else:
        if lo:
            done += 1
            ok = w[lo - 1] < c
        if ok and hi:
            done += 1
            ok = c < w[hi - 1]
    if counter is not None:
        counter.verify_calls += 1
        counter.comparisons += done
    return ok


def order_isomorphic(s: Sequence[int], t: Sequence[int], pn: PrevNext | None = None) -> bool:
    """True iff ``s`` and ``t`` are order-isomorphic.

    >>> order_isomorphic((12, 35, 5), (25, 30, 21))
    True
    >>> order_isomorphic((12, 35, 5), (11, 13, 20))
    False
    """
    if len(s) != len(t):
        raise ValueError(f"length mismatch: {len(s)} != {len(t)}")
    if pn is None:
        pn = prev_next(s)
    return all(verify_step(s, pn, t, i) for i in range(2, len(s) + 1))


def z_array(s: Sequence[int], pn: PrevNext | None = None) -> tuple[int, ...]:
    """Order-preserving Z-array of ``s``.

    ``z[i]`` (1-based) is the length of the longest substring starting at
    ``i`` that is order-isomorphic to a prefix of ``s``.

    >>> z_array((18, 22, 12, 50, 10, 17))
    (6, 1, 3, 1, 2, 1)
    """
    if pn is None:
        pn = prev_next(s)
    n = len(s)
    if n == 0:
        return ()
    z = [0] * (n + 1)
    z[1] = n
    _z_scan(s, pn, z, s, 2, z)
    return tuple(z[1:])


def z_array_against(
    p: Sequence[int],
    pn: PrevNext,
    pz: Sequence[int],
    t: Sequence[int],
) -> tuple[int, ...]:
    """Z-array of ``t`` relative to prefixes of ``p``.

    Entry ``i`` (1-based) is the largest ``j`` with ``p[1:j] ~ t[i:i+j-1]``.
    ``pz`` is ``z_array(p)``.
    """
    n = len(t)
    z = [0] * (n + 1)
    _z_scan(p, pn, (0,) + tuple(pz), t, 1, z)
    return tuple(z[1:])


def _z_scan(p, pn, pz, t, start, z) -> None:
    # Z-box scan of t against prefixes of p.  pz and z are 1-based lists
    # (index 0 unused); pz may alias z when t is p itself.
    m = len(p)
    n = len(t)
    prev = pn.prev
    nxt = pn.next
    left = right = 0  # t[left:right] ~ p[1:right-left+1]
    for i in range(start, n + 1):
        limit = min(m, n - i + 1)
        if i <= right:
            known = pz[i - left + 1]
            if known < right - i + 1:
                z[i] = known
                continue
            length = right - i + 1
        else:
            length = 0
        # extend p[1:length] ~ t[i:i+length-1]
        base = i - 1
        while length < limit:
            k = length + 1
            lo = prev[k - 1]
            hi = nxt[k - 1]
            c = t[base + k - 1]
            if lo and p[lo - 1] == p[k - 1]:
                if t[base + lo - 1] != c or (hi and t[base + hi - 1] != c):
                    break
            elif (lo and not t[base + lo - 1] < c) or (hi and not c < t[base + hi - 1]):
                break
            length = k
        z[i] = length
        if length and i + length - 1 > right:
            left, right = i, i + length - 1
