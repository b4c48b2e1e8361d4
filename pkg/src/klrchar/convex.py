"""Convex orderings of the positive roots.

Orderings come from reduced expressions of the longest Weyl group element
(one root per letter), or from the lexicographic order on good Lyndon words.
Minimal pairs and the fixed choice mp(alpha) (gamma maximal) live here too.
"""

from __future__ import annotations

import random

from .cartan import Root, RootSystem

Word = tuple[int, ...]


class NotReducedError(ValueError):
    pass


class ConvexOrder:
    """A total order on the positive roots, stored as a ranked list."""

    def __init__(self, rs: RootSystem, roots: list[Root], label: str):
        if set(roots) != rs.positive_set or len(roots) != len(rs.positive_set):
            raise ValueError("not a permutation of the positive roots")
        self.rs = rs
        self.roots: tuple[Root, ...] = tuple(roots)
        self.rank_of = {b: k for k, b in enumerate(roots)}
        self.label = label
        self._mp_cache: dict[Root, tuple[Root, Root]] = {}
        self._lyndon_fp_cache: dict[Root, tuple] = {}

    def precedes(self, a: Root, b: Root) -> bool:
        return self.rank_of[a] < self.rank_of[b]

    def sort_desc(self, roots) -> list[Root]:
        return sorted(roots, key=lambda b: -self.rank_of[b])

    def fingerprint(self) -> str:
        return ",".join("".join(map(str, b)) for b in self.roots)

    def __repr__(self):
        return f"ConvexOrder({self.rs.cartan_type}, {self.label})"


def order_from_reduced_word(word: Word, rs: RootSystem) -> ConvexOrder:
    """The ordering alpha_{i_1} < s_{i_1}(alpha_{i_2}) < ... from a reduced
    word for the longest element.  Letters are 1-based node labels."""
    n_pos = len(rs.positive_roots)
    if len(word) != n_pos:
        raise NotReducedError(f"word has length {len(word)}, expected {n_pos}")
    roots: list[Root] = []
    seen = set()
    # w = s_{i_1}...s_{i_{k-1}} tracked through its images of all roots;
    # apply letters right-to-left to the new simple root instead
    for k, i in enumerate(word):
        b = rs.simple_root(i - 1)
        for j in reversed(word[:k]):
            b = rs.reflect(j - 1, b)
        if b not in rs.positive_set or b in seen:
            raise NotReducedError("word is not a reduced expression of w0")
        seen.add(b)
        roots.append(b)
    return ConvexOrder(rs, roots, "word:" + "".join(map(str, word)))


def is_convex(roots: list[Root] | ConvexOrder, rs: RootSystem | None = None) -> bool:
    if isinstance(roots, ConvexOrder):
        rs = roots.rs
        roots = list(roots.roots)
    rank = {b: k for k, b in enumerate(roots)}
    if set(rank) != rs.positive_set:
        return False
    pos = rs.positive_set
    n = rs.rank
    for a in pos:
        for b in pos:
            if a >= b:
                continue
            s = tuple(a[k] + b[k] for k in range(n))
            if s in pos:
                lo, hi = min(rank[a], rank[b]), max(rank[a], rank[b])
                if not lo < rank[s] < hi:
                    return False
    return True


def reduced_words_of_w0(rs: RootSystem, limit: int | None = None):
    """Yield all reduced words of w0 (1-based letters) by depth-first search.

    Only sensible in small rank; ``limit`` caps the number of words yielded.
    """
    n = rs.rank
    total = len(rs.positive_roots)
    count = 0
    # P[j] = w(alpha_j); extending on the right by s_i needs P[i] positive
    def rec(P, word):
        nonlocal count
        if limit is not None and count >= limit:
            return
        if len(word) == total:
            count += 1
            yield tuple(word)
            return
        for i in range(n):
            if all(c >= 0 for c in P[i]):
                Q = [tuple(P[j][k] - rs.cartan[i][j] * P[i][k] for k in range(n))
                     for j in range(n)]
                word.append(i + 1)
                yield from rec(Q, word)
                word.pop()

    P0 = [rs.simple_root(j) for j in range(n)]
    yield from rec(P0, [])


def random_reduced_word(rs: RootSystem, rng: random.Random) -> Word:
    """One reduced word of w0 sampled by a random ascent walk."""
    n = rs.rank
    P = [rs.simple_root(j) for j in range(n)]
    word = []
    for _ in range(len(rs.positive_roots)):
        choices = [i for i in range(n) if all(c >= 0 for c in P[i])]
        i = rng.choice(choices)
        P = [tuple(P[j][k] - rs.cartan[i][j] * P[i][k] for k in range(n))
             for j in range(n)]
        word.append(i + 1)
    return tuple(word)


def good_lyndon_words(rs: RootSystem) -> dict[Root, Word]:
    """The good Lyndon word of each positive root.

    Recursion on height: l(alpha) is the lexicographically largest
    concatenation l(gamma)l(beta) over root decompositions alpha=beta+gamma
    with l(beta) > l(gamma).  Letters compare by node label, with a proper
    prefix smaller than the full word.
    """
    words: dict[Root, Word] = {}
    by_height: dict[int, list[Root]] = {}
    for b in rs.positive_roots:
        by_height.setdefault(sum(b), []).append(b)
    for i in range(rs.rank):
        words[rs.simple_root(i)] = (i + 1,)
    for h in sorted(by_height):
        if h == 1:
            continue
        for alpha in by_height[h]:
            best = None
            for beta in rs.positive_roots:
                if sum(beta) >= h:
                    continue
                gamma = tuple(alpha[k] - beta[k] for k in range(rs.rank))
                if gamma not in rs.positive_set:
                    continue
                wb, wg = words[beta], words[gamma]
                if wb > wg:
                    cand = wg + wb
                    if best is None or cand > best:
                        best = cand
            if best is None:
                raise RuntimeError(f"no decomposition found for {alpha}")
            words[alpha] = best
    return words


def lyndon_order(rs: RootSystem) -> ConvexOrder:
    words = good_lyndon_words(rs)
    roots = sorted(rs.positive_set, key=lambda b: words[b])
    return ConvexOrder(rs, roots, "lyndon")


def minimal_pairs(alpha: Root, order: ConvexOrder) -> list[tuple[Root, Root]]:
    """All minimal pairs (beta, gamma), beta > gamma, beta + gamma = alpha.

    A pair is minimal when no other decomposition (beta', gamma') squeezes in
    with beta > beta' and gamma' > gamma.
    """
    rs = order.rs
    if sum(alpha) < 2:
        raise ValueError("alpha must have height >= 2")
    pairs = []
    for beta in rs.positive_roots:
        gamma = tuple(alpha[k] - beta[k] for k in range(rs.rank))
        if gamma in rs.positive_set and order.precedes(gamma, beta):
            pairs.append((beta, gamma))
    out = []
    for beta, gamma in pairs:
        dominated = any(
            order.precedes(b2, beta) and order.precedes(gamma, g2)
            for b2, g2 in pairs if (b2, g2) != (beta, gamma)
        )
        if not dominated:
            out.append((beta, gamma))
    out.sort(key=lambda p: order.rank_of[p[0]])
    return out


def mp_choice(alpha: Root, order: ConvexOrder) -> tuple[Root, Root]:
    """The fixed minimal pair: the decomposition with gamma maximal."""
    cached = order._mp_cache.get(alpha)
    if cached is not None:
        return cached
    rs = order.rs
    if sum(alpha) < 2:
        raise ValueError("alpha must have height >= 2")
    best = None
    for beta in rs.positive_roots:
        gamma = tuple(alpha[k] - beta[k] for k in range(rs.rank))
        if gamma in rs.positive_set and order.precedes(gamma, beta):
            if best is None or order.precedes(best[1], gamma):
                best = (beta, gamma)
    if best is None:
        raise ValueError(f"{alpha} has no two-part decomposition")
    order._mp_cache[alpha] = best
    return best


def mp_fingerprint(alpha: Root, order: ConvexOrder) -> tuple:
    """Recursive identity of the mp-recursion tree below alpha.

    Two convex orderings whose trees agree produce identical dual root
    vector characters, which lets caches be shared across orderings.
    """
    cached = order._lyndon_fp_cache.get(alpha)
    if cached is not None:
        return cached
    if sum(alpha) == 1:
        fp = (alpha,)
    else:
        beta, gamma = mp_choice(alpha, order)
        fp = (alpha, mp_fingerprint(beta, order), mp_fingerprint(gamma, order))
    order._lyndon_fp_cache[alpha] = fp
    return fp
