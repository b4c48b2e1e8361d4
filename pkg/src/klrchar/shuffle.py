"""The quantum shuffle algebra on words, with bar involution and restriction.

A shuffle element is a sparse dict word -> LaurentPoly.  The product of two
words sums q^{deg(w; ij)} w(ij) over all interleavings; deg counts crossing
pairs weighted by minus the form on the letters.  Single word-pair products
are memoized per root system since they recur heavily across orderings.
"""

from __future__ import annotations

from .cartan import RootSystem
from .convex import Word
from .laurent import LaurentPoly, PowerSeries

ShuffleElement = dict  # Word -> LaurentPoly


def word_weight(word: Word, rs: RootSystem):
    w = [0] * rs.rank
    for i in word:
        w[i - 1] += 1
    return tuple(w)


def deg_stat(w_perm: tuple[int, ...], word: Word, rs: RootSystem) -> int:
    """deg(w; word) = minus the sum of the form over inversion pairs."""
    B = rs.bilinear_matrix
    total = 0
    n = len(word)
    for j in range(n):
        for k in range(j + 1, n):
            if w_perm[j] > w_perm[k]:
                total -= B[word[j] - 1][word[k] - 1]
    return total


def apply_perm(w_perm: tuple[int, ...], word: Word) -> Word:
    out = [0] * len(word)
    for k, target in enumerate(w_perm):
        out[target] = word[k]
    return tuple(out)


def _pair_shuffle(i: Word, j: Word, rs: RootSystem) -> dict[Word, dict[int, int]]:
    """Shuffle of two single words; exponents as raw dicts."""
    cache = getattr(rs, "_shuffle_pair_cache", None)
    if cache is None:
        cache = rs._shuffle_pair_cache = {}
    key = (i, j)
    hit = cache.get(key)
    if hit is not None:
        return hit
    B = rs.bilinear_matrix
    m, n = len(i), len(j)
    # crossing cost of pulling j[b] in front of the rest of i starting at a
    suffix_cost = [[0] * n for _ in range(m + 1)]
    for b in range(n):
        jb = j[b] - 1
        acc = 0
        for a in range(m - 1, -1, -1):
            acc -= B[i[a] - 1][jb]
            suffix_cost[a][b] = acc
    out: dict[Word, dict[int, int]] = {}

    def rec(a, b, prefix, exp):
        if a == m:
            word = prefix + j[b:]
            d = out.setdefault(word, {})
            d[exp] = d.get(exp, 0) + 1
            return
        if b == n:
            word = prefix + i[a:]
            d = out.setdefault(word, {})
            d[exp] = d.get(exp, 0) + 1
            return
        rec(a + 1, b, prefix + (i[a],), exp)
        rec(a, b + 1, prefix + (j[b],), exp + suffix_cost[a][b])

    rec(0, 0, (), 0)
    cache[key] = out
    return out


def shuffle(a: ShuffleElement, b: ShuffleElement, rs: RootSystem) -> ShuffleElement:
    out: ShuffleElement = {}
    for wi, ci in a.items():
        for wj, cj in b.items():
            coeff = ci * cj
            if not coeff:
                continue
            for word, exps in _pair_shuffle(wi, wj, rs).items():
                extra = LaurentPoly(dict(exps)) * coeff
                cur = out.get(word)
                if cur is None:
                    out[word] = extra
                else:
                    cur = cur + extra
                    if cur:
                        out[word] = cur
                    else:
                        del out[word]
    return out


def sh_unit() -> ShuffleElement:
    return {(): LaurentPoly.one()}


def sh_word(word: Word) -> ShuffleElement:
    return {tuple(word): LaurentPoly.one()}


def sh_add(a: ShuffleElement, b: ShuffleElement) -> ShuffleElement:
    out = dict(a)
    for w, c in b.items():
        cur = out.get(w)
        s = c if cur is None else cur + c
        if s:
            out[w] = s
        elif w in out:
            del out[w]
    return out


def sh_scale(a: ShuffleElement, c: LaurentPoly | int) -> ShuffleElement:
    if isinstance(c, int):
        c = LaurentPoly.term(c)
    out = {}
    for w, p in a.items():
        s = p * c
        if s:
            out[w] = s
    return out


def sh_sub(a: ShuffleElement, b: ShuffleElement) -> ShuffleElement:
    return sh_add(a, sh_scale(b, -1))

def sh_eq(a: ShuffleElement, b: ShuffleElement) -> bool:
    return {w: c.c for w, c in a.items() if c} == {w: c.c for w, c in b.items() if c}


def bar(a: ShuffleElement) -> ShuffleElement:
    return {w: c.bar() for w, c in a.items()}


def is_bar_invariant(a: ShuffleElement) -> bool:
    return all(c.is_bar_invariant() for c in a.values())


def restrict_character(a: ShuffleElement, parts, rs: RootSystem):
    """Coefficients of splitting each word into consecutive weight blocks.

    Returns a dict (word_1, ..., word_k) -> LaurentPoly; the character shadow
    of restriction to the given weight sequence.
    """
    parts = [tuple(p) for p in parts]
    total = [0] * rs.rank
    for p in parts:
        for k in range(rs.rank):
            total[k] += p[k]
    out: dict[tuple[Word, ...], LaurentPoly] = {}
    for word, coeff in a.items():
        if word_weight(word, rs) != tuple(total):
            raise ValueError("weight mismatch between element and parts")
        pos = 0
        blocks = []
        ok = True
        for p in parts:
            ht = sum(p)
            block = word[pos:pos + ht]
            if word_weight(block, rs) != p:
                ok = False
                break
            blocks.append(block)
            pos += ht
        if ok:
            key = tuple(blocks)
            cur = out.get(key)
            out[key] = coeff if cur is None else cur + coeff
    return {k: v for k, v in out.items() if v}


def render_word(w: Word) -> str:
    return "".join(map(str, w)) if all(x <= 9 for x in w) else ",".join(map(str, w))


def sh_to_json(a: ShuffleElement) -> list[dict]:
    return [
        {"word": render_word(w), "coeff": a[w].to_json()}
        for w in sorted(a)
        if a[w]
    ]


def sh_dim(a: ShuffleElement) -> LaurentPoly:
    """Total graded dimension: sum of all word coefficients."""
    out = LaurentPoly.zero()
    for c in a.values():
        out = out + c
    return out


def sh_series(a: ShuffleElement, trunc: int) -> dict[Word, PowerSeries]:
    return {w: PowerSeries.from_poly(c, trunc) for w, c in a.items()}
