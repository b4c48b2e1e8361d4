"""Characters of dual root vectors and dual PBW monomials.

The dual root vector character for a non-simple root is produced by solving
the rank-two straightening identity: the q-commutator of the two characters
attached to the fixed minimal pair is exactly divisible by
q^{-p}(1 - q^{2(p - beta.gamma)}), and the quotient is the character.
Inexact division signals corrupted ordering data and raises.

Characters depend on the ordering only through the minimal-pair recursion
tree, so results are cached globally under that fingerprint and shared
between orderings.
"""

from __future__ import annotations

from itertools import permutations

from .cartan import Root, RootSystem, p_max
from .convex import ConvexOrder, Word, mp_choice, mp_fingerprint
from .kostant import KP, kp_scalars
from .laurent import ExactDivisionError, LaurentPoly, PowerSeries
from .shuffle import (ShuffleElement, deg_stat, sh_scale, sh_sub, sh_word,
                      shuffle)

_GLOBAL_ROOT_CHAR_CACHE: dict[tuple, ShuffleElement] = {}


class PBWCharacters:
    """Memoized table of Ch r*_alpha for a fixed convex ordering."""

    def __init__(self, order: ConvexOrder):
        self.order = order
        self.rs = order.rs
        self._table: dict[Root, ShuffleElement] = {}

    def dual_root(self, alpha: Root) -> ShuffleElement:
        hit = self._table.get(alpha)
        if hit is not None:
            return hit
        if sum(alpha) == 1:
            out = sh_word((alpha.index(1) + 1,))
            self._table[alpha] = out
            return out
        fp = (self.rs.key(), mp_fingerprint(alpha, self.order))
        cached = _GLOBAL_ROOT_CHAR_CACHE.get(fp)
        if cached is not None:
            self._table[alpha] = cached
            return cached
        beta, gamma = mp_choice(alpha, self.order)
        out = self._solve(alpha, beta, gamma)
        _GLOBAL_ROOT_CHAR_CACHE[fp] = out
        self._table[alpha] = out
        return out

    def _solve(self, alpha: Root, beta: Root, gamma: Root) -> ShuffleElement:
        rs = self.rs
        cb = self.dual_root(beta)
        cg = self.dual_root(gamma)
        p = p_max(rs, beta, gamma)
        bg = rs.form(beta, gamma)
        num = sh_sub(shuffle(cg, cb, rs),
                     sh_scale(shuffle(cb, cg, rs), LaurentPoly.term(1, -bg)))
        div = LaurentPoly({-p: 1}) - LaurentPoly({p - 2 * bg: 1})
        out: ShuffleElement = {}
        for w, c in num.items():
            try:
                q = c.exact_div(div)
            except ExactDivisionError as e:
                raise ExactDivisionError(
                    f"scale-factor division failed at word {w} for root {alpha} "
                    f"(order {self.order.label}): {e}"
                ) from e
            if q:
                out[w] = q
        return out

    def proper_standard(self, lam: KP) -> ShuffleElement:
        """Ch of the shifted product of cuspidal characters along lambda."""
        _, s, _, _ = kp_scalars(lam, self.order)
        out = None
        for part in lam:
            ch = self.dual_root(part)
            out = ch if out is None else shuffle(out, ch, self.rs)
        if out is None:
            out = sh_word(())
        return sh_scale(out, LaurentPoly.term(1, s))


def standard_divisor(lam: KP, rs: RootSystem) -> LaurentPoly:
    """prod over parts beta and 1 <= r <= mult of (1 - q_beta^{2r})."""
    from .kostant import multiplicities

    out = LaurentPoly.one()
    for b, m in multiplicities(lam).items():
        db = rs.d_root(b)
        for r in range(1, m + 1):
            out = out * (LaurentPoly.one() - LaurentPoly.term(1, 2 * db * r))
    return out


def dim_standard(lam: KP, pbw: PBWCharacters, trunc: int) -> dict[Word, PowerSeries]:
    """Word-wise graded dimension series of the standard module for lambda."""
    ch = pbw.proper_standard(lam)
    div = standard_divisor(lam, pbw.rs)
    return {w: PowerSeries.from_poly(c, trunc).div_poly(div) for w, c in ch.items()}


def char_projective(j: Word, rs: RootSystem, trunc: int) -> dict[Word, PowerSeries]:
    """Character of the left projective at word j, to the truncation.

    The i-coefficient is sum over permutations sending j to i of
    q^{deg(w; j)}, divided by prod_k (1 - q^{2 d_{j_k}}).
    """
    n = len(j)
    div = LaurentPoly.one()
    for letter in j:
        d = rs.d[letter - 1]
        div = div * (LaurentPoly.one() - LaurentPoly.term(1, 2 * d))
    acc: dict[Word, dict[int, int]] = {}
    for perm in permutations(range(n)):
        word = [0] * n
        for k, target in enumerate(perm):
            word[target] = j[k]
        word = tuple(word)
        e = deg_stat(perm, j, rs)
        d = acc.setdefault(word, {})
        d[e] = d.get(e, 0) + 1
    return {
        w: PowerSeries.from_poly(LaurentPoly(exps), trunc).div_poly(div)
        for w, exps in acc.items()
    }


def dim_H(weight, rs: RootSystem, trunc: int) -> PowerSeries:
    """Graded dimension of the whole algebra at the given weight."""
    weight = tuple(weight)
    n = sum(weight)
    if n > 8:
        raise ValueError("height too large to enumerate the symmetric group")
    letters = []
    for i, c in enumerate(weight):
        letters.extend([i + 1] * c)
    words = sorted(set(permutations(letters)))
    total = PowerSeries({}, trunc)
    for i_word in words:
        div = LaurentPoly.one()
        for letter in i_word:
            d = rs.d[letter - 1]
            div = div * (LaurentPoly.one() - LaurentPoly.term(1, 2 * d))
        acc: dict[int, int] = {}
        for perm in permutations(range(n)):
            e = deg_stat(perm, i_word, rs)
            acc[e] = acc.get(e, 0) + 1
        total = total + PowerSeries.from_poly(LaurentPoly(acc), trunc).div_poly(div)
    return total


def dim_proper_standard(lam: KP, pbw: PBWCharacters) -> LaurentPoly:
    from .shuffle import sh_dim

    return sh_dim(pbw.proper_standard(lam))
