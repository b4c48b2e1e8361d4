"""Koszul-style projective resolutions of root modules, multiplicity-free case.

Summands are indexed by sign vectors sigma in {0,1}^(n-1); the word and
degree shift of each summand follow the minimal-pair recursion, and the
differential entry between vectors differing in one slot is (up to sign) the
unique crossing monomial matching the two words.  Right multiplication on
row vectors is the differential convention throughout.
"""

from __future__ import annotations

from .cartan import Root
from .convex import ConvexOrder, Word, mp_choice
from .klr import KLR, Element, klr_to_json
from .kostant import root_kappa
from .laurent import LaurentPoly, PowerSeries
from .pbw import PBWCharacters, char_projective, standard_divisor


class NotMultiplicityFreeError(ValueError):
    pass


def summand_data(alpha: Root, order: ConvexOrder) -> dict[tuple, tuple[Word, int]]:
    """(word, shift) for each sign vector, by the minimal-pair recursion."""
    rs = order.rs
    n = sum(alpha)
    if n == 1:
        return {(): ((alpha.index(1) + 1,), 0)}
    beta, gamma = mp_choice(alpha, order)
    m = sum(gamma)
    bg = rs.form(beta, gamma)
    sub_g = summand_data(gamma, order)
    sub_b = summand_data(beta, order)
    out = {}
    for sg, (wg, dg) in sub_g.items():
        for sb, (wb, db) in sub_b.items():
            for mid in (0, 1):
                sigma = sg + (mid,) + sb
                if mid == 0:
                    out[sigma] = (wg + wb, dg + db)
                else:
                    out[sigma] = (wb + wg, dg + db - bg)
    return out


class ChainComplex:
    """Summands by homological degree plus differential matrices."""

    def __init__(self, alpha: Root, terms, differentials, engine: KLR):
        self.alpha = alpha
        self.terms = terms            # d -> list of (shift, word)
        self.differentials = differentials  # d -> matrix of Elements, P_d -> P_{d-1}
        self.engine = engine

    def to_json(self) -> dict:
        terms = [
            {"d": d, "summands": [{"shift": s, "word": "".join(map(str, w))}
                                  for s, w in self.terms[d]]}
            for d in sorted(self.terms)
        ]
        diffs = [
            {"from": d, "matrix": [[klr_to_json(e, self.engine) for e in row]
                                   for row in self.differentials[d]]}
            for d in sorted(self.differentials)
        ]
        return {"alpha": list(self.alpha), "terms": terms, "differentials": diffs}


def resolution(alpha: Root, order: ConvexOrder, engine: KLR | None = None) -> ChainComplex:
    rs = order.rs
    alpha = tuple(alpha)
    if any(c > 1 for c in alpha):
        raise NotMultiplicityFreeError(f"{alpha} is not multiplicity-free")
    if root_kappa(alpha, order) != LaurentPoly.one():
        raise NotMultiplicityFreeError(f"kappa of {alpha} is not 1")
    if engine is None:
        engine = KLR(rs)
    n = sum(alpha)
    data = summand_data(alpha, order)
    by_d: dict[int, list[tuple]] = {}
    for sigma, (word, shift) in data.items():
        by_d.setdefault(sum(sigma), []).append(sigma)
    sig_key = lambda s: sum(c << t for t, c in enumerate(s))
    for d in by_d:
        by_d[d].sort(key=sig_key)
    terms = {d: [(data[s][1], data[s][0]) for s in by_d[d]] for d in by_d}
    diffs: dict[int, list[list[Element]]] = {}
    for d in sorted(by_d):
        if d == 0:
            continue
        rows = by_d[d]
        cols = by_d[d - 1]
        matrix = []
        for sigma in rows:
            row = []
            for rho in cols:
                row.append(_diff_entry(sigma, rho, data, engine))
            matrix.append(row)
        diffs[d] = matrix
    return ChainComplex(alpha, terms, diffs, engine)


def _diff_entry(sigma, rho, data, engine: KLR) -> Element:
    delta = [t for t in range(len(sigma)) if sigma[t] != rho[t]]
    if len(delta) != 1:
        return {}
    r = delta[0]
    sign = -1 if sum(sigma[:r]) % 2 else 1
    wi, _ = data[sigma]
    wr, _ = data[rho]
    if len(set(wr)) != len(wr):
        raise NotMultiplicityFreeError("repeated letters break uniqueness of the crossing")
    # unique w with w(word_rho) = word_sigma
    pos_in_sigma = {letter: t for t, letter in enumerate(wi)}
    w = tuple(pos_in_sigma[letter] for letter in wr)
    return engine.monomial(wr, w, coeff=sign)


def verify_complex(cx: ChainComplex) -> bool:
    """All consecutive differential products straighten to zero."""
    engine = cx.engine
    ds = sorted(cx.differentials)
    for d in ds:
        if d - 1 not in cx.differentials:
            continue
        A = cx.differentials[d]
        B = cx.differentials[d - 1]
        for i in range(len(A)):
            for j in range(len(B[0])):
                total: Element = {}
                for k in range(len(B)):
                    prod = engine.multiply(A[i][k], B[k][j])
                    for key, c in prod.items():
                        b = total.get(key, 0) + c
                        if b:
                            total[key] = b
                        elif key in total:
                            del total[key]
                if total:
                    return False
    return True


def euler_character(cx: ChainComplex, order: ConvexOrder, trunc: int) -> dict[Word, PowerSeries]:
    """Alternating sum of summand characters, as word -> series."""
    rs = order.rs
    out: dict[Word, PowerSeries] = {}
    for d, summands in cx.terms.items():
        sign = -1 if d % 2 else 1
        for shift, word in summands:
            ch = char_projective(word, rs, trunc)
            for w, series in ch.items():
                shifted = series * LaurentPoly.term(sign, shift)
                cur = out.get(w)
                out[w] = shifted if cur is None else cur + shifted
    return {w: s for w, s in out.items() if s}


def expected_euler(alpha: Root, order: ConvexOrder, pbw: PBWCharacters,
                   trunc: int) -> dict[Word, PowerSeries]:
    """Character series of the root's standard module at the truncation."""
    ch = pbw.dual_root(tuple(alpha))
    div = standard_divisor((tuple(alpha),), order.rs)
    return {
        w: PowerSeries.from_poly(c, trunc).div_poly(div)
        for w, c in ch.items()
    }


def euler_matches(cx: ChainComplex, order: ConvexOrder, pbw: PBWCharacters,
                  trunc: int) -> bool:
    got = euler_character(cx, order, trunc)
    want = expected_euler(cx.alpha, order, pbw, trunc)
    return got == want
