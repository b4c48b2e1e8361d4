"""Straightening kernel for quiver Hecke algebras of finite type.

Elements are sparse integer combinations of basis monomials
x^k tau_w 1_i, keyed by (right idempotent word, permutation, exponent
vector).  The permutation's tau-product is taken along its canonical
reduced word (repeatedly extract the smallest left descent).

Left multiplication by a single generator is the primitive everything else
reduces to.  Multiplying tau_k onto tau_w with k an ascent rewrites the
word (k) + canon(w) into canonical form; each braid move emits correction
terms with strictly fewer crossings, so the recursion is well founded.
Descents go through the quadratic relation.

Positions are 0-based internally (tau_k crosses strands k and k+1,
0 <= k <= n-2); words are tuples of 1-based node labels.
"""

from __future__ import annotations

import sys

from .cartan import RootSystem

# straightening recursion nests once per crossing; long words need headroom
sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

Perm = tuple[int, ...]
Monomial = tuple  # (word, perm, exps)
Element = dict  # Monomial -> int

_CANON_CACHE: dict[Perm, tuple[int, ...]] = {}


# -- permutation helpers -----------------------------------------------------

def perm_id(n: int) -> Perm:
    return tuple(range(n))


def perm_mult(a: Perm, b: Perm) -> Perm:
    """(a*b)(k) = a(b(k))."""
    return tuple(a[b[k]] for k in range(len(a)))


def perm_inv(a: Perm) -> Perm:
    out = [0] * len(a)
    for k, v in enumerate(a):
        out[v] = k
    return tuple(out)


def perm_len(a: Perm) -> int:
    n = len(a)
    return sum(1 for j in range(n) for k in range(j + 1, n) if a[j] > a[k])


def swap_values(w: Perm, k: int) -> Perm:
    """Left multiplication s_k * w (swap the values k, k+1)."""
    return tuple(k + 1 if v == k else k if v == k + 1 else v for v in w)


def perm_of_word(seq, n: int) -> Perm:
    """Product s_{seq_1} ... s_{seq_m} as a permutation (0-based letters)."""
    w = list(range(n))
    for k in seq:
        # right multiplication by s_k swaps the entries at k, k+1
        w[k], w[k + 1] = w[k + 1], w[k]
    return tuple(w)


def canon_word(w: Perm) -> tuple[int, ...]:
    """Canonical reduced word: repeatedly extract the smallest left descent."""
    hit = _CANON_CACHE.get(w)
    if hit is not None:
        return hit
    out = []
    cur = list(w)
    n = len(w)
    pos = [0] * n
    for k, v in enumerate(cur):
        pos[v] = k
    while True:
        d = -1
        for k in range(n - 1):
            if pos[k] > pos[k + 1]:
                d = k
                break
        if d < 0:
            break
        out.append(d)
        pk, pk1 = pos[d], pos[d + 1]
        cur[pk], cur[pk1] = d + 1, d
        pos[d], pos[d + 1] = pk1, pk
    res = tuple(out)
    _CANON_CACHE[w] = res
    return res


def apply_perm_word(w: Perm, word) -> tuple:
    out = [0] * len(word)
    for k, target in enumerate(w):
        out[target] = word[k]
    return tuple(out)


def add_into(dst: Element, key: Monomial, coeff: int):
    if not coeff:
        return
    b = dst.get(key, 0) + coeff
    if b:
        dst[key] = b
    elif key in dst:
        del dst[key]


def elem_add(a: Element, b: Element) -> Element:
    out = dict(a)
    for k, c in b.items():
        add_into(out, k, c)
    return out


def elem_scale(a: Element, c: int) -> Element:
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


class ResourceBudgetError(RuntimeError):
    """Straightening produced more monomials than the configured budget."""


class KLR:
    """The algebra attached to one root system and sign convention.

    The weight is implicit: elements of different weights simply live in
    orthogonal word blocks and multiply to zero.
    """

    def __init__(self, rs: RootSystem, eps: dict[tuple[int, int], int] | None = None,
                 term_budget: int = 10_000_000):
        self.rs = rs
        self.cartan = rs.cartan
        self.d = rs.d
        if eps is None:
            eps = {}
            r = rs.rank
            for i in range(1, r + 1):
                for j in range(1, r + 1):
                    if i != j and rs.cartan[i - 1][j - 1] < 0:
                        eps[(i, j)] = 1 if i < j else -1
        self.eps = eps
        for (i, j), s in eps.items():
            if eps.get((j, i), 0) * s != -1:
                raise ValueError(f"sign convention violates eps({i},{j})eps({j},{i}) = -1")
        self.term_budget = term_budget
        self._ttp: dict[tuple, Element] = {}
        self._w2n: dict[tuple, Element] = {}
        self._zeros: dict[int, tuple] = {}

    def _guard(self, elem: Element) -> Element:
        if len(elem) > self.term_budget:
            raise ResourceBudgetError(
                f"straightening exceeded {self.term_budget} monomials")
        return elem

    # -- constructors --------------------------------------------------------

    def zeros(self, n: int) -> tuple:
        z = self._zeros.get(n)
        if z is None:
            z = self._zeros[n] = (0,) * n
        return z

    def idempotent(self, word) -> Element:
        word = tuple(word)
        n = len(word)
        return {(word, perm_id(n), self.zeros(n)): 1}

    def monomial(self, word, w: Perm, exps=None, coeff: int = 1) -> Element:
        word = tuple(word)
        if exps is None:
            exps = self.zeros(len(word))
        return {(word, w, tuple(exps)): coeff} if coeff else {}

    # -- relations data ------------------------------------------------------

    def quad_terms(self, k: int, j) -> list[tuple[int, dict[int, int]]]:
        """tau_k^2 1_j as [(coeff, {position: exponent})]."""
        a, b = j[k], j[k + 1]
        if a == b:
            return []
        c_ab = self.cartan[a - 1][b - 1]
        if c_ab < 0:
            c_ba = self.cartan[b - 1][a - 1]
            e = self.eps[(a, b)]
            return [(e, {k: -c_ab}), (-e, {k + 1: -c_ba})]
        return [(1, {})]

    def braid_terms(self, k: int, j) -> list[tuple[int, dict[int, int]]]:
        """(tau_{k+1}tau_k tau_{k+1} - tau_k tau_{k+1} tau_k) 1_j, positions k,k+1,k+2."""
        a, b = j[k], j[k + 1]
        if j[k + 2] != a or self.cartan[a - 1][b - 1] >= 0:
            return []
        c_ab = self.cartan[a - 1][b - 1]
        e = self.eps[(a, b)]
        out = []
        for r in range(-1 - c_ab + 1):
            s = -1 - c_ab - r
            out.append((e, {k: r, k + 2: s}))
        return out

    # -- generator products --------------------------------------------------

    def lmul_x(self, p: int, elem: Element) -> Element:
        out: Element = {}
        for (i, w, a), c in elem.items():
            a2 = list(a)
            a2[p] += 1
            add_into(out, (i, w, tuple(a2)), c)
        return out

    def lmul_e(self, word, elem: Element) -> Element:
        word = tuple(word)
        out: Element = {}
        for key, c in elem.items():
            i, w, a = key
            if apply_perm_word(w, i) == word:
                out[key] = c
        return out

    def lmul_tau(self, k: int, elem: Element) -> Element:
        out: Element = {}
        for (i, w, a), c in elem.items():
            main = self.tau_times_perm(k, w, i)
            if any(a):
                a2 = list(a)
                a2[k], a2[k + 1] = a2[k + 1], a2[k]
                a2 = tuple(a2)
                for (i2, w2, b), c2 in main.items():
                    b2 = tuple(x + y for x, y in zip(b, a2))
                    add_into(out, (i2, w2, b2), c * c2)
                j = apply_perm_word(w, i)
                if j[k] == j[k + 1]:
                    for coeff, exps in _demazure(a, k):
                        add_into(out, (i, w, exps), c * coeff)
            else:
                for key, c2 in main.items():
                    add_into(out, key, c * c2)
        return self._guard(out)

    def tau_times_perm(self, k: int, w: Perm, i) -> Element:
        """Normal form of tau_k tau_w 1_i (tau_w the canonical monomial)."""
        key = (k, w, i)
        hit = self._ttp.get(key)
        if hit is not None:
            return hit
        invw = perm_inv(w)
        if invw[k] < invw[k + 1]:
            # ascent
            u = swap_values(w, k)
            cu = canon_word(u)
            if cu[0] == k:
                out = self.monomial(i, u)
            else:
                out = self.word_to_normal((k,) + canon_word(w), i)
        else:
            # descent: tau_k tau_w = tau_k^2 tau_{w'} - tau_k C  where
            # tau_k tau_{w'} = tau_w + C and w' = s_k w
            w2 = swap_values(w, k)
            E = self.tau_times_perm(k, w2, i)
            C = dict(E)
            lead = (tuple(i), w, self.zeros(len(w)))
            if C.get(lead) != 1:
                raise AssertionError("missing unit leading term in ascent product")
            del C[lead]
            j2 = apply_perm_word(w2, i)
            out: Element = {}
            zero = self.zeros(len(w))
            for coeff, expmap in self.quad_terms(k, j2):
                exps = list(zero)
                for p, e in expmap.items():
                    exps[p] += e
                add_into(out, (tuple(i), w2, tuple(exps)), coeff)
            if C:
                out = elem_add(out, elem_scale(self.lmul_tau(k, C), -1))
        self._ttp[key] = self._guard(out)
        return out

    def word_to_normal(self, seq, i) -> Element:
        """Normal form of a product of taus along a reduced word."""
        key = (seq, i)
        hit = self._w2n.get(key)
        if hit is not None:
            return hit
        n = len(i)
        v = perm_of_word(seq, n)
        cv = canon_word(v)
        if tuple(seq) == cv:
            out = self.monomial(i, v)
        else:
            tail, corr = self.front_elem(tuple(seq), cv[0], tuple(i))
            inner = self.word_to_normal(tail, i)
            out = self.lmul_tau(cv[0], inner)
            if corr:
                out = elem_add(out, corr)
        self._w2n[key] = self._guard(out)
        return out

    def front_elem(self, seq, g: int, i) -> tuple[tuple, Element]:
        """Rewrite so the word starts with g: tau_seq 1_i = tau_g tau_tail 1_i + corr.

        Requires seq reduced with g a left descent of its permutation; the
        returned (g,) + tail is again reduced and corr is in normal form
        with strictly fewer crossings.
        """
        if seq[0] == g:
            return seq[1:], {}
        h = seq[0]
        rt, c1 = self.front_elem(seq[1:], g, i)
        if abs(h - g) >= 2:
            corr = self.lmul_tau(h, c1) if c1 else {}
            return (h,) + rt, corr
        t2, c2 = self.front_elem(rt, h, i)
        corr: Element = {}
        if c2:
            corr = elem_add(corr, self.lmul_tau(h, self.lmul_tau(g, c2)))
        if c1:
            corr = elem_add(corr, self.lmul_tau(h, c1))
        # braid move at the front, on the word right of the three crossings
        v2 = perm_of_word(t2, len(i))
        jj = apply_perm_word(v2, i)
        kk = min(g, h)
        terms = self.braid_terms(kk, jj)
        if terms:
            sign = 1 if h > g else -1
            base = self.word_to_normal(t2, i)
            for coeff, expmap in terms:
                for (iw, wv, a), c in base.items():
                    a2 = list(a)
                    for p, e in expmap.items():
                        a2[p] += e
                    add_into(corr, (iw, wv, tuple(a2)), sign * coeff * c)
        return (h, g) + t2, corr

    # -- whole-element operations ---------------------------------------------

    def apply_tau_word(self, seq, elem: Element) -> Element:
        """Left multiply by tau_{seq_1} ... tau_{seq_m} (arbitrary word)."""
        for k in reversed(tuple(seq)):
            elem = self.lmul_tau(k, elem)
            if not elem:
                return {}
        return elem

    def multiply(self, e1: Element, e2: Element) -> Element:
        out: Element = {}
        for (i1, w1, a1), c1 in e1.items():
            part = self.lmul_e(i1, e2)
            if not part:
                continue
            part = self.apply_tau_word(canon_word(w1), part)
            for (i2, w2, a2), c2 in part.items():
                b = tuple(x + y for x, y in zip(a1, a2))
                add_into(out, (i2, w2, b), c1 * c2)
        return out

    def transpose(self, elem: Element) -> Element:
        """The anti-automorphism fixing all generators."""
        out: Element = {}
        for (i, w, a), c in elem.items():
            j = apply_perm_word(w, i)
            cur = self.monomial(j, perm_id(len(j)), a, c)
            for t in canon_word(w):
                cur = self.lmul_tau(t, cur)
            out = elem_add(out, cur)
        return out

    def degree(self, key: Monomial) -> int:
        i, w, a = key
        j = apply_perm_word(w, i)
        B = self.rs.bilinear_matrix
        deg = sum(2 * self.d[j[p] - 1] * a[p] for p in range(len(a)) if a[p])
        n = len(i)
        for p in range(n):
            for q in range(p + 1, n):
                if w[p] > w[q]:
                    deg -= B[i[p] - 1][i[q] - 1]
        return deg

    def is_homogeneous(self, elem: Element) -> bool:
        degs = {self.degree(k) for k in elem}
        return len(degs) <= 1

    def nilhecke_idempotent(self, letter: int, m: int) -> Element:
        """x_2 x_3^2 ... x_m^{m-1} tau_{w0} on the word letter^m."""
        word = (letter,) * m
        w0 = tuple(range(m - 1, -1, -1))
        return self.monomial(word, w0, tuple(range(m)))


def _demazure(a, k: int) -> list[tuple[int, tuple]]:
    """(s_k x^a - x^a) / (x_k - x_{k+1}) as [(coeff, exps)]."""
    p, q = a[k], a[k + 1]
    if p == q:
        return []
    out = []
    base = list(a)
    if p > q:
        for t in range(p - q):
            e = list(base)
            e[k] = q + t
            e[k + 1] = p - 1 - t
            out.append((-1, tuple(e)))
    else:
        for t in range(q - p):
            e = list(base)
            e[k] = p + t
            e[k + 1] = q - 1 - t
            out.append((1, tuple(e)))
    return out


def klr_to_json(elem: Element, klr: KLR) -> list[dict]:
    items = []
    for (i, w, a) in sorted(elem):
        word = "".join(map(str, i)) if all(x <= 9 for x in i) else \
            ",".join(map(str, i))
        items.append({
            "word": word,
            "perm": list(w),
            "exps": list(a),
            "coeff": elem[(i, w, a)],
        })
    return items
