"""Proper standard modules, their contravariant form, and Gram matrices.

A module element is kept in the standard basis: minimal coset representative
times a tuple of cuspidal basis words, one per part.  Generators act through
the straightening engine; every straightened monomial is pushed back into
the standard basis by factorizing through the parabolic, letting the block
part act on the cuspidal tensor, and killing polynomial generators (they act
as zero on homogeneous cuspidal representations).

The form is computed by the projection recipe: apply the transposed
generator word, read off the coefficient of the distinguished block
involution x, and permute tensor slots by y.
"""

from __future__ import annotations

from fractions import Fraction

from .cartan import Root, RootSystem
from .convex import ConvexOrder, Word, good_lyndon_words
from .klr import (KLR, Perm, apply_perm_word, canon_word, perm_id,
                  perm_len, perm_of_word)
from .pbw import PBWCharacters


class NotHomogeneousError(ValueError):
    pass


class UnsupportedPartitionError(ValueError):
    pass


class HomogRep:
    """Cuspidal module spanned by one swap-class of words, x acting as zero."""

    def __init__(self, rs: RootSystem, base_word: Word):
        self.rs = rs
        self.base = tuple(base_word)
        self.words = self._swap_class(self.base)
        for w in self.words:
            for t in range(len(w) - 1):
                if w[t] == w[t + 1]:
                    raise NotHomogeneousError(f"{base_word}: repeated letter in {w}")
            for t in range(len(w) - 2):
                if w[t] == w[t + 2]:
                    raise NotHomogeneousError(f"{base_word}: distance-2 repeat in {w}")

    def _swap_class(self, base: Word) -> frozenset[Word]:
        C = self.rs.cartan
        seen = {base}
        frontier = [base]
        while frontier:
            nxt = []
            for w in frontier:
                for t in range(len(w) - 1):
                    a, b = w[t], w[t + 1]
                    if a != b and C[a - 1][b - 1] == 0:
                        w2 = w[:t] + (b, a) + w[t + 2:]
                        if w2 not in seen:
                            seen.add(w2)
                            nxt.append(w2)
            frontier = nxt
        return frozenset(seen)

    def tau(self, t: int, word: Word) -> Word | None:
        """Action of the t-th crossing (0-based, local): swap or zero."""
        a, b = word[t], word[t + 1]
        if a != b and self.rs.cartan[a - 1][b - 1] == 0:
            return word[:t] + (b, a) + word[t + 2:]
        return None

    def prefixes(self) -> frozenset[Word]:
        out = set()
        for w in self.words:
            for t in range(len(w) + 1):
                out.add(w[:t])
        return frozenset(out)


class ProperStandard:
    """The induced module attached to a Kostant partition, standard basis."""

    def __init__(self, engine: KLR, order: ConvexOrder, lam: tuple[Root, ...],
                 pbw: PBWCharacters | None = None, check_cuspidal: bool = True):
        self.engine = engine
        self.rs = engine.rs
        self.order = order
        self.lam = tuple(tuple(b) for b in lam)
        for a, b in zip(self.lam, self.lam[1:]):
            if order.rank_of[a] < order.rank_of[b]:
                raise ValueError("parts must be weakly decreasing")
        lwords = good_lyndon_words(self.rs)
        try:
            self.reps = [HomogRep(self.rs, lwords[b]) for b in self.lam]
        except NotHomogeneousError as e:
            raise UnsupportedPartitionError(
                f"a cuspidal factor is not homogeneous: {e}") from e
        if check_cuspidal:
            tab = pbw if pbw is not None else PBWCharacters(order)
            for b, rep in zip(self.lam, self.reps):
                expected = {w: 1 for w in rep.words}
                ch = tab.dual_root(b)
                got = {w: c.c for w, c in ch.items()}
                if got != {w: {0: 1} for w in expected}:
                    raise UnsupportedPartitionError(
                        f"cuspidal module for {b} is not homogeneous under this ordering"
                    )
        self.sizes = [sum(b) for b in self.lam]
        self.n = sum(self.sizes)
        self.offsets = []
        off = 0
        for s in self.sizes:
            self.offsets.append(off)
            off += s
        self.s_shift = sum(
            self.rs.d_root(b) * m * (m - 1) // 2
            for b, m in _mults(self.lam).items()
        )
        self.y = self._build_y()
        self.x = self._build_x()

    # -- block combinatorics -------------------------------------------------

    def _build_y(self) -> Perm:
        l = len(self.lam)
        y = list(range(l))
        t = 0
        while t < l:
            u = t
            while u + 1 < l and self.lam[u + 1] == self.lam[t]:
                u += 1
            for s in range(t, u + 1):
                y[s] = u - (s - t)
            t = u + 1
        return tuple(y)

    def _build_x(self) -> Perm:
        x = [0] * self.n
        for t in range(len(self.lam)):
            for s in range(self.sizes[t]):
                x[self.offsets[t] + s] = self.offsets[self.y[t]] + s
        return tuple(x)

    def coset_factorize(self, u: Perm) -> tuple[Perm, Perm]:
        """u = u1 * u2 with u1 increasing on blocks and u2 block-preserving."""
        u1 = list(u)
        u2 = list(range(self.n))
        for t, off in enumerate(self.offsets):
            size = self.sizes[t]
            vals = sorted(range(size), key=lambda s: u[off + s])
            for s in range(size):
                u1[off + s] = u[off + vals[s]]
            inv = [0] * size
            for s in range(size):
                inv[vals[s]] = s
            for s in range(size):
                u2[off + s] = off + inv[s]
        return tuple(u1), tuple(u2)

    def block_word(self, u2: Perm) -> tuple[int, ...]:
        """A reduced word for a block-preserving permutation."""
        out = []
        for t, off in enumerate(self.offsets):
            size = self.sizes[t]
            local = tuple(u2[off + s] - off for s in range(size))
            out.extend(off + c for c in canon_word(local))
        return tuple(out)

    def apply_block_perm(self, u2: Perm, words: tuple[Word, ...]):
        """Act a block-preserving permutation on the cuspidal tensor."""
        words = list(words)
        for t, off in enumerate(self.offsets):
            size = self.sizes[t]
            local = tuple(u2[off + s] - off for s in range(size))
            for c in reversed(canon_word(local)):
                w2 = self.reps[t].tau(c, words[t])
                if w2 is None:
                    return None
                words[t] = w2
        return tuple(words)

    # -- elements --------------------------------------------------------------

    def cyclic(self):
        return {(perm_id(self.n), tuple(r.base for r in self.reps)): 1}

    def concat(self, words) -> Word:
        out: tuple[int, ...] = ()
        for w in words:
            out += w
        return out

    def basis_degree(self, u: Perm, words) -> int:
        key = (self.concat(words), u, self.engine.zeros(self.n))
        return self.engine.degree(key) + self.s_shift

    def left_word(self, u: Perm, words) -> Word:
        return apply_perm_word(u, self.concat(words))

    # -- reduction to the standard basis ---------------------------------------

    def _reduce_term(self, coeff: int, exps, u: Perm, words, out: dict):
        if not coeff:
            return
        u1, u2 = self.coset_factorize(u)
        jword = self.concat(words)
        if u2 != perm_id(self.n):
            rw = canon_word(u1) + self.block_word(u2)
            E = self.engine.word_to_normal(rw, jword)
            lead = (jword, u, self.engine.zeros(self.n))
            if E.get(lead) != 1:
                raise AssertionError("coset rewriting lost its leading term")
            w2 = self.apply_block_perm(u2, words)
            if w2 is not None:
                self._reduce_term(coeff, exps, u1, w2, out)
            for (iw, wv, b), c in E.items():
                if (iw, wv, b) == lead:
                    continue
                b2 = tuple(x + y for x, y in zip(exps, b))
                self._reduce_term(-coeff * c, b2, wv, words, out)
            return
        if any(exps):
            # push the leftmost x factor through the crossings; survivors die
            p = next(t for t, e in enumerate(exps) if e)
            exps2 = list(exps)
            exps2[p] -= 1
            exps2 = tuple(exps2)
            cw = canon_word(u)
            pos = p
            for idx, c in enumerate(cw):
                if pos == c or pos == c + 1:
                    rest = cw[idx + 1:]
                    jrest = apply_perm_word(perm_of_word(rest, self.n), jword)
                    if jrest[c] == jrest[c + 1]:
                        sign = -1 if pos == c else 1
                        sub = self.engine.apply_tau_word(
                            cw[:idx] + rest, self.engine.idempotent(jword))
                        for (iw, wv, b), cc in sub.items():
                            b2 = tuple(x + y for x, y in zip(exps2, b))
                            self._reduce_term(sign * coeff * cc, b2, wv, words, out)
                    pos = c + 1 if pos == c else c
            return
        key = (u, tuple(words))
        out[key] = out.get(key, 0) + coeff
        if not out[key]:
            del out[key]

    # -- action -----------------------------------------------------------------

    def act_tau(self, k: int, vec: dict) -> dict:
        out: dict = {}
        for (u, words), c in vec.items():
            E = self.engine.tau_times_perm(k, u, self.concat(words))
            for (iw, wv, b), c2 in E.items():
                self._reduce_term(c * c2, b, wv, words, out)
        return out

    def act_x(self, p: int, vec: dict) -> dict:
        out: dict = {}
        zero = self.engine.zeros(self.n)
        for (u, words), c in vec.items():
            exps = list(zero)
            exps[p] += 1
            self._reduce_term(c, tuple(exps), u, words, out)
        return out

    def act_word(self, taus, vec: dict) -> dict:
        """Apply tau generators right-to-left (0-based positions)."""
        for k in reversed(tuple(taus)):
            vec = self.act_tau(k, vec)
            if not vec:
                return {}
        return vec

    def act_transposed_word(self, taus, vec: dict) -> dict:
        """Apply the transpose of the given tau word."""
        for k in tuple(taus):
            vec = self.act_tau(k, vec)
            if not vec:
                return {}
        return vec

    # -- slices and the form ------------------------------------------------------

    def slice_basis(self, word: Word, degree: int | None = None):
        """Standard basis vectors in a word space, optionally one degree slice.

        Parses the word as an interleaving of cuspidal class words, block by
        block, which enumerates exactly the minimal coset representatives.
        """
        word = tuple(word)
        if len(word) != self.n:
            return []
        prefix_sets = [rep.prefixes() for rep in self.reps]
        results = []

        def rec(pos, partial, assigned):
            if pos == self.n:
                if all(partial[t] in self.reps[t].words for t in range(len(self.lam))):
                    results.append((tuple(partial), [list(a) for a in assigned]))
                return
            letter = word[pos]
            for t in range(len(self.lam)):
                cand = partial[t] + (letter,)
                if cand in prefix_sets[t]:
                    partial[t] = cand
                    assigned[t].append(pos)
                    rec(pos + 1, partial, assigned)
                    assigned[t].pop()
                    partial[t] = cand[:-1]

        rec(0, [()] * len(self.lam), [[] for _ in self.lam])
        basis = []
        for words, assigned in results:
            u1 = [0] * self.n
            for t, positions in enumerate(assigned):
                for s, target in enumerate(positions):
                    u1[self.offsets[t] + s] = target
            u1 = tuple(u1)
            if degree is None or self.basis_degree(u1, words) == degree:
                basis.append((u1, words))
        basis.sort(key=lambda bw: (perm_len(bw[0]), bw[0], bw[1]))
        return basis

    def pair_cyclicward(self, vec: dict, words_rhs, sign: int = 1) -> int:
        """<vec, 1 (x) v_{words_rhs}> by the projection recipe."""
        total = 0
        for (u, words), c in vec.items():
            if u != self.x:
                continue
            if all(words[self.y[t]] == words_rhs[t] for t in range(len(self.lam))):
                total += c
        return sign * total

    def pair_basis(self, left, right, sign: int = 1) -> int:
        """Contravariant pairing of two standard basis vectors."""
        u2, w2 = right
        vec = {tuple(left): 1}
        vec = self.act_transposed_word(canon_word(u2), vec)
        return self.pair_cyclicward(vec, w2, sign)

    def gram_matrix(self, word: Word, degree: int = 0, sign: int = 1):
        rows = self.slice_basis(word, degree)
        cols = rows if degree == 0 else self.slice_basis(word, -degree)
        return [[self.pair_basis(r, c, sign) for c in cols] for r in rows]


def _mults(lam):
    m: dict[Root, int] = {}
    for b in lam:
        m[b] = m.get(b, 0) + 1
    return m


def rank_over(matrix, p: int = 0) -> int:
    """Rank over Q (p = 0) or over F_p (p prime)."""
    if not matrix or not matrix[0]:
        return 0
    rows = [list(r) for r in matrix]
    ncols = len(rows[0])
    if p:
        rows = [[a % p for a in r] for r in rows]
        rank = 0
        for col in range(ncols):
            piv = next((r for r in range(rank, len(rows)) if rows[r][col] % p), None)
            if piv is None:
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            inv = pow(rows[rank][col], -1, p)
            rows[rank] = [(a * inv) % p for a in rows[rank]]
            for r in range(len(rows)):
                if r != rank and rows[r][col]:
                    f = rows[r][col]
                    rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[rank])]
            rank += 1
        return rank
    rows = [[Fraction(a) for a in r] for r in rows]
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        lead = rows[rank][col]
        rows[rank] = [a / lead for a in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank
