"""Exact sparse Laurent polynomials in q over Z, and truncated power series.

Every coefficient object in the toolkit is one of these two types.  Laurent
polynomials are kept as {exponent: coefficient} dicts with no zero entries;
all arithmetic is exact integer arithmetic.
"""

from __future__ import annotations


class ExactDivisionError(ArithmeticError):
    """Raised when a division that must be exact over Z[q, q^-1] is not."""


class LaurentPoly:
    __slots__ = ("c",)

    def __init__(self, c: dict[int, int] | None = None):
        self.c = c if c is not None else {}

    # -- constructors ------------------------------------------------------

    @classmethod
    def term(cls, coeff: int = 1, exp: int = 0) -> "LaurentPoly":
        return cls({exp: coeff} if coeff else {})

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def qint(cls, n: int, d: int = 1) -> "LaurentPoly":
        """Balanced quantum integer [n] with q replaced by q^d."""
        if n < 0:
            return -cls.qint(-n, d)
        return cls({d * (n - 1 - 2 * t): 1 for t in range(n)})

    @classmethod
    def qfact(cls, n: int, d: int = 1) -> "LaurentPoly":
        out = cls.one()
        for m in range(2, n + 1):
            out = out * cls.qint(m, d)
        return out

    # -- ring operations ---------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.c == ({0: other} if other else {})
        return isinstance(other, LaurentPoly) and self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.c)
        for e, a in other.c.items():
            b = out.get(e, 0) + a
            if b:
                out[e] = b
            else:
                del out[e]
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -a for e, a in self.c.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly()
            return LaurentPoly({e: a * other for e, a in self.c.items()})
        out: dict[int, int] = {}
        for e1, a1 in self.c.items():
            for e2, a2 in other.c.items():
                e = e1 + e2
                b = out.get(e, 0) + a1 * a2
                if b:
                    out[e] = b
                elif e in out:
                    del out[e]
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shift(self, n: int) -> "LaurentPoly":
        """Multiply by q^n."""
        return LaurentPoly({e + n: a for e, a in self.c.items()})

    # -- structure ---------------------------------------------------------

    def min_exp(self) -> int:
        return min(self.c)

    def max_exp(self) -> int:
        return max(self.c)

    def bar(self) -> "LaurentPoly":
        """The involution q -> q^-1."""
        return LaurentPoly({-e: a for e, a in self.c.items()})

    def is_bar_invariant(self) -> bool:
        return all(self.c.get(-e, 0) == a for e, a in self.c.items())

    def pos_part(self) -> "LaurentPoly":
        """Terms with strictly positive exponent."""
        return LaurentPoly({e: a for e, a in self.c.items() if e > 0})

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / other; raises ExactDivisionError otherwise."""
        if not other:
            raise ExactDivisionError("division by zero")
        if not self:
            return LaurentPoly()
        e0 = other.min_exp()
        c0 = other.c[e0]
        top = other.max_exp()
        rem = dict(self.c)
        quo: dict[int, int] = {}
        while rem:
            e = min(rem)
            a = rem[e]
            if a % c0:
                raise ExactDivisionError(f"coefficient {a} not divisible by {c0}")
            if e - e0 + top > max(rem):
                raise ExactDivisionError("inexact Laurent division")
            f = a // c0
            quo[e - e0] = f
            for eo, ao in other.c.items():
                k = e - e0 + eo
                b = rem.get(k, 0) - f * ao
                if b:
                    rem[k] = b
                elif k in rem:
                    del rem[k]
        return LaurentPoly(quo)

    def evaluate_one(self) -> int:
        """Value at q = 1."""
        return sum(self.c.values())

    # -- rendering ---------------------------------------------------------

    def to_json(self) -> dict[str, int]:
        return {str(e): self.c[e] for e in sorted(self.c)}

    @classmethod
    def from_json(cls, d: dict[str, int]) -> "LaurentPoly":
        return cls({int(e): a for e, a in d.items() if a})

    def __str__(self) -> str:
        if not self.c:
            return "0"
        bits = []
        for e in sorted(self.c):
            a = self.c[e]
            if e == 0:
                bits.append(f"{a}")
            else:
                mon = "q" if e == 1 else f"q^{e}"
                if a == 1:
                    bits.append(mon)
                elif a == -1:
                    bits.append(f"-{mon}")
                else:
                    bits.append(f"{a}*{mon}")
        out = bits[0]
        for b in bits[1:]:
            out += f" + {b}" if not b.startswith("-") else f" - {b[1:]}"
        return out

    __repr__ = __str__


def quantum_factors(p: LaurentPoly, max_n: int = 12) -> list[tuple[int, int]] | None:
    """Factor a positive bar-invariant polynomial as a product of [n] in q^d.

    Returns (n, d) pairs or None when no such factorization is found.
    Depth-first search over candidate factors; fine for table-sized inputs.
    """
    if p == LaurentPoly.one():
        return []
    if not p or min(p.c.values()) < 0 or not p.is_bar_invariant():
        return None
    top = p.max_exp()
    for d in range(top, 0, -1):
        for n in range(min(max_n, top // d + 1), 1, -1):
            try:
                q = p.exact_div(LaurentPoly.qint(n, d))
            except ExactDivisionError:
                continue
            rest = quantum_factors(q, max_n)
            if rest is not None:
                return sorted(rest + [(n, d)], key=lambda t: (t[1], t[0]))
    return None


def factor_quantum(p: LaurentPoly, d_labels: dict[int, int] | None = None) -> str:
    """Human rendering like "[2]_1[3]_1"; subscripts are node labels when a
    symmetrizer -> node map is supplied, else the raw q-powers."""
    fac = quantum_factors(p)
    if fac is None:
        return f"({p})"
    if not fac:
        return "1"
    bits = []
    for n, d in fac:
        sub = d_labels.get(d, d) if d_labels else d
        bits.append(f"[{n}]_{sub}")
    return "".join(bits)


class PowerSeries:
    """Laurent series truncated above a fixed degree.

    Exponents below the truncation bound are stored sparsely; everything
    above ``trunc`` is discarded.  Two series compare equal only at the same
    truncation.
    """

    __slots__ = ("c", "trunc")

    def __init__(self, c: dict[int, int] | None = None, trunc: int = 12):
        self.trunc = trunc
        self.c = {e: a for e, a in (c or {}).items() if a and e <= trunc}

    @classmethod
    def from_poly(cls, p: LaurentPoly, trunc: int = 12) -> "PowerSeries":
        return cls(dict(p.c), trunc)

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        return (
            isinstance(other, PowerSeries)
            and self.trunc == other.trunc
            and self.c == other.c
        )

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        t = min(self.trunc, other.trunc)
        out = {e: a for e, a in self.c.items() if e <= t}
        for e, a in other.c.items():
            if e <= t:
                b = out.get(e, 0) + a
                if b:
                    out[e] = b
                elif e in out:
                    del out[e]
        return PowerSeries(out, t)

    def __neg__(self):
        return PowerSeries({e: -a for e, a in self.c.items()}, self.trunc)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return PowerSeries({e: a * other for e, a in self.c.items()}, self.trunc)
        if isinstance(other, LaurentPoly):
            other = PowerSeries.from_poly(other, self.trunc)
        t = min(self.trunc, other.trunc)
        out: dict[int, int] = {}
        for e1, a1 in self.c.items():
            for e2, a2 in other.c.items():
                e = e1 + e2
                if e <= t:
                    b = out.get(e, 0) + a1 * a2
                    if b:
                        out[e] = b
                    elif e in out:
                        del out[e]
        return PowerSeries(out, t)

    __rmul__ = __mul__

    def div_poly(self, p: LaurentPoly) -> "PowerSeries":
        """Divide by a Laurent polynomial whose lowest term is +-q^e."""
        e0 = p.min_exp()
        c0 = p.c[e0]
        if c0 not in (1, -1):
            raise ExactDivisionError("series division needs a unit lowest term")
        rem = dict(self.c)
        out: dict[int, int] = {}
        while rem:
            e = min(rem)
            ee = e - e0
            if ee > self.trunc:
                break
            f = rem[e] * c0
            out[ee] = f
            # remainder terms above trunc+e0 can only feed quotient terms
            # above the truncation, so drop them
            for ep, ap in p.c.items():
                k = ee + ep
                if k <= self.trunc + e0:
                    b = rem.get(k, 0) - f * ap
                    if b:
                        rem[k] = b
                    elif k in rem:
                        del rem[k]
        return PowerSeries(out, self.trunc)

    def truncate(self, trunc: int) -> "PowerSeries":
        """Re-truncate to a lower bound."""
        if trunc > self.trunc:
            raise ValueError("cannot extend a truncated series")
        return PowerSeries({e: a for e, a in self.c.items() if e <= trunc}, trunc)

    def to_json(self) -> dict:
        return {"trunc": self.trunc, "coeff": {str(e): self.c[e] for e in sorted(self.c)}}

    def __str__(self):
        return str(LaurentPoly(dict(self.c))) + f" + O(q^{self.trunc + 1})"

    __repr__ = __str__
