"""Dense univariate polynomials over a ``FieldCtx``."""

from __future__ import annotations

from .fields import FieldCtx


class UniPoly:
    """Immutable univariate polynomial; ``coeffs[i]`` is the coefficient of T^i.

    The zero polynomial has empty ``coeffs`` and degree -1.
    """

    __slots__ = ("ctx", "coeffs", "_hash")

    def __init__(self, ctx: FieldCtx, coeffs=()):
        cs = [ctx(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.ctx = ctx
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, ctx, coeffs):
        # coeffs already field elements
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.coeffs = tuple(cs)
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, ctx, c) -> UniPoly:
        return cls(ctx, [c])

    @classmethod
    def monomial(cls, ctx, degree: int, c=1) -> UniPoly:
        return cls(ctx, [0] * degree + [c])

    @classmethod
    def gen(cls, ctx) -> UniPoly:
        return cls(ctx, [0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.ctx.zero

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ctx.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.ctx == other.ctx and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == UniPoly(self.ctx, [other])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, self.coeffs))
        return self._hash

    def _lift(self, other) -> UniPoly:
        if isinstance(other, UniPoly):
            if other.ctx != self.ctx:
                raise ValueError("polynomials over different fields")
            return other
        return UniPoly(self.ctx, [other])

    def __add__(self, other):
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly._raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly._raw(self.ctx, ())
        zero = self.ctx.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return UniPoly._raw(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = UniPoly(self.ctx, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree
        inv = 1 / other.lc
        zero = self.ctx.zero
        if len(r) - 1 < db:
            return UniPoly._raw(self.ctx, ()), self
        q = [zero] * (len(r) - db)
        bc = other.coeffs
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            if not c:
                continue
            c = c * inv
            q[k - db] = c
            for i in range(db + 1):
                r[k - db + i] = r[k - db + i] - c * bc[i]
        return UniPoly._raw(self.ctx, q), UniPoly._raw(self.ctx, r[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> UniPoly:
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def scale(self, c) -> UniPoly:
        c = self.ctx(c)
        return UniPoly._raw(self.ctx, [c * x for x in self.coeffs])

    def monic(self) -> UniPoly:
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        return self.scale(1 / self.lc)

    def derivative(self) -> UniPoly:
        return UniPoly._raw(self.ctx, [c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = self.ctx.zero * x if not isinstance(x, UniPoly) else UniPoly(self.ctx)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def inflate(self, e: int) -> UniPoly:
        """Substitute T -> T^e."""
        zero = self.ctx.zero
        out = [zero] * (e * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * e] = c
        return UniPoly._raw(self.ctx, out)

    def powmod(self, e: int, m: UniPoly) -> UniPoly:
        result = UniPoly(self.ctx, [1]) % m
        base = self % m
        while e:
            if e & 1:
                result = (result * base) % m
            base = (base * base) % m
            e >>= 1
        return result

    def sort_key(self):
        return (self.degree, tuple(_key(c) for c in reversed(self.coeffs)))

    def to_string(self, var: str = "T") -> str:
        from .printing import format_terms

        terms = [((i,), c) for i, c in reversed(list(enumerate(self.coeffs))) if c]
        return format_terms(terms, [var])

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"UniPoly({self.ctx}, {self.to_string()})"


def _key(c):
    return int(c) if not hasattr(c, "numerator") else c


def ext_gcd(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly, UniPoly]:
    """Return ``(g, s, t)`` with g the monic gcd and ``s*a + t*b == g``."""
    ctx = a.ctx
    if not a and not b:
        raise ValueError("gcd of two zero polynomials")
    r0, r1 = a, b
    s0, s1 = UniPoly(ctx, [1]), UniPoly(ctx)
    t0, t1 = UniPoly(ctx), UniPoly(ctx, [1])
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = 1 / r0.lc
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    if not a and not b:
        return UniPoly(a.ctx)
    while b:
        a, b = b, a % b
    return a.monic()


def squarefree_decomposition(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Square-free decomposition ``f = prod g_i^i`` of a monic polynomial.

    The factors are monic, square-free and pairwise coprime, sorted by
    multiplicity. In characteristic p, p-th powers are
    handled by taking p-th roots of coefficients (F_p is perfect).
    """
    if not f.is_monic() or f.degree < 1:
        raise ValueError("squarefree_decomposition expects a monic nonconstant polynomial")
    raw = _sqf_raw(f)
    parts = _coprime_refine(raw)
    by_mult: dict[int, UniPoly] = {}
    for g, m in parts:
        by_mult[m] = by_mult[m] * g if m in by_mult else g
    out = [(g.monic(), m) for m, g in by_mult.items()]
    out.sort(key=lambda gm: (gm[1], gm[0].sort_key()))
    return out


def _sqf_raw(f: UniPoly) -> list[tuple[UniPoly, int]]:
    ctx = f.ctx
    p = ctx.characteristic
    out = []
    df = f.derivative()
    if not df:
        # f = h(T^p)
        return [(g, m * p) for g, m in _sqf_raw(pth_root(f))]
    c = gcd(f, df)
    w = f.exact_div(c)
    i = 1
    while not w.is_one():
        y = gcd(w, c)
        fac = w.exact_div(y)
        if not fac.is_one():
            out.append((fac.monic(), i))
        w = y
        c = c.exact_div(y)
        i += 1
    if not c.is_one():
        out.extend((g, m * p) for g, m in _sqf_raw(pth_root(c.monic())))
    return out


def pth_root(f: UniPoly) -> UniPoly:
    """For f = h(T^p) over F_p, return h (coefficients are fixed by Frobenius)."""
    p = f.ctx.characteristic
    if p == 0:
        raise ValueError("p-th root needs positive characteristic")
    if any(c for i, c in enumerate(f.coeffs) if i % p):
        raise ValueError("polynomial is not a p-th power")
    return UniPoly._raw(f.ctx, f.coeffs[::p])


def _coprime_refine(parts: list[tuple[UniPoly, int]]) -> list[tuple[UniPoly, int]]:
    """Refine a product of powers into pairwise coprime factors."""
    parts = [(g, m) for g, m in parts if g.degree > 0]
    changed = True
    while changed:
        changed = False
        for i in range(len(parts)):
            for j in range(i + 1, len(parts)):
                (a, ma), (b, mb) = parts[i], parts[j]
                h = gcd(a, b)
                if h.degree > 0:
                    new = [(a.exact_div(h), ma), (b.exact_div(h), mb), (h, ma + mb)]
                    rest = [pm for k, pm in enumerate(parts) if k not in (i, j)]
                    parts = rest + [(g, m) for g, m in new if g.degree > 0]
                    changed = True
                    break
            if changed:
                break
    return parts
