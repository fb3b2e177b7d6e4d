"""Multivariable Laurent polynomials over Z.

Polynomials live in Z[t1^{+-1}, ..., tr^{+-1}] and are stored as a map from
exponent vectors (length-r integer tuples) to nonzero integer coefficients.
Unit normalization fixes the +-t^n ambiguity of Alexander-type invariants:
the canonical representative of a class has minimum exponent 0 in every
variable and positive coefficient on its lexicographically greatest term.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class RankMismatch(ValueError):
    """Operands live in Laurent rings of different ranks."""


class UnsupportedRank(ValueError):
    """Operation restricted to small ring rank."""


class NotSymmetrizable(ValueError):
    """No representative satisfies the palindrome condition."""


class _MinusInfinity:
    """Degree of the zero polynomial; ordered below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __neg__(self):
        raise ArithmeticError("cannot negate -infinity degree")

    def __repr__(self):
        return "-oo"


MINUS_INFINITY = _MinusInfinity()


class LaurentPoly:
    """An element of Z[t1^{+-1}, ..., tr^{+-1}]."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank, terms=None):
        self.rank = rank
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != rank:
                raise RankMismatch(f"exponent vector {exps} in rank-{rank} ring")
            c = int(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean

    # ---- constructors -------------------------------------------------
    @classmethod
    def zero(cls, rank):
        return cls(rank)

    @classmethod
    def const(cls, rank, c):
        return cls(rank, {(0,) * rank: c})

    @classmethod
    def one(cls, rank):
        return cls.const(rank, 1)

    @classmethod
    def monomial(cls, rank, exps, coeff=1):
        return cls(rank, {tuple(exps): coeff})

    @classmethod
    def var(cls, rank, i=0):
        exps = [0] * rank
        exps[i] = 1
        return cls(rank, {tuple(exps): 1})

    # ---- basic queries ------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_unit(self):
        """True for +-(single monomial with coefficient 1)."""
        return len(self.terms) == 1 and abs(next(iter(self.terms.values()))) == 1

    def support(self):
        return self.terms.keys()

    def coeff(self, exps):
        return self.terms.get(tuple(exps), 0)

    def content(self):
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    def min_exp(self, i):
        return min(e[i] for e in self.terms)

    def max_exp(self, i):
        return max(e[i] for e in self.terms)

    def leading(self):
        """(exponents, coefficient) of the lexicographically greatest term."""
        e = max(self.terms)
        return e, self.terms[e]

    # ---- arithmetic ---------------------------------------------------
    def _check(self, other):
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} vs {other.rank}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.rank, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) - c
        return LaurentPoly(self.rank, out)

    def __neg__(self):
        return LaurentPoly(self.rank, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(self.rank, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.rank, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = LaurentPoly.one(self.rank)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, exps):
        """Multiply by the monomial t^exps."""
        exps = tuple(exps)
        return LaurentPoly(self.rank,
                           {tuple(a + b for a, b in zip(e, exps)): c
                            for e, c in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, LaurentPoly) and self.rank == other.rank
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def __repr__(self):
        return f"LaurentPoly({render_poly(self)!r})"

    def evaluate(self, point):
        """Exact evaluation at a tuple of nonzero rationals/integers."""
        if len(point) != self.rank:
            raise RankMismatch("point has wrong length")
        total = Fraction(0)
        for e, c in self.terms.items():
            v = Fraction(c)
            for x, k in zip(point, e):
                v *= Fraction(x) ** k
            total += v
        return total


def lp_arith(a, b, op):
    """Spec-level dispatcher for ring arithmetic."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def laurent_degree(p):
    """Width of the support of a single-variable Laurent polynomial."""
    if p.rank != 1:
        raise RankMismatch("Laurent degree needs a rank-1 ring")
    if p.is_zero():
        return MINUS_INFINITY
    return p.max_exp(0) - p.min_exp(0)


# ---- unit normalization ----------------------------------------------

def normalize_unit(p):
    """Canonical representative of p modulo +-monomials."""
    if p.is_zero():
        return p
    shift = tuple(-p.min_exp(i) for i in range(p.rank))
    q = p.shift(shift)
    _, lead = q.leading()
    if lead < 0:
        q = -q
    return q


@dataclass(frozen=True)
class UnitClass:
    """A Laurent polynomial up to multiplication by +-monomials."""

    representative: LaurentPoly

    def __init__(self, poly):
        object.__setattr__(self, "representative", normalize_unit(poly))

    @property
    def rank(self):
        return self.representative.rank

    def is_zero(self):
        return self.representative.is_zero()

    def __str__(self):
        return render_poly(self.representative)


# ---- exact division ---------------------------------------------------

def div_exact(f, g):
    """f / g in the Laurent ring, or None when g does not divide f."""
    if f.rank != g.rank:
        raise RankMismatch("division across rings")
    if g.is_zero():
        return None
    if f.is_zero():
        return LaurentPoly.zero(f.rank)
    lo = tuple(f.min_exp(i) - g.min_exp(i) for i in range(f.rank))
    hi = tuple(f.max_exp(i) - g.max_exp(i) for i in range(f.rank))
    if any(a > b for a, b in zip(lo, hi)):
        return None
    ge, gc = g.leading()
    r = f
    q = {}
    while not r.is_zero():
        re, rc = r.leading()
        if rc % gc:
            return None
        e = tuple(a - b for a, b in zip(re, ge))
        # every quotient exponent is boxed by the support of f and g
        if any(x < a or x > b for x, a, b in zip(e, lo, hi)):
            return None
        c = rc // gc
        q[e] = c
        r = r - g.shift(e) * c
    return LaurentPoly(f.rank, q)


def divides(g, f):
    return div_exact(f, g) is not None


# ---- gcd ---------------------------------------------------------------

def _as_univar(p):
    """Coefficient list and offset for a rank-1 polynomial."""
    lo = p.min_exp(0)
    hi = p.max_exp(0)
    coeffs = [0] * (hi - lo + 1)
    for (e,), c in p.terms.items():
        coeffs[e - lo] = c
    return coeffs, lo


def _from_univar(coeffs, lo=0):
    return LaurentPoly(1, {(lo + i,): c for i, c in enumerate(coeffs) if c})


def _int_poly_content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
    return g


def _int_poly_primitive(a):
    g = _int_poly_content(a)
    return [c // g for c in a] if g > 1 else list(a)


def _int_poly_gcd(a, b):
    """Gcd in Z[t] of coefficient lists, by the primitive Euclid algorithm."""
    a = [c for c in a]
    b = [c for c in b]
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    if not a:
        return b
    if not b:
        return a
    ca, cb = _int_poly_content(a), _int_poly_content(b)
    a, b = _int_poly_primitive(a), _int_poly_primitive(b)
    while b:
        if len(a) < len(b):
            a, b = b, a
            continue
        # pseudo-remainder of a by b, scaling only as much as exactness needs
        r = list(a)
        lb = b[-1]
        while r and len(r) >= len(b):
            scale = lb // gcd(r[-1], lb)
            if scale != 1:
                r = [c * scale for c in r]
            q = r[-1] // lb
            off = len(r) - len(b)
            for i, c in enumerate(b):
                r[off + i] -= q * c
            while r and r[-1] == 0:
                r.pop()
        a, b = b, _int_poly_primitive(r) if r else []
    g = _int_poly_primitive(a)
    if g[-1] < 0:
        g = [-c for c in g]
    return [c * gcd(ca, cb) for c in g]


def _split_last(p):
    """View rank-r p as a polynomial in t_r with rank-(r-1) coefficients."""
    out = {}
    for e, c in p.terms.items():
        d = e[-1]
        out.setdefault(d, {})[e[:-1]] = c
    return {d: LaurentPoly(p.rank - 1, terms) for d, terms in out.items()}


def _join_last(rank, parts):
    terms = {}
    for d, coef in parts.items():
        for e, c in coef.terms.items():
            terms[e + (d,)] = c
    return LaurentPoly(rank, terms)


def _gcd_many(rank, polys):
    acc = LaurentPoly.zero(rank)
    for p in polys:
        acc = _gcd_poly(acc, p)
        if acc.is_unit():
            break
    return acc


def _gcd_poly(a, b):
    """A gcd of a and b in Z[t1^{+-1},...], not normalized."""
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if a.rank == 0:
        return LaurentPoly.const(0, gcd(a.coeff(()), b.coeff(())))
    if a.rank == 1:
        ca, _ = _as_univar(a)
        cb, _ = _as_univar(b)
        return _from_univar(_int_poly_gcd(ca, cb))
    # recurse on the last variable: gcd = gcd(contents) * gcd(primitive parts)
    pa, pb = _split_last(a), _split_last(b)
    cont_a = _gcd_many(a.rank - 1, pa.values())
    cont_b = _gcd_many(a.rank - 1, pb.values())
    cont = _gcd_poly(cont_a, cont_b)
    ppa = {d: div_exact(c, cont_a) for d, c in pa.items()}
    ppb = {d: div_exact(c, cont_b) for d, c in pb.items()}
    pp = _pp_gcd_last(a.rank, ppa, ppb)
    return _join_last(a.rank, {0: cont}) * pp


def _pp_gcd_last(rank, fa, fb):
    """Gcd of primitive (in t_last) polynomials via a primitive PRS."""
    def normalize(parts):
        if not parts:
            return {}
        lo = min(parts)
        return {d - lo: c for d, c in parts.items()}

    def prim(parts):
        if not parts:
            return {}
        cont = _gcd_many(rank - 1, parts.values())
        return {d: div_exact(c, cont) for d, c in parts.items()}

    a, b = normalize(fa), normalize(fb)
    while b:
        if max(a, default=0) < max(b, default=0):
            a, b = b, a
            continue
        # pseudo-remainder of a by b in the last variable
        db = max(b)
        lb = b[db]
        r = dict(a)
        while r and max(r) >= db:
            r = {d: c * lb for d, c in r.items()}
            top = max(r)
            q = div_exact(r[top], lb)
            for d, c in b.items():
                sd = top - db + d
                new = r.get(sd, LaurentPoly.zero(rank - 1)) - q * c
                if new.is_zero():
                    r.pop(sd, None)
                else:
                    r[sd] = new
        a, b = b, prim(normalize(r)) if r else {}
    return _join_last(rank, prim(a))


def lp_gcd(a, b):
    """Greatest common divisor in Z[F], unit-normalized.

    The multivariable case reduces to univariate gcds over the last variable
    (content/primitive-part recursion); the result is verified by exact
    division into both inputs.
    """
    if a.rank != b.rank:
        raise RankMismatch("gcd across rings")
    if a.rank > 3:
        raise UnsupportedRank("gcd implemented for rank <= 3")
    g = _gcd_poly(a, b)
    if not g.is_zero():
        if div_exact(a, g) is None or div_exact(b, g) is None:
            raise AssertionError("gcd verification failed")
    return UnitClass(g)


def lp_gcd_many(polys, rank):
    acc = LaurentPoly.zero(rank)
    for p in polys:
        acc = lp_gcd(acc, p).representative
        if acc.is_unit():
            break
    return UnitClass(acc)


# ---- symmetric representatives -----------------------------------------

@dataclass(frozen=True)
class SymmetricRepresentative:
    """q with q(t) = sign * t^(lo+hi) * q(1/t)."""

    poly: LaurentPoly
    sign: int


def symmetric_representative(p):
    """The (anti)symmetric representative of a rank-1 unit class."""
    rep = p.representative if isinstance(p, UnitClass) else normalize_unit(p)
    if rep.rank != 1:
        raise RankMismatch("symmetric representative needs rank 1")
    if rep.is_zero():
        return SymmetricRepresentative(rep, 1)
    d = rep.max_exp(0)
    coeffs = [rep.coeff((i,)) for i in range(d + 1)]
    if all(coeffs[i] == coeffs[d - i] for i in range(d + 1)):
        sign = 1
    elif all(coeffs[i] == -coeffs[d - i] for i in range(d + 1)):
        sign = -1
    else:
        raise NotSymmetrizable(render_poly(rep))
    if d % 2 == 0:
        rep = rep.shift((-(d // 2),))
    return SymmetricRepresentative(rep, sign)


# ---- ring maps ----------------------------------------------------------

def specialize(p, weights):
    """Push p through the ring map t^h -> t^(weights . h)."""
    if len(weights) != p.rank:
        raise RankMismatch("weight vector length != ring rank")
    out = {}
    for e, c in p.terms.items():
        k = sum(w * x for w, x in zip(weights, e))
        out[(k,)] = out.get((k,), 0) + c
    return LaurentPoly(1, out)


def is_monic(p):
    """Whether the top coefficient of the normalized representative is +-1."""
    rep = p.representative if isinstance(p, UnitClass) else normalize_unit(p)
    if rep.rank != 1:
        raise RankMismatch("monic test needs rank 1")
    if rep.is_zero():
        return False
    return abs(rep.coeff((rep.max_exp(0),))) == 1


# ---- text form ----------------------------------------------------------

def var_names(rank):
    return ["t"] if rank == 1 else [f"t{i + 1}" for i in range(rank)]


def render_poly(p, names=None):
    """Canonical text form: terms in descending lexicographic exponent order."""
    if p.is_zero():
        return "0"
    names = names or var_names(p.rank)
    chunks = []
    for e in sorted(p.terms, reverse=True):
        c = p.terms[e]
        factors = []
        for name, k in zip(names, e):
            if k == 1:
                factors.append(name)
            elif k != 0:
                factors.append(f"{name}^{k}")
        mag = abs(c)
        if factors:
            body = "*".join(factors)
            if mag != 1:
                body = f"{mag}*{body}"
        else:
            body = str(mag)
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)


def parse_poly(text, rank):
    """Inverse of render_poly (also accepts redundant whitespace)."""
    s = text.strip()
    if s == "0":
        return LaurentPoly.zero(rank)
    names = {name: i for i, name in enumerate(var_names(rank))}
    # split into signed terms
    tokens = s.replace("- ", "-").replace("+ ", "+").split()
    terms = {}
    for tok in tokens:
        sign = 1
        if tok.startswith("+"):
            tok = tok[1:]
        elif tok.startswith("-"):
            sign = -1
            tok = tok[1:]
        coeff = 1
        exps = [0] * rank
        for factor in tok.split("*"):
            if not factor:
                raise ValueError(f"bad term in {text!r}")
            if factor[0].isdigit():
                coeff *= int(factor)
                continue
            if "^" in factor:
                name, _, k = factor.partition("^")
                power = int(k)
            else:
                name, power = factor, 1
            if name not in names:
                raise ValueError(f"unknown variable {name!r} in {text!r}")
            exps[names[name]] += power
        e = tuple(exps)
        terms[e] = terms.get(e, 0) + sign * coeff
    return LaurentPoly(rank, terms)
