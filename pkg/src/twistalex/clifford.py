"""Exact Clifford algebra arithmetic over the Gaussian rationals.

Elements of Cl(K^n) are blade-coefficient expansions with the relations
e_i^2 = -1 and e_i e_j = -e_j e_i.  On top of the arithmetic sit machine
verifications of the explicit low-dimensional isomorphisms: the 4x4 complex
matrix model, the quaternion model in dimension 3, the even-subalgebra
embedding, the splittings induced by volume elements, the Hodge star in
dimension 4, and the orthogonality of the twisted-conjugation action for
even products of unit vectors.
"""

import random
from dataclasses import dataclass
from fractions import Fraction


class DimensionMismatch(ValueError):
    """Operands live in different Clifford algebras."""


class NotSplitting(ValueError):
    """The volume element does not square to 1."""


class VerificationFailed(AssertionError):
    """An identity check failed; the message names the identity."""


class GaussianRational:
    """a + b*i with exact rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __add__(self, other):
        other = _coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational((self.re * other.re + self.im * other.im) / n,
                                (self.im * other.re - self.re * other.im) / n)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = _coerce(other)
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        if self.im == 0:
            return str(self.re)
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"


def _coerce(x):
    return x if isinstance(x, GaussianRational) else GaussianRational(x)


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_I = GaussianRational(0, 1)


def _blade_mul(b1, b2):
    """Product of ascending index tuples; returns (sign, blade)."""
    out = list(b1)
    sign = 1
    for x in b2:
        # move x leftwards past strictly greater indices
        greater = sum(1 for y in out if y > x)
        if greater % 2:
            sign = -sign
        if x in out:
            out.remove(x)
            sign = -sign      # e_x e_x = -1
        else:
            out.append(x)
            out.sort()
    return sign, tuple(out)


class CliffordElement:
    """An element of Cl(K^n); field is 'R' or 'C'."""

    __slots__ = ("n", "field", "terms")

    def __init__(self, n, field, terms=None):
        if field not in ("R", "C"):
            raise ValueError("field must be 'R' or 'C'")
        self.n = n
        self.field = field
        clean = {}
        for blade, c in (terms or {}).items():
            blade = tuple(blade)
            if any(not 1 <= i <= n for i in blade) or list(blade) != sorted(set(blade)):
                raise ValueError(f"bad blade {blade} in dimension {n}")
            c = _coerce(c)
            if field == "R" and c.im != 0:
                raise ValueError("real algebra with imaginary coefficient")
            if not c.is_zero():
                prev = clean.get(blade, GR_ZERO)
                s = prev + c
                if s.is_zero():
                    clean.pop(blade, None)
                else:
                    clean[blade] = s
        self.terms = clean

    @classmethod
    def zero(cls, n, field):
        return cls(n, field)

    @classmethod
    def scalar(cls, n, field, c):
        return cls(n, field, {(): c})

    @classmethod
    def e(cls, n, field, i):
        return cls(n, field, {(i,): GR_ONE})

    @classmethod
    def blade(cls, n, field, indices, c=1):
        return cls(n, field, {tuple(indices): c})

    def is_zero(self):
        return not self.terms

    def coeff(self, blade):
        return self.terms.get(tuple(blade), GR_ZERO)

    def _check(self, other):
        if self.n != other.n or self.field != other.field:
            raise DimensionMismatch(f"Cl({self.field}^{self.n}) vs "
                                    f"Cl({other.field}^{other.n})")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for b, c in other.terms.items():
            out[b] = out.get(b, GR_ZERO) + c
        return CliffordElement(self.n, self.field, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for b, c in other.terms.items():
            out[b] = out.get(b, GR_ZERO) - c
        return CliffordElement(self.n, self.field, out)

    def __neg__(self):
        return CliffordElement(self.n, self.field,
                               {b: -c for b, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            c0 = _coerce(other)
            return CliffordElement(self.n, self.field,
                                   {b: c * c0 for b, c in self.terms.items()})
        self._check(other)
        out = {}
        for b1, c1 in self.terms.items():
            for b2, c2 in other.terms.items():
                s, b = _blade_mul(b1, b2)
                c = c1 * c2
                if s < 0:
                    c = -c
                out[b] = out.get(b, GR_ZERO) + c
        return CliffordElement(self.n, self.field, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def grade_part(self, r):
        return CliffordElement(self.n, self.field,
                               {b: c for b, c in self.terms.items() if len(b) == r})

    def even_part(self):
        return CliffordElement(self.n, self.field,
                               {b: c for b, c in self.terms.items() if len(b) % 2 == 0})

    def odd_part(self):
        return CliffordElement(self.n, self.field,
                               {b: c for b, c in self.terms.items() if len(b) % 2 == 1})

    def alpha(self):
        """The grading automorphism extending v -> -v."""
        return CliffordElement(self.n, self.field,
                               {b: (-c if len(b) % 2 else c)
                                for b, c in self.terms.items()})

    def complexify(self):
        if self.field == "C":
            return self
        return CliffordElement(self.n, "C", dict(self.terms))

    def coefficient_vector(self, blades):
        return [self.coeff(b) for b in blades]

    def __eq__(self, other):
        return (isinstance(other, CliffordElement) and self.n == other.n
                and self.field == other.field and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, self.field, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for b in sorted(self.terms, key=lambda t: (len(t), t)):
            name = "".join(f"e{i}" for i in b) or "1"
            bits.append(f"{self.terms[b]!r}*{name}")
        return " + ".join(bits)


def all_blades(n):
    out = [()]
    for i in range(1, n + 1):
        out = out + [b + (i,) for b in out]
    return sorted(out, key=lambda t: (len(t), t))


def clifford_product(x, y):
    return x * y


def volume_element(n, field):
    """omega = e_1 ... e_n, with the i^[n(n-1)/2] prefactor over C."""
    if n < 1:
        raise ValueError("need n >= 1")
    blade = tuple(range(1, n + 1))
    if field == "R":
        return CliffordElement(n, "R", {blade: GR_ONE})
    k = (n * (n - 1) // 2) % 4
    pref = (GR_ONE, GR_I, -GR_ONE, -GR_I)[k]
    return CliffordElement(n, "C", {blade: pref})


def projector(sign, n, field="C"):
    """pi^{+-} = (1 +- omega)/2, defined when omega^2 = 1."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    w = volume_element(n, field)
    one = CliffordElement.scalar(n, field, 1)
    if w * w != one:
        raise NotSplitting(f"omega^2 != 1 in Cl({field}^{n})")
    half = Fraction(1, 2)
    return (one + (w if sign > 0 else -w)) * half


# ---- exact matrices ------------------------------------------------------

class ExactMatrix:
    """Square matrix over the Gaussian rationals."""

    __slots__ = ("size", "rows")

    def __init__(self, rows):
        self.rows = tuple(tuple(_coerce(x) for x in r) for r in rows)
        self.size = len(self.rows)
        if any(len(r) != self.size for r in self.rows):
            raise ValueError("matrix must be square")

    @classmethod
    def identity(cls, n):
        return cls([[GR_ONE if i == j else GR_ZERO for j in range(n)]
                    for i in range(n)])

    @classmethod
    def zero(cls, n):
        return cls([[GR_ZERO] * n for _ in range(n)])

    def __add__(self, other):
        return ExactMatrix([[a + b for a, b in zip(r1, r2)]
                            for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return ExactMatrix([[a - b for a, b in zip(r1, r2)]
                            for r1, r2 in zip(self.rows, other.rows)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            c = _coerce(other)
            return ExactMatrix([[x * c for x in r] for r in self.rows])
        n = self.size
        return ExactMatrix([[sum((self.rows[i][k] * other.rows[k][j]
                                  for k in range(n)), GR_ZERO)
                             for j in range(n)] for i in range(n)])

    __rmul__ = __mul__

    def __neg__(self):
        return ExactMatrix([[-x for x in r] for r in self.rows])

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def kron(self, other):
        n, m = self.size, other.size
        return ExactMatrix([[self.rows[i // m][j // m] * other.rows[i % m][j % m]
                             for j in range(n * m)] for i in range(n * m)])

    def column(self, j):
        return [self.rows[i][j] for i in range(self.size)]

    def apply(self, vec):
        return [sum((self.rows[i][j] * vec[j] for j in range(self.size)),
                    GR_ZERO) for i in range(self.size)]

    def flatten(self):
        return [x for r in self.rows for x in r]

    def __repr__(self):
        return f"ExactMatrix({[[repr(x) for x in r] for r in self.rows]})"


def vector_rank(vectors):
    """Rank over the Gaussian rationals, by Gaussian elimination."""
    rows = [list(v) for v in vectors if any(not _coerce(x).is_zero() for x in v)]
    rank = 0
    col = 0
    width = len(rows[0]) if rows else 0
    while rows and col < width:
        piv = next((i for i in range(rank, len(rows))
                    if not rows[i][col].is_zero()), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for i in range(len(rows)):
            if i != rank and not rows[i][col].is_zero():
                f = rows[i][col] / pr[col]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        rank += 1
        col += 1
    return rank


# ---- the explicit 4x4 complex model --------------------------------------

def _mu_generators():
    i = GR_I
    a1 = ExactMatrix([[i, 0], [0, -i]])
    a2 = ExactMatrix([[0, 1], [-1, 0]])
    a3 = ExactMatrix([[1, 0], [0, 1]])
    b12 = ExactMatrix([[0, i], [-i, 0]])
    b3 = ExactMatrix([[0, i], [i, 0]])
    b4 = ExactMatrix([[i, 0], [0, -i]])
    return [a1.kron(b12), a2.kron(b12), a3.kron(b3), a3.kron(b4)]


_MU_GENS = None


def mu_map(x):
    """The algebra isomorphism Cl(C^4) -> Mat(C, 4) on an element."""
    global _MU_GENS
    if x.n != 4 or x.field != "C":
        raise DimensionMismatch("mu is defined on Cl(C^4)")
    if _MU_GENS is None:
        _MU_GENS = _mu_generators()
    out = ExactMatrix.zero(4)
    for blade, c in x.terms.items():
        m = ExactMatrix.identity(4)
        for i in blade:
            m = m * _MU_GENS[i - 1]
        out = out + m * c
    return out


# ---- Hodge star ------------------------------------------------------------

def _perm_sign(perm):
    sign = 1
    p = list(perm)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def hodge_star(blade, n=4):
    """*(e_S) = sign * e_{S^c}; sign is the permutation sign of (S, S^c)."""
    blade = tuple(blade)
    comp = tuple(i for i in range(1, n + 1) if i not in blade)
    if len(blade) + len(comp) != n or list(blade) != sorted(blade):
        raise ValueError(f"bad blade {blade} for dimension {n}")
    return _perm_sign(blade + comp), comp


# ---- verification suites ----------------------------------------------------

@dataclass(frozen=True)
class Check:
    description: str
    ok: bool


@dataclass(frozen=True)
class VerificationReport:
    name: str
    checks: tuple

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]


def _report(name, checks, strict=False):
    rep = VerificationReport(name, tuple(checks))
    if strict and not rep.ok:
        raise VerificationFailed(f"{name}: {rep.failures()[0].description}")
    return rep


def _verify_cliffmult():
    checks = []
    blades = all_blades(4)
    basis = [CliffordElement(4, "C", {b: GR_ONE}) for b in blades]
    images = [mu_map(x) for x in basis]
    hom_ok = True
    for x, mx in zip(basis, images):
        for y, my in zip(basis, images):
            if mu_map(x * y) != mx * my:
                hom_ok = False
    checks.append(Check("mu(xy) = mu(x)mu(y) on all 256 basis pairs", hom_ok))
    checks.append(Check("mu has rank 16 on the 16 basis blades",
                        vector_rank([m.flatten() for m in images]) == 16))
    checks.append(Check("mu(1) = I4", images[0] == ExactMatrix.identity(4)))
    e1 = mu_map(CliffordElement.e(4, "C", 1))
    checks.append(Check("mu(e1)^2 = -I4",
                        e1 * e1 == -ExactMatrix.identity(4)))
    return _report("cliffmult", checks)


def _quaternion_images():
    half = Fraction(1, 2)
    e = lambda *idx: CliffordElement.blade(3, "R", idx)
    plus = {
        "1": projector(1, 3, "R"),
        "i": (e(1, 2) - e(3)) * half,
        "j": (e(2, 3) - e(1)) * half,
    }
    minus = {
        "1": projector(-1, 3, "R"),
        "i": (e(1, 2) + e(3)) * half,
        "j": (e(2, 3) + e(1)) * half,
    }
    for side in (plus, minus):
        side["k"] = side["i"] * side["j"]
    return plus, minus


def _verify_cliff3():
    checks = []
    plus, minus = _quaternion_images()
    for label, side in (("H+", plus), ("H-", minus)):
        unit = side["1"]
        checks.append(Check(f"{label}: unit idempotent", unit * unit == unit))
        for q in "ijk":
            checks.append(Check(f"{label}: {q}^2 = -1",
                                side[q] * side[q] == -unit))
            checks.append(Check(f"{label}: 1*{q} = {q}",
                                unit * side[q] == side[q]
                                and side[q] * unit == side[q]))
        checks.append(Check(f"{label}: ij = k, ji = -k",
                            side["i"] * side["j"] == side["k"]
                            and side["j"] * side["i"] == -side["k"]))
    zero = CliffordElement.zero(3, "R")
    cross_ok = all((plus[a] * minus[b] == zero and minus[b] * plus[a] == zero)
                   for a in "1ijk" for b in "1ijk")
    checks.append(Check("H+ and H- annihilate each other", cross_ok))
    blades = all_blades(3)
    vecs = [x.coefficient_vector(blades)
            for x in list(plus.values()) + list(minus.values())]
    checks.append(Check("the eight images span Cl(R^3) (rank 8)",
                        vector_rank(vecs) == 8))
    w = volume_element(3, "R")
    checks.append(Check("H+ lands in the pi^+ summand",
                        all(projector(1, 3, "R") * plus[q] == plus[q]
                            for q in "1ijk")))
    checks.append(Check("omega^2 = 1 in Cl(R^3)",
                        w * w == CliffordElement.scalar(3, "R", 1)))
    return _report("cliff3", checks)


def _verify_cliffm1():
    checks = []
    for n, field in ((4, "R"), (3, "R"), (4, "C")):
        def f(x, n=n, field=field):
            # extend e_i -> e_i e_n multiplicatively over blades
            out = CliffordElement.zero(n, field)
            for blade, c in x.terms.items():
                img = CliffordElement.scalar(n, field, 1)
                for i in blade:
                    img = img * CliffordElement.blade(n, field, (i, n))
                out = out + img * c
            return out

        m = n - 1
        blades = all_blades(m)
        basis = [CliffordElement(m, field, {b: GR_ONE}) for b in blades]
        hom_ok = all(f(x * y) == f(x) * f(y) for x in basis for y in basis)
        checks.append(Check(f"e_i -> e_i e_{n} multiplicative on Cl({field}^{m})",
                            hom_ok))
        big = all_blades(n)
        vecs = [f(x).coefficient_vector(big) for x in basis]
        checks.append(Check(f"image has rank 2^{m} in Cl({field}^{n})",
                            vector_rank(vecs) == 2 ** m))
        even_ok = all(f(x).odd_part().is_zero() for x in basis)
        checks.append(Check(f"image lies in the even part Cl_0({field}^{n})",
                            even_ok))
    # the map matches the two volume elements in the 3 -> 4 real case
    w3 = volume_element(3, "R")
    img = CliffordElement.scalar(4, "R", 1)
    for i in (1, 2, 3):
        img = img * CliffordElement.blade(4, "R", (i, 4))
    w3_img = img * w3.coeff((1, 2, 3))
    checks.append(Check("omega of Cl(R^3) maps to omega of Cl(R^4)",
                        w3_img == volume_element(4, "R")))
    return _report("cliffm1", checks)


def _plus_minus_bases():
    pp = mu_map(projector(1, 4))
    pm = mu_map(projector(-1, 4))
    def colbasis(m):
        cols = [m.column(j) for j in range(4)]
        basis = []
        for c in cols:
            if vector_rank(basis + [c]) > len(basis):
                basis.append(c)
        return basis
    return pp, pm, colbasis(pp), colbasis(pm)


def _coords_in(basis, vec):
    """Coordinates of vec in a 2-element basis of C^4, or None."""
    # solve sum c_i basis_i = vec by elimination
    cols = [list(b) for b in basis]
    n = len(vec)
    aug = [[cols[j][i] for j in range(len(basis))] + [vec[i]] for i in range(n)]
    coords = [None] * len(basis)
    rank = 0
    for col in range(len(basis)):
        piv = next((i for i in range(rank, n) if not aug[i][col].is_zero()), None)
        if piv is None:
            return None
        aug[rank], aug[piv] = aug[piv], aug[rank]
        pr = aug[rank]
        for i in range(n):
            if i != rank and not aug[i][col].is_zero():
                f = aug[i][col] / pr[col]
                aug[i] = [a - f * b for a, b in zip(aug[i], pr)]
        rank += 1
    sol = [aug[i][-1] / aug[i][i] for i in range(len(basis))]
    for i in range(rank, n):
        if not aug[i][-1].is_zero():
            return None
    return sol


def _verify_cliffiso():
    checks = []
    pp, pm, bp, bm = _plus_minus_bases()
    checks.append(Check("dim (C^4)^+ = 2", len(bp) == 2))
    checks.append(Check("dim (C^4)^- = 2", len(bm) == 2))
    checks.append(Check("pi^+ + pi^- = 1", pp + pm == ExactMatrix.identity(4)))
    checks.append(Check("pi^+ pi^- = 0", pp * pm == ExactMatrix.zero(4)))
    maps_pm = []
    maps_mp = []
    swap_ok = True
    for i in (1, 2, 3, 4):
        m = mu_map(CliffordElement.e(4, "C", i))
        cols = []
        for v in bp:
            w = m.apply(v)
            c = _coords_in(bm, w)
            if c is None:
                swap_ok = False
                break
            cols.append(c)
        maps_pm.append([x for col in cols for x in col])
        cols = []
        for v in bm:
            w = m.apply(v)
            c = _coords_in(bp, w)
            if c is None:
                swap_ok = False
                break
            cols.append(c)
        maps_mp.append([x for col in cols for x in col])
    checks.append(Check("Clifford multiplication swaps (C^4)^+ and (C^4)^-",
                        swap_ok))
    checks.append(Check("C^4 -> Hom((C^4)^+, (C^4)^-) is injective (rank 4)",
                        vector_rank(maps_pm) == 4))
    checks.append(Check("C^4 -> Hom((C^4)^-, (C^4)^+) is injective (rank 4)",
                        vector_rank(maps_mp) == 4))
    return _report("cliffiso", checks)


def _verify_endiso():
    checks = []
    pp, pm, bp, bm = _plus_minus_bases()
    for sign, basis, label in ((1, bp, "+"), (-1, bm, "-")):
        proj = projector(sign, 4)
        even = [b for b in all_blades(4) if len(b) % 2 == 0]
        elems = [proj * CliffordElement(4, "C", {b: GR_ONE}) for b in even]
        blades = all_blades(4)
        dim = vector_rank([x.coefficient_vector(blades) for x in elems])
        checks.append(Check(f"dim Cl_0^{label}(C^4) = 4", dim == 4))
        mats = []
        closed = True
        for x in elems:
            m = mu_map(x)
            flat = []
            for v in basis:
                c = _coords_in(basis, m.apply(v))
                if c is None:
                    closed = False
                    break
                flat.extend(c)
            if closed:
                mats.append(flat)
        checks.append(Check(f"Cl_0^{label} preserves (C^4)^{label}", closed))
        checks.append(Check(f"Cl_0^{label} -> End((C^4)^{label}) surjective "
                            f"(rank 4)", closed and vector_rank(mats) == 4))
    return _report("endiso", checks)


HODGE_TABLE_4 = (
    ((1, 2), 1, (3, 4)),
    ((1, 3), -1, (2, 4)),
    ((1, 4), 1, (2, 3)),
    ((2, 3), 1, (1, 4)),
    ((2, 4), -1, (1, 3)),
    ((3, 4), 1, (1, 2)),
)


def _verify_extcliff():
    checks = []
    for blade, sign, comp in HODGE_TABLE_4:
        s, c = hodge_star(blade, 4)
        checks.append(Check(f"*(e{blade[0]}^e{blade[1]}) = "
                            f"{'-' if sign < 0 else ''}e{comp[0]}^e{comp[1]}",
                            (s, c) == (sign, comp)))
    invol = True
    for b, _, _ in HODGE_TABLE_4:
        s1, c = hodge_star(b, 4)
        s2, b2 = hodge_star(c, 4)
        if b2 != b or s1 * s2 != 1:
            invol = False
    checks.append(Check("** = id on Lambda^2(R^4)", invol))
    # eigenspace split of Lambda^2 under the star
    two_blades = [b for b in all_blades(4) if len(b) == 2]
    idx = {b: i for i, b in enumerate(two_blades)}
    plus_vecs = []
    minus_vecs = []
    for b in two_blades:
        s, c = hodge_star(b, 4)
        v_plus = [Fraction(0)] * 6
        v_minus = [Fraction(0)] * 6
        v_plus[idx[b]] += 1
        v_plus[idx[c]] += s
        v_minus[idx[b]] += 1
        v_minus[idx[c]] -= s
        plus_vecs.append([GaussianRational(x) for x in v_plus])
        minus_vecs.append([GaussianRational(x) for x in v_minus])
    checks.append(Check("dim Lambda^+ = 3", vector_rank(plus_vecs) == 3))
    checks.append(Check("dim Lambda^- = 3", vector_rank(minus_vecs) == 3))
    # the stated basis of (Cl_0(R^4) (x) C)^+ is fixed by pi^+ and independent
    pi_plus = projector(1, 4)
    e = lambda *idx: CliffordElement.blade(4, "C", idx)
    basis = [pi_plus,
             e(1, 2) + e(3, 4), e(1, 3) - e(2, 4), e(1, 4) + e(2, 3)]
    fixed = all(pi_plus * x == x for x in basis)
    checks.append(Check("pi^+ fixes {pi^+, e1e2+e3e4, e1e3-e2e4, e1e4+e2e3}",
                        fixed))
    blades = all_blades(4)
    checks.append(Check("that basis is linearly independent (rank 4)",
                        vector_rank([x.coefficient_vector(blades)
                                     for x in basis]) == 4))
    even = all(x.odd_part().is_zero() for x in basis)
    checks.append(Check("basis lies in the even part", even))
    return _report("extcliff", checks)


def _rational_unit_vectors(rng, count):
    """Exact unit vectors in R^4 from squared integer quaternions."""
    out = []
    while len(out) < count:
        q = [rng.randint(-5, 5) for _ in range(4)]
        norm = sum(x * x for x in q)
        if norm == 0:
            continue
        a, b, c, d = q
        vec = [Fraction(a * a - b * b - c * c - d * d, norm),
               Fraction(2 * a * b, norm), Fraction(2 * a * c, norm),
               Fraction(2 * a * d, norm)]
        rng.shuffle(vec)  # coordinate permutations keep the norm
        out.append(tuple(vec))
    return out


def _verify_spin4_adjoint(samples=200, seed=7):
    rng = random.Random(seed)
    checks = []
    ok_space = ok_orth = ok_det = True
    es = [CliffordElement.e(4, "R", i) for i in (1, 2, 3, 4)]
    for _ in range(samples):
        k = rng.choice((2, 4))
        vecs = _rational_unit_vectors(rng, k)
        phi = CliffordElement.scalar(4, "R", 1)
        phi_inv = CliffordElement.scalar(4, "R", 1)
        for v in vecs:
            elem = CliffordElement(4, "R", {(i + 1,): v[i] for i in range(4)})
            phi = phi * elem
            phi_inv = (-elem) * phi_inv       # v^-1 = -v for unit v
        cols = []
        for e in es:
            img = phi * e * phi_inv
            if not (img - img.grade_part(1)).is_zero():
                ok_space = False
                break
            cols.append([img.coeff((i,)).re for i in (1, 2, 3, 4)])
        if not ok_space:
            break
        # columns of the adjoint matrix: check orthogonality and det 1
        m = [[cols[j][i] for j in range(4)] for i in range(4)]
        gram_ok = all(sum(m[i][a] * m[i][b] for i in range(4))
                      == (1 if a == b else 0)
                      for a in range(4) for b in range(4))
        if not gram_ok:
            ok_orth = False
            break
        if _det4(m) != 1:
            ok_det = False
            break
    checks.append(Check(f"Ad_phi preserves R^4 ({samples} random even products)",
                        ok_space))
    checks.append(Check("Ad_phi preserves the Euclidean inner product",
                        ok_space and ok_orth))
    checks.append(Check("Ad_phi has determinant 1", ok_space and ok_orth and ok_det))
    return _report("spin4-adjoint", checks)


def _det4(m):
    from itertools import permutations
    total = Fraction(0)
    for perm in permutations(range(4)):
        sign = _perm_sign(perm)
        prod = Fraction(1)
        for i, j in enumerate(perm):
            prod *= m[i][j]
        total += sign * prod
    return total


_SUITES = {
    "cliffmult": _verify_cliffmult,
    "cliff3": _verify_cliff3,
    "cliffm1": _verify_cliffm1,
    "cliffiso": _verify_cliffiso,
    "endiso": _verify_endiso,
    "extcliff": _verify_extcliff,
    "spin4-adjoint": _verify_spin4_adjoint,
}


def verify_iso(which):
    """Run one verification suite; returns a VerificationReport."""
    if which not in _SUITES:
        raise ValueError(f"unknown suite {which!r}; "
                         f"choose from {sorted(_SUITES)}")
    return _SUITES[which]()


def verify_all():
    return [verify_iso(name) for name in
            ("cliffmult", "cliff3", "cliffm1", "cliffiso", "endiso",
             "extcliff", "spin4-adjoint")]
