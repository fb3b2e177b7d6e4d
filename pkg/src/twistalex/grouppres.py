"""Finitely presented groups.

Words, free reduction, Fox calculus, abelianization via Smith normal form,
enumeration of epimorphisms onto small finite groups, and Reidemeister-
Schreier presentations of the corresponding finite covers.

A word is a tuple of letters (generator_index, +-1).
"""

from dataclasses import dataclass
from itertools import product
from math import gcd

from .exactalg import HomologyGroup, IntMatrix, smith_normal_form


class BoundExceeded(ValueError):
    """Finite-group order above the configured enumeration bound."""


class InvalidQuotient(ValueError):
    """Generator images do not satisfy the relators or fail to generate."""


class Incompatible(ValueError):
    """Cover data does not match the quotient it claims to come from."""


# ---- words ---------------------------------------------------------------

def free_reduce(word):
    out = []
    for g, s in word:
        if out and out[-1][0] == g and out[-1][1] == -s:
            out.pop()
        else:
            out.append((g, s))
    return tuple(out)


def word_inverse(word):
    return tuple((g, -s) for g, s in reversed(word))


def word_mul(*words):
    out = []
    for w in words:
        for letter in w:
            if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
                out.pop()
            else:
                out.append(letter)
    return tuple(out)


def word_exponents(word, ngens):
    v = [0] * ngens
    for g, s in word:
        v[g] += s
    return tuple(v)


def parse_word(text, names):
    """Parse "a b a^-1", commutators "[a,b]" and powers "a^3"."""
    index = {n: i for i, n in enumerate(names)}
    letters = []
    for tok in text.split():
        neg = False
        power = 1
        if tok.startswith("[") and tok.endswith("]"):
            inner = tok[1:-1]
            x, _, y = inner.partition(",")
            wx = parse_word(x.strip(), names)
            wy = parse_word(y.strip(), names)
            letters.extend(word_mul(wx, wy, word_inverse(wx), word_inverse(wy)))
            continue
        if "^" in tok:
            name, _, k = tok.partition("^")
            power = int(k)
            if power < 0:
                neg = True
                power = -power
        else:
            name = tok
        if name not in index:
            raise ValueError(f"unknown generator {name!r}")
        letter = (index[name], -1 if neg else 1)
        letters.extend([letter] * power)
    return free_reduce(tuple(letters))


def render_word(word, names):
    if not word:
        return "1"
    out = []
    for g, s in word:
        out.append(names[g] if s > 0 else f"{names[g]}^-1")
    return " ".join(out)


# ---- presentations --------------------------------------------------------

class Presentation:
    """Generators (by name) and relator words."""

    def __init__(self, generators, relators):
        self.generators = tuple(generators)
        self.relators = tuple(free_reduce(r) for r in relators)
        n = len(self.generators)
        for r in self.relators:
            for g, s in r:
                if not (0 <= g < n) or s not in (1, -1):
                    raise ValueError(f"bad letter {(g, s)} in relator")

    @classmethod
    def from_text(cls, generators, relator_strings):
        gens = list(generators)
        return cls(gens, [parse_word(s, gens) for s in relator_strings])

    @property
    def ngens(self):
        return len(self.generators)

    def relator_matrix(self):
        """Exponent-sum matrix, one row per relator."""
        return IntMatrix.from_rows([word_exponents(r, self.ngens)
                                    for r in self.relators]) if self.relators \
            else IntMatrix.zero(0, self.ngens)

    def __repr__(self):
        rels = ", ".join(render_word(r, self.generators) for r in self.relators)
        return f"<{' '.join(self.generators)} | {rels}>"


@dataclass(frozen=True)
class Abelianization:
    """H_1 data plus the induced map from generators to Z^free_rank."""

    homology: HomologyGroup
    gen_images: tuple  # per generator, coordinates in the free quotient

    @property
    def free_rank(self):
        return self.homology.free_rank

    @property
    def torsion(self):
        return self.homology.torsion


def abelianize(P):
    """Smith normal form of the relator matrix; H = Z^n / rowspan."""
    n = P.ngens
    A = P.relator_matrix().transpose()  # columns are relations on Z^n
    snf = smith_normal_form(A)
    diag = snf.D.diagonal()
    r = sum(1 for d in diag if d != 0)
    torsion = tuple(d for d in diag if d > 1)
    free_rows = range(r, n)
    U = snf.U
    gen_images = tuple(tuple(U[i, j] for i in free_rows) for j in range(n))
    return Abelianization(HomologyGroup(n - r, torsion), gen_images)


class ClassMap:
    """A homomorphism from the abelianization to Z^s, given on generators."""

    def __init__(self, presentation, images):
        self.presentation = presentation
        images = tuple(tuple(int(x) for x in img) for img in images)
        if len(images) != presentation.ngens:
            raise ValueError("need one image per generator")
        ranks = {len(img) for img in images}
        if len(ranks) != 1:
            raise ValueError("mixed target ranks")
        self.target_rank = ranks.pop()
        if self.target_rank < 1:
            raise ValueError("target rank must be >= 1")
        self.images = images
        for rel in presentation.relators:
            if any(self.of_word(rel)):
                raise ValueError("class does not kill all relators")

    def of_word(self, word):
        v = [0] * self.target_rank
        for g, s in word:
            img = self.images[g]
            for i in range(self.target_rank):
                v[i] += s * img[i]
        return tuple(v)

    def of_generator(self, g):
        return self.images[g]

    def is_trivial(self):
        return all(all(x == 0 for x in img) for img in self.images)

    @classmethod
    def to_abelianization(cls, presentation, ab=None):
        """The quotient map pi_1 -> H = Z^{b_1} as a ClassMap."""
        ab = ab or abelianize(presentation)
        return cls(presentation, ab.gen_images)

    def h_weights(self, ab=None):
        """Express a rank-1 class in the coordinates of H = Z^{b_1}.

        Returns w with w . q(g) = Phi(g) for every generator, where q is the
        abelianization quotient map.
        """
        if self.target_rank != 1:
            raise ValueError("h_weights needs a rank-1 class")
        ab = ab or abelianize(self.presentation)
        b1 = ab.free_rank
        n = self.presentation.ngens
        phi_row = [img[0] for img in self.images]
        if b1 == 0:
            if any(phi_row):
                raise ValueError("nonzero class on a rank-0 abelianization")
            return ()
        Q = IntMatrix.from_rows([[ab.gen_images[j][i] for j in range(n)]
                                 for i in range(b1)])
        snf = smith_normal_form(Q)
        if snf.elementary_divisors() != [1] * b1:
            raise AssertionError("quotient map is not surjective")
        # Q = U^-1 [I 0] V^-1, so w = (phi . V)[:b1] . U
        phi_v = [sum(phi_row[k] * snf.V[k, j] for k in range(n)) for j in range(n)]
        if any(phi_v[b1:]):
            raise ValueError("class is not well-defined on the abelianization")
        w = tuple(sum(phi_v[i] * snf.U[i, j] for i in range(b1)) for j in range(b1))
        for j in range(n):
            if sum(w[i] * ab.gen_images[j][i] for i in range(b1)) != phi_row[j]:
                raise AssertionError("h_weights verification failed")
        return w


# ---- Fox calculus ----------------------------------------------------------

class GroupRingElement:
    """Integer combination of freely reduced words in the free group."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for w, c in (terms or {}).items():
            w = free_reduce(w)
            c = int(c)
            if c:
                clean[w] = clean.get(w, 0) + c
                if not clean[w]:
                    del clean[w]
        self.terms = clean

    @classmethod
    def from_word(cls, w, c=1):
        return cls({tuple(w): c})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(): 1})

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return GroupRingElement(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) - c
        return GroupRingElement(out)

    def __neg__(self):
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = word_mul(w1, w2)
                out[w] = out.get(w, 0) + c1 * c2
        return GroupRingElement(out)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, GroupRingElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"GroupRingElement({self.terms!r})"


def fox_derivative(word, gen):
    """d(word)/d(gen) with the product rule d(uv) = du + u dv."""
    terms = {}
    prefix = ()
    for g, s in word:
        if g == gen:
            if s == 1:
                terms[prefix] = terms.get(prefix, 0) + 1
            else:
                w = word_mul(prefix, ((g, -1),))
                terms[w] = terms.get(w, 0) - 1
        prefix = word_mul(prefix, ((g, s),))
    return GroupRingElement(terms)


def fox_jacobian(P):
    """Matrix of Fox derivatives: rows are relators, columns generators."""
    return [[fox_derivative(r, j) for j in range(P.ngens)] for r in P.relators]


# ---- finite groups ---------------------------------------------------------

class FiniteGroup:
    """A finite group as a multiplication table on {0..order-1}, identity 0."""

    def __init__(self, label, table):
        self.label = label
        self.table = tuple(tuple(row) for row in table)
        self.order = len(self.table)
        for row in self.table:
            if len(row) != self.order:
                raise ValueError("ragged multiplication table")
        if any(self.table[0][x] != x or self.table[x][0] != x
               for x in range(self.order)):
            raise ValueError("element 0 is not an identity")
        self.inverse = [None] * self.order
        for x in range(self.order):
            for y in range(self.order):
                if self.table[x][y] == 0:
                    self.inverse[x] = y
        if any(v is None for v in self.inverse):
            raise ValueError("table is not a group")

    def mul(self, x, y):
        return self.table[x][y]

    def inv(self, x):
        return self.inverse[x]

    def __repr__(self):
        return f"FiniteGroup({self.label}, order {self.order})"


def trivial_group():
    return FiniteGroup("1", [[0]])


def cyclic_group(n):
    if n < 1:
        raise ValueError("order must be positive")
    return FiniteGroup(f"Z{n}", [[(x + y) % n for y in range(n)] for x in range(n)])


def dihedral_group(n):
    """D_n of order 2n; element a + n*b stands for r^a s^b."""
    if n < 1:
        raise ValueError("n must be positive")

    def mul(e1, e2):
        a1, b1 = e1 % n, e1 // n
        a2, b2 = e2 % n, e2 // n
        a = (a1 + (a2 if b1 == 0 else -a2)) % n
        return a + n * ((b1 + b2) % 2)

    return FiniteGroup(f"D{n}", [[mul(x, y) for y in range(2 * n)]
                                 for x in range(2 * n)])


def symmetric_group(n):
    if n > 4:
        raise ValueError("symmetric groups implemented for n <= 4")
    perms = sorted(_permutations(tuple(range(n))))
    # put the identity first
    ident = tuple(range(n))
    perms.remove(ident)
    perms.insert(0, ident)
    index = {p: i for i, p in enumerate(perms)}

    def mul(p, q):
        return tuple(p[q[i]] for i in range(n))

    return FiniteGroup(f"S{n}", [[index[mul(perms[x], perms[y])]
                                  for y in range(len(perms))]
                                 for x in range(len(perms))])


def _permutations(items):
    if len(items) <= 1:
        return [tuple(items)]
    out = []
    for i in range(len(items)):
        rest = items[:i] + items[i + 1:]
        out.extend([(items[i],) + p for p in _permutations(rest)])
    return out


def group_from_spec(spec):
    """Parse group labels like 'trivial', 'Z6', 'D3', 'S3'."""
    s = spec.strip()
    if s in ("1", "trivial"):
        return trivial_group()
    kind, num = s[0].upper(), s[1:]
    if not num.isdigit():
        raise ValueError(f"cannot parse group spec {spec!r}")
    n = int(num)
    if kind == "Z":
        return cyclic_group(n)
    if kind == "D":
        return dihedral_group(n)
    if kind == "S":
        return symmetric_group(n)
    raise ValueError(f"cannot parse group spec {spec!r}")


class FiniteQuotient:
    """An epimorphism onto a finite group, with its regular permutation action."""

    def __init__(self, presentation, group, images):
        self.presentation = presentation
        self.group = group
        self.images = tuple(images)
        if len(self.images) != presentation.ngens:
            raise InvalidQuotient("need one image per generator")
        for r in presentation.relators:
            if self.of_word(r) != 0:
                raise InvalidQuotient("relator not killed")
        if len(_closure(group, self.images)) != group.order:
            raise InvalidQuotient("images do not generate")

    def of_word(self, word):
        x = 0
        for g, s in word:
            y = self.images[g] if s > 0 else self.group.inv(self.images[g])
            x = self.group.mul(x, y)
        return x

    def regular_perm(self, element):
        """Left multiplication by the element, as a permutation tuple."""
        return tuple(self.group.mul(element, x) for x in range(self.group.order))

    def generator_perms(self):
        return tuple(self.regular_perm(img) for img in self.images)

    def kernel_key(self):
        """Canonical key identifying ker(alpha): the standardized coset table."""
        G = self.group
        order = [0]
        seen = {0: 0}
        queue = [0]
        while queue:
            x = queue.pop(0)
            for img in self.images:
                for y in (G.mul(x, img), G.mul(x, G.inv(img))):
                    if y not in seen:
                        seen[y] = len(order)
                        order.append(y)
                        queue.append(y)
        table = tuple(tuple(seen[G.mul(x, img)] for x in order)
                      for img in self.images)
        return table

    def __repr__(self):
        return f"FiniteQuotient({self.group.label}, images={self.images})"


def _closure(group, elements):
    seen = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for e in elements:
            for y in (group.mul(x, e), group.mul(x, group.inv(e))):
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
    return seen


def enumerate_epimorphisms(P, G, bound=12, dedup_auto=False):
    """All surjections pi_1(P) -> G, in lexicographic image order.

    With dedup_auto, quotients with equal kernels (equivalently, equal
    standardized coset tables) are collapsed to their first representative.
    """
    if G.order > bound:
        raise BoundExceeded(f"|G| = {G.order} exceeds bound {bound}")
    out = []
    seen_keys = set()
    for images in product(range(G.order), repeat=P.ngens):
        ok = True
        for r in P.relators:
            x = 0
            for g, s in r:
                y = images[g] if s > 0 else G.inv(images[g])
                x = G.mul(x, y)
            if x != 0:
                ok = False
                break
        if not ok:
            continue
        if len(_closure(G, images)) != G.order:
            continue
        q = FiniteQuotient(P, G, images)
        if dedup_auto:
            key = q.kernel_key()
            if key in seen_keys:
                continue
            seen_keys.add(key)
        out.append(q)
    return out


# ---- Reidemeister-Schreier --------------------------------------------------

@dataclass(frozen=True)
class Cover:
    """Presentation of ker(alpha) with its Schreier generator data."""

    presentation: Presentation
    quotient: FiniteQuotient
    generator_words: tuple  # per cover generator, a word in the base group
    transversal: tuple      # per coset (in discovery order), a base-group word
    coset_order: tuple      # discovery order of the underlying group elements


def reidemeister_schreier(P, q):
    """Presentation of the kernel of q on the Schreier generators.

    The transversal comes from a breadth-first search of the coset graph with
    lexicographic edge order, so the output is deterministic.
    """
    if q.presentation is not P:
        # allow structurally equal presentations
        if (q.presentation.generators != P.generators
                or q.presentation.relators != P.relators):
            raise Incompatible("quotient belongs to a different presentation")
    G = q.group
    m = G.order
    # BFS over cosets (right multiplication); cosets are group elements
    discovery = {0: 0}
    order = [0]
    trans = {0: ()}
    queue = [0]
    while queue:
        x = queue.pop(0)
        for i in range(P.ngens):
            for s in (1, -1):
                img = q.images[i] if s > 0 else G.inv(q.images[i])
                y = G.mul(x, img)
                if y not in discovery:
                    discovery[y] = len(order)
                    order.append(y)
                    trans[y] = word_mul(trans[x], ((i, s),))
                    queue.append(y)
    if len(order) != m:
        raise InvalidQuotient("coset graph is not transitive")

    # Schreier generators s_{x,i} = t_x g_i t_{x g_i}^{-1}; tree edges trivial
    gen_id = {}
    gen_words = []
    gen_names = []
    for x in sorted(order, key=lambda e: discovery[e]):
        for i in range(P.ngens):
            y = G.mul(x, q.images[i])
            w = word_mul(trans[x], ((i, 1),), word_inverse(trans[y]))
            if not w:
                continue  # tree edge
            gen_id[(x, i)] = len(gen_words)
            gen_words.append(w)
            gen_names.append(f"{P.generators[i]}_{discovery[x]}")

    def rewrite(x, word):
        out = []
        cur = x
        for i, s in word:
            if s == 1:
                if (cur, i) in gen_id:
                    out.append((gen_id[(cur, i)], 1))
                cur = G.mul(cur, q.images[i])
            else:
                nxt = G.mul(cur, G.inv(q.images[i]))
                if (nxt, i) in gen_id:
                    out.append((gen_id[(nxt, i)], -1))
                cur = nxt
        return free_reduce(tuple(out))

    relators = []
    for x in sorted(order, key=lambda e: discovery[e]):
        for r in P.relators:
            w = rewrite(x, r)
            if w:
                relators.append(w)
    cover_pres = Presentation(gen_names, relators)
    return Cover(cover_pres, q, tuple(gen_words),
                 tuple(trans[x] for x in order), tuple(order))


def pullback_class(Phi, q, cover):
    """Phi restricted to ker(alpha), on the cover's generators, plus div.

    div is the gcd of all coordinate values of the pulled-back class.
    """
    if cover.quotient is not q and cover.quotient.images != q.images:
        raise Incompatible("cover was not built from this quotient")
    images = [Phi.of_word(w) for w in cover.generator_words]
    phi_a = ClassMap(cover.presentation, images)
    d = 0
    for img in images:
        for x in img:
            d = gcd(d, x)
    return phi_a, d
