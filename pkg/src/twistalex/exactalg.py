"""Exact integer linear algebra.

Smith normal form over Z with unimodular transforms, homology of CW chain
complexes, and a rank solver for exact sequences of free abelian groups.
All arithmetic uses Python's arbitrary-precision integers.
"""

from dataclasses import dataclass


class ComplexInvalid(ValueError):
    """The boundary maps do not satisfy d o d = 0 (or shapes mismatch)."""


class IndexOutOfRange(IndexError):
    """Requested degree outside the chain complex."""


class Underdetermined(ValueError):
    """The exact-sequence data does not determine all unknown ranks."""


class Inconsistent(ValueError):
    """The exact-sequence data violates exactness or rank-nullity."""


class IntMatrix:
    """Immutable integer matrix, entries stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(int(x) for x in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows_data):
        rows_data = [list(r) for r in rows_data]
        nrows = len(rows_data)
        ncols = len(rows_data[0]) if rows_data else 0
        if any(len(r) != ncols for r in rows_data):
            raise ValueError("ragged rows")
        return cls(nrows, ncols, [x for r in rows_data for x in r])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols, [0] * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_lists(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self):
        return IntMatrix(self.cols, self.rows,
                         [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def __mul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        a, b = self.to_lists(), other.to_lists()
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                out.append(sum(a[i][k] * b[k][j] for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, out)

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def is_zero(self):
        return all(x == 0 for x in self.entries)

    def is_diagonal(self):
        return all(self[i, j] == 0
                   for i in range(self.rows) for j in range(self.cols) if i != j)

    def diagonal(self):
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def det(self):
        """Determinant by fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = self.to_lists()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if pivot is None:
                    return 0
                a[k], a[pivot] = a[pivot], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def __repr__(self):
        return f"IntMatrix({self.to_lists()!r})"


@dataclass(frozen=True)
class SmithDecomposition:
    """U * M * V = D with U, V unimodular and D in Smith normal form."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    def elementary_divisors(self):
        return [d for d in self.D.diagonal() if d != 0]

    def rank(self):
        return len(self.elementary_divisors())


def _min_abs_pivot(a, t, m, n):
    best = None
    for i in range(t, m):
        for j in range(t, n):
            v = a[i][j]
            if v != 0 and (best is None or abs(v) < abs(best[2])):
                best = (i, j, v)
                if abs(v) == 1:
                    return best
    return best


def smith_normal_form(M):
    """Diagonalize M over Z.

    The pivot with minimal absolute value is chosen at each stage, which keeps
    intermediate entries small in practice.
    """
    m, n = M.rows, M.cols
    a = M.to_lists()
    u = IntMatrix.identity(m).to_lists()
    v = IntMatrix.identity(n).to_lists()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        # row_dst += c * row_src
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, c):
        for row in a:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    t = 0
    while t < min(m, n):
        piv = _min_abs_pivot(a, t, m, n)
        if piv is None:
            break
        pi, pj, _ = piv
        if pi != t:
            swap_rows(pi, t)
        if pj != t:
            swap_cols(pj, t)
        while True:
            # clear column t below the pivot
            moved = False
            for i in range(t + 1, m):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    if q:
                        add_row(i, t, -q)
                    if a[i][t] != 0:
                        # remainder is strictly smaller: promote it to pivot
                        swap_rows(t, i)
                        moved = True
            if moved:
                continue
            for j in range(t + 1, n):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    if q:
                        add_col(j, t, -q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        moved = True
            if moved:
                continue
            # row and column t are clear; enforce divisibility of the rest
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % a[t][t] != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    return SmithDecomposition(IntMatrix.from_rows(u) if m else IntMatrix.zero(0, 0),
                              IntMatrix.from_rows(a) if m else IntMatrix.zero(0, n),
                              IntMatrix.from_rows(v) if n else IntMatrix.zero(n, n))


def rank(M):
    return smith_normal_form(M).rank()


@dataclass(frozen=True)
class HomologyGroup:
    """Free rank plus torsion coefficients d1 | d2 | ... , each > 1."""

    free_rank: int
    torsion: tuple = ()

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return "+".join(parts) if parts else "0"


class ChainComplex:
    """Finite CW chain complex over Z.

    `cells[k]` is the number of k-cells and `boundaries[k-1]` is the matrix of
    d_k with shape cells[k-1] x cells[k].  d o d = 0 is validated once at
    construction; operations may assume it afterwards.
    """

    def __init__(self, cells, boundaries):
        self.cells = tuple(int(c) for c in cells)
        if any(c < 0 for c in self.cells):
            raise ComplexInvalid("negative cell count")
        boundaries = list(boundaries)
        if len(boundaries) != max(len(self.cells) - 1, 0):
            raise ComplexInvalid("need one boundary map per positive dimension")
        self.boundaries = tuple(boundaries)
        for k, d in enumerate(self.boundaries, start=1):
            if (d.rows, d.cols) != (self.cells[k - 1], self.cells[k]):
                raise ComplexInvalid(f"boundary {k} has shape {(d.rows, d.cols)}, "
                                     f"expected {(self.cells[k - 1], self.cells[k])}")
        for k in range(1, len(self.boundaries)):
            if not (self.boundaries[k - 1] * self.boundaries[k]).is_zero():
                raise ComplexInvalid(f"d_{k} o d_{k + 1} != 0")

    @property
    def dim(self):
        return len(self.cells) - 1

    def boundary(self, k):
        """d_k, with d_0 and d_{dim+1} the zero maps."""
        if 1 <= k <= self.dim:
            return self.boundaries[k - 1]
        if k == 0:
            return IntMatrix.zero(0, self.cells[0] if self.cells else 0)
        return IntMatrix.zero(self.cells[k - 1] if k - 1 <= self.dim else 0, 0)

    def euler_characteristic(self):
        return sum((-1) ** k * c for k, c in enumerate(self.cells))


def homology(C, k):
    """H_k(C) = ker d_k / im d_{k+1} as a HomologyGroup."""
    if k < 0 or k > C.dim:
        raise IndexOutOfRange(f"degree {k} outside complex of dimension {C.dim}")
    n_k = C.cells[k]
    rank_k = rank(C.boundary(k)) if k >= 1 else 0
    snf_up = smith_normal_form(C.boundary(k + 1)) if k + 1 <= C.dim else None
    rank_up = snf_up.rank() if snf_up else 0
    free = n_k - rank_k - rank_up
    torsion = tuple(d for d in (snf_up.elementary_divisors() if snf_up else []) if d > 1)
    return HomologyGroup(free, torsion)


def all_homology(C):
    return [homology(C, k) for k in range(C.dim + 1)]


@dataclass(frozen=True)
class MapData:
    """Known ranks for one map of an exact sequence; None = unknown."""

    image: int | None = None
    kernel: int | None = None


class ExactSequenceData:
    """An exact sequence of free abelian groups with some unknown term ranks.

    `terms[i]` is an int (known rank) or a string naming an unknown.  Map i
    goes from term i to term i+1; `maps` assigns optional MapData per index.
    """

    def __init__(self, terms, maps=None):
        self.terms = list(terms)
        self.maps = dict(maps or {})
        for i in self.maps:
            if not 0 <= i < len(self.terms) - 1:
                raise ValueError(f"map index {i} out of range")


def exact_sequence_solve(seq):
    """Resolve unknown term ranks by rank-nullity and exactness.

    Returns the full list of term ranks.  Raises Underdetermined if the data
    leaves an unknown unresolved, Inconsistent if it contradicts exactness.
    """
    nterms = len(seq.terms)
    nmaps = nterms - 1
    T = [x if isinstance(x, int) else None for x in seq.terms]
    I = [None] * nmaps
    K = [None] * nmaps
    for i, md in seq.maps.items():
        I[i] = md.image
        K[i] = md.kernel

    def put(store, i, val, what):
        if val < 0:
            raise Inconsistent(f"negative rank for {what} {i}")
        if store[i] is None:
            store[i] = val
            return True
        if store[i] != val:
            raise Inconsistent(f"conflicting values for {what} {i}: "
                               f"{store[i]} vs {val}")
        return False

    changed = True
    while changed:
        changed = False
        for i in range(nmaps):
            # rank-nullity on the source term
            known = [x for x in (T[i], K[i], I[i]) if x is not None]
            if T[i] is not None and K[i] is not None and I[i] is None:
                changed |= put(I, i, T[i] - K[i], "image")
            elif T[i] is not None and I[i] is not None and K[i] is None:
                changed |= put(K, i, T[i] - I[i], "kernel")
            elif K[i] is not None and I[i] is not None and T[i] is None:
                changed |= put(T, i, K[i] + I[i], "term")
            elif len(known) == 3 and T[i] != K[i] + I[i]:
                raise Inconsistent(f"rank-nullity fails at term {i}")
            # images land in the next term
            if T[i + 1] == 0 and I[i] is None:
                changed |= put(I, i, 0, "image")
            if T[i] == 0:
                if I[i] is None:
                    changed |= put(I, i, 0, "image")
                if K[i] is None:
                    changed |= put(K, i, 0, "kernel")
        # exactness at interior terms: im(map i-1) = ker(map i)
        for i in range(1, nmaps):
            if I[i - 1] is not None and K[i] is None:
                changed |= put(K, i, I[i - 1], "kernel")
            elif K[i] is not None and I[i - 1] is None:
                changed |= put(I, i - 1, K[i], "image")
            elif I[i - 1] is not None and K[i] is not None and I[i - 1] != K[i]:
                raise Inconsistent(f"exactness fails at term {i}")

    if any(t is None for t in T):
        missing = [seq.terms[i] for i, t in enumerate(T) if t is None]
        raise Underdetermined(f"unresolved terms: {missing}")
    for i in range(nmaps):
        if I[i] is not None and T[i + 1] is not None and I[i] > T[i + 1]:
            raise Inconsistent(f"image of map {i} exceeds its target")
    return T
