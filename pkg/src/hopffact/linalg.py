"""Exact dense linear algebra over Q and GF(p), with based-space bookkeeping.

Two elimination backends sit behind one interface: fraction-free Bareiss
elimination on denominator-cleared integer rows for Q, and a vectorized
mod-p elimination for GF(p) that runs on float64 numpy arrays.  The float
path is exact: every intermediate integer is kept below 2**53 (pivot rows
and factor columns are reduced mod p before each update, so entries grow by
at most p**2 per pivot step).  Callers never see a float.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

import numpy as np

from .errors import HopffactError, NotInvertible, SpaceMismatch
from .fields import Field, PrimeField, require_same_field

# Running totals used by the acceptance suite: every kernel computation
# re-checks rank + nullity = domain dimension.
LINALG_STATS = {"eliminations": 0, "rank_nullity_checks": 0}

_FLOAT_EXACT_LIMIT = 2**53


class BasedSpace:
    """A finite-dimensional vector space with an ordered, labelled basis.

    Compatibility of spaces (for composition, tensor slots, ...) is decided
    by label-list identity, never by dimension alone.
    """

    __slots__ = ("dim", "labels")

    def __init__(self, labels):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise HopffactError("basis labels must be unique within a space")
        self.labels = labels
        self.dim = len(labels)

    def __eq__(self, other):
        return isinstance(other, BasedSpace) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return f"BasedSpace(dim={self.dim})"

    def tensor(self, other: "BasedSpace") -> "BasedSpace":
        return BasedSpace(
            tuple(f"{a}⊗{b}" for a in self.labels for b in other.labels)
        )

    def dual(self) -> "BasedSpace":
        return BasedSpace(tuple(f"{a}*" for a in self.labels))


def space(prefix: str, dim: int) -> BasedSpace:
    return BasedSpace(tuple(f"{prefix}{i}" for i in range(dim)))


def tensor_space(factors) -> BasedSpace:
    out = factors[0]
    for f in factors[1:]:
        out = out.tensor(f)
    return out


# ---------------------------------------------------------------------------
# Raw eliminations (row tuples in, no space bookkeeping)
# ---------------------------------------------------------------------------

def _clear_denominators(row):
    """Scale a row of Fractions to coprime integers (kernel-preserving)."""
    denoms = [Fraction(x).denominator for x in row]
    mult = lcm(*denoms) if denoms else 1
    ints = [int(Fraction(x) * mult) for x in row]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _bareiss_echelon(int_rows, ncols):
    """Fraction-free forward elimination; returns (rows, pivot_cols).

    Rows come in as lists of ints and leave in row-echelon form with exact
    integer entries; intermediate divisions are exact by the Bareiss
    two-step identity.
    """
    m = [list(r) for r in int_rows]
    nrows = len(m)
    piv_cols = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pr is None:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        pivot = m[r][c]
        for i in range(r + 1, nrows):
            mi, mr = m[i], m[r]
            f = mi[c]
            # the full two-step update keeps every later division exact,
            # even on rows whose leading entry is already zero
            for k in range(c, ncols):
                mi[k] = (pivot * mi[k] - f * mr[k]) // prev
        prev = pivot
        piv_cols.append(c)
        r += 1
    return m[:r], piv_cols


def _gf_echelon(a: np.ndarray, p: int, reduced: bool = True):
    """In-place mod-p elimination on a float64 matrix of integers.

    Returns (matrix, pivot_cols); the result is fully reduced mod p.  With
    ``reduced=True`` entries above pivots are cleared too (RREF).
    """
    nrows, ncols = a.shape
    if min(nrows, ncols) * p * p + p >= _FLOAT_EXACT_LIMIT:
        raise HopffactError(f"prime {p} too large for the float64 path")
    piv_cols = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        a[r:, c] %= p
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] %= p
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        if reduced:
            factors = a[:, c] % p
            factors[r] = 0
            nzf = np.nonzero(factors)[0]
            if nzf.size:
                a[nzf] -= np.outer(factors[nzf], a[r])
                a[nzf, c] = 0
        else:
            factors = a[r + 1 :, c] % p
            nzf = np.nonzero(factors)[0]
            if nzf.size:
                a[r + 1 + nzf] -= np.outer(factors[nzf], a[r])
                a[r + 1 + nzf, c] = 0
        piv_cols.append(c)
        r += 1
    a %= p
    return a[:r], piv_cols


def _as_gf_array(rows, ncols: int) -> np.ndarray:
    if isinstance(rows, np.ndarray):
        return rows.astype(np.float64, copy=True)
    if not len(rows):
        return np.zeros((0, ncols), dtype=np.float64)
    return np.array(rows, dtype=np.float64)


def echelonize(rows, ncols: int, field: Field):
    """Row-echelon form; returns (rows, pivot_cols).

    Over Q the returned rows are Fraction tuples scaled so each pivot is 1;
    over GF(p) the result is a reduced (RREF) float64 array of ints in
    [0, p).  The row space is preserved exactly either way.
    """
    LINALG_STATS["eliminations"] += 1
    if isinstance(field, PrimeField):
        a = _as_gf_array(rows, ncols)
        return _gf_echelon(a, field.p)
    if not len(rows):
        return [], []
    int_rows = [_clear_denominators(r) for r in rows]
    ech, piv = _bareiss_echelon(int_rows, ncols)
    out = []
    for row, c in zip(ech, piv):
        pivot = Fraction(row[c])
        out.append(tuple(Fraction(x) / pivot for x in row))
    return out, piv


def rank_of(rows, ncols: int, field: Field) -> int:
    return len(echelonize(rows, ncols, field)[1])


def kernel_basis_array(rows, ncols: int, field: PrimeField) -> np.ndarray:
    """GF(p) kernel as an (ncols × nullity) float64 array, read off the RREF."""
    ech, piv = echelonize(rows, ncols, field)
    piv_set = set(piv)
    free_cols = [c for c in range(ncols) if c not in piv_set]
    p = field.p
    out = np.zeros((ncols, len(free_cols)), dtype=np.float64)
    if free_cols:
        out[free_cols, np.arange(len(free_cols))] = 1.0
        if piv:
            out[piv, :] = (-ech[:, free_cols]) % p
    LINALG_STATS["rank_nullity_checks"] += 1
    assert len(piv) + len(free_cols) == ncols, "rank-nullity violated"
    return out


def kernel_basis(rows, ncols: int, field: Field):
    """Basis of the right kernel of the matrix given by ``rows``.

    Asserts rank + nullity = ncols before returning.
    """
    if isinstance(field, PrimeField):
        arr = kernel_basis_array(rows, ncols, field)
        return [tuple(int(x) for x in arr[:, j]) for j in range(arr.shape[1])]
    ech, piv = echelonize(rows, ncols, field)
    piv_set = set(piv)
    free_cols = [c for c in range(ncols) if c not in piv_set]
    basis = []
    for fc in free_cols:
        v = [field.zero] * ncols
        v[fc] = field.one
        for i in range(len(piv) - 1, -1, -1):
            pc = piv[i]
            s = field.zero
            row = ech[i]
            for c in range(pc + 1, ncols):
                if not field.is_zero(row[c]) and not field.is_zero(v[c]):
                    s = field.add(s, field.mul(row[c], v[c]))
            # echelon pivots are normalized to 1
            v[pc] = field.neg(s)
        basis.append(tuple(v))
    LINALG_STATS["rank_nullity_checks"] += 1
    assert len(piv) + len(basis) == ncols, "rank-nullity violated"
    return basis


def solve_columns(a_rows, rhs_cols, ncols: int, field: Field):
    """Solve A x = b for each column b in ``rhs_cols``.

    Returns a list of solution vectors (free variables set to zero), or
    raises HopffactError when some system is inconsistent.
    """
    nrhs = len(rhs_cols)
    if isinstance(field, PrimeField):
        a = _as_gf_array(a_rows, ncols)
        if nrhs:
            rhs = np.array([tuple(col) for col in rhs_cols], dtype=np.float64).T
        else:
            rhs = np.zeros((a.shape[0], 0), dtype=np.float64)
        aug = np.hstack([a, rhs])
        ech, piv = echelonize(aug, ncols + nrhs, field)
        if any(c >= ncols for c in piv):
            raise HopffactError("inconsistent linear system")
        x = np.zeros((ncols, nrhs), dtype=np.float64)
        if piv:
            x[piv, :] = ech[:, ncols:]
        return [tuple(int(v) for v in x[:, j]) for j in range(nrhs)]
    nrows = len(a_rows)
    aug = []
    for i in range(nrows):
        aug.append(tuple(a_rows[i]) + tuple(col[i] for col in rhs_cols))
    ech, piv = echelonize(aug, ncols + nrhs, field)
    if any(c >= ncols for c in piv):
        raise HopffactError("inconsistent linear system")
    sols = []
    for j in range(nrhs):
        x = [field.zero] * ncols
        for i in range(len(piv) - 1, -1, -1):
            pc = piv[i]
            row = ech[i]
            s = row[ncols + j]
            for c in range(pc + 1, ncols):
                if not field.is_zero(row[c]) and not field.is_zero(x[c]):
                    s = field.sub(s, field.mul(row[c], x[c]))
            x[pc] = s
        sols.append(tuple(x))
    return sols


# ---------------------------------------------------------------------------
# MapMatrix
# ---------------------------------------------------------------------------

class MapMatrix:
    """A linear map between based spaces, stored densely (codomain × domain).

    Immutable.  Composition requires the inner space labels to agree.
    """

    __slots__ = ("field", "domain", "codomain", "rows", "_np")

    def __init__(self, field: Field, domain: BasedSpace, codomain: BasedSpace, rows):
        rows = tuple(tuple(r) for r in rows)
        if len(rows) != codomain.dim or any(len(r) != domain.dim for r in rows):
            raise HopffactError("matrix shape does not match its spaces")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "codomain", codomain)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_np", None)

    def __setattr__(self, *a):
        raise AttributeError("MapMatrix is immutable")

    # -- constructors ------------------------------------------------------
    @staticmethod
    def identity(field: Field, sp: BasedSpace) -> "MapMatrix":
        rows = [
            tuple(field.one if i == j else field.zero for j in range(sp.dim))
            for i in range(sp.dim)
        ]
        return MapMatrix(field, sp, sp, rows)

    @staticmethod
    def zero(field: Field, domain: BasedSpace, codomain: BasedSpace) -> "MapMatrix":
        row = tuple(field.zero for _ in range(domain.dim))
        return MapMatrix(field, domain, codomain, [row] * codomain.dim)

    @staticmethod
    def from_columns(field, domain, codomain, cols) -> "MapMatrix":
        rows = [
            tuple(cols[j][i] for j in range(domain.dim))
            for i in range(codomain.dim)
        ]
        return MapMatrix(field, domain, codomain, rows)

    def numpy(self) -> np.ndarray:
        """Int64 view for GF fields (cached, treated as read-only)."""
        if not isinstance(self.field, PrimeField):
            raise HopffactError("numpy view only exists over GF(p)")
        if self._np is None:
            arr = np.array(self.rows, dtype=np.int64)
            arr.flags.writeable = False
            object.__setattr__(self, "_np", arr)
        return self._np

    # -- algebra -----------------------------------------------------------
    def compose(self, other: "MapMatrix") -> "MapMatrix":
        """self ∘ other (apply ``other`` first)."""
        require_same_field(self.field, other.field)
        if other.codomain.labels != self.domain.labels:
            raise SpaceMismatch("composition: inner spaces differ")
        f = self.field
        if isinstance(f, PrimeField):
            prod = _gf_matmul(self.numpy(), other.numpy(), f.p)
            rows = [tuple(int(x) for x in row) for row in prod]
            return MapMatrix(f, other.domain, self.codomain, rows)
        a, b = self.rows, other.rows
        n, k, m = self.codomain.dim, self.domain.dim, other.domain.dim
        bt = list(zip(*b)) if b else [()] * m
        rows = []
        for i in range(n):
            ai = a[i]
            rows.append(
                tuple(
                    sum((ai[t] * bt[j][t] for t in range(k) if ai[t]), Fraction(0))
                    for j in range(m)
                )
            )
        return MapMatrix(f, other.domain, self.codomain, rows)

    def __matmul__(self, other):
        return self.compose(other)

    def __add__(self, other):
        self._require_same_shape(other)
        f = self.field
        rows = [
            tuple(f.add(x, y) for x, y in zip(r1, r2))
            for r1, r2 in zip(self.rows, other.rows)
        ]
        return MapMatrix(f, self.domain, self.codomain, rows)

    def __sub__(self, other):
        self._require_same_shape(other)
        f = self.field
        rows = [
            tuple(f.sub(x, y) for x, y in zip(r1, r2))
            for r1, r2 in zip(self.rows, other.rows)
        ]
        return MapMatrix(f, self.domain, self.codomain, rows)

    def scale(self, scalar) -> "MapMatrix":
        f = self.field
        rows = [tuple(f.mul(scalar, x) for x in r) for r in self.rows]
        return MapMatrix(f, self.domain, self.codomain, rows)

    def _require_same_shape(self, other):
        require_same_field(self.field, other.field)
        if (
            self.domain.labels != other.domain.labels
            or self.codomain.labels != other.codomain.labels
        ):
            raise SpaceMismatch("matrix shapes (spaces) differ")

    def transpose(self) -> "MapMatrix":
        rows = tuple(zip(*self.rows)) if self.rows else ()
        return MapMatrix(self.field, self.codomain, self.domain, rows)

    def apply(self, vec):
        if len(vec) != self.domain.dim:
            raise SpaceMismatch("vector length does not match domain")
        f = self.field
        out = []
        for row in self.rows:
            s = f.zero
            for x, v in zip(row, vec):
                if not f.is_zero(x) and not f.is_zero(v):
                    s = f.add(s, f.mul(x, v))
            out.append(s)
        return tuple(out)

    # -- rank / kernel / solve ----------------------------------------------
    def rank(self) -> int:
        return rank_of(self.rows, self.domain.dim, self.field)

    def kernel(self):
        """Basis of ker(self) as domain vectors."""
        return kernel_basis(self.rows, self.domain.dim, self.field)

    def solve(self, target):
        """One preimage of ``target`` (a codomain vector)."""
        return solve_columns(self.rows, [tuple(target)], self.domain.dim, self.field)[0]

    def solve_many(self, targets):
        return solve_columns(self.rows, [tuple(t) for t in targets], self.domain.dim, self.field)

    def inverse(self) -> "MapMatrix":
        if self.domain.dim != self.codomain.dim:
            raise NotInvertible("non-square matrix")
        f = self.field
        eye = [
            tuple(f.one if i == j else f.zero for i in range(self.codomain.dim))
            for j in range(self.codomain.dim)
        ]
        try:
            cols = solve_columns(self.rows, eye, self.domain.dim, f)
        except HopffactError as exc:
            raise NotInvertible(str(exc)) from exc
        # an inconsistent-free solve of a square system can still be singular
        inv = MapMatrix.from_columns(f, self.codomain, self.domain, cols)
        if (inv @ self) != MapMatrix.identity(f, self.domain):
            raise NotInvertible("matrix is singular")
        return inv

    def is_identity(self) -> bool:
        if self.domain.labels != self.codomain.labels:
            return False
        f = self.field
        return all(
            (x == f.one if i == j else f.is_zero(x))
            for i, row in enumerate(self.rows)
            for j, x in enumerate(row)
        )

    def is_zero_map(self) -> bool:
        f = self.field
        return all(f.is_zero(x) for row in self.rows for x in row)

    def __eq__(self, other):
        return (
            isinstance(other, MapMatrix)
            and self.field == other.field
            and self.domain.labels == other.domain.labels
            and self.codomain.labels == other.codomain.labels
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.domain.labels, self.codomain.labels, self.rows))

    def __repr__(self):
        return f"MapMatrix({self.codomain.dim}×{self.domain.dim} over {self.field})"


def _gf_matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    inner = a.shape[1]
    if (p - 1) ** 2 * max(inner, 1) < _FLOAT_EXACT_LIMIT:
        prod = (a.astype(np.float64) % p) @ (b.astype(np.float64) % p)
        return (prod % p).astype(np.int64)
    out = (a.astype(object) @ b.astype(object)) % p
    return out.astype(np.int64)


# ---------------------------------------------------------------------------
# Incremental spans (used by closures and operator-algebra saturation)
# ---------------------------------------------------------------------------

class IncrementalSpan:
    """Grow-only echelon basis of a subspace of field^n.

    Over Q rows are kept as coprime integer tuples; over GF(p) as ints in
    [0, p).  ``add`` reduces the vector against the current echelon and
    reports whether the span grew.
    """

    def __init__(self, field: Field, n: int):
        self.field = field
        self.n = n
        self.rows = []       # echelon rows, pivot entry first nonzero
        self.piv = []        # pivot column per row, strictly handled below

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _reduce(self, vec):
        if isinstance(self.field, PrimeField):
            p = self.field.p
            v = [int(x) % p for x in vec]
            for row, pc in zip(self.rows, self.piv):
                f = v[pc]
                if f:
                    for k in range(pc, self.n):
                        if row[k]:
                            v[k] = (v[k] - f * row[k]) % p
            return v
        v = _clear_denominators(vec)
        for row, pc in zip(self.rows, self.piv):
            f = v[pc]
            if f:
                piv = row[pc]
                for k in range(self.n):
                    v[k] = piv * v[k] - f * row[k]
                g = 0
                for x in v:
                    g = gcd(g, x)
                if g > 1:
                    v = [x // g for x in v]
        return v

    def add(self, vec) -> bool:
        v = self._reduce(vec)
        pc = next((i for i, x in enumerate(v) if x), None)
        if pc is None:
            return False
        if isinstance(self.field, PrimeField):
            p = self.field.p
            inv = pow(v[pc], p - 2, p)
            v = [(x * inv) % p for x in v]
        self.rows.append(v)
        self.piv.append(pc)
        order = sorted(range(len(self.piv)), key=self.piv.__getitem__)
        self.rows = [self.rows[i] for i in order]
        self.piv = [self.piv[i] for i in order]
        return True

    def contains(self, vec) -> bool:
        return all(x == 0 for x in self._reduce(vec))

    def basis_vectors(self):
        """Echelon basis as field-element tuples."""
        f = self.field
        if isinstance(f, PrimeField):
            return [tuple(x % f.p for x in row) for row in self.rows]
        return [tuple(Fraction(x) for x in row) for row in self.rows]


class GFBatchSpan:
    """Numpy-backed incremental span over GF(p) for large saturations.

    Keeps the echelon in RREF (pivot columns are unit columns), so reducing
    a batch is one dense matmul.
    """

    def __init__(self, p: int, n: int):
        self.p = p
        self.n = n
        self.rows = np.zeros((0, n), dtype=np.float64)
        self.piv = []

    @property
    def dim(self) -> int:
        return len(self.piv)

    def add_batch(self, batch: np.ndarray) -> int:
        """Add the rows of ``batch`` (int-valued); returns #new pivots."""
        p = self.p
        b = batch.astype(np.float64) % p
        if self.piv:
            b = (b - (b[:, self.piv] @ self.rows)) % p
        b = b[b.any(axis=1)]
        if b.shape[0] == 0:
            return 0
        ech, piv_new = _gf_echelon(b, p, reduced=True)
        if not piv_new:
            return 0
        if self.piv:
            # clear the new pivot columns from existing rows (keep RREF)
            coeffs = self.rows[:, piv_new] % p
            self.rows = (self.rows - coeffs @ ech) % p
        self.rows = np.vstack([self.rows, ech])
        self.piv.extend(int(c) for c in piv_new)
        return len(piv_new)
