"""Exact scalar fields and the dense small-matrix kernel.

Scalars are plain Python values: fractions.Fraction over the rationals,
ints in [0, p) over a prime field. A Matrix is an immutable row-major
tuple of entries tagged with its field. Row reduction is delegated to the
compiled kernel (wplrec._kernel) when available, otherwise to the pure
Python fallback; WPLREC_PURE_KERNEL=1 forces the fallback.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

if os.environ.get("WPLREC_PURE_KERNEL"):
    from . import _pykernel as _impl

    KERNEL_BACKEND = "python"
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]

        KERNEL_BACKEND = "compiled"
    except ImportError:
        from . import _pykernel as _impl

        KERNEL_BACKEND = "python"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class RationalField:
    """The field of rational numbers; elements are Fraction."""

    name = "rational"
    modulus = None

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def of_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / a

    def is_zero(self, a):
        return a == 0

    def to_str(self, a) -> str:
        return str(a)

    def parse(self, s: str):
        return Fraction(s)

    def sample(self, rng):
        return Fraction(rng.randint(-6, 6), rng.randint(1, 4))

    # number of points on the projective line (None = unbounded)
    def projective_points(self):
        return None

    def __repr__(self):
        return "QQ"


@dataclass(frozen=True)
class PrimeField:
    """GF(p); elements are ints in [0, p)."""

    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")
        if self.p >= 2**31:
            raise ValueError("prime moduli must fit in 31 bits")

    name = "prime"

    @property
    def modulus(self):
        return self.p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def of_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def to_str(self, a) -> str:
        return str(a % self.p)

    def parse(self, s: str):
        if "/" in s:
            n, d = s.split("/", 1)
            return self.mul(int(n) % self.p, self.inv(int(d)))
        return int(s) % self.p

    def sample(self, rng):
        return rng.randrange(self.p)

    def projective_points(self):
        return self.p + 1

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def field_from_name(name: str):
    """Parse a field descriptor: "rational" or "gf:P"."""
    if name == "rational":
        return QQ
    if name.startswith("gf:"):
        try:
            return PrimeField(int(name[3:]))
        except ValueError as exc:
            raise ValueError(f"bad field descriptor {name!r}: {exc}") from exc
    raise ValueError(f"unknown field descriptor {name!r}")


def field_name(field) -> str:
    return "rational" if field.modulus is None else f"gf:{field.modulus}"


class Matrix:
    """Immutable dense matrix over an exact field.

    Vectors are plain tuples; columns act on the right (apply(v) computes
    M*v), matching the convention that a degree component map sends source
    coordinates to target coordinates.
    """

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, rows: int, cols: int, data):
        data = tuple(data)
        if len(data) != rows * cols:
            raise ValueError("entry count does not match shape")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", data)

    def __setattr__(self, *a):
        raise AttributeError("Matrix is immutable")

    @staticmethod
    def from_rows(field, rows_list) -> Matrix:
        rows = len(rows_list)
        cols = len(rows_list[0]) if rows else 0
        flat = []
        for row in rows_list:
            if len(row) != cols:
                raise ValueError("ragged rows")
            flat.extend(row)
        return Matrix(field, rows, cols, flat)

    @staticmethod
    def from_cols(field, cols_list, rows: int | None = None) -> Matrix:
        cols = len(cols_list)
        if rows is None:
            rows = len(cols_list[0]) if cols else 0
        flat = [field.zero] * (rows * cols)
        for j, col in enumerate(cols_list):
            if len(col) != rows:
                raise ValueError("ragged columns")
            for i, x in enumerate(col):
                flat[i * cols + j] = x
        return Matrix(field, rows, cols, flat)

    @staticmethod
    def zero(field, rows: int, cols: int) -> Matrix:
        return Matrix(field, rows, cols, [field.zero] * (rows * cols))

    @staticmethod
    def identity(field, n: int) -> Matrix:
        m = [field.zero] * (n * n)
        for i in range(n):
            m[i * n + i] = field.one
        return Matrix(field, n, n, m)

    def entry(self, i: int, j: int):
        return self.data[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.data[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return tuple(self.data[i * self.cols + j] for i in range(self.rows))

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.cols)]

    def transpose(self) -> Matrix:
        return Matrix(
            self.field,
            self.cols,
            self.rows,
            [self.data[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def is_zero(self) -> bool:
        f = self.field
        return all(f.is_zero(x) for x in self.data)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.data))

    def __repr__(self):
        body = "; ".join(
            " ".join(self.field.to_str(self.entry(i, j)) for j in range(self.cols))
            for i in range(self.rows)
        )
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def add(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        f = self.field
        return Matrix(f, self.rows, self.cols, [f.add(a, b) for a, b in zip(self.data, other.data)])

    def sub(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        f = self.field
        return Matrix(f, self.rows, self.cols, [f.sub(a, b) for a, b in zip(self.data, other.data)])

    def neg(self) -> Matrix:
        f = self.field
        return Matrix(f, self.rows, self.cols, [f.neg(a) for a in self.data])

    def scale(self, c) -> Matrix:
        f = self.field
        return Matrix(f, self.rows, self.cols, [f.mul(c, a) for a in self.data])

    def mul(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} * {other.rows}x{other.cols}")
        f = self.field
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.data, other.data
        out = [f.zero] * (n * m)
        p = f.modulus
        if p is None:
            for i in range(n):
                for t in range(k):
                    x = a[i * k + t]
                    if x:
                        base = t * m
                        for j in range(m):
                            y = b[base + j]
                            if y:
                                out[i * m + j] += x * y
        else:
            for i in range(n):
                for t in range(k):
                    x = a[i * k + t]
                    if x:
                        base = t * m
                        for j in range(m):
                            y = b[base + j]
                            if y:
                                out[i * m + j] = (out[i * m + j] + x * y) % p
        return Matrix(f, n, m, out)

    def apply(self, vec) -> tuple:
        """Matrix-vector product M*v."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        f = self.field
        out = []
        for i in range(self.rows):
            acc = f.zero
            for j, x in enumerate(vec):
                if not f.is_zero(x):
                    acc = f.add(acc, f.mul(self.entry(i, j), x))
            out.append(acc)
        return tuple(out)

    def hstack(self, other: Matrix) -> Matrix:
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        flat = []
        for i in range(self.rows):
            flat.extend(self.row(i))
            flat.extend(other.row(i))
        return Matrix(self.field, self.rows, self.cols + other.cols, flat)

    def vstack(self, other: Matrix) -> Matrix:
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return Matrix(self.field, self.rows + other.rows, self.cols, self.data + other.data)

    def _check_same_shape(self, other: Matrix):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")


def hstack_all(field, mats: list[Matrix], rows: int) -> Matrix:
    mats = [m for m in mats if m.cols]
    if not mats:
        return Matrix.zero(field, rows, 0)
    out = mats[0]
    for m in mats[1:]:
        out = out.hstack(m)
    return out


def block_diag(field, mats: list[Matrix]) -> Matrix:
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    flat = [field.zero] * (rows * cols)
    r0 = c0 = 0
    for m in mats:
        for i in range(m.rows):
            for j in range(m.cols):
                flat[(r0 + i) * cols + (c0 + j)] = m.entry(i, j)
        r0 += m.rows
        c0 += m.cols
    return Matrix(field, rows, cols, flat)


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot column indices."""
    f = m.field
    if m.rows == 0 or m.cols == 0:
        return m, []
    if f.modulus is None:
        num = [x.numerator for x in m.data]
        den = [x.denominator for x in m.data]
        rn, rd, piv = _impl.rref_frac(num, den, m.rows, m.cols)
        data = [Fraction(rn[k], rd[k]) for k in range(m.rows * m.cols)]
    else:
        rm, piv = _impl.rref_mod(list(m.data), m.rows, m.cols, f.modulus)
        data = rm
    return Matrix(f, m.rows, m.cols, data), list(piv)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix) -> list[tuple]:
    """Basis of the right null space {x : M*x = 0}, as column vectors."""
    f = m.field
    if m.cols == 0:
        return []
    if m.rows == 0:
        return [tuple(f.one if i == j else f.zero for i in range(m.cols)) for j in range(m.cols)]
    r, piv = rref(m)
    pivset = set(piv)
    free = [j for j in range(m.cols) if j not in pivset]
    basis = []
    for j in free:
        v = [f.zero] * m.cols
        v[j] = f.one
        for row_idx, pc in enumerate(piv):
            v[pc] = f.neg(r.entry(row_idx, j))
        basis.append(tuple(v))
    return basis


def solve(m: Matrix, b) -> tuple | None:
    """Some x with M*x = b, or None when b is outside the column space."""
    if len(b) != m.rows:
        raise ValueError("rhs length mismatch")
    f = m.field
    aug = m.hstack(Matrix.from_cols(f, [tuple(b)], m.rows))
    r, piv = rref(aug)
    if m.cols in piv:
        return None
    x = [f.zero] * m.cols
    for row_idx, pc in enumerate(piv):
        x[pc] = r.entry(row_idx, m.cols)
    return tuple(x)


def solve_matrix(m: Matrix, rhs: Matrix) -> Matrix | None:
    """Some X with M*X = rhs, or None when a column is unsolvable."""
    if rhs.rows != m.rows:
        raise ValueError("rhs row mismatch")
    f = m.field
    aug = m.hstack(rhs)
    r, piv = rref(aug)
    if any(pc >= m.cols for pc in piv):
        return None
    out = [f.zero] * (m.cols * rhs.cols)
    for row_idx, pc in enumerate(piv):
        for j in range(rhs.cols):
            out[pc * rhs.cols + j] = r.entry(row_idx, m.cols + j)
    return Matrix(f, m.cols, rhs.cols, out)


def invert(m: Matrix) -> Matrix | None:
    if m.rows != m.cols:
        return None
    if m.rows == 0:
        return m
    inv = solve_matrix(m, Matrix.identity(m.field, m.rows))
    return inv


def span_basis(field, vectors) -> list[tuple]:
    """Deterministic reduced basis (rref rows) of the span of the vectors."""
    vecs = [tuple(v) for v in vectors]
    if not vecs:
        return []
    n = len(vecs[0])
    if any(len(v) != n for v in vecs):
        raise ValueError("mismatched vector lengths")
    r, piv = rref(Matrix.from_rows(field, vecs))
    return [r.row(i) for i in range(len(piv))]


def subspace_ops(field, a, b) -> tuple[list[tuple], list[tuple]]:
    """Sum and intersection bases of two spans inside the same ambient space."""
    a = [tuple(v) for v in a]
    b = [tuple(v) for v in b]
    if a and b and len(a[0]) != len(b[0]):
        raise ValueError("mismatched vector lengths")
    total = span_basis(field, a + b)
    if not a or not b:
        return total, []
    n = len(a[0])
    abasis = span_basis(field, a)
    bbasis = span_basis(field, b)
    ma = Matrix.from_cols(field, abasis, n)
    mb = Matrix.from_cols(field, [tuple(field.neg(x) for x in v) for v in bbasis], n)
    ker = kernel_basis(ma.hstack(mb))
    inter = []
    for z in ker:
        inter.append(ma.apply(z[: len(abasis)]))
    return total, span_basis(field, inter)
