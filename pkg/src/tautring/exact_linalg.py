"""Exact linear algebra over the rationals.

Everything here works with exact rational arithmetic (no floats, no
tolerances): reduced row echelon form, rank, span membership, affine
solution sets for linear systems, feasibility of linear inequality
systems, and Lagrange interpolation.
"""

from .errors import DomainError
from .rationals import QQ, ONE, ZERO, rat


class QMatrix:
    """Dense matrix with exact rational entries.

    Rows are stored as lists of rationals.  Instances are mutable; the
    reduction routines return new matrices and leave the original alone.
    """

    __slots__ = ("rows", "n_rows", "n_cols")

    def __init__(self, rows, n_cols=None):
        data = [[rat(x) for x in row] for row in rows]
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise DomainError("rows of a matrix must all have the same length")
            if n_cols is not None and n_cols != width:
                raise DomainError("n_cols does not match the given rows")
            n_cols = width
        elif n_cols is None:
            n_cols = 0
        self.rows = data
        self.n_rows = len(data)
        self.n_cols = n_cols

    @classmethod
    def zeros(cls, m, n):
        return cls([[ZERO] * n for _ in range(m)], n_cols=n)

    @classmethod
    def identity(cls, n):
        mat = cls.zeros(n, n)
        for i in range(n):
            mat.rows[i][i] = ONE
        return mat

    @property
    def shape(self):
        return (self.n_rows, self.n_cols)

    def copy(self):
        return QMatrix([row[:] for row in self.rows], n_cols=self.n_cols)

    def transpose(self):
        return QMatrix(
            [[self.rows[i][j] for i in range(self.n_rows)] for j in range(self.n_cols)],
            n_cols=self.n_rows,
        )

    def augment(self, other):
        """Horizontal concatenation with a matrix or a column vector."""
        if isinstance(other, QMatrix):
            if other.n_rows != self.n_rows:
                raise DomainError("row counts differ")
            cols = [list(a) + list(b) for a, b in zip(self.rows, other.rows)]
            return QMatrix(cols, n_cols=self.n_cols + other.n_cols)
        if len(other) != self.n_rows:
            raise DomainError("vector length does not match row count")
        cols = [list(row) + [rat(x)] for row, x in zip(self.rows, other)]
        return QMatrix(cols, n_cols=self.n_cols + 1)

    def apply(self, vector):
        """Matrix-vector product."""
        if len(vector) != self.n_cols:
            raise DomainError("vector length does not match column count")
        vec = [rat(x) for x in vector]
        return [sum((a * x for a, x in zip(row, vec)), ZERO) for row in self.rows]

    def __eq__(self, other):
        return (
            isinstance(other, QMatrix)
            and self.n_cols == other.n_cols
            and self.rows == other.rows
        )

    def __repr__(self):
        return "QMatrix(%r)" % (self.rows,)

    def rref(self, record=False):
        """Reduced row echelon form.

        Returns ``(reduced, pivots)``, or ``(reduced, pivots, transform)``
        when ``record`` is set, where ``transform`` is an invertible matrix
        with ``transform * self == reduced``.
        """
        work = [row[:] for row in self.rows]
        trans = QMatrix.identity(self.n_rows).rows if record else None
        pivots = []
        r = 0
        for c in range(self.n_cols):
            pivot = next((i for i in range(r, self.n_rows) if work[i][c] != 0), None)
            if pivot is None:
                continue
            work[r], work[pivot] = work[pivot], work[r]
            if record:
                trans[r], trans[pivot] = trans[pivot], trans[r]
            inv = ONE / work[r][c]
            work[r] = [x * inv for x in work[r]]
            if record:
                trans[r] = [x * inv for x in trans[r]]
            for i in range(self.n_rows):
                if i != r and work[i][c] != 0:
                    factor = work[i][c]
                    work[i] = [x - factor * y for x, y in zip(work[i], work[r])]
                    if record:
                        trans[i] = [x - factor * y for x, y in zip(trans[i], trans[r])]
            pivots.append(c)
            r += 1
            if r == self.n_rows:
                break
        reduced = QMatrix(work, n_cols=self.n_cols)
        if record:
            return reduced, pivots, QMatrix(trans, n_cols=self.n_rows)
        return reduced, pivots

    def rank(self):
        return len(self.rref()[1])

    def nullspace(self):
        """Basis of the right kernel, one vector per free column."""
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.n_cols) if c not in pivot_set]
        basis = []
        for f in free:
            vec = [ZERO] * self.n_cols
            vec[f] = ONE
            for i, p in enumerate(pivots):
                vec[p] = -reduced.rows[i][f]
            basis.append(vec)
        return basis

    def solve(self, b):
        """One solution of ``self * x = b``, or None if inconsistent."""
        sol = solve_affine(self, b)
        return None if sol is None else sol.particular


class AffineSolutionSet:
    """Solution set of a consistent linear system: particular + span(basis)."""

    __slots__ = ("particular", "basis")

    def __init__(self, particular, basis):
        self.particular = [rat(x) for x in particular]
        self.basis = [[rat(x) for x in vec] for vec in basis]

    @property
    def dim(self):
        return len(self.basis)

    def point(self, params):
        """The solution at the given values of the free parameters."""
        if len(params) != len(self.basis):
            raise DomainError("expected %d parameters" % len(self.basis))
        out = self.particular[:]
        for t, vec in zip(params, self.basis):
            t = rat(t)
            out = [x + t * y for x, y in zip(out, vec)]
        return out

    def __repr__(self):
        return "AffineSolutionSet(dim=%d, particular=%r)" % (self.dim, self.particular)


def solve_affine(matrix, b):
    """Full solution set of ``matrix * x = b``, or None if inconsistent."""
    aug = matrix.augment(b)
    reduced, pivots = aug.rref()
    if matrix.n_cols in pivots:
        return None
    particular = [ZERO] * matrix.n_cols
    for i, p in enumerate(pivots):
        particular[p] = reduced.rows[i][matrix.n_cols]
    return AffineSolutionSet(particular, matrix.nullspace())


def infeasibility_certificate(matrix, b):
    """A row combination proving ``matrix * x = b`` has no solution.

    Returns y with y^T * matrix = 0 and y^T * b != 0, or None when the
    system is consistent.
    """
    aug = matrix.augment(b)
    reduced, pivots, trans = aug.rref(record=True)
    if matrix.n_cols not in pivots:
        return None
    row = pivots.index(matrix.n_cols)
    return trans.rows[row]


def rank_of_rows(vectors, n_cols=None):
    if not vectors and n_cols is None:
        return 0
    return QMatrix(vectors, n_cols=n_cols).rank()


def in_span(vectors, target):
    """Coefficients expressing target in the span of vectors, or None.

    The vectors and the target live in the same coordinate space; the
    returned list c satisfies sum(c[i] * vectors[i]) == target.
    """
    vectors = list(vectors)
    if not vectors:
        return [] if all(rat(x) == 0 for x in target) else None
    mat = QMatrix(vectors).transpose()
    sol = mat.solve(target)
    return sol


def feasible(constraints, n_vars):
    """Exact feasibility of a system of linear constraints.

    Each constraint is a triple ``(coeffs, rel, rhs)`` asserting
    ``coeffs . x  rel  rhs`` with rel one of "<=", "<", ">=", ">", "==".
    Decided by Fourier-Motzkin elimination, so intended for small systems.
    """
    # Normal form: (coeffs, rhs, strict) meaning coeffs.x <= rhs
    # (strict: coeffs.x < rhs).
    rows = []
    for coeffs, rel, rhs in constraints:
        coeffs = [rat(x) for x in coeffs]
        if len(coeffs) != n_vars:
            raise DomainError("constraint has %d coefficients, expected %d" % (len(coeffs), n_vars))
        rhs = rat(rhs)
        if rel == "<=":
            rows.append((coeffs, rhs, False))
        elif rel == "<":
            rows.append((coeffs, rhs, True))
        elif rel == ">=":
            rows.append(([-x for x in coeffs], -rhs, False))
        elif rel == ">":
            rows.append(([-x for x in coeffs], -rhs, True))
        elif rel == "==":
            rows.append((coeffs, rhs, False))
            rows.append(([-x for x in coeffs], -rhs, False))
        else:
            raise DomainError("unknown relation %r" % (rel,))

    for var in range(n_vars - 1, -1, -1):
        lower, upper, rest = [], [], []
        for coeffs, rhs, strict in rows:
            a = coeffs[var]
            if a > 0:
                upper.append((coeffs, rhs, strict))
            elif a < 0:
                lower.append((coeffs, rhs, strict))
            else:
                rest.append((coeffs[:var], rhs, strict))
        # Combine every lower bound with every upper bound.
        for lc, lr, ls in lower:
            for uc, ur, us in upper:
                a, b = -lc[var], uc[var]
                coeffs = [a * uc[j] + b * lc[j] for j in range(var)]
                rest.append((coeffs, a * ur + b * lr, ls or us))
        rows = rest

    for _, rhs, strict in rows:
        if rhs < 0 or (strict and rhs == 0):
            return False
    return True


class QPolynomial:
    """Univariate polynomial with rational coefficients.

    Coefficients are stored lowest degree first; trailing zeros are
    trimmed so equal polynomials compare equal.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [rat(x) for x in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, x):
        x = rat(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        return isinstance(other, QPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return QPolynomial(out)

    def __sub__(self, other):
        return self + QPolynomial([-c for c in other.coeffs])

    def scaled(self, factor):
        factor = rat(factor)
        return QPolynomial([factor * c for c in self.coeffs])

    def __repr__(self):
        return "QPolynomial(%r)" % (list(self.coeffs),)


def lagrange_interpolate(points):
    """The unique polynomial of degree < len(points) through the points.

    Takes exact rational (x, y) pairs with distinct x values and builds
    the interpolant by accumulating Newton basis polynomials.
    """
    xs = [rat(x) for x, _ in points]
    ys = [rat(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise DomainError("interpolation nodes must be distinct")
    if not points:
        return QPolynomial([])
    # Divided differences.
    table = ys[:]
    coeffs = [table[0]]
    for level in range(1, len(xs)):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(len(table) - 1)
        ]
        coeffs.append(table[0])
    # Expand sum_k coeffs[k] * prod_{i<k} (x - xs[i]).
    poly = [ZERO] * len(xs)
    basis = [ONE]
    for k, c in enumerate(coeffs):
        for i, b in enumerate(basis):
            poly[i] = poly[i] + c * b
        if k + 1 < len(coeffs):
            # basis *= (x - xs[k])
            shifted = [ZERO] + basis
            basis = [s - xs[k] * b for s, b in zip(shifted, basis + [ZERO])]
    return QPolynomial(poly)
