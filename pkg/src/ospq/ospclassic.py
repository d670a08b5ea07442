"""The classical orthosymplectic Lie superalgebra osp(1|2n) as exact matrices.

Elements are (2n+1) x (2n+1) matrices over the field Q(sqrt(2)), graded by
parity.  Index 0 carries the one-dimensional even part of the underlying
super vector space and indices 1..2n the symplectic part, so a homogeneous
matrix of grade g has nonzero entries only at positions (r, c) with
parity(r) + parity(c) = g (mod 2), where parity(0) = 0 and parity(r) = 1
for r >= 1.

A matrix M belongs to osp(1|2n) when it has the block shape

    [ 0    x    y  ]
    [ y^T  d    e  ]        x, y : 1 x n,   d : n x n,
    [ -x^T f   -d^T]        e = e^T,  f = f^T  (n x n),

with the grade-1 subspace cut out by d = e = f = 0 and the grade-0
subspace (isomorphic to sp(2n)) by x = y = 0.

The generating odd elements are the paraboson pairs

    A_i^- = sqrt(2) (E_{0,i}   - E_{n+i,0}),
    A_i^+ = sqrt(2) (E_{0,n+i} + E_{i,0}),      i = 1..n,

whose anticommutators span the even part.  The module verifies, by exact
arithmetic, the trilinear paraboson relations, the quadrilinear sp(2n)
relations among anticommutators, the Cartan-Kac and Serre presentations of
the Chevalley generators built from the A's, the expected span dimensions
(2n^2 + 3n for the full algebra, n^2 for the gl(n) subalgebra of mixed
anticommutators), and the reconstruction of each A_i^+- from nested
commutators of Chevalley generators.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .report import CheckResult
from .scalars import ONE, SQRT2, Q2

Entry = tuple[int, int]

_SIGN_STR = {1: "+", -1: "-"}


def _parity(index: int) -> int:
    return 0 if index == 0 else 1


class GradedMatrix:
    """Sparse square matrix over Q(sqrt(2)) with a Z_2 grade.

    Entries are stored as a dict mapping (row, col) to nonzero Q2 values.
    The grade records which parity blocks the matrix may populate; it is
    enforced at construction time, so every arithmetic result is checked
    to be parity-homogeneous.
    """

    __slots__ = ("n", "grade", "entries")

    def __init__(self, n: int, grade: int, entries: dict[Entry, Q2] | None = None):
        if n < 1:
            raise ValueError("mode count must be at least 1")
        if grade not in (0, 1):
            raise ValueError("grade must be 0 or 1")
        self.n = n
        self.grade = grade
        dim = 2 * n + 1
        cleaned: dict[Entry, Q2] = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < dim and 0 <= c < dim):
                raise ValueError(f"entry index ({r}, {c}) outside {dim}x{dim} matrix")
            if (_parity(r) + _parity(c)) % 2 != grade:
                raise ValueError(
                    f"entry ({r}, {c}) violates grade-{grade} block structure"
                )
            q = Q2._coerce(v)
            if q is None:
                raise TypeError(f"matrix entry must be a scalar, got {type(v).__name__}")
            if not q.is_zero():
                cleaned[(r, c)] = q
        self.entries = cleaned

    # ---------------------------------------------------------------- basics

    @property
    def dim(self) -> int:
        return 2 * self.n + 1

    @classmethod
    def zero(cls, n: int, grade: int = 0) -> "GradedMatrix":
        return cls(n, grade, {})

    @classmethod
    def unit(cls, n: int, r: int, c: int, scale: Q2 | int | Fraction = 1) -> "GradedMatrix":
        """The matrix scale * E_{r,c}, with grade inferred from (r, c)."""
        grade = (_parity(r) + _parity(c)) % 2
        return cls(n, grade, {(r, c): Q2._coerce(scale)})

    def is_zero(self) -> bool:
        return not self.entries

    def entry(self, r: int, c: int) -> Q2:
        return self.entries.get((r, c), Q2(0))

    def dense(self) -> list[list[Q2]]:
        return [
            [self.entries.get((r, c), Q2(0)) for c in range(self.dim)]
            for r in range(self.dim)
        ]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.entries.items())))

    def __str__(self) -> str:
        rows = []
        for row in self.dense():
            rows.append("[" + ", ".join(str(v) for v in row) + "]")
        return "\n".join(rows)

    def __repr__(self) -> str:
        return f"GradedMatrix(n={self.n}, grade={self.grade}, nnz={len(self.entries)})"

    # ------------------------------------------------------------ arithmetic

    def _check_compatible(self, other: "GradedMatrix") -> None:
        if self.n != other.n:
            raise ValueError(
                f"dimension mismatch: {self.dim}x{self.dim} vs {other.dim}x{other.dim}"
            )

    def __add__(self, other: "GradedMatrix") -> "GradedMatrix":
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        self._check_compatible(other)
        if self.is_zero():
            grade = other.grade
        elif other.is_zero():
            grade = self.grade
        elif self.grade != other.grade:
            raise ValueError("cannot add nonzero matrices of different grade")
        else:
            grade = self.grade
        out = dict(self.entries)
        for key, v in other.entries.items():
            s = out.get(key)
            t = v if s is None else s + v
            if t.is_zero():
                out.pop(key, None)
            else:
                out[key] = t
        return GradedMatrix(self.n, grade, out)

    def __sub__(self, other: "GradedMatrix") -> "GradedMatrix":
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "GradedMatrix":
        return GradedMatrix(self.n, self.grade, {k: -v for k, v in self.entries.items()})

    def scale(self, factor: Q2 | int | Fraction) -> "GradedMatrix":
        q = Q2._coerce(factor)
        if q is None:
            raise TypeError(f"cannot scale matrix by {type(factor).__name__}")
        if q.is_zero():
            return GradedMatrix.zero(self.n, self.grade)
        return GradedMatrix(self.n, self.grade, {k: v * q for k, v in self.entries.items()})

    def __rmul__(self, factor: object) -> "GradedMatrix":
        if isinstance(factor, (int, Fraction, Q2)):
            return self.scale(factor)
        return NotImplemented

    def __matmul__(self, other: "GradedMatrix") -> "GradedMatrix":
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        self._check_compatible(other)
        cols: dict[int, list[tuple[int, Q2]]] = {}
        for (r, c), v in other.entries.items():
            cols.setdefault(r, []).append((c, v))
        out: dict[Entry, Q2] = {}
        for (r, k), a in self.entries.items():
            for c, b in cols.get(k, ()):
                key = (r, c)
                s = out.get(key)
                t = a * b if s is None else s + a * b
                if t.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = t
        return GradedMatrix(self.n, (self.grade + other.grade) % 2, out)

    # ------------------------------------------------------------ membership

    def in_osp(self) -> bool:
        """Exact test of the defining block constraints of osp(1|2n)."""
        n = self.n
        if not self.entry(0, 0).is_zero():
            return False
        for i in range(1, n + 1):
            # first column mirrors first row:  M[i,0] = y_i,  M[n+i,0] = -x_i
            if self.entry(i, 0) != self.entry(0, n + i):
                return False
            if self.entry(n + i, 0) != -self.entry(0, i):
                return False
            for j in range(1, n + 1):
                # lower-right block is minus the transpose of the upper-left
                if self.entry(n + i, n + j) != -self.entry(j, i):
                    return False
                # e and f blocks are symmetric
                if self.entry(i, n + j) != self.entry(j, n + i):
                    return False
                if self.entry(n + i, j) != self.entry(n + j, i):
                    return False
        return True


def supercommutator(a: GradedMatrix, b: GradedMatrix) -> GradedMatrix:
    """[[a, b]] = ab - (-1)^{grade(a) grade(b)} ba for homogeneous a, b."""
    if a.n != b.n:
        raise ValueError(
            f"dimension mismatch: {a.dim}x{a.dim} vs {b.dim}x{b.dim}"
        )
    ab = a @ b
    ba = b @ a
    if a.grade == 1 and b.grade == 1:
        return ab + ba
    return ab - ba


def anticommutator(a: GradedMatrix, b: GradedMatrix) -> GradedMatrix:
    return a @ b + b @ a


def commutator(a: GradedMatrix, b: GradedMatrix) -> GradedMatrix:
    return a @ b - b @ a


# --------------------------------------------------------------------------
# generators
# --------------------------------------------------------------------------


def classical_parabose(n: int, i: int, sign: int) -> GradedMatrix:
    """The odd generator A_i^sign of osp(1|2n), sign in {+1, -1}."""
    if not 1 <= i <= n:
        raise ValueError(f"mode index {i} out of range 1..{n}")
    if sign == -1:
        return GradedMatrix(
            n, 1, {(0, i): SQRT2, (n + i, 0): -SQRT2}
        )
    if sign == +1:
        return GradedMatrix(
            n, 1, {(0, n + i): SQRT2, (i, 0): SQRT2}
        )
    raise ValueError(f"sign must be +1 or -1, got {sign!r}")


def parabose_set(n: int) -> dict[tuple[int, int], GradedMatrix]:
    """All 2n odd generators, keyed by (mode, sign)."""
    return {
        (i, s): classical_parabose(n, i, s)
        for i in range(1, n + 1)
        for s in (+1, -1)
    }


def cartan_h_upper(n: int, i: int) -> GradedMatrix:
    """H_i = -E_{ii} + E_{n+i,n+i}; satisfies {A_i^-, A_i^+} = -2 H_i."""
    if not 1 <= i <= n:
        raise ValueError(f"mode index {i} out of range 1..{n}")
    return GradedMatrix(n, 0, {(i, i): Q2(-1), (n + i, n + i): Q2(1)})


def cartan_matrix(n: int) -> list[list[int]]:
    """Symmetrizable Cartan matrix with short last root: alpha_nn = 1."""
    alpha = [[0] * n for _ in range(n)]
    for i in range(n):
        alpha[i][i] = 2
        if i + 1 < n:
            alpha[i][i + 1] = -1
            alpha[i + 1][i] = -1
    alpha[n - 1][n - 1] = 1
    return alpha


def chevalley_generators(
    A: dict[tuple[int, int], GradedMatrix] | None = None, n: int | None = None
) -> tuple[dict[int, GradedMatrix], dict[int, GradedMatrix], dict[int, GradedMatrix]]:
    """Chevalley triples (e, f, h) built from the odd generators.

    For i < n:
        e_i = (1/2) {A_i^-, A_{i+1}^+}
        f_i = (1/2) {A_i^+, A_{i+1}^-}
        h_i = (1/2) ({A_{i+1}^-, A_{i+1}^+} - {A_i^-, A_i^+})
    and for the short simple root:
        e_n = -A_n^- / sqrt(2)
        f_n =  A_n^+ / sqrt(2)
        h_n = -(1/2) {A_n^-, A_n^+}

    Returns 1-indexed dicts.  If A is supplied it is used as the source of
    odd generators (so deliberately corrupted inputs propagate); otherwise
    the standard matrices are built for the given n.
    """
    if A is None:
        if n is None:
            raise ValueError("either a generator set or n must be given")
        A = parabose_set(n)
    else:
        n = max(i for i, _ in A)
    half = Fraction(1, 2)
    inv_sqrt2 = SQRT2.inverse()
    e: dict[int, GradedMatrix] = {}
    f: dict[int, GradedMatrix] = {}
    h: dict[int, GradedMatrix] = {}
    for i in range(1, n):
        e[i] = anticommutator(A[(i, -1)], A[(i + 1, +1)]).scale(half)
        f[i] = anticommutator(A[(i, +1)], A[(i + 1, -1)]).scale(half)
        h[i] = (
            anticommutator(A[(i + 1, -1)], A[(i + 1, +1)])
            - anticommutator(A[(i, -1)], A[(i, +1)])
        ).scale(half)
    e[n] = A[(n, -1)].scale(-inv_sqrt2)
    f[n] = A[(n, +1)].scale(inv_sqrt2)
    h[n] = anticommutator(A[(n, -1)], A[(n, +1)]).scale(-half)
    return e, f, h


def parabose_from_chevalley(
    e: dict[int, GradedMatrix], f: dict[int, GradedMatrix], i: int, sign: int
) -> GradedMatrix:
    """Rebuild A_i^sign from nested commutators of simple generators.

        A_i^- = (-1)^(n-1-i) sqrt(2) [e_i, [e_{i+1}, ... [e_{n-1}, e_n] ... ]]
        A_i^+ = (-1)^(n-i)   sqrt(2) [[ ... [f_n, f_{n-1}], ... ], f_i]

    and A_n^- = -sqrt(2) e_n, A_n^+ = sqrt(2) f_n.  The alternating signs
    are forced by [e_i, A_{i+1}^-] = -A_i^- and [A_{i+1}^+, f_i] = -A_i^+,
    which follow from the conventions used for e_i, f_i here; they make the
    round trip through chevalley_generators exact.
    """
    n = max(e)
    if not 1 <= i <= n:
        raise ValueError(f"mode index {i} out of range 1..{n}")
    if sign == -1:
        if i == n:
            return e[n].scale(-SQRT2)
        acc = e[n]
        for j in range(n - 1, i - 1, -1):
            acc = commutator(e[j], acc)
        return acc.scale(SQRT2 if (n - 1 - i) % 2 == 0 else -SQRT2)
    if sign == +1:
        if i == n:
            return f[n].scale(SQRT2)
        acc = f[n]
        for j in range(n - 1, i - 1, -1):
            acc = commutator(acc, f[j])
        return acc.scale(SQRT2 if (n - i) % 2 == 0 else -SQRT2)
    raise ValueError(f"sign must be +1 or -1, got {sign!r}")


# --------------------------------------------------------------------------
# rank over Q(sqrt(2))
# --------------------------------------------------------------------------


def q2_rank(vectors: Iterable[dict]) -> int:
    """Rank of a family of sparse vectors with Q2 coefficients.

    Incremental Gaussian elimination: stored rows are normalized so the
    minimal key of each row is a pivot with value 1, and rows are processed
    in ascending pivot order, which keeps elimination sound because a row
    never contains keys below its own pivot.
    """
    basis: list[tuple[object, dict]] = []  # (pivot key, normalized row)
    for vec in vectors:
        row = {k: v for k, v in vec.items() if not v.is_zero()}
        for piv, prow in basis:
            coeff = row.get(piv)
            if coeff is None or coeff.is_zero():
                continue
            for k, v in prow.items():
                cur = row.get(k)
                t = -coeff * v if cur is None else cur - coeff * v
                if t.is_zero():
                    row.pop(k, None)
                else:
                    row[k] = t
        if not row:
            continue
        piv = min(row)
        inv = row[piv].inverse()
        basis.append((piv, {k: v * inv for k, v in row.items()}))
        basis.sort(key=lambda t: t[0])
    return len(basis)


# --------------------------------------------------------------------------
# relation catalogs
# --------------------------------------------------------------------------


def pbose_residual(
    A: dict[tuple[int, int], GradedMatrix],
    i: int,
    xi: int,
    j: int,
    eta: int,
    k: int,
    eps: int,
) -> GradedMatrix:
    """Residual of the trilinear paraboson relation

        [{A_i^xi, A_j^eta}, A_k^eps]
            = (eps - eta) delta_{jk} A_i^xi + (eps - xi) delta_{ik} A_j^eta.
    """
    lhs = supercommutator(anticommutator(A[(i, xi)], A[(j, eta)]), A[(k, eps)])
    rhs = A[(i, xi)].scale((eps - eta) if j == k else 0)
    rhs = rhs + A[(j, eta)].scale((eps - xi) if i == k else 0)
    return lhs - rhs


def pbose_relation_checks(
    A: dict[tuple[int, int], GradedMatrix], n: int
) -> list[CheckResult]:
    """All instances of the trilinear paraboson relation (id prefix C21)."""
    out: list[CheckResult] = []
    signs = (+1, -1)
    for i in range(1, n + 1):
        for xi in signs:
            for j in range(1, n + 1):
                for eta in signs:
                    for k in range(1, n + 1):
                        for eps in signs:
                            res = pbose_residual(A, i, xi, j, eta, k, eps)
                            ident = (
                                f"C21[n={n},i={i},j={j},k={k},"
                                f"xi={_SIGN_STR[xi]},eta={_SIGN_STR[eta]},"
                                f"eps={_SIGN_STR[eps]}]"
                            )
                            out.append(
                                CheckResult(
                                    ident,
                                    res.is_zero(),
                                    "exact-zero" if res.is_zero() else "nonzero",
                                    "" if res.is_zero() else f"{len(res.entries)} nonzero entries",
                                )
                            )
    return out


def sp2n_residual(
    A: dict[tuple[int, int], GradedMatrix],
    i: int,
    xi: int,
    j: int,
    eta: int,
    k: int,
    eps: int,
    l: int,
    phi: int,
) -> GradedMatrix:
    """Residual of the quadrilinear relation among anticommutators,

        [{A_i^xi, A_j^eta}, {A_k^eps, A_l^phi}]
            = (eps - eta) delta_{jk} {A_i^xi, A_l^phi}
            + (eps - xi)  delta_{ik} {A_j^eta, A_l^phi}
            + (phi - eta) delta_{jl} {A_i^xi, A_k^eps}
            + (phi - xi)  delta_{il} {A_j^eta, A_k^eps},

    i.e. the sp(2n) structure of the even part.
    """
    lhs = commutator(
        anticommutator(A[(i, xi)], A[(j, eta)]),
        anticommutator(A[(k, eps)], A[(l, phi)]),
    )
    rhs = GradedMatrix.zero(lhs.n, 0)
    if j == k and eps != eta:
        rhs = rhs + anticommutator(A[(i, xi)], A[(l, phi)]).scale(eps - eta)
    if i == k and eps != xi:
        rhs = rhs + anticommutator(A[(j, eta)], A[(l, phi)]).scale(eps - xi)
    if j == l and phi != eta:
        rhs = rhs + anticommutator(A[(i, xi)], A[(k, eps)]).scale(phi - eta)
    if i == l and phi != xi:
        rhs = rhs + anticommutator(A[(j, eta)], A[(k, eps)]).scale(phi - xi)
    return lhs - rhs


def sp2n_relation_checks(
    A: dict[tuple[int, int], GradedMatrix], n: int
) -> list[CheckResult]:
    """All instances of the quadrilinear relation (id prefix C28)."""
    out: list[CheckResult] = []
    signs = (+1, -1)
    modes = range(1, n + 1)
    for i in modes:
        for xi in signs:
            for j in modes:
                for eta in signs:
                    for k in modes:
                        for eps in signs:
                            for l in modes:
                                for phi in signs:
                                    res = sp2n_residual(A, i, xi, j, eta, k, eps, l, phi)
                                    ident = (
                                        f"C28[n={n},i={i},j={j},k={k},l={l},"
                                        f"xi={_SIGN_STR[xi]},eta={_SIGN_STR[eta]},"
                                        f"eps={_SIGN_STR[eps]},phi={_SIGN_STR[phi]}]"
                                    )
                                    out.append(
                                        CheckResult(
                                            ident,
                                            res.is_zero(),
                                            "exact-zero" if res.is_zero() else "nonzero",
                                            ""
                                            if res.is_zero()
                                            else f"{len(res.entries)} nonzero entries",
                                        )
                                    )
    return out


def _result(ident: str, residual: GradedMatrix) -> CheckResult:
    ok = residual.is_zero()
    return CheckResult(
        ident,
        ok,
        "exact-zero" if ok else "nonzero",
        "" if ok else f"{len(residual.entries)} nonzero entries",
    )


def cartan_kac_checks(
    e: dict[int, GradedMatrix],
    f: dict[int, GradedMatrix],
    h: dict[int, GradedMatrix],
    n: int,
    tag: str = "C",
) -> list[CheckResult]:
    """Cartan-Kac relations for the Chevalley generators.

    [h_i, h_j] = 0,  [h_i, e_j] = alpha_ij e_j,  [h_i, f_j] = -alpha_ij f_j,
    [[e_i, f_j]] = delta_ij h_i  (anticommutator when i = j = n).
    """
    alpha = cartan_matrix(n)
    out: list[CheckResult] = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            out.append(
                _result(
                    f"{tag}CK.hh[n={n},i={i},j={j}]",
                    commutator(h[i], h[j]),
                )
            )
            out.append(
                _result(
                    f"{tag}CK.he[n={n},i={i},j={j}]",
                    supercommutator(h[i], e[j]) - e[j].scale(alpha[i - 1][j - 1]),
                )
            )
            out.append(
                _result(
                    f"{tag}CK.hf[n={n},i={i},j={j}]",
                    supercommutator(h[i], f[j]) + f[j].scale(alpha[i - 1][j - 1]),
                )
            )
            res = supercommutator(e[i], f[j])
            if i == j:
                res = res - h[i]
            out.append(_result(f"{tag}CK.ef[n={n},i={i},j={j}]", res))
    return out


def serre_checks(
    gens: dict[int, GradedMatrix], n: int, family: str, tag: str = "C"
) -> list[CheckResult]:
    """Serre relations for one family ('e' or 'f') of simple generators.

    Distant generators commute; adjacent long-root generators obey the
    quadratic relation with coefficient 2; the short-root generator obeys
    the quartic relation

        x_n^3 x_{n-1} - (x_n^2 x_{n-1} x_n + x_n x_{n-1} x_n^2)
                      + x_{n-1} x_n^3 = 0.
    """
    out: list[CheckResult] = []
    g = gens
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            out.append(
                _result(
                    f"{tag}S.{family}.far[n={n},i={i},j={j}]",
                    supercommutator(g[i], g[j]),
                )
            )
    for i in range(1, n):
        res = g[i] @ g[i] @ g[i + 1] - (2 * (g[i] @ g[i + 1] @ g[i])) + g[i + 1] @ g[i] @ g[i]
        out.append(_result(f"{tag}S.{family}.quad[n={n},i={i},j={i + 1}]", res))
    for i in range(2, n):
        res = g[i] @ g[i] @ g[i - 1] - (2 * (g[i] @ g[i - 1] @ g[i])) + g[i - 1] @ g[i] @ g[i]
        out.append(_result(f"{tag}S.{family}.quad[n={n},i={i},j={i - 1}]", res))
    if n >= 2:
        gn, gm = g[n], g[n - 1]
        res = (
            gn @ gn @ gn @ gm
            - (gn @ gn @ gm @ gn)
            - (gn @ gm @ gn @ gn)
            + gm @ gn @ gn @ gn
        )
        out.append(_result(f"{tag}S.{family}.quartic[n={n}]", res))
    return out


def membership_checks(
    A: dict[tuple[int, int], GradedMatrix], n: int
) -> list[CheckResult]:
    """Block-structure membership for generators and their anticommutators."""
    out: list[CheckResult] = []
    for (i, s), mat in sorted(A.items(), key=lambda kv: (kv[0][0], -kv[0][1])):
        ok = mat.in_osp() and mat.grade == 1
        out.append(
            CheckResult(
                f"MEM.gen[n={n},i={i},sign={_SIGN_STR[s]}]",
                ok,
                None,
                "" if ok else "block constraints violated",
            )
        )
    signs = (+1, -1)
    for i in range(1, n + 1):
        for xi in signs:
            for j in range(1, n + 1):
                for eta in signs:
                    mat = anticommutator(A[(i, xi)], A[(j, eta)])
                    ok = mat.in_osp()
                    out.append(
                        CheckResult(
                            f"MEM.pair[n={n},i={i},j={j},"
                            f"xi={_SIGN_STR[xi]},eta={_SIGN_STR[eta]}]",
                            ok,
                            None,
                            "" if ok else "block constraints violated",
                        )
                    )
    return out


def span_checks(A: dict[tuple[int, int], GradedMatrix], n: int) -> list[CheckResult]:
    """Span dimensions: odd generators plus anticommutators give 2n^2 + 3n;
    the mixed anticommutators {A_i^-, A_j^+} alone give an n^2-dimensional
    gl(n)."""
    signs = (+1, -1)
    vectors = [A[(i, s)].entries for i in range(1, n + 1) for s in signs]
    vectors += [
        anticommutator(A[(i, xi)], A[(j, eta)]).entries
        for i in range(1, n + 1)
        for xi in signs
        for j in range(1, n + 1)
        for eta in signs
    ]
    rank = q2_rank(vectors)
    expected = 2 * n * n + 3 * n
    out = [
        CheckResult(
            f"SPAN.osp[n={n}]",
            rank == expected,
            None,
            f"rank {rank}, expected {expected}",
        )
    ]
    gl_vectors = [
        anticommutator(A[(i, -1)], A[(j, +1)]).entries
        for i in range(1, n + 1)
        for j in range(1, n + 1)
    ]
    gl_rank = q2_rank(gl_vectors)
    out.append(
        CheckResult(
            f"SPAN.gl[n={n}]",
            gl_rank == n * n,
            None,
            f"rank {gl_rank}, expected {n * n}",
        )
    )
    return out


def chain_checks(
    A: dict[tuple[int, int], GradedMatrix],
    e: dict[int, GradedMatrix],
    f: dict[int, GradedMatrix],
    n: int,
) -> list[CheckResult]:
    """Round trip: rebuild each A_i^+- from Chevalley commutator chains."""
    out: list[CheckResult] = []
    for i in range(1, n + 1):
        for s in (-1, +1):
            rebuilt = parabose_from_chevalley(e, f, i, s)
            out.append(
                _result(
                    f"CHAIN[n={n},i={i},sign={_SIGN_STR[s]}]",
                    rebuilt - A[(i, s)],
                )
            )
    return out


def verify_classical(
    n: int, parabose: dict[tuple[int, int], GradedMatrix] | None = None
) -> list[CheckResult]:
    """Run the full battery of exact classical checks for osp(1|2n).

    Covers block membership, the trilinear and quadrilinear generator
    relations, Cartan-Kac and Serre relations for the induced Chevalley
    generators, the commutator-chain reconstruction of the odd generators,
    and the span dimensions.  A custom (possibly corrupted) generator set
    may be supplied; it propagates into every derived object.
    """
    if not 1 <= n <= 4:
        raise ValueError(f"mode count n={n} out of supported range 1..4")
    A = parabose if parabose is not None else parabose_set(n)
    expected = {(i, s) for i in range(1, n + 1) for s in (+1, -1)}
    if set(A) != expected:
        raise ValueError("generator set must contain exactly (i, sign) for i=1..n")
    e, f, h = chevalley_generators(A)
    results: list[CheckResult] = []
    results += membership_checks(A, n)
    results += pbose_relation_checks(A, n)
    results += sp2n_relation_checks(A, n)
    results += cartan_kac_checks(e, f, h, n)
    results += serre_checks(e, n, "e")
    results += serre_checks(f, n, "f")
    results += chain_checks(A, e, f, n)
    results += span_checks(A, n)
    return results
