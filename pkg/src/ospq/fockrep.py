"""Finite-dimensional unitary Fock representation at q = exp(i pi / k).

The deformed oscillators act on a k^n-dimensional space spanned by vectors
|m_1, ..., m_n> with every m_i in {0, ..., k-1}.  In the orthonormal basis
the explicit matrix elements are

    a_i^+ |m> = exp(-i pi (m_1+...+m_{i-1})/k)
                * sqrt(2 sin(pi (m_i+1)/k) sin(pi/(2k))) / sin(pi/k) |m_i+1>
    a_i^- |m> = exp(+i pi (m_1+...+m_{i-1})/k)
                * sqrt(2 sin(pi  m_i   /k) sin(pi/(2k))) / sin(pi/k) |m_i-1>
    kappa_i |m> = exp(i pi m_i / k) |m>

with the raising amplitude vanishing at m_i = k-1 and the lowering one at
m_i = 0.  The squared amplitudes are exactly the ratios of the symbolic
norm factors evaluated at the root, which ties this module to the exact
coefficient layer; unitarity ((a_i^+)^dagger = a_i^-) holds by construction
up to floating-point rounding, and fails for any |q| != 1, which is why
matrices are only built at roots of unity while other q values get a
positivity diagnostic instead.

The gl(n) root vectors act as

    pi(e_ij) = -cos(pi/(2k)) kappa_j a_j^+ a_i^-          (i < j)
    pi(e_ij) = -cos(pi/(2k)) a_j^+ a_i^- kappa_i^{-1}     (i > j)

and preserve the total number m_1+...+m_n, so the space splits into
n(k-1)+1 blocks; each block carries an irreducible gl(n) action (checked
operationally via strong connectivity of the nonzero-entry graph), with
dimension given both by the coefficient of x^m in ((1-x^k)/(1-x))^n and by
the matching multinomial sum.
"""

from __future__ import annotations

import cmath
import math
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy import sparse
from scipy.sparse.csgraph import connected_components

from .qcoeff import fock_norm_factor
from .report import CheckResult
from .uqosp import (
    AntiComm,
    Gen,
    GenExpr,
    Product,
    QBracket,
    RelationInstance,
    Sum,
    build_chevalley_from_pre,
    build_gl_generator,
    catalog,
    realize,
)
from .walgebra import AM, AP, KA, WeylElement

RESIDUAL_TOL = 1e-9
STRUCTURAL_TOL = 1e-12
BRIDGE_TOL = 1e-10


# ---------------------------------------------------------------------------
# basis indexing
# ---------------------------------------------------------------------------


def basis_index(m: Sequence[int], k: int) -> int:
    """Mixed-radix linear index with m_1 most significant."""
    idx = 0
    for v in m:
        if not 0 <= v < k:
            raise ValueError(f"occupation {v} outside 0..{k - 1}")
        idx = idx * k + v
    return idx


def basis_tuple(idx: int, n: int, k: int) -> tuple[int, ...]:
    if not 0 <= idx < k**n:
        raise ValueError(f"index {idx} outside 0..{k**n - 1}")
    out = [0] * n
    for pos in range(n - 1, -1, -1):
        idx, out[pos] = divmod(idx, k)
    return tuple(out)


def root_s(k: int) -> complex:
    """s = q^{1/2} = exp(i pi / (2k))."""
    return cmath.exp(1j * math.pi / (2 * k))


# ---------------------------------------------------------------------------
# generator matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RepMatrix:
    label: str
    n: int
    k: int
    matrix: sparse.csr_matrix


def _check_shape(n: int, k: int) -> None:
    if n < 1:
        raise ValueError("mode count must be at least 1")
    if k < 2:
        raise ValueError("root order k must be at least 2")


def _amp_plus(m_i: int, k: int) -> float:
    """|amplitude| of a^+ on occupation m_i -> m_i + 1."""
    return math.sqrt(
        2.0 * math.sin(math.pi * (m_i + 1) / k) * math.sin(math.pi / (2 * k))
    ) / math.sin(math.pi / k)


def _ladder_matrix(i: int, sign: int, n: int, k: int) -> sparse.csr_matrix:
    dim = k**n
    rows: list[int] = []
    cols: list[int] = []
    vals: list[complex] = []
    for col in range(dim):
        m = basis_tuple(col, n, k)
        prefix = sum(m[: i - 1])
        if sign == +1:
            if m[i - 1] == k - 1:
                continue
            target = list(m)
            target[i - 1] += 1
            amp = _amp_plus(m[i - 1], k) * cmath.exp(-1j * math.pi * prefix / k)
        else:
            if m[i - 1] == 0:
                continue
            target = list(m)
            target[i - 1] -= 1
            amp = _amp_plus(m[i - 1] - 1, k) * cmath.exp(1j * math.pi * prefix / k)
        rows.append(basis_index(target, k))
        cols.append(col)
        vals.append(amp)
    return sparse.csr_matrix(
        (vals, (rows, cols)), shape=(dim, dim), dtype=np.complex128
    )


def _kappa_matrix(i: int, exp: int, n: int, k: int) -> sparse.csr_matrix:
    dim = k**n
    diag = np.array(
        [
            cmath.exp(1j * math.pi * exp * basis_tuple(idx, n, k)[i - 1] / k)
            for idx in range(dim)
        ],
        dtype=np.complex128,
    )
    return sparse.csr_matrix(sparse.diags(diag))


_MATRIX_CACHE: dict[tuple, sparse.csr_matrix] = {}


def _letter_matrix(kind: int, i: int, exp: int, n: int, k: int) -> sparse.csr_matrix:
    if not 1 <= i <= n:
        raise ValueError(f"mode index {i} outside 1..{n}")
    key = (kind, i, exp, n, k)
    cached = _MATRIX_CACHE.get(key)
    if cached is not None:
        return cached
    if kind == AP:
        mat = _ladder_matrix(i, +1, n, k)
    elif kind == AM:
        mat = _ladder_matrix(i, -1, n, k)
    elif kind == KA:
        mat = _kappa_matrix(i, exp, n, k)
    else:
        raise ValueError(f"unknown letter kind {kind}")
    _MATRIX_CACHE[key] = mat
    return mat


def build_generator_matrix(label: str, n: int, k: int) -> RepMatrix:
    """Matrix of a named operator: a{i}+, a{i}-, k{i}[^e], L{i}[^e], or
    e{i},{j} for the gl root vectors (built from their explicit
    -cos(pi/(2k)) oscillator form, independent of the symbolic engine)."""
    _check_shape(n, k)
    m = re.fullmatch(r"e(\d+),(\d+)", label.strip())
    if m:
        mat = _gl_matrix_direct(int(m.group(1)), int(m.group(2)), n, k)
    else:
        mat = _matrix_of_expr(_parse_label(label, n), n, k)
    return RepMatrix(label, n, k, sparse.csr_matrix(mat))


def _gl_matrix_direct(i: int, j: int, n: int, k: int) -> sparse.csr_matrix:
    """pi(e_ij) = -cos(pi/(2k)) kappa_j a_j^+ a_i^-        (i < j)
       pi(e_ij) = -cos(pi/(2k)) a_j^+ a_i^- kappa_i^{-1}   (i > j)"""
    if i == j or not 1 <= i <= n or not 1 <= j <= n:
        raise ValueError(f"gl root vector needs distinct modes in 1..{n}")
    coeff = -math.cos(math.pi / (2 * k))
    a_up = _letter_matrix(AP, j, 0, n, k)
    a_dn = _letter_matrix(AM, i, 0, n, k)
    if i < j:
        mat = _letter_matrix(KA, j, 1, n, k) @ a_up @ a_dn
    else:
        mat = a_up @ a_dn @ _letter_matrix(KA, i, -1, n, k)
    return sparse.csr_matrix(coeff * mat)


def _parse_label(label: str, n: int) -> GenExpr:
    text = label.strip()
    m = re.fullmatch(r"a(\d+)([+-])", text)
    if m:
        return Gen("a", int(m.group(1)), +1 if m.group(2) == "+" else -1)
    m = re.fullmatch(r"(k|kappa)(\d+)(?:\^(-?\d+))?", text)
    if m:
        return Gen("kappa", int(m.group(2)), int(m.group(3) or 1))
    m = re.fullmatch(r"L(\d+)(?:\^(-?\d+))?", text)
    if m:
        exp = int(m.group(2) or 1)
        if exp not in (-1, 1):
            raise ValueError(f"L exponent must be +-1 in {label!r}")
        return Gen("L", int(m.group(1)), exp)
    raise ValueError(f"unknown operator label {label!r}")


# ---------------------------------------------------------------------------
# matrices of expressions and of normal-ordered elements
# ---------------------------------------------------------------------------


def _identity(n: int, k: int) -> sparse.csr_matrix:
    return sparse.identity(k**n, dtype=np.complex128, format="csr")


def _matrix_of_expr(x: GenExpr, n: int, k: int) -> sparse.csr_matrix:
    """Evaluate an expression tree by sparse matrix products only (no
    symbolic normal ordering): the first of the two verification routes."""
    s = root_s(k)
    if isinstance(x, Gen):
        if x.kind in ("a", "A"):
            return _letter_matrix(AP if x.exp == +1 else AM, x.index, 0, n, k)
        if x.kind == "kappa":
            return _letter_matrix(KA, x.index, x.exp, n, k)
        if x.kind == "L":
            # L_i -> q^{-1/2} kappa_i^{-1}, raised to x.exp
            mat = _letter_matrix(KA, x.index, -x.exp, n, k)
            return sparse.csr_matrix(mat * s ** (-x.exp))
        if x.kind == "k":
            if not 1 <= x.index <= n:
                raise ValueError(f"mode index {x.index} outside 1..{n}")
            if x.index < n:
                return sparse.csr_matrix(
                    _letter_matrix(KA, x.index, -x.exp, n, k)
                    @ _letter_matrix(KA, x.index + 1, x.exp, n, k)
                )
            return sparse.csr_matrix(
                _letter_matrix(KA, n, -x.exp, n, k) * s ** (-x.exp)
            )
        if x.kind == "e":
            return _matrix_of_expr(build_chevalley_from_pre(n, x.index)[0], n, k)
        if x.kind == "f":
            return _matrix_of_expr(build_chevalley_from_pre(n, x.index)[1], n, k)
        raise ValueError(f"unknown generator kind {x.kind!r}")
    if isinstance(x, Product):
        acc = _identity(n, k)
        for fac in x.factors:
            acc = acc @ _matrix_of_expr(fac, n, k)
        return acc
    if isinstance(x, Sum):
        acc = sparse.csr_matrix((k**n, k**n), dtype=np.complex128)
        for coeff, term in x.terms:
            acc = acc + complex(coeff.eval_root(k)) * _matrix_of_expr(term, n, k)
        return acc
    if isinstance(x, QBracket):
        a = _matrix_of_expr(x.left, n, k)
        b = _matrix_of_expr(x.right, n, k)
        return sparse.csr_matrix(a @ b - (s**x.s_exp) * (b @ a))
    if isinstance(x, AntiComm):
        a = _matrix_of_expr(x.left, n, k)
        b = _matrix_of_expr(x.right, n, k)
        return sparse.csr_matrix(a @ b + b @ a)
    raise TypeError(f"not a generator expression: {type(x).__name__}")


def matrix_of_expr(x: GenExpr, n: int, k: int) -> sparse.csr_matrix:
    _check_shape(n, k)
    return sparse.csr_matrix(_matrix_of_expr(x, n, k))


def matrix_of_weyl(x: WeylElement, k: int) -> sparse.csr_matrix:
    """Matrix of a normal-ordered element: root-evaluated coefficients times
    letter-matrix products.  Together with matrix_of_expr this gives two
    independent routes from a relation to a matrix."""
    n = x.n
    _check_shape(n, k)
    acc = sparse.csr_matrix((k**n, k**n), dtype=np.complex128)
    for mono, coeff in x.terms():
        mat = _identity(n, k)
        for kind, mode, exp in mono.word():
            mat = mat @ _letter_matrix(kind, mode + 1, exp, n, k)
        acc = acc + complex(coeff.eval_root(k)) * mat
    return acc


def _fro(m: sparse.spmatrix) -> float:
    data = sparse.csr_matrix(m).data
    if data.size == 0:
        return 0.0
    return float(np.sqrt((np.abs(data) ** 2).sum()))


def _max_entry(m: sparse.spmatrix) -> float:
    data = sparse.csr_matrix(m).data
    if data.size == 0:
        return 0.0
    return float(np.abs(data).max())


# ---------------------------------------------------------------------------
# unitarity and structural checks
# ---------------------------------------------------------------------------


def check_unitarity(n: int, k: int, tol: float = STRUCTURAL_TOL) -> list[CheckResult]:
    """(a_i^+)^dagger = a_i^- entrywise; kappa_i and L_i unitary diagonal."""
    _check_shape(n, k)
    out: list[CheckResult] = []
    for i in range(1, n + 1):
        plus = _letter_matrix(AP, i, 0, n, k)
        minus = _letter_matrix(AM, i, 0, n, k)
        dev = _max_entry(minus - plus.conjugate().transpose())
        out.append(
            CheckResult(
                f"UNI.adjoint[n={n},k={k},i={i}]",
                dev < tol,
                dev,
                "a- vs a+ conjugate transpose",
            )
        )
        for label, mat in (
            (f"kappa{i}", _kappa_matrix(i, 1, n, k)),
            (f"L{i}", _kappa_matrix(i, -1, n, k) * root_s(k) ** (-1)),
        ):
            offdiag = mat - sparse.diags(mat.diagonal())
            dev_off = _max_entry(offdiag)
            dev_mod = float(np.abs(np.abs(mat.diagonal()) - 1.0).max())
            dev = max(dev_off, dev_mod)
            out.append(
                CheckResult(
                    f"UNI.diag[{label},n={n},k={k}]",
                    dev < tol,
                    dev,
                    "unimodular diagonal",
                )
            )
    return out


def check_weights(n: int, k: int) -> list[CheckResult]:
    """kappa_i eigenvalue on |m> is exp(i pi m_i / k) for every basis
    vector, and the raising amplitudes match the symbolic norm ratios."""
    _check_shape(n, k)
    out: list[CheckResult] = []
    dim = k**n
    for i in range(1, n + 1):
        diag = _kappa_matrix(i, 1, n, k).diagonal()
        dev = max(
            abs(diag[idx] - cmath.exp(1j * math.pi * basis_tuple(idx, n, k)[i - 1] / k))
            for idx in range(dim)
        )
        out.append(
            CheckResult(
                f"WGT.kappa[n={n},k={k},i={i}]", dev < STRUCTURAL_TOL, float(dev),
                "diagonal weights",
            )
        )
    # |amp|^2 equals the root-evaluated ratio of norm factors, and the phase
    # of the raising amplitude is exactly the kappa-weight prefix phase
    worst_amp = 0.0
    worst_phase = 0.0
    plus_mats = [_letter_matrix(AP, i, 0, n, k) for i in range(1, n + 1)]
    ratios: list[float | None] = []
    for m in range(k):
        if m < k - 1:
            num = complex(fock_norm_factor(m + 1).eval_root(k))
            den = complex(fock_norm_factor(m).eval_root(k))
            ratios.append((num / den).real)
        else:
            ratios.append(None)
    for col in range(dim):
        m = basis_tuple(col, n, k)
        for i in range(1, n + 1):
            if m[i - 1] >= k - 1:
                continue
            target = list(m)
            target[i - 1] += 1
            amp = plus_mats[i - 1][basis_index(target, k), col]
            expected_sq = ratios[m[i - 1]]
            worst_amp = max(worst_amp, abs(abs(amp) ** 2 - expected_sq))
            prefix = sum(m[: i - 1])
            phase = amp / abs(amp)
            worst_phase = max(
                worst_phase, abs(phase - cmath.exp(-1j * math.pi * prefix / k))
            )
    out.append(
        CheckResult(
            f"WGT.norm_ratio[n={n},k={k}]", worst_amp < BRIDGE_TOL, worst_amp,
            "squared amplitudes vs symbolic norm-factor ratios",
        )
    )
    out.append(
        CheckResult(
            f"WGT.phase[n={n},k={k}]", worst_phase < BRIDGE_TOL, worst_phase,
            "raising phases vs number-operator prefix",
        )
    )
    return out


# ---------------------------------------------------------------------------
# relation checks (two routes)
# ---------------------------------------------------------------------------


def _instance_residual(inst: RelationInstance, n: int, k: int) -> float:
    lhs = _matrix_of_expr(inst.lhs, n, k)
    rhs = _matrix_of_expr(inst.rhs, n, k)
    direct = _fro(lhs - rhs)
    sym_lhs = matrix_of_weyl(realize(inst.lhs, n), k)
    sym_rhs = matrix_of_weyl(realize(inst.rhs, n), k)
    cross = max(_fro(sym_lhs - lhs), _fro(sym_rhs - rhs))
    return max(direct, cross)


def check_matrix_relations(
    n: int,
    k: int,
    families: Sequence[str] | None = None,
    max_workers: int | None = None,
    tol: float = RESIDUAL_TOL,
) -> list[CheckResult]:
    """Every catalog instance as a k^n x k^n matrix identity, with the
    symbolic normal form re-evaluated at the root as a cross-check of the
    same matrices."""
    _check_shape(n, k)
    instances = catalog(n, families=families)

    def run(inst: RelationInstance) -> CheckResult:
        res = _instance_residual(inst, n, k)
        return CheckResult(
            f"MAT.{inst.id}[k={k}]", res < tol, res, "matrix residual"
        )

    if max_workers is not None and max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            return list(pool.map(run, instances))
    return [run(inst) for inst in instances]


# ---------------------------------------------------------------------------
# positivity diagnostic away from roots of unity
# ---------------------------------------------------------------------------


def positivity_diagnostic(q: complex, m_limit: int = 25) -> dict:
    """Why a generic q does not give a unitary Fock space.

    Returns the modulus defect of q and the first occupation number whose
    squared norm fails to be positive (None if all stay positive up to
    m_limit).  At q = exp(i pi / k) the norms are positive up to m = k-1
    and vanish at m = k; for |q| != 1 the representation cannot be unitary
    at all (the kappa weights are not unimodular), even though the norms
    may stay positive.
    """
    q = complex(q)
    if q == 0:
        raise ValueError("q must be nonzero")
    s = cmath.sqrt(q)
    modulus_ok = abs(abs(q) - 1.0) < STRUCTURAL_TOL
    first_non_positive: int | None = None
    values: list[float] = []
    for m in range(1, m_limit + 1):
        val = complex(fock_norm_factor(m).eval_scalar(s))
        values.append(val.real)
        if first_non_positive is None and (
            abs(val.imag) > 1e-6 * max(1.0, abs(val)) or val.real <= 1e-12
        ):
            first_non_positive = m
    return {
        "q": q,
        "modulus_ok": modulus_ok,
        "first_non_positive": first_non_positive,
        "norms": values[: min(m_limit, 8)],
    }


# ---------------------------------------------------------------------------
# gl(n) decomposition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GlBlock:
    m: int
    dim: int
    indices: tuple[int, ...]


@dataclass(frozen=True)
class GlDecomposition:
    n: int
    k: int
    blocks: tuple[GlBlock, ...]


def block_dims_polynomial(n: int, k: int) -> list[int]:
    """Coefficients of ((1-x^k)/(1-x))^n = (1+x+...+x^{k-1})^n."""
    poly = [1]
    base = [1] * k
    for _ in range(n):
        out = [0] * (len(poly) + k - 1)
        for i, a in enumerate(poly):
            for j, b in enumerate(base):
                out[i + j] += a * b
        poly = out
    return poly


def block_dims_multinomial(n: int, k: int) -> list[int]:
    """Same dimensions as sums of multinomial coefficients n!/(j_0!...j_{k-1}!)
    over occupation-value multiplicities with sum j_i = n, sum i*j_i = m."""
    dims = [0] * (n * (k - 1) + 1)

    def rec(value: int, remaining: int, m_acc: int, ways: int) -> None:
        if value == k - 1:
            dims[m_acc + value * remaining] += ways * 1  # all rest at top value
            return
        for j in range(remaining + 1):
            rec(
                value + 1,
                remaining - j,
                m_acc + value * j,
                ways * math.comb(remaining, j),
            )

    rec(0, n, 0, 1)
    return dims


def decompose_gl(n: int, k: int) -> GlDecomposition:
    """Partition of the basis by total occupation number."""
    _check_shape(n, k)
    groups: dict[int, list[int]] = {}
    for idx in range(k**n):
        groups.setdefault(sum(basis_tuple(idx, n, k)), []).append(idx)
    blocks = tuple(
        GlBlock(m, len(groups[m]), tuple(sorted(groups[m])))
        for m in sorted(groups)
    )
    return GlDecomposition(n, k, blocks)


def _strongly_connected(matrices: list[sparse.spmatrix], indices: Sequence[int]) -> bool:
    """One strongly connected component in the digraph whose edges are the
    nonzero matrix entries (source basis vector -> image basis vector)."""
    if len(indices) == 1:
        return True
    pos = {idx: p for p, idx in enumerate(indices)}
    srcs: list[int] = []
    dsts: list[int] = []
    for mat in matrices:
        coo = sparse.coo_matrix(mat)
        for r, c, v in zip(coo.row, coo.col, coo.data):
            if abs(v) > STRUCTURAL_TOL:
                src = pos.get(int(c))
                dst = pos.get(int(r))
                if src is not None and dst is not None:
                    srcs.append(src)
                    dsts.append(dst)
    adj = sparse.coo_matrix(
        (np.ones(len(srcs), dtype=np.int8), (srcs, dsts)),
        shape=(len(indices), len(indices)),
    )
    n_comp, _ = connected_components(
        adj.tocsr(), directed=True, connection="strong"
    )
    return n_comp == 1


def check_decomposition(n: int, k: int) -> list[CheckResult]:
    """Block structure, dimension oracles, invariance, and connectivity."""
    _check_shape(n, k)
    dec = decompose_gl(n, k)
    out: list[CheckResult] = []
    expected_blocks = n * (k - 1) + 1
    out.append(
        CheckResult(
            f"DEC.blocks[n={n},k={k}]",
            len(dec.blocks) == expected_blocks,
            None,
            f"{len(dec.blocks)} blocks, expected {expected_blocks}",
        )
    )
    total = sum(b.dim for b in dec.blocks)
    out.append(
        CheckResult(
            f"DEC.dimsum[n={n},k={k}]", total == k**n, None,
            f"sum {total}, expected {k**n}",
        )
    )
    poly = block_dims_polynomial(n, k)
    multi = block_dims_multinomial(n, k)
    for b in dec.blocks:
        ok = b.dim == poly[b.m] == multi[b.m]
        out.append(
            CheckResult(
                f"DEC.dim[n={n},k={k},m={b.m}]", ok, None,
                f"basis {b.dim}, polynomial {poly[b.m]}, multinomial {multi[b.m]}",
            )
        )
    # invariance: gl generators never connect different blocks
    block_of = {}
    for b in dec.blocks:
        for idx in b.indices:
            block_of[idx] = b.m
    gl_mats = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                mat = build_generator_matrix(f"e{i},{j}", n, k).matrix
                gl_mats.append(((i, j), mat))
    for (i, j), mat in gl_mats:
        coo = sparse.coo_matrix(mat)
        leak = 0.0
        for r, c, v in zip(coo.row, coo.col, coo.data):
            if block_of[r] != block_of[c]:
                leak = max(leak, abs(v))
        out.append(
            CheckResult(
                f"DEC.invariant[n={n},k={k},e={i},{j}]", leak == 0.0, leak,
                "off-block matrix entries",
            )
        )
        # the explicit oscillator form must agree with the image of the
        # symbolic root vector evaluated at the root
        expr_mat = _matrix_of_expr(build_gl_generator(n, i, j), n, k)
        dev = _fro(mat - expr_mat)
        out.append(
            CheckResult(
                f"DEC.root_form[n={n},k={k},e={i},{j}]", dev < RESIDUAL_TOL, dev,
                "explicit form vs realized root vector",
            )
        )
    mats_only = [m for _, m in gl_mats]
    for b in dec.blocks:
        ok = _strongly_connected(mats_only, b.indices)
        out.append(
            CheckResult(
                f"DEC.connected[n={n},k={k},m={b.m}]", ok, None,
                "strong connectivity under gl root vectors",
            )
        )
    ladder = [
        _letter_matrix(kind, i, 0, n, k)
        for i in range(1, n + 1)
        for kind in (AP, AM)
    ]
    out.append(
        CheckResult(
            f"OSP.connected[n={n},k={k}]",
            _strongly_connected(ladder, list(range(k**n))),
            None,
            "strong connectivity of the full space under the oscillators",
        )
    )
    return out


def verify_representation(
    n: int, k: int, max_workers: int | None = None
) -> list[CheckResult]:
    """Unitarity, weights, all catalog relations as matrices, decomposition."""
    out = check_unitarity(n, k)
    out += check_weights(n, k)
    out += check_matrix_relations(n, k, max_workers=max_workers)
    out += check_decomposition(n, k)
    return out


# ---------------------------------------------------------------------------
# exports
# ---------------------------------------------------------------------------


def csv_rows(rep: RepMatrix) -> Iterable[str]:
    """Coordinate-triplet lines ``row,col,re,im`` (0-based, row-major)."""
    yield "row,col,re,im"
    coo = sparse.coo_matrix(rep.matrix)
    order = np.lexsort((coo.col, coo.row))
    for pos in order:
        r, c, v = int(coo.row[pos]), int(coo.col[pos]), complex(coo.data[pos])
        yield f"{r},{c},{v.real!r},{v.imag!r}"


def decomposition_to_json(dec: GlDecomposition) -> dict:
    return {
        "n": dec.n,
        "k": dec.k,
        "blocks": [
            {"m": b.m, "dim": b.dim, "indices": list(b.indices)}
            for b in dec.blocks
        ],
    }
