"""Tests for the exact matrix realization of osp(1|2n)."""

from __future__ import annotations

import random

import pytest

from ospq.ospclassic import (
    GradedMatrix,
    anticommutator,
    cartan_h_upper,
    cartan_matrix,
    chevalley_generators,
    classical_parabose,
    commutator,
    parabose_from_chevalley,
    parabose_set,
    pbose_relation_checks,
    q2_rank,
    sp2n_relation_checks,
    supercommutator,
    verify_classical,
)
from ospq.scalars import ONE, SQRT2, Q2


def _corrupt_plus2(n: int = 2) -> dict:
    """Generator set with the sign of one entry of A_2^+ flipped."""
    A = parabose_set(n)
    m = A[(2, +1)]
    ent = dict(m.entries)
    ent[(2, 0)] = -ent[(2, 0)]
    A[(2, +1)] = GradedMatrix(n, 1, ent)
    return A


# ---------------------------------------------------------------------------
# generator matrices
# ---------------------------------------------------------------------------


def test_parabose_matrix_entries():
    n = 2
    am = classical_parabose(n, 1, -1)
    ap = classical_parabose(n, 1, +1)
    assert am.entries == {(0, 1): SQRT2, (3, 0): -SQRT2}
    assert ap.entries == {(0, 3): SQRT2, (1, 0): SQRT2}
    assert am.grade == 1 and ap.grade == 1
    assert am.dim == 5


def test_parabose_index_errors():
    with pytest.raises(ValueError):
        classical_parabose(2, 0, +1)
    with pytest.raises(ValueError):
        classical_parabose(2, 3, -1)
    with pytest.raises(ValueError):
        classical_parabose(2, 1, 2)


def test_generators_satisfy_block_constraints():
    for n in (1, 2, 3):
        for (i, s), mat in parabose_set(n).items():
            assert mat.in_osp(), (n, i, s)
            assert mat.grade == 1


def test_anticommutator_gives_cartan_element():
    # {A_i^-, A_i^+} = -2 H_i with H_i = -E_{ii} + E_{n+i,n+i}
    n = 3
    A = parabose_set(n)
    for i in range(1, n + 1):
        lhs = anticommutator(A[(i, -1)], A[(i, +1)])
        assert lhs == cartan_h_upper(n, i).scale(-2)


def test_grade_structure_enforced():
    with pytest.raises(ValueError):
        GradedMatrix(2, 0, {(0, 1): ONE})  # odd block in an even matrix
    with pytest.raises(ValueError):
        GradedMatrix(2, 1, {(1, 2): ONE})  # even block in an odd matrix
    with pytest.raises(ValueError):
        GradedMatrix(2, 0, {(5, 0): ONE})  # out of range
    a = GradedMatrix.unit(2, 1, 2)
    b = GradedMatrix.unit(2, 0, 1)
    assert a.grade == 0 and b.grade == 1
    with pytest.raises(ValueError):
        a + b  # nonzero matrices of different grade
    with pytest.raises(ValueError):
        supercommutator(a, GradedMatrix.unit(3, 1, 2))  # dimension mismatch


def test_matrix_arithmetic_basics():
    n = 2
    a = classical_parabose(n, 1, -1)
    z = a - a
    assert z.is_zero()
    assert (a + z) == a
    assert (2 * a).entries[(0, 1)] == Q2(2) * SQRT2
    assert (-a) + a == GradedMatrix.zero(n)
    dense = a.dense()
    assert dense[0][1] == SQRT2 and dense[3][0] == -SQRT2
    assert dense[0][0].is_zero()


# ---------------------------------------------------------------------------
# defining relations
# ---------------------------------------------------------------------------


def test_triple_relation_all_instances():
    for n in (1, 2, 3):
        results = pbose_relation_checks(parabose_set(n), n)
        assert len(results) == 8 * n**3
        assert all(r.ok for r in results)


def test_quadrilinear_relation_all_instances():
    for n in (1, 2):
        results = sp2n_relation_checks(parabose_set(n), n)
        assert len(results) == 16 * n**4
        assert all(r.ok for r in results)


def test_graded_jacobi_identity():
    # [[a,[[b,c]]]] = [[[[a,b]],c]] + (-1)^{|a||b|} [[b,[[a,c]]]]
    n = 2
    A = parabose_set(n)
    odd = list(A.values())
    even = [
        anticommutator(A[(i, s)], A[(j, t)])
        for i in (1, 2)
        for j in (1, 2)
        for s in (+1, -1)
        for t in (+1, -1)
    ]
    rng = random.Random(20313)
    pool = [(m, 1) for m in odd] + [(m, 0) for m in even]
    for _ in range(60):
        (a, ga), (b, gb), (c, _) = (rng.choice(pool) for _ in range(3))
        lhs = supercommutator(a, supercommutator(b, c))
        rhs = supercommutator(supercommutator(a, b), c)
        term = supercommutator(b, supercommutator(a, c))
        rhs = rhs + term.scale(-1 if (ga and gb) else 1) if not term.is_zero() else rhs
        assert (lhs - rhs).is_zero()


# ---------------------------------------------------------------------------
# Chevalley generators
# ---------------------------------------------------------------------------


def test_chevalley_matrices_explicit():
    n = 2
    e, f, h = chevalley_generators(n=n)
    # e_1 = E_{21} - E_{34}, f_1 = E_{12} - E_{43} for n = 2
    assert e[1].entries == {(2, 1): ONE, (3, 4): -ONE}
    assert f[1].entries == {(1, 2): ONE, (4, 3): -ONE}
    # h_i = H_i - H_{i+1}, h_n = H_n
    assert h[1] == cartan_h_upper(n, 1) - cartan_h_upper(n, 2)
    assert h[2] == cartan_h_upper(n, 2)
    # short-root generators are rescaled odd generators
    assert e[2] == classical_parabose(n, 2, -1).scale(-SQRT2.inverse())
    assert f[2] == classical_parabose(n, 2, +1).scale(SQRT2.inverse())


def test_cartan_matrix_shape():
    assert cartan_matrix(1) == [[1]]
    assert cartan_matrix(2) == [[2, -1], [-1, 1]]
    assert cartan_matrix(3) == [[2, -1, 0], [-1, 2, -1], [0, -1, 1]]


def test_cartan_kac_explicit_instances():
    n = 2
    e, f, h = chevalley_generators(n=n)
    assert commutator(h[1], e[1]) == e[1].scale(2)
    assert commutator(h[2], e[1]) == e[1].scale(-1)
    assert commutator(h[1], e[2]) == e[2].scale(-1)
    assert commutator(h[2], e[2]) == e[2]  # alpha_nn = 1
    assert supercommutator(e[1], f[1]) == h[1]
    # both short-root generators are odd, so their pairing anticommutes
    assert (e[2] @ f[2] + f[2] @ e[2]) == h[2]
    assert supercommutator(e[1], f[2]).is_zero()


def test_quartic_serre_holds_degenerately():
    # In the defining representation the short-root relation
    # x^3 y - (x^2 y x + x y x^2) + y x^3 = 0 holds with every monomial
    # separately zero (x^2 kills the words), so no coefficient test is
    # meaningful here; sensitivity is exercised in the symbolic deformed
    # algebra where the monomials survive.
    for n in (2, 3):
        e, _, _ = chevalley_generators(n=n)
        x, y = e[n], e[n - 1]
        assert (x @ x @ x).is_zero()
        for word in (x @ x @ x @ y, x @ x @ y @ x, x @ y @ x @ x, y @ x @ x @ x):
            assert word.is_zero()
        # quadratic relation words collapse the same way: x acts nilpotently
        assert (y @ y).is_zero()
        assert (y @ x @ y).is_zero()


def test_chain_round_trip_all_modes():
    for n in (1, 2, 3, 4):
        A = parabose_set(n)
        e, f, _ = chevalley_generators(A)
        for i in range(1, n + 1):
            for s in (+1, -1):
                assert parabose_from_chevalley(e, f, i, s) == A[(i, s)], (n, i, s)


def test_chain_intermediate_identities():
    # the recursions that force the alternating chain signs
    n = 3
    A = parabose_set(n)
    e, f, _ = chevalley_generators(A)
    for i in (1, 2):
        assert commutator(e[i], A[(i + 1, -1)]) == -A[(i, -1)]
        assert commutator(A[(i + 1, +1)], f[i]) == -A[(i, +1)]


# ---------------------------------------------------------------------------
# spans and rank
# ---------------------------------------------------------------------------


def test_rank_detects_dependencies():
    v1 = {(0, 0): ONE}
    v2 = {(0, 0): SQRT2}  # dependent over Q(sqrt 2)
    v3 = {(0, 0): ONE, (1, 1): Q2(3)}
    assert q2_rank([v1, v2]) == 1
    assert q2_rank([v1, v3]) == 2
    assert q2_rank([v1, v2, v3, {}]) == 2
    w = {(0, 0): Q2(1, 1), (1, 1): Q2(0, 2)}
    combo = {(0, 0): w[(0, 0)] * Q2(0, 1) + ONE, (1, 1): w[(1, 1)] * Q2(0, 1)}
    assert q2_rank([v1, w, combo]) == 2


def test_span_dimensions():
    # generators plus anticommutators span the full superalgebra: 2n^2 + 3n
    for n, expected in ((1, 5), (2, 14), (3, 27)):
        A = parabose_set(n)
        vectors = [m.entries for m in A.values()]
        vectors += [
            anticommutator(A[(i, s)], A[(j, t)]).entries
            for i in range(1, n + 1)
            for j in range(1, n + 1)
            for s in (+1, -1)
            for t in (+1, -1)
        ]
        assert q2_rank(vectors) == expected


def test_gl_subalgebra_dimension():
    # the mixed anticommutators {A_i^-, A_j^+} are n^2 independent elements
    for n in (1, 2, 3):
        A = parabose_set(n)
        vectors = [
            anticommutator(A[(i, -1)], A[(j, +1)]).entries
            for i in range(1, n + 1)
            for j in range(1, n + 1)
        ]
        assert q2_rank(vectors) == n * n


# ---------------------------------------------------------------------------
# full battery
# ---------------------------------------------------------------------------


def test_verify_classical_all_pass():
    expected_counts = {1: 38, 2: 366, 3: 1608}
    for n, count in expected_counts.items():
        results = verify_classical(n)
        assert len(results) == count
        failing = [r.id for r in results if not r.ok]
        assert failing == []


def test_verify_classical_rejects_bad_input():
    with pytest.raises(ValueError):
        verify_classical(0)
    with pytest.raises(ValueError):
        verify_classical(5)
    with pytest.raises(ValueError):
        verify_classical(2, parabose={(1, +1): classical_parabose(2, 1, +1)})


def test_corrupted_generator_is_detected():
    results = verify_classical(2, parabose=_corrupt_plus2())
    failing = {r.id for r in results if not r.ok}
    assert failing, "corruption must be detected"
    # specific triple-relation instances involving the corrupted generator fail
    assert "C21[n=2,i=1,j=2,k=2,xi=+,eta=+,eps=-]" in failing
    assert "C21[n=2,i=2,j=2,k=2,xi=+,eta=-,eps=+]" in failing
    assert "MEM.gen[n=2,i=2,sign=+]" in failing
    # instances on disjoint indices are untouched
    assert "C21[n=2,i=1,j=1,k=1,xi=+,eta=+,eps=-]" not in failing
    assert "C28[n=2,i=1,j=1,k=1,l=1,xi=+,eta=-,eps=+,phi=-]" not in failing
    # deterministic damage profile
    c21 = [x for x in failing if x.startswith("C21")]
    c28 = [x for x in failing if x.startswith("C28")]
    assert len(c21) == 18
    assert len(c28) == 90


def test_check_result_rows_serialize():
    rows = [r.to_row() for r in verify_classical(1)]
    for row in rows:
        assert set(row) == {"id", "status", "residual", "detail"}
        assert row["status"] == "pass"
