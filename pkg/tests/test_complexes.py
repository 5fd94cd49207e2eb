import random
from fractions import Fraction

import pytest

from hopfcheck.errors import ExceedsCertifiedDegree
from hopfcheck.foundation import Mat, NCPoly
from hopfcheck.complexes import (
    ChainMap,
    Complex,
    FreeModuleMap,
    build_glq_complexes,
    build_left_resolution,
    build_slq_resolution,
    build_twist_chainmap,
    build_yd_resolution,
    dualize_resolution,
    gamma_identity_suite,
    gamma_maps,
    laurent_cone,
    mapping_cone,
    probe_exactness,
)

Q = Fraction(2)


def test_yd_resolution_ranks_and_entries(glq8):
    C = build_yd_resolution(glq8)
    assert C.ranks == [1, 5, 8, 5, 1]
    psi1 = C.maps[3]
    # psi''_1 entry (delta_ij - u_ij), psi'_1 entry (D - 1)
    for i in range(2):
        for j in range(2):
            want = glq8.elt(
                (NCPoly.one() if i == j else NCPoly.zero()) - NCPoly.gen(glq8.u_idx(i, j)))
            assert psi1.entries[i * 2 + j][0] == want
    assert psi1.entries[4][0] == glq8.elt(NCPoly.gen(glq8.loc) - NCPoly.one())


def test_gamma7_block_entry(n3):
    A, B = n3.mats["A"], n3.mats["B"]
    lam = (B.transpose() * A.transpose() * B * A)[0, 0]
    BtAt = B.transpose() * A.transpose()
    BA = B * A
    g7 = gamma_maps(n3)["g7"]
    n = 3
    for (i, j, k, l) in [(0, 1, 2, 0), (1, 1, 1, 1), (2, 0, 0, 2)]:
        want = NCPoly.term((n3.loc,), BtAt[i, k] * BA[l, j] / lam)
        if (i, j) == (k, l):
            want = want - NCPoly.one()
        assert g7.entries[i * n + j][k * n + l] == n3.elt(want)


def test_yd_is_complex(glq8, n3):
    for alg in (glq8, n3):
        rep = build_yd_resolution(alg).is_complex()
        assert rep["ok"], rep["failures"][:2]


def test_yd_resolution_needs_degree_six(glq8):
    from hopfcheck.hopf import build_glq
    small = build_glq(2, 4)
    with pytest.raises(ExceedsCertifiedDegree):
        build_yd_resolution(small)


def test_sign_flip_breaks_complex(glq8):
    C = build_yd_resolution(glq8)
    psi3 = C.maps[1]
    flipped = [[psi3.entries[s][t] * (-1 if t >= 4 else 1)
                for t in range(psi3.tgt_rank)] for s in range(psi3.src_rank)]
    bad = FreeModuleMap(glq8, "right", flipped)
    rep = Complex(glq8, "right", [C.maps[0], bad, C.maps[2], C.maps[3]]).is_complex()
    assert not rep["ok"]
    assert rep["failures"]


def test_gamma_identity_suite(glq8, n3):
    for alg in (glq8, n3):
        rep = gamma_identity_suite(alg)
        assert rep["ok"], rep["failures"]
        assert rep["identities"] == 15


def test_gamma13_composite_value(glq8):
    # gamma1 after gamma3 collapses to gamma2: (u B^t (B^t)^-1)_{ij} = u_{ij}
    g = gamma_maps(glq8)
    comp = g["g3"].compose(g["g1"])
    for i in range(2):
        for j in range(2):
            assert comp.entries[i * 2 + j][0] == glq8.u_elt(i, j)


def test_left_resolution(glq8, n3):
    for alg in (glq8, n3):
        L = build_left_resolution(alg)
        rep = L.is_complex()
        assert rep["ok"], rep["failures"][:2]
    L = build_left_resolution(glq8)
    # phi_1 on the vv block sends x (x) v_i* v_j to x(delta_ji - u_ji)
    for i in range(2):
        for j in range(2):
            want = glq8.elt((NCPoly.one() if i == j else NCPoly.zero()) -
                            NCPoly.gen(glq8.u_idx(j, i)))
            assert L.maps[3].entries[1 + i * 2 + j][0] == want
    # phi_4 scalar part (A B^t)_ji - (A^t u B)_ji
    A, B = glq8.mats["A"], glq8.mats["B"]
    from hopfcheck.hopf import sandwich
    ABt = A * B.transpose()
    for i in range(2):
        for j in range(2):
            want = glq8.elt(NCPoly.term((), ABt[j, i]) -
                            sandwich(glq8, A.transpose(), B, j, i))
            assert L.maps[0].entries[0][i * 2 + j] == want


def test_dual_complex_entries_and_property(glq8, n3):
    for alg in (glq8, n3):
        D = dualize_resolution(alg)
        rep = D.is_complex()
        assert rep["ok"], rep["failures"][:2]
    D = dualize_resolution(glq8)
    # psi^t_1: x -> sum x(delta_ji - u_ji) (x) w_i* w_j + x(D-1)
    for i in range(2):
        for j in range(2):
            want = glq8.elt((NCPoly.one() if i == j else NCPoly.zero()) -
                            NCPoly.gen(glq8.u_idx(j, i)))
            assert D.maps[0].entries[0][i * 2 + j] == want
    assert D.maps[0].entries[0][4] == glq8.elt(NCPoly.gen(glq8.loc) - NCPoly.one())
    # psi^t_4 on the G summand: x -> x(D-1)
    assert D.maps[3].entries[0][0] == glq8.elt(NCPoly.gen(glq8.loc) - NCPoly.one())


def test_duality_transpose_consistency(n3):
    """The printed dual entries are the transposes of the psi entries.

    Block dictionary: level P1=[ww,k] pairs with Q3=[ww,k], P2=[vv,ww] with
    Q2=[ww,vv], P3=[vv,k] with Q1=[k,vv], P0/P4 with Q4/Q0; inside every
    vv/ww block the pair (i,j) pairs with (j,i).
    """
    n = n3.n
    nn = n * n
    C = build_yd_resolution(n3)
    D = dualize_resolution(n3)
    T = lambda s: (s % n) * n + s // n  # (i,j) -> (j,i) inside a block

    psi1, psit1 = C.maps[3], D.maps[0]
    for s in range(nn):
        assert psit1.entries[0][T(s)] == psi1.entries[s][0]
    assert psit1.entries[0][nn] == psi1.entries[nn][0]

    psi4, psit4 = C.maps[0], D.maps[3]
    for t in range(nn):
        assert psit4.entries[1 + T(t)][0] == psi4.entries[0][t]
    assert psit4.entries[0][0] == psi4.entries[0][nn]

    psi2, psit2 = C.maps[2], D.maps[1]
    for s in range(nn):       # Q3 ww block
        for t in range(nn):   # Q2 ww block
            assert psit2.entries[s][t] == psi2.entries[nn + T(t)][T(s)]
        for t in range(nn):   # Q2 vv block
            assert psit2.entries[s][nn + t] == psi2.entries[T(t)][T(s)]
    for t in range(nn):
        assert psit2.entries[nn][t] == psi2.entries[nn + T(t)][nn]
        assert psit2.entries[nn][nn + t] == psi2.entries[T(t)][nn]

    psi3, psit3 = C.maps[1], D.maps[2]
    for s in range(nn):       # Q2 ww block source
        assert psit3.entries[s][0] == psi3.entries[nn][nn + T(s)]
        for t in range(nn):
            assert psit3.entries[s][1 + t] == psi3.entries[T(t)][nn + T(s)]
    for s in range(nn):       # Q2 vv block source
        assert psit3.entries[nn + s][0] == psi3.entries[nn][T(s)]
        for t in range(nn):
            assert psit3.entries[nn + s][1 + t] == psi3.entries[T(t)][T(s)]


def test_twist_chainmap(glq8, n3):
    for alg in (glq8, n3):
        tw = build_twist_chainmap(alg)
        assert tw["report"]["ok"], tw["report"]["failures"][:3]
    tw = build_twist_chainmap(glq8)
    # f2 block on the W part: x (x) w_i*w_j -> sum B_pi A_qj nu(x) (x) w_p*w_q
    A, B = glq8.mats["A"], glq8.mats["B"]
    f2 = tw["chainmap"].verticals[2]
    for i in range(2):
        for j in range(2):
            for p in range(2):
                for q in range(2):
                    c = B[p, i] * A[q, j]
                    want = glq8.elt(NCPoly.term((), c)) if c else glq8.zero()
                    assert f2.entries[i * 2 + j][p * 2 + q] == want
    # eta = eps∘nu has the printed matrix of values
    H = A.inverse() * A.transpose() * B * B.transpose().inverse()
    assert tw["eta"].values[:4] == [H[0, 0], H[0, 1], H[1, 0], H[1, 1]]


def test_twist_single_square_directly(glq8):
    tw = build_twist_chainmap(glq8)
    cm = tw["chainmap"]
    lhs = cm._twisted_compose(cm.top.maps[3], cm.verticals[4])
    rhs = cm.verticals[3].compose(cm.bottom.maps[3])
    assert lhs.add(rhs.scale(-1)).is_zero()


def test_slq_resolution(slq6):
    S = build_slq_resolution(slq6)
    assert S.ranks == [1, 4, 4, 1]
    rep = S.is_complex()
    assert rep["ok"], rep["failures"]
    # phi_3 first entry and phi_1 on v1* v2
    a, b, c, d = (NCPoly.gen(i) for i in range(4))
    assert S.maps[0].entries[0][0] == slq6.elt(-Q * NCPoly.one() + (1 / Q) * d)
    assert S.maps[2].entries[1][0] == slq6.elt(b)


def test_laurent_cone(slql8):
    lc = laurent_cone(slql8)
    assert lc["report"]["ok"]
    cone = lc["cone"]
    assert cone.ranks == [1, 5, 8, 5, 1]
    rep = cone.is_complex()
    assert rep["ok"], rep["failures"][:2]
    # abar - 1 is hit by the last differential via the phi_1 preimage
    last = cone.maps[-1]
    coords = [slql8.zero()] * 5
    coords[1] = slql8.one()  # v1*v1 slot of the C1 block
    img = last.apply(coords)
    assert img[0] == slql8.elt(NCPoly.gen(0) - NCPoly.one())


def test_cone_of_random_central_chain_map(slql8):
    rng = random.Random(77)
    lc = laurent_cone(slql8)
    C = lc["chainmap"].top
    h = slql8.elt(NCPoly.term((4,), rng.randint(1, 3)) +
                  NCPoly.term((), rng.randint(-2, 2)) +
                  NCPoly.term((4, 4), rng.randint(-2, 2)))
    f = [FreeModuleMap(slql8, "right",
                       [[h if s == t else slql8.zero() for t in range(r)]
                        for s in range(r)]) for r in C.ranks]
    cm = ChainMap(C, C, f)
    assert cm.verify_squares()["ok"]
    cone = mapping_cone(cm)
    assert cone.is_complex()["ok"]


def test_glq_complexes(glq8):
    gc = build_glq_complexes(glq8)
    assert gc["report"]["ok"], gc["report"]["failures"][:4]
    assert gc["c3"].is_complex()["ok"]
    D = glq8.loc_elt()
    g1 = gc["g"].verticals[3]
    # diagonal (D, D, 1, 1, 1) with the corner entry -1 sending w1*w1 to -k
    assert g1.entries[0][0] == D
    assert g1.entries[1][1] == D
    assert g1.entries[2][2] == glq8.one()
    assert g1.entries[3][3] == glq8.one()
    assert g1.entries[4][4] == glq8.one()
    assert g1.entries[0][4] == -1 * glq8.one()
    # P matrix entries (2,6) = D and (6,6) = D^2 in the printed numbering
    P = gc["g"].verticals[2]
    assert P.entries[5][1] == D
    assert P.entries[5][5] == D * D
    # inverses are genuine two-sided inverses
    from hopfcheck.complexes import identity_map
    for gmap, inv in zip(gc["g"].verticals, gc["inverses"]):
        ident = identity_map(glq8, "right", gmap.src_rank)
        assert gmap.compose(inv).eq(ident)
        assert inv.compose(gmap).eq(ident)


def test_glq_complexes_single_square(glq8):
    gc = build_glq_complexes(glq8)
    cm = gc["g"]
    lhs = cm.top.maps[3].compose(cm.verticals[4])
    rhs = cm.verticals[3].compose(cm.bottom.maps[3])
    assert lhs.add(rhs.scale(-1)).is_zero()


def test_probe_trivial_witnesses(glq9):
    C = build_yd_resolution(glq9)
    psi1 = C.maps[3]
    # a - 1 lifts via w1*w1 (x) (-1)
    coords = [glq9.zero()] * 5
    coords[0] = -1 * glq9.one()
    img = psi1.apply(coords)
    assert img[0] == glq9.elt(NCPoly.gen(0) - NCPoly.one())
    # D - 1 lifts via the k-summand generator
    coords = [glq9.zero()] * 5
    coords[4] = glq9.one()
    img = psi1.apply(coords)
    assert img[0] == glq9.elt(NCPoly.gen(glq9.loc) - NCPoly.one())


def test_probe_small(glq9):
    C = build_yd_resolution(glq9)
    rep = probe_exactness(C, N=4, slack=2, window=1)
    assert rep["ok"], rep["positions"]
    assert all(p["cycles_found"] == p["cycles_lifted"] for p in rep["positions"][:-1])


def test_probe_rejects_uncertified(glq8):
    C = build_yd_resolution(glq8)
    with pytest.raises(ExceedsCertifiedDegree):
        probe_exactness(C, N=20, slack=2)


def test_complex_manifest(glq8):
    import json
    from hopfcheck.complexes import complex_manifest
    C = build_yd_resolution(glq8)
    m = complex_manifest(C)
    assert m["ranks"] == [1, 5, 8, 5, 1] and m["side"] == "right"
    blob = json.dumps(m, sort_keys=True)
    assert json.dumps(complex_manifest(build_yd_resolution(glq8)),
                      sort_keys=True) == blob
