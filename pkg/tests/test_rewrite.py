import json
import random
from fractions import Fraction

import pytest

from hopfcheck.errors import ExceedsCertifiedDegree, UnitCollapse
from hopfcheck.foundation import MonomialOrder, NCPoly
from hopfcheck.hopf import build_gab, build_gabcd, build_glq, build_slq, a_q_matrix
from hopfcheck.rewrite import RewriteSystem, complete_truncated


def _rule_dict(rs, names):
    out = {}
    for r in rs.rules:
        lead = "".join(names[g] for g in r.lead)
        out[lead] = r.tail
    return out


def test_glq_completion_has_cb_to_bc():
    alg = build_glq(2, 4)
    rules = _rule_dict(alg.rs, alg.names)
    assert rules["cb"] == NCPoly.term((1, 2))  # bc


def test_slq_rule_table_q2():
    alg = build_slq(2, 3)
    rules = _rule_dict(alg.rs, alg.names)
    a, b, c, d = (NCPoly.gen(i) for i in range(4))
    one = NCPoly.one()
    half = Fraction(1, 2)
    assert rules["ba"] == half * (a * b)
    assert rules["ca"] == half * (a * c)
    assert rules["cb"] == b * c
    assert rules["db"] == half * (b * d)
    assert rules["dc"] == half * (c * d)
    assert rules["ad"] == one + 2 * (b * c)
    assert rules["da"] == one + half * (b * c)
    # exactly these seven rules at weight 2
    leads2 = {lead for lead in rules if len(lead) == 2}
    assert leads2 == {"ba", "ca", "cb", "db", "dc", "ad", "da"}


def test_single_generator_unit_rule():
    order = MonomialOrder([1])
    rs = complete_truncated([NCPoly.gen(0) - NCPoly.one()], order, 3)
    assert not rs.collapsed
    assert rs.nonzero_witness()["nonzero_up_to"] == 3
    assert rs.normal_form(NCPoly.gen(0)) == NCPoly.one()


def test_collapse_on_unit_relation():
    order = MonomialOrder([1])
    rs = complete_truncated([NCPoly.one()], order, 3)
    assert rs.collapsed
    with pytest.raises(UnitCollapse):
        rs.nonzero_witness()


def test_normal_forms(glq8, slq6):
    a, b, c, d = (NCPoly.gen(i) for i in range(4))
    assert slq6.rs.normal_form(a * d) == NCPoly.one() + 2 * (b * c)
    assert glq8.rs.normal_form(NCPoly.one()) == NCPoly.one()
    D = NCPoly.gen(glq8.loc)
    assert glq8.rs.normal_form(D * a - a * D).is_zero()


def test_ideal_member(glq8):
    a, b, c, d = (NCPoly.gen(i) for i in range(4))
    D = NCPoly.gen(glq8.loc)
    assert glq8.rs.ideal_member(a * d - 2 * (b * c) - D) == "yes"
    assert glq8.rs.ideal_member(a - NCPoly.one()) == "no"
    heavy = NCPoly.term((0,) * 20)
    assert glq8.rs.ideal_member(heavy) == "uncertified"
    with pytest.raises(ExceedsCertifiedDegree):
        glq8.rs.normal_form(heavy)


def test_enumerate_normal_words(glq8, slq6):
    assert len(slq6.rs.enumerate_normal_words(2)) == 14
    assert slq6.rs.enumerate_normal_words(0) == [()]
    order = glq8.order
    names = glq8.names
    w2 = ["".join(names[g] for g in w)
          for w in glq8.rs.enumerate_normal_words(2) if order.weight(w) == 2]
    assert sorted(w2) == ["D", "aa", "ab", "ac", "bb", "bc", "bd", "cc", "cd", "dd"]


def test_slq_filtration_matches_classical_dimension(slq6):
    # graded quotient k[a..d]/(det) has dim_j = C(j+3,3) - C(j+1,3)
    def choose3(k):
        return k * (k - 1) * (k - 2) // 6 if k >= 3 else 0

    for N in range(6):
        want = sum(choose3(j + 3) - choose3(j + 1) for j in range(N + 1))
        got = len(slq6.rs.enumerate_normal_words(N))
        assert got == want


def test_input_relations_reduce_to_zero(glq8, n3):
    for alg in (glq8, n3):
        for rel in alg.relations:
            assert alg.rs.reduce(rel).is_zero()


def test_normal_form_idempotent_and_multiplicative(glq8):
    rng = random.Random(5)
    rs = glq8.rs
    for _ in range(20):
        p = NCPoly.zero()
        q = NCPoly.zero()
        for _ in range(3):
            w = tuple(rng.randrange(5) for _ in range(rng.randint(0, 3)))
            if rs.order.weight(w) <= 4:
                p = p + NCPoly.term(w, rng.randint(-3, 3))
            w = tuple(rng.randrange(5) for _ in range(rng.randint(0, 3)))
            if rs.order.weight(w) <= 4:
                q = q + NCPoly.term(w, rng.randint(-3, 3))
        nfp = rs.normal_form(p)
        assert rs.normal_form(nfp) == nfp
        assert rs.normal_form(p * q) == rs.normal_form(rs.normal_form(p) * rs.normal_form(q))


def test_confluence_witness(glq8):
    rep = glq8.rs.verify_confluence()
    assert rep["overlaps_checked"] > 0
    assert rep["failures"] == []


def test_nonzero_witness_instances(glq8, galois6):
    assert glq8.rs.nonzero_witness() == {"nonzero_up_to": 8}
    gal, _ = galois6
    assert gal.rs.nonzero_witness() == {"nonzero_up_to": 6}


def test_mismatched_invariants_build_is_syntactic():
    A2 = a_q_matrix(2)
    A3 = a_q_matrix(3)
    g = build_gabcd(A2, A2.inverse(), A3, A3.inverse(), 4)
    assert g.rs.certified_degree == 4
    try:
        g.rs.nonzero_witness()
    except UnitCollapse:
        pass  # a collapse within the bound is a legitimate outcome


def test_serialization_roundtrip_and_determinism(slq6):
    d = slq6.rs.to_dict()
    rs2 = RewriteSystem.from_dict(d)
    a, b, c, dd = (NCPoly.gen(i) for i in range(4))
    probe = a * dd * b - 3 * (c * b)
    assert slq6.rs.normal_form(probe) == rs2.normal_form(probe)
    blob1 = json.dumps(d, sort_keys=True)
    blob2 = json.dumps(build_slq(2, 6).rs.to_dict(), sort_keys=True)
    assert blob1 == blob2
