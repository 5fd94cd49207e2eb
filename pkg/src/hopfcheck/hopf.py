"""Presentations of the GL(2)-type quantum groups and their Hopf machinery.

An algebra is presented on the letters u_11..u_nm plus (usually) a group-like
normal element D of weight 2; the inverse D^-1 never enters the rewrite
alphabet.  Instead every element is carried as p * D^-m with p in the
D-positive subalgebra (LocalizedElement), using the commutation
D*x = sigma(x)*D to move denominators around.
"""

import random
from fractions import Fraction

from .errors import UnitCollapse
from .foundation import Mat, MonomialOrder, NCPoly, TensorPoly, frac
from .rewrite import complete_with_cache

ONE = Fraction(1)


def a_q_matrix(q):
    q = frac(q)
    return Mat([[0, 1], [-q, 0]])


def sandwich(alg, L, R, i, j, transpose=False):
    """(L u R)_ij as a polynomial; with transpose=True, u is replaced by u^t."""
    p = NCPoly.zero()
    for k in range(L.cols):
        for l in range(R.rows):
            c = L[i, k] * R[l, j]
            if c:
                g = alg.u_idx(l, k) if transpose else alg.u_idx(k, l)
                p = p + c * NCPoly.gen(g)
    return p


class PresentedAlgebra:
    """Generators, weights, relations, rewrite system and localization data."""

    def __init__(self, name, kind, names, weights, relations, rs, n, m,
                 loc=None, sigma_images=None, sigma_inv_images=None, mats=None):
        self.name = name
        self.kind = kind
        self.names = list(names)
        self.weights = tuple(weights)
        self.relations = relations
        self.rs = rs
        self.order = rs.order
        self.n = n
        self.m = m
        self.loc = loc
        self.sigma_images = sigma_images
        self.sigma_inv_images = sigma_inv_images
        self.mats = mats or {}
        self.hopf = None
        self._sigma_cache = {}

    # -- generator bookkeeping ------------------------------------------------

    def u_idx(self, i, j):
        return i * self.m + j

    def ngens(self):
        return len(self.names)

    def gen_names(self):
        return self.names

    def nf(self, p):
        return self.rs.normal_form(p)

    def pretty(self, p):
        return p.pretty(self.names)

    # -- sigma (conjugation by the normal element) ----------------------------

    def sigma_word(self, word, k):
        """sigma^k applied to a word, as a polynomial (k may be negative)."""
        if k == 0 or self.loc is None:
            return NCPoly.term(word)
        key = (word, k)
        hit = self._sigma_cache.get(key)
        if hit is not None:
            return hit
        images = self.sigma_images if k > 0 else self.sigma_inv_images
        p = NCPoly.one()
        for g in word:
            p = p * images[g]
        for _ in range(abs(k) - 1):
            q = NCPoly.zero()
            for w, c in p.terms():
                q = q + c * self.sigma_word(w, 1 if k > 0 else -1)
            p = q
        self._sigma_cache[key] = p
        return p

    def sigma_poly(self, p, k):
        out = NCPoly.zero()
        for w, c in p.terms():
            out = out + c * self.sigma_word(w, k)
        return out

    # -- element constructors --------------------------------------------------

    def elt(self, p, exp=0):
        return LocalizedElement(self, self.rs.normal_form(p), exp)

    def one(self):
        return self.elt(NCPoly.one())

    def zero(self):
        return LocalizedElement(self, NCPoly.zero(), 0)

    def gen_elt(self, g):
        return self.elt(NCPoly.gen(g))

    def u_elt(self, i, j):
        return self.gen_elt(self.u_idx(i, j))

    def loc_elt(self):
        assert self.loc is not None
        return self.gen_elt(self.loc)

    def loc_inv_elt(self):
        assert self.loc is not None
        return LocalizedElement(self, NCPoly.one(), 1)


class LocalizedElement:
    """p * D^-m with p in normal form over the D-positive subalgebra."""

    __slots__ = ("alg", "num", "exp")

    def __init__(self, alg, num, exp):
        assert exp >= 0
        if alg.loc is None:
            assert exp == 0
        # cancel trailing D common to every word of the numerator
        loc = alg.loc
        while exp > 0 and num.d and all(w and w[-1] == loc for w in num.d):
            num = NCPoly({w[:-1]: c for w, c in num.d.items()})
            exp -= 1
        if num.is_zero():
            exp = 0
        self.alg = alg
        self.num = num
        self.exp = exp

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        assert self.alg is other.alg
        m = max(self.exp, other.exp)
        loc = self.alg.loc
        p = self.num * NCPoly.term((loc,) * (m - self.exp)) if m > self.exp else self.num
        q = other.num * NCPoly.term((loc,) * (m - other.exp)) if m > other.exp else other.num
        return LocalizedElement(self.alg, self.alg.rs.normal_form(p + q), m)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, c):
        return LocalizedElement(self.alg, frac(c) * self.num, self.exp)

    def __mul__(self, other):
        if not isinstance(other, LocalizedElement):
            return frac(other) * self
        assert self.alg is other.alg
        alg = self.alg
        # (p D^-m)(q D^-l) = p sigma^-m(q) D^-(m+l)
        q = alg.sigma_poly(other.num, -self.exp) if self.exp else other.num
        return LocalizedElement(alg, alg.rs.normal_form(self.num * q), self.exp + other.exp)

    def __pow__(self, k):
        assert k >= 0
        out = self.alg.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, LocalizedElement) and (self - other).is_zero()

    def __hash__(self):
        raise TypeError("unhashable")

    def pretty(self):
        s = self.num.pretty(self.alg.names)
        if self.exp:
            s = f"({s})*{self.alg.names[self.alg.loc]}^-{self.exp}"
        return s

    def __repr__(self):
        return f"<{self.pretty()}>"


# ---------------------------------------------------------------------------
# tensors with per-slot localization


class TensorElt:
    """Sum of w_1 D^-e_1 x ... x w_k D^-e_k with a common exponent per slot."""

    __slots__ = ("algs", "exps", "tp")

    def __init__(self, algs, exps, tp):
        self.algs = tuple(algs)
        self.exps = tuple(exps)
        self.tp = tp
        assert tp.arity == len(self.algs)

    @classmethod
    def zero(cls, algs):
        return cls(algs, (0,) * len(algs), TensorPoly(len(algs)))

    @classmethod
    def unit(cls, algs):
        return cls(algs, (0,) * len(algs), TensorPoly.unit(len(algs)))

    @classmethod
    def from_locs(cls, les):
        algs = tuple(le.alg for le in les)
        exps = tuple(le.exp for le in les)
        k = len(les)
        tp = TensorPoly.term(((),) * k)
        for i, le in enumerate(les):
            factor = TensorPoly(k, {
                tuple(w if j == i else () for j in range(k)): c
                for w, c in le.num.terms()
            })
            tp = tp * factor
        return cls(algs, exps, tp)

    def arity(self):
        return len(self.algs)

    def _aligned(self, exps):
        """Re-express with the given (>= current) slot exponents."""
        pads = tuple(e - f for e, f in zip(exps, self.exps))
        if not any(pads):
            return self.tp
        d = {}
        for words, c in self.tp.terms():
            key = tuple(
                w + (self.algs[i].loc,) * pads[i] if pads[i] else w
                for i, w in enumerate(words)
            )
            d[key] = d.get(key, 0) + c
        return TensorPoly(self.arity(), d)

    def __add__(self, other):
        assert self.algs == other.algs
        exps = tuple(max(e, f) for e, f in zip(self.exps, other.exps))
        return TensorElt(self.algs, exps, self._aligned(exps) + other._aligned(exps))

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, c):
        return TensorElt(self.algs, self.exps, frac(c) * self.tp)

    def __mul__(self, other):
        if not isinstance(other, TensorElt):
            return frac(other) * self
        assert self.algs == other.algs
        k = self.arity()
        exps = tuple(e + f for e, f in zip(self.exps, other.exps))
        out = TensorPoly(k)
        for ws, c in self.tp.terms():
            for vs, d in other.tp.terms():
                # slot i: (w D^-e)(v D^-f) = w sigma^-e(v) D^-(e+f)
                slot_polys = []
                for i in range(k):
                    q = self.algs[i].sigma_word(vs[i], -self.exps[i]) if self.exps[i] else NCPoly.term(vs[i])
                    slot_polys.append(NCPoly.term(ws[i]) * q)
                term = TensorPoly.term(((),) * k, c * d)
                for i, sp in enumerate(slot_polys):
                    term = term * TensorPoly(k, {
                        tuple(w if j == i else () for j in range(k)): cc
                        for w, cc in sp.terms()
                    })
                out = out + term
        return TensorElt(self.algs, exps, out)

    def reduce(self):
        """Slotwise normal form (sound for the tensor product of quotients)."""
        k = self.arity()
        out = TensorPoly(k)
        for ws, c in self.tp.terms():
            term = TensorPoly.term(((),) * k, c)
            for i, w in enumerate(ws):
                nf = self.algs[i].rs.normal_form(NCPoly.term(w))
                term = term * TensorPoly(k, {
                    tuple(v if j == i else () for j in range(k)): cc
                    for v, cc in nf.terms()
                })
            out = out + term
        return TensorElt(self.algs, self.exps, out)

    def is_zero(self):
        return self.reduce().tp.is_zero()

    def __eq__(self, other):
        return isinstance(other, TensorElt) and (self - other).is_zero()

    def to_loc(self):
        assert self.arity() == 1
        alg = self.algs[0]
        p = NCPoly({ws[0]: c for ws, c in self.tp.terms()})
        return LocalizedElement(alg, alg.rs.normal_form(p), self.exps[0])

    def mul_slots(self):
        """Multiply the two slots of an arity-2 tensor over one algebra."""
        assert self.arity() == 2 and self.algs[0] is self.algs[1]
        alg = self.algs[0]
        out = alg.zero()
        for (w1, w2), c in self.tp.terms():
            le = LocalizedElement(alg, alg.rs.normal_form(NCPoly.term(w1)), self.exps[0]) * \
                 LocalizedElement(alg, alg.rs.normal_form(NCPoly.term(w2)), self.exps[1])
            out = out + c * le
        return out


def apply_char_slot(te, slot, chi):
    """Contract one tensor slot with a character."""
    k = te.arity()
    algs = te.algs[:slot] + te.algs[slot + 1 :]
    exps = te.exps[:slot] + te.exps[slot + 1 :]
    scale = chi.loc_value() ** -te.exps[slot] if te.exps[slot] else ONE
    d = {}
    for ws, c in te.tp.terms():
        v = chi.of_word(ws[slot])
        if not v:
            continue
        key = ws[:slot] + ws[slot + 1 :]
        nc = d.get(key, 0) + c * v * scale
        if nc:
            d[key] = nc
        else:
            del d[key]
    return TensorElt(algs, exps, TensorPoly(k - 1, d))


def apply_map_slot(te, slot, f):
    """Apply an algebra map to one tensor slot."""
    algs = te.algs[:slot] + (f.target,) + te.algs[slot + 1 :]
    out = TensorElt.zero(algs)
    for ws, c in te.tp.terms():
        le = f.apply_loc(LocalizedElement(te.algs[slot], NCPoly.term(ws[slot]), te.exps[slot]))
        exps = te.exps[:slot] + (le.exp,) + te.exps[slot + 1 :]
        d = {}
        for w, cc in le.num.terms():
            d[ws[:slot] + (w,) + ws[slot + 1 :]] = c * cc
        out = out + TensorElt(algs, exps, TensorPoly(te.arity(), d))
    return out


def apply_delta_slot(te, slot, dmap):
    """Apply a comultiplication-type map to one slot (arity grows by one)."""
    algs = te.algs[:slot] + dmap.targets + te.algs[slot + 1 :]
    out = TensorElt.zero(algs)
    for ws, c in te.tp.terms():
        inner = dmap.apply_word(ws[slot])  # arity-2 TensorElt
        e = te.exps[slot]
        exps = te.exps[:slot] + (inner.exps[0] + e, inner.exps[1] + e) + te.exps[slot + 1 :]
        d = {}
        for (v1, v2), cc in inner.tp.terms():
            d[ws[:slot] + (v1, v2) + ws[slot + 1 :]] = c * cc
        out = out + TensorElt(algs, exps, TensorPoly(te.arity() + 1, d))
    return out


# ---------------------------------------------------------------------------
# characters and algebra maps


class Character:
    """Multiplicative unital functional, given by its generator values."""

    def __init__(self, alg, values, name=""):
        self.alg = alg
        self.values = [frac(v) for v in values]
        self.name = name

    def loc_value(self):
        return self.values[self.alg.loc] if self.alg.loc is not None else ONE

    def of_word(self, word):
        v = ONE
        for g in word:
            v *= self.values[g]
            if not v:
                return v
        return v

    def of_poly(self, p):
        return sum((c * self.of_word(w) for w, c in p.terms()), Fraction(0))

    def of_loc(self, le):
        v = self.of_poly(le.num)
        if le.exp:
            v /= self.loc_value() ** le.exp
        return v

    def respects_relations(self):
        failures = []
        for i, r in enumerate(self.alg.relations):
            v = self.of_poly(r)
            if v:
                failures.append((i, v))
        return {"ok": not failures, "failures": failures}

    def compose_map(self, f):
        """The character x -> self(f(x)) on f's source."""
        vals = [self.of_loc(f.images[g]) for g in range(f.source.ngens())]
        return Character(f.source, vals, name=f"{self.name}∘{f.name}")

    def eq(self, other):
        return self.values == other.values


class AlgebraMap:
    """(Anti)homomorphism given on generators; well-definedness is checked."""

    def __init__(self, source, target, images, variance=1, loc_inv_image=None, name=""):
        self.source = source
        self.target = target
        self.images = list(images)
        self.variance = variance
        self.loc_inv_image = loc_inv_image
        self.name = name
        self._word_cache = {}

    @classmethod
    def identity(cls, alg):
        images = [alg.gen_elt(g) for g in range(alg.ngens())]
        inv = alg.loc_inv_elt() if alg.loc is not None else None
        return cls(alg, alg, images, 1, inv, name="id")

    def apply_word(self, word):
        hit = self._word_cache.get(word)
        if hit is not None:
            return hit
        out = self.target.one()
        seq = reversed(word) if self.variance < 0 else word
        for g in seq:
            out = out * self.images[g]
        self._word_cache[word] = out
        return out

    def apply_poly(self, p):
        out = self.target.zero()
        for w, c in p.terms():
            out = out + c * self.apply_word(w)
        return out

    def apply_loc(self, le):
        body = self.apply_poly(le.num)
        if not le.exp:
            return body
        dinv = self.loc_inv_image ** le.exp
        return body * dinv if self.variance > 0 else dinv * body

    def respects_relations(self):
        failures = []
        for i, r in enumerate(self.source.relations):
            img = self.apply_poly(r)
            if not img.is_zero():
                failures.append((i, img.pretty()))
        return {"ok": not failures, "failures": failures}

    def then(self, outer):
        """Composite outer∘self as a new map."""
        images = [outer.apply_loc(le) for le in self.images]
        inv = outer.apply_loc(self.loc_inv_image) if self.loc_inv_image is not None else None
        return AlgebraMap(self.source, outer.target, images,
                          self.variance * outer.variance, inv,
                          name=f"{outer.name}∘{self.name}")

    def eq_on_gens(self, other):
        if any(self.images[g] != other.images[g] for g in range(self.source.ngens())):
            return False
        if self.loc_inv_image is not None and self.loc_inv_image != other.loc_inv_image:
            return False
        return True


class DeltaMap:
    """Map into a tensor square, e.g. a comultiplication or cocomposition."""

    def __init__(self, source, targets, images, name=""):
        self.source = source
        self.targets = tuple(targets)
        self.images = list(images)  # TensorElt per generator; loc image group-like
        self.name = name
        self._word_cache = {}

    def apply_word(self, word):
        hit = self._word_cache.get(word)
        if hit is not None:
            return hit
        out = TensorElt.unit(self.targets)
        for g in word:
            out = out * self.images[g]
        self._word_cache[word] = out
        return out

    def apply_poly(self, p):
        out = TensorElt.zero(self.targets)
        for w, c in p.terms():
            out = out + c * self.apply_word(w)
        return out

    def apply_loc(self, le):
        te = self.apply_poly(le.num)
        if le.exp:
            te = TensorElt(te.algs, (te.exps[0] + le.exp, te.exps[1] + le.exp), te.tp)
        return te

    def respects_relations(self):
        failures = []
        for i, r in enumerate(self.source.relations):
            img = self.apply_poly(r)
            if not img.is_zero():
                failures.append(i)
        return {"ok": not failures, "failures": failures}


class HopfStructure:
    def __init__(self, delta, eps, antipode):
        self.delta = delta
        self.eps = eps
        self.antipode = antipode


# ---------------------------------------------------------------------------
# builders


def _gab_names(n, m, with_loc=True):
    if (n, m) == (2, 2):
        names = ["a", "b", "c", "d"]
    else:
        names = [f"u{i+1}{j+1}" for i in range(n) for j in range(m)]
    return names + (["D"] if with_loc else [])


def _gabcd_relations(alg, A, B, C, D):
    """u^t A u = C D', u D u^t = B D', plus the derived normality rules."""
    n, m = alg.n, alg.m
    loc = NCPoly.gen(alg.loc)
    rels = []
    for i in range(m):
        for j in range(m):
            p = NCPoly.zero()
            for k in range(n):
                for l in range(n):
                    if A[k, l]:
                        p = p + A[k, l] * (NCPoly.gen(alg.u_idx(k, i)) * NCPoly.gen(alg.u_idx(l, j)))
            rels.append(p - C[i, j] * loc)
    for i in range(n):
        for j in range(n):
            p = NCPoly.zero()
            for k in range(m):
                for l in range(m):
                    if D[k, l]:
                        p = p + D[k, l] * (NCPoly.gen(alg.u_idx(i, k)) * NCPoly.gen(alg.u_idx(j, l)))
            rels.append(p - B[i, j] * loc)
    for g in range(n * m):
        rels.append(loc * NCPoly.gen(g) - alg.sigma_images[g] * loc)
    return rels


class _ProtoAlg:
    """Just enough structure to build relation polynomials before completion."""

    def __init__(self, n, m, loc):
        self.n, self.m, self.loc = n, m, loc

    def u_idx(self, i, j):
        return i * self.m + j


def build_gabcd(A, B, C, D, degree_bound, name=None, cache=None):
    """The bi-Galois-object algebra G(A,B|C,D); equals G(A,B) when (C,D)=(A,B)."""
    n, m = A.rows, C.rows
    assert B.rows == n and D.rows == m
    proto = _ProtoAlg(n, m, n * m)
    BA = B * A
    DC = D * C
    BAi = BA.inverse()
    sigma_images = [sandwich(proto, BAi, DC, i, j) for i in range(n) for j in range(m)]
    sigma_images.append(NCPoly.gen(proto.loc))
    DCi = DC.inverse()
    sigma_inv = [sandwich(proto, BA, DCi, i, j) for i in range(n) for j in range(m)]
    sigma_inv.append(NCPoly.gen(proto.loc))

    # relations need sigma; stash images on the proto object
    proto.sigma_images = sigma_images
    rels = _gabcd_relations(proto, A, B, C, D)

    weights = [1] * (n * m) + [2]
    order = MonomialOrder(weights, heavy={n * m})
    rs = complete_with_cache(rels, order, degree_bound, cache)
    is_gab = A == C and B == D
    kind = "GAB" if is_gab else "GABCD"
    alg = PresentedAlgebra(
        name or kind, kind, _gab_names(n, m), weights, rels, rs, n, m,
        loc=n * m, sigma_images=sigma_images, sigma_inv_images=sigma_inv,
        mats={"A": A, "B": B, "C": C, "D": D},
    )
    _verify_sigma(alg)
    if is_gab:
        alg.hopf = _attach_gab_hopf(alg)
    return alg


def _verify_sigma(alg):
    """sigma must respect the relations and realize D x = sigma(x) D."""
    if alg.rs.collapsed:
        return
    sigma_map = AlgebraMap(
        alg, alg, [alg.elt(img) for img in alg.sigma_images],
        1, alg.loc_inv_elt(), name="σ")
    rep = sigma_map.respects_relations()
    assert rep["ok"], f"sigma breaks the presentation: {rep['failures'][:2]}"
    loc = NCPoly.gen(alg.loc)
    for g in range(alg.ngens()):
        nf = alg.rs.normal_form(loc * NCPoly.gen(g) - alg.sigma_images[g] * loc)
        assert nf.is_zero(), f"D*{alg.names[g]} != sigma({alg.names[g]})*D"


def build_gab(A, B, degree_bound, name=None, cache=None):
    return build_gabcd(A, B, A, B, degree_bound, name=name, cache=cache)


def build_glq(q, degree_bound, cache=None):
    Aq = a_q_matrix(q)
    alg = build_gab(Aq, Aq.inverse(), degree_bound, name=f"GLq(2),q={q}", cache=cache)
    alg.mats["q"] = frac(q)
    return alg


def _attach_gab_hopf(alg):
    A = alg.mats["A"]
    n = alg.n
    # Delta(u_ij) = sum_k u_ik (x) u_kj, Delta(D) = D (x) D
    images = []
    for i in range(n):
        for j in range(n):
            d = {}
            for k in range(n):
                d[((alg.u_idx(i, k),), (alg.u_idx(k, j),))] = ONE
            images.append(TensorElt((alg, alg), (0, 0), TensorPoly(2, d)))
    images.append(TensorElt((alg, alg), (0, 0),
                            TensorPoly(2, {((alg.loc,), (alg.loc,)): ONE})))
    delta = DeltaMap(alg, (alg, alg), images, name="Δ")
    eps = Character(alg, [ONE if i == j else 0 for i in range(n) for j in range(n)] + [ONE], name="ε")
    Ai = A.inverse()
    s_images = [alg.loc_inv_elt() * alg.elt(sandwich(alg, Ai, A, i, j, transpose=True))
                for i in range(n) for j in range(n)]
    s_images.append(alg.loc_inv_elt())
    antipode = AlgebraMap(alg, alg, s_images, variance=-1,
                          loc_inv_image=alg.loc_elt(), name="S")
    return HopfStructure(delta, eps, antipode)


def build_slq(q, degree_bound, cache=None):
    """O(SL_q(2)) on abar..dbar (no localization)."""
    q = frac(q)
    names = ["a", "b", "c", "d"]
    a, b, c, d = (NCPoly.gen(i) for i in range(4))
    one = NCPoly.one()
    rels = [
        a * b - q * (b * a),
        a * c - q * (c * a),
        b * c - c * b,
        b * d - q * (d * b),
        c * d - q * (d * c),
        a * d - q * (b * c) - one,
        d * a - (1 / q) * (b * c) - one,
    ]
    order = MonomialOrder([1, 1, 1, 1])
    rs = complete_with_cache(rels, order, degree_bound, cache)
    alg = PresentedAlgebra(f"SLq(2),q={q}", "SLq", names, [1, 1, 1, 1], rels, rs, 2, 2,
                           mats={"q": q})
    te = lambda d: TensorElt((alg, alg), (0, 0), TensorPoly(2, d))
    delta = DeltaMap(alg, (alg, alg), [
        te({((0,), (0,)): ONE, ((1,), (2,)): ONE}),
        te({((0,), (1,)): ONE, ((1,), (3,)): ONE}),
        te({((2,), (0,)): ONE, ((3,), (2,)): ONE}),
        te({((2,), (1,)): ONE, ((3,), (3,)): ONE}),
    ], name="Δ")
    eps = Character(alg, [1, 0, 0, 1], name="ε")
    antipode = AlgebraMap(alg, alg, [
        alg.gen_elt(3), (-1 / q) * alg.gen_elt(1), (-q) * alg.gen_elt(2), alg.gen_elt(0),
    ], variance=-1, name="S")
    alg.hopf = HopfStructure(delta, eps, antipode)
    return alg


def build_slq_laurent(q, degree_bound, cache=None):
    """O(SL_q(2))[z^{±1}]: SL_q relations plus a central localized z."""
    q = frac(q)
    names = ["a", "b", "c", "d", "z"]
    a, b, c, d, z = (NCPoly.gen(i) for i in range(5))
    one = NCPoly.one()
    rels = [
        a * b - q * (b * a),
        a * c - q * (c * a),
        b * c - c * b,
        b * d - q * (d * b),
        c * d - q * (d * c),
        a * d - q * (b * c) - one,
        d * a - (1 / q) * (b * c) - one,
        z * a - a * z,
        z * b - b * z,
        z * c - c * z,
        z * d - d * z,
    ]
    order = MonomialOrder([1, 1, 1, 1, 1], heavy={4})
    rs = complete_with_cache(rels, order, degree_bound, cache)
    sigma = [NCPoly.gen(i) for i in range(5)]
    alg = PresentedAlgebra(f"SLq(2)[z±1],q={q}", "SLqLaurent", names, [1, 1, 1, 1, 1],
                           rels, rs, 2, 2, loc=4, sigma_images=sigma,
                           sigma_inv_images=sigma, mats={"q": q})
    _verify_sigma(alg)
    te = lambda d: TensorElt((alg, alg), (0, 0), TensorPoly(2, d))
    delta = DeltaMap(alg, (alg, alg), [
        te({((0,), (0,)): ONE, ((1,), (2,)): ONE}),
        te({((0,), (1,)): ONE, ((1,), (3,)): ONE}),
        te({((2,), (0,)): ONE, ((3,), (2,)): ONE}),
        te({((2,), (1,)): ONE, ((3,), (3,)): ONE}),
        te({((4,), (4,)): ONE}),
    ], name="Δ")
    eps = Character(alg, [1, 0, 0, 1, 1], name="ε")
    antipode = AlgebraMap(alg, alg, [
        alg.gen_elt(3), (-1 / q) * alg.gen_elt(1), (-q) * alg.gen_elt(2), alg.gen_elt(0),
        alg.loc_inv_elt(),
    ], variance=-1, loc_inv_image=alg.loc_elt(), name="S")
    alg.hopf = HopfStructure(delta, eps, antipode)
    return alg


def seeded_pair(seed, n=3):
    """Seeded invertible n x n matrix A and B = (A^t)^{-1}.

    The generator (documented contract): CPython's Mersenne Twister seeded
    with the config seed draws a uniformly random permutation and one entry
    from {1,-1,2,-2} per row, giving a signed permutation matrix.  Signed
    permutations keep the truncated completion at desk scale while still
    exercising non-identity sigma, antipode and Nakayama twists.
    """
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    rows = [[0] * n for _ in range(n)]
    for i, j in enumerate(perm):
        rows[i][j] = rng.choice([1, -1, 2, -2])
    A = Mat(rows)
    return A, A.transpose().inverse()


def presentation_manifest(alg):
    """Canonical JSON-ready description of a presentation, for golden files.

    The interreduced rule set is the normal form of the relation ideal at the
    certified degree, so two equal inputs produce byte-identical manifests.
    """
    from .foundation import frac_str

    mats = {k: v.to_lists() for k, v in alg.mats.items() if isinstance(v, Mat)}
    if "q" in alg.mats:
        mats["q"] = frac_str(alg.mats["q"])
    return {
        "kind": alg.kind,
        "name": alg.name,
        "n": alg.n,
        "m": alg.m,
        "generators": alg.names,
        "weights": list(alg.weights),
        "localized": alg.loc,
        "matrices": mats,
        "degree_bound": alg.rs.certified_degree,
        "rules": alg.rs.to_dict()["rules"],
    }


def build_presented(desc, cache=None):
    """Build from a config-style dict: kind, matrices/params, degree_bound."""
    kind = desc["kind"]
    bound = desc["degree_bound"]
    if kind == "GLq":
        return build_glq(frac(desc["q"]), bound, cache=cache)
    if kind == "SLq":
        return build_slq(frac(desc["q"]), bound, cache=cache)
    if kind == "SLqLaurent":
        return build_slq_laurent(frac(desc["q"]), bound, cache=cache)
    if kind == "GAB":
        if "A" in desc:
            A, B = Mat(desc["A"]), Mat(desc["B"])
        else:
            A, B = seeded_pair(desc["seed"], desc.get("n", 3))
        return build_gab(A, B, bound, cache=cache)
    if kind == "GABCD":
        return build_gabcd(Mat(desc["A"]), Mat(desc["B"]), Mat(desc["C"]),
                           Mat(desc["D"]), bound, cache=cache)
    raise ValueError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# verification suites


def map_respects_relations(f):
    """Per-relation pass/fail with the failing normal form as witness."""
    return f.respects_relations()


def commutation_check(alg):
    """BA D u = u D BA (resp. = u D DC for Galois objects), inside the ideal."""
    A, B = alg.mats["A"], alg.mats["B"]
    C, D = alg.mats["C"], alg.mats["D"]
    BA = B * A
    DC = D * C
    loc = NCPoly.gen(alg.loc)
    failures = []
    for i in range(alg.n):
        for j in range(alg.m):
            lhs = NCPoly.zero()
            for k in range(alg.n):
                if BA[i, k]:
                    lhs = lhs + BA[i, k] * (loc * NCPoly.gen(alg.u_idx(k, j)))
            rhs = NCPoly.zero()
            for k in range(alg.m):
                if DC[k, j]:
                    rhs = rhs + DC[k, j] * (NCPoly.gen(alg.u_idx(i, k)) * loc)
            nf = alg.rs.normal_form(lhs - rhs)
            if not nf.is_zero():
                failures.append(((i, j), alg.pretty(nf)))
    return {"ok": not failures, "failures": failures}


def verify_hopf_axioms(alg):
    """Hopf axioms on every generator, with witnesses on failure."""
    H = alg.hopf
    delta, eps, S = H.delta, H.eps, H.antipode
    failures = []

    r = delta.respects_relations()
    if not r["ok"]:
        failures.append(("delta_relations", r["failures"]))
    r = eps.respects_relations()
    if not r["ok"]:
        failures.append(("counit_relations", r["failures"]))
    r = S.respects_relations()
    if not r["ok"]:
        failures.append(("antipode_relations", r["failures"]))

    gens = list(range(alg.ngens()))
    for g in gens:
        dg = delta.images[g]
        lhs = apply_delta_slot(dg, 0, delta)
        rhs = apply_delta_slot(dg, 1, delta)
        if not (lhs - rhs).is_zero():
            failures.append(("coassoc", alg.names[g]))
        left = apply_char_slot(dg, 0, eps).to_loc()
        right = apply_char_slot(dg, 1, eps).to_loc()
        if left != alg.gen_elt(g) or right != alg.gen_elt(g):
            failures.append(("counit", alg.names[g]))
        target = eps.values[g] * alg.one()
        s_left = apply_map_slot(dg, 0, S).mul_slots()
        s_right = apply_map_slot(dg, 1, S).mul_slots()
        if s_left != target:
            failures.append(("antipode_left", alg.names[g], s_left.pretty()))
        if s_right != target:
            failures.append(("antipode_right", alg.names[g], s_right.pretty()))
    if alg.loc is not None:
        # also S(D^-1) pairs off: m(S x id)Δ(D^-1) = 1
        dinv = TensorElt((alg, alg), (1, 1), TensorPoly.unit(2))
        if apply_map_slot(dinv, 0, S).mul_slots() != alg.one():
            failures.append(("antipode_left", "D^-1"))
    return {"ok": not failures, "failures": failures}


def winding(chi, side):
    """Left or right winding automorphism of a character of a Hopf algebra."""
    alg = chi.alg
    delta = alg.hopf.delta
    images = []
    for g in range(alg.ngens()):
        te = delta.images[g]
        le = apply_char_slot(te, 0 if side == "left" else 1, chi).to_loc()
        images.append(le)
    v = chi.loc_value()
    inv = (1 / v) * alg.loc_inv_elt() if alg.loc is not None else None
    return AlgebraMap(alg, alg, images, 1, inv, name=f"[{chi.name}]^{side[0]}")


def convolve_chars(alg, chi1, chi2):
    """(chi1 * chi2)(x) = chi1(x_(1)) chi2(x_(2)) via the comultiplication."""
    delta = alg.hopf.delta
    values = []
    for g in range(alg.ngens()):
        te = delta.images[g]
        v = sum((c * chi1.of_word(ws[0]) * chi2.of_word(ws[1])
                 for ws, c in te.tp.terms()), Fraction(0))
        e0, e1 = te.exps
        if e0:
            v /= chi1.loc_value() ** e0
        if e1:
            v /= chi2.loc_value() ** e1
        values.append(v)
    return Character(alg, values, name=f"{chi1.name}*{chi2.name}")


def convolve(f, g):
    """Convolution product of two maps H -> H on generators, (f*g)(x)=f(x1)g(x2)."""
    alg = f.source
    delta = alg.hopf.delta
    images = []
    for gi in range(alg.ngens()):
        te = delta.images[gi]
        te = apply_map_slot(te, 0, f)
        te = apply_map_slot(te, 1, g)
        images.append(te.mul_slots())
    inv = None
    if alg.loc is not None:
        inv = f.loc_inv_image * g.loc_inv_image
    return AlgebraMap(alg, alg, images, 1, inv, name=f"{f.name}*{g.name}")


def antipode_squared_sovereign(alg):
    """S^2 against its two closed forms and the sovereign convolution."""
    A, B = alg.mats["A"], alg.mats["B"]
    lam = (B.transpose() * A.transpose() * B * A)[0, 0]
    S = alg.hopf.antipode
    S2 = S.then(S)
    n = alg.n
    failures = []

    M1 = A.inverse() * A.transpose()
    M2 = A.transpose().inverse() * A
    BAt = B * A.transpose()
    M3 = A.transpose().inverse() * B.inverse()
    for i in range(n):
        for j in range(n):
            got = S2.images[alg.u_idx(i, j)]
            closed1 = alg.loc_inv_elt() * alg.elt(sandwich(alg, M1, M2, i, j)) * alg.loc_elt()
            closed2 = alg.elt(sandwich(alg, BAt, M3, i, j))
            if got != closed1:
                failures.append(("closed_form_conjugated", (i, j)))
            if got != closed2:
                failures.append(("closed_form_flat", (i, j)))
    if S2.images[alg.loc] != alg.loc_elt():
        failures.append(("S2_D", None))
    if S2.loc_inv_image != alg.loc_inv_elt():
        failures.append(("S2_Dinv", None))

    # sovereign character
    phi_vals = [BAt[i, j] for i in range(n) for j in range(n)] + [lam]
    phi = Character(alg, phi_vals, name="Φ")
    r = phi.respects_relations()
    if not r["ok"]:
        failures.append(("phi_character", r["failures"]))
    phi_inv = phi.compose_map(S)
    if not all(v == 0 for v in (convolve_chars(alg, phi, phi_inv).values[g] -
                                alg.hopf.eps.values[g] for g in range(alg.ngens()))):
        failures.append(("phi_convolution_inverse", None))
    # S^2 = Φ * id * Φ^{-1}, the sovereign identity, checked on generators
    delta = alg.hopf.delta
    for g in range(alg.ngens()):
        te = apply_delta_slot(delta.images[g], 0, delta)  # arity 3
        te = apply_char_slot(te, 2, phi_inv)
        te = apply_char_slot(te, 0, phi)
        if te.to_loc() != S2.images[g]:
            failures.append(("sovereign_convolution", alg.names[g]))
    return {"ok": not failures, "failures": failures, "lambda": lam}


def _sigma_power_map(alg, k):
    """conj_D^k as an algebra map (k may be negative)."""
    images = [alg.elt(alg.sigma_word((g,), k)) for g in range(alg.ngens())]
    return AlgebraMap(alg, alg, images, 1, alg.loc_inv_elt(), name=f"conj_D^{k}")


def nakayama_G(alg):
    """Nakayama data for G(A,B): mu, xi, eta, and the identities tying them."""
    A, B = alg.mats["A"], alg.mats["B"]
    n = alg.n
    P = A.transpose().inverse() * A
    Q = B.transpose() * B.inverse()
    eps = alg.hopf.eps
    S = alg.hopf.antipode

    def conj_map(L, R, name):
        images = [alg.elt(sandwich(alg, L, R, i, j)) for i in range(n) for j in range(n)]
        images.append(alg.loc_elt())
        return AlgebraMap(alg, alg, images, 1, alg.loc_inv_elt(), name=name)

    mu = conj_map(P, Q, "μ")
    mu_inv = conj_map(P.inverse(), Q.inverse(), "μ^-1")
    # nu(u) = A^{-1} A^t u B (B^t)^{-1}
    nu = conj_map(A.inverse() * A.transpose(), B * B.transpose().inverse(), "ν")

    failures = []
    for m_, label in ((mu, "mu"), (mu_inv, "mu_inv"), (nu, "nu")):
        r = m_.respects_relations()
        if not r["ok"]:
            failures.append((f"{label}_relations", r["failures"]))
    if not mu.then(mu_inv).eq_on_gens(AlgebraMap.identity(alg)):
        failures.append(("mu_inverse", None))

    xi = eps.compose_map(mu)
    eta = eps.compose_map(nu)
    PQ = P * Q
    if [xi.values[alg.u_idx(i, j)] for i in range(n) for j in range(n)] != \
            [PQ[i, j] for i in range(n) for j in range(n)]:
        failures.append(("xi_matrix", None))
    if not eps.compose_map(mu_inv).eq(eta):
        failures.append(("eta_is_eps_mu_inv", None))

    # S^2 [xi]^l is a Nakayama automorphism too, so it may differ from mu
    # only by an inner automorphism; here the units are scalars times D^k,
    # so the ratio must be a power of conj_D.  The character level is exact:
    # eps∘S^2[xi]^l = xi = eps∘mu.
    wind_xi = winding(xi, "left")
    s2_wind = wind_xi.then(S.then(S))
    if not eps.compose_map(s2_wind).eq(xi):
        failures.append(("eps_S2_wind_xi_is_xi", None))
    inner_power = None
    for k in (0, 1, -1, 2, -2):
        if _sigma_power_map(alg, k).then(s2_wind).eq_on_gens(mu):
            inner_power = k
            break
    if inner_power is None:
        failures.append(("mu_eq_S2_wind_xi_up_to_inner", None))
    # windings invert: [xi]^l ∘ [xi∘S]^l = id
    wind_xi_inv = winding(xi.compose_map(S), "left")
    if not wind_xi_inv.then(wind_xi).eq_on_gens(AlgebraMap.identity(alg)):
        failures.append(("winding_inverse", None))

    # S^-2 [eta S]^r = conj_D ∘ mu on generators
    BAt = B * A.transpose()
    S2inv = conj_map(BAt.inverse(), BAt, "S^-2")
    if not S2inv.then(S.then(S)).eq_on_gens(AlgebraMap.identity(alg)):
        failures.append(("S2inv_check", None))
    etaS = eta.compose_map(S)
    cand = winding(etaS, "right").then(S2inv)
    sigma_map = AlgebraMap(
        alg, alg,
        [alg.elt(alg.sigma_images[g]) for g in range(alg.ngens())],
        1, alg.loc_inv_elt(), name="conj_D")
    conj_mu = mu.then(sigma_map)
    if not cand.eq_on_gens(conj_mu):
        failures.append(("nakayama_inner_equivalence", None))
    # conj_D is inner: sigma(x) D = D x
    loc = NCPoly.gen(alg.loc)
    for g in range(alg.ngens()):
        nf = alg.rs.normal_form(alg.sigma_images[g] * loc - loc * NCPoly.gen(g))
        if not nf.is_zero():
            failures.append(("conj_D_inner", alg.names[g]))
    return {"mu": mu, "mu_inv": mu_inv, "nu": nu, "xi": xi, "eta": eta,
            "inner_power": inner_power,
            "report": {"ok": not failures, "failures": failures}}


def galois_s_map(src, tgt):
    """S_{AB,CD}: G(A,B|C,D) -> G(C,D|A,B)^op, u -> D^-1 A^-1 u^t C."""
    A = src.mats["A"]
    C = src.mats["C"]
    Ai = A.inverse()
    images = []
    for i in range(src.n):
        for j in range(src.m):
            images.append(tgt.loc_inv_elt() * tgt.elt(sandwich(tgt, Ai, C, i, j, transpose=True)))
    images.append(tgt.loc_inv_elt())
    return AlgebraMap(src, tgt, images, variance=-1, loc_inv_image=tgt.loc_elt(),
                      name=f"S[{src.name}]")


def cocomposition(src, left, right):
    """Δ^{XY}: C(X,Y)-style cocomposition into left (x) right."""
    p = left.m
    assert right.n == p and src.n == left.n and src.m == right.m
    images = []
    for i in range(src.n):
        for j in range(src.m):
            d = {}
            for k in range(p):
                d[((left.u_idx(i, k),), (right.u_idx(k, j),))] = ONE
            images.append(TensorElt((left, right), (0, 0), TensorPoly(2, d)))
    images.append(TensorElt((left, right), (0, 0),
                            TensorPoly(2, {((left.loc,), (right.loc,)): ONE})))
    return DeltaMap(src, (left, right), images, name="Δ")


def cogroupoid_suite(objects, degree_bound):
    """All cogroupoid diagrams on generators for the given (A,B) objects.

    objects: list of (A, B) matrix pairs.  Builds C(X,Y) for every ordered
    pair and checks cocomposition coassociativity, counits, the antipode
    squares, that each S_{X,Y} is a homomorphism into the opposite algebra,
    and the Δ∘S identity.
    """
    objs = list(range(len(objects)))
    algs = {}
    for x in objs:
        for y in objs:
            Ax, Bx = objects[x]
            Ay, By = objects[y]
            algs[(x, y)] = build_gabcd(Ax, Bx, Ay, By, degree_bound,
                                       name=f"C({x},{y})")
    failures = []
    checks = 0
    for (x, y), alg in algs.items():
        try:
            alg.rs.nonzero_witness()
        except UnitCollapse:
            failures.append(("nonzero", (x, y)))
        checks += 1

    deltas = {}
    for x in objs:
        for y in objs:
            for z in objs:
                dm = cocomposition(algs[(x, y)], algs[(x, z)], algs[(z, y)])
                deltas[(x, y, z)] = dm
                r = dm.respects_relations()
                checks += 1
                if not r["ok"]:
                    failures.append(("cocomposition_relations", (x, y, z)))

    svals = {}
    for x in objs:
        for y in objs:
            smap = galois_s_map(algs[(x, y)], algs[(y, x)])
            svals[(x, y)] = smap
            r = smap.respects_relations()
            checks += 1
            if not r["ok"]:
                failures.append(("antipode_relations", (x, y), r["failures"]))

    gens_of = lambda alg: range(alg.ngens())
    for x in objs:
        for y in objs:
            alg = algs[(x, y)]
            # coassociativity for every pair of middle objects
            for z in objs:
                for t in objs:
                    for g in gens_of(alg):
                        lhs = apply_delta_slot(deltas[(x, y, z)].images[g], 0, deltas[(x, z, t)])
                        rhs = apply_delta_slot(deltas[(x, y, t)].images[g], 1, deltas[(t, y, z)])
                        checks += 1
                        if not (lhs - rhs).is_zero():
                            failures.append(("coassoc", (x, y, z, t), alg.names[g]))
            # counit triangles
            epsx = Character(algs[(x, x)],
                             [ONE if i == j else 0 for i in range(algs[(x, x)].n)
                              for j in range(algs[(x, x)].m)] + [ONE], name="ε")
            epsy = Character(algs[(y, y)],
                             [ONE if i == j else 0 for i in range(algs[(y, y)].n)
                              for j in range(algs[(y, y)].m)] + [ONE], name="ε")
            for g in gens_of(alg):
                right = apply_char_slot(deltas[(x, y, y)].images[g], 1, epsy).to_loc()
                left = apply_char_slot(deltas[(x, y, x)].images[g], 0, epsx).to_loc()
                checks += 1
                if right != alg.gen_elt(g) or left != alg.gen_elt(g):
                    failures.append(("counit", (x, y), alg.names[g]))
    # antipode squares on the diagonal algebras
    for x in objs:
        for y in objs:
            algxx = algs[(x, x)]
            epsx = Character(algxx, [ONE if i == j else 0 for i in range(algxx.n)
                                     for j in range(algxx.m)] + [ONE], name="ε")
            for g in gens_of(algxx):
                te = deltas[(x, x, y)].images[g]
                lhs = apply_map_slot(te, 0, svals[(x, y)]).mul_slots()
                checks += 1
                if lhs != epsx.values[g] * algs[(y, x)].one():
                    failures.append(("antipode_square_left", (x, y), algxx.names[g]))
                rhs = apply_map_slot(te, 1, svals[(y, x)]).mul_slots()
                checks += 1
                if rhs != epsx.values[g] * algs[(x, y)].one():
                    failures.append(("antipode_square_right", (x, y), algxx.names[g]))
    # Δ∘S identity: Δ^Z_{X,Y}(S_{Y,X}(a)) = S_{Z,X}(a_2) (x) S_{Y,Z}(a_1)
    for x in objs:
        for y in objs:
            for z in objs:
                src = algs[(y, x)]
                for g in gens_of(src):
                    lhs = deltas[(x, y, z)].apply_loc(svals[(y, x)].images[g])
                    rhs = TensorElt.zero((algs[(x, z)], algs[(z, y)]))
                    for (w1, w2), c in deltas[(y, x, z)].images[g].tp.terms():
                        le2 = svals[(z, x)].apply_loc(
                            LocalizedElement(algs[(z, x)], NCPoly.term(w2), 0))
                        le1 = svals[(y, z)].apply_loc(
                            LocalizedElement(algs[(y, z)], NCPoly.term(w1), 0))
                        rhs = rhs + c * TensorElt.from_locs((le2, le1))
                    checks += 1
                    if not (lhs - rhs).is_zero():
                        failures.append(("delta_antipode", (x, y, z), src.names[g]))
    return {"ok": not failures, "failures": failures, "checks": checks}


def nakayama_galois(alg, alg_op):
    """Nakayama identities for the Galois object G(A,B|C,D).

    alg is G(A,B|C,D), alg_op is G(C,D|A,B).
    """
    A, B = alg.mats["A"], alg.mats["B"]
    C, D = alg.mats["C"], alg.mats["D"]
    n, m = alg.n, alg.m
    failures = []
    warnings = []
    try:
        from .foundation import matrix_invariants
        iab = matrix_invariants(A, B)
        icd = matrix_invariants(C, D)
        if iab["lambda"] != icd["lambda"] or iab["trace"] != icd["trace"]:
            warnings.append("invariants of (A,B) and (C,D) differ")
    except Exception as e:  # noqa: BLE001 - report, do not die
        warnings.append(f"invariant check failed: {e}")

    def conj_map(L, R, name):
        images = [alg.elt(sandwich(alg, L, R, i, j)) for i in range(n) for j in range(m)]
        images.append(alg.loc_elt())
        return AlgebraMap(alg, alg, images, 1, alg.loc_inv_elt(), name=name)

    mu = conj_map(A.transpose().inverse() * A, D.transpose() * D.inverse(), "μ")
    mu_prime = conj_map(A.transpose().inverse() * B.inverse(), D.transpose() * C, "μ'")
    for m_, label in ((mu, "mu"), (mu_prime, "mu_prime")):
        r = m_.respects_relations()
        if not r["ok"]:
            failures.append((f"{label}_relations", r["failures"]))
    if mu.images[alg.loc] != alg.loc_elt() or mu.loc_inv_image != alg.loc_inv_elt():
        failures.append(("mu_fixes_D", None))

    sigma_map = AlgebraMap(alg, alg,
                           [alg.elt(alg.sigma_images[g]) for g in range(alg.ngens())],
                           1, alg.loc_inv_elt(), name="conj_D")
    if not mu.then(sigma_map).eq_on_gens(mu_prime):
        failures.append(("sigma_mu_eq_mu_prime", None))

    # commutation D^-1 u D = B A u C^-1 D^-1 lies in the ideal
    BA = B * A
    CiDi = C.inverse() * D.inverse()
    loc = NCPoly.gen(alg.loc)
    for i in range(n):
        for j in range(m):
            rhs = sandwich(alg, BA, CiDi, i, j)
            nf = alg.rs.normal_form(NCPoly.gen(alg.u_idx(i, j)) * loc - loc * rhs)
            if not nf.is_zero():
                failures.append(("D_commutation", (i, j)))

    # S_{CD,AB} S_{AB,CD}(u) = A^-1 (B^t)^-1 u D^t C
    s1 = galois_s_map(alg, alg_op)
    s2 = galois_s_map(alg_op, alg)
    ss = s1.then(s2)
    L = A.inverse() * B.transpose().inverse()
    R = D.transpose() * C
    for i in range(n):
        for j in range(m):
            if ss.images[alg.u_idx(i, j)] != alg.elt(sandwich(alg, L, R, i, j)):
                failures.append(("SS_closed_form", (i, j)))
    if ss.images[alg.loc] != alg.loc_elt():
        failures.append(("SS_fixes_D", None))

    # mu' = S_{CD,AB} S_{AB,CD} [xi]^l on generators, xi(u) = (A^t)^-1 A B^t B^-1
    Xi = A.transpose().inverse() * A * B.transpose() * B.inverse()
    wind_images = [alg.elt(sandwich(alg, Xi, Mat.identity(m), i, j))
                   for i in range(n) for j in range(m)]
    wind_images.append(alg.loc_elt())
    wind = AlgebraMap(alg, alg, wind_images, 1, alg.loc_inv_elt(), name="[ξ]^l")
    if not wind.then(ss).eq_on_gens(mu_prime):
        failures.append(("mu_prime_construction", None))

    return {"mu": mu, "mu_prime": mu_prime,
            "report": {"ok": not failures, "failures": failures, "warnings": warnings}}


def glq_slq_laurent_iso(glq, slql):
    """The algebra isomorphism O(GL_q(2)) ≅ O(SL_q(2))[z^{±1}]."""
    a, b, c, d, z = (slql.gen_elt(i) for i in range(5))
    fwd = AlgebraMap(glq, slql,
                     [a * z, b * z, c, d, z],
                     1, slql.loc_inv_elt(), name="fwd")
    ga, gb, gc, gd = (glq.gen_elt(i) for i in range(4))
    dinv = glq.loc_inv_elt()
    bwd = AlgebraMap(slql, glq,
                     [ga * dinv, gb * dinv, gc, gd, glq.loc_elt()],
                     1, glq.loc_inv_elt(), name="bwd")
    failures = []
    for f, label in ((fwd, "fwd"), (bwd, "bwd")):
        r = f.respects_relations()
        if not r["ok"]:
            failures.append((f"{label}_relations", r["failures"]))
    if not fwd.then(bwd).eq_on_gens(AlgebraMap.identity(glq)):
        failures.append(("bwd_fwd_identity", None))
    if not bwd.then(fwd).eq_on_gens(AlgebraMap.identity(slql)):
        failures.append(("fwd_bwd_identity", None))
    return {"fwd": fwd, "bwd": bwd,
            "report": {"ok": not failures, "failures": failures}}
