"""Bialgebra cohomology of G(A,B) and the Gerstenhaber-Schack dimension.

Hom(-, k) is applied to the free Yetter-Drinfeld resolution blockwise: each
free summand U ⊠ G contributes the comodule-morphism space Hom(U, k), and a
differential induces the scalar map f -> (f applied to the counit of the
matrix entries).  Homology dimensions come from exact ranks.
"""

from fractions import Fraction

from .errors import UnexpectedHomDimension
from .linalg import RowSpace, mat_rank
from .ydmod import build_comodule, hom_to_trivial

ZERO = Fraction(0)


class ScalarComplex:
    """Row-vector scalar cochain complex: x in C^i maps to x . mats[i]."""

    def __init__(self, dims, mats):
        self.dims = dims
        self.mats = mats

    def check_complex(self):
        for i in range(len(self.mats) - 1):
            A, B = self.mats[i], self.mats[i + 1]
            for r in range(len(A)):
                for c in range(len(B[0]) if B else 0):
                    v = sum((A[r][k] * B[k][c] for k in range(len(B))), ZERO)
                    if v:
                        return {"ok": False, "failures": [(i, r, c, str(v))]}
        return {"ok": True, "failures": []}

    def ranks(self):
        return [mat_rank(m) if m else 0 for m in self.mats]

    def homology_dims(self):
        rk = self.ranks()
        dims = []
        for i, d in enumerate(self.dims):
            below = rk[i - 1] if i >= 1 else 0
            above = rk[i] if i < len(rk) else 0
            dims.append(d - below - above)
        return dims


def _level_blocks(alg, level_index):
    """Block structure of the resolution levels P4..P0 (levels 0..4)."""
    n = alg.n
    return {
        0: [("k", 1)],
        1: [("vv", n * n), ("k", 1)],
        2: [("vv", n * n), ("ww", n * n)],
        3: [("ww", n * n), ("k", 1)],
        4: [("k", 1)],
    }[level_index]


def bialgebra_cohomology(alg, resolution):
    """Cohomology dimensions of Hom(P., k) for the YD resolution P. of k."""
    triv = build_comodule("trivial", alg)
    dual = build_comodule("dual_fundamental", alg)
    fund = build_comodule("fundamental", alg)
    vxv = build_comodule("tensor", alg, parts=[dual, fund])

    h_triv = hom_to_trivial(triv)
    h_vv = hom_to_trivial(vxv)
    if h_triv.dim != 1:
        raise UnexpectedHomDimension(f"Hom(k,k) has dim {h_triv.dim}")
    if h_vv.dim != 1:
        raise UnexpectedHomDimension(
            f"Hom(V*xV,k) has dim {h_vv.dim}; instance not generic")
    homs = {"k": h_triv, "vv": h_vv, "ww": h_vv}
    comods = {"k": triv, "vv": vxv, "ww": vxv}

    eps = alg.hopf.eps

    def level_hom_basis(level):
        """Functionals on the level's coordinates, blockwise."""
        blocks = _level_blocks(alg, level)
        rank = sum(sz for _, sz in blocks)
        basis = []
        off = 0
        for bname, sz in blocks:
            for row in homs[bname].basis:
                vec = [ZERO] * rank
                for i, v in enumerate(row):
                    vec[off + i] = v
                basis.append(vec)
            off += sz
        return blocks, basis

    # C^i = Hom(P_i) lives at complex level 4-i
    dims = []
    bases = []
    for i in range(5):
        blocks, basis = level_hom_basis(4 - i)
        dims.append(len(basis))
        bases.append((blocks, basis))
    if dims != [1, 2, 2, 2, 1]:
        raise UnexpectedHomDimension(f"cochain dims {dims}")

    mats = []
    for i in range(4):
        # d^i: C^i -> C^{i+1} induced by psi_{i+1}: level 3-i -> level 4-i
        psi = resolution.maps[3 - i]
        E = [[eps.of_loc(psi.entries[s][t]) for t in range(psi.tgt_rank)]
             for s in range(psi.src_rank)]
        src_blocks, src_basis = bases[i + 1]
        _, tgt_basis = bases[i]
        rows = []
        for F in tgt_basis:
            G = [sum((E[s][t] * F[t] for t in range(len(F))), ZERO)
                 for s in range(psi.src_rank)]
            # express G in the source level's hom basis
            space = RowSpace()
            for lbl, vec in enumerate(src_basis):
                space.insert({k: v for k, v in enumerate(vec) if v}, lbl)
            combo = space.express({k: v for k, v in enumerate(G) if v})
            assert combo is not None, "induced functional not a comodule map"
            rows.append([combo.get(lbl, ZERO) for lbl in range(len(src_basis))])
        mats.append(rows)

    sc = ScalarComplex(dims, mats)
    chk = sc.check_complex()
    assert chk["ok"], f"scalar complex not a complex: {chk['failures']}"
    return {
        "dims": sc.homology_dims(),
        "ranks": sc.ranks(),
        "cochain_dims": dims,
        "scalar_complex": sc,
        "hom_dims": {"k": h_triv.dim, "vv": h_vv.dim},
    }


def gs_dimension_report(alg, cohomology_result):
    """Upper bound from the resolution length, lower from top nonzero H_b."""
    dims = cohomology_result["dims"]
    upper = 4
    lower = max((i for i, d in enumerate(dims) if d), default=0)
    verdict = "cd_GS = 4" if upper == lower == 4 else "inconclusive (lower<upper)"
    return {"upper": upper, "lower": lower, "verdict": verdict, "dims": dims}
