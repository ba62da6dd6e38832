from itertools import product

import pytest

from conftest import SL2, Z2
from pomkit.actions import (
    ConedSplitExtension,
    G_extract,
    H_build,
    PreorderedAction,
    build_extension,
    canonicalize_xi,
    check_action_morphism,
    check_axioms,
    check_ext_morphism,
    extract_action,
    fixed_point_set,
    roundtrip_GH,
    roundtrip_HG,
    validate_action,
    xi_from_fixed,
    zz_demo,
    zz_xi,
)
from pomkit.core import MonoidHom, Submonoid, constant_hom, identity_hom, members_of
from pomkit.enumeration import enumerate_actions, enumerate_monoids, enumerate_submonoids
from pomkit.errors import ActionInvalid, ConeNotRightNormal, InvalidExtension, TypeMismatch
from pomkit.pom import is_right_normal
from pomkit.schreier import ActionTable, semidirect, trivial_action
from test_schreier import all_actions

KLEIN = semidirect(Z2, Z2, trivial_action(Z2, Z2)).A


def sub(M, *xs):
    return Submonoid(M, frozenset(xs))


def action(X, B, px, pb, rows, fixed):
    P_X, P_B = sub(X, *px), sub(B, *pb)
    return PreorderedAction(X, B, P_X, P_B, ActionTable(X, B, rows),
                            xi_from_fixed(X, tuple(sorted(pb)), frozenset(fixed)))


def small_cases(sizes=(1, 2)):
    """(X, B, P_X, P_B) over monoids of the given sizes with right-normal cones."""
    mons = [m for n in sizes for m in enumerate_monoids(n)]
    for X, B in product(mons, repeat=2):
        for P_X in enumerate_submonoids(X, "right_normal"):
            for P_B in enumerate_submonoids(B, "right_normal"):
                yield X, B, P_X, P_B


def candidate_fixed_sets(X, P_B):
    pb = sorted(P_B.members)
    free = [(u, v) for u in X.elements if u != X.identity for v in pb]
    base = frozenset((X.identity, v) for v in pb)
    for mask in range(1 << len(free)):
        yield base | {free[i] for i in members_of(mask)}


class TestAxioms:
    def test_trivial_xi_with_trivial_phi(self):
        act = action(Z2, SL2, (0,), (0, 1), trivial_action(Z2, SL2).act, {(0, 0), (0, 1)})
        assert validate_action(act).ok

    def test_all_fixed(self):
        act = action(Z2, Z2, (0, 1), (0, 1), trivial_action(Z2, Z2).act,
                     set(product((0, 1), repeat=2)))
        assert validate_action(act).ok

    def test_a1(self):
        # xi moves the identity, which no canonical xi can do
        act = PreorderedAction(SL2, SL2, sub(SL2, 0), sub(SL2, 0, 1), trivial_action(SL2, SL2),
                               ((0, 1), (1, 1)))
        rep = validate_action(act)
        assert not rep.A1 and rep.A1.witness == (1,)

    def test_a2(self):
        act = action(SL2, SL2, (0, 1), (0,), trivial_action(SL2, SL2).act, {(0, 0)})
        rep = validate_action(act)
        assert not rep.A2 and rep.A2.witness == (1,)

    def test_a3_after_removing_a_closure_pair(self):
        # (1,0) and (0,1) fixed force (1,1); drop it
        act = action(SL2, SL2, (0,), (0, 1), trivial_action(SL2, SL2).act,
                     {(0, 0), (0, 1), (1, 0)})
        rep = validate_action(act)
        assert rep.A1 and rep.A2 and not rep.A3
        assert rep.A3.witness == ((0, 1), (1, 0))
        with pytest.raises(ActionInvalid) as exc:
            build_extension(act)
        assert exc.value.axiom == "A3"

    def test_cones_must_be_right_normal(self, doc):
        M = doc.monoid("ex2_3")
        with pytest.raises(ConeNotRightNormal):
            PreorderedAction(Z2, M, sub(Z2, 0), sub(M, *M.elements),
                             trivial_action(Z2, M), ((0,) * 5, (0,) * 5))

    def test_xi_shape(self):
        with pytest.raises(TypeMismatch):
            PreorderedAction(Z2, Z2, sub(Z2, 0), sub(Z2, 0), trivial_action(Z2, Z2), ((0, 0),))


class TestCanonical:
    def test_fixed_point_set(self):
        act = action(Z2, SL2, (0,), (0, 1), trivial_action(Z2, SL2).act, {(0, 0), (0, 1)})
        assert fixed_point_set(act) == {(0, 0), (0, 1)}

    def test_canonicalize(self):
        act = PreorderedAction(SL2, SL2, sub(SL2, 0), sub(SL2, 0, 1), trivial_action(SL2, SL2),
                               ((0, 0), (1, 0)))
        canon = canonicalize_xi(act)
        assert canon.xi == ((0, 0), (1, 0))
        # a non-canonical value off the fixed points
        X3 = next(m for m in enumerate_monoids(3) if m.table[1][1] == 1 and m.table[2][2] == 2
                  and m.table[1][2] == 2 and m.table[2][1] == 2)
        rows = trivial_action(X3, SL2).act
        raw = PreorderedAction(X3, SL2, sub(X3, 0), sub(SL2, 0, 1), ActionTable(X3, SL2, rows),
                               ((0, 0), (1, 2), (2, 2)))
        assert fixed_point_set(raw) == {(0, 0), (0, 1), (1, 0), (2, 0), (2, 1)}
        assert canonicalize_xi(raw).xi == ((0, 0), (1, 0), (2, 2))


class TestRoundTrips:
    def test_gh_and_hg_small(self):
        n = 0
        for X, B, P_X, P_B in small_cases():
            for act in enumerate_actions(X, B, P_X, P_B):
                cext = H_build(act)
                assert roundtrip_GH(act).ok
                rep = roundtrip_HG(cext)
                assert rep.ok, rep
                assert G_extract(cext).phi == act.phi
                n += 1
        assert n

    def test_hg_on_a_relabelled_extension(self):
        act = action(Z2, SL2, (0,), (0, 1), ((0, 1), (0, 1)), {(0, 0), (0, 1), (1, 1)})
        cext = build_extension(act)
        from test_schreier import relabel
        perm = (3, 1, 2, 0)
        e2 = relabel(cext.ext, perm)
        P_A = sub(e2.A, *(perm[a] for a in cext.P_A.members))
        moved = ConedSplitExtension(e2, cext.P_X, P_A, cext.P_B)
        rep = roundtrip_HG(moved)
        assert rep.ok
        assert rep.beta == perm
        back = extract_action(moved)
        assert fixed_point_set(back) == fixed_point_set(act)

    def test_gh_with_trivial_phi(self):
        act = action(SL2, SL2, (0,), (0, 1), trivial_action(SL2, SL2).act, {(0, 0), (0, 1)})
        assert roundtrip_GH(act).ok


class TestConedExtension:
    def test_bad_q(self):
        ext = semidirect(Z2, Z2, trivial_action(Z2, Z2)).with_q((0, 1, 0, 1))
        with pytest.raises(InvalidExtension):
            ConedSplitExtension(ext, sub(Z2, 0), sub(ext.A, 0), sub(Z2, 0))

    def test_cone_restriction(self):
        ext = semidirect(Z2, Z2, trivial_action(Z2, Z2))
        with pytest.raises(InvalidExtension) as exc:
            ConedSplitExtension(ext, sub(Z2, 0, 1), sub(ext.A, 0), sub(Z2, 0))
        assert "k" in str(exc.value)

    def test_q_found_when_missing(self):
        ext = semidirect(Z2, Z2, trivial_action(Z2, Z2))
        bare = type(ext)(ext.X, ext.A, ext.B, ext.k, ext.p, ext.s)
        cext = ConedSplitExtension(bare, sub(Z2, 0), sub(ext.A, 0), sub(Z2, 0))
        assert cext.ext.q == ext.q


class TestMorphisms:
    def setup_method(self):
        self.act = action(Z2, Z2, (0,), (0, 1), trivial_action(Z2, Z2).act, {(0, 0), (0, 1)})
        self.cext = build_extension(self.act)

    def test_identity_ext(self):
        e = self.cext.ext
        ids = (identity_hom(e.X), identity_hom(e.A), identity_hom(e.B))
        assert check_ext_morphism(*ids, self.cext, self.cext)

    def test_swapped_middle_names_k(self):
        e = self.cext.ext
        swap = MonoidHom(e.A, e.A, (0, 2, 1, 3))
        v = check_ext_morphism(identity_hom(e.X), swap, identity_hom(e.B), self.cext, self.cext)
        assert not v and v.detail == "k square" and v.witness == (1,)

    def test_p_square(self):
        e = self.cext.ext
        v = check_ext_morphism(identity_hom(e.X), identity_hom(e.A), constant_hom(e.B, e.B),
                               self.cext, self.cext)
        assert not v and v.detail == "p square" and v.witness == (1,)

    def test_cone_restriction(self):
        big = build_extension(action(Z2, Z2, (0,), (0, 1), trivial_action(Z2, Z2).act,
                                     set(product((0, 1), repeat=2))))
        e = big.ext
        ids = (identity_hom(e.X), identity_hom(e.A), identity_hom(e.B))
        assert check_ext_morphism(*ids, self.cext, big)
        v = check_ext_morphism(*ids, big, self.cext)
        assert not v and v.detail == "P_A restriction"

    def test_action_identity(self):
        res = check_action_morphism(identity_hom(Z2), identity_hom(Z2), self.act, self.act)
        assert res and res.g == {(0, 0): (0, 0), (0, 1): (0, 1)}

    def test_fixed_points_fail(self):
        big = action(Z2, Z2, (0,), (0, 1), trivial_action(Z2, Z2).act,
                     set(product((0, 1), repeat=2)))
        res = check_action_morphism(identity_hom(Z2), identity_hom(Z2), big, self.act)
        assert not res and res.verdict.detail == "fixed points"
        assert res.verdict.witness == (1, 0)

    def test_equivariance_fail(self):
        swap = action(KLEIN, Z2, (0,), (0,), ((0, 1, 2, 3), (0, 2, 1, 3)), {(0, 0)})
        triv = action(KLEIN, Z2, (0,), (0,), trivial_action(KLEIN, Z2).act, {(0, 0)})
        res = check_action_morphism(identity_hom(KLEIN), identity_hom(Z2), swap, triv)
        assert not res and res.verdict.detail == "equivariance"
        assert res.verdict.witness == (1, 1)

    def test_type_mismatch(self):
        with pytest.raises(TypeMismatch):
            check_action_morphism(identity_hom(SL2), identity_hom(Z2), self.act, self.act)


class TestRightNormalityOfCone:
    def test_a4_iff_right_normal(self):
        """Given A1-A3, A4 holds exactly when the cone of the semidirect product is
        right normal."""
        seen = {True: 0, False: 0}
        for X, B, P_X, P_B in small_cases():
            for phi in all_actions(X, B):
                ext = semidirect(X, B, phi)
                nb = B.size
                for fixed in candidate_fixed_sets(X, P_B):
                    def xi_fn(u, v, fixed=fixed):
                        return u if (u, v) in fixed else X.identity
                    rep = check_axioms(X, B, P_X, P_B, phi.act, xi_fn, fixed)
                    if not (rep.A1 and rep.A2 and rep.A3):
                        continue
                    P_A = sub(ext.A, *(x * nb + b for x, b in fixed))
                    rn = bool(is_right_normal(ext.A, P_A))
                    assert bool(rep.A4) == rn, (X, B, phi, fixed)
                    seen[rn] += 1
        assert seen[True] and seen[False]


class TestParticularCases:
    def test_cone_preserving_q_gives_product_cone(self):
        hits = 0
        for X, B, P_X, P_B in small_cases():
            for act in enumerate_actions(X, B, P_X, P_B):
                fixed = fixed_point_set(act)
                if all(u in P_X.members for u, _ in fixed):
                    assert fixed == set(product(P_X.members, P_B.members))
                    hits += 1
        assert hits

    def test_hom_q_gives_trivial_phi(self):
        hits = 0
        for X, B, _, _ in small_cases():
            for phi in all_actions(X, B):
                ext = semidirect(X, B, phi)
                q = ext.q
                is_hom = all(q[ext.A.table[a][b]] == X.table[q[a]][q[b]]
                             for a in ext.A.elements for b in ext.A.elements)
                if is_hom:
                    assert phi == trivial_action(X, B)
                    hits += 1
        assert hits

    def test_trivial_phi_can_carry_non_trivial_xi(self):
        # from the integer example: phi trivial, some (u, v) with u outside P_X fixed
        assert zz_xi(3, 5) == 3 and 3 not in {0}


class TestZZ:
    @pytest.mark.parametrize("u,v,out", [(3, 5, 3), (-2, 5, 0), (0, 0, 0), (5, 3, 0), (4, 4, 4)])
    def test_xi(self, u, v, out):
        assert zz_xi(u, v) == out

    def test_demo(self):
        rep = zz_demo(10)
        assert rep["ok"]
        assert rep["nonnegative_pairs_checked"] == 121
        assert rep["negative_pairs_checked"] == 110
        assert rep["fixed_points_in_window"] == 66

    def test_window_guard(self):
        with pytest.raises(ValueError):
            zz_demo(0)
