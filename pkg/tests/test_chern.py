import random
from math import comb

import pytest

from thompoly.chern import (
    ZERO,
    BundleRing,
    a1_thom,
    a1_thom_segre_side,
    chern_class,
    chern_series,
    direct_sum,
    dual,
    expand_product_schur,
    giambelli_chern,
    jets,
    roots_to_chern,
    segre_series,
    stable_expand,
    super_schur,
    sym_power,
    tensor,
    tensor_line,
    verify_a1_identity,
    virtual_chern_class,
)
from thompoly.errors import DegreeOverflow, NotSupersymmetric, RankOrder
from thompoly.partitions import Partition, partitions_of
from thompoly.polynomial import elementary

from conftest import random_homogeneous


@pytest.fixture
def ring():
    return BundleRing([("E", 2), ("F", 3), ("L", 1)])


def test_ring_variables_and_weights():
    R = BundleRing([("E", 2), ("L", 1)])
    assert R.names == ("c1(E)", "c2(E)", "c1(L)")
    assert R.weights == (1, 2, 1)
    assert R.c(3, "E").is_zero() and R.c(0, "E") == 1


def test_ranks_of_constructors(ring):
    E, F, L = (ring.bundle(n) for n in "EFL")
    assert dual(E).rank == 2
    assert direct_sum(E, F).rank == 5
    assert sym_power(F, 2).rank == comb(4, 2)
    assert jets(E, F, 2).rank == 3 * (2 + 3)
    assert tensor_line(F, L).rank == 3


def test_c1_of_dual(ring):
    E = ring.bundle("E")
    assert chern_class(dual(E), 1, ring) == -ring.c(1, "E")


def test_c1_sym_square_rank_two():
    R = BundleRing([("E", 2)])
    assert chern_class(sym_power(R.bundle("E"), 2), 1, R) == 3 * R.c(1, "E")


@pytest.mark.parametrize("m", [1, 2, 3])
def test_c1_tensor_line(m):
    R = BundleRing([("E", m), ("L", 1)])
    B = tensor_line(R.bundle("E"), R.bundle("L"))
    assert chern_class(B, 1, R) == R.c(1, "E") + m * R.c(1, "L")


def test_chern_class_overflow(ring):
    with pytest.raises(DegreeOverflow):
        chern_class(ring.bundle("E"), 3, ring)


def test_chern_classes_from_explicit_roots(ring):
    # Sym^2 of a rank-2 bundle has roots 2a, a+b, 2b.
    R = BundleRing([("E", 2)])
    a, b = R.roots.gens()
    roots = [2 * a, a + b, 2 * b]
    for i in range(4):
        expected = roots_to_chern(R, elementary(roots, i, R.roots.one()))
        assert chern_class(sym_power(R.bundle("E"), 2), i, R) == expected
    assert chern_class(sym_power(R.bundle("E"), 2), 2, R) == 2 * R.c(1, "E") ** 2 + 4 * R.c(2, "E")


def test_roots_to_chern_rejects_non_symmetric():
    R = BundleRing([("E", 2)])
    a, _ = R.roots.gens()
    with pytest.raises(ValueError):
        roots_to_chern(R, a)


def test_jets_are_sym_powers_of_dual_tensored():
    R = BundleRing([("E", 2), ("F", 1)])
    E, F = R.bundle("E"), R.bundle("F")
    manual = tensor(direct_sum(dual(E), sym_power(dual(E), 2)), F)
    for i in range(4):
        assert chern_class(jets(E, F, 2), i, R) == chern_class(manual, i, R)


def test_whitney_sum_formula():
    rng = random.Random(7)
    for _ in range(10):
        R = BundleRing([("A", rng.randint(0, 3)), ("B", rng.randint(0, 3))])
        A, B = R.bundle("A"), R.bundle("B")
        top = A.rank + B.rank
        total = chern_series(direct_sum(A, B), R, top)
        cA, cB = chern_series(A, R, top), chern_series(B, R, top)
        for k in range(top + 1):
            assert total[k] == sum((cA[j] * cB[k - j] for j in range(k + 1)), R.zero())


# -- Segre series ---------------------------------------------------------------------

def test_segre_of_bundle_minus_itself_is_unit(ring):
    E = ring.bundle("E")
    s = segre_series(E, E, ring, 5)
    assert s[0] == 1 and all(s[k].is_zero() for k in range(1, 6))


def test_segre_of_line_bundle_is_geometric(ring):
    L = ring.bundle("L")
    s = segre_series(L, ZERO, ring, 5)
    assert [s[k] for k in range(6)] == [ring.c(1, "L") ** k for k in range(6)]


def test_segre_of_negative_line_bundle(ring):
    L = ring.bundle("L")
    s = segre_series(ZERO, L, ring, 4)
    assert s[0] == 1 and s[1] == -ring.c(1, "L")
    assert all(s[k].is_zero() for k in range(2, 5))


def test_segre_rejects_past_working_degree():
    R = BundleRing([("E", 2)], degree=3)
    with pytest.raises(DegreeOverflow):
        segre_series(R.bundle("E"), ZERO, R, 4)


# -- super Schur functions ---------------------------------------------------------------

def test_super_schur_column_is_top_chern(ring):
    assert super_schur((1, 1), ring.bundle("E"), ZERO, ring) == ring.c(2, "E")


def test_super_schur_of_zero_difference(ring):
    E = ring.bundle("E")
    assert super_schur((1,), E, E, ring).is_zero()


def test_single_row_reads_segre(ring):
    E, F = ring.bundle("E"), ring.bundle("F")
    s = segre_series(E, F, ring, 6)
    for i in range(7):
        assert super_schur((i,), E, F, ring) == s[i]


def test_super_schur_matches_giambelli(ring):
    for w in range(6):
        for I in partitions_of(w):
            for name in "EF":
                B = ring.bundle(name)
                if len(I) <= B.rank:
                    assert super_schur(I, B, ZERO, ring) == giambelli_chern(I, B, ring)
                else:
                    assert super_schur(I, B, ZERO, ring).is_zero()


@pytest.mark.parametrize("ranks", [(1, 1), (2, 1), (2, 3), (3, 3)])
def test_duality_sign_law(ranks):
    R = BundleRing([("E", ranks[0]), ("F", ranks[1])])
    E, F = R.bundle("E"), R.bundle("F")
    for w in range(6):
        for I in partitions_of(w):
            lhs = super_schur(I, dual(E), dual(F), R)
            assert lhs == super_schur(I, E, F, R) * (-1) ** w


def test_super_schur_homogeneous(ring):
    E, F = ring.bundle("E"), ring.bundle("F")
    for I in partitions_of(4):
        p = super_schur(I, E, F, ring)
        assert p.is_zero() or p.degrees() == {4}


# -- product Schur expansions --------------------------------------------------------------

def test_expand_riemann_hurwitz():
    R = BundleRing([("E", 2), ("F", 2)])
    exp = expand_product_schur(R.c(1, "F") - R.c(1, "E"), {"E"})
    assert exp.terms == {(Partition((1,)), Partition()): 1, (Partition(), Partition((1,))): 1}


def test_expand_one():
    R = BundleRing([("E", 2), ("F", 2)])
    assert expand_product_schur(R.one()).terms == {(Partition(), Partition()): 1}


def test_expand_c2_is_column():
    R = BundleRing([("E", 2), ("F", 2)])
    assert expand_product_schur(R.c(2, "E")).terms == {(Partition((1, 1)), Partition()): 1}


@pytest.mark.parametrize("seed", range(40))
def test_expand_round_trip(seed):
    rng = random.Random(seed)
    P = random_homogeneous(rng, max_rank=3, max_degree=6)
    for variance in [(False, False), (True, False), (False, True), (True, True)]:
        exp = expand_product_schur(P, variance)
        assert exp.evaluate() == P


def test_expansion_basis_is_unique():
    R = BundleRing([("E", 2), ("F", 1)])
    seen = {}
    for d in range(5):
        for I in partitions_of(d):
            if len(I) > 2:
                continue
            p = super_schur(I, R.bundle("E"), ZERO, R)
            exp = expand_product_schur(p)
            assert exp.terms == {(I, Partition()): 1}
            seen[I] = p
    assert len(set(seen.values())) == len(seen)


# -- stable expansions and the first-order Thom polynomial ----------------------------------

def test_a1_equal_ranks():
    for m in range(1, 4):
        P = a1_thom(m, m)
        assert P == P.ring.c(1, "F") - P.ring.c(1, "E")


def test_a1_one_two():
    P = a1_thom(1, 2)
    R = P.ring
    e, f1, f2 = R.c(1, "E"), R.c(1, "F"), R.c(2, "F")
    assert P == f2 - e * f1 + e ** 2


def test_a1_rank_order():
    with pytest.raises(RankOrder):
        a1_thom(3, 2)


@pytest.mark.parametrize("m, n", [(1, 1), (2, 3), (3, 3), (1, 4), (2, 5)])
def test_verify_a1_identity(m, n):
    assert verify_a1_identity(m, n)
    P = a1_thom(m, n)
    assert P.degrees() == {n - m + 1}


def test_stable_expand_equal_ranks():
    for m in range(1, 4):
        assert stable_expand(a1_thom(m, m)) == {(1,): 1}


def test_stable_expand_codim_two():
    assert stable_expand(a1_thom(2, 3)) == {(2,): 1}


def test_stable_expand_not_supersymmetric():
    R = BundleRing([("E", 2), ("F", 2)])
    with pytest.raises(NotSupersymmetric):
        stable_expand(R.c(1, "E") + R.c(1, "F"))


@pytest.mark.parametrize("m, n", [(1, 1), (1, 2), (2, 1), (2, 2), (2, 3)])
def test_stable_expand_recovers_every_supersymmetric_basis_element(m, n):
    R = BundleRing([("E", m), ("F", n)])
    Es, Fs = dual(R.bundle("E")), dual(R.bundle("F"))
    for d in range(1, 5):
        for I in partitions_of(d):
            P = super_schur(I, Es, Fs, R)
            if P.is_zero():
                continue
            assert stable_expand(P) == {I: 1}
            combo = P * 3 - super_schur((d,), Es, Fs, R)
            expected = {I: 3}
            expected[Partition((d,))] = expected.get(Partition((d,)), 0) - 1
            assert stable_expand(combo) == {k: v for k, v in expected.items() if v}


def test_stable_expand_rejects_inhomogeneous():
    R = BundleRing([("E", 1), ("F", 1)])
    with pytest.raises(ValueError):
        stable_expand(R.c(1, "E") + R.c(1, "F") ** 2)


def test_virtual_chern_class_matches_segre_of_duals():
    R = BundleRing([("E", 2), ("F", 3)])
    E, F = R.bundle("E"), R.bundle("F")
    for i in range(6):
        assert virtual_chern_class(F, E, i, R) == super_schur((i,), dual(E), dual(F), R)


def test_segre_side_of_a1_uses_dual_segre_classes():
    R = BundleRing([("E", 1), ("F", 2)])
    e = R.c(1, "E")
    # S_j(E*) for a line bundle E is (-c1(E))^j
    assert a1_thom_segre_side(1, 2, R) == e ** 2 - e * R.c(1, "F") + R.c(2, "F")
