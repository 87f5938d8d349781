import random

import pytest

from thompoly.chern import BundleRing, expand_product_schur
from thompoly.errors import BoxOverflow, BoxTooSmall, RingMismatch
from thompoly.grassmannian import (
    GrassmannRing,
    extract_all,
    extract_coefficient,
    giambelli,
    integrate,
    schubert_multiply,
)
from thompoly.partitions import Partition, box_complement, partitions_in_box

from conftest import random_homogeneous

SMALL_BOXES = [(m, n) for m in range(1, 10) for n in range(1, 10) if m * n <= 9]


def test_line_square():
    G = GrassmannRing([(1, 2)])
    s1 = G.schubert((1,))
    assert s1 * s1 == G.schubert((2,))
    assert (G.schubert((2,)) * s1).is_zero()


def test_unit():
    G = GrassmannRing([(2, 2)])
    a = G.schubert((2, 1)) * 3 + G.schubert((1,))
    assert G.unit() * a == a


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        schubert_multiply(GrassmannRing([(1, 2)]).unit(), GrassmannRing([(2, 1)]).unit())


def test_complementary_pair_two_by_three():
    G = GrassmannRing([(2, 3)])
    I = Partition((2, 1))
    assert integrate(G.schubert(I) * G.schubert(box_complement(I, 2, 3))) == 1


def test_non_complementary_pair():
    G = GrassmannRing([(2, 2)])
    # (2) is its own complement in the 2x2 box; (1,1) is the other class of codimension 2.
    assert box_complement((2,), 2, 2) == Partition((2,))
    assert integrate(G.schubert((2,)) * G.schubert((2,))) == 1
    assert integrate(G.schubert((2,)) * G.schubert((1, 1))) == 0


def test_integrate_below_top_degree():
    G = GrassmannRing([(2, 2)])
    assert integrate(G.schubert((2, 1))) == 0


@pytest.mark.parametrize("m, n", SMALL_BOXES)
def test_pairing_is_permutation_matrix(m, n):
    G = GrassmannRing([(m, n)])
    box = partitions_in_box(m, n)
    for I in box:
        row = [J for J in box if J.weight == m * n - I.weight]
        values = {J: integrate(G.schubert(I) * G.schubert(J)) for J in row}
        assert values == {J: int(J == box_complement(I, m, n)) for J in row}


def test_product_of_two_factors_integrates_to_product():
    G = GrassmannRing([(1, 2), (2, 1)])
    top = G.schubert((2,), (1, 1))
    assert integrate(top) == 1
    assert integrate(G.schubert((1,), (1,)) * G.schubert((1,), (1,))) == 1


@pytest.mark.parametrize("m, n", [(1, 3), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_giambelli_reproduces_basis(m, n):
    G = GrassmannRing([(m, n)])
    for I in partitions_in_box(m, n):
        assert giambelli(I, G) == G.schubert(I)


def test_giambelli_examples():
    G = GrassmannRing([(2, 3)])
    assert giambelli((1,), G) == G.schubert((1,))
    assert giambelli((2, 1), G) == G.schubert((2, 1))
    assert giambelli((), G) == G.unit()
    with pytest.raises(BoxOverflow):
        giambelli((4,), G)


def test_schubert_class_outside_box():
    with pytest.raises(BoxOverflow):
        GrassmannRing([(2, 2)]).schubert((3,))


# -- geometric coefficient extraction ----------------------------------------------------------

def test_extract_single_box():
    R = BundleRing([("E", 2)])
    assert extract_coefficient(R.c(1, "E"), [(1,)]) == 1


def test_extract_column():
    R = BundleRing([("E", 2)])
    assert extract_coefficient(R.c(2, "E"), [(1, 1)]) == 1
    assert extract_coefficient(R.c(2, "E"), [(2,)]) == 0


def test_extract_zero():
    R = BundleRing([("E", 2), ("F", 1)])
    for key in [((), ()), ((1,), ()), ((1, 1), (2,))]:
        assert extract_coefficient(R.zero(), key, heights=4) == 0


def test_extract_needs_tall_enough_boxes():
    R = BundleRing([("E", 2)])
    with pytest.raises(BoxTooSmall):
        extract_coefficient(R.c(1, "E") ** 3, [(3,)], heights=2)


@pytest.mark.parametrize("seed", range(30))
def test_extraction_matches_basis_change(seed):
    rng = random.Random(1000 + seed)
    P = random_homogeneous(rng, max_rank=3, max_degree=5)
    assert extract_all(P, heights=5) == expand_product_schur(P).terms
