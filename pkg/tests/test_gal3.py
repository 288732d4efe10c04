import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from galcurves.gal3 import GVec3, VectorClass, classify, cross, dot, norm

finite = st.floats(-1e3, 1e3, allow_nan=False, allow_infinity=False)
nonzero = finite.filter(lambda x: x != 0.0)
vectors = st.builds(GVec3, finite, finite, finite)
isotropic = st.builds(GVec3, st.just(0.0), finite, finite)
non_isotropic = st.builds(GVec3, nonzero, finite, finite)


def test_dot_examples():
    assert dot(GVec3(1, 2, 3), GVec3(2, 5, 7)) == 2
    assert dot(GVec3(0, 3, 4), GVec3(0, 1, 2)) == 11
    assert dot(GVec3(0, 3, 4), GVec3(0, 3, 4)) == 25


def test_dot_uses_first_branch_if_either_is_non_isotropic():
    assert dot(GVec3(0, 3, 4), GVec3(2, 5, 7)) == 0


def test_cross_examples():
    assert cross(GVec3(1, 0, 0), GVec3(0, 1, 0)) == GVec3(0, 0, 1)
    assert cross(GVec3(1, 0, -2), GVec3(0, 1, 0)) == GVec3(0, 0, 1)
    assert cross(GVec3(0, 1, 0), GVec3(0, 0, 1)) == GVec3(1, 0, 0)


def test_norm_examples():
    assert norm(GVec3(3, 4, 5)) == 3
    assert norm(GVec3(0, 3, 4)) == 5
    assert norm(GVec3(-2, 7, 1)) == 2
    assert norm(GVec3(0, 0, 0)) == 0


def test_classify_examples():
    assert classify(GVec3(1, 2, 3)) is VectorClass.NON_ISOTROPIC
    assert classify(GVec3(0, 1, 1)) is VectorClass.ISOTROPIC
    assert classify(GVec3(0, 0, 0)) is VectorClass.ISOTROPIC


@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
def test_rejects_non_finite(bad):
    with pytest.raises(ValueError):
        GVec3(bad, 0, 0)


def test_branch_is_exact():
    tiny = GVec3(1e-300, 3, 4)
    assert classify(tiny) is VectorClass.NON_ISOTROPIC
    assert norm(tiny) == 1e-300


@given(isotropic, isotropic)
def test_isotropic_branch_is_euclidean(p, q):
    assert dot(p, q) == p.x2 * q.x2 + p.x3 * q.x3
    c = cross(p, q)
    assert c.x1 == p.x2 * q.x3 - p.x3 * q.x2
    assert c.x2 == p.x3 * q.x1 - p.x1 * q.x3
    assert c.x3 == p.x1 * q.x2 - p.x2 * q.x1


@given(vectors)
def test_norm_squared_is_self_dot(p):
    assert norm(p) ** 2 == pytest.approx(dot(p, p), rel=1e-12, abs=1e-300)


@given(vectors, vectors)
def test_cross_antisymmetric(p, q):
    assert cross(p, q) == -cross(q, p)


@given(non_isotropic, vectors)
def test_cross_with_non_isotropic_is_isotropic(p, q):
    assert classify(cross(p, q)) is VectorClass.ISOTROPIC


@given(isotropic, isotropic)
def test_isotropic_cross_orthogonal_to_operand(p, q):
    assert dot(cross(p, q), q) == 0.0
    assert dot(cross(p, q), p) == 0.0
