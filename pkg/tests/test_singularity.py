import pytest
from hypothesis import given

from hyperent.hyperdet import det_2x2x2, det_3x2x2
from hyperent.linalg import Matrix
from hyperent.scalars import GaussianRational as G
from hyperent.singularity import (
    NotCriticalError,
    format_pattern,
    hessian_det,
    hessian_matrix,
    is_critical_point,
    node1_membership_3x2x2,
    node_membership_3qubit,
    separability_pattern,
    xo_point,
    xo_section_member,
)
from hyperent.tensor import FormatError, LocalOperation, apply_local, ket, segre_product

from conftest import tensors

E0, E1 = (1, 0), (0, 1)


def test_w_critical_point(w3):
    x = (E1, E1, E1)
    assert is_critical_point(w3, x)
    assert hessian_det(w3, x) == 0
    assert hessian_matrix(w3, x, chart=True) == Matrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    assert hessian_det(w3, x, chart=True) == 2


def test_ghz_has_no_critical_point_on_basis(ghz3):
    for x in [(E0, E0, E0), (E1, E1, E1), (E0, E1, E1), (E1, E0, E0)]:
        assert not is_critical_point(ghz3, x)
    with pytest.raises(NotCriticalError):
        hessian_matrix(ghz3, (E0, E0, E0))
    with pytest.raises(ValueError):
        is_critical_point(ghz3, (E0, (0, 0), E0))


def test_hessian_at_xo_uses_coordinates_one_to_k():
    # Det = 0 state with a quadratic critical point at x° = (e0, e0, e0)
    a = ket("011", "101", "110", "111")
    x = xo_point(a.dims, {1, 2, 3})
    assert x == ((G(1), G(0)),) * 3
    assert is_critical_point(a, x)
    assert hessian_matrix(a, x) == hessian_matrix(a, x, chart=True)
    assert hessian_det(a, x) == 2
    assert det_2x2x2(a) == 0


@given(tensors((2, 2, 2)))
def test_section_member_is_critical_at_xo(a):
    for js in [set(), {1}, {2, 3}, {1, 2, 3}]:
        if xo_section_member(a, js):
            assert is_critical_point(a, xo_point(a.dims, js))


def test_critical_point_moves_with_local_action(w3):
    g = LocalOperation([[[1, 2], [0, 1]], [[1, 0], [3, 1]], [[2, 1], [1, 1]]])
    b = apply_local(w3, g)
    # F(gA, x) = F(A, g^T x): critical points pull back through g^T
    ginv_t = LocalOperation([[[1, 0], [-2, 1]], [[1, -3], [0, 1]], [[1, -1], [-1, 2]]])
    x = tuple(m.apply(E1) for m in ginv_t.matrices)
    assert is_critical_point(b, x)


def test_node_membership_3qubit(ghz3, w3):
    reps = {
        "GHZ": (ghz3, ()),
        "W": (w3, ()),
        "B1": (ket("001", "010"), (1,)),
        "B2": (ket("001", "100"), (2,)),
        "B3": (ket("010", "100"), (3,)),
        "SEP": (ket("000"), (1, 2, 3)),
    }
    for name, (a, separated) in reps.items():
        for j in (1, 2, 3):
            assert node_membership_3qubit(a, j) == (j in separated), (name, j)
    with pytest.raises(FormatError):
        node_membership_3qubit(ket("0000"), 1)


def test_node1_membership_3x2x2():
    k = lambda *labels: ket(*labels, dims=(3, 2, 2))  # noqa: E731
    assert not node1_membership_3x2x2(k("000", "101", "110", "211"))
    assert not node1_membership_3x2x2(k("000", "101", "211"))
    for labels in [("000", "111"), ("001", "010", "100"), ("001", "100"), ("010", "100"), ("001", "010"), ("000",)]:
        a = k(*labels)
        assert node1_membership_3x2x2(a)
        assert det_3x2x2(a) == 0


def test_separability_pattern(ghz3):
    assert separability_pattern(ghz3) == ((1, 2, 3),)
    assert separability_pattern(ket("001", "010")) == ((1,), (2, 3))
    assert separability_pattern(ket("000")) == ((1,), (2,), (3,))
    assert separability_pattern(ket("0000", "0011", "1100", "1111")) == ((1, 2), (3, 4))
    assert separability_pattern(ket("0000", "0101", "1010", "1111")) == ((1, 3), (2, 4))
    prod = segre_product(((1, 2), (1, 1), (0, 1), (3, 1)))
    assert separability_pattern(prod) == ((1,), (2,), (3,), (4,))
    assert format_pattern(((1,), (2, 3))) == "{1}{2,3}"
    with pytest.raises(ValueError):
        separability_pattern(ghz3.scale(0))
