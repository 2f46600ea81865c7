import pytest
from hypothesis import given

from hyperent.linalg import Matrix
from hyperent.scalars import GaussianRational as G
from hyperent.tensor import (
    FormatError,
    LocalOperation,
    Tensor,
    TensorFormat,
    apply_local,
    flatten,
    gradient,
    ket,
    multilinear_eval,
    pairing,
    segre_product,
)

from conftest import gaussian_ints, tensors


def test_format_properties():
    assert TensorFormat((2, 2, 2)).is_interior
    assert TensorFormat((3, 2, 2)).is_boundary
    assert TensorFormat((2, 2, 2, 2)).hyperdet_exists
    assert not TensorFormat((4, 2, 2)).hyperdet_exists
    assert TensorFormat((2, 3, 2)).canonical_permutation() == (1, 0, 2)
    with pytest.raises(FormatError):
        TensorFormat((2, 1, 2))
    with pytest.raises(FormatError):
        TensorFormat(())


def test_entries_are_row_major():
    a = Tensor((2, 3), range(6))
    assert a[1, 0] == G(3)
    assert a[0, 2] == G(2)
    with pytest.raises(FormatError):
        Tensor((2, 2), [1, 2, 3])


def test_flatten_layout():
    a = Tensor((2, 2, 2), range(8))
    assert flatten(a, {1}).tolist() == [[G(i) for i in range(4)], [G(i) for i in range(4, 8)]]
    assert flatten(a, {2}).tolist() == [[G(0), G(1), G(4), G(5)], [G(2), G(3), G(6), G(7)]]
    assert flatten(a, {2, 3}) == flatten(a, {1}).T
    with pytest.raises(FormatError):
        flatten(a, {1, 2, 3})
    with pytest.raises(FormatError):
        flatten(a, {4})


def test_permute():
    a = ket("001", dims=(2, 2, 2))
    assert a.permute((2, 0, 1)) == ket("100")
    b = ket("210", dims=(3, 2, 2))
    assert b.permute((1, 2, 0)) == ket("102", dims=(2, 2, 3))


def test_apply_local_on_party():
    ghz = ket("000", "111")
    op = LocalOperation.on_party(ghz.format, 3, Matrix([[1, 1], [0, 0]]))
    assert apply_local(ghz, op) == ket("000", "110")
    with pytest.raises(FormatError):
        apply_local(ket("000", dims=(3, 2, 2)), LocalOperation.identity(ghz.format))


@given(tensors((2, 2, 2)))
def test_identity_action(a):
    assert apply_local(a, LocalOperation.identity(a.format)) == a


@given(tensors((2, 2, 2)), tensors((2, 2, 2)))
def test_action_is_linear_and_transposes_in_pairing(a, b):
    op = LocalOperation([[[1, 2], [0, 1]], [[G(0, 1), 1], [1, 0]], [[2, 0], [1, -1]]])
    assert apply_local(a + b, op) == apply_local(a, op) + apply_local(b, op)
    assert pairing(apply_local(a, op), b) == pairing(a, apply_local(b, op.transpose()))


def test_action_composes():
    a = Tensor((2, 2, 2), range(1, 9))
    g = LocalOperation([[[1, 2], [3, 4]], [[0, 1], [1, 1]], [[2, 1], [1, 1]]])
    h = LocalOperation([[[1, 0], [1, 1]], [[1, -1], [0, 1]], [[G(0, 1), 0], [0, 1]]])
    gh = LocalOperation([gm @ hm for gm, hm in zip(g.matrices, h.matrices)])
    assert apply_local(apply_local(a, h), g) == apply_local(a, gh)


def test_multilinear_eval_and_gradient():
    w = ket("001", "010", "100")
    e0, e1 = (1, 0), (0, 1)
    assert multilinear_eval(w, (e0, e0, e0)) == G(0)
    assert gradient(w, (e0, e0, e0)) == ((G(0), G(1)),) * 3
    assert gradient(w, (e1, e1, e1)) == ((G(0), G(0)),) * 3
    x = ((1, 2), (3, 4), (G(0, 1), 1))
    assert multilinear_eval(w, x) == 3 + 4 * G(0, 1) + 6 * G(0, 1)


@given(tensors((2, 2, 2)), gaussian_ints, gaussian_ints, gaussian_ints)
def test_euler_identity(a, p, q, r):
    # F is linear in each party vector: x_j . dF/dx_j == F
    x = ((1, p), (q, 1), (r, 2))
    f = multilinear_eval(a, x)
    grads = gradient(a, x)
    for j, vec in enumerate(x):
        assert sum((G.coerce(c) * g for c, g in zip(vec, grads[j])), G(0)) == f


def test_segre_product():
    t = segre_product(((1, 2), (0, 1), (3, 0, 1)))
    assert t.dims == (2, 2, 3)
    assert t[1, 1, 0] == G(6)
    assert multilinear_eval(ket("000", "111"), ((1, 2), (1, 1), (1, 1))) == pairing(
        ket("000", "111"), segre_product(((1, 2), (1, 1), (1, 1)))
    )
    with pytest.raises(ValueError):
        segre_product(((0, 0), (1, 0)))
