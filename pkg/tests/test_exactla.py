from hypothesis import given, settings, strategies as st

from hopfkit.cyclo import FieldSpec
from hopfkit.exactla import Mat, RowReducer, Subspace, kernel_sparse, linear_solve, subspace_calculus

F = FieldSpec(8)


def M(rows):
    return Mat.from_rows([[F(a) for a in r] for r in rows])


def vec(*xs):
    return tuple(F(a) for a in xs)


def test_solve_identity():
    x, K = linear_solve(Mat.identity(F, 2), vec(1, 0), F)
    assert x == vec(1, 0) and K.dim == 0


def test_solve_singular_homogeneous():
    x, K = linear_solve(M([[1, 1], [1, 1]]), vec(0, 0), F)
    assert K.dim == 1
    assert K == Subspace.from_vectors(2, [vec(1, -1)], F)


def test_solve_inconsistent():
    x, _ = linear_solve(M([[1, 1], [1, 1]]), vec(1, 0), F)
    assert x is None


def test_subspace_examples():
    U = Subspace.from_vectors(3, [vec(1, 0, 0)], F)
    V = Subspace.from_vectors(3, [vec(0, 1, 0)], F)
    assert subspace_calculus(U, V, "sum", F).dim == 2
    W = Subspace.from_vectors(2, [vec(1, 0)], F)
    assert W.annihilator(F) == Subspace.from_vectors(2, [vec(0, 1)], F)
    Z = Subspace.zero(2)
    assert Z.preimage_under(M([[1, 1], [0, 0]]), F) == Subspace.from_vectors(2, [vec(1, -1)], F)


def test_intersection_and_image():
    U = Subspace.from_vectors(3, [vec(1, 0, 0), vec(0, 1, 0)], F)
    V = Subspace.from_vectors(3, [vec(0, 1, 0), vec(0, 0, 1)], F)
    assert U.intersect(V, F) == Subspace.from_vectors(3, [vec(0, 1, 0)], F)
    P = M([[0, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert U.image_under(P, F).dim == 1


def test_inverse():
    A = M([[1, 2], [3, 4]])
    assert (A @ A.inverse(F)).is_identity()


def test_sparse_kernel():
    K = kernel_sparse([{0: F(1), 1: F(1)}], 3, F)
    assert K.dim == 2
    red = RowReducer(3)
    assert red.add(vec(1, 1, 0)) and not red.add(vec(2, 2, 0))


entries = st.integers(min_value=-3, max_value=3)


def matrices(m, n):
    return st.lists(st.lists(entries, min_size=n, max_size=n), min_size=m, max_size=m).map(M)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda m: st.integers(1, 4).flatmap(lambda n: matrices(m, n))))
def test_rank_nullity(A):
    assert A.image(F).dim + A.kernel(F).dim == A.ncols
    for v in A.kernel(F).basis:
        assert not any(A.apply(v))


@settings(max_examples=40, deadline=None)
@given(matrices(3, 4), matrices(3, 3))
def test_canonical_rref(A, G):
    U = Subspace.from_vectors(4, A.rows, F)
    # another spanning set of the same space: invertible recombinations
    if G.rank() == 3:
        rows = [tuple(sum((G[i, k] * A[k, j] for k in range(3)), F.zero()) for j in range(4)) for i in range(3)]
        assert Subspace.from_vectors(4, rows, F) == U
        assert Subspace.from_vectors(4, rows, F).basis == U.basis


@settings(max_examples=40, deadline=None)
@given(matrices(2, 4), matrices(4, 4))
def test_double_annihilator(A, P):
    U = Subspace.from_vectors(4, A.rows, F)
    assert U.annihilator(F).annihilator(F) == U
    if P.rank() == 4:
        assert U.annihilator(F, pairing=P).annihilator(F, pairing=P.transpose()) == U
