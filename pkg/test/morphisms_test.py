from fractions import Fraction

import pytest

from jordkit.algebra import GradedSubspace, make_dt
from jordkit.errors import AlgebraMismatchError, DimensionMismatchError
from jordkit.linalg import Matrix
from jordkit.morphisms import (
    ISO_IMAGES,
    SWAP_HAT,
    Morphism,
    OrthogonalMap,
    WreathElement,
    benkart_elduque_iso,
    block_map,
    conjugate,
    grading_automorphism,
    image_subspace,
    is_automorphism,
    is_homomorphism,
    is_isomorphism,
    lift_orthogonal_to_aut,
    lift_sp_to_k3,
    phi,
    psi,
    random_symplectic,
    random_wreath,
    swap_automorphism,
    tensor_action,
    wreath_compose,
    wreath_invert,
)
from jordkit.utils import SeededSampler


@pytest.fixture(scope="module")
def wreaths():
    root = SeededSampler(11)
    return [random_wreath(root.split(k)) for k in range(6)]


# Test the Morphism container
def test_morphism_validation(k10, tensor):
    with pytest.raises(DimensionMismatchError):
        Morphism(k10, tensor, Matrix.identity(9))
    mixed = [list(col) for col in Matrix.identity(10).row_list()]
    mixed[0][6] = 1
    with pytest.raises(ValueError):
        Morphism(k10, k10, Matrix.from_columns(mixed))
    with pytest.raises(AlgebraMismatchError):
        Morphism.identity(k10)(tensor["1"])


def test_identity_and_grading(k10):
    identity = Morphism.identity(k10)
    assert identity(k10["p1"]) == k10["p1"]
    tau = grading_automorphism(k10)
    assert tau(k10["p1"]) == -k10["p1"]
    assert tau(k10["a"]) == k10["a"]
    assert is_automorphism(tau)
    assert tau.compose(tau) == identity


def test_non_homomorphism_is_reported(k10):
    scaled = Morphism(k10, k10, 2 * Matrix.identity(10))
    report = is_homomorphism(scaled)
    assert not report.passed
    assert report.checked == 100
    assert not is_isomorphism(scaled)


def test_block_map():
    d = make_dt(-3)
    f = Matrix.from_rows([[2, 1], [1, 1]])
    m = block_map(d, f, (2, 3))
    assert m(d["u"]) == 2 * d["u"] + d["v"]
    assert m(d["e"]) == d["e"]
    assert is_automorphism(m)
    assert not is_automorphism(block_map(d, 2 * Matrix.identity(2), (2, 3)))
    with pytest.raises(DimensionMismatchError):
        block_map(d, f, (1, 2, 3))


# Test the isomorphism with the tensor model
def test_benkart_elduque_iso(k10, tensor, iso):
    assert iso.source is k10 and iso.target is tensor
    assert is_homomorphism(iso).passed
    assert iso.matrix.determinant() != 0
    assert iso(k10["e"] + k10["f"]) == tensor["1"]
    for label, image in ISO_IMAGES.items():
        assert iso(k10[label]) == tensor.parse_element(image)


def test_iso_pullback_of_unit(k10, tensor, iso):
    assert iso.inverse()(tensor["1"]) == k10["e"] + k10["f"]
    assert iso.inverse().compose(iso) == Morphism.identity(k10)


def test_iso_on_fresh_algebras():
    from jordkit.algebra import make_k10_table, make_k10_tensor

    m = benkart_elduque_iso(make_k10_table(), make_k10_tensor())
    assert is_isomorphism(m)


# Test the automorphisms of the tensor model
def test_swap_automorphism(tensor):
    delta = swap_automorphism()
    assert delta(tensor["xy"]) == -tensor["yx"]
    assert delta(tensor["xx"]) == -tensor["xx"]
    assert delta.compose(delta) == Morphism.identity(tensor)
    assert is_automorphism(delta)


@pytest.mark.parametrize("label, image", [
    ("1", "1"),
    ("ee", "ee"),
    ("ex", "xe"),
    ("ey", "ye"),
    ("ye", "ey"),
])
def test_swap_with_an_even_factor(tensor, label, image):
    assert swap_automorphism()(tensor[label]) == tensor[image]


def test_swap_is_the_lift_of_swap_hat():
    delta = swap_automorphism()
    assert psi(delta) == OrthogonalMap(SWAP_HAT)
    assert lift_orthogonal_to_aut(OrthogonalMap(SWAP_HAT)) == delta


def test_lift_sp_to_k3(k3):
    f = Matrix.from_rows([[1, 2], [0, 1]])
    m = lift_sp_to_k3(f)
    assert m(k3["y"]) == 2 * k3["x"] + k3["y"]
    assert is_automorphism(m)
    with pytest.raises(ValueError):
        lift_sp_to_k3(Matrix.diagonal([2, 2]))


def test_tensor_action_is_automorphism(tensor):
    f = Matrix.from_rows([[1, 1], [0, 1]])
    g = Matrix.from_rows([[2, 0], [3, Fraction(1, 2)]])
    m = tensor_action(f, g)
    assert is_automorphism(m)
    assert m(tensor["1"]) == tensor["1"]
    assert m(tensor["ee"]) == tensor["ee"]


def test_phi_is_a_homomorphism(wreaths):
    for w1, w2 in zip(wreaths, wreaths[1:]):
        assert phi(w1 * w2) == phi(w1).compose(phi(w2))


def test_phi_of_central_element_is_tau(tensor):
    minus = WreathElement(-Matrix.identity(2), -Matrix.identity(2))
    assert phi(minus) == grading_automorphism(tensor)


def test_swap_conjugates_tensor_actions(wreaths):
    delta = swap_automorphism()
    for w in wreaths:
        left = delta.compose(tensor_action(w.f, w.g)).compose(delta)
        assert left == tensor_action(w.g, w.f)


# Test the wreath product
def test_wreath_rejects_non_symplectic():
    with pytest.raises(ValueError):
        WreathElement(Matrix.diagonal([2, 1]), Matrix.identity(2))


def test_wreath_group_laws(wreaths):
    identity = WreathElement.identity()
    for w in wreaths:
        assert w * identity == w
        assert identity * w == w
        assert w * wreath_invert(w) == identity
    a, b, c = wreaths[:3]
    assert (a * b) * c == a * (b * c)


def test_wreath_swap_relation():
    f = Matrix.from_rows([[1, 1], [0, 1]])
    g = Matrix.from_rows([[1, 0], [2, 1]])
    epsilon = WreathElement(Matrix.identity(2), Matrix.identity(2), True)
    assert wreath_compose(WreathElement(f, g), epsilon) == wreath_compose(
        epsilon, WreathElement(g, f)
    )


def test_wreath_from_entries():
    w = WreathElement.from_entries("1,1,0,1", "1,0,-2,1", swap=True)
    assert w.f == Matrix.from_rows([[1, 1], [0, 1]])
    assert w.swap
    assert w.negated().equal_up_to_sign(w)
    with pytest.raises(ValueError):
        WreathElement.from_entries("1,1,0", "1,0,0,1")


def test_random_symplectic_is_deterministic():
    first = [random_symplectic(SeededSampler(3).split(k)) for k in range(5)]
    second = [random_symplectic(SeededSampler(3).split(k)) for k in range(5)]
    assert first == second
    assert all(m.determinant() == 1 for m in first)


# Test conjugation and images
def test_conjugate_and_image(k10, tensor, iso):
    tau = grading_automorphism(k10)
    assert conjugate(tau, iso) == grading_automorphism(tensor)
    s = GradedSubspace.from_labels(k10, ["e", "f"])
    assert image_subspace(iso, s) == GradedSubspace.from_labels(tensor, ["1", "ee"])
    with pytest.raises(AlgebraMismatchError):
        conjugate(grading_automorphism(tensor), iso)
