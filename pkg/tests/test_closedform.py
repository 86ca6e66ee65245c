import pytest

from curvegb.binalg import buchberger_close, is_groebner, is_minimal_gb, reduced_basis
from curvegb.closedform import Kind, Phi, Psi, Theta, Xi, assemble, build_family, family_terms, labels
from curvegb.errors import IndexOutOfRange
from curvegb.order import descending
from curvegb.semigroup import compute_parameters, validate_input
from curvegb.sweep import almost_arithmetic_instances, check_leads
from curvegb.toric import defining_ideal_gb, ideal_contains


def render_set(basis):
    return {f.render() for f in basis}


def test_small_families(small_params):
    assert build_family(small_params, Psi(0)).render() == "x1*x2 - x0^2"
    assert build_family(small_params, Theta).render() == "x2^4 - x1^3"
    assert build_family(small_params, Phi(0)).render() == "x1^4 - x0^2*x2^3"


def test_wide_phi(wide_params):
    for i in range(4):
        left, right = family_terms(wide_params, Phi(i))
        want_left = [0] * 6
        want_left[i + 1] += 1
        want_left[4] += 2
        want_right = [0] * 6
        want_right[0] += 1
        want_right[i] += 1
        want_right[5] += 1
        assert (left, right) == (tuple(want_left), tuple(want_right))


def test_wide_psi_and_theta(wide_params):
    # psi_j = x_{j+2} x_5^2 - x_0^3 x_j
    for j in range(3):
        left, right = family_terms(wide_params, Psi(j))
        assert left[j + 2] >= 1 and left[5] == 2 and right[0] == 3 + (j == 0)
    assert build_family(wide_params, Theta).render() == "x5^3 - x0^2*x3*x4"


def test_index_errors(small_params, wide_params):
    with pytest.raises(IndexOutOfRange):
        build_family(small_params, Phi(1))
    with pytest.raises(IndexOutOfRange):
        build_family(wide_params, Xi(0, 2))
    with pytest.raises(IndexOutOfRange):
        build_family(wide_params, Xi(2, 4))
    with pytest.raises(IndexOutOfRange):
        build_family(wide_params, Psi(3))


def test_named_sets_small(small_params):
    assert render_set(assemble(small_params, Kind.OMEGA).basis) == {"x1*x2 - x0^2", "x2^4 - x1^3"}
    assert render_set(assemble(small_params, Kind.PHI).basis) == {
        "x1^4 - x0^2*x2^3", "x1*x2 - x0^2", "x2^4 - x1^3"}


def test_patil_singh_wide(wide_params):
    named = assemble(wide_params, Kind.PATIL_SINGH)
    labs = named.family_labels
    assert len(labs) == 14
    assert sum(s.startswith("phi") for s in labs) == 4
    assert sum(s.startswith("psi") for s in labs) == 3
    assert sum(s.startswith("xi") for s in labs) == 6
    assert labs[0] == "theta"


def test_wide_verdicts(wide_params):
    weights = wide_params.curve.weights
    ps_desc = assemble(wide_params, Kind.PATIL_SINGH, descending(weights)).basis
    assert not is_groebner(ps_desc)
    assert is_groebner(assemble(wide_params, Kind.PATIL_SINGH).basis)
    phi = assemble(wide_params, Kind.PHI).basis
    assert is_groebner(phi) and is_minimal_gb(phi)


def test_structural_relations():
    for curve in almost_arithmetic_instances(14, 4, 30, max_step=2):
        params = compute_parameters(curve)
        omega = set(labels(params, Kind.OMEGA))
        ps = set(labels(params, Kind.PATIL_SINGH))
        phi = set(labels(params, Kind.PHI))
        assert omega <= ps
        assert {l for l in omega ^ phi} <= {l for l in ps if l.family == "phi"}
        assert not check_leads(params), str(curve)


@pytest.mark.parametrize("arith, mn", [((7, 8), 6), ((9, 10), 8), ((5, 7, 9), 11),
                                       ((6, 8, 10), 9), ((11, 14, 17, 20), 13)])
def test_all_sets_generate_the_ideal(arith, mn):
    curve = validate_input(arith, mn)
    params = compute_parameters(curve)
    oracle = defining_ideal_gb(curve)
    for kind in Kind:
        basis = assemble(params, kind).basis
        assert all(ideal_contains(oracle, f) for f in basis)
        assert reduced_basis(buchberger_close(basis), check=False).elements == oracle.elements
