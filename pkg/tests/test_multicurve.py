import pytest

from cyclecomplex.errors import EmptyCurve, ParityViolation, SchemaError, TriangleInequalityViolation
from cyclecomplex.multicurve import (
    algebraic_intersection,
    complementary_regions,
    delete_copies,
    geometric_intersection,
    homology_class,
    is_reduced,
    minimal_position,
    reduced_subcycle,
    symplectic_pairing,
    trace_component_count,
    validate_and_trace,
    vertex_linking_weights,
)


def mk(surface, weights, orientations=None):
    n = trace_component_count(surface, weights)
    return validate_and_trace(surface, weights, orientations or [1] * n)


def test_torus_single_curve_trace(torus):
    c = mk(torus, (1, 0, 1))
    assert c.num_components == 1
    assert len(c.copies[0].points) == 2


def test_empty_curve_rejected(torus):
    with pytest.raises(EmptyCurve):
        validate_and_trace(torus, (0, 0, 0), [])


def test_parity_violation(torus):
    with pytest.raises(ParityViolation):
        validate_and_trace(torus, (1, 1, 1), [1])


def test_triangle_inequality_violation(genus2):
    w = [0] * genus2.num_edges
    # a single edge with weight 2 and zero on the rest of its triangle
    w[0] = 2
    with pytest.raises((TriangleInequalityViolation, ParityViolation)):
        validate_and_trace(genus2, w, [1])


def test_orientation_count_checked(torus):
    with pytest.raises(SchemaError):
        validate_and_trace(torus, (1, 0, 1), [1, 1])


def test_parallel_copies_grouped(torus):
    c = mk(torus, (3, 0, 3))
    assert c.num_components == 3
    groups = c.groups()
    assert len(groups) == 1
    assert len(next(iter(groups.values()))) == 3


def test_canonical_key_order_independent(torus):
    a = validate_and_trace(torus, (2, 0, 2), [1, -1])
    b = validate_and_trace(torus, (2, 0, 2), [-1, 1])
    assert a.canonical_key() == b.canonical_key()


def test_canonical_key_orientation_sensitive(torus):
    a = mk(torus, (1, 0, 1))
    assert a.canonical_key() != a.reversed().canonical_key()


def test_canonical_key_distinguishes_classes(torus):
    assert mk(torus, (1, 0, 1)).canonical_key() != mk(torus, (0, 1, 1)).canonical_key()


def test_homology_additive_on_parallel_copies(torus):
    one = homology_class(mk(torus, (1, 0, 1)))
    three = homology_class(mk(torus, (3, 0, 3)))
    assert three == tuple(3 * x for x in one)


def test_homology_reversal(torus):
    c = mk(torus, (1, 0, 1))
    assert homology_class(c.reversed()) == tuple(-x for x in homology_class(c))


def test_curve_plus_reversed_copy_is_null(torus):
    c = validate_and_trace(torus, (2, 0, 2), [1, -1])
    assert homology_class(c) == (0, 0)
    assert not is_reduced(c)
    assert reduced_subcycle(c) is None


def test_torus_curve_regions_annulus(torus):
    c = mk(torus, (1, 0, 1))
    regs = complementary_regions(c)
    assert len(regs) == 1
    assert regs[0].euler_char == 0
    assert sorted(s for _c, s in regs[0].boundary) == [-1, 1]
    assert is_reduced(c)


def test_parallel_same_oriented_copies_reduced(torus):
    c = validate_and_trace(torus, (2, 0, 2), [1, 1])
    regs = complementary_regions(c)
    assert len(regs) == 2
    assert all(r.euler_char == 0 for r in regs)
    assert is_reduced(c)


def test_vertex_linking_bounds_disk(torus):
    c = mk(torus, vertex_linking_weights(torus, 0))
    regs = complementary_regions(c)
    assert sorted(r.euler_char for r in regs) == [-1, 1]
    assert not is_reduced(c)
    assert reduced_subcycle(c) is None


def test_vertex_linking_on_genus2(genus2):
    c = mk(genus2, vertex_linking_weights(genus2, 0))
    regs = complementary_regions(c)
    assert sorted(r.euler_char for r in regs) == [-3, 1]
    assert not is_reduced(c)


def test_reduced_subcycle_fixed_point(torus):
    c = mk(torus, (1, 0, 1))
    assert reduced_subcycle(c).canonical_key() == c.canonical_key()


def test_reduced_subcycle_discards_linking_circle(torus):
    # (1,0)-curve plus a vertex-linking circle
    base = [1, 0, 1]
    link = vertex_linking_weights(torus, 0)
    w = [a + b for a, b in zip(base, link)]
    n = trace_component_count(torus, w)
    c = validate_and_trace(torus, w, [1] * n)
    out = reduced_subcycle(c)
    assert out is not None
    assert out.weights == (1, 0, 1)
    assert homology_class(out) == homology_class(c)


def test_delete_copies_preserves_others(torus):
    c = validate_and_trace(torus, (2, 0, 2), [1, -1])
    out = delete_copies(c, [1])
    assert out.weights == (1, 0, 1)
    assert out.copies[0].orientation == 1


def test_region_every_component_once_per_side(genus2):
    c = mk(genus2, vertex_linking_weights(genus2, 0))
    records = [rec for r in complementary_regions(c) for rec in r.boundary]
    for copy in range(c.num_components):
        assert sorted(s for cc, s in records if cc == copy) == [-1, 1]


# -- minimal position ----------------------------------------------------------

def det_oracle(x, y):
    return abs(x[0] * y[1] - x[1] * y[0])


@pytest.mark.parametrize(
    "wa,wb",
    [
        ((1, 0, 1), (0, 1, 1)),
        ((1, 1, 2), (1, 1, 0)),
        ((1, 1, 2), (1, 2, 1)),
        ((2, 0, 2), (1, 1, 0)),
        ((1, 2, 1), (0, 1, 1)),
    ],
)
def test_torus_geometric_intersection_matches_determinant(torus, wa, wb):
    a, b = mk(torus, wa), mk(torus, wb)
    assert geometric_intersection(a, b) == det_oracle(homology_class(a), homology_class(b))


def test_disjoint_curves_have_empty_intersection_list(torus):
    a = mk(torus, (1, 0, 1))
    mo = minimal_position(a, mk(torus, (1, 0, 1)))
    assert mo.crossing_count == 0
    assert mo.along_b == [[]]


def test_self_parallel_isotopes_off(torus):
    a = mk(torus, (1, 0, 1))
    assert geometric_intersection(a, a.reversed()) == 0


def test_algebraic_matches_pairing(torus):
    curves = [mk(torus, w) for w in [(1, 0, 1), (0, 1, 1), (1, 1, 2), (1, 2, 1), (1, 1, 0)]]
    for a in curves:
        for b in curves:
            assert algebraic_intersection(a, b) == symplectic_pairing(
                torus, homology_class(a), homology_class(b)
            )


def test_antisymmetry(torus):
    a, b = mk(torus, (1, 0, 1)), mk(torus, (0, 1, 1))
    assert algebraic_intersection(a, b) == -algebraic_intersection(b, a)


def test_intersection_with_reversed_is_zero(torus):
    a = mk(torus, (1, 1, 2))
    assert algebraic_intersection(a, a.reversed()) == 0


def test_crossing_list_tags(torus):
    a = mk(torus, (1, 1, 2))
    b = mk(torus, (1, 1, 0))
    mo = minimal_position(a, b)
    assert len(mo.along_b) == 1
    for rec in mo.along_b[0]:
        assert rec.c_copy == 0
        assert rec.sign in (1, -1)
