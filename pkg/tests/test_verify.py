import numpy as np

from starspec import (
    FAMILY_ROOT,
    build_graph_rep,
    build_hyperplane_rep,
    make_instance,
    simple_rep,
    to_algebra_rep,
    verify_algebra_rep,
    verify_graph_rep,
)
from starspec.reps import AlgebraRep, GraphRep
from starspec.verify import commutant_dimension, hom_dimension

from conftest import random_feasible_instance


def _unitary(n, rng):
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, _ = np.linalg.qr(z)
    return q


def test_simple_rep_commutant(e6):
    rep = simple_rep(e6, 2)
    assert commutant_dimension(rep) == 1


def test_direct_sum_commutant(e6, rng):
    d, f, inst = random_feasible_instance(e6, FAMILY_ROOT, 5, rng)
    rep = build_graph_rep(e6, d, f)
    doubled = GraphRep(
        graph=e6,
        dims=tuple(2 * v for v in rep.dims),
        ops={
            key: np.kron(np.eye(2), m) for key, m in rep.ops.items()
        },
        character=f,
    )
    assert commutant_dimension(rep) == 1
    assert commutant_dimension(doubled) == 4


def test_hom_between_distinct_is_zero(e6, rng):
    d1, f1, _ = random_feasible_instance(e6, FAMILY_ROOT, 5, rng)
    rep1 = build_graph_rep(e6, d1, f1)
    rep2 = simple_rep(e6, 0)
    assert hom_dimension(rep1, rep2) == 0


def test_algebra_commutant_direct_sum():
    inst = make_instance([[2, 1], [2, 1], [2, 1]], 3)
    rep = build_hyperplane_rep(inst, seed=11)
    doubled = AlgebraRep(
        instance=inst,
        n0=6,
        projections=tuple(
            tuple(np.kron(np.eye(2), p) for p in branch)
            for branch in rep.projections
        ),
    )
    assert commutant_dimension(rep) == 1
    assert commutant_dimension(doubled) == 4


def test_verification_basis_invariance(e6, rng):
    d, f, inst = random_feasible_instance(e6, FAMILY_ROOT, 6, rng)
    rep = build_graph_rep(e6, d, f)
    arep = to_algebra_rep(e6, rep, inst)
    np_rng = np.random.default_rng(9)
    u = _unitary(arep.n0, np_rng)
    rotated = AlgebraRep(
        instance=inst,
        n0=arep.n0,
        projections=tuple(
            tuple(u @ p @ u.conj().T for p in branch)
            for branch in arep.projections
        ),
    )
    r1 = verify_algebra_rep(arep)
    r2 = verify_algebra_rep(rotated)
    assert r1.overall and r2.overall
    assert commutant_dimension(rotated) == commutant_dimension(arep)


def test_fault_nonprojection_detected():
    inst = make_instance([[2, 1], [2, 1], [2, 1]], 3)
    rep = build_hyperplane_rep(inst, seed=2)
    bad = [list(b) for b in rep.projections]
    bad[0][0] = bad[0][0] * 0.5  # no longer idempotent
    broken = AlgebraRep(instance=inst, n0=3, projections=tuple(tuple(b) for b in bad))
    report = verify_algebra_rep(broken)
    assert not report.overall
    assert any("idempotent" in name for name, ok, _ in report.failures())


def test_fault_wrong_character_detected(e6, rng):
    d, f, inst = random_feasible_instance(e6, FAMILY_ROOT, 5, rng)
    rep = build_graph_rep(e6, d, f)
    wrong = tuple(v + 1 for v in f)
    report = verify_graph_rep(e6, rep, d, wrong)
    assert not report.overall


def test_adjoint_pair_check(e6, rng):
    d, f, inst = random_feasible_instance(e6, FAMILY_ROOT, 5, rng)
    rep = build_graph_rep(e6, d, f)
    report = verify_graph_rep(e6, rep, d, f)
    assert any(name.startswith("adjoint") for name, _, _ in report.checks)
    assert report.overall


def test_rank_threshold_flips_with_fault():
    inst = make_instance([[2, 1], [2, 1], [2, 1]], 3)
    rep = build_hyperplane_rep(inst, seed=5)
    assert commutant_dimension(rep) == 1
    # simultaneously diagonal projections commute with every diagonal matrix
    p1 = np.diag([1.0, 0.0, 0.0]).astype(complex)
    p2 = np.diag([0.0, 1.0, 0.0]).astype(complex)
    flat = AlgebraRep(
        instance=inst, n0=3, projections=((p1, p2), (p1, p2), (p1, p2))
    )
    assert commutant_dimension(flat) == 3
