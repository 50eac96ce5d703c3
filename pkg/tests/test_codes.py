import random
from dataclasses import replace
from itertools import permutations, product

import pytest

from tgrs.codes import (EnumerationBudgetError, SpecError, TgrsSpec, analyze,
                        dual_basis, dual_min_distance_support, encode,
                        generator_matrix, min_distance, projective_count,
                        support_min_distance, twisted_basis, validate_spec)
from tgrs.gf import field
from tgrs.linalg import MatrixGF, mat_mul, rank, rref, transpose


def gf5_spec(**kw):
    base = dict(ctx=field(5), n=5, k=3, t=1, h=2, eta=1,
                alpha=(0, 1, 2, 3, 4), v=(1, 1, 1, 1, 1))
    base.update(kw)
    return TgrsSpec(**base)


def test_validate_ok():
    validate_spec(gf5_spec())


def test_validate_named_errors():
    with pytest.raises(SpecError, match="duplicate"):
        validate_spec(gf5_spec(alpha=(0, 0, 1, 2, 3)))
    with pytest.raises(SpecError, match="v must be nonzero"):
        validate_spec(gf5_spec(v=(1, 0, 1, 1, 1)))
    with pytest.raises(SpecError, match="eta"):
        validate_spec(gf5_spec(eta=0))
    with pytest.raises(SpecError, match="hook"):
        validate_spec(gf5_spec(h=3))
    with pytest.raises(SpecError, match="twist"):
        validate_spec(gf5_spec(t=0))
    with pytest.raises(SpecError, match="k \\+ t"):
        validate_spec(gf5_spec(t=3))
    with pytest.raises(SpecError, match="dimension"):
        validate_spec(gf5_spec(k=5, h=1, t=1))


def test_twisted_basis_shape():
    spec = gf5_spec(eta=2)
    basis = twisted_basis(spec)
    assert basis[0].coeffs == (1,)
    assert basis[1].coeffs == (0, 1)
    assert basis[2].coeffs == (0, 0, 1, 2)  # x^2 + 2 x^3
    twist_degree = spec.k - 1 + spec.t
    assert sum(1 for b in basis if b.degree == twist_degree) == 1


def test_twisted_basis_mid_hook():
    ctx = field(7)
    spec = TgrsSpec.make(ctx, 7, 4, 2, 1, 3, tuple(range(7)), (1,) * 7)
    basis = twisted_basis(spec)
    assert basis[1].coeffs == (0, 1, 0, 0, 0, 3)  # x + eta x^5


def test_generator_row_is_twisted_evaluation():
    # row h entries are v_j * (alpha_j^h + eta alpha_j^(k-1+t)); at
    # alpha = 4 over GF(5) that is 16 + 64 = 80 = 0, not the value a
    # stray-subscript reading of the display would give
    g = generator_matrix(gf5_spec())
    assert g.row(2) == [0, 2, 2, 1, 0]
    assert g.row(0) == [1, 1, 1, 1, 1]
    assert g.row(1) == [0, 1, 2, 3, 4]


def test_generator_trs_reduction():
    # v = 1 everywhere: entries are plain twisted-monomial evaluations
    ctx = field(7)
    spec = TgrsSpec.make(ctx, 6, 3, 2, 1, 2, tuple(range(6)), (1,) * 6)
    g = generator_matrix(spec)
    for j, a in enumerate(spec.alpha):
        expected = ctx.add(a, ctx.mul(2, ctx.pow(a, 4)))
        assert g[1, j] == expected


def test_generator_rank_random_specs():
    rng = random.Random(42)
    fields = [field(5), field(7), field(2, 3), field(3, 2), field(2, 4)]
    for _ in range(100):
        ctx = rng.choice(fields)
        q = ctx.q
        n = rng.randint(3, min(q, 9))
        k = rng.randint(1, n - 1)
        t = rng.randint(1, n - k)
        h = rng.randrange(k)
        alpha = rng.sample(range(q), n)
        v = [rng.randrange(1, q) for _ in range(n)]
        eta = rng.randrange(1, q)
        spec = TgrsSpec.make(ctx, n, k, t, h, eta, alpha, v)
        assert rank(generator_matrix(spec)) == k


def test_encode():
    spec = gf5_spec()
    assert encode(spec, [0, 0, 0]) == [0, 0, 0, 0, 0]
    g = generator_matrix(spec)
    assert encode(spec, [0, 0, 1]) == g.row(2)
    with pytest.raises(SpecError):
        encode(spec, [1, 2])


def test_encode_additive_exhaustive_gf2():
    # GF(2) coefficients, points drawn from GF(8) so that five are distinct
    ctx = field(2, 3)
    spec = TgrsSpec.make(ctx, 5, 3, 1, 1, 1, (0, 1, 2, 3, 4), (1,) * 5)
    for m1 in product(range(2), repeat=3):
        for m2 in product(range(2), repeat=3):
            s = [spec.ctx.add(a, b) for a, b in zip(m1, m2)]
            lhs = [spec.ctx.add(a, b) for a, b in zip(encode(spec, m1), encode(spec, m2))]
            assert lhs == encode(spec, s)


def test_min_distance_rs42():
    f5 = field(5)
    g = MatrixGF.from_rows(f5, [[1, 1, 1, 1], [0, 1, 2, 3]])
    assert min_distance(g) == 3


def test_min_distance_single_row():
    f5 = field(5)
    g = MatrixGF.from_rows(f5, [[0, 2, 0, 3]])
    assert min_distance(g) == 2


def test_min_distance_budget():
    f16 = field(2, 4)
    rng = random.Random(0)
    rows = [[rng.randrange(16) for _ in range(10)] for _ in range(6)]
    g = MatrixGF.from_rows(f16, rows)
    if rank(g) == 6:
        with pytest.raises(EnumerationBudgetError) as exc:
            min_distance(g, budget=10**5)
        assert exc.value.required == projective_count(16, 6)


def test_min_distance_requires_full_rank():
    f5 = field(5)
    deficient = MatrixGF.from_rows(f5, [[1, 2, 3], [2, 4, 1]])
    assert rank(deficient) == 2  # this one is fine
    with pytest.raises(SpecError):
        min_distance(MatrixGF.from_rows(f5, [[1, 2, 3], [2, 4, 1], [3, 6 % 5, 4]]))


def test_min_distance_routes_agree():
    rng = random.Random(3)
    for ctx in (field(5), field(7), field(2, 2), field(3, 2)):
        q = ctx.q
        for _ in range(10):
            n = rng.randint(3, 7)
            k = rng.randint(1, n - 1)
            while True:
                g = MatrixGF.from_rows(
                    ctx, [[rng.randrange(q) for _ in range(n)] for _ in range(k)]
                )
                if rank(g) == k:
                    break
            assert min_distance(g) == support_min_distance(g)


def test_dual_route_agreement():
    rng = random.Random(4)
    for ctx in (field(5), field(3, 2)):
        q = ctx.q
        for _ in range(10):
            n = rng.randint(3, 7)
            k = rng.randint(1, n - 1)
            while True:
                g = MatrixGF.from_rows(
                    ctx, [[rng.randrange(q) for _ in range(n)] for _ in range(k)]
                )
                if rank(g) == k:
                    break
            assert dual_min_distance_support(g) == min_distance(dual_basis(g))


def test_dual_basis():
    spec = gf5_spec()
    g = generator_matrix(spec)
    d = dual_basis(g)
    assert d.rows == spec.n - spec.k
    assert mat_mul(g, transpose(d)).is_zero()


def test_defect_at_most_twist():
    rng = random.Random(9)
    for ctx in (field(5), field(7), field(3, 2)):
        q = ctx.q
        for _ in range(12):
            n = rng.randint(4, min(q, 8))
            k = rng.randint(1, n - 1)
            t = rng.randint(1, n - k)
            h = rng.randrange(k)
            spec = TgrsSpec.make(ctx, n, k, t, h, rng.randrange(1, q),
                                 rng.sample(range(q), n),
                                 [rng.randrange(1, q) for _ in range(n)])
            d = min_distance(generator_matrix(spec))
            assert n + 1 - k - d <= t


def test_dual_distance_bounds_sample():
    rng = random.Random(10)
    for ctx in (field(7), field(11), field(2, 4)):
        q = ctx.q
        for _ in range(10):
            n = rng.randint(4, min(q, 10))
            k = rng.randint(1, n - 1)
            t = rng.randint(1, n - k)
            h = rng.randrange(k)
            spec = TgrsSpec.make(ctx, n, k, t, h, rng.randrange(1, q),
                                 rng.sample(range(q), n),
                                 [rng.randrange(1, q) for _ in range(n)])
            d_dual = dual_min_distance_support(generator_matrix(spec))
            assert max(h + 1, k - h) <= d_dual <= k + 1


def test_analyze_mds_lemma_instance():
    # evaluation points fill a proper subfield, eta falls outside it
    ctx = field(2, 4)
    alpha = [int(x) for x in ctx.subfield(2)]
    eta = next(x for x in range(1, 16) if not ctx.in_subfield(x, 2))
    spec = TgrsSpec.make(ctx, 4, 2, 1, 1, eta, alpha, (1, 1, 1, 1))
    report = analyze(spec)
    assert report.classification == "MDS"
    assert report.d == 3 and report.defect == 0


def test_analyze_self_dual_has_equal_defects():
    from tgrs.constructions import build_subfield_char2

    spec = build_subfield_char2(2, 4, 1, 2).spec
    report = analyze(spec)
    assert report.self_dual
    assert report.defect == report.defect_dual
    assert not report.discrepancies


def test_analyze_matches_eta_prediction_gf5():
    from tgrs.etasets import predict_defect

    ctx = field(5)
    for eta in range(1, 5):
        spec = TgrsSpec.make(ctx, 5, 3, 2, 1, eta, (0, 1, 2, 3, 4), (1,) * 5)
        report = analyze(spec)
        assert report.defect == predict_defect(spec)


def test_analyze_permutation_invariant():
    ctx = field(7)
    alpha = (0, 1, 2, 3, 5)
    v = (1, 2, 3, 1, 2)
    spec = TgrsSpec.make(ctx, 5, 3, 2, 1, 3, alpha, v)
    base = analyze(spec)
    rng = random.Random(1)
    for _ in range(4):
        perm = list(range(5))
        rng.shuffle(perm)
        alt = TgrsSpec.make(ctx, 5, 3, 2, 1, 3,
                            tuple(alpha[i] for i in perm),
                            tuple(v[i] for i in perm))
        rep = analyze(alt)
        assert (rep.d, rep.d_dual, rep.defect, rep.defect_dual) == \
               (base.d, base.d_dual, base.defect, base.defect_dual)


def test_analyze_budget():
    ctx = field(2, 4)
    spec = TgrsSpec.make(ctx, 12, 6, 1, 5, 1, tuple(range(12)), (1,) * 12)
    with pytest.raises(EnumerationBudgetError):
        analyze(spec, budget=10**5)


def test_classify_labels():
    from tgrs.codes import classify

    assert classify(0, 0) == "MDS"
    assert classify(1, 1) == "NMDS"
    assert classify(2, 2) == "2-MDS"
    assert classify(0, 1) == "unclassified(0,1)"
