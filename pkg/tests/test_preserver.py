import random

import pytest

from semipos import classify, genfuzz, preserver
from semipos.preserver import (
    FalsifyCertificate,
    PreserverMap,
    PreserverVerdict,
    Verdict,
)
from semipos.ratmat import (
    DimensionError,
    InvalidInputError,
    Matrix,
    Vector,
)

SIGNED_X = Matrix([[1, 0, 0], [0, -1, 0], [1, 1, 1]])
ONES_2 = Matrix([[1, 1], [1, 1]])
LOWER = Matrix([[1, 0], [1, 1]])


def _map(x, y):
    return PreserverMap(x, y)


def test_apply():
    assert preserver.apply(_map(Matrix.identity(2), Matrix.identity(3)), Matrix.ones(2, 3)) == Matrix.ones(2, 3)
    doubled = preserver.apply(_map(2 * Matrix.identity(2), Matrix([[3]])), Matrix([[1], [1]]))
    assert doubled == Matrix([[6], [6]])
    assert preserver.apply(_map(ONES_2, Matrix([[1]])), Matrix([[1], [2]])) == Matrix([[3], [3]])
    with pytest.raises(DimensionError):
        preserver.apply(_map(Matrix.identity(2), Matrix.identity(2)), Matrix.ones(3, 2))


def test_preserver_map_requires_square():
    with pytest.raises(DimensionError):
        PreserverMap(Matrix.ones(2, 3), Matrix.identity(3))


def test_into_sp_yes():
    assert preserver.into_sp_preserver(_map(Matrix.identity(2), Matrix.identity(2))).status is Verdict.YES


def test_into_sp_no_with_certificate():
    verdict = preserver.into_sp_preserver(_map(SIGNED_X, Matrix.identity(3)))
    assert verdict.status is Verdict.NO
    cert = verdict.certificate
    assert cert is not None and cert.verify()
    assert cert.note == "uniform-sign-rows"
    assert classify.is_semipositive(cert.a)[0]
    assert not classify.is_semipositive(cert.image)[0]


def test_into_sp_negated_pair():
    verdict = preserver.into_sp_preserver(_map(-Matrix.identity(2), -Matrix.identity(2)))
    assert verdict.status is Verdict.YES
    assert verdict.reason == preserver.REASON_NEGATED_PAIR


def test_onto_sp_examples():
    perms = _map(Matrix([[0, 1], [1, 0]]), Matrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]]))
    assert preserver.onto_sp_preserver(perms).status is Verdict.YES
    assert preserver.onto_sp_preserver(_map(ONES_2, Matrix.identity(2))).status is Verdict.NO
    scaled = _map(Matrix([[0, 2], [3, 0]]), Matrix([[5]]))
    assert preserver.onto_sp_preserver(scaled).status is Verdict.YES


def test_onto_sp_singular_corner_uses_no_preimage():
    verdict = preserver.onto_sp_preserver(_map(ONES_2, Matrix.identity(2)))
    assert verdict.reason == preserver.REASON_X_SINGULAR
    cert = verdict.certificate
    assert cert.kind == "no-preimage" and cert.verify()


def test_onto_sp_inverse_not_into():
    x = Matrix([[1, 1], [0, 1]])  # row positive, invertible, not monomial
    verdict = preserver.onto_sp_preserver(_map(x, Matrix.identity(2)))
    assert verdict.status is Verdict.NO
    assert verdict.reason == preserver.REASON_INVERSE_NOT_INTO
    assert verdict.certificate.x == x.inverse()


def test_into_msp_square_examples():
    yes = preserver.into_msp_preserver(_map(Matrix([[2, -1], [-1, 2]]), Matrix.identity(2)))
    assert yes.status is Verdict.YES
    no = preserver.into_msp_preserver(_map(LOWER, Matrix.identity(2)))
    assert no.status is Verdict.NO
    assert no.certificate.verify()
    assert classify.is_minimally_semipositive(no.certificate.a)
    assert not classify.is_minimally_semipositive(no.certificate.image)


def test_into_msp_column_case():
    verdict = preserver.into_msp_preserver(_map(ONES_2, Matrix([[1]])), m=2, n=1)
    assert verdict.status is Verdict.YES
    assert not classify.is_monomial(ONES_2)
    negated = preserver.into_msp_preserver(_map(-ONES_2, Matrix([[-1]])))
    assert negated.status is Verdict.YES
    zero_y = preserver.into_msp_preserver(_map(ONES_2, Matrix([[0]])))
    assert zero_y.status is Verdict.NO and zero_y.certificate.verify()
    bad_x = preserver.into_msp_preserver(_map(Matrix([[1, -2], [1, 1]]), Matrix([[1]])))
    assert bad_x.status is Verdict.NO and bad_x.certificate.verify()


def test_into_msp_dim_arguments_checked():
    with pytest.raises(DimensionError):
        preserver.into_msp_preserver(_map(ONES_2, Matrix([[1]])), m=3, n=1)
    with pytest.raises(DimensionError):
        preserver.into_msp_preserver(_map(ONES_2, Matrix([[1]])), m=2, n=2)


def test_into_msp_tall_cases():
    monomial_x = Matrix([[2, 0, 0], [0, 0, 1], [0, 3, 0]])
    yes = preserver.into_msp_preserver(_map(monomial_x, Matrix([[2, -1], [-1, 2]])))
    assert yes.status is Verdict.YES and yes.reason == preserver.REASON_TALL_PAIR
    y_singular = preserver.into_msp_preserver(_map(Matrix.identity(3), ONES_2))
    assert y_singular.status is Verdict.NO
    assert y_singular.reason == preserver.REASON_Y_SINGULAR
    falsified = preserver.into_msp_preserver(
        _map(Matrix([[1, 1, 0], [0, 1, 0], [0, 0, 1]]), Matrix.identity(2)), seed=0, trials=40
    )
    assert falsified.status is Verdict.NO
    assert falsified.certificate.note == "randomized-counterexample"


def test_into_msp_wide_returns_unknown():
    verdict = preserver.into_msp_preserver(_map(Matrix.identity(2), Matrix.identity(3)))
    assert verdict.status is Verdict.UNKNOWN
    assert verdict.reason == preserver.REASON_OUTSIDE_REGIME


def test_onto_msp_examples():
    assert preserver.onto_msp_preserver(_map(Matrix.identity(3), Matrix.identity(3))).status is Verdict.YES
    not_monomial = preserver.onto_msp_preserver(_map(Matrix([[2, -1], [-1, 2]]), Matrix.identity(2)))
    assert not_monomial.status is Verdict.NO
    assert not_monomial.reason == preserver.REASON_INVERSE_NOT_INTO
    p = Matrix([[0, 1], [1, 0]])
    negated = preserver.onto_msp_preserver(_map(-p, -Matrix.identity(2)))
    assert negated.status is Verdict.YES
    with pytest.raises(InvalidInputError):
        preserver.onto_msp_preserver(_map(Matrix.identity(2), Matrix.identity(3)))


def test_falsify_into_msp_branches():
    singular = preserver.falsify_into_msp(_map(Matrix.identity(2), ONES_2))
    assert singular.a == Matrix.identity(2) and singular.note == "x-or-y-singular"

    mixed = preserver.falsify_into_msp(_map(LOWER, Matrix.identity(2)))
    assert mixed.note == "x-not-inverse-nonnegative-either-sign"
    assert mixed.probe is not None and mixed.probe_image is not None
    assert mixed.image @ mixed.probe == mixed.probe_image
    assert mixed.probe_image.is_nonneg() and not mixed.probe.is_nonneg()

    ybranch = preserver.falsify_into_msp(_map(Matrix.identity(2), LOWER))
    assert ybranch.note == "y-not-inverse-nonnegative"
    assert ybranch.probe_image.is_positive() and not ybranch.probe.is_nonneg()

    with pytest.raises(InvalidInputError):
        preserver.falsify_into_msp(_map(Matrix.identity(2), Matrix.identity(2)))


def test_falsify_into_sp_branches():
    case_iii = preserver.falsify_into_sp(_map(SIGNED_X, Matrix.identity(3)))
    assert case_iii.note == "uniform-sign-rows"

    case_ii = preserver.falsify_into_sp(_map(Matrix([[1, -1], [2, 3]]), Matrix.identity(2)))
    assert case_ii.note == "mixed-row"
    assert case_ii.a == Matrix([[1, 1], [1, 1]])  # replicated v = (1, 1)
    assert (SIGNED_X @ Vector([1, 1, 1]))[0] != 0  # sanity on the other matrix

    case_i = preserver.falsify_into_sp(_map(Matrix([[0, 0], [1, 1]]), Matrix.identity(2)))
    assert case_i.note == "zero-row"

    case_iv = preserver.falsify_into_sp(_map(Matrix.identity(2), LOWER))
    assert case_iv.note == "y-inverse-negative-entry"
    assert case_iv.a == Matrix([[1, -1], [1, -1]])
    assert (case_iv.a @ LOWER).is_nonpos()

    y_sing = preserver.falsify_into_sp(_map(Matrix.identity(2), ONES_2))
    assert y_sing.note == "y-singular"
    assert (y_sing.a @ ONES_2) == Matrix.zeros(2, 2)

    with pytest.raises(InvalidInputError):
        preserver.falsify_into_sp(_map(Matrix.identity(2), Matrix.identity(2)))


def test_verdict_requires_certificate_for_no():
    with pytest.raises(InvalidInputError):
        PreserverVerdict(Verdict.NO, "falsified")


def test_bad_certificate_is_rejected():
    bogus = FalsifyCertificate(
        "image-leaves-class",
        preserver.CLASS_SP,
        Matrix.identity(2),
        Matrix.identity(2),
        Matrix.identity(2),
        image=Matrix.identity(2),
        note="bogus",
    )
    assert not bogus.verify()
    with pytest.raises(ArithmeticError):
        PreserverVerdict(Verdict.NO, "falsified", bogus)


def test_column_rule_matches_empirical_preservation():
    # the single-column decision rule, validated against sign-complete samples
    rng = random.Random("column-rule")
    for trial in range(40):
        m = rng.randint(2, 4)
        scalar = rng.choice([-2, -1, 0, 1, 2])
        x = Matrix([[rng.randint(-3, 3) for _ in range(m)] for _ in range(m)])
        lmap = _map(x, Matrix([[scalar]]))
        verdict = preserver.into_msp_preserver(lmap)
        columns = [Vector([1] * m)]
        for j in range(m):
            for t in (2, 7, 25):
                entries = [1] * m
                entries[j] = t
                columns.append(Vector(entries))
        preserved = all(
            classify.is_minimally_semipositive(preserver.apply(lmap, Matrix([[e] for e in col.entries])))
            for col in columns
        )
        if verdict.status is Verdict.YES:
            assert preserved, f"trial {trial}: rule said yes but a sample failed"
        else:
            assert verdict.certificate.verify()


def test_sign_symmetry_and_scaling():
    rng = random.Random("symmetry")
    for _ in range(25):
        n = rng.randint(2, 3)
        x = Matrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        y = Matrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        base = _map(x, y)
        flipped = _map(-x, -y)
        scaled = _map(3 * x, y * "1/2")
        for op in (preserver.into_sp_preserver, preserver.into_msp_preserver, preserver.onto_sp_preserver, preserver.onto_msp_preserver):
            assert op(base).status == op(flipped).status
            assert op(base).status == op(scaled).status


def test_onto_yes_implies_both_intos():
    cfg = genfuzz.GenConfig(77)
    for t in range(10):
        n = 2 + t % 3
        s = 1 if t % 2 == 0 else -1
        x = genfuzz.gen_monomial(n, cfg, index=("sym-x", t)) * s
        y = genfuzz.gen_monomial(n, cfg, index=("sym-y", t)) * s
        lmap = _map(x, y)
        assert preserver.onto_msp_preserver(lmap).status is Verdict.YES
        assert preserver.into_msp_preserver(lmap).status is Verdict.YES
        assert preserver.into_msp_preserver(lmap.inverse_map()).status is Verdict.YES
        assert preserver.onto_sp_preserver(lmap).status is Verdict.YES
        assert preserver.into_sp_preserver(lmap).status is Verdict.YES
        assert preserver.into_sp_preserver(lmap.inverse_map()).status is Verdict.YES
