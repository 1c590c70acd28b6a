import json

import pytest

from cotorsion_lab.exception import ReplayMismatch, ValidationError
from cotorsion_lab.heartcat import certificate_from_dict, check_abelian, check_integral, replay_certificate
from cotorsion_lab.subcat import DEFAULT_BOUNDS


@pytest.fixture(scope="module")
def non_integral(not_integral):
    """The non-integrality certificate as it would be read back from a report"""
    verdict = check_integral(not_integral)
    return json.loads(json.dumps(verdict.certificate.to_dict()))


def test_non_integral_certificate_replays(twins, not_integral, non_integral):
    tp = twins["twin_not_integral"]
    assert replay_certificate(tp, non_integral, DEFAULT_BOUNDS, heart=not_integral)
    assert replay_certificate(tp, non_integral, DEFAULT_BOUNDS)


def test_stored_certificate_reads_back(nakayama_ctx, not_integral, non_integral):
    certificate = certificate_from_dict(nakayama_ctx, non_integral)
    assert certificate.validate(not_integral).to_dict() == non_integral


def test_tampered_certificate_is_a_mismatch(twins, not_integral, non_integral):
    tp = twins["twin_not_integral"]
    tampered = dict(non_integral, offending="[4,5]")
    with pytest.raises(ReplayMismatch):
        replay_certificate(tp, tampered, DEFAULT_BOUNDS, heart=not_integral)

    tampered = dict(non_integral, triangles=[])
    with pytest.raises(ReplayMismatch):
        replay_certificate(tp, tampered, DEFAULT_BOUNDS, heart=not_integral)


def test_non_abelian_certificate_replays(twins, not_abelian):
    data = json.loads(json.dumps(check_abelian(not_abelian).certificate.to_dict()))
    assert data == {"kind": "non_abelian", "condition": 1, "side": "outside_st_heart", "witness": "[4,4]"}
    assert replay_certificate(twins["twin_not_abelian"], data, DEFAULT_BOUNDS, heart=not_abelian)

    with pytest.raises(ReplayMismatch):
        replay_certificate(twins["twin_not_abelian"], dict(data, witness="[3,5]"), DEFAULT_BOUNDS,
                           heart=not_abelian)


def test_unknown_certificate_kinds(nakayama_ctx, twins, abelian):
    with pytest.raises(ValidationError):
        certificate_from_dict(nakayama_ctx, {"kind": "hunch"})

    with pytest.raises(ReplayMismatch):
        replay_certificate(twins["twin_abelian"], {"kind": "hunch"}, DEFAULT_BOUNDS, heart=abelian)
