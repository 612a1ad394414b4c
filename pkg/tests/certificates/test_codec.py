import json

import pytest

from graver_certs.schemas import LowerBoundCertificate
from graver_certs.services.certificates import (
    CertificateParseError,
    certificate_from_family,
    check_certificate,
    parse_certificate,
    serialize_certificate,
)
from graver_certs.services.construction import build_certificate, seed_3x4


def test_round_trip_of_seed_certificate() -> None:
    certificate = certificate_from_family(seed_3x4())
    assert parse_certificate(serialize_certificate(certificate)) == certificate


def test_round_trip_without_walks_keeps_big_coefficients() -> None:
    certificate = certificate_from_family(build_certificate(6, 8), include_walks=False)
    text = serialize_certificate(certificate)
    assert "walks" not in json.loads(text)
    assert parse_certificate(text) == certificate


def test_walks_field_lists_vertex_pairs() -> None:
    document = json.loads(serialize_certificate(certificate_from_family(seed_3x4())))
    assert document["walks"][-1] == [[1, 2], [2, 3], [3, 4]]
    assert document["claimed_bound"] == 27


def test_parse_fixture(load_fixture) -> None:
    certificate = parse_certificate(load_fixture("k22_pair.json"))
    assert certificate.t == 2
    assert check_certificate(certificate).certified_bound == 2


def _document(**changes) -> str:
    data = certificate_from_family(seed_3x4()).model_dump()
    data.update(changes)
    return json.dumps(data)


def test_parse_rejects_length_mismatch() -> None:
    with pytest.raises(CertificateParseError) as excinfo:
        parse_certificate(_document(coefficients=[7, 2, 3]))
    assert "3 coefficients for 7 circuits" in str(excinfo.value)


def test_parse_rejects_negative_coefficient() -> None:
    with pytest.raises(CertificateParseError) as excinfo:
        parse_certificate(_document(coefficients=[7, 2, 3, 3, 5, 6, -1]))
    assert "coefficients.6" in str(excinfo.value)


def test_parse_rejects_float_entries(load_fixture) -> None:
    with pytest.raises(CertificateParseError) as excinfo:
        parse_certificate(load_fixture("float_entry.json"))
    assert "circuits.0.0.0" in str(excinfo.value)


def test_parse_rejects_unknown_field() -> None:
    with pytest.raises(CertificateParseError) as excinfo:
        parse_certificate(_document(comment="hello"))
    assert "comment" in str(excinfo.value)


def test_parse_rejects_wrong_circuit_shape() -> None:
    data = certificate_from_family(seed_3x4()).model_dump()
    data["circuits"][1] = data["circuits"][1][:2]
    with pytest.raises(CertificateParseError) as excinfo:
        parse_certificate(json.dumps(data))
    assert "circuits[1]" in str(excinfo.value)


def test_parse_reports_json_position() -> None:
    with pytest.raises(CertificateParseError) as excinfo:
        parse_certificate('{"t": 3,\n "r": }')
    assert "line 2" in str(excinfo.value)


def test_model_rejects_boolean_entries() -> None:
    with pytest.raises(ValueError):
        LowerBoundCertificate(
            t=2, r=2, circuits=[[[True, -1], [-1, 1]]], coefficients=[1], claimed_bound=1
        )
