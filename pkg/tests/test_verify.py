import json

from qpcat.verify import VerifyConfig, verify_paper


def strip_timing(report):
    return [(r.name, r.status, json.dumps(r.details, sort_keys=True, default=str))
            for r in report.results]


def test_filter_selects_single_check():
    report = verify_paper(VerifyConfig(only="five-vertex"))
    assert len(report.results) == 1
    assert report.results[0].status == "pass"
    assert report.exit_code == 0


def test_reports_are_deterministic_modulo_timing():
    cfg = VerifyConfig(only="derivative", involution_samples=5)
    assert strip_timing(verify_paper(cfg)) == strip_timing(verify_paper(cfg))


def test_low_truncation_skips_dimension_check_and_nothing_fails():
    report = verify_paper(VerifyConfig(truncation=4, only="jacobian"))
    assert [r.status for r in report.results] == ["skipped"]
    assert report.exit_code == 0
    assert not report.all_passed


def test_report_serialization_shape():
    report = verify_paper(VerifyConfig(only="genus"))
    data = report.to_json()
    assert set(data) == {"all_passed", "checks"}
    check = data["checks"][0]
    assert set(check) == {"name", "claim", "status", "elapsed_ms", "details"}
    text = report.to_text()
    assert "genus" in text and text.strip().endswith("skipped")
