import json

import pytest

import superchar
from superchar import schur
from superchar.laurent import LaurentPoly
from superchar.report import VerificationReport
from superchar.verify import (
    SuiteConfig,
    cauchy_alphabets,
    cauchy_check,
    check_fold_dimensions,
    check_fold_double_form,
    check_fold_hook_sanity,
    check_lr_oracle,
    check_partition_properties,
    check_schur_invariants,
    check_schur_stability,
    littlewood_sum_check,
    power_det_check,
    run_suite,
    suite_to_json,
)

SMALL = SuiteConfig(degmax=3, max_lambda_size=2, max_rank=1, t_count=2, parallelism=1, seed=1)


def test_report_invariant():
    with pytest.raises(ValueError):
        VerificationReport("x", {}, True, witness="oops")
    with pytest.raises(ValueError):
        VerificationReport("x", {}, False)


def test_cauchy_single_row_example():
    X, Y, _ = cauchy_alphabets(1, 0, 1)
    assert cauchy_check("cauchy_plain", X, Y, 1, 3).passed


def test_cauchy_square_empty_alphabets():
    X, Y, _ = cauchy_alphabets(0, 0, 2)
    assert cauchy_check("cauchy_square", X, Y, 2, 4).passed


def test_cauchy_angle_dual_example():
    X, Y, _ = cauchy_alphabets(1, 1, 2)
    assert cauchy_check("cauchy_angle_dual", X, Y, 2, 4).passed


def test_cauchy_all_kinds_small():
    X, Y, _ = cauchy_alphabets(1, 1, 2)
    for kind in ("cauchy_plain", "cauchy_square", "cauchy_angle", "cauchy_angle_dual"):
        assert cauchy_check(kind, X, Y, 2, 4).passed, kind


def test_cauchy_degmax_zero_trivial():
    X, Y, _ = cauchy_alphabets(2, 1, 2)
    for kind in ("cauchy_plain", "cauchy_square", "cauchy_angle", "cauchy_angle_dual"):
        assert cauchy_check(kind, X, Y, 2, 0).passed


def test_cauchy_truncation_prefix_soundness():
    X, Y, _ = cauchy_alphabets(1, 1, 2)
    results = [cauchy_check("cauchy_plain", X, Y, 2, d).passed for d in range(7)]
    assert all(results)


def test_littlewood_examples():
    assert littlewood_sum_check("schur_sum", 1, 3).passed
    assert littlewood_sum_check("littlewood_even_rows", 2, 4).passed
    assert littlewood_sum_check("littlewood_even_columns", 2, 4).passed


def test_power_det_small():
    table = schur.t_table(1)
    rep = power_det_check(1)
    assert rep.passed
    t1 = LaurentPoly.variable(table, "t1")
    # m = 1 reduces to 1 - t1^2 on both sides
    one = LaurentPoly.const(table, 1)
    assert (one - t1 * t1) == (one - t1 * t1)
    for m in (2, 3):
        assert power_det_check(m).passed


def test_power_det_rejects_zero():
    with pytest.raises(ValueError):
        power_det_check(0)


def test_unknown_kinds_rejected():
    X, Y, _ = cauchy_alphabets(1, 0, 1)
    with pytest.raises(ValueError):
        cauchy_check("nope", X, Y, 1, 2)
    with pytest.raises(ValueError):
        littlewood_sum_check("nope", 1, 2)


def test_battery_pieces_pass():
    assert all(r.passed for r in check_partition_properties(8, 4, 3))
    assert check_schur_stability(3, seed=5, samples=6).passed
    assert all(r.passed for r in check_schur_invariants(3))
    assert check_lr_oracle(3).passed
    assert all(r.passed for r in check_fold_dimensions(2))
    assert all(r.passed for r in check_fold_double_form(2, 2))
    assert check_fold_hook_sanity(1, 3).passed


def test_suite_config_validation():
    with pytest.raises(ValueError):
        SuiteConfig(degmax=-1)
    with pytest.raises(ValueError):
        SuiteConfig.from_json_dict({"degmax": 2, "bogus": 1})
    cfg = SuiteConfig.from_json_dict({"degmax": 2})
    assert cfg.degmax == 2 and cfg.t_count == 3


def test_run_suite_small_all_pass():
    reports = run_suite(SMALL)
    assert reports
    failing = [r for r in reports if not r.passed]
    assert not failing, [r.to_json() for r in failing[:3]]
    keys = [r.sort_key() for r in reports]
    assert keys == sorted(keys)


def test_run_suite_default_all_pass():
    reports = run_suite(SuiteConfig())
    failing = [r for r in reports if not r.passed]
    assert not failing, [r.to_json() for r in failing[:3]]
    assert len(reports) > 1000


def test_run_suite_degmax_zero_trivial():
    reports = run_suite(SuiteConfig(degmax=0, max_lambda_size=0, max_rank=1, t_count=1))
    assert all(r.passed for r in reports)


def test_concurrent_cache_access():
    from concurrent.futures import ThreadPoolExecutor

    import superchar
    from superchar.schur import BracketType, bracket_schur

    superchar.clear_caches()
    X, Y, _ = cauchy_alphabets(2, 1, 1)

    def work(_):
        return bracket_schur(BracketType.SQUARE, (2, 1), X, Y)

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(work, range(32)))
    assert all(r == results[0] for r in results)


def test_run_suite_deterministic_across_parallelism():
    serial = suite_to_json(run_suite(SMALL))
    parallel = suite_to_json(
        run_suite(
            SuiteConfig(
                degmax=3, max_lambda_size=2, max_rank=1, t_count=2, parallelism=4, seed=1
            )
        )
    )
    assert serial == parallel


def test_corrupted_series_is_detected(monkeypatch):
    superchar.clear_caches()
    real = schur.h_list

    def corrupted(X, Y, degmax):
        hs = list(real(X, Y, degmax))
        if len(hs) > 1:
            hs[1] = hs[1] + 1  # inject a wrong constant term
        return tuple(hs)

    monkeypatch.setattr(schur, "h_list", corrupted)
    try:
        reports = run_suite(SuiteConfig(degmax=2, max_lambda_size=1, max_rank=1, t_count=1))
        failing = [r for r in reports if not r.passed]
        assert failing
        assert all(r.witness is not None for r in failing)
    finally:
        monkeypatch.undo()
        superchar.clear_caches()


def test_suite_json_is_valid_json_lines():
    reports = run_suite(SuiteConfig(degmax=1, max_lambda_size=1, max_rank=1, t_count=1))
    payload = suite_to_json(reports)
    for line in payload.strip().splitlines():
        record = json.loads(line)
        assert set(record) >= {"id", "params", "pass"}
