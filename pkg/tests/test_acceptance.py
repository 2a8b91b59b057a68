import json
import time

import pytest

from hessberg.catalog import CatalogBuilder
from hessberg.errors import InputError
from hessberg.validation import TYPE_CHECKS, CheckStats, PropertySuite, named_betti_values, type_checks, validate_all
from hessberg.weyl import enumerate_weyl, inversion_set


def test_check_stats():
    stats = CheckStats()
    stats.record(True, "fine")
    stats.record(False, "broken")
    assert stats.as_dict() == {'cases': 2, 'failures': ["broken"]}


def test_named_betti_values():
    stats = named_betti_values()
    assert stats.cases == 3
    assert stats.failures == []


@pytest.mark.parametrize('task', [('A2', True), ('B2', True), ('G2', True), ('A3', False)])
def test_type_checks(task):
    results = type_checks(task)
    assert set(results) == set(TYPE_CHECKS)
    assert all(not stats['failures'] for stats in results.values())
    assert results['enumeration']['cases'] > 0
    assert results['euler']['cases'] > 0


def test_suite_up_to_rank_2(tmp_path):
    suite = PropertySuite(max_rank=2, jobs=2)
    assert suite.semisimple_types == ['A1', 'A2', 'B2', 'G2']
    assert suite.nilpotent_types == ['A1', 'A2', 'B2', 'G2']
    suite.run()
    assert suite.passed, {k: v['failures'][:3] for k, v in suite.results.items() if v['failures']}
    assert suite.results['named_betti']['cases'] == 3
    assert suite.results['determinism']['cases'] == 4

    path = tmp_path / "nested" / "report.json"
    suite.save_results(str(path))
    report = json.loads(path.read_text())
    assert report['statistics']['types'] == ['A1', 'A2', 'B2', 'G2']
    assert set(report['by_type']) == {'A1', 'A2', 'B2', 'G2'}


def test_results_are_empty_before_running():
    suite = PropertySuite(max_rank=1)
    assert not suite.passed
    assert suite.get_statistics() == {}


def test_bad_max_rank():
    with pytest.raises(InputError):
        PropertySuite(max_rank=0)


@pytest.mark.slow
def test_default_suite_passes():
    stats = validate_all()
    assert stats['passed']
    assert stats['types'] == ['A1', 'A2', 'A3', 'B2', 'B3', 'C3', 'G2']


def _elapsed(fn):
    start = time.perf_counter()
    result = fn()
    return time.perf_counter() - start, result


@pytest.mark.slow
def test_f4_enumeration_time(system):
    rs = system('F4')
    seconds, sizes = _elapsed(lambda: [len(inversion_set(w)) for w in enumerate_weyl(rs)])
    assert len(sizes) == 1152
    assert max(sizes) == rs.n_positive
    assert seconds < 3.0


@pytest.mark.slow
def test_a3_catalog_time():
    seconds, rows = _elapsed(CatalogBuilder('A3').build)
    assert len(rows) == 112
    assert seconds < 3.0
