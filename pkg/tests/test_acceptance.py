"""Full-size verification campaigns

Deselected by default; run with ``pytest -m slow``.
"""

import pytest

from idealforge.algebra import FieldSpec
from idealforge.oracle import InstanceSpec, run_campaign

pytestmark = pytest.mark.slow

F2 = FieldSpec.prime(2)
F3 = FieldSpec.prime(3)
F5 = FieldSpec.prime(5)
F7 = FieldSpec.prime(7)
F13 = FieldSpec.prime(13)
Q = FieldSpec.rationals()

RANK_FIELDS = [F2, F3, F5, F7, Q]


def assert_clean(target, spec, trials):
    summary = run_campaign(target, spec, trials=trials)
    assert summary.failures == []
    assert summary.agreements == trials
    return summary


@pytest.mark.parametrize("field", RANK_FIELDS, ids=lambda f: f.tag)
def test_single_rank(field):
    """Test 2000 single ideal matrices with n <= 6 and m <= 10"""
    assert_clean("rank", InstanceSpec(seed=2005, field=field, n1_max=6, m_max=10), 2000)


@pytest.mark.parametrize("field", RANK_FIELDS, ids=lambda f: f.tag)
def test_double_rank(field):
    """Test 2000 double ideal matrices with n1, n2 <= 5"""
    spec = InstanceSpec(seed=2011, field=field, n1_max=5, n2_max=5, m_max=10)
    summary = assert_clean("double-rank", spec, 2000)
    assert summary.regimes.get("shared_factor", 0) > 0


@pytest.mark.parametrize("field", RANK_FIELDS, ids=lambda f: f.tag)
def test_full_rank_criterion(field):
    """Test the gcd criterion on 1000 square double ideal matrices"""
    spec = InstanceSpec(seed=2015, field=field, n1_max=5, n2_max=5)
    summary = assert_clean("full-rank", spec, 1000)
    assert set(summary.regimes) == {"square_full_rank", "square_singular"}


@pytest.mark.parametrize("field", [F5, F7, F13], ids=lambda f: f.tag)
def test_kernel_families(field):
    """Test emitted kernel vectors over split moduli"""
    spec = InstanceSpec(seed=2014, field=field, n1_max=5, n2_max=5)
    assert_clean("kernel", spec, 500)


@pytest.mark.parametrize("field", [F5, F7, F13, Q], ids=lambda f: f.tag)
def test_vandermonde_factorization(field):
    """Test the factorization identities on 500 split instances"""
    spec = InstanceSpec(seed=2004, field=field, n1_max=5, n2_max=5, m_max=10)
    summary = assert_clean("vandermonde", spec, 500)
    assert summary.regimes.get("rectangular", 0) > 0


@pytest.mark.parametrize("field", [F2, F3], ids=lambda f: f.tag)
def test_code_dimension(field):
    """Test 500 codes with k + l - m <= 10 against brute-force spans"""
    spec = InstanceSpec(seed=32, field=field, n1_max=6, n2_max=6, message_dim_max=10)
    assert_clean("code-dimension", spec, 500)


@pytest.mark.parametrize("field", [F2, F3], ids=lambda f: f.tag)
def test_generator_rows(field):
    """Test 500 codes for block rows, spanning windows and span deficits"""
    spec = InstanceSpec(seed=31, field=field, n1_max=6, n2_max=6, message_dim_max=10)
    summary = assert_clean("generator-rows", spec, 500)
    assert summary.regimes.get("span_deficit", 0) > 0
