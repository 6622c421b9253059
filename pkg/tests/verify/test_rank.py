import pytest

from hardyops.fourier.rational import RationalSymbol
from hardyops.fourier.series import CoeffSeries
from hardyops.inner.functions import blaschke, singular_inner
from hardyops.operators.assembly import UNIT, OperatorKind
from hardyops.utils.domain_exceptions import InvalidSpecError
from hardyops.verify.rank import RankVerdict, kronecker_symbol, rank_study
from hardyops.verify.records import Status


def test_finite_theta_is_bounded_by_degree():
    study = rank_study(OperatorKind.RTO, RationalSymbol.monomial(-2), UNIT, blaschke(0.5), (8, 16))

    assert study.verdict is RankVerdict.BOUNDED_BY_DEGREE
    assert study.status is Status.CERTIFIED
    assert all(rank <= 1 for rank in study.ranks)
    assert [sample.window for sample in study.samples] == [8, 16]


@pytest.mark.parametrize("windows", [(), (16, 8), (8, 8)])
def test_windows_must_increase(windows):
    with pytest.raises(InvalidSpecError) as exc_info:
        rank_study(OperatorKind.RTO, RationalSymbol.constant(1.0), UNIT, blaschke(0), windows)

    assert exc_info.value.code == "INVALID_WINDOWS"


def test_atoms_need_a_hankel_form():
    with pytest.raises(InvalidSpecError) as exc_info:
        rank_study(OperatorKind.TTO, RationalSymbol.constant(1.0), UNIT, singular_inner(0.0, 1.0), (8, 12))

    assert exc_info.value.code == "NO_HANKEL_FORM"


@pytest.mark.slow
def test_kronecker_symbol_plateaus_on_singular_theta():
    theta = singular_inner(0.0, 1.0)

    study = rank_study(OperatorKind.RTO, kronecker_symbol(UNIT, theta), UNIT, theta, (8, 12, 16), top_k=3)

    assert study.verdict is RankVerdict.PLATEAU
    assert study.status is Status.HEURISTIC
    assert len(study.samples) == 3
    assert all(len(sample.singular_values) <= 3 for sample in study.samples)


@pytest.mark.slow
def test_laurent_symbol_grows_on_singular_theta():
    theta = singular_inner(0.0, 1.0)
    phi = CoeffSeries(-3, [0.5, -1, 2j, 1, 0.25])

    study = rank_study(OperatorKind.RTO, phi, blaschke(0), theta, (50, 100, 200))

    assert study.verdict is RankVerdict.GROWING
    assert study.status is Status.HEURISTIC
    assert study.ranks[0] < study.ranks[1] < study.ranks[2]
