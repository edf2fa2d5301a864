import catconf


def test_version():
    assert catconf.__version__ == "0.1.0"


def test_formulas_exact():
    assert catconf.perfect_case(2, [3, 3, 3]) == 6
    assert catconf.perfect_case(2, [4, 4, 4, 4]) == 10
    assert catconf.perfect_case(2, [6]) is None
    assert catconf.generic_rank_uniform(2, 5, 5) == 15
    rep = catconf.defectivity_check(2, 1, 12, 1, 5)
    assert (rep["k"], rep["kprime"], rep["defective"]) == (31, 28, True)


def test_monomials():
    assert catconf.monomial_count(2, 5) == 21
    exps = catconf.monomial_exponents(2, 2)
    assert exps[0] == [2, 0, 0]
    assert exps[-1] == [0, 0, 2]


def test_rank_preset():
    rep = catconf.rank_preset_report("cubics333", seed=7)
    assert rep["shape"] == (9, 6)
    assert rep["rank"] == 6
    assert max(rep["memberships"]) <= 1e-10


def test_rank_from_coefficients():
    # x0^2 - x2^2 has two independent first derivatives.
    coeffs = [[1, 0, 0, 0, 0, -1]]
    rep = catconf.rank(2, [2], coeffs, order=1)
    assert rep["rank"] == 2


def test_count_small_preset():
    out = catconf.count("segre-slice-6", seed=3, threads=1)
    assert out["stabilized"]
    assert out["classes"] == 6
