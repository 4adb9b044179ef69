import json
import math

import pytest

import wco


def make_s2():
    return wco.build_space(["0", "1"], [1.0, 1.0], ["0", "0"], [1 + 0j, 1 + 0j])


def make_c3():
    return wco.build_space(["0", "1", "2"], [1.0, 1.0, 1.0], ["1", "2", "0"],
                           [1 + 0j, 2 + 0j, 4 + 0j])


def test_density_values():
    h = wco.radon_nikodym(make_s2())
    assert h == [2.0, 0.0]
    assert wco.radon_nikodym(make_c3()) == [16.0, 1.0, 4.0]


def test_build_validation():
    with pytest.raises(ValueError):
        wco.build_space(["0"], [1.0], ["5"], [1 + 0j])
    with pytest.raises(ValueError):
        wco.build_space(["0"], [-1.0], ["0"], [1 + 0j])


def test_aluthge_weight_and_density():
    c3 = make_c3()
    w1 = wco.aluthge_weight(c3, 1.0)
    assert [abs(w - e) < 1e-14 for w, e in zip(w1, [4, 1, 2])] == [True] * 3
    h1 = wco.aluthge_rn(c3, 1.0)
    assert [abs(a - b) < 1e-12 for a, b in zip(h1, [4.0, 16.0, 1.0])] == [True] * 3
    # the transform's density is the density of the reweighted operator
    h2 = wco.radon_nikodym(c3.reweighted(w1))
    assert all(abs(a - b) < 1e-12 for a, b in zip(h1, h2))


def test_verdicts():
    s2 = make_s2()
    v = wco.is_p_hyponormal(s2, 1.0)
    assert v["status"] == "fails"
    assert v["witness"]["point"] == "1"

    ident = wco.build_space(["a", "b"], [1.0, 1.0], ["a", "b"], [2 + 0j, 3j])
    assert wco.is_quasinormal(ident)["status"] == "holds"
    assert wco.aluthge_fixed_point(ident, 0.5)["status"] == "holds"
    assert wco.is_quasinormal(make_c3())["status"] == "fails"

    assert wco.is_densely_defined(s2)["status"] == "holds"
    assert wco.is_bounded(s2)["constant"] == 2.0
    assert wco.aluthge_domain_perp(s2, 1.0) == []


def test_serwis_chain():
    r = wco.serwis_conditions(make_c3(), 0.5)
    assert r["chain_consistent"]


def test_operator_actions():
    s2 = make_s2()
    cf = wco.apply_operator(s2, [1 + 0j, -1 + 0j])
    assert cf == [1 + 0j, 1 + 0j]
    out = wco.apply_adjoint_modulus_power(s2, 1.0, [1 + 0j, 0j])
    r = math.sqrt(2.0) / 2.0
    assert all(abs(z - r) < 1e-13 for z in out)


def test_oracle_matrices():
    s2 = make_s2()
    a = wco.matrix_of(s2)
    assert a[0][0] == 1 and a[1][0] == 1 and a[0][1] == 0
    d = wco.aluthge_matrix(s2, 0.5)
    assert abs(d[0][0] - 1) < 1e-12 and abs(d[1][1]) < 1e-12
    u, m_abs = wco.polar(s2)
    assert abs(m_abs[0][0] - math.sqrt(2.0)) < 1e-12
    assert abs(u[0][0] - 1 / math.sqrt(2.0)) < 1e-12


def test_stages():
    assert wco.stages_feasible(0.5, 0.3) == (True, True)
    first, second = wco.stages_feasible(0.6, 0.5)
    assert not first


def test_gallery_and_json_roundtrip():
    names = [f["name"] for f in wco.gallery_list()]
    assert "bilateral" in names and "buda" in names

    space, core = wco.gallery_window("bilateral", {"base": "2"}, 8)
    assert len(core) == 17
    h = wco.radon_nikodym(space)
    i = space.index_of("0")
    assert abs(h[i] - 4.0) < 1e-12  # h(0) = base^2

    text = space.to_json()
    back = wco.space_from_json(text)
    assert len(back) == len(space)
    doc = json.loads(text)
    assert set(doc) == {"points", "mass", "phi", "w"}


def test_improvement_on_random_quasinormal():
    s = wco.random_space(7, 6)
    if wco.is_p_hyponormal(s, 0.5)["status"] == "holds":
        assert wco.improvement_report(s, 0.5, 0.5)["status"] == "holds"
