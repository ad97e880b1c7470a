import json
import math

import numpy as np
import pytest

from harmonic_bayes import io
from harmonic_bayes.basis import BasisSpec, CoefficientVector, Domain, project
from harmonic_bayes.densities import (
    gaussian,
    indicator,
    load_grid_csv,
    mixture,
    parse_density,
    sampled,
    uniform,
)
from harmonic_bayes.errors import CoefficientFileError, InputContractError
from harmonic_bayes.oracles import trapezoid

PI_DOM = BasisSpec.fourier(4).domain


def mass(d, lo=-math.pi, hi=math.pi, M=200_001):
    t = np.linspace(lo, hi, M)
    return trapezoid(d(t), t[1] - t[0])


def test_uniform_and_indicator():
    assert mass(uniform(PI_DOM)) == pytest.approx(1.0, rel=1e-10)
    box = indicator(-1, 1)
    assert box(0.0) == 0.5 and box(1.5) == 0.0
    assert mass(box) == pytest.approx(1.0, abs=1e-4)
    with pytest.raises(InputContractError):
        uniform(Domain.real_line())
    with pytest.raises(InputContractError):
        indicator(1, 1)


def test_gaussian_truncation_renormalizes():
    g = gaussian(0.0, 2.0, PI_DOM)
    assert mass(g) == pytest.approx(1.0, rel=1e-9)
    raw = gaussian(0.0, 2.0, PI_DOM, normalize=False)
    assert mass(raw) < 0.95
    assert raw(0.0) == pytest.approx(1 / (2 * math.sqrt(2 * math.pi)))
    with pytest.raises(InputContractError):
        gaussian(0, 0)


def test_mixture():
    m = mixture([(1, -1, 0.3), (3, 1, 0.3)], PI_DOM)
    assert mass(m) == pytest.approx(1.0, rel=1e-9)
    assert m(1.0) / m(-1.0) == pytest.approx(3.0, rel=1e-6)
    with pytest.raises(InputContractError):
        mixture([])
    with pytest.raises(InputContractError):
        mixture([(-1, 0, 1), (2, 0, 1)])


def test_sampled_interpolates_and_vanishes_outside():
    d = sampled([2, 0, 1], [0, 0, 2])
    assert d(0.5) == pytest.approx(1.0)
    assert d(-1) == 0 and d(3) == 0
    with pytest.raises(InputContractError):
        sampled([0, 0], [1, 1])
    with pytest.raises(InputContractError):
        sampled([0], [1])


def test_grid_csv(tmp_path):
    p = tmp_path / "g.csv"
    p.write_text("theta,value\n-1,0\n0,1\n1,0\n\n")
    d = load_grid_csv(p)
    assert d(0.5) == pytest.approx(0.5)
    bad = tmp_path / "bad.csv"
    bad.write_text("0,1\n1,oops\n")
    with pytest.raises(CoefficientFileError):
        load_grid_csv(bad)
    with pytest.raises(CoefficientFileError):
        load_grid_csv(tmp_path / "missing.csv")


@pytest.mark.parametrize(
    "text,at,expect",
    [
        ("uniform", 0.0, 1 / (2 * math.pi)),
        ("indicator:-1,1", 0.0, 0.5),
        ("GAUSSIAN: 0, 1", 10.0, 0.0),
    ],
)
def test_parse_density(text, at, expect):
    assert parse_density(text, PI_DOM)(at) == pytest.approx(expect, abs=1e-15)


def test_parse_density_normalization_flag():
    a = parse_density("gaussian:0,1", PI_DOM)(0.0)
    b = parse_density("gaussian:0,1", PI_DOM, normalize=False)(0.0)
    assert a > b == pytest.approx(1 / math.sqrt(2 * math.pi))
    assert mass(parse_density("mixture:1,0,0.3;1,1,0.2", PI_DOM)) == pytest.approx(1, rel=1e-9)


@pytest.mark.parametrize("text", ["", "laplace:0,1", "gaussian:0", "gaussian:a,b", "grid:", "indicator:1,2,3"])
def test_parse_density_errors(text):
    with pytest.raises(InputContractError):
        parse_density(text, PI_DOM)


# ------------------------------------------------------------------ coefficient files


@pytest.mark.parametrize(
    "spec",
    [BasisSpec.fourier(6), BasisSpec.fourier(3, 0.0, 1.0), BasisSpec.cosine(5, -2.0, 7.5), BasisSpec.hermite(4)],
)
def test_file_round_trip_is_bit_exact(tmp_path, rng, spec):
    c = CoefficientVector(spec, rng.standard_normal(spec.N) * 1e-3 + 1j * rng.standard_normal(spec.N) / 3)
    p = tmp_path / "c.json"
    io.write(p, c, {"density": "uniform"})
    back = io.read(p)
    assert back.coeffs.spec == spec
    np.testing.assert_array_equal(back.coeffs.entries, c.entries)
    assert back.source == {"density": "uniform"}
    assert not (tmp_path / "c.json.tmp").exists()


def test_dumps_is_valid_json():
    c = project(BasisSpec.fourier(2), lambda t: 1 + np.cos(t))
    doc = json.loads(io.dumps(c))
    assert doc["format_version"] == 1
    assert doc["basis"]["kind"] == "fourier" and doc["basis"]["K"] == 2
    assert len(doc["entries"]) == 5
    assert "source" not in doc


def test_hermite_domain_serialized_as_real_line():
    c = CoefficientVector(BasisSpec.hermite(1), [1, 0])
    assert json.loads(io.dumps(c))["basis"]["domain"] == "real-line"


def good_doc():
    return {
        "format_version": 1,
        "basis": {"kind": "fourier", "domain": [-1, 1], "K": 1},
        "entries": [[0, 0], [1, 0], [0, 0]],
    }


def mutate(**changes):
    d = good_doc()
    for k, v in changes.items():
        if k in d["basis"]:
            d["basis"][k] = v
        else:
            d[k] = v
    return json.dumps(d)


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[]",
        mutate(format_version=2),
        mutate(entries=[[0, 0], [1, 0]]),
        mutate(entries=[[0], [1], [2]]),
        mutate(K=1.5),
        mutate(K=True),
        mutate(kind="legendre"),
        mutate(domain=[1, -1]),
        mutate(domain="everywhere"),
        mutate(entries="abc"),
        mutate(source=[1]),
        json.dumps({"format_version": 1, "entries": []}),
    ],
)
def test_malformed_files(text):
    with pytest.raises(CoefficientFileError) as ei:
        io.loads(text)
    assert ei.value.exit_code == 3


def test_good_doc_loads():
    f = io.loads(json.dumps(good_doc()))
    assert f.coeffs.at(0) == 1 and f.source == {}


def test_read_and_write_os_errors(tmp_path):
    with pytest.raises(CoefficientFileError):
        io.read(tmp_path / "nope.json")
    with pytest.raises(CoefficientFileError):
        io.write(tmp_path / "no" / "dir.json", CoefficientVector(BasisSpec.fourier(0), [1]))
