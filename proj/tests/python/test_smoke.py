import json
import math

import pytest

rosette = pytest.importorskip("rosette")


def test_endpoint_values_match_series():
    k, g1 = rosette.endpoint_values(6)
    value, bound, _, _ = rosette.eval_series("H", 6, 1.0)
    assert abs(value - k) < 1e-12
    assert bound <= 1e-12
    assert abs(g1 / k - 5 * math.tan(math.pi / 12)) < 1e-12


def test_series_against_mpmath():
    mpmath = pytest.importorskip("mpmath")
    z = 0.4 + 0.7j
    for n in (3, 7):
        rho = 1 / (2 * n)
        ref = complex(mpmath.hyp2f1(0.5, rho, 1 + rho, z))
        assert abs(rosette.eval_series("H", n, z)[0] - ref) < 1e-12


def test_mapping_summands():
    h, gbar, f = rosette.f(5, 0.3, 0.2 + 0.1j)
    assert abs(h + gbar - f) < 1e-15
    assert rosette.jacobian(5, 0.3, 0.5j) > 0


def test_features_and_reduction():
    rep = rosette.features(5, math.pi / 4)
    assert rep["schema_version"] == 1
    assert sum(f["kind"] == "cusp" for f in rep["features"]) == 5
    beta, l = rosette.reduce_beta(math.pi)
    assert l == 1 and abs(beta) < 1e-15
    assert abs(rosette.parse_beta("-2pi/5") + 2 * math.pi / 5) < 1e-15


def test_errors_are_typed():
    with pytest.raises(rosette.DomainError):
        rosette.eval_series("H", 5, 2.0)
    with pytest.raises(rosette.ParseError):
        rosette.parse_beta("nonsense")
    with pytest.raises(rosette.RosetteError):
        rosette.f(2, 0.0, 0.1)


def test_render_and_cli():
    svg, gap = rosette.render_svg(6, 0.0, overlays=["features"])
    assert svg.startswith("<?xml")
    assert gap < 0.5
    code, out, _ = rosette.run_cli(["features", "--n", "6", "--beta", "0"])
    assert code == 0
    assert len(json.loads(out)["features"]) == 12
    code, _, err = rosette.run_cli(["verify", "--n", "2"])
    assert code == 2 and "usage" in err
