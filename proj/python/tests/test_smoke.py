import ribbon_knots as rk


def test_parse_and_stats():
    d = rk.parse_dt([4, 6, 2])
    assert d.crossings == 3
    assert d.circles == 0
    assert d.dt() == [4, 6, 2]


def test_figure_eight_nonslice():
    v = rk.classify(rk.parse_dt([4, 6, 8, 2]))
    assert v.kind == rk.VerdictKind.NonSlice
    assert v.certificate is None
    assert not rk.square_determinant(rk.parse_dt([4, 6, 8, 2]))


def test_stevedore_ribbon_with_verified_certificate():
    v = rk.classify(rk.parse_dt([4, 8, 12, 10, 2, 6]))
    assert v.kind == rk.VerdictKind.AlgorithmicallyRibbon
    assert v.band_count == 1
    ok, diagnostic = rk.verify_certificate(v.certificate)
    assert ok, diagnostic
    assert "<svg" in rk.render_svg(v.certificate)
    assert "frame 0" in rk.render_text(v.certificate)


def test_two_bridge_matches_dt():
    assert rk.two_bridge([5, 2]).crossings == 6
    assert rk.minimally_nonalternating(rk.two_bridge([5, 2]))
