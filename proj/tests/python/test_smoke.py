import ninecong


def test_model_strings():
    d = ninecong.model(["0", "-27"], sign="direct")
    assert d["variables"] == ["x", "y", "z", "t"]
    assert d["a"] == "0" and d["b"] == "-27"
    assert d["F1"] and d["F2"]


def test_forget_tautological_point():
    d = ninecong.forget(["0", "-27"], ["1", "0", "0", "0"], sign="direct")
    assert (d["r"], d["s"]) == ("1", "0")
    assert len(d["congruent_curve"]) == 5


def test_self_congruence():
    rep = ninecong.verify_congruence(["0", "0", "1", "-1", "0"], ["0", "0", "1", "-1", "0"],
                                     modulus=9, bound=100)
    assert rep["all_congruent"]
    assert not rep["vacuous"]
    assert rep["isogeny_excluded"] is None
    assert all(r["ap1"] == r["ap2"] for r in rep["rows"])


def test_j_invariant():
    assert ninecong.j_invariant(["0", "-432"]) == "0"
    assert ninecong.j_invariant(["0", "0", "1", "-1", "0"]) == "110592/37"


def test_search_points_monotone():
    small = ninecong.search_points(["0", "-27"], height=1)
    big = ninecong.search_points(["0", "-27"], height=2)
    pts_small = {tuple(p) for p in small["points"]}
    pts_big = {tuple(p) for p in big["points"]}
    assert pts_small <= pts_big
    assert big["scanned"] > small["scanned"]


def test_surface_fiber():
    fiber = ninecong.surface_fiber("reverse", "0")
    assert fiber == ["-6", "3", "-7", "0", "0"]
    s = ninecong.surface("direct")
    assert "T" in s["a1"]
    assert s["section"] == ("0", "0")


def test_reproduce_example():
    assert "ex-201-reverse" in ninecong.case_ids()
    rep = ninecong.reproduce("ex-201-reverse")
    assert rep["ok"]
    assert all(st["ok"] for st in rep["stages"])


def test_verify_paper_symbolic():
    out = ninecong.verify_paper(skip=["surfaces", "examples"])
    statuses = {(i["module"], i["status"]) for i in out["items"]}
    assert ("symbolic", "pass") in statuses
    assert ("surfaces", "skip") in statuses
    assert out["all_passed"]
