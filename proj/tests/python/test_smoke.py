import pytest

import gammapath as gp

Z3 = {"type": "cyclic_product", "orders": [3]}


def triangle_star():
    return {
        "group": Z3,
        "model": "directed",
        "vertices": [0, 1, 2, 3],
        "A": [1, 2, 3],
        "edges": [
            {"id": 0, "u": 0, "v": 1, "label": 1, "tail": 0},
            {"id": 1, "u": 0, "v": 2, "label": 1, "tail": 0},
            {"id": 2, "u": 0, "v": 3, "label": 2, "tail": 0},
        ],
    }


def test_classify():
    assert gp.classify({"type": "cyclic_product", "orders": [4]}, ell=2)["ep"] is True
    assert gp.classify({"type": "cyclic_product", "orders": [8]})["ep"] is False
    assert gp.classify({"type": "cyclic_product", "orders": [2, 2]})["zero_path_ep"] is True


def test_pack_cover_duality():
    g = triangle_star()
    assert gp.pack(g)["nu"] == 1
    assert gp.cover(g)["cover"] == [0]
    d = gp.duality(g)
    assert d["bound_applies"] and d["bound_holds"]


def test_frame_zero_family():
    out = gp.frame(triangle_star(), 1)
    assert out["outcome"]["kind"] == "packing"
    assert out["outcome"]["paths"][0]["vertices"] == [1, 0, 2]


def test_gadget_and_sharpness():
    g = gp.gadget("gamma", 2, verify=True)
    assert g["report"]["nu"] == 1 and g["report"]["tau"] == 2
    gpp = gp.gadget("gamma-double-prime", 2, {"type": "cyclic_product", "orders": [4]}, ell=1, g=2)
    assert len(gpp["graph"]["vertices"]) == 8
    ladder = gp.sharpness(3)
    assert [0] not in ladder["reachable"]


def test_errors_map_to_python_exceptions():
    with pytest.raises(gp.InvalidArgument):
        gp.classify({"type": "free"})
    with pytest.raises(gp.InvalidArgument):
        gp.frame(triangle_star(), 0)
    g = triangle_star()
    g["model"] = "undirected"
    for e in g["edges"]:
        del e["tail"]
    with pytest.raises(gp.PreconditionFailed):
        gp.normalize(g)
    assert issubclass(gp.LimitExceeded, gp.GammapathError)


def test_run_criterion():
    r = gp.run_criterion(4, seed=7)
    assert r["verdict"] == "PASS"
