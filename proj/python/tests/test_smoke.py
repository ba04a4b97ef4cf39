"""Smoke tests for the python bindings; run with PYTHONPATH pointing at the
built extension module and SLICECERT_DATA at the data directory."""

import json
import os
import sys

import slicecert


def main() -> int:
    data = os.environ.get("SLICECERT_DATA", "data")
    knots = os.path.join(data, "knots.csv")

    assert slicecert.ruberman_genus(1, 3) == 1
    assert slicecert.ruberman_genus(5, 0) == 6
    assert slicecert.ruberman_genus(7, -7) == 0

    classes = slicecert.classes_of_genus_at_most(1, 3)
    assert (1, 3) in classes and (2, 0) in classes and (3, 3) in classes

    assert slicecert.torus2_signature(3, 1, 2) == -2
    assert slicecert.torus2_signature(-3, 1, 5) == 2
    assert slicecert.torus2_signature(3, 1, 6) == -1  # jump average

    trefoil = [[-1, 1], [0, -1]]
    assert slicecert.lt_signature(trefoil, 1, 2) == -2
    assert slicecert.arf_from_seifert(trefoil) == 1

    pairs = {(fa, fb) for fa, fb, _ in slicecert.framing_search(-29, 900)}
    for want in [(24, 35), (40, 21), (120, 7), (840, 1)]:
        assert want in pairs

    assert slicecert.rokhlin_vanishes(-29) == "vanishes"
    fam = slicecert.build_family(0)
    assert fam["twist_count"] == 29 and fam["fA"] == 840 and fam["rokhlin"] == "vanishes"

    assert slicecert.kprt_f(2, 6) == "17"
    assert slicecert.kprt_f(3, 3) == "3"

    rows = slicecert.yasuhara_realize(2, 4, 5, "cp2bcp2")
    assert rows == [[1, 2, 4], [0, 1, 3]]

    cert = json.loads(slicecert.certify(knots, "10_125", twists=29))
    assert cert["verdict"] == "NOT_SLICE"
    citations = {leaf["citation"] for leaf in cert["cases"]}
    assert "Lemma: table1 / Thm: signature" in citations

    inconclusive = json.loads(slicecert.certify(knots, "10_125", lk=1))
    assert inconclusive["verdict"] == "INCONCLUSIVE"

    closed, replay_ok, _ = slicecert.verify_c7t23()
    assert closed and replay_ok
    assert slicecert.three_component_obstructed()

    try:
        slicecert.lt_signature([[1, 0], [0, 1]], 1, 2)
    except slicecert.SlicecertError:
        pass
    else:
        raise AssertionError("invalid Seifert matrix must raise")

    print("python smoke: ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
