"""Smoke test for the pyratscroll extension.

Build and copy the module next to this file first:

    cargo build -p ratscroll-py --release --features extension-module
    cp target/release/libpyratscroll.so python/pyratscroll.so
"""

import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import pyratscroll as rs


def main():
    b = rs.bridge(2, 4)
    assert str(b) == (
        "x[1][2]^2*x[2][0] - 4*x[1][1]*x[1][2]*x[2][1] + 6*x[1][1]^2*x[2][2]"
        " - 4*x[1][0]*x[1][1]*x[2][3] + x[1][0]^2*x[2][4]"
    ), str(b)
    assert b == rs.bridge_via_lists(2, 4)
    assert b.num_terms() == 5 and b.is_homogeneous()

    p = rs.Polynomial("x[1][0]*x[1][2] - x[1][1]^2")
    assert rs.Polynomial.from_json(p.to_json()) == p
    assert (p - p).is_zero()
    assert (p * p).total_degree() == 4
    assert str(rs.Polynomial("2*x[1][0] + 3", field=2)) == "1"

    es = rs.equation_set([2, 2, 3, 4])
    assert len(es) == 12
    labels = [label for label, _ in es.generators()]
    assert "G[5]" in labels, labels
    assert len(es.minors()) == 55
    assert "arithmetic rank = N-2 = 12" in es.summary()
    assert json.loads(es.to_json())["N"] == 14
    assert "radical" in es.to_cas_script("singular")

    assert rs.check_property1(3, 4) and rs.check_property2(3, 4)
    assert rs.check_parametrization([2, 2, 3, 4])
    assert rs.plucker_identity(6)

    r = rs.compare_varieties([1, 2], 3)
    assert r.passed and r.count_j == r.count_p == 16, r
    assert json.loads(r.to_json())["count_J"] == 16

    try:
        rs.compare_varieties([2, 2, 3, 4], 3, budget=10)
    except RuntimeError:
        pass
    else:
        raise AssertionError("budget not enforced")

    try:
        rs.equation_set([0, 2])
    except ValueError:
        pass
    else:
        raise AssertionError("invalid profile accepted")

    print("pyratscroll smoke test passed")


if __name__ == "__main__":
    main()
