"""Smoke test for the innerbody extension module."""

import math

import innerbody


def close(a, b, tol=1e-9):
    return abs(a - b) <= tol * max(1.0, abs(b))


def main():
    square = innerbody.Body.from_vertices([[0, 0], [1, 0], [1, 1], [0, 1]])
    assert square.dim == 2
    assert close(square.volume(), 1.0)
    assert close(square.surface_area(), 4.0)
    r, center = square.inradius()
    assert close(r, 0.5) and all(close(c, 0.5) for c in center)
    w = square.quermassintegrals()
    assert all(close(a, b) for a, b in zip(w, [1.0, 2.0, math.pi]))
    assert square.is_tangential()

    inner = square.erode(0.25)
    assert close(inner.surface_area(), 2.0)
    assert square.erode(0.5) is None

    rect = innerbody.Body.from_halfspaces(
        [([1, 0], 2), ([-1, 0], 0), ([0, 1], 1), ([0, -1], 0)]
    )
    assert not rect.is_tangential()
    report = innerbody.check_main_bound(rect, [0.25])
    assert report.passed and close(report.margins[0], 1.0)

    tri = innerbody.Body.fixture("triangle-345")
    form = tri.form_body()
    assert close(form.inradius()[0], 1.0)
    ext = tri.extremal(0.5)
    assert ext.erode(0.5).same_set(tri, 1e-9)
    assert close(square.minkowski_sum(tri).surface_area(), 16.0)

    cube = innerbody.Body.fixture("cube")
    probe = innerbody.matheron_probe(cube, [0.5])
    assert abs(probe.margins[0] - 0.167) < 1e-3

    body = innerbody.Body.generate("hull", 2, 12, seed=3)
    rep = innerbody.check_maximality(body, 0.3 * body.inradius()[0], trials=10, seed=1)
    assert rep.passed, rep

    reports = innerbody.run_suite("main-bound", seed=7, count=5)
    assert len(reports) == 10 and all(r.passed for r in reports)

    try:
        innerbody.Body.from_vertices([[0, 0], [1, 1], [2, 2]])
    except ValueError:
        pass
    else:
        raise AssertionError("collinear points were accepted")

    print("smoke test ok:", square, len(innerbody.SUITES), "suites")


if __name__ == "__main__":
    main()
