import json

import _torictool as tt

TAU2 = "symbols sqrt2\nphi 1 = 1/6 + 1*sqrt2\nphi 2 = 1/2 - 6*sqrt2\n"
REMARK43 = (
    "symbols sqrt2 i\n"
    "phi 1 = 3*sqrt2 + 4*i\n"
    "phi 2 = 2*sqrt2 + 6*i\n"
    "phi 3 = -1*sqrt2 + 2*i\n"
)
IMPURE = (
    "symbols sqrt2 sqrt3\n"
    "phi 1 = -12*sqrt2\n"
    "phi 2 = 5*sqrt3\n"
    "phi 3 = 1/3 + 2*sqrt3\n"
    "phi 4 = 1/3 + 1*sqrt2\n"
)


def test_toric_degree():
    assert tt.toric_degree(REMARK43) == 2
    assert tt.toric_degree(TAU2) == 2
    assert tt.toric_degree("symbols sqrt2 i\nphi 1 = 1/2\nphi 2 = sqrt2\nphi 3 = i\n") == 3


def test_torsion():
    m, q, tau = tt.torsion(TAU2)
    assert (m, q, tau) == (6, 9, 2)
    assert tt.torsion("phi 1 = 1/2\n")[2] == 2


def test_classification():
    assert tt.classification(IMPURE) == "impure_torsion"
    assert tt.classification(REMARK43) == "torsion_free"


def test_resonances():
    assert tt.resonances(REMARK43, 2, 6) == [[1, 0, 1]]
    assert tt.resonances(REMARK43, 1, 10) == []


def test_run_analyze_json():
    report = json.loads(tt.run("analyze", TAU2))
    assert report["torsion"]["tau"] == 2
    assert report["toric_degree"] == 2
    assert report["verdict"]["criterion"] == "sufficient"


def test_run_normalize_exact():
    germ = (
        "dim 2\nmaxdeg 2\n"
        "lambda 1 = exact 1/4 + 0 I\n"
        "lambda 2 = exact 1/2 + 0 I\n"
        "term 1 (0,2) 1 + 0 I\nterm 1 (1,1) 1 + 0 I\n"
    )
    report = json.loads(tt.run("normalize", germ))
    assert report["residual_max"] == "0"
    assert report["psi"]["terms"][0]["coefficient"]["re"] == "-8"


def test_monoid_helpers():
    assert tt.hilbert_basis([[1, -6]], 2) == [[6, 1]]
    kernel_basis = [[1, 1, 0, 0], [1, 0, 1, 0], [0, 1, 0, 1]]  # kernel of (1,-1,-1,1)
    mins = tt.paper_minimals(kernel_basis, 4)
    assert sorted(mins) == [[0, 0, 1, 1], [0, 1, 0, 1], [1, 0, 1, 0], [1, 1, 0, 0]]
    elements, certified = tt.cominimals(kernel_basis, 4, 20)
    assert elements == []
    assert certified
