import os
import subprocess

import skeintorus as sk


def test_scalar_golden_values():
    assert sk.quantum_integer(2) == "q^-1 + q"
    assert sk.quantum_binomial(2, 1) == "q^-1 + q"
    assert sk.chebyshev_coefficient(2, 1, 0) == "q^-1 + q"
    assert sk.gauss_binomial(2, 1, 8, mod=16) == "0"
    rd = sk.root_data(16)
    assert rd["N"] == 2 and rd["sign_xi_2N"] == -1


def test_cheb_expand():
    out = sk.cheb_expand(1)
    assert out == "E + K^-1 + K"
    assert sk.cheb_expand(5, mod=20) == "E^5 + K^-5 + K^5"


def test_surface_and_flip():
    s = sk.Surface.builtin("annulus2")
    labels, rows = s.vertex_matrix()
    assert rows[labels.index("a")][labels.index("b")] == -2
    flipped, info = s.flip("b")
    assert info["case"] == 1
    assert info["new_edge"] == "b*"
    back, info2 = flipped.flip("b*")
    assert sorted(back.edges) == sorted(s.edges)
    assert s.center()["ok"]


def test_transfer_and_surgery():
    s = sk.Surface.builtin("annulus2")
    image = s.transfer("b", "b")
    assert image == s.flip("b")[0].parse("[a^2 b*^-1] + [c d b*^-1]")
    eye = sk.Surface.builtin("eye")
    prod = eye.surgery_mul("a", "a*")
    assert prod == eye.surgery_mul("q^2 * b^2 + q^-2 * c^2", "1") or "beta" in prod


def test_verify_suite_subset():
    results = sk.verify(suite="surface")
    assert results and all(r["pass"] for r in results)


def test_cli_binary():
    cli = os.environ.get("SKEINTORUS_CLI")
    root = os.environ.get("SKEINTORUS_ROOT")
    if not cli or not root:
        return
    srf = os.path.join(root, "share", "surfaces", "annulus2.srf")
    out = subprocess.run([cli, "vmatrix", srf], capture_output=True, text=True)
    assert out.returncode == 0
    assert "edges: a b c d" in out.stdout
