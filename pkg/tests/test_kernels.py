"""Compiled and pure counting kernels must agree with each other and with
an independent numpy evaluation.
"""
import subprocess
import sys

import numpy as np
import pytest

import commdeg.kernels as kernels
from commdeg.kernels import pure


def _compiled_or_skip():
    try:
        from commdeg.kernels import _ctables

        return _ctables
    except ImportError:
        pytest.skip("compiled kernels not built")


def _numpy_commuting_count(mult):
    return int((mult == mult.T).sum())


def test_backend_reports_something():
    assert kernels.BACKEND in ("cython", "pure")


def test_pure_matches_numpy_oracle(corpus):
    for name, G in corpus.items():
        if G.order > 64:
            continue
        assert pure.count_commuting_pairs(G.mult) == _numpy_commuting_count(G.mult), name


def test_compiled_matches_pure(corpus):
    ct = _compiled_or_skip()
    for name, G in corpus.items():
        assert ct.count_commuting_pairs(G.mult) == pure.count_commuting_pairs(G.mult), name
        sizes_c = list(ct.centralizer_sizes(G.mult))
        sizes_p = list(pure.centralizer_sizes(G.mult))
        assert sizes_c == sizes_p, name


def test_power_pair_kernels_agree(corpus):
    ct = _compiled_or_skip()
    from commdeg.groups import power_map

    for name in ("Q8", "S4", "D6", "H3"):
        G = corpus[name]
        for m, n in ((1, 1), (2, 1), (2, 3), (4, 4)):
            pm, pn = power_map(G, m), power_map(G, n)
            assert ct.count_commuting_pairs_mn(G.mult, pm, pn) == (
                pure.count_commuting_pairs_mn(G.mult, pm, pn)
            ), (name, m, n)


def test_env_var_forces_pure_backend():
    code = (
        "import commdeg.kernels as k; print(k.BACKEND)"
    )
    out = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True, text=True, check=True,
        env={"COMMDEG_KERNELS": "pure", "PATH": "/usr/bin:/bin"},
    )
    assert out.stdout.strip() == "pure"


def test_centralizer_sizes_sum_equals_pair_count(q8):
    assert sum(pure.centralizer_sizes(q8.mult)) == pure.count_commuting_pairs(q8.mult)
