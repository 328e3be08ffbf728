import os
import subprocess
import sys

import pytest

from chordpower import _enum_py, kernels
from chordpower.emotion import analyze
from chordpower.proportions import chord_of, proportion_pair

needs_compiled = pytest.mark.skipif(
    not kernels.COMPILED_AVAILABLE, reason="compiled kernel not built"
)


class TestPythonKernel:
    def test_rows_match_engine_exactly(self):
        for a, b, c, ia, ib, ic, group, pwe, pwe2 in _enum_py.coprime_triads(12):
            chord = chord_of(a, b, c)
            pair = proportion_pair(chord)
            report = analyze(chord)
            assert pair.inverse.numbers == (ia, ib, ic)
            assert pair.group.value == f"G{group}"
            assert report.pwe == pwe  # bit-exact, same expressions
            assert report.pwe2 == pwe2

    def test_empty_below_one(self):
        assert _enum_py.coprime_triads(0) == []


@needs_compiled
class TestCompiledKernel:
    def test_matches_python_kernel(self):
        from chordpower import _enum_cy

        assert _enum_cy.coprime_triads(60) == _enum_py.coprime_triads(60)
        assert _enum_cy.coprime_triads(40, True) == _enum_py.coprime_triads(40, True)

    def test_bound_guard(self):
        from chordpower import _enum_cy

        with pytest.raises(ValueError):
            _enum_cy.coprime_triads(_enum_cy.MAX_N + 1)


class TestSelection:
    def test_forced_kernels_agree(self):
        py = kernels.coprime_triads(30, kernel="python")
        default = kernels.coprime_triads(30)
        assert py == default

    def test_large_requests_fall_back_to_python(self):
        assert kernels.active_kernel(kernels.COMPILED_MAX_N + 1) == "python"

    @needs_compiled
    def test_small_requests_use_compiled(self):
        assert kernels.active_kernel(100) == "compiled"

    def test_unknown_kernel_rejected(self):
        with pytest.raises(ValueError):
            kernels.coprime_triads(5, kernel="fortran")

    def test_pure_env_disables_compiled(self):
        script = (
            "from chordpower import kernels; "
            "print(kernels.COMPILED_AVAILABLE, kernels.active_kernel(10))"
        )
        env = dict(os.environ, CHORDPOWER_PURE="1")
        out = subprocess.run(
            [sys.executable, "-c", script], env=env, capture_output=True, text=True
        )
        assert out.returncode == 0
        assert out.stdout.strip() == "False python"
