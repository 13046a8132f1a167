import pytest

from punctann import checks
from punctann.checks import REGISTRY, run_checks

MODULES = {"elliptic", "moebius", "hyperbolic", "extremal", "degeneration", "render"}


class TestRegistry:
    def test_names_unique(self):
        names = [name for name, _ in REGISTRY]
        assert len(names) == len(set(names))

    def test_names_namespaced(self):
        for name, fn in REGISTRY:
            prefix, _, rest = name.partition(".")
            assert prefix in MODULES and rest
            assert callable(fn)

    def test_every_module_covered(self):
        assert {name.split(".")[0] for name, _ in REGISTRY} == MODULES


class TestRunChecks:
    def test_all_pass_default_seed(self):
        passed, failed, lines = run_checks(0)
        assert (passed, failed) == (len(REGISTRY), 0)
        assert lines == [f"PASS {name}" for name, _ in REGISTRY]

    def test_deterministic_for_fixed_seed(self):
        assert run_checks(3) == run_checks(3)

    def test_other_seed_passes(self):
        _, failed, _ = run_checks(1)
        assert failed == 0

    def test_filter_prefix(self):
        passed, failed, lines = run_checks(0, "moebius")
        assert failed == 0
        assert passed == sum(1 for name, _ in REGISTRY if name.startswith("moebius."))
        assert all(line.startswith("PASS moebius.") for line in lines)

    def test_filter_requires_full_prefix(self):
        # "moeb" is not a module name, and the dot guard keeps it from matching
        passed, failed, lines = run_checks(0, "moeb")
        assert (passed, failed, lines) == (0, 0, [])

    def test_filter_preserves_samples(self):
        # each check's generator is keyed by registry position, so a check
        # sees the same draws whether or not the rest of the registry runs
        _, _, full = run_checks(5)
        _, _, sub = run_checks(5, "extremal")
        assert sub == [line for line in full if line.startswith("PASS extremal.")]

    def test_failure_reported_not_raised(self, monkeypatch):
        def broken(rng):
            raise AssertionError("deliberate")

        monkeypatch.setattr(
            checks, "REGISTRY", (("elliptic.ok", lambda rng: None), ("render.bad", broken))
        )
        passed, failed, lines = run_checks(0)
        assert (passed, failed) == (1, 1)
        assert lines == ["PASS elliptic.ok", "FAIL render.bad: deliberate"]
