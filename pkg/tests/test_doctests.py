import doctest
import importlib

# attribute access like schubcalc.schubert finds the re-exported function,
# not the submodule, so resolve the modules by name
MODULES = [
    "schubcalc",
    "schubcalc._limits",
    "schubcalc.cli",
    "schubcalc.perm",
    "schubcalc.poly",
    "schubcalc.schubert",
    "schubcalc.transition",
    "schubcalc.verify",
    "schubcalc.words",
]


def test_doctests():
    total = 0
    for name in MODULES:
        result = doctest.testmod(importlib.import_module(name), verbose=False)
        assert result.failed == 0, name
        total += result.attempted
    assert total > 30  # the examples are load-bearing documentation
