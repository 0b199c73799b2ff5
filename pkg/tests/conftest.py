import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

_criteria = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    name = report.nodeid.rsplit("::", 1)[-1].split("[", 1)[0]
    if "test_acceptance.py" in report.nodeid and name.startswith("test_criterion_"):
        # parametrized cases fold into one verdict per criterion
        _criteria[name] = _criteria.get(name, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda s: int(s.split("_")[2])):
        verdict = "PASS" if _criteria[name] else "FAIL"
        terminalreporter.write_line(f"{verdict} {name}")


def kernel_backends():
    """Both kernel modules (the compiled one only when it was built)."""
    from mckay import _zpoly_py

    out = [pytest.param(_zpoly_py, id="python")]
    try:
        from mckay import _zpoly_c
    except ImportError:
        pass
    else:
        out.append(pytest.param(_zpoly_c, id="cython"))
    return out
