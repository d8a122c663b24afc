import pytest
from hypothesis import settings

from heckebraid.rootdata import build_cartan

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def cartan():
    cache = {}

    def get(label):
        if label not in cache:
            cache[label] = build_cartan(label)
        return cache[label]

    return get


def pytest_terminal_summary(terminalreporter):
    lines = []
    for key in ("passed", "failed"):
        for rep in terminalreporter.stats.get(key, []):
            if getattr(rep, "when", None) == "call":
                lines += [v for k, v in rep.user_properties if k == "acceptance"]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: s.split(":")[0].split()[-1].zfill(2)):
            terminalreporter.write_line(line)
