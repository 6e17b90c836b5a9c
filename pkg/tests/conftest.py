import pytest

_CRITERIA = []


class _Recorder:
    def __init__(self, request):
        self.name = request.node.name

    def __call__(self, label, ok, detail=''):
        line = f'{"PASS" if ok else "FAIL"}  {label}' + (f'  [{detail}]' if detail else '')
        _CRITERIA.append(line)
        print(line)
        return ok


@pytest.fixture
def criterion(request):
    """Record one acceptance line; it is echoed in the terminal summary."""
    return _Recorder(request)


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section('acceptance criteria')
        for line in _CRITERIA:
            terminalreporter.write_line(line)
