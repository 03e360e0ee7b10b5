"""The acceptance gate: every criterion at its stated tolerance.

The suite is executed through the CLI's ``selftest`` twice with one seed;
criterion 10 (report determinism) additionally requires the two emitted
documents to be byte-identical.  One PASS/FAIL line prints per criterion.
"""

import json

import pytest

from carlitz.cli import main

SEED = "20260809"


@pytest.fixture(scope="module")
def selftest_runs(capsys_factory=None):
    import io
    import contextlib
    outputs = []
    for _ in range(2):
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = main(["selftest", "--seed", SEED])
        outputs.append((code, buf.getvalue()))
    return outputs


@pytest.fixture(scope="module")
def criteria(selftest_runs):
    code, out = selftest_runs[0]
    doc = json.loads(out)
    return {c["number"]: c for c in doc["criteria"]}


@pytest.mark.parametrize("number", range(1, 11))
def test_criterion(criteria, number):
    c = criteria[number]
    status = "PASS" if c["passed"] else "FAIL"
    print(f"{status}  criterion {number:2d} {c['name']}: {c['detail']}")
    assert c["passed"], f"criterion {number} ({c['name']}): {c['detail']}"


def test_selftest_exit_and_byte_determinism(selftest_runs):
    (code1, out1), (code2, out2) = selftest_runs
    assert code1 == 0 and code2 == 0
    assert out1 == out2, "selftest reports differ between identical runs"
