import io
import subprocess
import sys

import pytest

from tsrgen import cli, specfile
from tsrgen.mat2 import companion
from tsrgen.tsr import TsrSpec, tsr_charpoly


def run(*argv):
    buf = io.StringIO()
    status = cli.main(list(argv), out=buf)
    return status, buf.getvalue()


@pytest.fixture
def small(tmp_path):
    path = tmp_path / 'small.tsr'
    assert run('generate', '-m', '4', '-n', '3', '--seed', '1', '--out', str(path))[0] == 0
    return path


def write(tmp_path, spec, name='s.tsr'):
    path = tmp_path / name
    specfile.dump(spec, path)
    return path


def test_generate_stdout():
    status, out = run('generate', '-m', '4', '-n', '3', '--seed', '1')
    assert status == 0
    spec = specfile.loads(out)
    assert (spec.m, spec.n) == (4, 3)
    assert '# Q=' in out and '# skipped primes: 3 5' in out


def test_generate_jobs_independent(tmp_path):
    outs = []
    for jobs in ('1', '2', '4'):
        path = tmp_path / f'j{jobs}.tsr'
        assert run('generate', '-m', '8', '-n', '3', '--seed', '7', '--jobs', jobs, '--out', str(path))[0] == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1] == outs[2]


def test_generate_seeds_differ():
    a = run('generate', '-m', '8', '-n', '3', '--seed', '1')[1]
    b = run('generate', '-m', '8', '-n', '3', '--seed', '2')[1]
    assert a != b


def test_verify_pass(small):
    status, out = run('verify', str(small))
    assert status == 0
    assert 'FAIL' not in out and 'PASS  Q primitive' in out


def test_verify_not_a_candidate(tmp_path):
    path = write(tmp_path, TsrSpec(4, 2, companion(0x13), 0b10))
    status, out = run('verify', str(path))
    assert status == 1
    assert 'FAIL  candidate' in out and 'not a candidate' in out


def test_verify_non_primitive(tmp_path):
    path = write(tmp_path, TsrSpec(4, 2, companion(0x1F), 0b11))
    status, out = run('verify', str(path))
    assert status == 1
    assert 'PASS  Q irreducible' in out
    assert 'FAIL  f_T primitive' in out and 'FAIL  Q primitive' in out


def test_verify_q_mismatch(tmp_path, small):
    text = small.read_text().splitlines()
    text = [ln if not ln.startswith('Q=') else 'Q=0x1' for ln in text]
    bad = tmp_path / 'bad.tsr'
    bad.write_text('\n'.join(text) + '\n')
    status, out = run('verify', str(bad))
    assert status == 1 and 'FAIL  Q matches stored value' in out


def test_period(small):
    assert run('period', str(small)) == (0, '4095\n')
    assert run('period', str(small), '--start', '0xabc') == (0, '4095\n')


def test_period_guard_and_zero(tmp_path, small):
    assert run('period', str(small), '--start', '0')[0] == 2
    assert run('period', str(small), '--start', '0x10000')[0] == 2
    big = write(tmp_path, TsrSpec(8, 4, companion(0x11D), 1), 'big.tsr')
    assert run('period', str(big))[0] == 3


def test_stream(tmp_path, small):
    out = tmp_path / 'ks.bin'
    assert run('stream', str(small), '--words', '100', '--out', str(out))[0] == 0
    data = out.read_bytes()
    assert len(data) == 100
    again = tmp_path / 'ks2.bin'
    run('stream', str(small), '--words', '100', '--out', str(again))
    assert again.read_bytes() == data
    wide = write(tmp_path, TsrSpec(12, 2, companion(0x1053), 1), 'w.tsr')
    run('stream', str(wide), '--words', '10', '--out', str(out))
    assert len(out.read_bytes()) == 20
    assert run('stream', str(small), '--words', '-1')[0] == 2


def test_stream_stdout(small):
    proc = subprocess.run([sys.executable, '-m', 'tsrgen', 'stream', str(small), '--words', '16'],
                          capture_output=True, check=True)
    assert len(proc.stdout) == 16


def test_charpoly(small):
    status, out = run('charpoly', str(small))
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == tsr_charpoly(specfile.load(small)).hex()
    assert lines[1] == 'matrix oracle agrees'


def test_prob():
    status, out = run('prob', '-m', '8', '-n', '7')
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == '0.927'
    assert lines[1].endswith('0.465') and lines[2].endswith('0.502')


def test_factor_override():
    k = '4095 = 3^2 * 5 * 7 * 13'
    assert run('prob', '-m', '4', '-n', '3', '--factor-k', k)[0] == 0
    assert run('prob', '-m', '4', '-n', '3', '--factor-k', '255 = 3 * 5 * 17')[0] == 2
    assert run('prob', '-m', '4', '-n', '3', '--factor-k', '4095 = 4095')[0] == 3
    status, _ = run('generate', '-m', '4', '-n', '3', '--seed', '1', '--factor-k', k)
    assert status == 0


def test_factoring_limit():
    assert run('prob', '-m', '97', '-n', '1')[0] == 3


def test_usage_errors(tmp_path):
    assert run('verify', str(tmp_path / 'missing.tsr'))[0] == 2
    junk = tmp_path / 'junk.tsr'
    junk.write_text('hello\n')
    assert run('charpoly', str(junk))[0] == 2
    assert run('generate', '-m', '0', '-n', '3', '--seed', '1')[0] == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(['generate', '-m', '4'])
    assert exc.value.code == 2


def test_bench():
    status, out = run('bench', '-m', '8', '-n', '4', '--steps', '2000')
    assert status == 0
    assert 'external-xor' in out and 'internal-xor' in out
