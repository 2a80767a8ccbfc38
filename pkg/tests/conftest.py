import json
import subprocess
import sys

import pytest

from unitdist import catalog


@pytest.fixture(scope='session')
def entries():
    return catalog.load_catalog()


@pytest.fixture(scope='session')
def g27():
    from unitdist.certify import g27_pointset
    return g27_pointset()


@pytest.fixture(scope='session')
def g118():
    from unitdist.certify import g118_pointset
    return g118_pointset()


def run_cli(args, **kw):
    """Run the CLI in a subprocess; returns (exit code, stdout lines)."""
    proc = subprocess.run([sys.executable, '-m', 'unitdist.cli'] + args,
                          capture_output=True, text=True, **kw)
    lines = [json.loads(s) for s in proc.stdout.splitlines()
             if s.startswith('{')]
    return proc.returncode, lines, proc.stdout


@pytest.fixture(scope='session')
def reproduce_runs(tmp_path_factory):
    """Two full reproduce runs at different thread counts (criteria 1-3, 9)."""
    runs = []
    for threads in (1, 2):
        outdir = tmp_path_factory.mktemp('artifacts-t%d' % threads)
        rc, reports, _ = run_cli(['reproduce', 'all', '--threads',
                                  str(threads), '--artifacts', str(outdir)])
        runs.append({'threads': threads, 'rc': rc, 'reports': reports,
                     'dir': outdir})
    return runs
