import json
import os
import subprocess
import sys

SNIPPET = """
from cuspeps.ffield import build_field
from cuspeps.cyclo import cyclotomic_polynomial
print(build_field(2, 3).modulus, cyclotomic_polynomial(12))
"""


def _run(env_dir):
    env = dict(os.environ, CUSPEPS_CACHE_DIR=str(env_dir))
    proc = subprocess.run(
        [sys.executable, "-c", SNIPPET], env=env, capture_output=True, text=True
    )
    assert proc.returncode == 0, proc.stderr
    return proc.stdout


def test_cache_dir_round_trip(tmp_path):
    first = _run(tmp_path)
    field_file = tmp_path / "field_p2_k3.json"
    phi_file = tmp_path / "cyclotomic_polynomials.json"
    assert field_file.exists() and phi_file.exists()
    assert json.loads(field_file.read_text())["modulus"] == [1, 1, 0, 1]
    assert json.loads(phi_file.read_text())["12"] == [1, 0, -1, 0, 1]
    second = _run(tmp_path)
    assert first == second


def test_stale_cache_is_ignored(tmp_path):
    (tmp_path / "field_p2_k3.json").write_text("not json")
    assert "(1, 1, 0, 1)" in _run(tmp_path)
