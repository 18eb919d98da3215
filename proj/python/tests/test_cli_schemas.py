import json
import os
import subprocess
from pathlib import Path

import jsonschema
import pytest

ROOT = Path(__file__).resolve().parents[2]
SCHEMAS = ROOT / "tools" / "schemas"
CLI = os.environ.get("PERMUTREE_LAB_CLI", str(ROOT / "build" / "permutree-lab"))

CASES = [
    ("permutree", "count", ["--delta", "nddn", "--n", "4"]),
    ("permutree", "lattice", ["--delta", "nxun"]),
    ("permutree", "insert", ["--pi", "2413", "--delta", "ndun"]),
    ("permutree", "sort", ["--pi", "3421", "--U", "2"]),
    ("sorder", "count", ["--s", "1,2,2"]),
    ("sorder", "hasse", ["--s", "1,2,1"]),
    ("sorder", "realize", ["--s", "1,2,1"]),
    ("sorder", "realize", ["--s", "1,2,1", "--approx", "6"]),
    ("sorder", "identities", ["--s", "1,0,1"]),
    ("flows", "routes", []),
    ("flows", "cliques", ["--s", "1,2"]),
    ("flows", "kostant", ["--delta", "ndun"]),
    ("flows", "volume", ["--s", "2,1,2"]),
    ("bicho", "build", ["--delta", "nudxn"]),
    ("bicho", "verify", ["--delta", "ndnn"]),
    ("bicho", "conjectures", ["--delta", "nxnn"]),
    ("bicho", "conjectures", ["--n", "3"]),
    ("verify", "all", []),
]


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def validator(group, name):
    schema = json.loads((SCHEMAS / f"{group}.schema.json").read_text())
    sub = dict(schema)
    sub["$ref"] = f"#/$defs/{name}"
    return jsonschema.Draft202012Validator(sub)


@pytest.mark.parametrize("group,action,extra", CASES)
def test_json_output_matches_schema(group, action, extra):
    proc = run(group, action, "--json", *extra)
    assert proc.returncode == 0, proc.stderr
    validator(group, action).validate(json.loads(proc.stdout))


def test_output_is_deterministic():
    a = run("sorder", "realize", "--s", "1,2,2", "--json").stdout
    b = run("sorder", "realize", "--s", "1,2,2", "--json").stdout
    assert a == b


def test_exit_codes():
    assert run("permutree", "count", "--delta", "nqn").returncode == 1
    assert run("nonsense").returncode == 1
    assert run("permutree", "lattice", "--delta", "nnnnnnnnn", "--cap", "5").returncode == 2
    env = dict(os.environ, PERMUTREE_LAB_CAP="3")
    proc = subprocess.run([CLI, "permutree", "lattice", "--delta", "nnnn"], capture_output=True, env=env)
    assert proc.returncode == 2


def test_worked_examples():
    assert json.loads(run("permutree", "count", "--delta", "nddn", "--json").stdout)["count"] == 14
    out = json.loads(run("sorder", "realize", "--s", "1,2,1", "--json").stdout)
    assert len(out["vertices"]) == 8
    out = json.loads(run("permutree", "sort", "--pi", "3421", "--U", "2", "--json").stdout)
    assert out["sorted"] is True
