import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

import polygroth as pg

CLI = os.environ.get("POLYGROTH_CLI")
DOCS = pathlib.Path(os.environ.get("POLYGROTH_DOCS", pathlib.Path(__file__).parents[2] / "docs"))


def test_generators():
    assert pg.euler_pair(pg.parse_set("dim 1; x1 >= 0")) == (0, 1)
    assert pg.euler_pair(pg.parse_set("dim 1; x1 > 0")) == (-1, 0)


def test_square_class():
    square = pg.parse_set("dim 2; x1 >= 0 & -x1 >= -1 & x2 >= 0 & -x2 >= -1")
    assert pg.class_text(square) == "u^2 + v^2"
    assert pg.ungraded(square) == (1, 1)


def test_set_operations():
    a = pg.parse_set("dim 1; x1 >= 0")
    b = pg.parse_set("dim 1; x1 > 0")
    point = a - b
    assert point.contains(["0"]) and not point.contains(["1/2"])
    assert pg.sets_equal(point | b, a)
    assert pg.class_text(pg.product(a, b)) == "0"


def test_chi_gamma():
    half = pg.parse_set("dim 1; x1 = 1/2")
    assert pg.chi_gamma(half, "1") == 0
    assert pg.chi_gamma(pg.parse_set("dim 1; x1 = 0"), "1") == 2


def test_polyhedra():
    strip = pg.parse_polyhedron("0 1 >= 0\n0 -1 >= -1\n")
    assert pg.lineality(strip) == 1
    assert pg.bg_verify(strip)
    assert sorted(sign for sign, _, _ in pg.bg_terms(strip)) == [-1, 1, 1]
    assert pg.face_count(pg.parse_polyhedron("1 0 >= 0; 0 1 >= 0; -1 0 >= -1; 0 -1 >= -1")) == 9


def test_motivic():
    f, g, kernel = pg.motivic("torus 1; val(x1) > 0; point;")
    assert (f, g, kernel) == ([1], [0, 1], False)


def test_errors():
    with pytest.raises(pg.ParseError):
        pg.parse_set("dim 1; x1 >=")
    with pytest.raises(pg.UnsupportedError):
        pg.motivic("torus 1; val(x1 + 1) >= 0")
    with pytest.raises(pg.Error):
        pg.face_count(pg.parse_polyhedron("1 >= 1; -1 >= 0"))


def test_run_checks():
    results = pg.run_checks("generators_*")
    assert [r[0] for r in results] == ["generators_chi"]
    assert all(r[2] for r in results)


CLI_CASES = [
    ("chi", ["chi", "-e", "dim 1; x1 >= 0"]),
    ("class", ["class", "-e", "dim 2; x1 >= 0 & x2 > 0"]),
    ("ungraded", ["ungraded", "-e", "dim 1; x1 > 0"]),
    ("chi-gamma", ["chi-gamma", "--gamma", "1", "-e", "dim 1; x1 >= 0"]),
    ("faces", ["faces", "-e", "1 0 >= 0; 0 1 >= 0; -1 -1 >= -1"]),
    ("recession", ["recession", "-e", "0 1 >= 0; 0 -1 >= -1"]),
    ("tangent", ["tangent", "--face", "0", "-e", "1 0 >= 0; 0 1 >= 0"]),
    ("bg", ["bg", "--verify", "--exterior", "0,-1", "-e", "0 1 >= 0; 0 -1 >= -1"]),
    ("cells", ["cells", "-e", "dim 2; x1 >= 0 & x2 >= 0 & x1 - x2 >= 0"]),
    ("motivic", ["motivic", "-e", "torus 2; val(x1) >= 0 & val(x2) > 1/2"]),
    ("verify-suite", ["verify-suite", "--filter", "motivic_*"]),
]


@pytest.mark.skipif(CLI is None, reason="POLYGROTH_CLI not set")
@pytest.mark.parametrize("schema,args", CLI_CASES, ids=[c[0] for c in CLI_CASES])
def test_cli_json_matches_schema(schema, args):
    run = subprocess.run([CLI, "--json", *args], capture_output=True, text=True, check=True)
    again = subprocess.run([CLI, "--json", *args], capture_output=True, text=True, check=True)
    assert run.stdout == again.stdout
    doc = json.loads(run.stdout)
    jsonschema.validate(doc, json.loads((DOCS / f"{schema}.schema.json").read_text()))


@pytest.mark.skipif(CLI is None, reason="POLYGROTH_CLI not set")
def test_cli_exit_codes():
    assert subprocess.run([CLI, "chi", "-e", "dim 1; x1 >="], capture_output=True).returncode == 2
    assert subprocess.run([CLI, "faces", "-e", "1 >= 1; -1 >= 0"], capture_output=True).returncode == 1
