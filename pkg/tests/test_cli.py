import io
import json

import pytest

from cli.main import EXIT_GUARD, EXIT_INPUT, EXIT_OK, main
from core.models.golod import GolodReport
from core.models.job import JobSpec, JobSummary
from core.schemas.output_schemas import parse_record
from core.tools.errors import InputError
from core.tools.id_generator import new_job_id, new_record_id
from tests.fixtures import fixture_path


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def json_records(text):
    return [parse_record(line) for line in text.splitlines() if line.strip()]


def test_golod_json_output():
    code, text = run("golod", "-i", fixture_path("triangle"), "--order", "1,2,3", "--format", "json")
    assert code == EXIT_OK
    records = json_records(text)
    assert isinstance(records[0], GolodReport)
    assert records[0].verdict == "Golod"
    assert isinstance(records[-1], JobSummary)
    assert records[-1].records == 1
    assert "ok" not in json.loads(text.splitlines()[-1])
    ids = [json.loads(line)["id"] for line in text.splitlines()]
    assert ids[0].endswith("_0000") and len(set(ids)) == len(ids)


def test_golod_searches_for_an_order():
    code, text = run("golod", "-i", fixture_path("max_ideal_square"), "--format", "json")
    assert code == EXIT_OK
    report = json_records(text)[0]
    assert report.verdict == "Golod"
    assert report.order == [2, 1, 3]


def test_non_minimal_order_is_an_input_error():
    code, _ = run("golod", "-i", fixture_path("max_ideal_square"), "--order", "1,2,3")
    assert code == EXIT_INPUT


def test_resolve_text_output():
    code, text = run("resolve", "-i", fixture_path("triangle"), "--emit-matrices")
    assert code == EXIT_OK
    assert "lyubeznik complex: ranks [1, 3, 2], minimal: True" in text
    assert "d2 =" in text


def test_resolve_with_user_rooting():
    code, text = run("resolve", "-i", fixture_path("triangle"), "--pi", fixture_path("triangle_pi"),
                     "--format", "json")
    assert code == EXIT_OK
    record = json_records(text)[0]
    assert record.kind == "rooted"
    assert record.ranks == [1, 3, 2]


def test_moment_angle_json():
    code, text = run("moment-angle", "-i", fixture_path("threepoints"), "--format", "json")
    assert code == EXIT_OK
    assert json_records(text)[0].ranks == {0: 1, 3: 3, 4: 2}


def test_poincare_and_tor():
    code, text = run("poincare", "-i", fixture_path("complete_intersection"), "--truncate", "3", "--format", "json")
    assert code == EXIT_OK
    assert json_records(text)[0].strict_at == 3
    code, text = run("tor", "-i", fixture_path("triangle"), "--format", "json")
    assert json_records(text)[0].totals == [1, 3, 2]


def test_ainfty_and_massey_commands():
    code, text = run("ainfty", "-i", fixture_path("triangle"), "--format", "json")
    assert code == EXIT_OK
    tags = [r.record for r in json_records(text)]
    assert tags[:5] == ["transfer", "stasheff", "side_conditions", "unitality", "plambda2_lemma"]
    assert "mu" in tags
    code, text = run("massey", "-i", fixture_path("triangle"), "--format", "json")
    assert code == EXIT_OK
    records = json_records(text)
    assert [r.record for r in records].count("homology_class") == 6
    assert any(r.record == "br_condition" and r.holds for r in records)
    assert any(r.record == "massey_cross_check" and r.passed for r in records)


def test_search_order():
    code, text = run("search-order", "-i", fixture_path("max_ideal_square"), "--format", "json")
    assert code == EXIT_OK
    assert json_records(text)[0].order == [2, 1, 3]


@pytest.mark.parametrize(
    "argv",
    [
        ["golod", "-i", "does-not-exist.json"],
        ["golod", "-i", fixture_path("triangle"), "--field", "fp:4"],
        ["golod", "-i", fixture_path("triangle"), "--order", "1,2"],
        ["moment-angle", "-i", fixture_path("triangle")],
        ["golod", "-i", fixture_path("threepoints")],
    ],
)
def test_input_errors(argv):
    code, _ = run(*argv)
    assert code == EXIT_INPUT


def test_guard_exit_code():
    code, _ = run("resolve", "-i", fixture_path("triangle"), "--kind", "taylor", "--guard-subsets", "2")
    assert code == EXIT_GUARD


def test_emit_schema():
    code, text = run("--emit-schema")
    assert code == EXIT_OK
    schemas = json.loads(text)
    assert {s["name"] for s in schemas} >= {"golod", "massey", "poincare", "summary"}
    assert all(s["strict"] for s in schemas)


def test_parse_record_rejects_unknown_tags():
    with pytest.raises(InputError):
        parse_record('{"record": "voxel"}')


def test_job_ids_are_stable():
    spec = JobSpec(command="golod", ideal={"vars": ["x"], "generators": ["x^2"]}).model_dump(mode="json")
    assert new_job_id(spec) == new_job_id(dict(spec, threads=8, output="json"))
    assert new_job_id(spec) != new_job_id(dict(spec, field="f2"))
    assert new_job_id(spec).startswith("job_golod_")
    assert new_record_id(new_job_id(spec), 7).endswith("_0007")


@pytest.mark.parametrize("command", ["tor", "golod", "poincare"])
@pytest.mark.parametrize("name", ["triangle", "complete_intersection", "x_squared", "x_xy", "max_ideal_square"])
def test_output_does_not_depend_on_threads(command, name):
    argv = [command, "-i", fixture_path(name), "--format", "json"]
    code, single = run(*argv, "--threads", "1")
    assert code == EXIT_OK
    _, many = run(*argv, "--threads", "4")
    assert many == single
    assert json_records(single)[-1].job_id == json_records(many)[-1].job_id


@pytest.mark.parametrize("name, ranks", [("path", {0: 1, 3: 1}), ("full_simplex", {0: 1})])
def test_moment_angle_fixtures(name, ranks):
    code, text = run("moment-angle", "-i", fixture_path(name), "--format", "json")
    assert code == EXIT_OK
    assert json_records(text)[0].ranks == ranks
