import json
from fractions import Fraction

import pytest

from timedalign import DataError
from timedalign.eventlog import load_log, parse_log, timestamp_warnings
from timedalign.report import build_report, record_from_dict, record_to_dict, to_csv, to_json, to_text

LOG = """case_id,activity,timestamp
c1,d,3
c1,e,4
c1,f,5
c2,d,0.5
c2,e,2.5
c2,f,3.5
c3,d,1
c3,x,2
"""


def test_parse_log_keeps_event_order():
    log = parse_log(LOG)
    assert log.sorted_ids() == ["c1", "c2", "c3"]
    assert log["c2"].timestamps[0] == Fraction(1, 2)
    assert log["c3"].activities == ("d", "x")


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("", "empty file"),
        ("case,activity,timestamp\n", "missing column(s) case_id"),
        ("case_id,activity,timestamp\nc1,a\n", "line 2: wrong number of fields"),
        ("case_id,activity,timestamp\nc1,a,1\nc1,b,x\n", "line 3: timestamp"),
        ("case_id,activity,timestamp\n,a,1\n", "empty case_id"),
        ("case_id,activity,timestamp\nc,,1\n", "empty activity"),
    ],
)
def test_parse_log_errors(text, fragment):
    with pytest.raises(DataError) as exc:
        parse_log(text, "log.csv")
    assert fragment in str(exc.value)


def test_load_missing(tmp_path):
    with pytest.raises(DataError):
        load_log(tmp_path / "none.csv")


def test_timestamp_warnings():
    assert timestamp_warnings([Fraction(-1), Fraction(2), Fraction(1)]) == [
        "negative timestamp at position 1",
        "decreasing timestamp at position 3",
    ]
    assert timestamp_warnings([]) == []


def test_report(example6_model):
    rep = build_report(example6_model, parse_log(LOG))
    c1, c2, c3 = rep.records
    assert (c1.membership, c1.distance, c1.aligned) == (False, 2, [1, 3, 4])
    assert (c2.membership, c2.distance) == (True, 0)
    assert not c3.untimed_match and "position 2" in c3.error
    agg = rep.aggregate()
    assert agg["cases"] == 3 and agg["untimed_mismatch"] == 1 and agg["members"] == 1
    assert agg["mean_distance"] == 1 and agg["max_distance"] == 2


def test_json_round_trip(example6_model):
    rep = build_report(example6_model, parse_log(LOG))
    doc = json.loads(to_json(rep))
    assert doc["summary"]["mean_distance"] == "1"
    back = [record_from_dict(d) for d in doc["cases"]]
    assert back == rep.records
    assert [record_to_dict(r) for r in back] == doc["cases"]


def test_text_and_csv(example6_model):
    rep = build_report(example6_model, parse_log(LOG), with_witness=False)
    text = to_text(rep)
    assert "c1: untimed=yes member=no distance=2 aligned=1,3,4" in text
    assert text.rstrip().endswith("mean distance 1, max distance 2")
    rows = to_csv(rep).splitlines()
    assert rows[0].startswith("case_id,status")
    assert rows[1].startswith("c1,ok,true,false,2,2,1 3 4")
    assert rows[3].startswith("c3,untimed_mismatch,false,,")
