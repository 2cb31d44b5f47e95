import json

import pytest

from eigenmult.algebraic import default_lambda_set
from eigenmult.enumeration import connected_graphs
from eigenmult.families import broom, path_graph
from eigenmult.graphs import from_edge_list
from eigenmult.sweep import CSV_COLUMNS, SweepRecord, sweep


def corpus6():
    return [g for n in range(1, 7) for g in connected_graphs(n)]


def test_sweep_empty_corpus():
    rep = sweep([], 2, default_lambda_set(5), "thm22")
    assert rep.records == [] and rep.summary["disagreements"] == 0
    assert rep.summary["records"] == 0


def test_sweep_skips_disconnected():
    rep = sweep([broom(2, 2, 0)], 2, default_lambda_set(5), "thm22")
    assert rep.records == []
    assert rep.skipped.get("disconnected") == 1


def test_sweep_deterministic_and_parallel(lambdas_q8):
    c = corpus6()
    rep1 = sweep(c, 2, lambdas_q8, "thm22")
    rep2 = sweep(c, 2, lambdas_q8, "thm22")
    assert rep1.to_csv() == rep2.to_csv()
    assert rep1.to_json() == rep2.to_json()
    rep3 = sweep(c, 2, lambdas_q8, "thm22", jobs=3)
    assert rep3.to_csv() == rep1.to_csv()


def test_sweep_mode_all(lambdas_q8):
    from eigenmult.families import build_branched_family, spider

    fixture = build_branched_family(
        spider([2, 2, 2]), [("T", 2, 2), ("T", 2, 2), ("C", 6, 4)], 3
    )
    c = [g for n in range(1, 7) for g in connected_graphs(n)] + [fixture]
    rep = sweep(c, 2, lambdas_q8, "all")
    modes = {r.mode for r in rep.records}
    # P_6 feeds thm23, tadpole-with-tail shapes feed thm24, the 26-vertex
    # fixture feeds thm25 (as a G_2 member it still decomposes)
    assert modes == {"thm22", "thm23", "thm24", "thm25"}
    assert rep.summary["disagreements"] == 0
    with pytest.raises(ValueError):
        sweep(c, 2, lambdas_q8, "thm99")


def test_sweep_records_fields(lambdas_q8):
    rep = sweep([path_graph(5)], 2, lambdas_q8, "thm22")
    assert rep.records
    r = rep.records[0]
    assert r.n == 5 and r.c == 0 and r.q_s == 1 and r.bound == 1
    blob = json.loads(rep.to_json())
    assert set(blob) == {"parameters", "summary", "skipped", "records"}
    assert blob["parameters"]["mode"] == "thm22"
    csv_text = rep.to_csv()
    header = csv_text.splitlines()[0].split(",")
    assert header == CSV_COLUMNS


def test_sweep_counts_out_of_hypothesis(lambdas_q8):
    # lambda = +-1 lies in the order-2 path spectrum: skipped, not recorded
    rep = sweep([path_graph(5)], 2, lambdas_q8, "thm22")
    names = {r.lambda_name for r in rep.records}
    assert "2cos(1pi/3)" not in names and "2cos(2pi/3)" not in names
    assert rep.skipped.get("lambda_in_path_spectrum", 0) > 0
