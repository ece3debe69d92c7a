"""Smoke tests for the python bindings."""

import pgdag
import pytest


def test_parse_solve_roundtrip():
    game = pgdag.parse_parity("parity 1; 0 2 0 1; 1 1 1 0;")
    assert game.node_count == 2
    assert game.priorities == [2, 1]
    assert game.owner(0) == pgdag.EXISTS
    assert game.successors(0) == [1]

    result = pgdag.solve(game, engine="zielonka")
    assert result["winners"] == [pgdag.EXISTS, pgdag.EXISTS]

    text = pgdag.write_parity(game)
    again = pgdag.parse_parity(text)
    assert pgdag.write_parity(again) == text


def test_engines_agree():
    for seed in range(1, 20):
        game = pgdag.generate("random-parity", seed=seed, n=12, out_degree=3, k=4)
        winners = [pgdag.solve(game, engine=e)["winners"]
                   for e in ("baseline", "accel", "zielonka")]
        assert winners[0] == winners[1] == winners[2]


def test_generator_is_deterministic():
    a = pgdag.generate("dag-chain", seed=9, m=3, depth=5, width=2, k=2)
    b = pgdag.generate("dag-chain", seed=9, m=3, depth=5, width=2, k=2)
    assert pgdag.write_parity(a) == pgdag.write_parity(b)


def test_dag_detection_on_chain():
    game = pgdag.generate("dag-chain", seed=7, m=2, depth=10, width=1, k=2)
    dag = pgdag.detect_dag(game)
    assert len(dag["dag_nodes"]) == 10
    assert len(dag["real_nodes"]) == 2

    accel = pgdag.solve(game, engine="accel")
    assert accel["dag_nodes"] == 10
    assert accel["stats"]["f_evaluations"] > 0


def test_emerson_lei_pipeline():
    el = pgdag.parse_el("elgame 0; colors a; objective Inf(a); 0 0 a 0;")
    assert pgdag.solve_el(el)["winners"] == [pgdag.EXISTS]
    assert pgdag.el_oracle(el, 0) == pgdag.EXISTS

    fin = pgdag.parse_el("elgame 0; colors a; objective Fin(a); 0 0 a 0;")
    assert pgdag.solve_el(fin)["winners"] == [pgdag.FORALL]

    product = pgdag.build_product(el)
    assert product["game"].node_count == 1
    assert product["initials"] == [0]


def test_errors_map_to_exceptions():
    with pytest.raises(pgdag.ParseError):
        pgdag.parse_parity("parity 1; 0 2 0 1 oops")
    with pytest.raises(pgdag.ValidationError):
        pgdag.parse_parity("parity 0; 0 1 0 ;")
    with pytest.raises(pgdag.BudgetError):
        el = pgdag.generate("random-el", seed=3, n=6, out_degree=2, colors=4)
        pgdag.build_product(el, budget=2)
