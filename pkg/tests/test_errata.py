from quadnomial.errata import ITEMS, adjudicate


def test_statements_win_every_flagged_item():
    results = adjudicate(5, 200, n_max=2)
    assert {r.item_id for r in results} == {i.item_id for i in ITEMS}
    for r in results:
        assert r.cases > 0
        assert r.statement_matches == r.cases
        assert r.winner == "statement"
        assert r.proof_counterexample


def test_hand_checked_counterexamples():
    by_id = {r.item_id: r for r in adjudicate(5, 20)}
    assert by_id["LEMMA3_R8_3_C1"].proof_counterexample == "p=11"
    assert by_id["THM_A_EQ2_R8_5"].proof_counterexample == "p=5, n=1"
    # at p = 5 the proof-line form of the half-row sum happens to agree
    assert by_id["PROP_B2_R8_5"].proof_counterexample == "p=13, n=1"


def test_empty_range():
    assert adjudicate(24, 28) == []
    assert adjudicate(100, 50) == []
