import pytest
from hypothesis import given
from hypothesis import strategies as st

from corpus import SIGMA0_OPS, SIGMA1_OPS, SIGMA2_OPS, formulas_strategy, sequents_strategy
from oracle import HALF as ORACLE_HALF
from oracle import valid, value
from nonsense.errors import (
    CapExceededError,
    ConnectiveNotAdmittedError,
    MeaningfulConnectiveError,
    MissingAtomError,
    NonClassicalValuationError,
)
from nonsense.formula import Conn, atom, conj, disj, imp, neg, parse, sharp_b, sharp_h, variables
from nonsense.semantics import (
    B3,
    CPL,
    H3,
    HALF,
    ONE,
    ZERO,
    Countermodel,
    TruthValue,
    Valuation,
    all_valuations,
    classify,
    countermodel,
    evaluate,
    holds,
    is_valid,
    parse_valuation,
    truth_table,
    valuation,
)
from nonsense.sequent import Sequent, parse_sequent

p, q, r = atom("p"), atom("q"), atom("r")
V = {"1": ONE, "1/2": HALF, "0": ZERO}

# Transcribed from the published tables: row = left operand, column = right
# operand, both in the order 1, 1/2, 0.
PUBLISHED_BINARY = {
    "&": [["1", "1/2", "0"], ["1/2", "1/2", "1/2"], ["0", "1/2", "0"]],
    "|": [["1", "1/2", "1"], ["1/2", "1/2", "1/2"], ["1", "1/2", "0"]],
    "->": [["1", "1/2", "0"], ["1/2", "1/2", "1/2"], ["1", "1/2", "1"]],
}
PUBLISHED_UNARY = {
    "~": {"1": "0", "1/2": "1/2", "0": "1"},
    "#b": {"1": "1", "1/2": "0", "0": "0"},
    "#h": {"1": "1", "1/2": "0", "0": "1"},
}
ORDER = ("1", "1/2", "0")


def _to_oracle(v: Valuation):
    return {k: {ZERO: 0, HALF: ORACLE_HALF, ONE: 1}[x] for k, x in v.assignment.items()}


def _from_oracle(x) -> TruthValue:
    return {0: ZERO, ORACLE_HALF: HALF, 1: ONE}[x]


# -- tables ---------------------------------------------------------------------


@pytest.mark.parametrize("op", sorted(PUBLISHED_BINARY))
@pytest.mark.parametrize("logic", [B3, H3])
def test_binary_tables_match_publication(op, logic):
    f = parse(f"p {op} q")
    for i, x in enumerate(ORDER):
        for j, y in enumerate(ORDER):
            got = evaluate(f, {"p": V[x], "q": V[y]}, logic)
            assert str(got) == PUBLISHED_BINARY[op][i][j]


@pytest.mark.parametrize("op, logic", [("~", B3), ("~", H3), ("#b", B3), ("#h", H3)])
def test_unary_tables_match_publication(op, logic):
    f = parse(f"{op} p", None)
    for x in ORDER:
        assert str(evaluate(f, {"p": V[x]}, logic)) == PUBLISHED_UNARY[op][x]


def test_designated_sets():
    assert B3.designated == {ONE}
    assert H3.designated == {ONE, HALF}
    assert CPL.designated == {ONE}
    assert CPL.values == (ZERO, ONE)


# -- evaluate ---------------------------------------------------------------------


def test_evaluate_examples():
    assert evaluate(conj(p, q), valuation("b3", p=ONE, q=HALF), B3) is HALF
    assert evaluate(neg(p), valuation(p=HALF), H3) is HALF
    assert evaluate(sharp_h(p), valuation(p=ZERO), H3) is ONE
    assert evaluate(imp(p, q), valuation("b3", p=ZERO, q=ZERO), B3) is ONE


def test_evaluate_errors():
    with pytest.raises(MissingAtomError):
        evaluate(disj(p, q), {"p": ONE}, H3)
    with pytest.raises(ConnectiveNotAdmittedError):
        evaluate(sharp_b(p), {"p": ONE}, H3)
    with pytest.raises(ConnectiveNotAdmittedError):
        evaluate(sharp_h(p), {"p": ONE}, B3)
    with pytest.raises(ConnectiveNotAdmittedError):
        evaluate(sharp_b(p), {"p": ONE}, CPL)
    with pytest.raises(NonClassicalValuationError):
        evaluate(p, {"p": HALF}, CPL)
    with pytest.raises(NonClassicalValuationError):
        valuation("cpl", p=HALF)


@given(formulas_strategy(SIGMA0_OPS + (Conn.SHARP_B,), max_leaves=10), st.data())
def test_evaluate_agrees_with_reference_b3(f, data):
    vs = list(all_valuations(variables(f), B3))
    v = data.draw(st.sampled_from(vs))
    assert evaluate(f, v, B3) is _from_oracle(value(f, _to_oracle(v)))


@given(formulas_strategy(SIGMA0_OPS + (Conn.SHARP_H,), max_leaves=10), st.data())
def test_evaluate_agrees_with_reference_h3(f, data):
    vs = list(all_valuations(variables(f), H3))
    v = data.draw(st.sampled_from(vs))
    assert evaluate(f, v, H3) is _from_oracle(value(f, _to_oracle(v)))


@given(formulas_strategy(SIGMA0_OPS, max_leaves=12))
def test_half_is_infectious(f):
    for v in all_valuations(variables(f), H3):
        expect = HALF in v.assignment.values()
        assert (evaluate(f, v, H3) is HALF) == expect
        assert (evaluate(f, v, B3) is HALF) == expect


@given(formulas_strategy(SIGMA0_OPS, max_leaves=12))
def test_classical_inputs_give_classical_outputs(f):
    for v in all_valuations(variables(f), CPL):
        assert evaluate(f, v, B3) == evaluate(f, v, H3) == evaluate(f, v, CPL)


# -- enumeration ------------------------------------------------------------------


def test_enumeration_counts():
    assert len(list(all_valuations({"p"}, CPL))) == 2
    assert len(list(all_valuations({"p", "q"}, H3))) == 9
    assert [v.assignment for v in all_valuations(set(), B3)] == [{}]


def test_enumeration_order():
    got = [tuple(v.to_dict().values()) for v in all_valuations({"q", "p"}, B3)]
    assert got[:4] == [("0", "0"), ("0", "1/2"), ("0", "1"), ("1/2", "0")]
    assert len(set(got)) == 9


def test_cap(monkeypatch):
    atoms = {f"a{i}" for i in range(5)}
    with pytest.raises(CapExceededError):
        next(all_valuations(atoms, H3, cap=4))
    monkeypatch.setenv("NONSENSE_MAX_ATOMS", "3")
    with pytest.raises(CapExceededError):
        countermodel(Sequent([], [parse("a0 | a1 | a2 | a3")]), H3)
    monkeypatch.setenv("NONSENSE_MAX_ATOMS", "many")
    with pytest.raises(ValueError):
        is_valid(Sequent([p], [p]), H3)


# -- sequents -------------------------------------------------------------------------


def test_holds_examples():
    assert holds(valuation(p=ONE), Sequent([p], [p]), H3)
    assert not holds(valuation(p=HALF), Sequent([p], []), H3)
    assert holds(valuation("b3", p=HALF), Sequent([p], []), B3)


def test_excluded_middle():
    s = parse_sequent("=> p | ~p")
    assert is_valid(s, H3)
    cm = countermodel(s, B3)
    assert cm.valuation.to_dict() == {"p": "1/2"}


def test_explosion():
    s = parse_sequent("p, ~p => q")
    assert is_valid(s, B3)
    cm = countermodel(s, H3)
    assert cm.valuation.to_dict() == {"p": "1/2", "q": "0"}


@pytest.mark.parametrize("logic", [CPL, B3, H3])
def test_identity_is_valid(logic):
    assert is_valid(Sequent([p], [p]), logic)


def test_countermodel_json_round_trip():
    cm = countermodel(parse_sequent("p => p | q"), B3)
    data = cm.to_dict()
    assert data == {"logic": "b3", "valuation": {"p": "1", "q": "1/2"}, "sequent": {"ant": ["p"], "suc": ["p | q"]}}
    assert Countermodel.from_dict(data) == cm


@given(sequents_strategy(SIGMA0_OPS, max_side=2, max_leaves=5))
def test_validity_agrees_with_reference(s):
    for logic in ("cpl", "b3", "h3"):
        assert is_valid(s, logic) == valid(s.ant, s.suc, logic)


@given(sequents_strategy(SIGMA0_OPS, max_side=2, max_leaves=5))
def test_three_valued_validity_implies_classical(s):
    for logic in (B3, H3):
        if is_valid(s, logic):
            assert is_valid(s, CPL)


@given(sequents_strategy(SIGMA0_OPS, max_side=2, max_leaves=5))
def test_countermodel_refutes(s):
    for logic in (B3, H3):
        cm = countermodel(s, logic)
        if cm is not None:
            assert not holds(cm.valuation, s, logic)


@given(formulas_strategy(SIGMA0_OPS, max_leaves=8))
def test_tautologies_hold_in_h3_but_not_b3(f):
    s = Sequent([], [f])
    if is_valid(s, CPL):
        assert is_valid(s, H3)
        assert not is_valid(s, B3)


# -- truth tables and classification -------------------------------------------


def test_truth_table_examples():
    rows = [(v.to_dict()["p"], str(x)) for v, x in truth_table(neg(p), B3)]
    assert rows == [("0", "1"), ("1/2", "1/2"), ("1", "0")]
    rows = [(v.to_dict()["p"], str(x)) for v, x in truth_table(p, CPL)]
    assert rows == [("0", "0"), ("1", "1")]
    rows = [(v.to_dict()["p"], str(x)) for v, x in truth_table(conj(p, neg(p)), H3)]
    assert rows == [("0", "0"), ("1/2", "1/2"), ("1", "0")]


def test_classify_disjunction_introduction():
    rep = classify([p], disj(p, q))
    assert rep.cpl_valid and rep.h3_valid and not rep.b3_valid
    assert rep.vars_premises_in_conclusion
    assert rep.countermodels["b3"].valuation.to_dict() == {"p": "1", "q": "1/2"}


def test_classify_conjunction_elimination():
    rep = classify([conj(p, q)], p)
    assert rep.cpl_valid and rep.b3_valid and not rep.h3_valid
    assert rep.vars_conclusion_in_premises
    assert rep.countermodels["h3"].valuation.to_dict() == {"p": "0", "q": "1/2"}


def test_classify_explosion():
    rep = classify([p, neg(p)], q)
    assert rep.cpl_valid and rep.b3_valid and not rep.h3_valid
    assert rep.premises_cpl_inconsistent
    assert not rep.vars_conclusion_in_premises


def test_classify_rejects_meaningful_connectives():
    with pytest.raises(MeaningfulConnectiveError):
        classify([sharp_b(p)], p)


def test_modus_ponens_fails_in_h3():
    rep = classify([p, imp(p, q)], q)
    assert rep.cpl_valid and not rep.h3_valid
    assert rep.countermodels["h3"].valuation.to_dict() == {"p": "1/2", "q": "0"}


@given(st.lists(formulas_strategy(SIGMA0_OPS, max_leaves=5), max_size=3), formulas_strategy(SIGMA0_OPS, max_leaves=5))
def test_sufficient_conditions(premises, conclusion):
    rep = classify(premises, conclusion)
    if rep.cpl_valid and rep.b3_condition:
        assert rep.b3_valid
    if rep.cpl_valid and rep.h3_condition:
        assert rep.h3_valid
    if set(variables(conclusion)) == set().union(*(variables(g) for g in premises)) and rep.cpl_valid:
        assert rep.b3_valid and rep.h3_valid


def test_parse_valuation():
    v = parse_valuation("p=1, q=1/2, r=0")
    assert v.assignment == {"p": ONE, "q": HALF, "r": ZERO}
    with pytest.raises(ValueError):
        parse_valuation("p=2")


@given(formulas_strategy(SIGMA1_OPS, max_leaves=10))
def test_b3_and_h3_share_tables_sigma1(f):
    for v in all_valuations(variables(f), H3):
        assert evaluate(f, v, B3) == evaluate(f, v, H3)


@given(formulas_strategy(SIGMA2_OPS, max_leaves=10))
def test_b3_and_h3_share_tables_sigma2(f):
    for v in all_valuations(variables(f), H3):
        assert evaluate(f, v, B3) == evaluate(f, v, H3)
