import pytest

import twobridge as tb


def test_relator_words():
    assert tb.u_word("4/7") == "abABabAbaBAbaB"
    assert tb.u_hat("4/7") == "bABabA"
    assert tb.u_word("0/1") == "ab"


def test_sequences():
    assert tb.cf_expand("5/17") == [3, 2, 2]
    assert tb.cf_value([3, 2, 2]) == "5/17"
    assert tb.t_seq("10/37") == [3, 2, 2, 3, 2, 2]
    assert tb.decompose("8/35") == ([5, 4, 5], [4, 4, 5, 4, 4])
    assert tb.fundamental_endpoints("10/37") == ("7/26", "3/11")
    s = tb.s_seq("10/37")
    assert len(s) == 20 and sum(s) == 74


def test_decisions():
    v = tb.is_null_homotopic("1/6", "1/3")
    assert v["answer"] is True
    assert v["representative"] == "inf"
    assert v["trace"]["steps"][0]["matrix"] == [1, 0, 6, -1]
    assert tb.is_null_homotopic("1/1", "0/1")["answer"] is False
    assert tb.homotopy_representative("7/3", "1/3") == "1/3"
    assert tb.has_umpp_epimorphism("1/6", "1/3")
    assert not tb.has_umpp_epimorphism("1/2", "1/3")
    assert tb.scan("inf", 10) == ["inf"]
    hits = tb.scan("1/3", 6)
    assert "1/6" in hits and "1/3" in hits and "1/2" not in hits
    assert tb.schubert_equivalent("3/7", "5/7")


def test_cancellation():
    rep = tb.check_c4_t4("4/7")
    assert rep["c4"] and rep["t4"] and rep["min_cyclic_pieces"] == 4
    assert tb.satisfies_necessary_condition("5/17", "5/17")
    assert not tb.satisfies_necessary_condition("2/7", "5/17")


def test_errors():
    with pytest.raises(ValueError):
        tb.u_word("x")
    with pytest.raises(ValueError):
        tb.fundamental_endpoints("3/2")
    with pytest.raises(ValueError):
        tb.scan("1/3", 5, mode="both")
    with pytest.raises(OverflowError):
        tb.is_null_homotopic("9223372036854775807/9223372036854775806", "1/3")


def test_verify_small():
    suites = tb.verify(5)
    assert len(suites) == 8
    assert all(s["passed"] for s in suites)
