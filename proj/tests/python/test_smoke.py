import pytest

import brm


def test_single_letter_swaps_and_is_involutive():
    t = brm.apply(2, 2, "s1")
    assert len(t) == 2 and len(t[0]) == 2
    back = brm.apply(2, 2, "s1*s1")
    for i in (1, 2):
        for r in (1, 2):
            assert brm.equal(back[i - 1][r - 1], f"x[{i},{r}]")


def test_word_conventions():
    assert brm.parse_word("s2*s3*s1*s2") == [2, 1, 3, 2]
    assert brm.parse_word("s2*s3", letters_first=True) == [2, 3]


def test_sigma_example():
    got = brm.sigma(4, 1, 2, 5, 3)
    want = ("x[1,3]*x[1,2]*x[1,1]*x[1,4]*x[1,3] + x[1,3]*x[1,2]*x[1,1]*x[1,4]*x[2,3]"
            " + x[1,3]*x[1,2]*x[1,1]*x[2,4]*x[2,3] + x[1,3]*x[1,2]*x[2,1]*x[2,4]*x[2,3]")
    assert brm.equal(got, want)


def test_families_and_generating_function():
    fams = brm.families("tau", 4, 2, 3, 5)
    assert len(fams) == 2
    assert brm.equal(brm.gen_tau(4, 2, 3, 5), brm.tau(4, 1, 2, 5, 3))


def test_guard():
    with pytest.raises(brm.GuardExceeded):
        brm.families("tau", 5, 7, 1, 3)


def test_verify_report():
    assert "braid" in brm.suites()
    rep = brm.verify("braid", n=3, m=3, mode="modular")
    assert rep["suite"] == "braid"
    assert all(c["status"] == "pass" for c in rep["cases"])
    with pytest.raises(ValueError):
        brm.verify("nonsense")
