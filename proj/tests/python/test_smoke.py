from fractions import Fraction

import pytest

import circparikh as cp


def test_counts():
    assert cp.count_subword("bcbcc", "bc") == 5
    assert cp.count_subword("aabcbc", "abc") == 6
    assert cp.direct_count("[cabacb]", "abc") == 4
    assert cp.direct_count("aaaaaa", "aa") == 15
    assert cp.avg_count("[abcabc]", "ab") == Fraction(7, 3)
    assert cp.avg_count("acb", "ab") == Fraction(1, 3)
    assert cp.avg_count("abbac", "abc") == Fraction(2, 5)


def test_big_counts_are_python_ints():
    n = cp.count_subword("a" * 200, "a" * 100)
    assert isinstance(n, int)
    assert n > 2**64


def test_matrices():
    assert cp.parikh_matrix("bacbc") == [[1, 1, 1, 1], [0, 1, 2, 3], [0, 0, 1, 2], [0, 0, 0, 1]]
    top = cp.circular_parikh_matrix("cabacb")[0]
    assert top == [1, 2, 2, Fraction(4, 3)]
    assert all(isinstance(x, Fraction) for x in top)
    assert cp.circular_parikh_matrix("abab", alphabet="a,b") == cp.circular_parikh_matrix("bbaa", alphabet="a,b")
    assert cp.parikh_vector("cabacb") == [2, 2, 2]
    assert cp.binary_closed_form(2, 2) == cp.circular_parikh_matrix("abab", alphabet="a,b")
    assert cp.matrix_json("", alphabet="a,b") == '{"dim":3,"entries":[["1","0","0"],["0","1","0"],["0","0","1"]]}'


def test_equivalence_and_canonical_form():
    assert cp.canonicalize("cabacb") == "[abacbc]"
    assert cp.canonicalize("") == "[]"
    assert cp.m_equivalent("abab", "bbaa")
    assert not cp.m_equivalent("abab", "bbaa", linear=True)
    assert not cp.m_equivalent("acb", "cab")
    assert cp.m_equivalent("aaaacbbc", "aaacbabc")
    assert cp.matrix_key("abcabc") != cp.matrix_key("abacbc")
    assert cp.matrix_key("abcabc", circular=False) == cp.matrix_key("abacbc", circular=False)


def test_rules():
    apps = cp.find_ce1("abacca")
    assert len(apps) == 1
    assert apps[0]["valid"]
    assert apps[0]["condition"] == (0, 0)
    assert apps[0]["result"] == cp.canonicalize("abcaac")
    ce2 = [a for a in cp.find_ce2("cbabbcba") if a["representative"] == "cbabbcba" and a["x"] == "cb"]
    assert ce2 and ce2[0]["alpha"] == "a" and ce2[0]["condition"] == (6, 6)
    assert cp.find_ce1("abab") == [] and cp.find_ce2("abab") == []
    assert "bcabc" in cp.apply_e1("bacbc")
    assert cp.apply_e2("abba") == ["baab"]

    single = cp.rewrite_closure("aaaacbbc")
    assert single["nodes"] == ["[aaaacbbc]"] and single["edges"] == [] and not single["truncated"]
    g = cp.rewrite_closure("abacca")
    assert cp.canonicalize("abcaac") in g["nodes"]
    assert g["dot"].startswith("graph rewrite {")


def test_enumeration():
    assert cp.enumerate_necklaces(4, alphabet="a,b") == ["[aaaa]", "[aaab]", "[aabb]", "[abab]", "[abbb]", "[bbbb]"]
    assert cp.enumerate_necklaces(0) == ["[]"]
    assert cp.necklace_count(3, 3) == 11
    report = cp.partition_by_matrix(4, alphabet="a,b")
    assert report["stats"]["classes"] == 5
    assert ["[aabb]", "[abab]"] in report["classes"].values()
    assert cp.search_negative_minor(8, alphabet="a,b")["witness"] is None


def test_suites():
    assert "naive-failures" in cp.suite_names()
    result = cp.run_suite("binary-closed-form", max_length=8)
    assert result["passed"] and result["checked"] == 510
    assert cp.run_suite("naive-failures")["failure_count"] == 0


def test_errors():
    with pytest.raises(ValueError, match="'d'"):
        cp.count_subword("abd", "a")
    with pytest.raises(ValueError):
        cp.find_ce1("abab", alphabet="a,b")
    with pytest.raises(ValueError):
        cp.run_suite("nope")
    with pytest.raises(ValueError):
        cp.canonicalize("a", alphabet="a,a")
