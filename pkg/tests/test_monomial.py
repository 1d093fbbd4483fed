import pytest
from hypothesis import given, strategies as st

from lexgotz.macaulay import upper_shift
from lexgotz.monomial import (
    EnumerationCapError,
    LexSegment,
    Monomial,
    enumerate_Md,
    is_completely_lexsegment,
    lex_compare,
    lexsegment_set,
    linear_resolution_shape,
    normalize_segment,
    parse_monomial,
    rank_after,
    rank_after_expansion,
    restrict_leading,
    shadow,
)

from oracles import all_monomials, count_below, pascal_binomial


def M(text, n=3):
    return parse_monomial(text, n)


def test_monomial_basics():
    m = M("x1^2*x3")
    assert m == (2, 0, 1)
    assert m.degree == 3
    assert m.nu(1) == 2 and m.nu(2) == 0
    assert m.max_index == 3 and m.min_index == 1
    assert str(m) == "x1^2*x3"
    assert str(Monomial([0, 0, 0])) == "1"


def test_monomial_rejects_negative():
    with pytest.raises(ValueError):
        Monomial([1, -1])


def test_arithmetic():
    a, b = M("x1*x2^2"), M("x2*x3")
    assert a * b == M("x1*x2^3*x3")
    assert a.gcd(b) == M("x2")
    assert a.lcm(b) == M("x1*x2^2*x3")
    assert (a * b) / b == a
    with pytest.raises(ValueError):
        b / a


@pytest.mark.parametrize(
    "text, n, want",
    [
        ("[2,0,1]", None, (2, 0, 1)),
        ("[2, 0, 1]", 3, (2, 0, 1)),
        ("x1^2*x3", 3, (2, 0, 1)),
        ("x3*x1*x1", 3, (2, 0, 1)),
        ("x2", 4, (0, 1, 0, 0)),
        ("1", 2, (0, 0)),
    ],
)
def test_parse(text, n, want):
    assert parse_monomial(text, n) == want


@pytest.mark.parametrize("text, n", [("x4", 3), ("y1", 3), ("x1^", 3), ("[1,2", 2), ("[1,2]", 3), ("x1", None)])
def test_parse_errors(text, n):
    with pytest.raises(ValueError):
        parse_monomial(text, n)


@given(st.lists(st.integers(0, 6), min_size=1, max_size=6))
def test_print_parse_roundtrip(exps):
    m = Monomial(exps)
    assert parse_monomial(str(m), len(exps)) == m
    assert parse_monomial(str(list(m)), len(exps)) == m


def test_lex_compare():
    assert lex_compare(M("x1*x3^2"), M("x2^3")) == 1
    assert lex_compare(M("x2^3"), M("x2^3")) == 0
    assert lex_compare(M("x2^2*x3"), M("x2*x3^2")) == 1
    assert lex_compare(M("x2*x3^2"), M("x2^2*x3")) == -1


def test_lex_compare_errors():
    with pytest.raises(ValueError):
        lex_compare(M("x1"), M("x1^2"))
    with pytest.raises(ValueError):
        lex_compare(Monomial([1, 0]), Monomial([1, 0, 0]))


def test_enumerate_examples():
    assert enumerate_Md(1, 4) == (Monomial([4]),)
    m32 = enumerate_Md(3, 2)
    assert len(m32) == 6 and m32[0] == M("x1^2") and m32[-1] == M("x3^2")
    assert [str(m) for m in enumerate_Md(2, 3)] == ["x1^3", "x1^2*x2", "x1*x2^2", "x2^3"]


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("d", range(1, 7))
def test_enumerate_matches_oracle(n, d):
    got = enumerate_Md(n, d)
    assert len(got) == pascal_binomial(n + d - 1, d)
    assert list(got) == all_monomials(n, d)
    assert all(lex_compare(a, b) == 1 for a, b in zip(got, got[1:]))


def test_enumeration_cap(monkeypatch):
    monkeypatch.setenv("LEXGOTZ_ENUM_CAP", "100")
    with pytest.raises(EnumerationCapError):
        enumerate_Md(6, 6)


@pytest.mark.parametrize("text, n, want", [("x3^2", 3, 0), ("x2*x3", 3, 1), ("x2^3", 3, 3), ("x1^2", 3, 5)])
def test_rank_after_examples(text, n, want):
    assert rank_after(M(text, n)) == want


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("d", range(1, 6))
def test_rank_after_matches_enumeration(n, d):
    for v in enumerate_Md(n, d):
        exp = rank_after_expansion(v)  # validates as a Macaulay expansion
        assert exp.value == rank_after(v) == count_below(v)


def test_lexsegment_examples():
    u = M("x1*x2")
    assert lexsegment_set(LexSegment(u, u)) == (u,)
    assert lexsegment_set(LexSegment(M("x1*x3^2"), M("x2^3"))) == (M("x1*x3^2"), M("x2^3"))
    got = lexsegment_set(LexSegment(M("x1*x2"), M("x2*x3")))
    assert [str(m) for m in got] == ["x1*x2", "x1*x3", "x2^2", "x2*x3"]


def test_lexsegment_errors():
    with pytest.raises(ValueError):
        LexSegment(M("x2^3"), M("x1*x3^2"))
    with pytest.raises(ValueError):
        LexSegment(M("x1"), M("x2^2"))


@pytest.mark.parametrize("n, d", [(2, 2), (3, 3), (4, 2)])
def test_segment_size_from_ranks(n, d):
    monos = enumerate_Md(n, d)
    for i, u in enumerate(monos):
        for v in monos[i:]:
            seg = LexSegment(u, v)
            assert len(seg) == len(lexsegment_set(seg)) == rank_after(u) - rank_after(v) + 1


def test_shadow_examples():
    x1 = Monomial([1, 0])
    assert shadow([x1]) == (Monomial([2, 0]), Monomial([1, 1]))
    sh = shadow(lexsegment_set(LexSegment(M("x1*x2"), M("x2*x3"))))
    assert len(sh) == 8
    assert sh[0] == M("x1^2*x2") and sh[-1] == M("x2*x3^2")
    assert shadow([]) == ()


def test_shadow_rejects_mixed_degrees():
    with pytest.raises(ValueError):
        shadow([M("x1"), M("x1*x2")])


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("d", range(1, 5))
def test_shadow_bounds(n, d):
    monos = enumerate_Md(n, d)
    for i, u in enumerate(monos):
        for v in monos[i:]:
            seg = LexSegment(u, v)
            sh = shadow(lexsegment_set(seg))
            top = seg.shifted()
            assert sh[0] == top.u and sh[-1] == top.v
            assert set(sh) <= set(lexsegment_set(top))


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("d", range(1, 6))
def test_shadow_complement_law(n, d):
    monos = enumerate_Md(n, d)
    top = pascal_binomial(n + d, d + 1)
    for k in range(len(monos)):
        r = len(monos) - k - 1
        assert top - len(shadow(monos[: k + 1])) == upper_shift(r, d)


def test_completely_examples():
    assert is_completely_lexsegment(LexSegment(M("x1*x2"), M("x2*x3")))
    assert not is_completely_lexsegment(LexSegment(M("x1*x3^2"), M("x2^3")))
    # the degree-4 interval contains x1*x2^2*x3, which the shadow misses
    sh = shadow(lexsegment_set(LexSegment(M("x1*x3^2"), M("x2^3"))))
    assert M("x1*x2^2*x3") in lexsegment_set(LexSegment(M("x1^2*x3^2"), M("x2^3*x3")))
    assert M("x1*x2^2*x3") not in sh
    for n, d in [(2, 3), (3, 2), (4, 3)]:
        assert is_completely_lexsegment(LexSegment(Monomial.power(1, d, n), Monomial.power(n, d, n)))


def test_example_degree4_segment_is_completely():
    assert is_completely_lexsegment(LexSegment(M("x1^2*x3^2"), M("x2^3*x3")))


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("d", range(1, 5))
def test_completeness_propagates(n, d):
    monos = enumerate_Md(n, d)
    for i, u in enumerate(monos):
        for v in monos[i:]:
            seg = LexSegment(u, v)
            if not is_completely_lexsegment(seg):
                continue
            for k in range(1, 4):
                assert shadow(lexsegment_set(seg.shifted(k - 1))) == lexsegment_set(seg.shifted(k))


def test_restrict_leading():
    seg = LexSegment(M("x2^2", 4), M("x3*x4", 4))
    small, dropped = restrict_leading(seg)
    assert dropped == 1
    assert small.u == Monomial([2, 0, 0]) and small.v == Monomial([0, 1, 1])
    assert restrict_leading(LexSegment(M("x1*x2"), M("x3^2")))[1] == 0


def test_normalize_segment():
    # x1 * x3^2 * (x3, x4): strip x1, drop the unused x2, strip x3^2
    seg = LexSegment(M("x1*x3^3", 4), M("x1*x3^2*x4", 4))
    norm = normalize_segment(seg)
    assert norm.n == 2
    assert (norm.u, norm.v) == (Monomial([1, 0]), Monomial([0, 1]))
    # x1^2 x3 .. x1 x2 x3 loses one x1 and keeps x1 | u
    norm = normalize_segment(LexSegment(M("x1^2*x3"), M("x1*x2*x3")))
    assert (norm.u, norm.v) == (M("x1*x3"), M("x2*x3"))


def test_linear_resolution_shape():
    assert linear_resolution_shape(LexSegment(M("x1*x3^2"), M("x2*x3^2")))
    assert linear_resolution_shape(LexSegment(M("x1*x4", 4), M("x3*x4", 4)))
    assert not linear_resolution_shape(LexSegment(M("x1*x2*x3"), M("x2*x3^2")))
    assert not linear_resolution_shape(LexSegment(M("x1*x3^2"), M("x2^3")))
