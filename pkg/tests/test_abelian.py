import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exotic4.fpgroup import AbelianInvariants, Presentation, abelianize, parse_presentation, smith_normal_form
from oracles import determinantal_invariants, naive_snf


def test_examples():
    assert abelianize(parse_presentation("<a, b | [a,b]>")) == AbelianInvariants(2, ())
    assert abelianize(parse_presentation("<a | a^3>")) == AbelianInvariants(0, (3,))
    assert smith_normal_form([[2, 0], [0, 3]]) == [1, 6]
    assert smith_normal_form([[0, 0], [0, 0]]) == [0, 0]
    assert smith_normal_form([[1, 0], [0, 1]]) == [1, 1]


def test_invariants_validation():
    with pytest.raises(ValueError):
        AbelianInvariants(0, (2, 3))
    with pytest.raises(ValueError):
        AbelianInvariants(0, (1,))
    assert str(AbelianInvariants(2, (3,))) == "Z^2 + Z/3"
    assert str(AbelianInvariants(0, ())) == "0"


def test_snf_agrees_with_naive_oracle_on_100_random_matrices():
    rng = random.Random(20261016)
    for _ in range(100):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        m = [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)]
        got = smith_normal_form(m)
        assert got == naive_snf(m) == determinantal_invariants(m), m


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-12, 12), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@settings(max_examples=300, derandomize=True, deadline=None)
@given(matrices)
def test_snf_divisibility_and_minors(m):
    d = smith_normal_form(m)
    nz = [x for x in d if x]
    assert all(x >= 0 for x in d)
    assert d[len(nz):] == [0] * (len(d) - len(nz))
    assert all(nz[i + 1] % nz[i] == 0 for i in range(len(nz) - 1))
    assert d == determinantal_invariants(m)


@settings(max_examples=200, derandomize=True, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=1, max_size=4),
       st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_adding_a_relator_never_raises_free_rank(rows, extra):
    def pres(rs):
        rels = ["*".join(f"{g}^{e}" for g, e in zip("xyz", row) if e) or "1" for row in rs]
        return Presentation(("x", "y", "z"), tuple(rels))

    before = abelianize(pres(rows))
    after = abelianize(pres(rows + [extra]))
    assert after.free_rank <= before.free_rank
    assert before.free_rank + len(before.torsion) <= 3
