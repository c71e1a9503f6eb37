"""Property-based invariants over randomized structures and designs."""

from math import comb

from hypothesis import given, settings, strategies as st

import naive_oracle as oracle
from gencov import (
    Design,
    DesignSemanticError,
    DesignSyntaxError,
    PartStructure,
    admissible_patterns,
    admissible_tuples,
    delete_points,
    emit_design,
    expand_blocks,
    from_covering_array,
    greedy_cover,
    make_block,
    mod1,
    parse_design,
    pattern_tuple_count,
    restrict,
    schonheim,
    set_lift,
    to_covering_array,
    verify,
)


@st.composite
def structures(draw, max_parts=4, max_size=5):
    m = draw(st.integers(1, max_parts))
    v = tuple(draw(st.integers(1, max_size)) for _ in range(m))
    k = tuple(draw(st.integers(1, vi)) for vi in v)
    return PartStructure(v, k)


@st.composite
def structures_with_strength(draw):
    s = draw(structures())
    t = draw(st.integers(0, min(s.k_sum, 4)))
    return s, t


@st.composite
def arbitrary_designs(draw):
    """Random block lists; no validity requirement."""
    s = draw(structures(max_parts=3, max_size=4))
    t = draw(st.integers(0, s.k_sum))
    nblocks = draw(st.integers(0, 5))
    blocks = []
    for _ in range(nblocks):
        parts = [
            tuple(sorted(draw(st.permutations(range(1, vi + 1)))[:ki]))
            for vi, ki in zip(s.v, s.k)
        ]
        blocks.append(tuple(parts))
    return Design(s, t, tuple(blocks))


@given(structures_with_strength())
def test_patterns_are_admissible_and_ordered(st_pair):
    s, t = st_pair
    pats = admissible_patterns(s, t)
    assert pats == sorted(pats, reverse=True)  # descending, no duplicates
    for p in pats:
        assert sum(p) == t
        assert all(0 <= pi <= ki for pi, ki in zip(p, s.k))
    assert set(pats) == set(oracle.patterns(s.v, s.k, t))


@given(structures_with_strength())
def test_tuple_enumeration_counts(st_pair):
    s, t = st_pair
    for p in admissible_patterns(s, t):
        tuples = list(admissible_tuples(s, p))
        assert len(tuples) == pattern_tuple_count(s, p)
        assert len(set(tuples)) == len(tuples)
        expected = 1
        for vi, pi in zip(s.v, p):
            expected *= comb(vi, pi)
        assert pattern_tuple_count(s, p) == expected


@given(structures_with_strength())
@settings(max_examples=40)
def test_greedy_cover_valid_everywhere(st_pair):
    s, t = st_pair
    d = greedy_cover(s, t)
    assert verify(d).valid
    assert oracle.naive_valid(*oracle.as_raw(d))


@given(st.integers(1, 40), st.integers(1, 40), st.integers(1, 8))
def test_schonheim_basic_shape(v, k, t):
    if not (v >= k >= t):
        return
    n = schonheim(v, k, t)
    assert n >= 1
    assert schonheim(v, v, t) == 1
    assert schonheim(v, k, 1) == -(-v // k)


@given(arbitrary_designs())
def test_emit_parse_round_trip(d):
    text = emit_design(d)
    back = parse_design(text)
    assert back.structure == d.structure
    assert back.t == d.t and back.lam == d.lam
    assert back.blocks == d.blocks
    assert emit_design(back) == text


@given(st.text(max_size=200))
@settings(max_examples=200)
def test_parser_rejects_garbage_gracefully(text):
    try:
        parse_design(text)
    except (DesignSyntaxError, DesignSemanticError):
        pass  # structured diagnostics are the only acceptable failures


@given(arbitrary_designs())
def test_transform_count_inequalities(d):
    if len(d.blocks) == 0:
        return
    s = d.structure
    full = frozenset(range(1, s.m + 1))
    if s.k != (1,):  # restrict forbids the single-unit-part result
        assert len(restrict(d, full)) == len(d)
    kept = delete_points(d, s.v)
    assert len(kept) <= len(d)  # deduplication may shrink even at identity
    if len(set(d.blocks)) == len(d.blocks):
        assert len(kept) == len(d)
    assert len(delete_points(d, s.k)) <= len(d)
    if all(ki >= 2 for ki in s.k):
        assert len(expand_blocks(d, s.v)) <= len(d)


@given(st.integers(1, 60), st.integers(1, 9))
def test_mod1_decomposition(x, v):
    r = mod1(x, v)
    assert 1 <= r <= v
    q = -(-x // v)
    assert x == r + (q - 1) * v


@given(st.sets(st.integers(1, 6), min_size=1, max_size=4),
       st.sets(st.integers(1, 5), min_size=1, max_size=4),
       st.integers(6, 9))
def test_set_lift_shape(R, S, v):
    out = set_lift(R, S, v)
    assert len(out) == len(R) * len(S)
    assert min(out) >= 1
    assert max(out) <= v * max(S)


@given(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 1)),
                min_size=1, max_size=8))
def test_covering_array_round_trip(rows):
    d = from_covering_array(rows, t=1)
    alphabets = [sorted({r[i] for r in rows}) for i in range(2)]
    back = to_covering_array(d, alphabets=alphabets)
    assert [tuple(r) for r in back] == [tuple(r) for r in rows]


@given(structures(max_parts=3, max_size=5), st.randoms(use_true_random=False))
def test_make_block_canonical(s, rnd):
    parts = []
    for vi, ki in zip(s.v, s.k):
        labels = list(range(1, vi + 1))
        rnd.shuffle(labels)
        parts.append(labels[:ki])
    b = make_block(s, parts)
    assert all(list(p) == sorted(p) for p in b)
    assert make_block(s, b) == b
