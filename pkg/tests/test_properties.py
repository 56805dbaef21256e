"""Property verdicts: lifting, normality, the splitting property, localness.

The named fixture verdicts here are frozen oracles; the equivalence and
implication scans run over the corpus plus every instance of size <= 5.
"""

import pytest

from quantales.lattices import has_id_blp, lattice_is_b_normal
from quantales.properties import (
    Decomposition, PropertyReport, element_has_lp, has_lp, has_property_star,
    hyperarchimedean_equivalents, is_b_normal, is_hyperarchimedean, is_local,
    is_normal, is_semilocal, is_semiprime, local_decomposition)
from quantales.quantale import (
    TrivialQuantale, interval_quantale, jacobson_radical, radical_frame)
from quantales.reticulation import reticulate


def test_d12_verdicts(d12):
    assert has_lp(d12)
    assert is_b_normal(d12)
    assert is_normal(d12)
    assert is_hyperarchimedean(d12)
    assert not is_semiprime(d12)
    assert not is_local(d12)
    assert len(d12.maximal_elements) == 2
    assert has_property_star(d12)


def test_w5_verdicts(w5):
    lifting = has_lp(w5)
    assert not lifting
    anchor, unliftable = lifting.witness
    assert anchor == '{z}'
    normal = is_normal(w5)
    assert not normal
    assert set(normal.witness) == {'{x,z}', '{y,z}'}
    assert not is_b_normal(w5)
    assert not has_property_star(w5)
    assert is_semiprime(w5)
    assert not is_local(w5)


def test_c3_verdicts(c3):
    assert is_local(c3)
    assert has_lp(c3)
    hyper = is_hyperarchimedean(c3)
    assert not hyper and hyper.witness is not None
    assert is_semiprime(c3)


def test_lifting_equivalence_six_ways(corpus, small_corpus):
    for member in list(corpus) + list(small_corpus):
        q = member.quantale
        frame = radical_frame(q).as_quantale
        quotient = reticulate(q).lattice
        verdicts = {bool(has_lp(q)), bool(has_lp(frame)),
                    bool(has_id_blp(quotient)), bool(is_b_normal(q)),
                    bool(is_b_normal(frame)), bool(lattice_is_b_normal(quotient))}
        assert len(verdicts) == 1, member.name


def test_hyperarchimedean_legs_agree(corpus):
    for member in corpus:
        legs = hyperarchimedean_equivalents(member.quantale)
        three = {legs['powers_reach_center'], legs['reticulation_boolean'],
                 legs['maximals_exhaust_spectrum']}
        assert len(three) == 1, member.name
        zero_dim = legs['radical_frame_zero_dimensional']
        if is_semiprime(member.quantale):
            assert zero_dim == legs['powers_reach_center'], member.name
        else:
            assert zero_dim is None, member.name


def test_non_semiprime_fixture_has_no_zero_dimensional_leg(d12):
    legs = hyperarchimedean_equivalents(d12)
    assert legs['radical_frame_zero_dimensional'] is None
    assert legs['powers_reach_center'] is True


def test_splitting_implies_lifting(corpus, small_corpus):
    for member in list(corpus) + list(small_corpus):
        q = member.quantale
        if len(q) == 1:
            continue
        if has_property_star(q):
            assert has_lp(q), member.name


def test_normal_lifts_the_radical(corpus, small_corpus):
    for member in list(corpus) + list(small_corpus):
        q = member.quantale
        if len(q) == 1:
            continue
        if is_normal(q):
            assert element_has_lp(q, jacobson_radical(q)), member.name


def test_lifting_passes_to_every_interval(corpus):
    for member in corpus:
        q = member.quantale
        if not has_lp(q):
            continue
        for a in range(len(q)):
            part, _ = interval_quantale(q, a)
            assert has_lp(part), (member.name, q.label(a))


def test_central_elements_below_radical_vanish(corpus, small_corpus):
    for member in list(corpus) + list(small_corpus):
        q = member.quantale
        if len(q) == 1:
            continue
        r = jacobson_radical(q)
        for e in q.center:
            if q.leq(e, r):
                assert e == q.bottom, member.name


def test_d12_local_decomposition_golden(d12):
    dec = local_decomposition(d12)
    assert isinstance(dec, Decomposition)
    assert [d12.label(e) for e in dec.idempotents] == ['4', '3']
    assert sorted(len(f) for f in dec.factors) == [2, 3]
    assert all(is_local(f) for f in dec.factors)
    # maximal counts add across the factors
    assert sum(len(f.maximal_elements) for f in dec.factors) == 2


def test_w5_decomposition_fails_at_the_radical(w5):
    verdict = local_decomposition(w5)
    assert not verdict
    assert verdict.witness[0] == 'radical-without-lp'
    assert verdict.witness[1] == '{z}'
    assert not element_has_lp(w5, jacobson_radical(w5))


def test_one_point_carrier_raises(corpus):
    q1 = corpus.get('Q1').quantale
    with pytest.raises(TrivialQuantale):
        local_decomposition(q1)
    with pytest.raises(TrivialQuantale):
        has_property_star(q1)


def test_five_way_decomposition_equivalence(corpus, small_corpus):
    for member in list(corpus) + list(small_corpus):
        q = member.quantale
        if len(q) == 1:
            continue
        r = jacobson_radical(q)
        values = {
            is_semilocal(q) and bool(has_property_star(q)),
            is_semilocal(q) and bool(has_lp(q)),
            is_semilocal(q) and bool(element_has_lp(q, r)),
            bool(local_decomposition(q)),
        }
        assert len(values) == 1, member.name


def test_property_report_shape(d12):
    report = PropertyReport.analyze(d12)
    assert not report.trivial
    assert report.verdicts['lp'] and report.verdicts['hyperarchimedean']
    assert not report.verdicts['semiprime'] and not report.verdicts['local']
    assert report.max_count == 2
    assert report.jacobson == '6'
    assert report.decomposition is not None
