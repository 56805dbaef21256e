"""Quotient layer: radical classes, star maps, frame and spectrum bridges."""

import numpy as np
import pytest

from quantales import io
from quantales.lattices import DistLattice, FinitePoset, all_ideals, prime_ideals
from quantales.quantale import radical_frame
from quantales.reticulation import (
    NotAReticulation, boolean_isos, check_unicity, frame_iso,
    interval_reticulation_iso, mu, reticulate, spectrum_homeomorphism,
    star, unstar)

ALL_NAMES = ['Q1', 'C2', 'C3', 'B4', 'W5', 'D12', 'DIV4', 'DIV8', 'DIV30',
             'DIV36', 'C3xC3', 'D12xC3']


def _members(corpus):
    return [corpus.get(name).quantale for name in ALL_NAMES]


def test_d12_classes_golden(d12):
    ret = reticulate(d12)
    classes = {}
    for a in range(len(d12)):
        classes.setdefault(ret.lam[a], set()).add(d12.label(a))
    assert sorted(classes.values(), key=sorted) == [
        {'1'}, {'12', '6'}, {'2', '4'}, {'3'}]


def test_class_map_turns_products_into_meets(corpus):
    for q in _members(corpus):
        ret = reticulate(q)
        lam, lat = ret.lam, ret.lattice
        for a in range(len(q)):
            for b in range(len(q)):
                assert lam[q.join(a, b)] == lat.join(lam[a], lam[b])
                assert lam[q.mul(a, b)] == lat.meet(lam[a], lam[b])
                # the order criterion: lam a <= lam b iff some power of a is below b
                assert lat.leq(lam[a], lam[b]) == q.leq(q.stable_power(a), b)


def test_unstar_of_star_is_the_radical(corpus):
    for q in _members(corpus):
        for a in range(len(q)):
            assert unstar(q, star(q, a)) == q.radical_of(a)
            assert q.leq(a, unstar(q, star(q, a)))


def test_star_is_a_bijection_on_ideals(corpus):
    for q in _members(corpus):
        ret = reticulate(q)
        for ideal in all_ideals(ret.lattice):
            assert star(q, unstar(q, ideal)).members == ideal.members


def test_star_matches_primes_both_ways(d12):
    primes = {ideal.members for ideal in prime_ideals(reticulate(d12).lattice)}
    images = {star(d12, p).members for p in d12.spectrum}
    assert images == primes


def test_frame_and_spectrum_isomorphisms_hold_everywhere(corpus):
    for q in _members(corpus):
        phi, psi = frame_iso(q)
        assert len(phi) == len(radical_frame(q).carrier)
        u, v = spectrum_homeomorphism(q)
        assert len(u) == len(q.spectrum)


def test_boolean_triangle(corpus):
    for q in _members(corpus):
        b_lambda, b_rho, b_mu = boolean_isos(q)
        assert len(b_lambda) == len(q.center)


def test_mu_is_a_lattice_isomorphism(corpus):
    for q in _members(corpus):
        bridge = mu(q)
        assert bridge.is_injective() and bridge.is_surjective()


def test_interval_reticulation_everywhere(corpus):
    for q in _members(corpus):
        for a in range(len(q)):
            interval_reticulation_iso(q, a)


def test_unicity_accepts_the_radical_frame_candidate(d12):
    ret = reticulate(d12)
    frame = radical_frame(d12)
    lam = tuple(frame.to_frame[d12.radical_of(a)] for a in range(len(d12)))
    iso = check_unicity(ret, frame.lattice, lam)
    assert iso.is_injective() and iso.is_surjective()


def test_unicity_accepts_a_relabeled_copy(d12):
    ret = reticulate(d12)
    m = len(ret)
    swap = tuple(m - 1 - i for i in range(m))
    rel = np.zeros((m, m), dtype=bool)
    for i in range(m):
        for j in range(m):
            rel[swap[i], swap[j]] = ret.lattice.leq(i, j)
    copy = DistLattice(FinitePoset(['k%d' % i for i in range(m)], rel))
    iso = check_unicity(ret, copy, tuple(swap[ret.lam[a]] for a in range(len(d12))))
    assert iso.is_surjective()


def test_unicity_rejects_wrong_candidates(d12):
    ret = reticulate(d12)
    # constant-to-top map is not surjective onto a two-point lattice's bottom
    two = DistLattice(FinitePoset(['u', 'v'], np.array([[1, 1], [0, 1]], bool)))
    with pytest.raises(NotAReticulation):
        check_unicity(ret, two, (1,) * len(d12))
    # a chain of the right size cannot satisfy the join axiom for D12
    m = len(ret)
    chain_rel = np.triu(np.ones((m, m), dtype=bool))
    chain = DistLattice(FinitePoset(['c%d' % i for i in range(m)], chain_rel))
    with pytest.raises(NotAReticulation):
        check_unicity(ret, chain, ret.lam)
