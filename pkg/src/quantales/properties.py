'Lifting, normality, hyperarchimedean, and decomposition properties of finite quantales.'

from __future__ import annotations

from dataclasses import dataclass, field

from quantales.lattices import Verdict, lattice_boolean_center
from quantales.quantale import (
    IntervalQuantale,
    QuantaleError,
    QuantaleMorphism,
    TrivialQuantale,
    decompose_by_elements,
    interval_quantale,
    jacobson_radical,
    radical_frame,
)
from quantales.reticulation import reticulate


def element_has_lp(q, a):
    'Whether every complemented element of [a) is x v a for complemented x.'
    _, u = interval_quantale(q, a)
    return u.boolean_is_surjective()


def has_lp(q):
    'Lifting property for every anchor; witness is the first failing anchor.'
    for a in range(len(q)):
        lifted = element_has_lp(q, a)
        if not lifted:
            return Verdict(False, (q.label(a), lifted.witness))
    return Verdict(True)


def _separating_pair(q, a, b, pool):
    for e in pool:
        if q.join(a, e) != q.top:
            continue
        for f in pool:
            if q.join(b, f) == q.top and q.mul(e, f) == q.bottom:
                return e, f
    return None


def is_normal(q):
    'Every cover a v b = 1 splits by e, f with a v e = b v f = 1 and e*f = 0.'
    pool = range(len(q))
    for a in range(len(q)):
        for b in range(len(q)):
            if q.join(a, b) != q.top:
                continue
            if _separating_pair(q, a, b, pool) is None:
                return Verdict(False, (q.label(a), q.label(b)))
    return Verdict(True)


def is_b_normal(q):
    'Normality with the separating pair drawn from the Boolean center.'
    pool = q.center
    for a in range(len(q)):
        for b in range(len(q)):
            if q.join(a, b) != q.top:
                continue
            if _separating_pair(q, a, b, pool) is None:
                return Verdict(False, (q.label(a), q.label(b)))
    return Verdict(True)


def is_hyperarchimedean(q):
    'Some power of every element is complemented; witness is the first stuck element.'
    center = set(q.center)
    for c in range(len(q)):
        if q.stable_power(c) not in center:
            return Verdict(False, q.label(c))
    return Verdict(True)


def is_semiprime(q):
    'The radical of bottom is bottom.'
    return q.radical_of(q.bottom) == q.bottom


def hyperarchimedean_equivalents(q):
    'The four characterizations: powers, Boolean reticulation, Max = Spec, zero-dimensional frame.'
    r = reticulate(q)
    frame = radical_frame(q)
    by_powers = bool(is_hyperarchimedean(q))
    reticulation_boolean = (
        len(lattice_boolean_center(r.lattice)) == len(r.lattice))
    max_is_spec = q.maximal_elements == q.spectrum
    legs = {
        'powers_reach_center': by_powers,
        'reticulation_boolean': reticulation_boolean,
        'maximals_exhaust_spectrum': max_is_spec,
    }
    if is_semiprime(q):
        center = lattice_boolean_center(frame.lattice)
        # x is a join of complemented elements iff the complemented ones
        # below it already join to x
        legs['radical_frame_zero_dimensional'] = all(
            frame.lattice.join_all(
                e for e in center if frame.lattice.leq(e, x)) == x
            for x in range(len(frame.lattice)))
    else:
        legs['radical_frame_zero_dimensional'] = None
    return legs


def has_property_star(q):
    'Every element splits as c v e with c below the radical and e complemented.'
    if len(q) == 1:
        raise TrivialQuantale('one-point carrier')
    r = jacobson_radical(q)
    small = [c for c in range(len(q)) if q.leq(c, r)]
    center = q.center
    for a in range(len(q)):
        if not any(q.join(c, e) == a for c in small for e in center):
            return Verdict(False, q.label(a))
    return Verdict(True)


def is_local(q):
    'Exactly one maximal element.'
    return len(q.maximal_elements) == 1


def is_semilocal(q):
    'Finitely many maximal elements; a finite carrier always qualifies.'
    return True


@dataclass(frozen=True)
class Decomposition:
    'Product decomposition data: central idempotent anchors and local factors.'

    idempotents: tuple
    factors: tuple
    morphism: QuantaleMorphism


def local_decomposition(q):
    'Split into local interval factors along lifted central elements, or say why not.'
    if len(q) == 1:
        raise TrivialQuantale('one-point carrier')
    r = jacobson_radical(q)
    radical_lp = element_has_lp(q, r)
    if not radical_lp:
        return Verdict(False, ('radical-without-lp', q.label(r), radical_lp.witness))
    maxima = q.maximal_elements
    # the radical interval splits along the maximal elements: pairwise joins of
    # distinct maximals are top and their meet is the radical
    onto_product = decompose_by_elements(q, maxima)
    part = onto_product.source
    assert part.anchor == r
    target = onto_product.target
    back = {onto_product(x): x for x in range(len(part))}
    anchors = []
    for slot, m in enumerate(maxima):
        if len(maxima) == 1:
            f_parent = part.carrier[part.bottom]
        else:
            wanted = tuple(
                q.top if k != slot else m for k in range(len(maxima)))
            f_parent = part.carrier[back[target.index_of(
                '(%s)' % ','.join(str(q.label(i)) for i in wanted))]]
        lifted = next(
            (e for e in q.center if q.join(e, r) == f_parent), None)
        if lifted is None:
            return Verdict(False, ('unliftable-idempotent', q.label(f_parent)))
        anchors.append(lifted)
    if q.meet_all(anchors) != q.bottom:
        return Verdict(False, ('anchors-do-not-meet-to-bottom',
                               tuple(q.label(e) for e in anchors)))
    morphism = decompose_by_elements(q, anchors)
    factors = (morphism.target,) if len(anchors) == 1 else tuple(
        IntervalQuantale(q, e) for e in anchors)
    for factor in factors:
        if not is_local(factor):
            return Verdict(False, ('factor-not-local', factor.label(factor.bottom)))
    return Decomposition(tuple(anchors), factors, morphism)


@dataclass(frozen=True)
class PropertyReport:
    'Named verdicts with witnesses and, when available, the local decomposition.'

    verdicts: dict
    witnesses: dict
    decomposition: object = None
    trivial: bool = False
    max_count: int = 0
    jacobson: object = None

    @classmethod
    def analyze(cls, q):
        if len(q) == 1:
            return cls(verdicts={}, witnesses={}, trivial=True)
        named = {
            'lp': has_lp(q),
            'normal': is_normal(q),
            'b_normal': is_b_normal(q),
            'hyperarchimedean': is_hyperarchimedean(q),
            'property_star': has_property_star(q),
        }
        verdicts = {name: bool(v) for name, v in named.items()}
        verdicts['semiprime'] = is_semiprime(q)
        verdicts['local'] = is_local(q)
        verdicts['semilocal'] = is_semilocal(q)
        witnesses = {name: v.witness for name, v in named.items() if not v}
        decomposition = local_decomposition(q)
        if isinstance(decomposition, Verdict):
            witnesses['decomposition'] = decomposition.witness
            decomposition = None
        return cls(
            verdicts=verdicts,
            witnesses=witnesses,
            decomposition=decomposition,
            max_count=len(q.maximal_elements),
            jacobson=q.label(jacobson_radical(q)))
