'Reticulation of a finite quantale: radical classes, star maps, and transport isomorphisms.'

from __future__ import annotations

from functools import cache, cached_property

import numpy as np

from quantales.lattices import (
    DistLattice,
    FinitePoset,
    LatticeIdeal,
    LatticeMorphism,
    NotAnIdeal,
    lattice_boolean_center,
    prime_ideals,
    maximal_ideals,
    principal_ideal,
    quotient_by_ideal,
)
from quantales.quantale import (
    NotUnital,
    QuantaleError,
    RadicalFrame,
    interval_quantale,
    radical_frame,
)


class AxiomViolation(QuantaleError):
    'A reticulation invariant failed during construction; indicates a bug.'


class NotAReticulation(QuantaleError):
    'A candidate lattice-with-surjection fails a reticulation axiom.'

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class Reticulation:
    'Quotient of the carrier by equal radicals, carrying join and multiplication classwise.'

    def __init__(self, source):
        self.source = source
        n = len(source)
        by_radical = {}
        for c in range(n):
            by_radical.setdefault(source.radical_of(c), []).append(c)
        # canonical class order: ascending minimum-index representative
        groups = sorted(by_radical.items(), key=lambda kv: kv[1][0])
        self.classes = tuple(tuple(members) for _, members in groups)
        self.representatives = tuple(members[0] for _, members in groups)
        radicals = [rad for rad, _ in groups]
        lam = [0] * n
        for ci, (_, members) in enumerate(groups):
            for c in members:
                lam[c] = ci
        self.lam = tuple(lam)
        m = len(groups)
        leq = np.zeros((m, m), dtype=bool)
        for i in range(m):
            for j in range(m):
                leq[i, j] = source.leq(radicals[i], radicals[j])
        labels = [source.label(rep) for rep in self.representatives]
        self.lattice = DistLattice(FinitePoset(labels, leq))
        self._verify()

    def __len__(self):
        return len(self.classes)

    def class_of(self, c):
        return self.lam[c]

    def _verify(self):
        source, lam, lattice = self.source, self.lam, self.lattice
        n = len(source)
        if set(lam) != set(range(len(self.classes))):
            raise AxiomViolation('class map is not surjective')
        for a in range(n):
            for b in range(n):
                joined = lam[source.join(a, b)]
                if joined != lattice.join(lam[a], lam[b]):
                    raise AxiomViolation(
                        'join not classwise at %r, %r' % (source.label(a), source.label(b)))
                times = lam[source.mul(a, b)]
                if times != lattice.meet(lam[a], lam[b]):
                    raise AxiomViolation(
                        'product does not meet classwise at %r, %r' % (
                            source.label(a), source.label(b)))
                below = lattice.leq(lam[a], lam[b])
                eventually = source.leq(source.stable_power(a), b)
                if below != eventually:
                    raise AxiomViolation(
                        'power criterion fails at %r, %r' % (source.label(a), source.label(b)))
        if lam[source.bottom] != lattice.bottom or lam[source.top] != lattice.top:
            raise AxiomViolation('bounds not preserved by the class map')


@cache
def reticulate(q):
    'The reticulation of a quantale; cached per quantale object.'
    return Reticulation(q)


class StarMaps:
    'The mutually adjoint maps between quantale elements and reticulation ideals.'

    def __init__(self, reticulation):
        self.reticulation = reticulation

    def star(self, a):
        'Ideal of all classes of elements below a.'
        r = self.reticulation
        members = {r.lam[c] for c in range(len(r.source)) if r.source.leq(c, a)}
        return LatticeIdeal(r.lattice, members)

    def unstar(self, ideal):
        'Join of all elements whose class lies in the ideal.'
        r = self.reticulation
        if ideal.lattice is not r.lattice:
            raise NotAnIdeal('ideal does not live in this reticulation lattice')
        return r.source.join_all(
            c for c in range(len(r.source)) if r.lam[c] in ideal.members)


def star(q, a):
    'Ideal {class(c) : c <= a} in the reticulation lattice.'
    return StarMaps(reticulate(q)).star(a)


def unstar(q, ideal):
    'Join of the elements whose class belongs to the ideal.'
    return StarMaps(reticulate(q)).unstar(ideal)


def frame_iso(q):
    'The inverse frame isomorphisms between radical elements and reticulation ideals.'
    r = reticulate(q)
    frame = radical_frame(q)
    maps = StarMaps(r)
    phi = {a: maps.star(a) for a in frame.carrier}
    psi = {ideal: maps.unstar(ideal) for ideal in
           (principal_ideal(r.lattice, x) for x in range(len(r.lattice)))}
    if len(set(phi.values())) != len(phi) or set(psi) != set(phi.values()):
        raise QuantaleError('star map is not a bijection onto the ideals')
    for a, ideal in phi.items():
        if psi[ideal] != a:
            raise QuantaleError('star and unstar are not mutually inverse at %r' % (
                q.label(a),))
    for a in frame.carrier:
        for b in frame.carrier:
            ra, rb = frame.to_frame[a], frame.to_frame[b]
            join_dot = frame.carrier[frame.lattice.join(ra, rb)]
            if phi[join_dot].members != {
                    r.lattice.join(i, j) for i in phi[a].members for j in phi[b].members}:
                raise QuantaleError('star does not preserve frame joins')
            if phi[frame.carrier[frame.lattice.meet(ra, rb)]].members != (
                    phi[a].members & phi[b].members):
                raise QuantaleError('star does not preserve meets')
    for ideal in psi:
        for a in frame.carrier:
            # adjunction: unstar(I) <= a iff I contained in star(a)
            if q.leq(psi[ideal], a) != (ideal.members <= phi[a].members):
                raise QuantaleError('adjunction fails at %r' % (q.label(a),))
    return phi, psi


def spectrum_homeomorphism(q):
    'Inverse bijections between the quantale spectrum and the prime reticulation ideals.'
    r = reticulate(q)
    maps = StarMaps(r)
    primes = prime_ideals(r.lattice)
    u = {p: maps.star(p) for p in q.spectrum}
    v = {ideal: maps.unstar(ideal) for ideal in primes}
    if set(u.values()) != set(primes) or len(set(u.values())) != len(u):
        raise QuantaleError('spectrum does not biject with prime ideals')
    for p, ideal in u.items():
        if v[ideal] != p:
            raise QuantaleError('spectrum maps are not mutually inverse at %r' % (
                q.label(p),))
    for a in range(len(q)):
        closed = {u[p] for p in q.spectrum if q.leq(a, p)}
        a_star = maps.star(a)
        closed_ideal = {P for P in primes if a_star.members <= P.members}
        if closed != closed_ideal:
            raise QuantaleError('closed-set correspondence fails at %r' % (q.label(a),))
    max_image = {u[m] for m in q.maximal_elements}
    if max_image != set(maximal_ideals(r.lattice)):
        raise QuantaleError('maximal elements do not biject with maximal ideals')
    return u, v


def mu(q):
    'Embedding of the reticulation into the radical frame: class(c) to radical(c).'
    r = reticulate(q)
    frame = radical_frame(q)
    mapping = tuple(
        frame.to_frame[q.radical_of(r.representatives[ci])] for ci in range(len(r)))
    morphism = LatticeMorphism(r.lattice, frame.lattice, mapping)
    if not morphism.is_injective():
        raise QuantaleError('reticulation embedding is not injective')
    if not morphism.is_surjective():
        # every radical element is the radical of itself, so finite carriers
        # force surjectivity
        raise QuantaleError('reticulation embedding is not surjective on a finite carrier')
    for c in range(len(q)):
        if frame.carrier[mapping[r.lam[c]]] != q.radical_of(c):
            raise QuantaleError('triangle radical = mu o class fails at %r' % (q.label(c),))
    return morphism


def lift_morphism(u):
    'The induced map on reticulations of a unital quantale morphism.'
    if not u.unital:
        raise NotUnital('reticulation lifting needs a unital morphism', ())
    ra = reticulate(u.source)
    rb = reticulate(u.target)
    mapping = [None] * len(ra)
    for ci, members in enumerate(ra.classes):
        images = {rb.lam[u(c)] for c in members}
        if len(images) != 1:
            raise QuantaleError('lifted map is not well defined on class %d' % (ci,))
        mapping[ci] = images.pop()
    lifted = LatticeMorphism(ra.lattice, rb.lattice, tuple(mapping))
    for c in range(len(u.source)):
        assert lifted(ra.lam[c]) == rb.lam[u(c)]
    return lifted


def interval_reticulation_iso(q, a):
    'Isomorphism between the reticulation of [a) and the reticulation quotient by star(a).'
    part, u_a = interval_quantale(q, a)
    r = reticulate(q)
    r_part = reticulate(part)
    a_star = star(q, a)
    quotient, p = quotient_by_ideal(r.lattice, a_star)
    lifted = lift_morphism(u_a)
    kernel_classes = {x for x in range(len(r.lattice))
                      if lifted(x) == r_part.lattice.bottom}
    if kernel_classes != a_star.members:
        raise QuantaleError('kernel of the lifted interval map is not star(a)')
    # factor the lifted map through the quotient: classes of the quotient are
    # fibers of join-with-class(a), so any section through p determines it
    mapping = [None] * len(quotient)
    for x in range(len(r.lattice)):
        qx = p(x)
        lx = lifted(x)
        if mapping[qx] is None:
            mapping[qx] = lx
        elif mapping[qx] != lx:
            raise QuantaleError('lifted map does not factor through the quotient')
    iso = LatticeMorphism(quotient, r_part.lattice, tuple(mapping))
    if not (iso.is_injective() and iso.is_surjective()):
        raise QuantaleError('interval reticulation comparison is not bijective')
    return iso


def boolean_isos(q):
    'The three center bijections: onto B(L(A)), onto B(R(A)), and between them.'
    r = reticulate(q)
    frame = radical_frame(q)
    center = q.center
    center_l = lattice_boolean_center(r.lattice)
    center_r = lattice_boolean_center(frame.lattice)
    b_lambda = {e: r.lam[e] for e in center}
    b_rho = {e: frame.to_frame[q.radical_of(e)] for e in center}
    embedding = mu(q)
    b_mu = {x: embedding(x) for x in center_l}
    _check_center_bijection(b_lambda, center, center_l, 'reticulation')
    _check_center_bijection(b_rho, center, center_r, 'radical frame')
    _check_center_bijection(b_mu, center_l, center_r, 'embedding')
    for e in center:
        if b_mu[b_lambda[e]] != b_rho[e]:
            raise QuantaleError('center triangle does not commute at %r' % (q.label(e),))
    return b_lambda, b_rho, b_mu


def _check_center_bijection(mapping, source_center, target_center, name):
    if set(mapping) != set(source_center):
        raise QuantaleError('center map on %s has the wrong domain' % (name,))
    if sorted(mapping.values()) != sorted(target_center):
        raise QuantaleError('center map on %s is not onto the target center' % (name,))
    if len(set(mapping.values())) != len(mapping):
        raise QuantaleError('center map on %s is not injective' % (name,))


def check_unicity(reticulation, lattice, lam):
    'Isomorphism onto a candidate reticulation, after checking its axioms.'
    q = reticulation.source
    lam = tuple(int(x) for x in lam)
    n = len(q)
    if len(lam) != n:
        raise NotAReticulation('candidate map length does not match the carrier')
    if set(lam) != set(range(len(lattice))):
        raise NotAReticulation('candidate map is not surjective')
    for a in range(n):
        for b in range(n):
            if not lattice.leq(lam[q.join(a, b)], lattice.join(lam[a], lam[b])):
                raise NotAReticulation(
                    'candidate breaks the join axiom', (q.label(a), q.label(b)))
            if lam[q.mul(a, b)] != lattice.meet(lam[a], lam[b]):
                raise NotAReticulation(
                    'candidate breaks the product axiom', (q.label(a), q.label(b)))
            if lattice.leq(lam[a], lam[b]) != q.leq(q.stable_power(a), b):
                raise NotAReticulation(
                    'candidate breaks the power axiom', (q.label(a), q.label(b)))
    mapping = [None] * len(reticulation)
    for ci, members in enumerate(reticulation.classes):
        images = {lam[c] for c in members}
        if len(images) != 1:
            raise NotAReticulation(
                'candidate classes do not refine radical classes', (ci,))
        mapping[ci] = images.pop()
    iso = LatticeMorphism(reticulation.lattice, lattice, tuple(mapping))
    if not (iso.is_injective() and iso.is_surjective()):
        raise NotAReticulation('comparison map is not bijective')
    for c in range(n):
        assert iso(reticulation.lam[c]) == lam[c]
    return iso
