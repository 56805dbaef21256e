'Finite posets, bounded distributive lattices, ideals, quotients, and normality checks.'

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np


class LatticeError(Exception):
    'Base for order-structure validation failures.'


class NotAPoset(LatticeError):
    'The relation is not reflexive, antisymmetric, and transitive.'


class NotALattice(LatticeError):
    'Some pair of elements lacks a least upper bound or a greatest lower bound.'


class NotAnIdeal(LatticeError):
    'The member set is not a join-closed down-set containing bottom.'


@dataclass(frozen=True)
class Verdict:
    'Boolean decision; a negative one carries a witness for diagnosis.'

    holds: bool
    witness: object = None

    def __bool__(self):
        return self.holds


class FinitePoset:
    'Finite partial order over an indexed tuple of unique labels.'

    def __init__(self, elements, leq):
        self.elements = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise NotAPoset('element labels are not unique')
        n = len(self.elements)
        leq = np.array(leq, dtype=bool)
        if leq.shape != (n, n):
            raise NotAPoset('relation shape %r does not match %d elements' % (leq.shape, n))
        for i in range(n):
            if not leq[i, i]:
                raise NotAPoset('not reflexive at %r' % (self.elements[i],))
        for i in range(n):
            for j in range(i + 1, n):
                if leq[i, j] and leq[j, i]:
                    raise NotAPoset(
                        'not antisymmetric: %r and %r' % (self.elements[i], self.elements[j]))
        two_step = (leq.astype(np.uint8) @ leq.astype(np.uint8)) > 0
        gap = two_step & ~leq
        if gap.any():
            i, j = (int(v[0]) for v in np.nonzero(gap))
            raise NotAPoset(
                'not transitive: missing %r <= %r' % (self.elements[i], self.elements[j]))
        leq.setflags(write=False)
        self.leq = leq

    def __len__(self):
        return len(self.elements)

    @cached_property
    def index(self):
        return {label: i for i, label in enumerate(self.elements)}

    @cached_property
    def covers(self):
        'Hasse diagram edges as pairs (lower, upper) of indices.'
        n = len(self)
        leq = self.leq
        out = []
        for i in range(n):
            for j in range(n):
                if i == j or not leq[i, j]:
                    continue
                between = any(
                    leq[i, k] and leq[k, j] for k in range(n) if k != i and k != j)
                if not between:
                    out.append((i, j))
        return tuple(out)


class FiniteLattice:
    'Finite bounded lattice with precomputed join and meet tables.'

    def __init__(self, poset):
        self.poset = poset
        n = len(poset)
        leq = poset.leq
        join = np.empty((n, n), dtype=np.intp)
        meet = np.empty((n, n), dtype=np.intp)
        for i in range(n):
            for j in range(i, n):
                join[i, j] = join[j, i] = self._unique_bound(i, j, upper=True)
                meet[i, j] = meet[j, i] = self._unique_bound(i, j, upper=False)
        join.setflags(write=False)
        meet.setflags(write=False)
        self.join_table = join
        self.meet_table = meet
        bottoms = [k for k in range(n) if leq[k].all()]
        tops = [k for k in range(n) if leq[:, k].all()]
        # pairwise joins and meets force unique global bounds on a finite carrier
        assert len(bottoms) == 1 and len(tops) == 1
        self.bottom = bottoms[0]
        self.top = tops[0]

    def _unique_bound(self, i, j, upper):
        leq = self.poset.leq
        if upper:
            bounds = np.nonzero(leq[i] & leq[j])[0]
            extremal = [k for k in bounds if all(leq[k, m] for m in bounds)]
            kind = 'join'
        else:
            bounds = np.nonzero(leq[:, i] & leq[:, j])[0]
            extremal = [k for k in bounds if all(leq[m, k] for m in bounds)]
            kind = 'meet'
        if len(extremal) != 1:
            raise NotALattice('no %s for %r and %r' % (
                kind, self.poset.elements[i], self.poset.elements[j]))
        return int(extremal[0])

    @property
    def elements(self):
        return self.poset.elements

    def __len__(self):
        return len(self.poset)

    def label(self, i):
        return self.poset.elements[i]

    def leq(self, i, j):
        return bool(self.poset.leq[i, j])

    def join(self, i, j):
        return int(self.join_table[i, j])

    def meet(self, i, j):
        return int(self.meet_table[i, j])

    def join_all(self, items):
        'Join of an iterable of indices; empty join is bottom.'
        out = self.bottom
        for i in items:
            out = self.join(out, i)
        return out

    def meet_all(self, items):
        'Meet of an iterable of indices; empty meet is top.'
        out = self.top
        for i in items:
            out = self.meet(out, i)
        return out

    def down_set(self, i):
        return frozenset(int(k) for k in np.nonzero(self.poset.leq[:, i])[0])

    def up_set(self, i):
        return frozenset(int(k) for k in np.nonzero(self.poset.leq[i])[0])


def build_lattice(elements, leq_pairs):
    'Lattice from order pairs on labels; the relation is closed reflexively and transitively.'
    elements = tuple(elements)
    index = {}
    for i, label in enumerate(elements):
        if label in index:
            raise NotAPoset('element labels are not unique')
        index[label] = i
    n = len(elements)
    rel = np.eye(n, dtype=bool)
    for a, b in leq_pairs:
        if a not in index or b not in index:
            raise NotAPoset('order pair (%r, %r) uses undeclared elements' % (a, b))
        rel[index[a], index[b]] = True
    for k in range(n):
        rel |= np.outer(rel[:, k], rel[k])
    return FiniteLattice(FinitePoset(elements, rel))


def is_distributive(lat):
    'Distributive law over all triples; the witness is the first failing (x, y, z).'
    n = len(lat)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                lhs = lat.meet(x, lat.join(y, z))
                rhs = lat.join(lat.meet(x, y), lat.meet(x, z))
                if lhs != rhs:
                    return Verdict(False, (lat.label(x), lat.label(y), lat.label(z)))
    return Verdict(True)


class DistLattice(FiniteLattice):
    'Bounded distributive lattice; construction verifies the distributive law.'

    def __init__(self, poset):
        super().__init__(poset)
        check = is_distributive(self)
        if not check:
            raise NotALattice('not distributive, witness %r' % (check.witness,))

    @classmethod
    def from_lattice(cls, lat):
        return cls(lat.poset)


class LatticeIdeal:
    'Join-closed down-set containing bottom; principal in any finite lattice.'

    def __init__(self, lattice, members):
        members = frozenset(int(m) for m in members)
        if lattice.bottom not in members:
            raise NotAnIdeal('ideal must contain bottom')
        for x in members:
            for k in range(len(lattice)):
                if lattice.leq(k, x) and k not in members:
                    raise NotAnIdeal('not downward closed at %r' % (lattice.label(k),))
            for y in members:
                if lattice.join(x, y) not in members:
                    raise NotAnIdeal('not join-closed at %r, %r' % (
                        lattice.label(x), lattice.label(y)))
        self.lattice = lattice
        self.members = members

    @cached_property
    def generator(self):
        'Largest member; the ideal is exactly its down-set.'
        return self.lattice.join_all(self.members)

    def is_proper(self):
        return self.generator != self.lattice.top

    def labels(self):
        return tuple(self.lattice.label(i) for i in sorted(self.members))

    def __contains__(self, i):
        return i in self.members

    def __len__(self):
        return len(self.members)

    def __eq__(self, other):
        if not isinstance(other, LatticeIdeal):
            return NotImplemented
        return self.lattice is other.lattice and self.members == other.members

    def __hash__(self):
        return hash((id(self.lattice), self.members))

    def __repr__(self):
        return 'LatticeIdeal(%s)' % (', '.join(repr(l) for l in self.labels()),)


class LatticeMorphism:
    'Map between bounded lattices preserving join, meet, bottom, and top.'

    def __init__(self, source, target, mapping):
        mapping = tuple(int(m) for m in mapping)
        if len(mapping) != len(source):
            raise LatticeError('mapping length does not match source carrier')
        for x in range(len(source)):
            for y in range(x, len(source)):
                if mapping[source.join(x, y)] != target.join(mapping[x], mapping[y]):
                    raise LatticeError('join not preserved at %r, %r' % (
                        source.label(x), source.label(y)))
                if mapping[source.meet(x, y)] != target.meet(mapping[x], mapping[y]):
                    raise LatticeError('meet not preserved at %r, %r' % (
                        source.label(x), source.label(y)))
        if mapping[source.bottom] != target.bottom or mapping[source.top] != target.top:
            raise LatticeError('bounds not preserved')
        self.source = source
        self.target = target
        self.mapping = mapping

    def __call__(self, i):
        return self.mapping[i]

    @cached_property
    def image(self):
        return frozenset(self.mapping)

    def is_surjective(self):
        return len(self.image) == len(self.target)

    def is_injective(self):
        return len(set(self.mapping)) == len(self.source)

    def compose(self, inner):
        'The composite mapping first through inner, then through this morphism.'
        return LatticeMorphism(
            inner.source, self.target, tuple(self.mapping[m] for m in inner.mapping))

    def boolean_image(self):
        'Images of the complemented source elements.'
        return frozenset(self.mapping[e] for e in lattice_boolean_center(self.source))

    def boolean_is_surjective(self):
        'Whether every complemented target element lifts; witness is the stranded element.'
        image = self.boolean_image()
        for e in lattice_boolean_center(self.target):
            if e not in image:
                return Verdict(False, self.target.label(e))
        return Verdict(True)


def all_ideals(lat):
    'Every ideal, one per element since finite ideals are principal down-sets.'
    return [LatticeIdeal(lat, lat.down_set(x)) for x in range(len(lat))]


def principal_ideal(lat, x):
    return LatticeIdeal(lat, lat.down_set(x))


def prime_ideals(lat):
    'Proper ideals whose generator is meet-prime.'
    out = []
    n = len(lat)
    for p in range(n):
        if p == lat.top:
            continue
        prime = all(
            lat.leq(x, p) or lat.leq(y, p)
            for x in range(n) for y in range(n)
            if lat.leq(lat.meet(x, y), p))
        if prime:
            out.append(principal_ideal(lat, p))
    return out


def maximal_ideals(lat):
    'Maximal proper ideals; their generators are the coatoms of the carrier.'
    out = []
    n = len(lat)
    for m in range(n):
        if m == lat.top:
            continue
        if all(x == lat.top or x == m for x in range(n) if lat.leq(m, x)):
            out.append(principal_ideal(lat, m))
    return out


def quotient_by_ideal(lat, ideal):
    'Quotient by the congruence a ~ b iff a v e = b v e for some ideal member e.'
    if ideal.lattice is not lat:
        raise NotAnIdeal('ideal belongs to a different lattice')
    g = ideal.generator
    # joining with the generator dominates joining with any member, so classes
    # are the fibers of x |-> x v g and the quotient is the upper interval [g, 1]
    reps = [x for x in range(len(lat)) if lat.leq(g, x)]
    sub = lat.poset.leq[np.ix_(reps, reps)]
    quotient = DistLattice(FinitePoset([lat.label(x) for x in reps], sub))
    to_class = {x: qi for qi, x in enumerate(reps)}
    mapping = tuple(to_class[lat.join(x, g)] for x in range(len(lat)))
    return quotient, LatticeMorphism(lat, quotient, mapping)


def complement_of(lat, x):
    'Index of the lattice complement of x, or None.'
    for y in range(len(lat)):
        if lat.join(x, y) == lat.top and lat.meet(x, y) == lat.bottom:
            return y
    return None


def lattice_boolean_center(lat):
    'Indices of the complemented elements, ascending.'
    return tuple(x for x in range(len(lat)) if complement_of(lat, x) is not None)


def has_id_blp(lat):
    'Whether complemented elements lift along every ideal quotient.'
    for ideal in all_ideals(lat):
        quotient, p = quotient_by_ideal(lat, ideal)
        lifted = p.boolean_is_surjective()
        if not lifted:
            return Verdict(False, (ideal, lifted.witness))
    return Verdict(True)


def _separating_pair(lat, a, b, pool):
    for c in pool:
        if lat.join(a, c) != lat.top:
            continue
        for d in pool:
            if lat.join(b, d) == lat.top and lat.meet(c, d) == lat.bottom:
                return c, d
    return None


def lattice_is_normal(lat):
    'Every cover a v b = 1 splits by c, d with a v c = b v d = 1 and c ^ d = 0.'
    pool = range(len(lat))
    for a in range(len(lat)):
        for b in range(len(lat)):
            if lat.join(a, b) != lat.top:
                continue
            if _separating_pair(lat, a, b, pool) is None:
                return Verdict(False, (lat.label(a), lat.label(b)))
    return Verdict(True)


def lattice_is_b_normal(lat):
    'Normality with the separating pair drawn from the complemented elements.'
    pool = lattice_boolean_center(lat)
    for a in range(len(lat)):
        for b in range(len(lat)):
            if lat.join(a, b) != lat.top:
                continue
            if _separating_pair(lat, a, b, pool) is None:
                return Verdict(False, (lat.label(a), lat.label(b)))
    return Verdict(True)


def lattice_is_id_local(lat):
    'Exactly one maximal ideal.'
    return len(maximal_ideals(lat)) == 1


def find_lattice_isomorphism(source, target):
    'Order isomorphism as an index mapping, or None; backtracking on degree profiles.'
    if len(source) != len(target):
        return None
    n = len(source)

    def profile(lat, x):
        return (len(lat.down_set(x)), len(lat.up_set(x)))

    src_prof = [profile(source, x) for x in range(n)]
    tgt_prof = [profile(target, x) for x in range(n)]
    if sorted(src_prof) != sorted(tgt_prof):
        return None
    assignment = [-1] * n
    used = [False] * n

    def extend(x):
        if x == n:
            return True
        for y in range(n):
            if used[y] or src_prof[x] != tgt_prof[y]:
                continue
            ok = all(
                source.leq(x, z) == target.leq(y, assignment[z])
                and source.leq(z, x) == target.leq(assignment[z], y)
                for z in range(x))
            if ok:
                assignment[x] = y
                used[y] = True
                if extend(x + 1):
                    return True
                used[y] = False
                assignment[x] = -1
        return False

    if extend(0):
        return tuple(assignment)
    return None
