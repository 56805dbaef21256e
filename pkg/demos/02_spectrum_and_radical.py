"""Spectra, radicals, the radical frame, and interval quantales.

Run:  python3 demos/02_spectrum_and_radical.py
"""

from quantales import (
    generate, interval_quantale, jacobson_radical, kernel, radical_by_powers,
    radical_frame)

q = generate('zn:12')
labels = lambda items: [q.label(i) for i in items]

# m-prime elements play the role of prime ideals; maximal elements sit
# directly under the unit
print('m-primes:', labels(q.spectrum))
print('maximal: ', labels(q.maximal_elements))

# the radical of a is the meet of the m-primes above a; an independent
# characterization says c <= rho(a) iff some power of c drops below a
for a in range(len(q)):
    assert q.radical_of(a) == radical_by_powers(q, a)
print('radical table:', {q.label(a): q.label(q.radical_of(a)) for a in range(len(q))})
print('the two radical computations agree on every element')

# radical fixed points form a frame: join is radical-of-join, meet is meet,
# and multiplication collapses to meet
frame = radical_frame(q)
print('radical elements:', labels(frame.carrier))
rq = frame.as_quantale
assert all(rq.mul(i, j) == rq.meet(i, j) for i in range(len(rq)) for j in range(len(rq)))
print('on radical elements multiplication is meet')

# the meet of all maximal elements
print('jacobson radical:', q.label(jacobson_radical(q)))

# every upper interval [a) is itself a quantale with x *_a y = (x*y) v a;
# the inclusion-of-constants map u_a has kernel exactly a
ix = q.index_of
part, u = interval_quantale(q, ix('6'))
print('[6) carrier:', labels(part.carrier))
print('kernel of u_6:', q.label(kernel(u)))
two, three = part.to_interval[ix('2')], part.to_interval[ix('3')]
print('2 *_6 3 =', q.label(part.carrier[part.mul(two, three)]))
