"""Lifting, normality, and splitting an instance into local factors.

Run:  python3 demos/04_lifting_and_decomposition.py
"""

from quantales import (
    PropertyReport, generate, has_lp, is_local, local_decomposition, product)

d12 = generate('zn:12')
w5 = generate('downsets:z<x,z<y')
c3 = generate('chain:3,frame')

for name, q in (('zn:12', d12), ('downsets', w5), ('chain:3', c3)):
    report = PropertyReport.analyze(q)
    up = {k: ('yes' if v else 'no') for k, v in report.verdicts.items()}
    print('%-9s lifting=%s normal=%s hyperarchimedean=%s local=%s'
          % (name, up['lp'], up['normal'], up['hyperarchimedean'], up['local']))

# zn:12 has two maximal elements and lifts its radical, so it factors into
# two local pieces cut out by central idempotents
recipe = local_decomposition(d12)
print('idempotent anchors:', [d12.label(e) for e in recipe.idempotents])
print('factor sizes:', sorted(len(f) for f in recipe.factors))
assert all(is_local(f) for f in recipe.factors)

# the downsets instance cannot factor: its radical has no lifting anchor
failed = local_decomposition(w5)
assert not failed
print('downsets refuses to factor:', failed.witness[0], failed.witness[1])

# lifting transfers through finite products in both directions
for factors in ((c3, c3), (w5, c3)):
    prod, _ = product(factors)
    expect = all(bool(has_lp(f)) for f in factors)
    assert bool(has_lp(prod)) == expect
    print('product of %d factors lifts: %s' % (len(factors), expect))
