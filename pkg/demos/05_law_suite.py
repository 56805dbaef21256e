"""Running the law suite over the fixture corpus and small enumerations.

Every registered law is checked on every corpus member.  A law either
passes, gets refuted with a replayable witness document, is recorded as
corpus-dependent, or does not apply to the member at hand.

Run:  python3 demos/05_law_suite.py
"""

from quantales import enumerate_quantales, enumerated, fixtures, run_suite
from quantales import suite

corpus = fixtures()
report = run_suite(corpus)
counts = report.counts()
print('fixture corpus: %d members, %d laws, %d result rows'
      % (len(report.members), len(report.checks), len(report.results)))
print('statuses:', ', '.join('%d %s' % (counts[k], k) for k in sorted(counts)))
assert report.ok()

# the one corpus-dependent fact is recorded per member rather than judged
recorded = [r for r in report.results if r.status == 'RECORDED']
holds = sorted(r.member for r in recorded if r.detail.startswith('holds'))
fails = sorted(r.member for r in recorded if r.detail.startswith('fails'))
print('m-primes inside maximals holds on %s' % ', '.join(holds))
print('                          fails on %s' % ', '.join(fails))

# a narrowed run checks just the named laws
narrow = run_suite(corpus, checks=('radical-laws', 'radical-power-oracle'))
print('narrow run rows:', len(narrow.results))

# exhaustive small instances: every quantale on at most 5 points
sizes = {n: len(enumerate_quantales(n)) - len(enumerate_quantales(n - 1))
         for n in range(1, 6)}
print('quantale counts by size:', sizes)
assert sizes == {1: 1, 2: 1, 3: 2, 4: 7, 5: 26}

small = run_suite(enumerated(5))
assert small.ok()
print('enumerated corpus: %d members all green, %d rows'
      % (len(small.members), len(small.results)))
print('registered laws: %d' % len(suite.CHECKS))
