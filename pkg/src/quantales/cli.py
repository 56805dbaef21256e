"""Command line front end.

Subcommands:
  analyze     print the full structure report for one instance file
  verify      run the law suite over a corpus and report PASS or REFUTED
  enumerate   list all instances up to a size bound, one per isomorphism class
  export-dot  write a Graphviz view of an instance to stdout

Exit codes: 0 success, 1 a law was refuted, 2 usage or input errors.
"""

import argparse
import sys
from pathlib import Path

from . import io, suite
from .lattices import LatticeError
from .properties import PropertyReport
from .quantale import QuantaleError, TrivialQuantale, jacobson_radical
from .reticulation import reticulate


def _load_instance(path):
    text = Path(path).read_text(encoding='utf-8')
    return io.parse_instance(text)


def _labels(q, indices):
    return ', '.join(str(q.label(i)) for i in indices)


def _analyze_lines(name, q):
    lines = ['instance: %s (%d elements)' % (name, len(q))]
    lines.append('elements: %s' % ', '.join(map(str, q.elements)))
    covers = ['%s < %s' % (q.label(a), q.label(b)) for a, b in q.lattice.poset.covers]
    lines.append('covers: %s' % ('; '.join(covers) if covers else '(none)'))
    lines.append('zero: %s  unit: %s' % (q.label(q.bottom), q.label(q.top)))
    lines.append('m-primes: %s' % (_labels(q, q.spectrum) or '(none)'))
    lines.append('maximal: %s' % (_labels(q, q.maximal_elements) or '(none)'))
    radicals = ['rho(%s) = %s' % (q.label(a), q.label(q.radical_of(a)))
                for a in range(len(q)) if q.radical_of(a) != a]
    lines.append('radical: %s' % ('; '.join(radicals) if radicals
                                  else 'every element is radical'))
    lines.append('center: %s' % _labels(q, q.center))
    try:
        lines.append('jacobson radical: %s' % q.label(jacobson_radical(q)))
    except TrivialQuantale:
        pass
    ret = reticulate(q)
    classes = []
    for c in range(len(ret)):
        members = [q.label(a) for a in range(len(q)) if ret.lam[a] == c]
        classes.append('[%s]' % ' '.join(map(str, members)))
    lines.append('quotient classes: %s' % ' '.join(classes))
    report = PropertyReport.analyze(q)
    if report.trivial:
        lines.append('properties: trivial one-point instance')
        return lines
    order = ('semiprime', 'local', 'semilocal', 'lp', 'normal', 'b_normal',
             'hyperarchimedean', 'property_star')
    shown = {'lp': 'lifting', 'b_normal': 'b-normal', 'property_star': 'splitting'}
    lines.append('properties: ' + ' '.join(
        '%s=%s' % (shown.get(k, k), report.verdicts[k]) for k in order))
    for name_, witness in sorted(report.witnesses.items()):
        lines.append('witness (%s): %r' % (shown.get(name_, name_), witness))
    if report.decomposition is not None:
        dec = report.decomposition
        lines.append('local factorization: idempotents %s, factor sizes %s' % (
            ', '.join(str(q.label(e)) for e in dec.idempotents),
            ', '.join(str(len(f)) for f in dec.factors)))
    else:
        lines.append('local factorization: none')
    return lines


def _cmd_analyze(args):
    q = _load_instance(args.instance)
    print('\n'.join(_analyze_lines(Path(args.instance).stem, q)))
    return 0


def _corpus_from_target(target):
    if target == 'fixtures':
        return suite.fixtures()
    path = Path(target)
    if path.is_dir():
        files = sorted(path.glob('*.json'))
        if not files:
            raise io.InstanceError('no .json instance files in %s' % path)
        members = [suite.CorpusMember(f.stem, io.parse_instance(f.read_text(encoding='utf-8')))
                   for f in files]
        return suite.Corpus(members)
    if path.is_file():
        return suite.Corpus([suite.CorpusMember(path.stem, _load_instance(path))])
    raise io.InstanceError('no such corpus: %r (expected "fixtures", a file or a directory)'
                           % target)


def _cmd_verify(args):
    corpus = _corpus_from_target(args.corpus)
    if args.enumerate_up_to:
        corpus = corpus.extended(suite.enumerated(args.enumerate_up_to))
    checks = args.theorems or None
    try:
        report = suite.run_suite(corpus, checks)
    except ValueError as exc:
        print('error: %s' % exc, file=sys.stderr)
        return 2
    sys.stdout.write(report.to_text(include_timings=not args.no_timings))
    return 0 if report.ok() else 1


def _cmd_enumerate(args):
    try:
        quantales = suite.enumerate_quantales(args.max_size)
    except suite.BoundExceeded as exc:
        print('error: %s' % exc, file=sys.stderr)
        return 2
    count = {}
    for q in quantales:
        n = len(q)
        count[n] = count.get(n, 0) + 1
        name = 'E%d.%d' % (n, count[n])
        if args.emit_dir:
            out = Path(args.emit_dir)
            out.mkdir(parents=True, exist_ok=True)
            (out / ('%s.json' % name)).write_text(io.emit_instance(q), encoding='utf-8')
        report = PropertyReport.analyze(q)
        lifting = '-' if report.trivial else str(report.verdicts['lp'])
        print('%-6s size %d  maximal %d  center %d  lifting %s' % (
            name, n, len(q.maximal_elements), len(q.center), lifting))
    print('total: %d' % len(quantales))
    return 0


def _cmd_export_dot(args):
    q = _load_instance(args.instance)
    sys.stdout.write(io.export_dot(q, view=args.view))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog='quantales',
        description='Workbench for finite quantales, their spectra and quotients.')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('analyze', help='report the structure of one instance file')
    p.add_argument('instance', help='path to an instance .json file')
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser('verify', help='run the law suite over a corpus')
    p.add_argument('corpus', help='"fixtures", an instance file or a directory of them')
    p.add_argument('--theorems', nargs='+', metavar='CHECK',
                   help='run only these named checks (default: all)')
    p.add_argument('--enumerate-up-to', type=int, metavar='N',
                   help='also include every instance with at most N elements')
    p.add_argument('--no-timings', action='store_true',
                   help='omit the timing block for reproducible output')
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser('enumerate', help='list all instances up to a size bound')
    p.add_argument('--max-size', type=int, required=True, metavar='N')
    p.add_argument('--emit-dir', metavar='DIR',
                   help='also write each instance as DIR/<name>.json')
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser('export-dot', help='write a Graphviz view to stdout')
    p.add_argument('instance', help='path to an instance .json file')
    p.add_argument('--view', choices=('lattice', 'spec', 'reticulation'),
                   default='lattice')
    p.set_defaults(fn=_cmd_export_dot)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except FileNotFoundError as exc:
        print('error: %s' % exc, file=sys.stderr)
        return 2
    except (io.InstanceError, QuantaleError, LatticeError) as exc:
        print('error: %s' % exc, file=sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(main())
