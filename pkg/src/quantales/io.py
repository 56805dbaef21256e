"""Instance documents, named generators and Graphviz export.

An instance document is a JSON object describing a finite quantale by
labels: the element list, an order relation that is closed reflexively
and transitively on load, and a multiplication given as label triples
``[x, y, xy]``.  Products with the unit (the top element) may be
omitted, and only one of ``[x, y, z]`` / ``[y, x, z]`` is required.
"""

import json
import re
from itertools import combinations
from math import gcd

from .lattices import LatticeError, build_lattice
from .quantale import AxiomError, Quantale, product
from .reticulation import reticulate

FORMAT = 'quantale-instance/1'


class InstanceError(Exception):
    pass


class ParseError(InstanceError):
    'Structurally broken document.  location points at the offending field.'

    def __init__(self, message, location=None):
        super().__init__(message if location is None else '%s: %s' % (location, message))
        self.location = location


class ValidationError(InstanceError):
    'Well-formed document that does not describe a quantale.'

    def __init__(self, message, axiom, witness=None):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


class UnknownGenerator(InstanceError):
    pass


class InvalidParameter(InstanceError):
    pass


def _string_list(doc, key):
    value = doc.get(key)
    if not isinstance(value, list):
        raise ParseError('expected a list', key)
    for i, item in enumerate(value):
        if not isinstance(item, str):
            raise ParseError('expected a string', '%s[%d]' % (key, i))
    return value


def parse_instance(text):
    """Quantale described by a JSON document (or by its generator field).

    Raises ParseError for malformed documents, ValidationError when the
    described structure breaks an axiom, and the generator errors when a
    generator-only document names something unknown.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, 'line %d column %d' % (exc.lineno, exc.colno)) from None
    return instance_from_dict(doc)


def instance_from_dict(doc):
    if not isinstance(doc, dict):
        raise ParseError('top level must be an object', '$')
    fmt = doc.get('format')
    if fmt is not None and fmt != FORMAT:
        raise ParseError('unsupported format %r, expected %r' % (fmt, FORMAT), 'format')
    if 'elements' not in doc:
        if 'generator' in doc:
            if not isinstance(doc['generator'], str):
                raise ParseError('expected a string', 'generator')
            return generate(doc['generator'])
        raise ParseError('need either elements or a generator', '$')

    elements = _string_list(doc, 'elements')
    if not elements:
        raise ParseError('at least one element is required', 'elements')
    if len(set(elements)) != len(elements):
        raise ParseError('element labels are not unique', 'elements')
    index = {label: i for i, label in enumerate(elements)}

    pairs = doc.get('leq', [])
    if not isinstance(pairs, list):
        raise ParseError('expected a list', 'leq')
    for k, pair in enumerate(pairs):
        where = 'leq[%d]' % k
        if not (isinstance(pair, list) and len(pair) == 2):
            raise ParseError('expected a pair [lower, upper]', where)
        for label in pair:
            if not isinstance(label, str) or label not in index:
                raise ParseError('unknown element %r' % (label,), where)
    try:
        lattice = build_lattice(elements, [tuple(p) for p in pairs])
    except LatticeError as exc:
        raise ValidationError(str(exc), type(exc).__name__) from None

    triples = doc.get('mul', [])
    if not isinstance(triples, list):
        raise ParseError('expected a list', 'mul')
    table = {}
    for k, triple in enumerate(triples):
        where = 'mul[%d]' % k
        if not (isinstance(triple, list) and len(triple) == 3):
            raise ParseError('expected a triple [x, y, xy]', where)
        for label in triple:
            if not isinstance(label, str) or label not in index:
                raise ParseError('unknown element %r' % (label,), where)
        x, y, z = (index[label] for label in triple)
        if table.get((x, y), z) != z:
            raise ParseError('conflicting products for (%r, %r)' % (triple[0], triple[1]), where)
        table[(x, y)] = z

    # fill the mirror of each listed pair, then the unit row, and demand the rest
    for (x, y), z in list(table.items()):
        table.setdefault((y, x), z)
    top = lattice.top
    for x in range(len(elements)):
        table.setdefault((x, top), x)
        table.setdefault((top, x), x)
    mul = [[0] * len(elements) for _ in range(len(elements))]
    for x in range(len(elements)):
        for y in range(len(elements)):
            if (x, y) not in table:
                raise ParseError(
                    'missing product for (%r, %r)' % (elements[x], elements[y]), 'mul')
            mul[x][y] = table[(x, y)]
    try:
        return Quantale(lattice, mul)
    except AxiomError as exc:
        raise ValidationError(str(exc), type(exc).__name__, exc.witness) from None


def emit_instance(q, generator=None):
    'Canonical document for a quantale; parse_instance inverts it exactly.'
    lab = q.label
    top = q.top
    doc = {
        'format': FORMAT,
        'elements': list(q.elements),
        'leq': [[lab(a), lab(b)] for a, b in q.lattice.poset.covers],
        'mul': [[lab(i), lab(j), lab(q.mul(i, j))]
                for i in range(len(q)) for j in range(i, len(q))
                if i != top and j != top],
    }
    if generator is not None:
        doc['generator'] = generator
    return json.dumps(doc, indent=2) + '\n'


_NAME = re.compile(r'[A-Za-z_][A-Za-z0-9_]*\Z')


def _positive_int(text, what):
    if not text.isdigit() or int(text) < 1:
        raise InvalidParameter('%s must be a positive integer, got %r' % (what, text))
    return int(text)


def _generate_zn(arg):
    n = _positive_int(arg, 'modulus')
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    labels = [str(d) for d in divisors]
    # order is reverse divisibility: the ideal for d grows as d shrinks
    pairs = [(str(a), str(b)) for a in divisors for b in divisors if a % b == 0]
    lattice = build_lattice(labels, pairs)
    pos = {d: i for i, d in enumerate(divisors)}
    mul = [[pos[gcd(a * b, n)] for b in divisors] for a in divisors]
    return Quantale(lattice, mul)


def _generate_chain(arg):
    head, _, variant = arg.partition(',')
    k = _positive_int(head, 'chain length')
    if variant != 'frame':
        raise InvalidParameter('unknown chain variant %r, expected "frame"' % (variant,))
    labels = [str(i) for i in range(k)]
    lattice = build_lattice(labels, [(str(i), str(i + 1)) for i in range(k - 1)])
    mul = [[min(i, j) for j in range(k)] for i in range(k)]
    return Quantale(lattice, mul)


def _set_label(names):
    return '{%s}' % ','.join(sorted(names))


def _frame_of_sets(sets):
    'Frame on a family of sets closed under union and intersection.'
    sets = sorted(sets, key=lambda s: (len(s), _set_label(s)))
    labels = [_set_label(s) for s in sets]
    pairs = [(labels[i], labels[j]) for i in range(len(sets)) for j in range(len(sets))
             if sets[i] <= sets[j]]
    lattice = build_lattice(labels, pairs)
    pos = {frozenset(s): i for i, s in enumerate(sets)}
    mul = [[pos[frozenset(a & b)] for b in sets] for a in sets]
    return Quantale(lattice, mul)


def _generate_boolean(arg):
    k = _positive_int(arg, 'atom count')
    if k > 10:
        raise InvalidParameter('atom count %d is too large, the bound is 10' % (k,))
    atoms = [chr(ord('a') + i) for i in range(k)]
    subsets = [frozenset(c) for r in range(k + 1) for c in combinations(atoms, r)]
    return _frame_of_sets(subsets)


def _generate_downsets(arg):
    below = {}
    for item in arg.split(','):
        item = item.strip()
        if not item:
            raise InvalidParameter('empty relation item')
        parts = item.split('<')
        for name in parts:
            if not _NAME.match(name):
                raise InvalidParameter('bad element name %r' % (name,))
            below.setdefault(name, set())
        for lower, upper in zip(parts, parts[1:]):
            below[upper].add(lower)
    names = sorted(below)
    if len(names) > 12:
        raise InvalidParameter('%d points is too large, the bound is 12' % (len(names),))
    for name in names:
        # transitive closure; a point reachable from itself means a cycle
        stack = list(below[name])
        seen = set()
        while stack:
            point = stack.pop()
            if point == name:
                raise InvalidParameter('relations contain a cycle through %r' % (name,))
            if point not in seen:
                seen.add(point)
                stack.extend(below[point])
        below[name] = seen
    downsets = [frozenset(s) for r in range(len(names) + 1)
                for c in combinations(names, r)
                for s in [set(c)] if all(below[n] <= s for n in s)]
    return _frame_of_sets(downsets)


def _generate_product(arg):
    parts = arg.split(';')
    if len(parts) < 2:
        raise InvalidParameter('a product needs at least two factors')
    for part in parts:
        if part.startswith('product:'):
            raise InvalidParameter('nested products are not supported')
    return product([generate(part) for part in parts])[0]


_GENERATORS = {
    'zn': _generate_zn,
    'chain': _generate_chain,
    'boolean': _generate_boolean,
    'downsets': _generate_downsets,
    'product': _generate_product,
}


def generate(spec):
    """Quantale from a generator expression.

    zn:n            ideals of the ring of integers mod n
    chain:k,frame   k-element chain with meet multiplication
    boolean:k       powerset of k atoms with meet multiplication
    downsets:a<b,.. down-sets of the poset presented by the relations
    product:g1;g2   componentwise product of generated factors
    """
    head, sep, rest = spec.partition(':')
    if not sep:
        raise UnknownGenerator('generator %r has no parameters' % (spec,))
    maker = _GENERATORS.get(head)
    if maker is None:
        raise UnknownGenerator('unknown generator %r, expected one of %s'
                               % (head, ', '.join(sorted(_GENERATORS))))
    return maker(rest)


def _dot_quote(text):
    return '"%s"' % text.replace('\\', '\\\\').replace('"', '\\"')


def _dot_graph(names, edges, shapes=None):
    lines = ['digraph {', '  rankdir=BT;', '  node [shape=box];']
    for i, name in enumerate(names):
        extra = shapes.get(i, '') if shapes else ''
        lines.append('  n%d [label=%s%s];' % (i, _dot_quote(name), extra))
    for a, b in edges:
        lines.append('  n%d -> n%d;' % (a, b))
    lines.append('}')
    return '\n'.join(lines) + '\n'


def export_dot(q, view='lattice'):
    'Hasse diagram of the carrier, the spectrum or the reticulation.'
    if view == 'lattice':
        return _dot_graph([q.label(i) for i in range(len(q))], q.lattice.poset.covers)
    if view == 'spec':
        spec = list(q.spectrum)
        maxima = set(q.maximal_elements)
        edges = []
        for si, p in enumerate(spec):
            for sj, r in enumerate(spec):
                if p == r or not q.leq(p, r):
                    continue
                if not any(q.leq(p, t) and q.leq(t, r) for t in spec if t not in (p, r)):
                    edges.append((si, sj))
        shapes = {si: ', peripheries=2' for si, p in enumerate(spec) if p in maxima}
        return _dot_graph([q.label(p) for p in spec], edges, shapes)
    if view == 'reticulation':
        ret = reticulate(q)
        names = ['%s' % ','.join(q.label(m) for m in cls) for cls in ret.classes]
        return _dot_graph(names, ret.lattice.poset.covers)
    raise InvalidParameter('unknown view %r, expected lattice, spec or reticulation' % (view,))
