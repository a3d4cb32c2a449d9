#!/usr/bin/env python
# encoding: utf-8
"""
certio.py

JSON and CSV forms of certificates, reports, LP solutions and execution
records.  Every rational is written as its reduced text, '6/5' or '-3'.

Certificate JSON, keys in this order:

    {"params": {"k": 5, "m": 1},
     "u": "1",
     "base_delays": [{"from": [0], "to": [1], "delay": "0"}, ...],
     "shifts": [{"index": 0, "entries": [{"process": [0], "value": "0"}, ...]}, ...],
     "cycle": [{"a": [0], "b": [3]}, ...]}

For k = 2 the two directed edges between a pair of processes along one
dimension share their endpoints, so base delay entries there also carry
"dim" and "forward".
"""

import csv
import json
from fractions import Fraction

from pyshift.certificate import Certificate, PairCycle
from pyshift.delays import DelayAssignment, ShiftMatrix
from pyshift.rational import as_rational, as_uncertainty, fmt
from pyshift.toroid import DirectedEdge, ParameterError, Toroid


class SchemaError(ValueError):
    """A certificate, cycle or record file does not follow its schema."""


def _require(obj, key, kind=None, where='certificate'):
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaError('%s: missing key %r' % (where, key))
    value = obj[key]
    if kind is not None and (not isinstance(value, kind) or isinstance(value, bool)):
        raise SchemaError('%s: %r must be %s, got %r' % (where, key, kind.__name__, value))
    return value


def _rational(text, where):
    if not isinstance(text, str):
        raise SchemaError('%s: rationals are strings like "6/5", got %r' % (where, text))
    try:
        return as_rational(text)
    except (TypeError, ValueError) as err:
        raise SchemaError('%s: %s' % (where, err))


def _process(toroid, value, where):
    if not isinstance(value, list) or not all(isinstance(c, int) and not isinstance(c, bool)
                                              for c in value):
        raise SchemaError('%s: process ids are lists of integers, got %r' % (where, value))
    try:
        return toroid.check_process(value)
    except ParameterError as err:
        raise SchemaError('%s: %s' % (where, err))


def _plain(value):
    'Payloads and events as JSON values: rationals to text, tuples to lists.'
    if isinstance(value, Fraction):
        return fmt(value)
    if isinstance(value, DirectedEdge):
        return edge_to_dict(value)
    if isinstance(value, (tuple, list)):
        return [_plain(v) for v in value]
    return value


def edge_to_dict(edge):
    return {'from': list(edge.source), 'to': list(edge.target),
            'dim': edge.dim, 'forward': edge.forward}


def certificate_to_dict(cert):
    toroid = cert.toroid
    base = []
    for e, d in cert.base.items():
        entry = {'from': list(e.source), 'to': list(e.target), 'delay': fmt(d)}
        if toroid.k == 2:
            entry['dim'] = e.dim
            entry['forward'] = e.forward
        base.append(entry)
    shifts = [{'index': i,
               'entries': [{'process': list(p), 'value': fmt(v)} for p, v in x.items()]}
              for i, x in enumerate(cert.shifts)]
    cycle = [{'a': list(a), 'b': list(b)} for a, b in cert.cycle]
    return {'params': {'k': toroid.k, 'm': toroid.m},
            'u': fmt(cert.u),
            'base_delays': base,
            'shifts': shifts,
            'cycle': cycle}


def _edge(toroid, entry, where):
    source = _process(toroid, _require(entry, 'from', list, where), where)
    target = _process(toroid, _require(entry, 'to', list, where), where)
    if 'dim' in entry or 'forward' in entry:
        dim = _require(entry, 'dim', int, where)
        forward = _require(entry, 'forward', where=where)
        if not isinstance(forward, bool):
            raise SchemaError('%s: "forward" must be true or false' % where)
        try:
            return toroid.check_edge((source, target, dim, forward))
        except ParameterError as err:
            raise SchemaError('%s: %s' % (where, err))
    if toroid.k == 2:
        raise SchemaError('%s: k = 2 delay entries need "dim" and "forward"' % where)
    diff = [h for h in range(toroid.m) if source[h] != target[h]]
    if len(diff) != 1:
        raise SchemaError('%s: %r -> %r is not an edge' % (where, source, target))
    h = diff[0]
    forward = target[h] == (source[h] + 1) % toroid.k
    try:
        return toroid.check_edge((source, target, h, forward))
    except ParameterError as err:
        raise SchemaError('%s: %s' % (where, err))


def parse_cycle(toroid, items, where='cycle'):
    if not isinstance(items, list) or not items:
        raise SchemaError('%s: expected a nonempty list of {"a": [...], "b": [...]}' % where)
    pairs = []
    for n, item in enumerate(items):
        w = '%s[%d]' % (where, n)
        pairs.append((_process(toroid, _require(item, 'a', list, w), w),
                      _process(toroid, _require(item, 'b', list, w), w)))
    return PairCycle(pairs)


def certificate_from_dict(data):
    """
    Build a Certificate from its JSON form.  Raises SchemaError on anything
    malformed; the numbers themselves are left for check_certificate.
    """
    params = _require(data, 'params', dict)
    k = _require(params, 'k', int, 'params')
    m = _require(params, 'm', int, 'params')
    try:
        toroid = Toroid(k, m)
    except ParameterError as err:
        raise SchemaError('params: %s' % err)
    u = _rational(_require(data, 'u'), 'u')
    try:
        u = as_uncertainty(u)
    except ValueError as err:
        raise SchemaError('u: %s' % err)

    mapping = {}
    for n, entry in enumerate(_require(data, 'base_delays', list)):
        where = 'base_delays[%d]' % n
        e = _edge(toroid, entry, where)
        if e in mapping:
            raise SchemaError('%s: edge %r listed twice' % (where, e))
        mapping[e] = _rational(_require(entry, 'delay', where=where), where)
    try:
        base = DelayAssignment.from_mapping(toroid, u, mapping)
    except ParameterError as err:
        raise SchemaError('base_delays: %s' % err)

    shifts = {}
    for n, item in enumerate(_require(data, 'shifts', list)):
        where = 'shifts[%d]' % n
        index = _require(item, 'index', int, where)
        if index in shifts:
            raise SchemaError('%s: index %d listed twice' % (where, index))
        values = {}
        for j, entry in enumerate(_require(item, 'entries', list, where)):
            w = '%s.entries[%d]' % (where, j)
            p = _process(toroid, _require(entry, 'process', list, w), w)
            if p in values:
                raise SchemaError('%s: process %r listed twice' % (w, p))
            values[p] = _rational(_require(entry, 'value', where=w), w)
        if len(values) != toroid.nprocs:
            raise SchemaError('%s: %d entries for %d processes' % (where, len(values), toroid.nprocs))
        shifts[index] = ShiftMatrix(toroid, values)
    if sorted(shifts) != list(range(len(shifts))):
        raise SchemaError('shifts: indices must be 0 .. N-1, got %s' % sorted(shifts))

    cycle = parse_cycle(toroid, _require(data, 'cycle', list))
    return Certificate(toroid, u, base, [shifts[i] for i in range(len(shifts))], cycle)


def dump_certificate(cert, fp):
    json.dump(certificate_to_dict(cert), fp, indent=2)
    fp.write('\n')


def load_certificate(fp):
    try:
        data = json.load(fp)
    except ValueError as err:
        raise SchemaError('not JSON: %s' % err)
    return certificate_from_dict(data)


def load_cycle(fp, toroid):
    """
    Read a pair cycle, either a bare list of {"a": [...], "b": [...]} or an
    object with a "cycle" key (a certificate file works).
    """
    try:
        data = json.load(fp)
    except ValueError as err:
        raise SchemaError('not JSON: %s' % err)
    if isinstance(data, dict):
        data = _require(data, 'cycle', list, 'cycle file')
    return parse_cycle(toroid, data)


def report_to_dict(report):
    return {'ok': report.ok,
            'bound': None if report.bound is None else fmt(report.bound),
            'admissibility_ok': report.admissibility_ok,
            'cancellation_ok': report.cancellation_ok,
            'sign_convention': report.sign_convention,
            'per_execution': [{'index': i, 'a': list(a), 'b': list(b), 'contribution': fmt(c)}
                              for i, a, b, c in report.per_execution],
            'violations': [{'index': i,
                            'edges': [dict(edge_to_dict(e), delay=fmt(d)) for e, d in bad]}
                           for i, bad in sorted(report.violations.items())],
            'failures': list(report.failures)}


def solution_to_dict(solution):
    return {'status': solution.status,
            'objective_value': None if solution.objective_value is None
            else fmt(solution.objective_value),
            'pivots': solution.pivots,
            'assignment': [{'variable': name, 'value': fmt(v)}
                           for name, v in solution.assignment.items()]}


def record_to_dict(record, hc):
    processes = record.toroid.processes()
    return {'params': {'k': record.toroid.k, 'm': record.toroid.m},
            'hardware_clocks': [{'process': list(p), 'value': fmt(hc[p])} for p in processes],
            'adj': [{'process': list(p), 'value': fmt(record.adj[p])} for p in processes],
            'terminated': record.terminated,
            'histories': [{'process': list(p),
                           'events': [{'event': _plain(e.event), 'reading': fmt(e.reading),
                                       'time': fmt(e.time)} for e in record.histories[p]]}
                          for p in processes],
            'messages': [dict(edge_to_dict(msg.edge), send_time=fmt(msg.send_time),
                              receive_time=fmt(msg.receive_time), payload=_plain(msg.payload))
                         for msg in record.message_log],
            'ties': [{'process': list(p), 'reading': fmt(r)} for p, r in record.ties]}


def witness_to_dict(report):
    return {'algorithm': report.algorithm,
            'bound': fmt(report.bound),
            'max_skew': fmt(report.max_skew),
            'total': fmt(report.total),
            'holds': report.holds,
            'rows': [{'index': row.index, 'a': list(row.a), 'b': list(row.b),
                      'skew': fmt(row.skew), 'admissible': row.admissible,
                      'indistinguishable': row.indistinguishable}
                     for row in report.rows]}


def delays_to_dict(d):
    'The rows of write_delays_csv as a JSON list.'
    return [{'from': list(source), 'to': list(target), 'dim': dim, 'delay': fmt(delay)}
            for source, target, dim, delay in d.rows()]


def write_delays_csv(d, fp):
    'Rows from,to,dim,delay in canonical edge order, coordinates joined by ":".'
    writer = csv.writer(fp, lineterminator='\n')
    writer.writerow(['from', 'to', 'dim', 'delay'])
    for source, target, dim, delay in d.rows():
        writer.writerow([':'.join(str(c) for c in source), ':'.join(str(c) for c in target),
                         dim, fmt(delay)])


def dumps(data):
    return json.dumps(data, indent=2) + '\n'
