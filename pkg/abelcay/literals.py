#!/usr/bin/python
# -*- coding: utf-8 -*-
import re

from .errors import LiteralParseError, InvalidSpecError
from .group import GroupSpec, canonical_map

_FACTOR = re.compile(r'^\s*[Zz]_?\{?(\d+)\}?\s*$')
_TUPLE = re.compile(r'\(([^()]*)\)')


def parse_group_spec(text):
    """ Parse 'Z12', 'Z2xZ6' or 'Z6xZ2' into the product as written.

        'Z1' denotes the trivial group. Factors may also be separated by '×' or '*'.
    """
    parts = re.split(r'[xX×*]', text.strip())
    factors = []
    for part in parts:
        match = _FACTOR.match(part)
        if match is None:
            raise LiteralParseError(f'Invalid group literal {text!r}.')
        n = int(match.group(1))
        if n == 1 and len(parts) == 1:
            return GroupSpec()
        factors.append(n)
    try:
        return GroupSpec(factors)
    except InvalidSpecError as err:
        raise LiteralParseError(f'Invalid group literal {text!r}: {err}')


def parse_group(text):
    """ Returns the canonical group together with the map from written coordinates. """
    cmap = canonical_map(parse_group_spec(text))
    return cmap.group, cmap


def _ints(body, text):
    try:
        return tuple(int(x) for x in body.split(',') if x.strip())
    except ValueError:
        raise LiteralParseError(f'Invalid element literal {text!r}.')


def parse_elements(text):
    """ Parse element literals: '(1,0),(-1,1)', '(1,0) (1,5)' or '1,3' for rank one.

        Coordinates are returned unreduced, in the written coordinates of the group.
    """
    text = text.strip()
    if not text:
        raise LiteralParseError('Empty element literal.')
    if '(' in text:
        rest = _TUPLE.sub('', text)
        if rest.replace(',', '').strip():
            raise LiteralParseError(f'Invalid element literal {text!r}.')
        return [_ints(body, text) for body in _TUPLE.findall(text)]
    return [(x,) for x in _ints(text, text)]


def parse_element(cmap, text):
    """ Parse a single element literal and map it into canonical coordinates. """
    elements = parse_elements(text)
    if len(elements) != 1:
        raise LiteralParseError(f'Expected a single element, got {text!r}.')
    return map_element(cmap, elements[0], text)


def map_element(cmap, coords, text=None):
    if len(coords) != len(cmap.spec):
        raise LiteralParseError(f'Element {text or coords!r} does not match the group {cmap.spec}.')
    return cmap(coords)
