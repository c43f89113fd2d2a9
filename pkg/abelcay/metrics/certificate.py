#!/usr/bin/python
# -*- coding: utf-8 -*-
from dataclasses import dataclass
import numpy as np

from ..errors import InvalidInputError, InvalidElementError, NoCertificateError
from ..group import GroupElement
from .bfs import levels, _checked


@dataclass(frozen=True)
class DistanceCertificate:
    """ Coefficients c_i with Σ c_i a_i = target (mod m_j in every coordinate)
        and Σ c_i equal to the distance of the target.
    """
    coeffs: tuple

    @property
    def distance(self):
        return sum(self.coeffs)

    def evaluate(self, g, A):
        """ Σ c_i a_i computed coordinate-wise modulo the invariant factors. """
        A = _checked(g, A)
        total = np.zeros(g.rank, dtype=np.int64)
        for c, a in zip(self.coeffs, A.elements):
            total += c * np.asarray(a, dtype=np.int64)
        return g.element(total)

    def verify(self, g, A, target):
        return self.evaluate(g, A) == g.check(target)


class Certifier:
    """ Lexicographically smallest minimal-length coefficient vectors for Cay(g, A).

        Coefficients are fixed greedily from a_1 onwards: c_i is the least value for
        which the remainder is still reachable by a_{i+1}, ..., a_k in exactly the
        remaining number of steps. The suffix distance arrays are shared by all targets.
    """
    def __init__(self, g, A):
        self.group = g
        self.gens = _checked(g, A)
        # suffix[i] holds distances using only a_i, ..., a_k
        self.suffix = [levels(g, self.gens.indices[i:]) for i in range(self.gens.k)]
        self.moduli = np.asarray(g.moduli, dtype=np.int64)
        self.strides = g.strides
        self.gen_coords = [g.coords[i] for i in self.gens.indices]

    def _certify_index(self, t):
        rem = int(self.suffix[0][t])
        if rem < 0:
            raise NoCertificateError(f'{self.group.element_at(t)} is not reachable from the '
                                     f'identity with {self.gens}.')
        cur = self.group.coords[t]
        coeffs = []
        for i, a in enumerate(self.gen_coords[:-1]):
            nxt = self.suffix[i + 1]
            for c in range(rem + 1):
                y = (cur - c * a) % self.moduli
                if nxt[int(y @ self.strides)] == rem - c:
                    break
            else:
                raise AssertionError('Greedy certificate step failed; distance arrays inconsistent!')
            coeffs.append(c)
            cur = y
            rem -= c
        coeffs.append(rem)
        return DistanceCertificate(tuple(coeffs))

    def __call__(self, target):
        g = self.group
        try:
            target = g.check(target) if isinstance(target, GroupElement) else g.element(target)
        except InvalidElementError as err:
            raise InvalidInputError(str(err))
        t = g.index_of(target)
        cert = self._certify_index(t)
        assert cert.verify(g, self.gens, target), 'Certificate does not evaluate to the target!'
        assert cert.distance == int(self.suffix[0][t]), 'Certificate length differs from the distance!'
        return cert

    def certify_all(self):
        """ Certificates of every reachable element, keyed by element. """
        g = self.group
        return {g.element_at(t): self._certify_index(t) for t in np.flatnonzero(self.suffix[0] >= 0)}


def certify_distance(g, A, target):
    return Certifier(g, A)(target)


def certify_all(g, A):
    return Certifier(g, A).certify_all()
