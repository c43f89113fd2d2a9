#!/usr/bin/python
# -*- coding: utf-8 -*-
""" Exceptions raised by abelcay. """


class AbelcayError(Exception):
    """ Base class of every error raised by the package. """


class InvalidSpecError(AbelcayError, ValueError):
    pass


class InvalidElementError(AbelcayError, ValueError):
    pass


class InvalidOrderError(AbelcayError, ValueError):
    pass


class InvalidInputError(AbelcayError, ValueError):
    pass


class LiteralParseError(AbelcayError, ValueError):
    pass


class OutOfDomainError(AbelcayError, ValueError):
    pass


class NotStronglyConnectedError(AbelcayError, ValueError):
    """ The connection set does not generate the group. """


class UndefinedAverageError(AbelcayError, ValueError):
    pass


class NoCertificateError(AbelcayError, ValueError):
    pass


class NoValidSetError(AbelcayError, ValueError):
    pass


class NoGapExpectedError(AbelcayError, ValueError):
    pass


class SearchError(AbelcayError, RuntimeError):
    pass


class CertificationFailure(AbelcayError, RuntimeError):
    """ An exhaustive search disagrees with a closed form. Never corrected silently. """
