#!/usr/bin/python
# -*- coding: utf-8 -*-
import functools
import numpy as np


class lazy_property:
    """ Computes the value once per instance and stores it in the instance dict.

        Cached numpy arrays are made read-only: the coordinate and order tables of a
        group are shared by every profile, search and certifier built on it.
    """
    def __init__(self, function):
        self.function = function
        self.name = function.__name__
        functools.update_wrapper(self, function)

    def __set_name__(self, owner, name):
        self.name = name

    def __get__(self, obj, owner=None):
        if obj is None:
            return self
        val = self.function(obj)
        if isinstance(val, np.ndarray):
            val.flags.writeable = False
        obj.__dict__[self.name] = val
        return val
