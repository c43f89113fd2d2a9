#!/usr/bin/python
# -*- coding: utf-8 -*-
import dataclasses
import json
import h5py as h5
from numpy.testing import assert_, assert_raises, assert_equal

from abelcay.extremal import search_m_star, search_m_cyclic, ExtremalRecord
from abelcay.errors import CertificationFailure


class TestExtremalRecord:
    def test_json(self):
        record = search_m_star(4, 2)
        obj = json.loads(json.dumps(record.to_json()))
        assert_equal(list(obj), ['d', 'k', 'value', 'witness_group', 'witness_set',
                                 'witness_diameter', 'exhaustive_up_to', 'scope'])
        assert_equal(obj['witness_group'], 'Z2xZ6')
        assert_(ExtremalRecord.from_json(obj) == record)

    def test_json_tampered(self):
        obj = search_m_cyclic(4, 2).to_json()
        obj['witness_set'] = [[1], [2]]
        assert_raises(CertificationFailure, ExtremalRecord.from_json, obj)

    def test_verify(self):
        record = search_m_cyclic(4, 2)
        assert_equal(record.verify(), 4)
        wrong = dataclasses.replace(record, witness_diameter=3)
        assert_raises(CertificationFailure, wrong.verify)
        tighter = dataclasses.replace(record, d=3)
        assert_raises(CertificationFailure, tighter.verify)

    def test_refuted_at(self):
        record = search_m_cyclic(4, 2)
        assert_(record.refuted_at(12) > 0)
        assert_equal(record.refuted_at(11), 0)
        assert_equal(record.refuted_at(100), 0)

    def test_hdf5(self, tmp_path):
        record = search_m_star(4, 2)
        fname = str(tmp_path / 'abelcay_record_test.h5')

        hdf5_file = h5.File(fname, 'w')
        record.writeHDF5(hdf5_file)
        hdf5_file.close()

        hdf5_file = h5.File(fname, 'r')
        copy = ExtremalRecord.from_hdf5(hdf5_file)
        hdf5_file.close()

        assert_(copy == record)
        assert_equal(copy.refutations, record.refutations)
        assert_equal(copy.verify(), record.witness_diameter)
