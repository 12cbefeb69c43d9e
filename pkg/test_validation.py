#!/usr/bin/env python3
"""
Parameter validation and file IO tests for the command helpers.
"""

import os
import shutil
import tempfile
import unittest

import numpy as np

from commands.handler_utils import RunManifest, crc_payload_length, parse_crc_option
from errors import CrcError, EncodingError
from utils import (
    check_output_path, parse_ebn0_list, read_bits_file, read_llr_file, validate_code_parameters,
    write_bits_file, write_llr_file,
)


class TestCodeParameters(unittest.TestCase):

    def test_block_and_group_parameters(self):
        print("\n🔍 Testing code parameter validation")
        cases = [
            (dict(N=1024, K=528), True, 'Desk code'),
            (dict(N=2, K=1), True, 'Smallest block'),
            (dict(N=None, K=4), False, 'Missing N'),
            (dict(N=12, K=4), False, 'N not a power of two'),
            (dict(N=1, K=1), False, 'N below 2'),
            (dict(N=16, K=0), False, 'K below 1'),
            (dict(N=16, K=17), False, 'K above N'),
            (dict(N=16, K=8, m=4), True, 'Group width divides N'),
            (dict(N=16, K=8, m=6), False, 'Group width not a power of two'),
            (dict(N=16, K=8, m=32), False, 'Group width above N'),
            (dict(N=16, K=8, good_fraction=0.75), True, 'Good fraction in range'),
            (dict(N=16, K=8, good_fraction=1.2), False, 'Good fraction above 1'),
            (dict(N=16, K=8, list_size=0), False, 'List size 0'),
        ]
        for kwargs, should_pass, description in cases:
            is_valid, message = validate_code_parameters(**kwargs)
            self.assertEqual(is_valid, should_pass, description)
            if should_pass:
                self.assertIsNone(message)
            else:
                self.assertTrue(message, description)
            print(f"✅ {description}")

    def test_ebn0_lists(self):
        self.assertEqual(parse_ebn0_list('1,1.5, 2'), [1.0, 1.5, 2.0])
        self.assertEqual(parse_ebn0_list('-1'), [-1.0])
        for text in ('', ' , ', '1,abc'):
            with self.assertRaises(ValueError, msg=text):
                parse_ebn0_list(text)

    def test_crc_option(self):
        self.assertIsNone(parse_crc_option(None))
        self.assertIsNone(parse_crc_option('none'))
        self.assertIsNone(parse_crc_option('OFF'))
        spec = parse_crc_option('8:0x07:0x00')
        self.assertEqual((spec.width, spec.polynomial, spec.initial), (8, 0x07, 0x00))
        self.assertEqual(crc_payload_length(32, spec), 24)
        self.assertEqual(crc_payload_length(32, None), 32)
        with self.assertRaises(CrcError):
            parse_crc_option('eight')


class TestFileHelpers(unittest.TestCase):

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def _write(self, name, text):
        path = os.path.join(self.temp_dir, name)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
        return path

    def test_bit_files(self):
        print("\n🔍 Testing bit file IO")
        bits = np.random.default_rng(3).integers(0, 2, size=150, dtype=np.uint8)
        path = write_bits_file(os.path.join(self.temp_dir, 'sub', 'bits.txt'), bits)
        with open(path, 'rb') as f:
            raw = f.read()
        self.assertNotIn(b'\r', raw)
        self.assertEqual([len(line) for line in raw.decode().splitlines()], [64, 64, 22])
        np.testing.assert_array_equal(read_bits_file(path, 150), bits)

        commented = self._write('c.txt', "# payload\n0101 1100  # tail\n11\n")
        np.testing.assert_array_equal(read_bits_file(commented), [0, 1, 0, 1, 1, 1, 0, 0, 1, 1])
        print("✅ Bit file IO passed")

    def test_bad_bit_files(self):
        with self.assertRaises(EncodingError):
            read_bits_file(os.path.join(self.temp_dir, 'missing.txt'))
        with self.assertRaises(EncodingError):
            read_bits_file(self._write('two.txt', '0120'))
        with self.assertRaises(EncodingError):
            read_bits_file(self._write('short.txt', '0101'), expected_length=8)

    def test_llr_files(self):
        llrs = np.array([1.5, -2.25, 1e-12, -7.0])
        path = write_llr_file(os.path.join(self.temp_dir, 'llr.txt'), llrs)
        np.testing.assert_array_equal(read_llr_file(path, 4), llrs)
        mixed = self._write('mixed.txt', "1.0, -2.0\n# noise\n3e-1 4\n")
        np.testing.assert_allclose(read_llr_file(mixed), [1.0, -2.0, 0.3, 4.0])
        with self.assertRaises(EncodingError):
            read_llr_file(self._write('word.txt', '1.0 two'))
        with self.assertRaises(EncodingError):
            read_llr_file(mixed, expected_length=3)

    def test_output_paths(self):
        self.assertEqual(check_output_path(os.path.join(self.temp_dir, 'new', 'out.csv')), (True, None))
        is_valid, message = check_output_path(self.temp_dir)
        self.assertFalse(is_valid)
        self.assertIn('directory', message)
        blocker = self._write('blocker', 'x')
        is_valid, _ = check_output_path(os.path.join(blocker, 'out.csv'))
        self.assertFalse(is_valid)

    def test_manifest_paths(self):
        manifest = RunManifest('decode', {}, input_paths=[os.path.join(self.temp_dir, 'none.txt')])
        self.assertIn('Input file not found', manifest.validate_paths())
        manifest = RunManifest('decode', {}, output_paths=[os.path.join(self.temp_dir, 'out.txt')])
        self.assertIsNone(manifest.validate_paths())
        self.assertEqual(manifest.to_dict()['subcommand'], 'decode')


if __name__ == "__main__":
    unittest.main(verbosity=2)
