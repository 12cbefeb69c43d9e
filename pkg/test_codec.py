#!/usr/bin/env python3
"""
Codec Tests

Covers the polar transform against a dense GF(2) matrix oracle, reliability
construction, the CRC layer and the BPSK/AWGN channel.
"""

import os
import shutil
import tempfile
import unittest

import numpy as np

from codec.channel import (
    ChannelParams, bpsk_modulate, frame_generator, llr_from_received, noise_variance, transmit,
)
from codec.construction import (
    bhattacharyya_parameters, build_code, construct_reliability, good_bit_count, plan_code,
    read_reliability_file, write_reliability_file,
)
from codec.crc import (
    CrcSpec, DEFAULT_CRC, crc_attach, crc_check, crc_check_batch, crc_compute, parse_crc_flag,
)
from codec.polar_core import (
    PolarCodeSpec, bit_reversal_permutation, codebook, encode, extract_information, kronecker_butterfly,
    polar_transform,
)
from errors import ChannelError, CodeConstructionError, CrcError, EncodingError

RUN_SLOW_TESTS = os.getenv('RUN_SLOW_TESTS') == '1'


def dense_generator(N):
    """B_N F^{⊗n} built from np.kron and a string-reversal permutation matrix."""
    n = N.bit_length() - 1
    F = np.array([[1, 0], [1, 1]], dtype=np.int64)
    kron = np.ones((1, 1), dtype=np.int64)
    for _ in range(n):
        kron = np.kron(kron, F)
    B = np.zeros((N, N), dtype=np.int64)
    for i in range(N):
        j = int(format(i, f'0{n}b')[::-1], 2) if n else 0
        B[i, j] = 1
    return (B @ kron) % 2


class TestPolarTransform(unittest.TestCase):
    """Bit reversal, transform and encoder"""

    def test_bit_reversal_examples(self):
        print("\n🧪 Testing bit-reversal permutation...")
        np.testing.assert_array_equal(bit_reversal_permutation(1), [0, 1])
        np.testing.assert_array_equal(bit_reversal_permutation(2), [0, 2, 1, 3])
        self.assertEqual(int(bit_reversal_permutation(3)[3]), 6)
        for n in range(0, 8):
            perm = bit_reversal_permutation(n)
            np.testing.assert_array_equal(perm[perm], np.arange(1 << n))
        print("✅ Bit-reversal test passed")

    def test_transform_examples(self):
        print("\n🧪 Testing small transform examples...")
        np.testing.assert_array_equal(polar_transform([0, 1]), [1, 1])
        np.testing.assert_array_equal(polar_transform([0, 0, 0, 1]), [1, 1, 1, 1])
        np.testing.assert_array_equal(polar_transform(np.zeros(16, dtype=np.uint8)), np.zeros(16))
        print("✅ Transform examples passed")

    def test_transform_matches_dense_oracle(self):
        print("\n🧪 Testing transform against the dense matrix oracle...")
        rng = np.random.default_rng(1234)
        for N in (2, 4, 8, 16, 32):
            G = dense_generator(N)
            u = rng.integers(0, 2, size=(1000, N), dtype=np.uint8)
            expected = (u.astype(np.int64) @ G) % 2
            np.testing.assert_array_equal(polar_transform(u), expected)
        print("✅ Dense oracle test passed")

    def test_butterfly_is_self_inverse(self):
        rng = np.random.default_rng(5)
        v = rng.integers(0, 2, size=(50, 64), dtype=np.uint8)
        np.testing.assert_array_equal(kronecker_butterfly(kronecker_butterfly(v)), v)

    def test_transform_rejects_bad_length(self):
        with self.assertRaises(EncodingError):
            polar_transform([0, 1, 1])
        with self.assertRaises(EncodingError):
            polar_transform([])

    def test_encode_places_payload_at_info_indices(self):
        print("\n🧪 Testing encoder placement...")
        code = build_code(8, 4, method='bhattacharyya', design_param=0.5)
        np.testing.assert_array_equal(code.info_indices, [3, 5, 6, 7])
        G = dense_generator(8)
        np.testing.assert_array_equal(encode([1, 0, 0, 0], code), G[3])
        np.testing.assert_array_equal(encode([0, 0, 0, 0], code), np.zeros(8))

        payload = np.array([1, 1, 0, 1], dtype=np.uint8)
        expected = (payload.astype(np.int64) @ G[[3, 5, 6, 7]]) % 2
        np.testing.assert_array_equal(encode(payload, code), expected)
        print("✅ Encoder placement test passed")

    def test_encode_without_frozen_bits_is_transform(self):
        code = build_code(16, 16)
        u = np.random.default_rng(2).integers(0, 2, size=16, dtype=np.uint8)
        np.testing.assert_array_equal(encode(u, code), polar_transform(u))

    def test_encode_length_mismatch(self):
        code = build_code(8, 4)
        with self.assertRaises(EncodingError):
            encode([1, 0, 1], code)

    def test_extract_information_inverts_placement(self):
        code = build_code(32, 12, good_fraction=0.5)
        payload = np.random.default_rng(8).integers(0, 2, size=12, dtype=np.uint8)
        u = np.zeros(32, dtype=np.uint8)
        u[code.info_indices] = payload
        np.testing.assert_array_equal(extract_information(u, code), payload)

    def test_codebook_rows(self):
        code = build_code(8, 3)
        messages, codewords = codebook(code)
        self.assertEqual(messages.shape, (8, 3))
        np.testing.assert_array_equal(messages[5], [1, 0, 1])
        np.testing.assert_array_equal(codewords[5], encode([1, 0, 1], code))


class TestConstruction(unittest.TestCase):
    """Reliability profiles and code planning"""

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def test_bhattacharyya_recursion(self):
        print("\n🧪 Testing Bhattacharyya recursion...")
        np.testing.assert_allclose(bhattacharyya_parameters(2, 0.5), [0.75, 0.25])
        profile = construct_reliability('bhattacharyya', 8, 0.5)
        self.assertEqual(set(profile.order()[:4].tolist()), {7, 6, 5, 3})
        self.assertEqual(int(profile.order()[0]), 7)
        print("✅ Bhattacharyya test passed")

    def test_noiseless_ties_break_by_index(self):
        profile = construct_reliability('bhatta', 8, 0.0)
        np.testing.assert_array_equal(profile.order(), np.arange(8))

    def test_gaussian_approx_is_default_and_deterministic(self):
        a = construct_reliability('gaussian-approx', 256)
        b = construct_reliability('ga', 256, 2.0)
        self.assertEqual(a.design_param, 2.0)
        np.testing.assert_array_equal(a.scores, b.scores)
        # the all-plus channel is the most reliable, the all-minus the least
        self.assertEqual(int(a.order()[0]), 255)
        self.assertEqual(a.scores[0], a.scores.min())

    def test_gaussian_approx_plus_branch_doubles(self):
        means = construct_reliability('ga', 2, 0.0, code_rate=0.5).scores
        self.assertAlmostEqual(means[1], 4.0)
        self.assertLess(means[0], 2.0)

    def test_imported_roundtrip(self):
        print("\n🧪 Testing reliability file import...")
        profile = construct_reliability('ga', 64, 1.0)
        path = os.path.join(self.temp_dir, 'rel.txt')
        write_reliability_file(path, profile.order(), header="test ranking\nN=64")
        imported = construct_reliability('file', 64, path=path)
        np.testing.assert_array_equal(imported.order(), profile.order())
        print("✅ Reliability file import test passed")

    def test_imported_malformed(self):
        path = os.path.join(self.temp_dir, 'bad.txt')
        with open(path, 'w') as f:
            f.write("# header\n0\n1\n1\n3\n")
        with self.assertRaises(CodeConstructionError):
            read_reliability_file(path, 4)
        with open(path, 'w') as f:
            f.write("0\nx\n2\n3\n")
        with self.assertRaises(CodeConstructionError):
            read_reliability_file(path, 4)
        with self.assertRaises(CodeConstructionError):
            construct_reliability('file', 4)

    def test_unknown_method(self):
        with self.assertRaises(CodeConstructionError):
            construct_reliability('density-evolution', 8)

    def test_good_bit_counts(self):
        self.assertEqual(good_bit_count(1040, 0.75), 780)
        self.assertEqual(good_bit_count(1040, 0.80), 832)
        self.assertEqual(good_bit_count(528, 0.75), 396)
        self.assertEqual(good_bit_count(7, 0.5), 4)

    def test_plan_code_partition(self):
        print("\n🧪 Testing good/bad partition...")
        profile = construct_reliability('ga', 2048, 2.0)
        code = plan_code(profile, 2048, 1040, 0.75)
        self.assertEqual(code.good_count, 780)
        self.assertFalse(np.any(code.good_mask & code.frozen_mask))
        self.assertEqual(code.good_indices.size + code.bad_indices.size, 1040)
        order = profile.order()
        self.assertEqual(set(code.good_indices.tolist()), set(order[:780].tolist()))
        self.assertEqual(plan_code(profile, 2048, 1040, 0.0).good_count, 0)
        print("✅ Partition test passed")

    def test_plan_code_errors(self):
        profile = construct_reliability('ga', 16)
        with self.assertRaises(CodeConstructionError):
            plan_code(profile, 16, 17)
        with self.assertRaises(CodeConstructionError):
            plan_code(profile, 16, 8, 1.5)
        with self.assertRaises(CodeConstructionError):
            plan_code(profile, 32, 8)

    def test_spec_invariants_enforced(self):
        with self.assertRaises(CodeConstructionError):
            PolarCodeSpec(n=2, N=4, K=2, frozen_mask=[True, True, False, False],
                          reliability_order=[0, 1, 2, 3], good_mask=[False] * 4)


class TestCrc(unittest.TestCase):
    """CRC attach/check"""

    @staticmethod
    def ascii_bits(text):
        return np.unpackbits(np.frombuffer(text.encode('ascii'), dtype=np.uint8))

    def test_check_values(self):
        print("\n🧪 Testing CRC check values...")
        bits = self.ascii_bits("123456789")
        self.assertEqual(crc_compute(bits, DEFAULT_CRC), 0x29B1)
        self.assertEqual(crc_compute(bits, parse_crc_flag('8:0x07:0x00')), 0xF4)
        print("✅ CRC check values passed")

    def test_zero_message_zero_checksum(self):
        spec = CrcSpec(width=16, polynomial=0x1021, initial=0)
        attached = crc_attach(np.zeros(40, dtype=np.uint8), spec)
        np.testing.assert_array_equal(attached[-16:], np.zeros(16))

    def test_attach_check_roundtrip_and_single_flips(self):
        print("\n🧪 Testing CRC roundtrip and single-bit detection...")
        rng = np.random.default_rng(99)
        for length in (1, 7, 8, 13, 100, 1024):
            message = rng.integers(0, 2, size=length, dtype=np.uint8)
            attached = crc_attach(message)
            self.assertEqual(attached.size, length + 16)
            self.assertTrue(crc_check(attached))
            for i in range(attached.size):
                corrupted = attached.copy()
                corrupted[i] ^= 1
                self.assertFalse(crc_check(corrupted))
        print("✅ CRC roundtrip test passed")

    def test_bursts_up_to_width_detected(self):
        print("\n🧪 Testing burst error detection...")
        message = np.random.default_rng(4).integers(0, 2, size=16, dtype=np.uint8)
        codeword = crc_attach(message)
        total = codeword.size
        for length in range(1, 17):
            inner = max(length - 2, 0)
            middles = ((np.arange(1 << inner)[:, None] >> np.arange(inner)) & 1).astype(np.uint8)
            bursts = np.zeros((middles.shape[0], length), dtype=np.uint8)
            bursts[:, 0] = 1
            bursts[:, -1] = 1
            if inner:
                bursts[:, 1:-1] = middles
            for start in range(total - length + 1):
                rows = np.tile(codeword, (bursts.shape[0], 1))
                rows[:, start:start + length] ^= bursts
                self.assertFalse(np.any(crc_check_batch(rows)))
        print("✅ Burst detection test passed")

    def test_batch_matches_single(self):
        rng = np.random.default_rng(17)
        rows = rng.integers(0, 2, size=(200, 64), dtype=np.uint8)
        rows[::3, 48:] = np.array([crc_attach(r[:48])[48:] for r in rows[::3]])
        expected = np.array([crc_check(r) for r in rows])
        np.testing.assert_array_equal(crc_check_batch(rows), expected)
        self.assertTrue(np.all(crc_check_batch(rows[::3])))

    def test_reflected_spec_roundtrip(self):
        spec = CrcSpec(width=16, polynomial=0x8005, initial=0, reflect_in=True, reflect_out=True)
        # CRC-16/ARC
        self.assertEqual(crc_compute(self.ascii_bits("123456789"), spec), 0xBB3D)
        message = np.random.default_rng(3).integers(0, 2, size=77, dtype=np.uint8)
        attached = crc_attach(message, spec)
        self.assertTrue(crc_check(attached, spec))
        self.assertTrue(crc_check_batch(attached[None, :], spec)[0])

    def test_errors(self):
        with self.assertRaises(CrcError):
            crc_attach([])
        with self.assertRaises(CrcError):
            crc_check(np.zeros(16, dtype=np.uint8))
        with self.assertRaises(CrcError):
            CrcSpec(width=12)
        with self.assertRaises(CrcError):
            CrcSpec(width=8, polynomial=0x107)
        with self.assertRaises(CrcError):
            parse_crc_flag('16:0x1021')
        with self.assertRaises(CrcError):
            parse_crc_flag('16:zz:0')

    def test_flag_and_dict_forms(self):
        spec = parse_crc_flag('16:0x1021:0xFFFF')
        self.assertEqual(spec, DEFAULT_CRC)
        self.assertEqual(spec.to_dict()['polynomial'], '0x1021')
        self.assertEqual(CrcSpec.from_dict(spec.to_dict()), spec)

    @unittest.skipUnless(RUN_SLOW_TESTS, "set RUN_SLOW_TESTS=1")
    def test_false_accept_rate(self):
        print("\n🧪 Testing CRC false-accept rate (10^6 random vectors)...")
        rng = np.random.default_rng(2024)
        accepted = 0
        trials = 0
        for _ in range(100):
            rows = rng.integers(0, 2, size=(10000, 1040), dtype=np.uint8)
            accepted += int(np.count_nonzero(crc_check_batch(rows)))
            trials += rows.shape[0]
        rate = accepted / trials
        self.assertGreater(rate, 0.5 * 2 ** -16)
        self.assertLess(rate, 1.5 * 2 ** -16)
        print(f"✅ False-accept rate {rate:.3e}")


class TestChannel(unittest.TestCase):
    """BPSK over AWGN"""

    def test_noise_variance(self):
        self.assertAlmostEqual(noise_variance(0.0, 0.5), 1.0)
        self.assertAlmostEqual(ChannelParams(3.0, 0.25).sigma2, 1.0 / (0.5 * 10 ** 0.3))

    def test_llr_formula(self):
        self.assertAlmostEqual(float(llr_from_received([1.0], 0.5)[0]), 4.0)
        np.testing.assert_array_equal(bpsk_modulate([0, 1, 1]), [1.0, -1.0, -1.0])

    def test_high_snr_signs(self):
        print("\n🧪 Testing high-SNR LLR signs...")
        codeword = np.random.default_rng(6).integers(0, 2, size=1024, dtype=np.uint8)
        llrs = transmit(codeword, ChannelParams(40.0, 0.5, seed=11))
        np.testing.assert_array_equal(np.sign(llrs), 1.0 - 2.0 * codeword)
        print("✅ High-SNR sign test passed")

    def test_determinism(self):
        codeword = np.zeros(256, dtype=np.uint8)
        params = ChannelParams(1.0, 0.5, seed=42)
        np.testing.assert_array_equal(transmit(codeword, params), transmit(codeword, params))
        a = transmit(codeword, params, frame_generator(42, 3))
        b = transmit(codeword, params, frame_generator(42, 3))
        c = transmit(codeword, params, frame_generator(42, 4))
        np.testing.assert_array_equal(a, b)
        self.assertFalse(np.array_equal(a, c))

    def test_empirical_noise_variance(self):
        params = ChannelParams(2.0, 0.5, seed=1)
        llrs = transmit(np.zeros(10 ** 6, dtype=np.uint8), params)
        received = llrs * params.sigma2 / 2.0
        self.assertLess(abs(np.var(received - 1.0) / params.sigma2 - 1.0), 0.01)

    def test_invalid_params(self):
        with self.assertRaises(ChannelError):
            ChannelParams(1.0, 0.0)
        with self.assertRaises(ChannelError):
            ChannelParams(1.0, 1.5)
        with self.assertRaises(ChannelError):
            transmit([], ChannelParams(1.0, 0.5))
        with self.assertRaises(ChannelError):
            llr_from_received([1.0], 0.0)


if __name__ == "__main__":
    unittest.main(verbosity=2)
