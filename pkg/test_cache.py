#!/usr/bin/env python3
"""
Result Cache Tests

Covers the two cache layers for simulation points:
1. Redis (mocked), used only when REDIS_HOST is set
2. JSON files under SIM_CACHE_DIR

A failing layer must never abort a sweep; the cache degrades to the next layer.
"""

import os
import json
import shutil
import tempfile
import unittest
from unittest.mock import MagicMock, patch

import redis

from cache.file_store import FileStore
from cache.redis_client import get_redis_client, is_redis_available, reset_redis_client
from cache.result_cache import ResultCache
from errors import ResultCacheError

POINT = {'N': 64, 'K': 32, 'ebn0_db': 2.0, 'seed': 7}
RECORD = {'ebn0_db': 2.0, 'frames': 120, 'frame_errors': 20, 'bit_errors': 95, 'payload_bits': 24,
          'list_size_sum': 480, 'candidates_sorted': 9000, 'group_steps': 3840}


class TestFileStore(unittest.TestCase):

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()
        self.store = FileStore(os.path.join(self.temp_dir, 'cache'))

    def tearDown(self):
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def test_set_get_delete(self):
        print("\n🧪 Testing file store operations...")
        self.assertIsNone(self.store.get('simpoint:abc'))
        self.store.set('simpoint:abc', {'data': RECORD})
        self.assertEqual(self.store.get('simpoint:abc'), {'data': RECORD})
        self.assertTrue(os.path.isfile(os.path.join(self.temp_dir, 'cache', 'simpoint_abc.json')))
        self.assertEqual([p for p in os.listdir(os.path.join(self.temp_dir, 'cache')) if p.endswith('.tmp')], [])
        self.assertTrue(self.store.delete('simpoint:abc'))
        self.assertFalse(self.store.delete('simpoint:abc'))
        self.assertIsNone(self.store.get('simpoint:abc'))
        print("✅ File store test passed")

    def test_clear(self):
        for i in range(3):
            self.store.set(f"simpoint:{i}", {'data': i})
        self.assertEqual(self.store.clear(), 3)
        self.assertEqual(self.store.clear(), 0)

    def test_unreadable_file_is_a_miss(self):
        with open(os.path.join(self.temp_dir, 'cache', 'simpoint_bad.json'), 'w', encoding='utf-8') as f:
            f.write('{not json')
        self.assertIsNone(self.store.get('simpoint:bad'))

    def test_directory_is_a_file(self):
        path = os.path.join(self.temp_dir, 'plain')
        with open(path, 'w', encoding='utf-8') as f:
            f.write('x')
        with self.assertRaises(ResultCacheError):
            FileStore(path)


class TestResultCache(unittest.TestCase):
    """ResultCache with the file layer and a mocked Redis layer"""

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()
        self.env = patch.dict(os.environ)
        self.env.start()
        os.environ.pop('REDIS_HOST', None)
        os.environ.pop('SIM_CACHE_DIR', None)

    def tearDown(self):
        self.env.stop()
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def test_disabled_cache(self):
        cache = ResultCache()
        self.assertFalse(cache.enabled)
        self.assertIsNone(cache.get(POINT))
        self.assertFalse(cache.set(POINT, RECORD))

    def test_directory_from_environment(self):
        os.environ['SIM_CACHE_DIR'] = self.temp_dir
        cache = ResultCache()
        self.assertTrue(cache.enabled)
        self.assertFalse(cache.use_redis)
        self.assertIsNotNone(cache.file_store)

    def test_make_key_is_stable(self):
        cache = ResultCache(directory=self.temp_dir, use_redis=False)
        reordered = dict(reversed(list(POINT.items())))
        self.assertEqual(cache.make_key(POINT), cache.make_key(reordered))
        self.assertTrue(cache.make_key(POINT).startswith('simpoint:'))
        self.assertNotEqual(cache.make_key(POINT), cache.make_key(dict(POINT, seed=8)))

    def test_file_layer_round_trip(self):
        print("\n🧪 Testing result cache file layer...")
        cache = ResultCache(directory=self.temp_dir, use_redis=False)
        self.assertIsNone(cache.get(POINT))
        self.assertTrue(cache.set(POINT, RECORD))
        self.assertEqual(cache.get(POINT), RECORD)
        self.assertEqual(ResultCache(directory=self.temp_dir, use_redis=False).get(POINT), RECORD)
        self.assertEqual(cache.clear(), 1)
        self.assertIsNone(cache.get(POINT))
        print("✅ File layer test passed")

    @patch('cache.result_cache.is_redis_available', return_value=True)
    @patch('cache.result_cache.get_redis_client')
    def test_redis_layer(self, mock_client, mock_available):
        print("\n🧪 Testing result cache Redis layer...")
        fake = MagicMock()
        fake.get.return_value = None
        mock_client.return_value = fake

        cache = ResultCache(directory=None, use_redis=True)
        self.assertTrue(cache.enabled)
        self.assertTrue(cache.set(POINT, RECORD))
        key, ttl, payload = fake.setex.call_args[0]
        self.assertEqual(key, cache.make_key(POINT))
        self.assertEqual(ttl, cache.ttl)
        self.assertEqual(json.loads(payload)['data'], RECORD)

        self.assertIsNone(cache.get(POINT))
        fake.get.return_value = payload
        self.assertEqual(cache.get(POINT), RECORD)
        print("✅ Redis layer test passed")

    @patch('cache.result_cache.is_redis_available', return_value=True)
    @patch('cache.result_cache.get_redis_client')
    def test_failing_redis_degrades_to_files(self, mock_client, mock_available):
        print("\n🧪 Testing degradation when Redis fails...")
        fake = MagicMock()
        fake.get.side_effect = redis.ConnectionError("connection reset")
        fake.setex.side_effect = redis.ConnectionError("connection reset")
        mock_client.return_value = fake

        cache = ResultCache(directory=self.temp_dir, use_redis=True)
        self.assertTrue(cache.set(POINT, RECORD))
        self.assertEqual(cache.get(POINT), RECORD)
        print("✅ Degradation test passed")

    @patch('cache.result_cache.is_redis_available', return_value=False)
    def test_unavailable_redis_is_skipped(self, mock_available):
        cache = ResultCache(directory=self.temp_dir, use_redis=True)
        self.assertTrue(cache.set(POINT, RECORD))
        self.assertEqual(cache.get(POINT), RECORD)

    def test_ttl_from_environment(self):
        os.environ['RESULT_CACHE_TTL'] = '60'
        self.assertEqual(ResultCache(directory=self.temp_dir, use_redis=False).ttl, 60)


class TestRedisClient(unittest.TestCase):
    """Connection management"""

    def setUp(self):
        self.env = patch.dict(os.environ)
        self.env.start()
        reset_redis_client()

    def tearDown(self):
        reset_redis_client()
        self.env.stop()

    def test_not_configured(self):
        os.environ.pop('REDIS_HOST', None)
        self.assertIsNone(get_redis_client())
        self.assertFalse(is_redis_available())

    @patch('cache.redis_client.redis.Redis')
    def test_unreachable_server(self, mock_redis):
        os.environ['REDIS_HOST'] = 'redis.invalid'
        mock_redis.return_value.ping.side_effect = redis.ConnectionError("refused")
        self.assertIsNone(get_redis_client())
        self.assertFalse(is_redis_available())

    @patch('cache.redis_client.redis.Redis')
    def test_connected_client_is_reused(self, mock_redis):
        os.environ['REDIS_HOST'] = 'localhost'
        os.environ['REDIS_PORT'] = '6380'
        client = get_redis_client()
        self.assertIs(client, mock_redis.return_value)
        self.assertIs(get_redis_client(), client)
        self.assertTrue(is_redis_available())
        self.assertEqual(mock_redis.call_count, 1)
        self.assertEqual(mock_redis.call_args.kwargs['port'], 6380)


if __name__ == "__main__":
    unittest.main(verbosity=2)
