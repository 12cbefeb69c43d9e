#!/usr/bin/env python3
"""
Runs every test module of the polar toolkit, one subprocess per file, and prints a summary.

Set RUN_SLOW_TESTS=1 to include the long CRC false-accept run and the desk-scale good-fraction comparison.
"""

import subprocess
import sys
import time
from pathlib import Path

ROOT = Path(__file__).resolve().parent

TESTS = [
    ("test_codec.py", "Transform, construction, CRC and channel"),
    ("test_decoders.py", "Candidate metrics, extension, pruning and list decoding"),
    ("test_analysis.py", "Pattern tables and sorting costs"),
    ("test_cache.py", "Result cache layers"),
    ("test_sim.py", "Monte-Carlo runner, statistics and persistence"),
    ("test_validation.py", "Parameter validation and file IO"),
    ("test_cli.py", "Command line"),
]


def run_test_file(test_file, description, timeout=1800):
    """Run one test module; returns True when it exits with 0."""
    print(f"\n{'='*60}")
    print(f"🚀 Running: {description}")
    print(f"📁 File: {test_file}")
    print(f"{'='*60}")

    try:
        result = subprocess.run([sys.executable, test_file], cwd=ROOT, timeout=timeout)
        if result.returncode == 0:
            print(f"\n✅ {description} - PASSED")
        else:
            print(f"\n❌ {description} - FAILED (code: {result.returncode})")
        return result.returncode == 0

    except subprocess.TimeoutExpired:
        print(f"\n⏰ {description} - TIMEOUT (more than {timeout // 60} minutes)")
        return False
    except Exception as e:
        print(f"\n❌ {description} - ERROR: {str(e)}")
        return False


def main(selected=None):
    tests = [t for t in TESTS if not selected or t[0] in selected]
    print("🧪 POLARKIT TEST SUITE")
    print("=" * 60)
    for test_file, description in tests:
        print(f"   - {test_file}: {description}")

    results = []
    start_time = time.time()
    for test_file, description in tests:
        results.append((description, run_test_file(test_file, description)))
    total_time = time.time() - start_time

    passed = sum(1 for _, success in results if success)
    failed = len(results) - passed

    print(f"\n{'='*60}")
    print("📊 TEST SUMMARY")
    print(f"{'='*60}")
    print(f"⏱️ Total time: {total_time:.2f} seconds")
    print(f"📈 Modules run: {len(results)}")
    print(f"✅ Passed: {passed}")
    print(f"❌ Failed: {failed}")
    for description, success in results:
        status = "✅ PASSED" if success else "❌ FAILED"
        print(f"   {status} - {description}")

    if failed == 0:
        print("\n🎉 ALL TESTS PASSED 🎉")
    else:
        print(f"\n⚠️ {failed} module(s) failed. Check the output above.")
    return failed == 0


if __name__ == "__main__":
    success = main(sys.argv[1:])
    sys.exit(0 if success else 1)
