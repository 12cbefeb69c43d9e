"""
Exhaustive maximum-likelihood decoding for tiny codes.
"""

from dataclasses import dataclass

import numpy as np

from codec.polar_core import PolarCodeSpec, codebook
from errors import DecoderConfigError

ML_MAX_K = 16


@dataclass
class MLResult:
    payload: np.ndarray
    codeword: np.ndarray
    metric: float


def exhaustive_ml_decode(llrs, code: PolarCodeSpec) -> MLResult:
    """
    Codeword maximizing the channel likelihood over all 2^K messages.

    The metric is the same log-penalty the list decoders accumulate, summed over
    the codeword: Σ ln(1 + e^{-(1-2x_i) llr_i}). Ties go to the lowest message.
    """
    llrs = np.asarray(llrs, dtype=np.float64)
    if llrs.shape != (code.N,):
        raise DecoderConfigError(f"Expected {code.N} LLRs, got shape {llrs.shape}")
    if code.K > ML_MAX_K:
        raise DecoderConfigError(f"Exhaustive ML search limited to K <= {ML_MAX_K}, got K={code.K}")
    messages, codewords = codebook(code, max_k=ML_MAX_K)
    signs = 1.0 - 2.0 * codewords
    metrics = np.logaddexp(0.0, -signs * llrs).sum(axis=1)
    best = int(np.argmin(metrics))
    return MLResult(payload=messages[best], codeword=codewords[best], metric=float(metrics[best]))
