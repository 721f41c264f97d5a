"""Counter-based splitmix64 generator.

The n-th output of a stream is mix64(state0 + GOLDEN * (n + 1)) mod 2^64,
which is exactly the classic splitmix64 sequence started at state0.  The
counter form lets numpy produce any block of the stream in one shot, and a
block computed vectorized is bit-identical to the scalar path.

Substreams: state0 = mix64(mix64(seed + GOLDEN) ^ mix64(stream_id + GOLDEN)).
Experiments carve their sample space into fixed chunks of CHUNK samples,
chunk j drawing from substream j, so per-sample draws do not depend on how
chunks are scheduled across workers.
"""

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB

# fixed chunk size for order-independent parallel aggregation
CHUNK = 1024


def mix64(z: int) -> int:
    z &= MASK64
    z ^= z >> 30
    z = (z * _M1) & MASK64
    z ^= z >> 27
    z = (z * _M2) & MASK64
    z ^= z >> 31
    return z


class Rng:
    """Deterministic stream of 64-bit words addressed by (seed, stream_id)."""

    def __init__(self, seed: int, stream_id: int = 0):
        self.seed = seed & MASK64
        self.stream_id = stream_id & MASK64
        self.state0 = mix64(mix64(self.seed + GOLDEN) ^ mix64(self.stream_id + GOLDEN))
        self.index = 0  # next counter value to consume

    def substream(self, stream_id: int) -> "Rng":
        """Fresh stream under the same seed; independent of this one's position."""
        return Rng(self.seed, stream_id)

    def next_u64(self) -> int:
        out = mix64(self.state0 + GOLDEN * (self.index + 1))
        self.index += 1
        return out

    def next_float(self) -> float:
        # 53-bit mantissa, uniform on [0, 1)
        return (self.next_u64() >> 11) * 2.0**-53

    def block_u64(self, count: int) -> np.ndarray:
        cnt = np.arange(self.index + 1, self.index + count + 1, dtype=np.uint64)
        self.index += count
        z = np.uint64(self.state0) + np.uint64(GOLDEN) * cnt
        z ^= z >> np.uint64(30)
        z *= np.uint64(_M1)
        z ^= z >> np.uint64(27)
        z *= np.uint64(_M2)
        z ^= z >> np.uint64(31)
        return z

    def block_floats(self, count: int) -> np.ndarray:
        return (self.block_u64(count) >> np.uint64(11)).astype(np.float64) * 2.0**-53

    def __repr__(self):
        return f"Rng(seed={self.seed}, stream_id={self.stream_id}, index={self.index})"
