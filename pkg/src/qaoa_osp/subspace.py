"""Amplitudes restricted to one Hamming-weight sector.

Diagonal phases and pairwise full-mixer gates never move amplitude between
sectors, so a Dicke-initialized circuit can be simulated exactly on the
``C(n, k)`` states of weight ``k`` instead of all ``2^n``.
"""
from math import comb

import numpy as np

from . import _kernels
from .statevector import StateVector, hamming_weights, xy_pairs


class FixedWeightSubspace:
    def __init__(self, n, weight):
        self.n = n
        self.weight = weight
        self.indices = np.flatnonzero(hamming_weights(n) == weight)
        position = np.full(2**n, -1, dtype=np.int64)
        position[self.indices] = np.arange(self.indices.size)
        # every pair swaps the same number C(n-2, weight-1) of slot pairs
        slots_01, slots_10 = [], []
        for k, m in xy_pairs(n):
            bk, bm = 1 << (n - k), 1 << (n - m)
            sel = self.indices[((self.indices & bk) == 0) & ((self.indices & bm) != 0)]
            slots_01.append(position[sel])
            slots_10.append(position[sel ^ (bk | bm)])
        width = comb(n - 2, weight - 1) if n >= 2 and weight >= 1 else 0
        self.slots_01 = np.array(slots_01, dtype=np.int64).reshape(len(slots_01), width)
        self.slots_10 = np.array(slots_10, dtype=np.int64).reshape(len(slots_10), width)

    @property
    def dim(self):
        return self.indices.size

    def dicke(self):
        return np.full(self.dim, 1.0 / np.sqrt(comb(self.n, self.weight)), dtype=complex)

    def restrict(self, full):
        return np.asarray(full)[self.indices]

    def embed(self, vec):
        amps = np.zeros(2**self.n, dtype=complex)
        amps[self.indices] = vec
        return StateVector(self.n, amps)

    def apply_xy_mixer_layer(self, vec, beta):
        """Same gate sequence as ``statevector.apply_xy_mixer_layer``, in place."""
        _kernels.xy_mixer_layer_sparse(vec, self.slots_01, self.slots_10, float(beta))
        return vec
