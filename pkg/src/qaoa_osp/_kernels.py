"""Compiled inner loops for the hot statevector updates.

Index convention matches ``statevector``: qubit ``q`` (1-based) has stride
``2^(n - q)`` in the amplitude array.
"""
import numba
import numpy as np


@numba.njit(cache=True)
def x_mixer_layer(amps, n, beta):
    # Rx(2 beta) = cos(beta) I - i sin(beta) X, written out on the real view
    c = np.cos(beta)
    s = np.sin(beta)
    v = amps.view(np.float64)
    size = amps.size
    for q in range(1, n + 1):
        stride = 1 << (n - q)
        for base in range(0, size, 2 * stride):
            for i in range(base, base + stride):
                j = i + stride
                ar = v[2 * i]
                ai = v[2 * i + 1]
                br = v[2 * j]
                bi = v[2 * j + 1]
                v[2 * i] = c * ar + s * bi
                v[2 * i + 1] = c * ai - s * br
                v[2 * j] = c * br + s * ai
                v[2 * j + 1] = c * bi - s * ar


@numba.njit(cache=True)
def diagonal_phase(amps, diag, gamma):
    for i in range(amps.size):
        t = -gamma * diag[i]
        amps[i] *= complex(np.cos(t), np.sin(t))


@numba.njit(cache=True)
def xy_mixer_layer(amps, n, beta):
    c = np.cos(beta / 2)
    s = 1j * np.sin(beta / 2)
    size = amps.size
    for k in range(1, n + 1):
        bk = 1 << (n - k)
        for m in range(k + 1, n + 1):
            bm = 1 << (n - m)
            for i in range(size):
                # visit each |..0..1..> once and pair it with |..1..0..>
                if (i & bk) == 0 and (i & bm) != 0:
                    j = i ^ (bk | bm)
                    a = amps[i]
                    b = amps[j]
                    amps[i] = c * a + s * b
                    amps[j] = s * a + c * b


@numba.njit(cache=True)
def xy_mixer_layer_sparse(vec, slots_01, slots_10, beta):
    c = np.cos(beta / 2)
    s = 1j * np.sin(beta / 2)
    for g in range(slots_01.shape[0]):
        for t in range(slots_01.shape[1]):
            i = slots_01[g, t]
            j = slots_10[g, t]
            a = vec[i]
            b = vec[j]
            vec[i] = c * a + s * b
            vec[j] = s * a + c * b
