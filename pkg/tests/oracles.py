"""Independent reference implementations used to check the library.

Everything here is deliberately naive: explicit q-dimensional basis vectors,
explicit N x N weight matrices, triple loops.  None of it shares code with
the package internals.
"""

import numpy as np

from pnn import Memory, NetworkKind, Pattern


def unit_vector(level: int, q: int, sign: int = 1) -> np.ndarray:
    v = np.zeros(q)
    v[level - 1] = float(sign)
    return v


def centered_vector(level: int, q: int) -> np.ndarray:
    """Unsigned unit vector minus the mean activity e/q."""
    v = unit_vector(level, q)
    return v - np.full(q, 1.0 / q)


def stored_vector(memory: Memory, mu: int, j: int) -> np.ndarray:
    """The coupling vector w_j^mu: the pattern state, centered for PNN3."""
    q = memory.q
    sign = int(memory.pattern_signs[mu, j])
    level = int(memory.pattern_levels[mu, j])
    if memory.kind is NetworkKind.PNN3:
        return centered_vector(level, q)
    return unit_vector(level, q, sign)


def state_vector(memory: Memory, state: Pattern, j: int) -> np.ndarray:
    return unit_vector(int(state.levels[j]), memory.q, int(state.signs[j]))


def naive_local_field(memory: Memory, state: Pattern, i: int) -> np.ndarray:
    """The double sum over patterns and the other N-1 neurons, in floats."""
    q, n = memory.q, memory.n_neurons
    h = np.zeros(q)
    for mu in range(memory.n_patterns):
        w_i = stored_vector(memory, mu, i)
        for j in range(n):
            if j == i:
                continue
            w_j = stored_vector(memory, mu, j)
            x_j = state_vector(memory, state, j)
            h += w_i * float(w_j @ x_j)
    return h / n


def naive_energy(memory: Memory, state: Pattern) -> float:
    total = 0.0
    for i in range(memory.n_neurons):
        x_i = state_vector(memory, state, i)
        total += float(x_i @ naive_local_field(memory, state, i))
    return -0.5 * total


class ScalarHopfield:
    """Classical +-1 Hopfield network with an explicit weight matrix.

    Weights are kept as unnormalized integers (sum over patterns of outer
    products, zero diagonal); scaling by 1/N never changes a sign decision,
    and integer fields make the zero-field tie exact.  The update is
    sign(h) with sign(0) keeping the current value.
    """

    def __init__(self, patterns):
        stacked = np.stack([np.asarray(p, dtype=np.int64) for p in patterns])
        self.n = stacked.shape[1]
        self.weights = stacked.T @ stacked
        np.fill_diagonal(self.weights, 0)

    def field(self, state: np.ndarray, i: int) -> int:
        return int(self.weights[i] @ state)

    def synchronous_step(self, state: np.ndarray) -> np.ndarray:
        h = self.weights @ state.astype(np.int64)
        return np.where(h > 0, 1, np.where(h < 0, -1, state)).astype(np.int8)

    def retrieve(self, state: np.ndarray, max_sweeps: int):
        """Sequential asynchronous retrieval; returns the per-update trace."""
        s = np.asarray(state, dtype=np.int8).copy()
        trace = []
        converged = False
        sweeps = 0
        changed_total = 0
        for _ in range(max_sweeps):
            sweeps += 1
            changed = 0
            for i in range(self.n):
                h = self.field(s, i)
                new = 1 if h > 0 else (-1 if h < 0 else int(s[i]))
                if new != s[i]:
                    s[i] = new
                    changed += 1
                trace.append(s.copy())
            changed_total += changed
            if changed == 0:
                converged = True
                break
        return s, converged, sweeps, changed_total, trace

    def energy(self, state: np.ndarray) -> float:
        s = state.astype(np.int64)
        return -0.5 * float(s @ self.weights @ s) / self.n


def reference_map_fragment(fragment) -> tuple[int, int]:
    """Read a +-1 fragment as (sign, level) by literal binary notation."""
    sign = int(fragment[0])
    bits = "".join("1" if v == 1 else "0" for v in fragment[1:])
    level = 1 + (int(bits, 2) if bits else 0)
    return sign, level


def naive_identifier_field(net, state: Pattern, j: int) -> np.ndarray:
    """Cross-coupling field at enumerated coordinate j, from basis vectors."""
    q = net.q
    h = np.zeros(q)
    for mu in range(net.n_patterns):
        y = centered_vector(int(net.digit_codes[mu, j]) + 1, q)
        acc = 0.0
        for i in range(net.n_true):
            w = centered_vector(int(net.pattern_levels[mu, i]), q)
            x = unit_vector(int(state.levels[i]), q)
            acc += float(w @ x)
        h += y * acc
    return h / net.n_true
