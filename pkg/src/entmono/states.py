"""Multi-qubit state construction: the five-amplitude three-qubit family,
GHZ and W states, Haar-random pure states, and reduced density matrices.

Qubit 0 is subsystem A; the remaining qubits are B, C, ... in tensor order
(most significant bit first in computational-basis indexing).
"""

import json
from dataclasses import dataclass

import numpy as np

from .densemat import DIM_CAP, partial_trace, psd_eigvals
from .errors import ContractError, DimensionError, ParameterError

NORM_TOL = 1e-12
FILE_NORM_TOL = 1e-9


@dataclass(frozen=True)
class PureState:
    """Normalized complex amplitude vector over an ordered qubit register."""

    amplitudes: np.ndarray
    dims: tuple

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex)
        dims = tuple(int(d) for d in self.dims)
        if any(d < 1 for d in dims):
            raise ParameterError(f"subsystem dims must be positive, got {dims}")
        if amps.ndim != 1 or amps.size != int(np.prod(dims)):
            raise DimensionError(
                f"amplitude count {amps.size} does not match dims {dims}"
            )
        if not np.all(np.isfinite(amps)):
            raise ContractError("amplitudes contain NaN or Inf")
        norm2 = float(np.real(np.vdot(amps, amps)))
        if abs(norm2 - 1.0) > NORM_TOL:
            raise ParameterError(f"state norm² = {norm2!r} deviates from 1 beyond {NORM_TOL}")
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "dims", dims)

    @property
    def n_qubits(self) -> int:
        return len(self.dims)

    def density_matrix(self) -> "DensityMatrix":
        return DensityMatrix(np.outer(self.amplitudes, self.amplitudes.conj()), self.dims)

    def reduce(self, keep) -> "DensityMatrix":
        """Reduced density matrix on the kept subsystems (ascending order)."""
        keep = sorted(set(int(i) for i in keep))
        if not keep:
            raise ParameterError("keep set must be nonempty")
        rho = np.outer(self.amplitudes, self.amplitudes.conj())
        sub = partial_trace(rho, self.dims, keep)
        return DensityMatrix(sub, tuple(self.dims[i] for i in keep))


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, PSD, unit-trace matrix with per-subsystem dimensions.

    Invariants (Hermitian within 1e-10, trace 1 within 1e-10, minimum
    eigenvalue >= -1e-10) are validated once at construction.
    """

    matrix: np.ndarray
    dims: tuple

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        dims = tuple(int(d) for d in self.dims)
        d = int(np.prod(dims))
        if m.shape != (d, d):
            raise DimensionError(f"matrix shape {m.shape} does not match dims {dims}")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > 1e-10:
            raise ContractError(f"trace {tr} deviates from 1 beyond 1e-10")
        psd_eigvals(m)  # raises on non-Hermitian or indefinite input
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dims", dims)

    @property
    def n_subsystems(self) -> int:
        return len(self.dims)

    def purity(self) -> float:
        return float(np.real(np.trace(self.matrix @ self.matrix)))

    def is_pure(self, tol=1e-10) -> bool:
        return self.purity() >= 1.0 - tol

    def eigvals(self) -> np.ndarray:
        """Descending eigenvalues with negative roundoff clamped to zero."""
        return psd_eigvals(self.matrix)

    def partial_trace(self, keep) -> "DensityMatrix":
        keep = sorted(set(int(i) for i in keep))
        sub = partial_trace(self.matrix, self.dims, keep)
        return DensityMatrix(sub, tuple(self.dims[i] for i in keep))


@dataclass(frozen=True)
class SchmidtParams:
    """Parameters of the canonical five-amplitude three-qubit pure state.

    The weights are nonnegative with sum of squares 1; ``phi`` is the
    relative phase (radians) on the second amplitude.
    """

    lambda0: float
    lambda1: float
    lambda2: float
    lambda3: float
    lambda4: float
    phi: float = 0.0

    def __post_init__(self):
        lams = self.lambdas
        if any(l < 0 for l in lams):
            raise ParameterError(f"weights must be nonnegative, got {lams}")
        ssq = sum(l * l for l in lams)
        if abs(ssq - 1.0) > NORM_TOL:
            raise ParameterError(f"sum of squared weights {ssq!r} deviates from 1 beyond {NORM_TOL}")

    @property
    def lambdas(self) -> tuple:
        return (self.lambda0, self.lambda1, self.lambda2, self.lambda3, self.lambda4)


def schmidt3(params: SchmidtParams) -> PureState:
    """Three-qubit pure state in the canonical five-amplitude form.

    Amplitude placement (qubits A, B, C left to right):

        lambda0           on |000>
        lambda1 e^{i phi} on |100>
        lambda2           on |110>
        lambda3           on |101>
        lambda4           on |111>

    With this placement the closed forms C(A|BC) = 2 l0 sqrt(l2²+l3²+l4²),
    C(AB) = 2 l0 l2 and C(AC) = 2 l0 l3 hold for the pairwise and
    one-to-group concurrences.
    """
    amps = np.zeros(8, dtype=complex)
    amps[0b000] = params.lambda0
    amps[0b100] = params.lambda1 * np.exp(1j * params.phi)
    amps[0b110] = params.lambda2
    amps[0b101] = params.lambda3
    amps[0b111] = params.lambda4
    return PureState(amps, (2, 2, 2))


def example1_params() -> SchmidtParams:
    """The worked-example parameter point: l0=l3=l4=1/sqrt(5), l2=sqrt(2/5)."""
    s5 = 1.0 / np.sqrt(5.0)
    return SchmidtParams(s5, 0.0, np.sqrt(2.0 / 5.0), s5, s5)


def ghz(n: int) -> PureState:
    """(|0...0> + |1...1>)/sqrt(2) on n >= 2 qubits."""
    n = int(n)
    if n < 2:
        raise ParameterError(f"ghz requires n >= 2 qubits, got {n}")
    _check_qubits(n)
    amps = np.zeros(2 ** n, dtype=complex)
    amps[0] = amps[-1] = 1.0 / np.sqrt(2.0)
    return PureState(amps, (2,) * n)


def w_state(n: int) -> PureState:
    """Equal superposition of the n single-excitation basis states, n >= 2."""
    n = int(n)
    if n < 2:
        raise ParameterError(f"w_state requires n >= 2 qubits, got {n}")
    _check_qubits(n)
    amps = np.zeros(2 ** n, dtype=complex)
    for k in range(n):
        amps[1 << k] = 1.0 / np.sqrt(n)
    return PureState(amps, (2,) * n)


def bell() -> PureState:
    """(|00> + |11>)/sqrt(2)."""
    return ghz(2)


def random_pure(n: int, seed) -> PureState:
    """Haar-distributed pure state on n qubits, deterministic given seed.

    Sampling is by normalizing a vector of iid complex Gaussians; ``seed``
    is anything ``numpy.random.default_rng`` accepts (an int, or a tuple
    such as (master_seed, index) for per-sample derivation).
    """
    n = int(n)
    if n < 1:
        raise ParameterError(f"random_pure requires n >= 1 qubits, got {n}")
    _check_qubits(n)
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    v = rng.normal(size=2 ** n) + 1j * rng.normal(size=2 ** n)
    v /= np.linalg.norm(v)
    return PureState(v, (2,) * n)


def reduce_state(state: PureState, keep) -> DensityMatrix:
    """Functional form of :meth:`PureState.reduce`."""
    return state.reduce(keep)


def seed_path(seed, *indices) -> tuple:
    """Flatten a seed plus derivation indices into an int tuple.

    Feeding the result to ``numpy.random.default_rng`` gives independent,
    reproducible streams per (master seed, index, ...) path, so parallel
    and serial sample evaluation agree exactly.
    """
    base = tuple(seed) if isinstance(seed, (tuple, list)) else (seed,)
    return tuple(int(x) for x in base) + tuple(int(i) for i in indices)


def _check_qubits(n: int):
    if 2 ** n > DIM_CAP:
        raise DimensionError(f"{n} qubits exceed the dense-storage cap of {DIM_CAP} amplitudes")


def save_state(state: PureState, path):
    """Write a pure qubit state as JSON: n_qubits plus [re, im] amplitude pairs."""
    rec = {
        "n_qubits": state.n_qubits,
        "amplitudes": [[float(a.real), float(a.imag)] for a in state.amplitudes],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(rec, fh)
        fh.write("\n")


def load_state(path) -> PureState:
    """Read a pure qubit state written by :func:`save_state`.

    The squared norm must be within 1e-9 of 1; the vector is renormalized
    to machine precision after the check.
    """
    with open(path, "r", encoding="utf-8") as fh:
        rec = json.load(fh)
    try:
        n = int(rec["n_qubits"])
        pairs = rec["amplitudes"]
        amps = np.array([complex(re, im) for re, im in pairs], dtype=complex)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParameterError(f"malformed state file: {exc}") from exc
    if amps.size != 2 ** n:
        raise DimensionError(
            f"state file lists {amps.size} amplitudes for {n} qubits (expected {2 ** n})"
        )
    norm = float(np.linalg.norm(amps))
    if abs(norm * norm - 1.0) > FILE_NORM_TOL:
        raise ParameterError(f"state file norm² = {norm * norm!r} deviates from 1 beyond {FILE_NORM_TOL}")
    return PureState(amps / norm, (2,) * n)
