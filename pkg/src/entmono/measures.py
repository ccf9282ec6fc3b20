"""Entanglement measures: concurrence (pure, two-qubit mixed, certified
intervals), negativity and its convex-roof extension, entanglement of
formation, Tsallis-q and Renyi-entropy measures, and a heuristic
estimator for their assisted (decomposition-maximizing) duals.

All logarithms are base 2 and 0·log 0 := 0.  On two-qubit mixed states the
entropic measures reduce to closed-form functions of the Wootters
concurrence; beyond 2x2 only the concurrence supports certified interval
evaluation, and the entropic measures are deliberately unsupported rather
than silently approximated.
"""

import math
from dataclasses import dataclass

import numpy as np

from .densemat import partial_transpose, psd_eigvals, trace_norm
from .errors import CapabilityError, DimensionError, DomainError, ParameterError
from .states import DensityMatrix, PureState, seed_path

# Validity window of the concurrence closed form for the mixed-state
# Tsallis route: (5 - sqrt(13))/2 <= q <= (5 + sqrt(13))/2.
TSALLIS_Q_LO = (5.0 - math.sqrt(13.0)) / 2.0
TSALLIS_Q_HI = (5.0 + math.sqrt(13.0)) / 2.0

_SY = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_YY = np.kron(_SY, _SY)


@dataclass(frozen=True)
class MeasureValue:
    """A measure result together with its certification status.

    status is one of "exact", "interval" (with certified lo <= hi bounds,
    value = midpoint) or "heuristic" (a lower estimate; never used for
    certified verdicts).
    """

    value: float
    status: str = "exact"
    lo: float = None
    hi: float = None

    def __post_init__(self):
        if self.status not in ("exact", "interval", "heuristic"):
            raise ParameterError(f"unknown certification status {self.status!r}")
        if self.status == "interval":
            if self.lo is None or self.hi is None or self.lo > self.hi + 1e-15:
                raise ParameterError(f"bad interval [{self.lo}, {self.hi}]")

    def __float__(self):
        return float(self.value)

    @property
    def bounds(self) -> tuple:
        """(lo, hi) with lo = hi = value for exact results."""
        if self.status == "interval":
            return (self.lo, self.hi)
        return (self.value, self.value)

    @classmethod
    def exact(cls, v):
        return cls(float(v), "exact")

    @classmethod
    def interval(cls, lo, hi):
        lo, hi = float(lo), float(hi)
        return cls(0.5 * (lo + hi), "interval", lo, hi)

    @classmethod
    def heuristic(cls, v):
        return cls(float(v), "heuristic")


@dataclass(frozen=True)
class MeasureKind:
    """Selector for one of the five measure families.

    name is one of "concurrence", "cren", "eof", "tsallis" (requires q) or
    "renyi" (requires order); assisted selects the decomposition-maximizing
    dual, which is only available through the heuristic estimator.
    """

    name: str
    q: float = None
    order: float = None
    assisted: bool = False

    def __post_init__(self):
        if self.name not in ("concurrence", "cren", "eof", "tsallis", "renyi"):
            raise ParameterError(f"unknown measure kind {self.name!r}")
        if self.name == "tsallis":
            if self.q is None or self.q <= 0 or self.q == 1:
                raise ParameterError(f"tsallis requires q > 0, q != 1, got {self.q}")
        elif self.q is not None:
            raise ParameterError(f"q is only meaningful for tsallis, got kind {self.name!r}")
        if self.name == "renyi":
            if self.order is None or self.order <= 0 or self.order == 1:
                raise ParameterError(f"renyi requires order > 0, order != 1, got {self.order}")
        elif self.order is not None:
            raise ParameterError(f"order is only meaningful for renyi, got kind {self.name!r}")

    @property
    def label(self) -> str:
        if self.name == "tsallis":
            base = f"tsallis(q={self.q:g})"
        elif self.name == "renyi":
            base = f"renyi(order={self.order:g})"
        else:
            base = self.name
        return f"assisted-{base}" if self.assisted else base

    def from_concurrence(self, c: float) -> float:
        """Value of this measure on any state of known concurrence c.

        Valid on 2 x m pure states and two-qubit mixed states, where each
        family is a fixed monotone function of the concurrence.
        """
        c = min(max(float(c), 0.0), 1.0)
        if self.name in ("concurrence", "cren"):
            return c
        if self.name == "eof":
            return f_eof(c * c)
        if self.name == "tsallis":
            return g_tsallis(c * c, self.q)
        return f_renyi(c, self.order)

    def pure_value(self, state: PureState, keep) -> float:
        """Exact value on a pure state for the bipartition keep | rest."""
        marg = state.reduce(keep)
        evs = marg.eigvals()
        if self.name == "concurrence":
            return _conc_from_purity(evs)
        if self.name == "cren":
            # (Tr sqrt(rho_keep))^2 - 1; equals the concurrence whenever one
            # side is a single qubit (Schmidt rank <= 2).
            return max(0.0, float(np.sum(np.sqrt(evs))) ** 2 - 1.0)
        if self.name == "eof":
            return _entropy_vn(evs)
        if self.name == "tsallis":
            return _entropy_tsallis(evs, self.q)
        return _entropy_renyi(evs, self.order)

    def two_qubit_value(self, rho: DensityMatrix) -> float:
        """Exact value on a two-qubit mixed state via the Wootters form."""
        c = float(concurrence_two_qubit(rho))
        if self.name == "tsallis" and not TSALLIS_Q_LO <= self.q <= TSALLIS_Q_HI:
            raise CapabilityError(
                f"mixed-state tsallis route requires q within "
                f"[{TSALLIS_Q_LO:.6f}, {TSALLIS_Q_HI:.6f}], got q={self.q}"
            )
        return self.from_concurrence(c)


def _require_two_qubits(rho: DensityMatrix, what: str):
    if not isinstance(rho, DensityMatrix):
        raise ParameterError(f"{what} expects a DensityMatrix, got {type(rho).__name__}")
    if tuple(rho.dims) != (2, 2):
        raise DimensionError(f"{what} requires a 2x2-qubit state, got dims {rho.dims}")


def _conc_from_purity(evs) -> float:
    purity = float(np.sum(np.asarray(evs) ** 2))
    return math.sqrt(max(0.0, 2.0 * (1.0 - purity)))


def _entropy_vn(evs) -> float:
    p = np.asarray(evs)
    p = p[p > 0]
    return float(-np.sum(p * np.log2(p)))


def _entropy_tsallis(evs, q: float) -> float:
    p = np.asarray(evs)
    p = p[p > 0]
    return float((1.0 - np.sum(p ** q)) / (q - 1.0))


def _entropy_renyi(evs, order: float) -> float:
    p = np.asarray(evs)
    p = p[p > 0]
    return float(np.log2(np.sum(p ** order)) / (1.0 - order))


def concurrence_pure(state: PureState, keep) -> MeasureValue:
    """Concurrence sqrt(2[1 - Tr rho_keep²]) of a pure-state bipartition.

    keep must be a proper nonempty subset of the subsystems; the result
    lies in [0, sqrt(2(d-1)/d)] for d the smaller side dimension.
    """
    keep = sorted(set(int(i) for i in keep))
    if not keep or len(keep) >= state.n_qubits:
        raise ParameterError(
            f"keep must be a proper nonempty subsystem subset, got {keep} "
            f"of {state.n_qubits}"
        )
    return MeasureValue.exact(_conc_from_purity(state.reduce(keep).eigvals()))


# eigenvalues of a unit-trace state below this are treated as rank noise
_RANK_TOL = 1e-12


def concurrence_two_qubit(rho: DensityMatrix) -> MeasureValue:
    """Wootters concurrence of a two-qubit mixed state.

    C = max{0, l1 - l2 - l3 - l4} where the l_i are the descending square
    roots of the eigenvalues of rho (sy x sy) rho* (sy x sy).  They are
    computed as the singular values of Psi^T (sy x sy) Psi with Psi built
    from the rank-retained eigenpairs of rho: the same spectrum, but the
    square root never touches near-zero eigenvalues, whose noise would
    otherwise surface at the sqrt(eps) level on low-rank states.
    """
    _require_two_qubits(rho, "concurrence_two_qubit")
    evs, vecs = np.linalg.eigh(rho.matrix)
    keep = evs > _RANK_TOL
    psi = vecs[:, keep] * np.sqrt(evs[keep])
    lam = np.zeros(4)
    if psi.shape[1]:
        sv = np.linalg.svd(psi.T @ _YY @ psi, compute_uv=False)
        lam[:sv.size] = sv
    lam = np.sort(lam)[::-1]
    return MeasureValue.exact(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def concurrence_interval(rho: DensityMatrix, side: int = 0) -> MeasureValue:
    """Certified concurrence interval for a mixed qubit | qubit-group split.

    The lower leg is sqrt(sum_j C²(rho_{A,Bj})) over the group qubits (the
    squared pairwise concurrences bound the squared group concurrence from
    below).  The upper leg is sqrt(2[1 - Tr rho_A²]): the map
    rho_A -> sqrt(2[1 - Tr rho_A²]) is concave (Tr rho² is convex, and the
    square root of a nonnegative concave function is concave), and the
    marginal of a mixture is the mixture of marginals, so for any ensemble
    sum_i p_i C(phi_i) = sum_i p_i g(rho_A,i) <= g(rho_A); minimizing over
    ensembles keeps the inequality.  Rank-1 inputs collapse to the exact
    pure-state value.
    """
    if not isinstance(rho, DensityMatrix):
        raise ParameterError("concurrence_interval expects a DensityMatrix")
    if any(d != 2 for d in rho.dims) or len(rho.dims) < 3:
        raise DimensionError(
            f"concurrence_interval requires >= 3 qubit subsystems, got dims {rho.dims}"
        )
    side = int(side)
    if not 0 <= side < len(rho.dims):
        raise DimensionError(f"side {side} out of range")

    if rho.is_pure():
        evs, vecs = np.linalg.eigh(rho.matrix)
        vec = vecs[:, int(np.argmax(evs))]
        state = PureState(vec / np.linalg.norm(vec), rho.dims)
        return MeasureValue.exact(float(concurrence_pure(state, {side})))

    lo_sq = 0.0
    for j in range(len(rho.dims)):
        if j == side:
            continue
        pair = rho.partial_trace([side, j])
        lo_sq += float(concurrence_two_qubit(pair)) ** 2
    lo = math.sqrt(lo_sq)
    hi = _conc_from_purity(rho.partial_trace([side]).eigvals())
    return MeasureValue.interval(lo, max(lo, hi))


def negativity(rho, side=0) -> MeasureValue:
    """Negativity ||rho^{T_side}|| - 1 for the split side | rest.

    Accepts a DensityMatrix or a PureState (converted to its projector);
    side may be one subsystem index or a group of them (the transpose is
    applied to each factor in the group).  The result is clamped at 0
    from below (roundoff tolerance 1e-12).
    """
    if isinstance(rho, PureState):
        rho = rho.density_matrix()
    sides = sorted({int(side)} if np.isscalar(side) else {int(i) for i in side})
    if not sides or sides[0] < 0 or sides[-1] >= len(rho.dims):
        raise DimensionError(f"side {side!r} out of range for dims {rho.dims}")
    if len(sides) == len(rho.dims):
        raise DimensionError("side must leave at least one factor untransposed")
    pt = rho.matrix
    for idx in sides:
        pt = partial_transpose(pt, rho.dims, idx)
    return MeasureValue.exact(max(0.0, trace_norm(pt) - 1.0))


def cren_two_qubit(rho: DensityMatrix) -> MeasureValue:
    """Convex-roof extended negativity of a two-qubit state.

    Every two-qubit pure state has Schmidt rank <= 2, where negativity and
    concurrence coincide, so the convex roofs coincide as well; this
    delegates to the Wootters form.
    """
    _require_two_qubits(rho, "cren_two_qubit")
    return concurrence_two_qubit(rho)


def f_eof(x: float) -> float:
    """Entanglement of formation as a function of squared concurrence.

    f(x) = H((1 + sqrt(1-x))/2) with H the base-2 binary entropy;
    monotonically increasing on [0, 1] with f(0) = 0, f(1) = 1.
    """
    x = _unit_interval(x, "f_eof")
    h = (1.0 + math.sqrt(1.0 - x)) / 2.0
    return _h2(h)


def g_tsallis(x: float, q: float) -> float:
    """Tsallis-q entanglement as a function of squared concurrence.

    g_q(x) = [1 - ((1+s)/2)^q - ((1-s)/2)^q]/(q-1) with s = sqrt(1-x);
    g_q(0) = 0 and g_2(x) = x/2 exactly.
    """
    if q <= 0 or q == 1:
        raise ParameterError(f"g_tsallis requires q > 0, q != 1, got {q}")
    x = _unit_interval(x, "g_tsallis")
    s = math.sqrt(1.0 - x)
    return (1.0 - ((1.0 + s) / 2.0) ** q - ((1.0 - s) / 2.0) ** q) / (q - 1.0)


def f_renyi(x: float, order: float) -> float:
    """Renyi entanglement as a function of the concurrence (not squared).

    f_a(x) = log2[((1-s)/2)^a + ((1+s)/2)^a]/(1-a) with s = sqrt(1-x²);
    f_a(0) = 0, f_a(1) = 1, increasing on [0, 1].
    """
    if order <= 0 or order == 1:
        raise ParameterError(f"f_renyi requires order > 0, order != 1, got {order}")
    x = _unit_interval(x, "f_renyi")
    s = math.sqrt(max(0.0, 1.0 - x * x))
    total = ((1.0 - s) / 2.0) ** order + ((1.0 + s) / 2.0) ** order
    return math.log2(total) / (1.0 - order)


def eof(state, partition=None) -> MeasureValue:
    """Entanglement of formation.

    Pure states: von Neumann entropy of the marginal on ``partition``.
    Two-qubit mixed states: f_eof(C²).  Mixed states beyond 2x2 are
    unsupported (no certified route exists here).
    """
    return _entropic_dispatch(MeasureKind("eof"), state, partition)


def tsallis(state, partition=None, q: float = 2.0) -> MeasureValue:
    """Tsallis-q entanglement; see :func:`eof` for the supported regimes.

    The pure route (1 - Tr rho^q)/(q - 1) works for any q > 0, q != 1; the
    mixed two-qubit route additionally requires q within the closed-form
    validity window [(5-sqrt(13))/2, (5+sqrt(13))/2].
    """
    return _entropic_dispatch(MeasureKind("tsallis", q=float(q)), state, partition)


def renyi(state, partition=None, order: float = 2.0) -> MeasureValue:
    """Renyi entanglement of order ``order``; regimes as in :func:`eof`."""
    return _entropic_dispatch(MeasureKind("renyi", order=float(order)), state, partition)


def _entropic_dispatch(kind: MeasureKind, state, partition) -> MeasureValue:
    if isinstance(state, PureState):
        if partition is None:
            raise ParameterError(f"{kind.name} on a pure state needs a partition (keep set)")
        keep = sorted(set(int(i) for i in partition))
        if not keep or len(keep) >= state.n_qubits:
            raise ParameterError(f"partition {keep} is not a proper bipartition")
        return MeasureValue.exact(kind.pure_value(state, keep))
    if isinstance(state, DensityMatrix):
        if tuple(state.dims) != (2, 2):
            raise CapabilityError(
                f"{kind.name} on mixed states is only supported for 2x2-qubit "
                f"dims, got {state.dims}; use concurrence_interval or the "
                f"heuristic assisted estimator instead"
            )
        return MeasureValue.exact(kind.two_qubit_value(state))
    raise ParameterError(f"expected PureState or DensityMatrix, got {type(state).__name__}")


def _pure_two_qubit_concurrence(vec: np.ndarray) -> float:
    # |<phi|sy x sy|phi*>| = 2|a d - b c| for amplitudes (a, b, c, d)
    return 2.0 * abs(vec[0] * vec[3] - vec[1] * vec[2])


def assisted_estimate(rho: DensityMatrix, kind: MeasureKind, budget: int = 200,
                      seed=0) -> MeasureValue:
    """Heuristic lower estimate of an assisted (max-decomposition) measure.

    Random pure-state decompositions of the two-qubit state are generated
    by mixing the eigen-ensemble with Haar isometries (ensemble sizes up
    to rank²); the best ensemble average over ``budget`` restarts is
    returned.  It is flagged heuristic and never feeds certified verdicts.
    The estimate is at least the non-assisted measure (every decomposition
    average dominates the convex-roof minimum) and is nondecreasing in
    ``budget`` for a fixed seed.
    """
    if not kind.assisted:
        raise ParameterError("assisted_estimate requires a kind with assisted=True")
    _require_two_qubits(rho, "assisted_estimate")
    budget = int(budget)
    if budget < 0:
        raise ParameterError(f"budget must be nonnegative, got {budget}")

    evs, vecs = np.linalg.eigh(rho.matrix)
    order = np.argsort(evs)[::-1]
    evs, vecs = np.clip(evs[order], 0.0, None), vecs[:, order]
    mask = evs > 1e-12
    evs, vecs = evs[mask], vecs[:, mask]
    rank = max(1, int(mask.sum()))
    roots = np.sqrt(evs)

    def ensemble_average(u: np.ndarray) -> float:
        tilde = u @ (roots[:, None] * vecs.T)  # rows are unnormalized members
        probs = np.real(np.sum(np.abs(tilde) ** 2, axis=1))
        total = 0.0
        for p, row in zip(probs, tilde):
            if p <= 1e-14:
                continue
            total += p * kind.from_concurrence(_pure_two_qubit_concurrence(row / math.sqrt(p)))
        return total

    best = ensemble_average(np.eye(rank))
    for i in range(budget):
        rng = np.random.default_rng(seed_path(seed, i))
        m = int(rng.integers(rank, rank * rank + 1)) if rank > 1 else 1
        z = rng.normal(size=(m, rank)) + 1j * rng.normal(size=(m, rank))
        u, _ = np.linalg.qr(z)
        best = max(best, ensemble_average(u))
    return MeasureValue.heuristic(best)


def _h2(p: float) -> float:
    total = 0.0
    for x in (p, 1.0 - p):
        if x > 0.0:
            total -= x * math.log2(x)
    return total


def _unit_interval(x: float, what: str) -> float:
    x = float(x)
    if not -1e-12 <= x <= 1.0 + 1e-12:
        raise DomainError(f"{what} requires an argument in [0, 1], got {x!r}")
    return min(max(x, 0.0), 1.0)
