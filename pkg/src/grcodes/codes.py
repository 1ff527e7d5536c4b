"""Zero-divisor and unit-derived codes from group ring encodings.

A code is fixed by an element ``u``, a submodule basis ``S`` (a set of group
elements spanning W) and a side. With the default right encoding
``x -> x u`` the codeword of ``g_k`` is row ``k`` of sigma(u), so the
generator is simply the rows of sigma(u) indexed by ``S``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

import numpy as np

from grcodes import linalg, poly
from grcodes.distance import min_distance as _min_distance
from grcodes.errors import (
    AlgebraError,
    DependentBasisError,
    NoCheckElementsError,
    NotAUnitError,
)
from grcodes.groupring import GroupRingElement
from grcodes.rgmatrix import (
    classify,
    element_from_first_column,
    encoding_matrix,
    rg_rank,
    sigma,
)


@dataclass(frozen=True)
class SubmoduleBasis:
    """Strictly increasing indices ``k_1 < ... < k_r`` into the group listing."""

    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(int(i) for i in self.indices)
        if not idx:
            raise ValueError("a submodule basis needs at least one element")
        if idx[0] < 0 or any(b <= a for a, b in zip(idx, idx[1:])):
            raise ValueError(f"basis indices must be strictly increasing and >= 0: {idx}")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def first(cls, r: int) -> SubmoduleBasis:
        return cls(tuple(range(r)))

    @classmethod
    def of(cls, indices) -> SubmoduleBasis:
        return cls(tuple(sorted(set(int(i) for i in indices))))

    def check_range(self, n: int) -> None:
        if self.indices[-1] >= n:
            raise ValueError(f"basis index {self.indices[-1]} out of range for order {n}")

    def complement(self, n: int) -> list[int]:
        s = set(self.indices)
        return [i for i in range(n) if i not in s]

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __str__(self):
        return ",".join(map(str, self.indices))


@dataclass(frozen=True)
class Provenance:
    element: GroupRingElement | None
    basis: SubmoduleBasis | None
    side: str = "right"
    kind: str = "zero-divisor"
    note: str = ""


@dataclass
class LinearCode:
    """Generator (k x n) and check ((n-k) x n) over GF(p), with cached distance."""

    generator: np.ndarray
    check: np.ndarray
    p: int
    provenance: Provenance
    distance_value: int | None = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return int(self.generator.shape[1])

    @property
    def k(self) -> int:
        return int(self.generator.shape[0])

    def min_distance(self, *, cap: int | None = None, threads: int = 1) -> int:
        if self.distance_value is None:
            self.distance_value = _min_distance(self.generator, self.p, cap=cap, threads=threads)
        return self.distance_value

    def contains(self, y) -> bool:
        y = np.asarray(y, dtype=np.int64) % self.p
        if self.check.shape[0] == 0:
            return True
        return not np.any(linalg.matmul(self.check, y[:, None], self.p))

    def verify(self) -> None:
        """Raise if the generator/check pair is inconsistent."""
        p = self.p
        if linalg.rank(self.generator, p) != self.k:
            raise AlgebraError("generator is not of full row rank")
        if self.check.shape[0] and linalg.rank(self.check, p) != self.n - self.k:
            raise AlgebraError("check matrix is not of full row rank n - k")
        if self.check.shape[0] and np.any(linalg.matmul(self.generator, self.check.T, p)):
            raise AlgebraError("generator * check^T != 0")

    def params(self) -> str:
        d = "?" if self.distance_value is None else str(self.distance_value)
        return f"({self.n},{self.k},{d})"


@dataclass(frozen=True)
class CheckElements:
    principal: GroupRingElement | None
    general: tuple[GroupRingElement, ...]
    principal_source: str = ""


def _as_basis(S) -> SubmoduleBasis:
    return S if isinstance(S, SubmoduleBasis) else SubmoduleBasis.of(S)


def _field(u: GroupRingElement, what: str) -> int:
    return u.ring.require_field(what)


def greedy_basis(u: GroupRingElement, side: str = "right") -> SubmoduleBasis:
    """Scan encoding rows in listing order, keeping each one independent of those kept.

    For cyclic groups this is ``{1, g, ..., g^(r-1)}``; for dihedral groups
    a prefix of rotations followed by a prefix of reflections.
    """
    p = _field(u, "greedy basis")
    if u.is_zero():
        raise AlgebraError("the zero element generates the zero code")
    return SubmoduleBasis(tuple(linalg.independent_rows(encoding_matrix(u, side), p)))


def _require_independent(M: np.ndarray, S: SubmoduleBasis, p: int) -> None:
    A = M[list(S.indices)]
    keep = linalg.independent_rows(A, p)
    if len(keep) != len(S):
        sub = tuple(S.indices[i] for i in keep)
        raise DependentBasisError(
            f"S*u is linearly dependent; a maximal independent subset is {list(sub)}",
            certificate=sub,
        )


def _check_from_matrix(M: np.ndarray, S: SubmoduleBasis, p: int) -> np.ndarray:
    """Check rows for the code spanned by rows ``S`` of the encoding matrix ``M``.

    If ``|S| = rank M`` this is the kernel basis of ``M``. Otherwise ``S`` is
    extended to ``r`` independent rows ``U_r`` (S first), ``C`` is a right
    inverse of ``U_r``, and the columns of ``C`` belonging to ``S`` are
    dropped: ``D = [ker M | C_(r-s)]`` annihilates the generator and has
    rank ``n - s``.
    """
    V = linalg.null_space(M, p)
    s = len(S)
    r = M.shape[0] - V.shape[0]
    if s == r:
        return V
    stacked = np.concatenate([M[list(S.indices)], M])
    picks = linalg.independent_rows(stacked, p)
    rows = list(S.indices) + [i - s for i in picks[s:]]
    assert picks[:s] == list(range(s)) and len(rows) == r
    C = linalg.right_inverse(M[rows], p)
    D = np.concatenate([V.T, C[:, s:]], axis=1)
    return np.ascontiguousarray(D.T)


def zero_divisor_code(u: GroupRingElement, S=None, side: str = "right") -> LinearCode:
    """Code ``{x u : x in W}`` (or ``u x`` for ``side='left'``), W spanned by ``S``.

    ``S`` defaults to :func:`greedy_basis`. A dependent ``S*u`` raises
    :class:`DependentBasisError` carrying a maximal independent subset.
    """
    p = _field(u, "zero-divisor code")
    S = greedy_basis(u, side) if S is None else _as_basis(S)
    S.check_range(u.group.order)
    M = np.asarray(encoding_matrix(u, side))
    _require_independent(M, S, p)
    G = np.ascontiguousarray(M[list(S.indices)] % p)
    H = _check_from_matrix(M, S, p)
    prov = Provenance(u, S, side, "zero-divisor")
    return LinearCode(G, H, p, prov)


def check_elements(u: GroupRingElement, extra=()) -> CheckElements:
    """Annihilators of ``u`` and, if one exists, a principal check element.

    ``general`` comes from a kernel basis of sigma(u) via the first-column
    construction. The principal search tries, in order: each general
    element, the least-degree annihilator (cyclic groups), ``u`` and ``u^T``,
    then ``extra``; a candidate qualifies when ``u v = 0`` and
    ``rank sigma(v) = n - rank sigma(u)``.
    """
    p = _field(u, "check elements")
    U = sigma(u)
    K = linalg.null_space(U, p)
    if K.shape[0] == 0:
        raise NoCheckElementsError("u is a unit: no nonzero element annihilates it")
    general = tuple(element_from_first_column(x, u.group, u.ring) for x in K)
    target = K.shape[0]
    candidates: list[tuple[str, GroupRingElement]] = [("kernel", v) for v in general]
    if u.group.spec.kind == "cyclic":
        candidates.append(("euclid", poly.minimal_annihilator(u)))
    candidates += [("u", u), ("u^T", u.T)]
    candidates += [("extra", v) for v in extra]
    for src, v in candidates:
        if v.is_zero() or not (u * v).is_zero():
            continue
        if linalg.rank(sigma(v), p) == target:
            return CheckElements(v, general, src)
    return CheckElements(None, general)


def check_matrix(u: GroupRingElement, S=None, elems: CheckElements | None = None, side: str = "right") -> np.ndarray:
    """``(n-k) x n`` check matrix of the zero-divisor code of ``(u, S)``.

    ``elems`` is accepted for symmetry with the algebraic description; the
    kernel basis it is built from is recomputed here from sigma(u).
    """
    p = _field(u, "check matrix")
    S = greedy_basis(u, side) if S is None else _as_basis(S)
    M = np.asarray(encoding_matrix(u, side))
    _require_independent(M, S, p)
    return _check_from_matrix(M, S, p)


def check_code(v: GroupRingElement, T=None) -> LinearCode:
    """Code ``{y in W_T : y v = 0}``; ``T=None`` means W = RG.

    For a proper ``T`` the codewords are kernel vectors supported on ``T``.
    """
    p = _field(v, "check code")
    n = v.group.order
    V = sigma(v)
    if T is None:
        rows = list(range(n))
    else:
        T = _as_basis(T)
        T.check_range(n)
        rows = list(T.indices)
    K = linalg.left_null_space(V[rows], p)
    if K.shape[0] == 0:
        raise NotAUnitError("v is injective on W: the check code is the zero code")
    G = np.zeros((K.shape[0], n), dtype=np.int64)
    G[:, rows] = K
    outside = [i for i in range(n) if i not in set(rows)]
    constraints = np.concatenate([V.T, np.eye(n, dtype=np.int64)[outside]])
    res = linalg.rref(constraints, p)
    H = res.reduced[: res.rank]
    prov = Provenance(v, None if T is None else T, "right", "check", "generator = left kernel of sigma(v)")
    return LinearCode(G, H, p, prov)


def unit_code(
    u: GroupRingElement,
    S,
    side: str = "right",
    inverse: GroupRingElement | None = None,
) -> LinearCode:
    """Unit-derived code: rows ``S`` of the encoding matrix of ``u``.

    The check is the encoding matrix of ``u^-1`` with the ``S`` columns
    deleted, transposed. Both have full rank ``r`` and ``n - r``.
    """
    p = _field(u, "unit-derived code")
    n = u.group.order
    S = _as_basis(S)
    S.check_range(n)
    if len(S) >= n:
        raise ValueError("a unit-derived code needs |S| < n")
    if inverse is None:
        c = classify(u)
        if not c.is_unit:
            raise NotAUnitError("u is not a unit", certificate=c.witness)
        inverse = c.inverse
    elif not (u * inverse).is_one():
        raise NotAUnitError("the supplied inverse does not invert u")
    M = np.asarray(encoding_matrix(u, side))
    Minv = np.asarray(encoding_matrix(inverse, side))
    G = np.ascontiguousarray(M[list(S.indices)] % p)
    keep = S.complement(n)
    H = np.ascontiguousarray(Minv[:, keep].T % p)
    prov = Provenance(u, S, side, "unit", "check = columns of sigma(u^-1) outside S")
    return LinearCode(G, H, p, prov)


# -- duals and structure tests ------------------------------------------------


def orthogonal_complement(generator, p: int) -> np.ndarray:
    """Brute-force dual basis: the kernel of the generator."""
    return linalg.null_space(generator, p)


def dual(code: LinearCode) -> LinearCode:
    """Dual code, preferring the algebraic description.

    Unit code ``(u, S)``: rows ``G \\ S`` of sigma((u^-1)^T). Zero-divisor
    code with principal check ``v``: rows ``G \\ S`` of sigma(v^T). Every
    algebraic candidate is compared with the kernel of the generator; on a
    mismatch, or without a principal check, the kernel itself is used and
    the provenance says so.
    """
    p = code.p
    prov = code.provenance
    truth = orthogonal_complement(code.generator, p)
    cand = None
    path = "complement"
    u, S = prov.element, prov.basis
    if u is not None and S is not None and prov.side == "right":
        keep = S.complement(u.group.order)
        if prov.kind == "unit":
            inv = classify(u).inverse
            cand, elem, path = sigma(inv.T)[keep], inv.T, "unit"
        elif prov.kind == "zero-divisor":
            try:
                ce = check_elements(u)
            except NoCheckElementsError:
                ce = None
            if ce is not None and ce.principal is not None:
                cand, elem, path = sigma(ce.principal.T)[keep], ce.principal.T, "principal"
    if cand is not None and linalg.rank(cand, p) == len(cand) and linalg.row_space_equal(cand, truth, p):
        G = np.ascontiguousarray(cand % p)
        note = f"dual via {path} element"
        dual_prov = Provenance(elem, SubmoduleBasis(tuple(keep)), "right", "dual", note)
    else:
        G = truth
        note = "dual via orthogonal complement" + (f" ({path} candidate rejected)" if cand is not None else "")
        dual_prov = Provenance(None, None, prov.side, "dual", note)
    return LinearCode(G, np.ascontiguousarray(code.generator % p), p, dual_prov)


def is_self_dual_code(code: LinearCode) -> bool:
    if 2 * code.k != code.n:
        return False
    return not np.any(linalg.matmul(code.generator, code.generator.T, code.p))


@dataclass(frozen=True)
class SelfDualReport:
    u_ut_zero: bool
    u_squared_zero: bool
    rank_half: bool
    rank: int
    n: int

    @property
    def self_dual(self) -> bool:
        return self.u_ut_zero and self.rank_half

    @property
    def self_check(self) -> bool:
        return self.u_squared_zero


def is_self_dual(u: GroupRingElement) -> SelfDualReport:
    """The zero-divisor code of ``u`` is self-dual iff ``u u^T = 0`` and rank = n/2."""
    _field(u, "self-duality test")
    n = u.group.order
    r = rg_rank(u)
    return SelfDualReport(
        u_ut_zero=(u * u.T).is_zero(),
        u_squared_zero=(u * u).is_zero(),
        rank_half=2 * r == n,
        rank=r,
        n=n,
    )


def is_ideal(u: GroupRingElement, S=None, kind: str = "zero-divisor") -> bool:
    """A zero-divisor code is a left ideal iff ``rank sigma(u) = |S|``.

    Unit-derived codes (``|S| < n = rank``) are never ideals.
    """
    p = _field(u, "ideal test")
    S = greedy_basis(u) if S is None else _as_basis(S)
    _require_independent(sigma(u), S, p)
    if kind == "unit":
        return False
    return rg_rank(u) == len(S)


# -- best basis ---------------------------------------------------------------


@dataclass(frozen=True)
class BestBasis:
    basis: SubmoduleBasis | None
    distance: int
    exhaustive: bool
    evaluations: int

    @property
    def heuristic(self) -> bool:
        return not self.exhaustive


def _score(M: np.ndarray, S: tuple[int, ...], p: int, cap: int | None) -> int:
    A = M[list(S)]
    if linalg.rank(A, p) != len(S):
        return -1
    return _min_distance(A, p, cap=cap)


def best_basis(
    u: GroupRingElement,
    r: int,
    budget: int = 5000,
    *,
    seed: int = 0,
    side: str = "right",
    cap: int | None = None,
) -> BestBasis:
    """Search ``argmax_{|S|=r} d(S u)``.

    Exhaustive (lexicographic, first maximum wins) when ``C(n, r) <= budget``.
    Otherwise steepest-ascent single swaps starting from the prefix basis,
    then from seeded random bases, until ``budget`` distance evaluations are
    spent; the result is then flagged heuristic. Bases with dependent
    ``S u`` score -1.
    """
    p = _field(u, "best basis")
    n = u.group.order
    if not 1 <= r < n:
        raise ValueError(f"need 1 <= r < n, got r={r}, n={n}")
    M = np.asarray(encoding_matrix(u, side))
    if comb(n, r) <= budget:
        best_s, best_d, evals = None, -1, 0
        for S in itertools.combinations(range(n), r):
            d = _score(M, S, p, cap)
            evals += 1
            if d > best_d:
                best_s, best_d = S, d
        return BestBasis(SubmoduleBasis(best_s) if best_d >= 0 else None, best_d, True, evals)

    rng = np.random.default_rng(seed)
    cache: dict[tuple[int, ...], int] = {}

    def score(S):
        if S not in cache:
            cache[S] = _score(M, S, p, cap)
        return cache[S]

    best_s, best_d = None, -1
    start = tuple(range(r))
    while len(cache) < budget:
        cur = start
        cur_d = score(cur)
        while len(cache) < budget:
            inside = set(cur)
            moves = []
            for i in cur:
                for j in range(n):
                    if j not in inside:
                        moves.append(tuple(sorted((inside - {i}) | {j})))
            nxt, nxt_d = cur, cur_d
            for S in moves:
                if len(cache) >= budget and S not in cache:
                    break
                d = score(S)
                if d > nxt_d:
                    nxt, nxt_d = S, d
            if nxt == cur:
                break
            cur, cur_d = nxt, nxt_d
        if cur_d > best_d:
            best_s, best_d = cur, cur_d
        start = tuple(sorted(rng.choice(n, size=r, replace=False).tolist()))
    return BestBasis(SubmoduleBasis(best_s) if best_d >= 0 else None, best_d, False, len(cache))


def dual_translation(code: LinearCode) -> int | None:
    """For a unit-derived code, a group element ``h`` with ``h S = G \\ S``.

    Then the dual (rows ``G \\ S`` of sigma(u) when ``u`` is orthogonal) is the
    image of the code under the coordinate permutation ``g -> h g``: the
    two codes are equivalent, which is the sense in which unit-derived
    codes are called self-dual.
    """
    prov = code.provenance
    u, S = prov.element, prov.basis
    if prov.kind != "unit" or u is None or S is None or prov.side != "right":
        return None
    if not (u * u.T).is_one():
        return None
    group = u.group
    target = set(S.complement(group.order))
    idx = np.array(S.indices)
    for h in range(group.order):
        if set(group.mul_array(np.full(len(idx), h), idx).tolist()) == target:
            return h
    return None
