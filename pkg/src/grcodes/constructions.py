"""Named code families: cyclic, dihedral, orthogonal units, self-dual, LDPC."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from grcodes import linalg, poly
from grcodes.codes import (
    LinearCode,
    Provenance,
    SubmoduleBasis,
    greedy_basis,
    unit_code,
    zero_divisor_code,
)
from grcodes.errors import AlgebraError, NotAUnitError
from grcodes.groupring import GF2, GroupRingElement, RingSpec, parse_element
from grcodes.groups import Group, cyclic, dihedral, make_group, product
from grcodes.poly import euclid_inverse
from grcodes.rgmatrix import classify, rg_rank, sigma

__all__ = [
    "PolyPair",
    "cyclic_code",
    "euclid_inverse",
    "DihedralBlocks",
    "dihedral_blocks",
    "DihedralDouble",
    "dihedral_double",
    "rate_half_dihedral",
    "orthogonal_unit",
    "selfdual_family",
    "LdpcPlan",
    "random_plan",
    "LdpcResult",
    "qc_ldpc",
    "ldpc_unit_example",
]


# -- cyclic -------------------------------------------------------------------


@dataclass(frozen=True)
class PolyPair:
    """``d = gcd(h, x^n - 1)`` and ``p = (x^n - 1) / d`` as elements of ``R C_n``."""

    generator: GroupRingElement
    check: GroupRingElement
    generator_poly: tuple[int, ...]
    check_poly: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.generator_poly) - 1


def cyclic_code(h: GroupRingElement) -> tuple[PolyPair, LinearCode]:
    """Cyclic code generated by ``h``: the zero-divisor code of its gcd with ``x^n - 1``.

    The basis is ``{1, g, ..., g^(n - deg d - 1)}``; the check matrix built
    from the kernel is cross-checked against the one read off sigma(p).
    """
    p = h.ring.require_field("cyclic code")
    if h.group.spec.kind != "cyclic":
        raise ValueError(f"cyclic codes need a cyclic group, not {h.group}")
    n = h.group.order
    m = poly.x_n_minus_1(n, p)
    d = poly.gcd(poly.from_element(h), m, p)
    if len(d) == n + 1:
        raise AlgebraError("h is a multiple of x^n - 1: the code is zero")
    q, rem = poly.divmod_(m, d, p)
    assert not rem.size
    d_el = poly.to_element(d, h.group, h.ring)
    q_el = poly.to_element(q, h.group, h.ring)
    pair = PolyPair(d_el, q_el, tuple(int(c) for c in d), tuple(int(c) for c in q))
    k = n - (len(d) - 1)
    code = zero_divisor_code(d_el, SubmoduleBasis.first(k))
    # y is a codeword iff y p = 0, i.e. sigma(p)^T is a (redundant) check matrix
    if code.check.shape[0] and not linalg.row_space_equal(code.check, sigma(q_el).T, p):
        raise AlgebraError("check from sigma(p) disagrees with the kernel check")
    note = f"cyclic: d = gcd(h, x^{n} - 1) of degree {len(d) - 1}"
    code.provenance = Provenance(d_el, code.provenance.basis, "right", "zero-divisor", note)
    return pair, code


# -- dihedral -----------------------------------------------------------------


def _half(group: Group) -> int:
    if group.spec.kind != "dihedral":
        raise ValueError(f"expected a dihedral group, not {group}")
    return group.spec.n


@dataclass(frozen=True)
class DihedralBlocks:
    """``sigma(u) = [[A, B], [B, A]]`` with ``A`` circulant and ``B`` reverse circulant."""

    A: np.ndarray
    B: np.ndarray
    is_unit: bool
    method: str


def dihedral_blocks(u: GroupRingElement) -> DihedralBlocks:
    """Split sigma(u) and decide whether ``u`` is a unit.

    Over GF(p) with p odd and over Z, ``u`` is a unit iff ``A + B`` and
    ``A - B`` both are. Characteristic 2 is outside that criterion, so GF(2)
    falls back to the rank of sigma(u).
    """
    n = _half(u.group)
    U = sigma(u)
    A, B = U[:n, :n], U[:n, n:]
    ring = u.ring
    if ring.is_field and ring.p == 2:
        return DihedralBlocks(A, B, linalg.rank(U, 2) == 2 * n, "rank sigma(u)")
    if ring.is_field:
        p = ring.p
        ok = linalg.rank((A + B) % p, p) == n and linalg.rank((A - B) % p, p) == n
        return DihedralBlocks(A, B, ok, "A+B and A-B invertible")
    ok = linalg.det_integer(A + B) in (1, -1) and linalg.det_integer(A - B) in (1, -1)
    return DihedralBlocks(A, B, ok, "det(A+B), det(A-B) = +-1")


def _embed(z: GroupRingElement, D: Group, reflect: bool = False) -> GroupRingElement:
    """``z`` in ``R C_n`` as ``z`` (rotations ``b^i``) or ``a z`` in ``R D_2n``."""
    n = z.group.order
    c = np.zeros(2 * n, dtype=z.ring.dtype)
    if reflect:
        c[n:] = z.coeffs
    else:
        c[:n] = z.coeffs
    return GroupRingElement(D, z.ring, c)


@dataclass(frozen=True)
class DihedralDouble:
    element: GroupRingElement
    annihilator: GroupRingElement
    basis: SubmoduleBasis
    code: LinearCode


def dihedral_double(
    u: GroupRingElement,
    x: GroupRingElement | None = None,
    y: GroupRingElement | None = None,
    v: GroupRingElement | None = None,
) -> DihedralDouble:
    """``w = u + a x u`` in ``R D_2n`` and its code; ``x = y = 1`` by default.

    With ``u v = 0`` in ``R C_n``, ``(u + a x u)(v + a y v^T) = 0``. If ``v`` is
    not given it is the least-degree annihilator of ``u``; when ``u`` is a
    unit (possible over GF(2), where ``u + a u`` is still a zero-divisor) the
    annihilator comes from the classification witness instead.
    """
    u.ring.require_field("dihedral double")
    if u.group.spec.kind != "cyclic":
        raise ValueError("dihedral_double takes an element of a cyclic group ring")
    n = u.group.order
    D = dihedral(n)
    one = GroupRingElement.one(u.group, u.ring)
    x = one if x is None else x
    y = one if y is None else y
    w = _embed(u, D) + _embed(x * u, D, reflect=True)
    if v is None and not classify(u).is_unit:
        v = poly.minimal_annihilator(u)
    if v is not None:
        if not (u * v).is_zero():
            raise AlgebraError("v does not annihilate u")
        ann = _embed(v, D) + _embed(y * v.T, D, reflect=True)
    else:
        c = classify(w)
        if c.is_unit:
            raise AlgebraError("u + a x u is a unit; no zero-divisor code")
        ann = c.witness
    if not (w * ann).is_zero():
        raise AlgebraError("annihilator check failed")
    S = greedy_basis(w)
    code = zero_divisor_code(w, S)
    return DihedralDouble(w, ann, S, code)


def rate_half_dihedral(n: int, ring: RingSpec = GF2) -> tuple[GroupRingElement, GroupRingElement, LinearCode]:
    """``u = 1 + a + ab + ... + ab^(n-2)`` in ``D_2n`` (n even), with generator ``(I_n | B)``.

    Returns ``(u, v, code)`` where ``v = b + ... + b^(n-1) + ab^(n-1)``
    satisfies ``u v = 0`` and rank ``n``; the check matrix is read from
    sigma(v), since ``y`` is a codeword iff ``y v = 0``.
    """
    if n < 2 or n % 2:
        raise ValueError("the rate-1/2 dihedral family needs n even")
    p = ring.require_field("rate-1/2 dihedral code")
    D = dihedral(n)
    cu = np.zeros(2 * n, dtype=np.int64)
    cu[0] = 1
    cu[n : 2 * n - 1] = 1
    cv = np.zeros(2 * n, dtype=np.int64)
    cv[1:n] = 1
    cv[2 * n - 1] = 1
    u = GroupRingElement(D, ring, cu)
    v = GroupRingElement(D, ring, cv)
    if not (u * v).is_zero():
        raise AlgebraError(f"u v != 0 over {ring}")
    if rg_rank(u) != n or rg_rank(v) != n:
        raise AlgebraError("rank sigma(u) or rank sigma(v) differs from n")
    code = zero_divisor_code(u, SubmoduleBasis.first(n))
    res = linalg.rref(sigma(v).T, p)
    code.check = res.reduced[: res.rank]
    code.provenance = Provenance(u, code.provenance.basis, "right", "zero-divisor", "check = sigma(v)^T, v principal")
    code.verify()
    return u, v, code


# -- units --------------------------------------------------------------------


def orthogonal_unit(n: int, indices) -> GroupRingElement:
    """``a = 1 + sum_{i in I} u_i`` in ``GF(2) C_2n`` with ``u_i = g^i + g^(n-i) + g^(n+i) + g^(2n-i)``.

    ``i = n/2`` makes the terms of ``u_i`` cancel in pairs and ``i``, ``n - i``
    give the same ``u_i``; both are rejected. The result is checked to
    satisfy ``a^2 = a a^T = 1``.
    """
    idx = sorted(int(i) for i in indices)
    if len(set(idx)) != len(idx):
        raise ValueError("indices must be distinct")
    for i in idx:
        if not 1 <= i < n:
            raise ValueError(f"index {i} outside 1..{n - 1}")
        if 2 * i == n:
            raise ValueError(f"index {i} = n/2 collapses u_i to zero")
        if n - i in idx and n - i != i:
            raise ValueError(f"indices {i} and {n - i} give the same u_i")
    G = cyclic(2 * n)
    c = np.zeros(2 * n, dtype=np.int64)
    c[0] = 1
    for i in idx:
        for e in (i, n - i, n + i, 2 * n - i):
            c[e % (2 * n)] += 1
    a = GroupRingElement(G, GF2, c)
    if not (a * a).is_one() or not (a * a.T).is_one():
        raise AlgebraError(f"orthogonal unit check failed for n={n}, I={idx}")
    return a


def selfdual_family() -> tuple[GroupRingElement, LinearCode]:
    """``u = 1 + h(a + a^2 + a^3)`` in ``GF(2)(C_2 x C_4)`` and its (8,4,4) self-dual code."""
    G = make_group("C2xC4")
    u = parse_element("1 + h(a + a^2 + a^3)", G, GF2)
    if not ((u * u).is_zero() and (u * u.T).is_zero() and rg_rank(u) == 4):
        raise AlgebraError("self-dual conditions fail")
    return u, zero_divisor_code(u)


# -- LDPC ---------------------------------------------------------------------


@dataclass(frozen=True)
class LdpcPlan:
    """QC-LDPC recipe: base group ``G`` (order m), label group ``H`` (order k),
    ``f[t]`` = index in ``G`` assigned to the ``t``-th element of ``H``, and
    the ``j`` block-rows (indices into ``H``) kept in the check matrix.
    """

    base: Group
    labels: Group
    f: tuple[int, ...]
    rows: tuple[int, ...]
    seed: int | None = None

    def __post_init__(self):
        k = self.labels.order
        if len(self.f) != k:
            raise ValueError(f"f needs one entry per label element ({k}), got {len(self.f)}")
        if any(not 0 <= x < self.base.order for x in self.f):
            raise ValueError("f values must index the base group")
        j = len(self.rows)
        if not 1 <= j < k:
            raise ValueError(f"need 1 <= j < k, got j={j}, k={k}")
        if len(set(self.rows)) != j or any(not 0 <= r < k for r in self.rows):
            raise ValueError("block rows must be distinct label indices")

    @property
    def m(self) -> int:
        return self.base.order

    @property
    def k(self) -> int:
        return self.labels.order

    @property
    def j(self) -> int:
        return len(self.rows)


def random_plan(m: int, labels: Group | str | int, j: int, seed: int = 0) -> LdpcPlan:
    """Seeded plan over ``G = C_m``; ``f`` is uniform, block rows a random ``j``-subset."""
    H = cyclic(labels) if isinstance(labels, int) else make_group(labels) if isinstance(labels, str) else labels
    rng = np.random.default_rng(seed)
    f = tuple(int(x) for x in rng.integers(0, m, size=H.order))
    rows = tuple(sorted(int(x) for x in rng.choice(H.order, size=j, replace=False)))
    return LdpcPlan(cyclic(m), H, f, rows, seed)


@dataclass
class LdpcResult:
    plan: LdpcPlan
    element: GroupRingElement
    check_full: np.ndarray
    code: LinearCode

    @property
    def target_rate(self) -> float:
        return 1 - self.plan.j / self.plan.k

    @property
    def exact_rate(self) -> float:
        return self.code.k / self.code.n


def qc_ldpc(plan: LdpcPlan) -> LdpcResult:
    """Check matrix from ``v = sum_h (h, f(h))`` in ``GF(2)(H x G)``.

    With ``H`` the slow factor, sigma(v) is a k x k grid of m x m blocks and
    block ``(s, t)`` is the permutation matrix of ``f(h_s^-1 h_t)``. The
    ``j`` chosen block-rows form a ``jm x km`` matrix with ``k`` ones per row
    and ``j`` per column. The generator spans its kernel, so the rate is at
    least ``1 - j/k``.
    """
    m, k = plan.m, plan.k
    GH = product(plan.labels, plan.base)
    support = [t * m + plan.f[t] for t in range(k)]
    v = GroupRingElement.from_support(GH, GF2, support)
    V = sigma(v)
    sel = np.concatenate([np.arange(r * m, (r + 1) * m) for r in plan.rows])
    Hc = np.ascontiguousarray(V[sel])
    if np.any(Hc.sum(axis=1) != k) or np.any(Hc.sum(axis=0) != plan.j):
        raise AlgebraError("LDPC check matrix is not (j, k)-regular")
    for bi in range(plan.j):
        for bj in range(k):
            blk = Hc[bi * m : (bi + 1) * m, bj * m : (bj + 1) * m]
            if np.any(blk.sum(axis=0) != 1) or np.any(blk.sum(axis=1) != 1):
                raise AlgebraError(f"block ({bi}, {bj}) is not a permutation matrix")
    G = linalg.null_space(Hc, 2)
    res = linalg.rref(Hc, 2)
    note = f"qc-ldpc m={m} k={k} j={plan.j} seed={plan.seed}"
    code = LinearCode(G, res.reduced[: res.rank], 2, Provenance(v, None, "right", "ldpc", note))
    return LdpcResult(plan, v, Hc, code)


def ldpc_unit_example(
    n: int, offsets=(1, 3, 8, 12), stride: int = 2
) -> tuple[GroupRingElement, GroupRingElement, LinearCode]:
    """Unit-derived LDPC code with sparse check element ``v = 1 + sum g^(n - o)``.

    ``u = v^-1`` by Euclid generates; W is spanned by ``{1, g^stride, ...}``.
    The check is sigma(v) with the W columns deleted, transposed, so every
    check row has weight ``wt(v)``. Returns ``(v, u, code)``.
    """
    G = cyclic(n)
    c = np.zeros(n, dtype=np.int64)
    c[0] = 1
    for o in offsets:
        c[(n - o) % n] += 1
    v = GroupRingElement(G, GF2, c)
    try:
        u = euclid_inverse(v)
    except NotAUnitError as exc:
        raise NotAUnitError(f"v is not a unit in GF(2)C_{n}", certificate=exc.certificate) from None
    S = SubmoduleBasis(tuple(range(0, n, stride)))
    code = unit_code(u, S, inverse=v)
    return v, u, code
