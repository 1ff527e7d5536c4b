"""Dense univariate polynomials over GF(p), lowest degree first.

Used for the cyclic group ring ``GF(p)C_n ~ GF(p)[x]/(x^n - 1)``.
"""

from __future__ import annotations

import numpy as np

from grcodes.errors import NotAUnitError, UnsupportedRingError
from grcodes.groupring import GroupRingElement
from grcodes.groups import Group


def trim(a) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    nz = np.flatnonzero(a)
    return a[: nz[-1] + 1].copy() if nz.size else np.zeros(0, dtype=np.int64)


def degree(a) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(trim(a)) - 1


def add(a, b, p: int) -> np.ndarray:
    n = max(len(a), len(b))
    out = np.zeros(n, dtype=np.int64)
    out[: len(a)] += a
    out[: len(b)] += b
    return trim(out % p)


def sub(a, b, p: int) -> np.ndarray:
    return add(a, (-np.asarray(b, dtype=np.int64)) % p, p)


def mul(a, b, p: int) -> np.ndarray:
    a, b = trim(a), trim(b)
    if not a.size or not b.size:
        return np.zeros(0, dtype=np.int64)
    out = np.zeros(len(a) + len(b) - 1, dtype=np.int64)
    for i in np.flatnonzero(a):
        out[i : i + len(b)] = (out[i : i + len(b)] + a[i] * b) % p
    return trim(out)


def divmod_(a, b, p: int) -> tuple[np.ndarray, np.ndarray]:
    a, b = trim(a) % p, trim(b) % p
    if not b.size:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    lead_inv = pow(int(b[-1]), -1, p)
    r = a.copy()
    q = np.zeros(max(len(a) - db, 1), dtype=np.int64)
    for k in range(len(a) - 1 - db, -1, -1):
        c = int(r[k + db]) * lead_inv % p
        if c:
            q[k] = c
            r[k : k + db + 1] = (r[k : k + db + 1] - c * b) % p
    return trim(q), trim(r[:db] if db else np.zeros(0, dtype=np.int64))


def monic(a, p: int) -> np.ndarray:
    a = trim(a)
    if not a.size:
        return a
    return a * pow(int(a[-1]), -1, p) % p


def gcd(a, b, p: int) -> np.ndarray:
    """Monic gcd."""
    return xgcd(a, b, p)[0]


def xgcd(a, b, p: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``(g, s, t)`` with ``s a + t b = g`` and ``g`` monic (or zero)."""
    r0, r1 = trim(a) % p, trim(b) % p
    s0, s1 = np.array([1], dtype=np.int64), np.zeros(0, dtype=np.int64)
    t0, t1 = np.zeros(0, dtype=np.int64), np.array([1], dtype=np.int64)
    while r1.size:
        q, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0.size:
        return r0, s0, t0
    c = pow(int(r0[-1]), -1, p)
    return r0 * c % p, trim(s0 * c % p), trim(t0 * c % p)


def x_n_minus_1(n: int, p: int) -> np.ndarray:
    out = np.zeros(n + 1, dtype=np.int64)
    out[0] = p - 1 if p > 1 else 0
    out[n] = 1
    return trim(out % p)


def _cyclic_order(group: Group) -> int:
    if group.spec.kind != "cyclic":
        raise ValueError(f"polynomial view needs a cyclic group, not {group}")
    return group.order


def from_element(u: GroupRingElement) -> np.ndarray:
    """Coefficient of ``g^i`` becomes the coefficient of ``x^i``."""
    _cyclic_order(u.group)
    if not u.ring.is_field:
        raise UnsupportedRingError("polynomial arithmetic is implemented over GF(p) only")
    return trim(u.coeffs)


def to_element(a, group: Group, ring) -> GroupRingElement:
    """Reduce ``a`` modulo ``x^n - 1`` and read it as an element of ``R C_n``."""
    n = _cyclic_order(group)
    out = np.zeros(n, dtype=np.int64)
    a = trim(a)
    for i in np.flatnonzero(a):
        out[i % n] += a[i]
    return GroupRingElement(group, ring, out)


def euclid_inverse(u: GroupRingElement) -> GroupRingElement:
    """Inverse in ``GF(p)C_n`` from the extended Euclidean algorithm on ``(u, x^n - 1)``.

    Raises :class:`NotAUnitError` carrying ``gcd(u, x^n - 1)`` (as an element)
    when the gcd is not 1; that gcd is then a zero-divisor certificate.
    """
    p = u.ring.require_field("Euclid inverse")
    n = _cyclic_order(u.group)
    g, s, _ = xgcd(from_element(u), x_n_minus_1(n, p), p)
    if len(g) != 1:
        cert = to_element(g, u.group, u.ring) if len(g) <= n else None
        raise NotAUnitError(f"gcd(u, x^{n} - 1) has degree {len(g) - 1}", certificate=cert)
    return to_element(s, u.group, u.ring)


def minimal_annihilator(u: GroupRingElement) -> GroupRingElement:
    """Least-degree ``v`` with ``u v = 0`` in ``GF(p)C_n``: ``(x^n - 1) / gcd(u, x^n - 1)``."""
    p = u.ring.require_field("annihilator")
    n = _cyclic_order(u.group)
    m = x_n_minus_1(n, p)
    d = gcd(from_element(u), m, p)
    q, r = divmod_(m, d, p)
    assert not r.size
    return to_element(q, u.group, u.ring)
