# Dense integer polynomials as ascending int lists; [] is zero.
from __future__ import annotations

from math import gcd


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def deg(a) -> int:
    return len(a) - 1


def content(a) -> int:
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def primitive(a: list[int]) -> list[int]:
    """Divide out the content and make the leading coefficient positive."""
    if not a:
        return []
    g = content(a)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return trim(out)


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder: lc(b)**(deg a - deg b + 1) * a mod b."""
    r = list(a)
    db, lb = deg(b), b[-1]
    e = deg(a) - db + 1
    while r and deg(r) >= db:
        shift, lr = deg(r) - db, r[-1]
        r = [c * lb for c in r]
        for j, c in enumerate(b):
            r[j + shift] -= lr * c
        trim(r)
        e -= 1
    if e > 0:
        f = lb**e
        r = [c * f for c in r]
    return r


def exact_div(a: list[int], b: list[int]) -> list[int] | None:
    """Quotient ``a / b`` when ``b`` divides ``a`` in Z[X], else None."""
    r = list(a)
    db, lb = deg(b), b[-1]
    if deg(r) < db:
        return [] if not r else None
    q = [0] * (deg(r) - db + 1)
    while r and deg(r) >= db:
        c, m = divmod(r[-1], lb)
        if m:
            return None
        shift = deg(r) - db
        q[shift] = c
        for j, bc in enumerate(b):
            r[j + shift] -= c * bc
        trim(r)
    return q if not r else None


def evaluate(a, x: int) -> int:
    v = 0
    for c in reversed(a):
        v = v * x + c
    return v


def derivative(a):
    return trim([i * a[i] for i in range(1, len(a))])


def primitive_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd via the primitive-part remainder sequence."""
    a, b = primitive(trim(list(a))), primitive(trim(list(b)))
    if deg(a) < deg(b):
        a, b = b, a
    while b:
        r = primitive(prem(a, b))
        a, b = b, r
    return a
