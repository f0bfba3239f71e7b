from math import isqrt


def squarefree_decompose(n):
    """Split ``n >= 0`` as ``(s, k)`` with ``n == s * k**2`` and ``s`` squarefree.

    Trial division up to the square root; radicands here stay small.
    """
    if n < 0:
        raise ValueError("radicand must be nonnegative")
    if n == 0:
        return 0, 0
    s, k = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            k *= p ** (e // 2)
            if e % 2:
                s *= p
        p += 1 if p == 2 else 2
    return s * n, k


def is_perfect_square(n):
    return n >= 0 and isqrt(n) ** 2 == n
