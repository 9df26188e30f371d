"""Shared random object builders for the test suite.

Finite-order inputs are built by conjugating letter-permutation data, which
keeps exact fixed bases and exact orders available for checking.
"""

from __future__ import annotations

import random
from typing import Optional

from fatf import Ambient, FreeMap, GroupElement, IntMatrix, Morphism
from fatf import morphisms as morphisms_mod
from fatf.fixpoint import fixed_basis_letter_map
from fatf.freewords import Word
from fatf.intlat import matrix_inverse


def random_word(rng: random.Random, n: int, max_len: int) -> Word:
    out: list[int] = []
    for _ in range(rng.randint(0, max_len)):
        choices = [a for a in range(-n, n + 1) if a and (not out or a != -out[-1])]
        if not choices:
            break
        out.append(rng.choice(choices))
    return tuple(out)


def random_signed_targets(rng: random.Random, n: int) -> list[int]:
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return [p if rng.random() < 0.5 else -p for p in perm]


def random_letter_map(rng: random.Random, n: int) -> FreeMap:
    return FreeMap.letter_map(random_signed_targets(rng, n), n)


def signed_perm_matrix(targets: list[int]) -> IntMatrix:
    n = len(targets)
    rows = [[0] * n for _ in range(n)]
    for i, t in enumerate(targets):
        rows[i][abs(t) - 1] = 1 if t > 0 else -1
    return IntMatrix(rows, cols=n)


def random_unimodular(rng: random.Random, m: int, steps: int = 4) -> IntMatrix:
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    for _ in range(steps if m >= 2 else 0):
        i, j = rng.randrange(m), rng.randrange(m)
        if i == j:
            continue
        c = rng.choice([-1, 1])
        for t in range(m):
            U[i][t] += c * U[j][t]
    return IntMatrix(U, cols=m)


def random_finite_order_matrix(rng: random.Random, m: int) -> IntMatrix:
    """Unimodular conjugate of a signed permutation matrix."""
    if m == 0:
        return IntMatrix.identity(0)
    S = signed_perm_matrix(random_signed_targets(rng, m))
    U = random_unimodular(rng, m)
    return matrix_inverse(U) * S * U


def random_free_aut(rng: random.Random, n: int, steps: int = 3) -> FreeMap:
    """Composition of letter maps and at most `steps` elementary maps."""
    out = random_letter_map(rng, n) if n else FreeMap.identity(0)
    for _ in range(steps if n >= 2 else 0):
        i = rng.randrange(1, n + 1)
        j = rng.choice([t for t in range(1, n + 1) if t != i])
        out = out.compose(FreeMap.nielsen(i, j, rng.choice([-1, 1]), n))
    return out


def random_matrix(rng: random.Random, rows: int, cols: int, bound: int = 2) -> IntMatrix:
    return IntMatrix(
        [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)],
        cols=cols,
    )


def random_morphism(rng: random.Random, ambient: Ambient, invertible: bool = True) -> Morphism:
    phi = random_free_aut(rng, ambient.n)
    Q = random_unimodular(rng, ambient.m) if invertible else random_matrix(
        rng, ambient.m, ambient.m
    )
    P = random_matrix(rng, ambient.n, ambient.m)
    return Morphism(ambient, phi, Q, P)


def random_finite_order_morphism(
    rng: random.Random, ambient: Ambient
) -> tuple[Morphism, list[Word], int]:
    """(psi, fixed free-basis of its free part, exact order).

    Built as a conjugate of a letter-data morphism, so both the order and
    the fixed basis transport exactly.
    """
    m, n = ambient.m, ambient.n
    targets = random_signed_targets(rng, n) if n else []
    phi0 = FreeMap.letter_map(targets, n) if n else FreeMap.identity(0)
    S = signed_perm_matrix(random_signed_targets(rng, m)) if m else IntMatrix.identity(0)
    psi0 = Morphism(ambient, phi0, S, IntMatrix.zeros(n, m))
    theta = random_morphism(rng, ambient, invertible=True)
    psi = morphisms_mod.compose(
        morphisms_mod.compose(morphisms_mod.invert(theta), psi0), theta
    )
    base = fixed_basis_letter_map(phi0) or []
    basis = [theta.phi.apply(w) for w in base]
    order0 = morphisms_mod.order(psi0)
    return psi, basis, int(order0)


def random_element(rng: random.Random, ambient: Ambient, max_len: int = 4, bound: int = 3) -> GroupElement:
    t = tuple(rng.randint(-bound, bound) for _ in range(ambient.m))
    return GroupElement(ambient, t, random_word(rng, ambient.n, max_len))
