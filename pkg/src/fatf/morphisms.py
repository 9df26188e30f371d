"""Automorphisms of Z^m x F_n of the form t^a u -> t^(aQ + u_ab P) (u phi).

Maps are applied on the right conceptually: compose(f, g) acts as f then g.
Free-group inverses are never computed from scratch; constructors that know
the inverse carry it along and composition tracks it.
"""

from __future__ import annotations

import math
from typing import Optional, Sequence

from . import freewords
from .fatfcore import Ambient, GroupElement, _check_same
from .freewords import Word, reduce_word
from .intlat import IntMatrix, matrix_inverse, matrix_order


class FreeMap:
    """Endomorphism of F_n given by generator images."""

    __slots__ = ("n", "images", "inverse_images")

    def __init__(
        self,
        images: Sequence[Word],
        inverse_images: Optional[Sequence[Word]] = None,
        n: Optional[int] = None,
    ):
        if n is None:
            n = len(images)
        if len(images) != n:
            raise ValueError("need one image per generator")
        self.n = n
        self.images = tuple(reduce_word(w, n) for w in images)
        if inverse_images is not None:
            inverse_images = tuple(reduce_word(w, n) for w in inverse_images)
            if len(inverse_images) != n:
                raise ValueError("need one inverse image per generator")
            back = FreeMap(inverse_images, None, n)
            for i in range(1, n + 1):
                if back.apply(self.images[i - 1]) != (i,):
                    raise ValueError("claimed inverse does not undo the map")
                if self.apply(back.images[i - 1]) != (i,):
                    raise ValueError("claimed inverse is not undone by the map")
        self.inverse_images = inverse_images

    @classmethod
    def identity(cls, n: int) -> "FreeMap":
        gens = [(i,) for i in range(1, n + 1)]
        return cls(gens, gens, n)

    @classmethod
    def letter_map(cls, targets: Sequence[int], n: Optional[int] = None) -> "FreeMap":
        """z_i -> z_|targets[i]| ^ sign(targets[i]); targets a signed permutation."""
        if n is None:
            n = len(targets)
        if sorted(abs(t) for t in targets) != list(range(1, n + 1)):
            raise ValueError("targets must be a signed permutation")
        inv = [0] * n
        for i, t in enumerate(targets, start=1):
            inv[abs(t) - 1] = i if t > 0 else -i
        return cls([(t,) for t in targets], [(t,) for t in inv], n)

    @classmethod
    def inversion(cls, n: int) -> "FreeMap":
        return cls.letter_map([-i for i in range(1, n + 1)], n)

    @classmethod
    def nielsen(cls, i: int, j: int, sign: int, n: int) -> "FreeMap":
        """z_i -> z_i z_j^sign, other generators fixed."""
        if i == j or not (1 <= i <= n) or not (1 <= j <= n) or sign not in (1, -1):
            raise ValueError("invalid elementary map parameters")
        fwd = [(k,) if k != i else (i, sign * j) for k in range(1, n + 1)]
        bwd = [(k,) if k != i else (i, -sign * j) for k in range(1, n + 1)]
        return cls(fwd, bwd, n)

    @classmethod
    def conjugation(cls, u: Word, n: int) -> "FreeMap":
        """w -> u^-1 w u."""
        u = reduce_word(u, n)
        ui = freewords.invert(u)
        fwd = [freewords.reduce_word(ui + (k,) + u) for k in range(1, n + 1)]
        bwd = [freewords.reduce_word(u + (k,) + ui) for k in range(1, n + 1)]
        return cls(fwd, bwd, n)

    def apply(self, w: Word) -> Word:
        out: Word = ()
        for a in w:
            img = self.images[abs(a) - 1]
            out = freewords.multiply(out, img if a > 0 else freewords.invert(img))
        return out

    def compose(self, other: "FreeMap") -> "FreeMap":
        """self followed by other."""
        if self.n != other.n:
            raise ValueError("composing maps of different ranks")
        images = tuple(other.apply(w) for w in self.images)
        inverse = None
        if self.inverse_images is not None and other.inverse_images is not None:
            back = FreeMap(self.inverse_images, None, self.n)
            inverse = tuple(back.apply(w) for w in other.inverse_images)
        out = FreeMap.__new__(FreeMap)
        out.n = self.n
        out.images = images
        out.inverse_images = inverse
        return out

    def invert(self) -> "FreeMap":
        if self.inverse_images is None:
            raise ValueError("no inverse images available")
        return FreeMap(self.inverse_images, self.images, self.n)

    def is_identity(self) -> bool:
        return all(w == (i,) for i, w in enumerate(self.images, start=1))

    def abelianization_matrix(self) -> IntMatrix:
        return IntMatrix(
            [freewords.abelianize(w, self.n) for w in self.images], cols=self.n
        )

    def power(self, k: int) -> "FreeMap":
        if k < 0:
            return self.invert().power(-k)
        result = FreeMap.identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result.compose(base)
            base = base.compose(base)
            k >>= 1
        return result

    def order(self):
        """Exact order in Aut(F_n), or math.inf.

        The torsion of Aut(F_n) embeds in GL_n(Z) (the kernel of the
        abelianization map is torsion-free), so the order equals the order
        of the abelianization matrix whenever that power is the identity.
        """
        s = matrix_order(self.abelianization_matrix())
        if s == math.inf:
            return math.inf
        return s if self.power(s).is_identity() else math.inf

    def letter_targets(self) -> Optional[list[int]]:
        """Signed targets when every image is a single letter, else None."""
        if all(len(w) == 1 for w in self.images):
            return [w[0] for w in self.images]
        return None

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FreeMap)
            and self.n == other.n
            and self.images == other.images
        )

    def __repr__(self) -> str:
        return f"FreeMap({[freewords.format_word(w) for w in self.images]})"


class Morphism:
    """The automorphism t^a u -> t^(aQ + u_ab P) (u phi) of Z^m x F_n."""

    __slots__ = ("ambient", "phi", "Q", "P")

    def __init__(self, ambient: Ambient, phi: FreeMap, Q: IntMatrix, P: IntMatrix):
        if phi.n != ambient.n:
            raise ValueError("free map rank disagrees with the ambient")
        if Q.rows != ambient.m or Q.cols != ambient.m:
            raise ValueError("Q must be m x m")
        if P.rows != ambient.n or P.cols != ambient.m:
            raise ValueError("P must be n x m")
        self.ambient = ambient
        self.phi = phi
        self.Q = Q
        self.P = P

    @classmethod
    def identity(cls, ambient: Ambient) -> "Morphism":
        return cls(
            ambient,
            FreeMap.identity(ambient.n),
            IntMatrix.identity(ambient.m),
            IntMatrix.zeros(ambient.n, ambient.m),
        )

    def is_identity(self) -> bool:
        return self.phi.is_identity() and self.Q.is_identity() and self.P.is_zero()

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Morphism)
            and self.ambient == other.ambient
            and self.phi == other.phi
            and self.Q == other.Q
            and self.P == other.P
        )

    def __repr__(self) -> str:
        return f"Morphism(ambient={self.ambient}, phi={self.phi!r}, Q={self.Q!r}, P={self.P!r})"


def apply(psi: Morphism, g: GroupElement) -> GroupElement:
    _check_same(psi.ambient, g.ambient)
    ab = freewords.abelianize(g.w, psi.ambient.n)
    aq = psi.Q.apply_row(g.t)
    up = psi.P.apply_row(ab)
    t = tuple(x + y for x, y in zip(aq, up))
    return GroupElement(psi.ambient, t, psi.phi.apply(g.w))


def compose(psi: Morphism, other: Morphism) -> Morphism:
    """psi followed by other: apply(compose(psi, other), g) = other(psi(g))."""
    _check_same(psi.ambient, other.ambient)
    A = psi.phi.abelianization_matrix()
    return Morphism(
        psi.ambient,
        psi.phi.compose(other.phi),
        psi.Q * other.Q,
        psi.P * other.Q + A * other.P,
    )


def invert(psi: Morphism) -> Morphism:
    phi_inv = psi.phi.invert()
    Q_inv = matrix_inverse(psi.Q)
    A_inv = matrix_inverse(psi.phi.abelianization_matrix())
    return Morphism(psi.ambient, phi_inv, Q_inv, -(A_inv * psi.P * Q_inv))


def power(psi: Morphism, k: int) -> Morphism:
    if k < 0:
        return power(invert(psi), -k)
    result = Morphism.identity(psi.ambient)
    base = psi
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def power_vector_matrix(psi: Morphism, k: int) -> IntMatrix:
    """P_k of psi^k in closed form: sum of A^i P Q^(k-1-i)."""
    if k < 0:
        raise ValueError("closed form needs k >= 0")
    A = psi.phi.abelianization_matrix()
    total = IntMatrix.zeros(psi.ambient.n, psi.ambient.m)
    for i in range(k):
        total = total + (A ** i) * psi.P * (psi.Q ** (k - 1 - i))
    return total


def order(psi: Morphism):
    """Exact order, or math.inf."""
    r1 = psi.phi.order()
    r2 = matrix_order(psi.Q)
    if r1 == math.inf or r2 == math.inf:
        return math.inf
    r3 = math.lcm(int(r1), int(r2))
    return r3 if power_vector_matrix(psi, r3).is_zero() else math.inf


def inner(ambient: Ambient, u: Word) -> Morphism:
    """Conjugation by u; the abelian part is central and unmoved."""
    return Morphism(
        ambient,
        FreeMap.conjugation(u, ambient.n),
        IntMatrix.identity(ambient.m),
        IntMatrix.zeros(ambient.n, ambient.m),
    )
