"""Fixed subgroups of tuples of automorphisms of Z^m x F_n.

The free parts of the fixed subgroups of the underlying free-group maps are
trusted inputs (computing them in general needs train-track machinery); this
module handles everything on top: the abelian constraints, finite
generation, bases, periodic subgroups and auto-fixed closures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from . import freewords, morphisms
from .fatfcore import (
    Ambient,
    GroupElement,
    SubgroupBasis,
    _check_same,
    member,
    subgroup_equal,
)
from .freewords import Word, reduce_word
from .intlat import (
    IntMatrix,
    Lattice,
    image_lattice,
    kernel_lattice,
    lattice_index,
    lattice_intersect,
    lattice_preimage,
    solve_left,
    unity_exponent,
)
from .morphisms import FreeMap, Morphism


class InvalidFixInput(ValueError):
    """The supplied fixed free-bases fail verification."""


@dataclass(frozen=True)
class FixInput:
    morphisms: tuple[Morphism, ...]
    fixed_free_bases: tuple[tuple[Word, ...], ...]

    def __post_init__(self) -> None:
        if not self.morphisms:
            raise InvalidFixInput("need at least one morphism")
        if len(self.morphisms) != len(self.fixed_free_bases):
            raise InvalidFixInput("need one fixed free-basis per morphism")
        ambient = self.morphisms[0].ambient
        object.__setattr__(self, "morphisms", tuple(self.morphisms))
        bases = []
        for psi, basis in zip(self.morphisms, self.fixed_free_bases):
            _check_same(ambient, psi.ambient)
            words = tuple(reduce_word(w, ambient.n) for w in basis)
            for w in words:
                if psi.phi.apply(w) != w:
                    raise InvalidFixInput(
                        f"word {freewords.format_word(w)!r} is not fixed by its map"
                    )
            if freewords.stallings(words, ambient.n).rank != len(words):
                raise InvalidFixInput("a fixed free-basis is not a free basis")
            bases.append(words)
        object.__setattr__(self, "fixed_free_bases", tuple(bases))

    @property
    def ambient(self) -> Ambient:
        return self.morphisms[0].ambient


@dataclass(frozen=True)
class FixDiagnostics:
    im_rho: Lattice
    im_P: Lattice
    M: Lattice
    N: Lattice
    preimage: Optional[Lattice]
    ell: object  # int or math.inf


@dataclass(frozen=True)
class FixResult:
    finitely_generated: bool
    basis: Optional[SubgroupBasis]
    diagnostics: FixDiagnostics


def fix_tuple(inp: FixInput) -> FixResult:
    ambient = inp.ambient
    m, n = ambient.m, ambient.n
    k = len(inp.morphisms)

    graph = freewords.stallings(inp.fixed_free_bases[0], n)
    for basis in inp.fixed_free_bases[1:]:
        graph = freewords.pullback(graph, freewords.stallings(basis, n))
    v_words = graph.basis_words
    p = len(v_words)

    eye = IntMatrix.identity(m)
    Qt = IntMatrix.hstack([eye - psi.Q for psi in inp.morphisms])
    Pt = IntMatrix.hstack([psi.P for psi in inp.morphisms])

    im_rho = Lattice.from_rows([freewords.abelianize(w, n) for w in v_words], n)
    im_P = Lattice.from_rows(
        [Pt.apply_row(r) for r in im_rho.basis.entries], k * m
    )
    M = image_lattice(Qt)
    N = lattice_intersect(M, im_P)
    kernel = kernel_lattice(Qt)

    if N.rank == im_P.rank:
        preimage = lattice_preimage(im_rho, Pt, N)
        ell = lattice_index(preimage, im_rho)
        assert ell != math.inf

        def in_subgroup(abstract: Word) -> bool:
            w: Word = ()
            for a in abstract:
                g = v_words[abs(a) - 1]
                w = freewords.multiply(w, g if a > 0 else freewords.invert(g))
            return preimage.contains(freewords.abelianize(w, n))

        u_words = freewords.schreier_basis(v_words, in_subgroup, int(ell))
        free_part = []
        for u in u_words:
            rhs = Pt.apply_row(freewords.abelianize(u, n))
            e = solve_left(Qt, rhs)
            if e is None:
                raise InvalidFixInput("inconsistent fixed free-bases: unsolvable system")
            free_part.append((e, u))
        basis = SubgroupBasis(ambient, free_part, kernel)
        result = FixResult(True, basis, FixDiagnostics(im_rho, im_P, M, N, preimage, ell))
    elif p == 1:
        # cyclic free intersection whose generator picks up a nonzero abelian
        # defect: no power of it extends to a fixed element, so only the
        # abelian kernel survives
        basis = SubgroupBasis(ambient, [], kernel)
        result = FixResult(True, basis, FixDiagnostics(im_rho, im_P, M, N, None, math.inf))
    else:
        result = FixResult(False, None, FixDiagnostics(im_rho, im_P, M, N, None, math.inf))

    if result.finitely_generated:
        assert result.basis is not None
        for g in result.basis.basis_elements():
            for psi in inp.morphisms:
                assert morphisms.apply(psi, g) == g, "computed basis element not fixed"
    return result


def fix_single(psi: Morphism, fix_phi_basis: Sequence[Word]) -> FixResult:
    return fix_tuple(FixInput((psi,), (tuple(fix_phi_basis),)))


def fixed_basis_letter_map(phi: FreeMap) -> Optional[list[Word]]:
    """Exact fixed free-basis when every generator maps to a single letter."""
    targets = phi.letter_targets()
    if targets is None:
        return None
    if sorted(abs(t) for t in targets) != list(range(1, phi.n + 1)):
        return None
    # a signed-permutation map sends each reduced word to a reduced word
    # letter by letter, so a word is fixed iff each letter is
    return [(i,) for i, t in enumerate(targets, start=1) if t == i]


def periodic_exponent(psi: Morphism) -> int:
    """Exponent e with Per psi = Fix psi^e, for phi of finite order."""
    r1 = psi.phi.order()
    if r1 == math.inf:
        raise ValueError("periodic exponent needs a finite-order free map")
    return math.lcm(int(r1), unity_exponent(psi.Q))


def periodic_subgroup(psi: Morphism) -> FixResult:
    e = periodic_exponent(psi)
    pe = morphisms.power(psi, e)
    assert pe.phi.is_identity()
    full_basis = [(i,) for i in range(1, psi.ambient.n + 1)]
    return fix_single(pe, full_basis)


def autofixed_closure(H: SubgroupBasis, stab_gens: FixInput) -> FixResult:
    _check_same(H.ambient, stab_gens.ambient)
    for psi in stab_gens.morphisms:
        for g in H.basis_elements():
            if morphisms.apply(psi, g) != g:
                raise ValueError("a stabilizer generator does not fix the subgroup")
    result = fix_tuple(stab_gens)
    if result.finitely_generated:
        assert result.basis is not None
        for g in H.basis_elements():
            assert member(result.basis, g), "closure must contain the subgroup"
    return result


def is_autofixed(H: SubgroupBasis, stab_gens: FixInput) -> bool:
    result = autofixed_closure(H, stab_gens)
    if not result.finitely_generated:
        return False
    assert result.basis is not None
    return subgroup_equal(H, result.basis)
