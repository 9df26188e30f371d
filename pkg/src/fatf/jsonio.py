"""JSON wire formats.

All integers travel as decimal strings so arbitrary precision survives any
JSON implementation. Words use the text form "z1 z2^-1"; the identity is "".
"""

from __future__ import annotations

import math
from typing import Any, Optional, Sequence

from . import freewords
from .fatfcore import Ambient, GroupElement, SubgroupBasis
from .fixpoint import FixDiagnostics, FixResult
from .intlat import IntMatrix, Lattice
from .morphisms import FreeMap, Morphism


class FormatError(ValueError):
    """The JSON payload does not match the expected shape."""


def _int(s: Any) -> int:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise FormatError(f"expected a decimal string, got {s!r}")
    try:
        return int(s)
    except ValueError as e:
        raise FormatError(str(e)) from None


def vec_to_json(v: Sequence[int]) -> list[str]:
    return [str(int(x)) for x in v]


def vec_from_json(obj: Any, length: Optional[int] = None) -> tuple[int, ...]:
    if not isinstance(obj, list):
        raise FormatError("expected a list of decimal strings")
    v = tuple(_int(x) for x in obj)
    if length is not None and len(v) != length:
        raise FormatError(f"expected a vector of length {length}")
    return v


def matrix_to_json(M: IntMatrix) -> list[list[str]]:
    return [vec_to_json(r) for r in M.entries]


def matrix_from_json(obj: Any, rows: Optional[int] = None, cols: Optional[int] = None) -> IntMatrix:
    if not isinstance(obj, list):
        raise FormatError("expected a list of rows")
    data = [vec_from_json(r) for r in obj]
    if rows is not None and len(data) != rows:
        raise FormatError(f"expected {rows} rows")
    if cols is None:
        if not data:
            raise FormatError("cannot infer width of an empty matrix")
        cols = len(data[0])
    try:
        return IntMatrix(data, cols=cols)
    except ValueError as e:
        raise FormatError(str(e)) from None


def lattice_to_json(L: Lattice) -> list[list[str]]:
    return matrix_to_json(L.basis)


def lattice_from_json(obj: Any, ambient: int) -> Lattice:
    if not isinstance(obj, list):
        raise FormatError("expected a list of lattice rows")
    rows = [vec_from_json(r, ambient) for r in obj]
    return Lattice.from_rows(rows, ambient)


def word_from_json(obj: Any, n: int) -> freewords.Word:
    if not isinstance(obj, str):
        raise FormatError("expected a word string")
    try:
        return freewords.parse_word(obj, n)
    except (ValueError, freewords.LetterError) as e:
        raise FormatError(str(e)) from None


def element_to_json(g: GroupElement) -> dict:
    return {"t": vec_to_json(g.t), "w": freewords.format_word(g.w)}


def element_from_json(obj: Any, ambient: Ambient) -> GroupElement:
    if not isinstance(obj, dict):
        raise FormatError("expected an element object")
    t = vec_from_json(obj.get("t"), ambient.m)
    w = word_from_json(obj.get("w"), ambient.n)
    return GroupElement(ambient, t, w)


def subgroup_to_json(H: SubgroupBasis) -> dict:
    return {
        "free": [
            {"t": vec_to_json(a), "w": freewords.format_word(u)} for a, u in H.free_part
        ],
        "abelian": lattice_to_json(H.abelian_part),
    }


def subgroup_from_json(obj: Any, ambient: Ambient) -> SubgroupBasis:
    if not isinstance(obj, dict):
        raise FormatError("expected a subgroup object")
    free_obj = obj.get("free", [])
    if not isinstance(free_obj, list):
        raise FormatError("expected a list of free generators")
    free = []
    for e in free_obj:
        g = element_from_json(e, ambient)
        free.append((g.t, g.w))
    lattice = lattice_from_json(obj.get("abelian", []), ambient.m)
    try:
        return SubgroupBasis(ambient, free, lattice)
    except ValueError as e:
        raise FormatError(str(e)) from None


def morphism_to_json(psi: Morphism) -> dict:
    out = {
        "phi": [freewords.format_word(w) for w in psi.phi.images],
        "Q": matrix_to_json(psi.Q),
        "P": matrix_to_json(psi.P),
    }
    if psi.phi.inverse_images is not None:
        out["phi_inv"] = [freewords.format_word(w) for w in psi.phi.inverse_images]
    return out


def morphism_from_json(obj: Any, ambient: Ambient) -> Morphism:
    if not isinstance(obj, dict):
        raise FormatError("expected a morphism object")
    phi_obj = obj.get("phi")
    if not isinstance(phi_obj, list):
        raise FormatError("expected a list of generator images")
    images = [word_from_json(w, ambient.n) for w in phi_obj]
    inv_obj = obj.get("phi_inv")
    inverse = None
    if inv_obj is not None:
        if not isinstance(inv_obj, list):
            raise FormatError("expected a list of inverse images")
        inverse = [word_from_json(w, ambient.n) for w in inv_obj]
    try:
        phi = FreeMap(images, inverse, ambient.n)
    except ValueError as e:
        raise FormatError(str(e)) from None
    Q = matrix_from_json(obj.get("Q", []), rows=ambient.m, cols=ambient.m)
    P = matrix_from_json(obj.get("P", []), rows=ambient.n, cols=ambient.m)
    try:
        return Morphism(ambient, phi, Q, P)
    except ValueError as e:
        raise FormatError(str(e)) from None


def _count_to_json(x) -> str:
    return "inf" if x == math.inf else str(int(x))


def fix_result_to_json(res: FixResult) -> dict:
    d: FixDiagnostics = res.diagnostics
    out: dict = {
        "fg": res.finitely_generated,
        "diagnostics": {
            "im_rho": lattice_to_json(d.im_rho),
            "im_P": lattice_to_json(d.im_P),
            "M": lattice_to_json(d.M),
            "N": lattice_to_json(d.N),
            "preimage": lattice_to_json(d.preimage) if d.preimage is not None else None,
            "ell": _count_to_json(d.ell),
        },
    }
    if res.basis is not None:
        out["basis"] = subgroup_to_json(res.basis)
    return out
