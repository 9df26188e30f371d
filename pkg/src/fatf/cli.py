"""Command-line front end: JSON in on stdin, JSON out on stdout.

Exit codes: 0 success, 2 validation error (structured JSON error on stdout),
64 unknown subcommand, 65 malformed JSON.
"""

from __future__ import annotations

import json
import math
import sys
from typing import Any, Optional

from . import bounds as bounds_mod
from . import fixpoint, jsonio, morphisms, oracle
from .fatfcore import Ambient, member, subgroup_basis, subgroup_equal
from .jsonio import FormatError

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_UNKNOWN = 64
EXIT_BAD_JSON = 65

SUBCOMMANDS = (
    "basis",
    "member",
    "fix",
    "per",
    "order",
    "closure",
    "constants",
    "oracle-check",
)


def _dump(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _ambient(payload: dict) -> Ambient:
    try:
        m = int(payload["m"])
        n = int(payload["n"])
    except (KeyError, TypeError, ValueError):
        raise FormatError("payload needs integer fields m and n") from None
    try:
        return Ambient(m, n)
    except ValueError as e:
        raise FormatError(str(e)) from None


def _fix_input(payload: dict, ambient: Ambient) -> fixpoint.FixInput:
    morph_obj = payload.get("morphisms")
    bases_obj = payload.get("fixed_bases")
    if not isinstance(morph_obj, list) or not isinstance(bases_obj, list):
        raise FormatError("payload needs lists morphisms and fixed_bases")
    maps = tuple(jsonio.morphism_from_json(o, ambient) for o in morph_obj)
    bases = []
    for b in bases_obj:
        if not isinstance(b, list):
            raise FormatError("each fixed basis must be a list of words")
        bases.append(tuple(jsonio.word_from_json(w, ambient.n) for w in b))
    try:
        return fixpoint.FixInput(maps, tuple(bases))
    except fixpoint.InvalidFixInput as e:
        raise FormatError(str(e)) from None


def _cmd_basis(payload: dict) -> dict:
    ambient = _ambient(payload)
    gens_obj = payload.get("generators")
    if not isinstance(gens_obj, list):
        raise FormatError("payload needs a list of generators")
    gens = [jsonio.element_from_json(o, ambient) for o in gens_obj]
    H = subgroup_basis(gens, ambient)
    return {"ok": True, "basis": jsonio.subgroup_to_json(H)}


def _cmd_member(payload: dict) -> dict:
    ambient = _ambient(payload)
    H = jsonio.subgroup_from_json(payload.get("subgroup"), ambient)
    g = jsonio.element_from_json(payload.get("element"), ambient)
    return {"ok": True, "member": member(H, g)}


def _cmd_fix(payload: dict) -> dict:
    ambient = _ambient(payload)
    inp = _fix_input(payload, ambient)
    res = fixpoint.fix_tuple(inp)
    return {"ok": True, "result": jsonio.fix_result_to_json(res)}


def _cmd_per(payload: dict) -> dict:
    ambient = _ambient(payload)
    psi = jsonio.morphism_from_json(payload.get("morphism"), ambient)
    try:
        e = fixpoint.periodic_exponent(psi)
    except ValueError as err:
        raise FormatError(str(err)) from None
    res = fixpoint.periodic_subgroup(psi)
    return {"ok": True, "exponent": str(e), "result": jsonio.fix_result_to_json(res)}


def _cmd_order(payload: dict) -> dict:
    ambient = _ambient(payload)
    psi = jsonio.morphism_from_json(payload.get("morphism"), ambient)
    if psi.phi.inverse_images is None:
        raise FormatError("order needs a morphism with inverse images")
    try:
        k = morphisms.order(psi)
    except ValueError as err:
        raise FormatError(str(err)) from None
    return {"ok": True, "order": "inf" if k == math.inf else str(k)}


def _cmd_closure(payload: dict) -> dict:
    ambient = _ambient(payload)
    H = jsonio.subgroup_from_json(payload.get("subgroup"), ambient)
    inp = _fix_input(payload, ambient)
    try:
        res = fixpoint.autofixed_closure(H, inp)
    except ValueError as err:
        raise FormatError(str(err)) from None
    auto = (
        res.finitely_generated
        and res.basis is not None
        and subgroup_equal(H, res.basis)
    )
    return {
        "ok": True,
        "result": jsonio.fix_result_to_json(res),
        "autofixed": auto,
    }


def _cmd_constants(argv: list[str]) -> dict:
    m = n = None
    it = iter(argv)
    for flag in it:
        if flag == "--m":
            m = next(it, None)
        elif flag == "--n":
            n = next(it, None)
        else:
            raise FormatError(f"unknown flag {flag!r}")
    if m is None or n is None:
        raise FormatError("constants needs --m and --n")
    try:
        report = bounds_mod.constants(int(m), int(n))
    except ValueError as e:
        raise FormatError(str(e)) from None
    return {
        "ok": True,
        "m": str(report.m),
        "n": str(report.n),
        "C": str(report.C),
        "L1": str(report.L1),
        "L3": str(report.L3),
        "free_per": str(report.free_per),
        "C1": str(report.C1),
        "C3": str(report.C3),
    }


def _cmd_oracle_check(payload: dict) -> dict:
    ambient = _ambient(payload)
    inp = _fix_input(payload, ambient)
    b_obj = payload.get("bounds")
    if not isinstance(b_obj, dict):
        raise FormatError("payload needs a bounds object")
    try:
        bnds = oracle.Bounds(
            int(b_obj.get("word_len_max", 0)), int(b_obj.get("coord_abs_max", 0))
        )
    except (TypeError, ValueError) as e:
        raise FormatError(str(e)) from None
    fixed = oracle.brute_fixed(list(inp.morphisms), bnds)
    res = fixpoint.fix_tuple(inp)
    if res.finitely_generated:
        assert res.basis is not None
        contained = all(member(res.basis, g) for g in fixed)
    else:
        contained = None
    return {
        "ok": True,
        "fixed": [jsonio.element_to_json(g) for g in fixed],
        "fg": res.finitely_generated,
        "contained": contained,
    }


def run(argv: list[str], stdin: str) -> tuple[int, str]:
    if not argv or argv[0] not in SUBCOMMANDS:
        return EXIT_UNKNOWN, _dump({"ok": False, "error": "unknown subcommand"})
    cmd = argv[0]
    if cmd == "constants":
        try:
            return EXIT_OK, _dump(_cmd_constants(argv[1:]))
        except FormatError as e:
            return EXIT_VALIDATION, _dump({"ok": False, "error": str(e)})
    try:
        payload = json.loads(stdin) if stdin.strip() else {}
    except json.JSONDecodeError as e:
        return EXIT_BAD_JSON, _dump({"ok": False, "error": f"malformed JSON: {e}"})
    if not isinstance(payload, dict):
        return EXIT_BAD_JSON, _dump({"ok": False, "error": "payload must be an object"})
    handler = {
        "basis": _cmd_basis,
        "member": _cmd_member,
        "fix": _cmd_fix,
        "per": _cmd_per,
        "order": _cmd_order,
        "closure": _cmd_closure,
        "oracle-check": _cmd_oracle_check,
    }[cmd]
    try:
        return EXIT_OK, _dump(handler(payload))
    except FormatError as e:
        return EXIT_VALIDATION, _dump({"ok": False, "error": str(e)})


def main() -> None:
    code, out = run(sys.argv[1:], sys.stdin.read() if not sys.stdin.isatty() else "")
    sys.stdout.write(out)
    sys.exit(code)
