"""Loader for the embedded printed tables (data/reference.json)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from sympy.polys.matrices import DomainMatrix

from .algebraic import QuadraticSurd
from .exact import dm, parse_scalar, scalar_from_pair
from .reps import RepLabelG2


class ReferenceError(ValueError):
    """The reference file is missing a block or is malformed."""


@dataclass(frozen=True)
class PrintedRelation:
    name: str
    casimir: int
    coefficients: dict  # q name -> QQ_I scalar, or None where illegible


@dataclass(frozen=True)
class ReferenceBlock:
    gamma: RepLabelG2
    dirac: DomainMatrix
    lichnerowicz: tuple
    eigenvalues: tuple  # ((QuadraticSurd, multiplicity), ...)
    relations: tuple
    norms: dict


def _key(gamma: RepLabelG2) -> str:
    return f"({gamma.i},{gamma.j})"


def _parse_block(gamma: RepLabelG2, raw: dict) -> ReferenceBlock:
    try:
        rows = [[scalar_from_pair(p) for p in row] for row in raw["dirac"]]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ReferenceError(f"{_key(gamma)}: Dirac matrix is not square")
        rels = tuple(
            PrintedRelation(
                r["name"],
                int(r["casimir"]),
                {q: (None if c is None else parse_scalar(c)) for q, c in r["coefficients"].items()},
            )
            for r in raw.get("relations", [])
        )
        return ReferenceBlock(
            gamma=gamma,
            dirac=dm(rows),
            lichnerowicz=tuple(parse_scalar(x) for x in raw["lichnerowicz"]),
            eigenvalues=tuple((QuadraticSurd.parse(v), int(m)) for v, m in raw["eigenvalues"]),
            relations=rels,
            norms={q: parse_scalar(v) for q, v in raw.get("norms", {}).items()},
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ReferenceError):
            raise
        raise ReferenceError(f"{_key(gamma)}: malformed reference block ({exc})") from exc


def load_reference(path: str | Path | None = None) -> dict:
    """Parse the reference file; ``path`` overrides the packaged copy."""
    if path is None:
        text = resources.files("g2spec").joinpath("data/reference.json").read_text()
    else:
        text = Path(path).read_text()
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ReferenceError(f"reference file is not valid JSON: {exc}") from exc
    out = {}
    for gamma in (RepLabelG2(0, 0), RepLabelG2(1, 0), RepLabelG2(0, 1)):
        if _key(gamma) not in raw:
            raise ReferenceError(f"reference file lacks the {_key(gamma)} block")
        out[gamma] = _parse_block(gamma, raw[_key(gamma)])
    return out


@lru_cache(maxsize=1)
def packaged_reference() -> dict:
    return load_reference()
