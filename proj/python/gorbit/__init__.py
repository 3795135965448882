"""Deformations of the generic orbit on toric resolutions of C^n/G.

Thin wrapper over the C++ core. Rationals come back as ``fractions.Fraction``;
reductor sets are plain dicts in the CLI's JSON format and can be passed back
in unchanged.
"""

from __future__ import annotations

import json
import os
import re
from fractions import Fraction
from typing import Any, Iterable

from . import _gorbit
from ._gorbit import CongruenceViolation, Error, GluingViolation, InvalidInput, NotBasic, SingularMatrix

__all__ = [
    "Problem",
    "Error",
    "InvalidInput",
    "CongruenceViolation",
    "GluingViolation",
    "NotBasic",
    "SingularMatrix",
]

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")

# Keys whose string values are labels, not numbers.
_LABEL_KEYS = {"monomial", "ray", "rays", "generator", "name", "bound", "warnings", "error", "message", "limit_kind"}


def _exact(value: Any, key: str | None = None) -> Any:
    if isinstance(value, dict):
        if key == "coeffs":
            return {k: Fraction(v) for k, v in value.items()}
        return {k: _exact(v, k) for k, v in value.items()}
    if isinstance(value, list):
        return [_exact(v, key) for v in value]
    if isinstance(value, str) and key == "count":
        return int(value)
    if isinstance(value, str) and key not in _LABEL_KEYS and _RATIONAL.match(value):
        return Fraction(value)
    return value


def _plain(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def _load(text: str) -> Any:
    return _exact(json.loads(text))


def _dump(value: Any) -> str:
    return json.dumps(_plain(value))


class Problem:
    """A group action together with a fan of the resolution."""

    def __init__(self, spec: dict | str | os.PathLike):
        if isinstance(spec, dict):
            self._core = _gorbit.Problem(_dump(spec))
        else:
            self._core = _gorbit.Problem.from_file(os.fspath(spec))

    def info(self) -> dict:
        return _load(self._core.info())

    def canonical(self) -> dict:
        return _load(self._core.canonical())

    def maxshift(self) -> dict:
        return _load(self._core.maxshift())

    def per_ray_tables(self) -> list:
        return _load(self._core.per_ray_tables())

    def count(self) -> int:
        return int(self._core.count())

    def enumerate(self, limit: int | None = None) -> list[dict]:
        return [_load(s) for s in self._core.enumerate(limit)]

    def check(self, reductor_set: dict) -> dict:
        return _load(self._core.check(_dump(reductor_set)))

    def piece(self, cone: int | Iterable[int], reductor_set: dict) -> dict:
        return _load(self._core.piece(_cone(cone), _dump(reductor_set)))

    def quiver(self, cone: int | Iterable[int], reductor_set: dict) -> dict:
        return _load(self._core.quiver(_cone(cone), _dump(reductor_set)))

    def quiver_dot(self, cone: int | Iterable[int], reductor_set: dict) -> str:
        return self._core.quiver_dot(_cone(cone), _dump(reductor_set))

    def cartier(self, char: int | str, coeffs: dict) -> dict:
        return _load(self._core.cartier(str(char), _dump(coeffs)))

    def shift(self, lam: int | str, reductor_set: dict) -> dict:
        return _load(self._core.shift(str(lam), _dump(reductor_set)))

    def reflect(self, reductor_set: dict) -> dict:
        return _load(self._core.reflect(_dump(reductor_set)))

    def normalize(self, reductor_set: dict) -> dict:
        return _load(self._core.normalize(_dump(reductor_set)))

    def equiv(self, first: dict, second: dict) -> dict:
        return _load(self._core.equiv(_dump(first), _dump(second)))

    def frac_val(self, ray: int, char: int | str) -> Fraction:
        return Fraction(self._core.frac_val(ray, str(char)))


def _cone(cone: int | Iterable[int]) -> int | list[int]:
    return cone if isinstance(cone, int) else [int(r) for r in cone]
