"""Built-in construction instances and the spec-file format.

A spec file is either JSON (a single object) or line-oriented ``key = value``
text.  Recognised keys::

    p, r, s          integers
    N                integer list, e.g. ``[7, 3]``
    U                list of integer lists; bare integers are accepted when
                     there is a single coordinate, e.g. ``[1, 2, 4]``
    label            optional name
    expected         optional object ``{"n": .., "k": .., "d": .., "q": ..}``
                     (text form: ``expected = n=23 k=1 d=7 q=2``)
    flags            optional list of strings from {"GV", "L"}

In the text form, blank lines and lines starting with ``#`` are ignored and
values for ``N``, ``U`` and ``flags`` are written in JSON syntax.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import prod
from pathlib import Path
from typing import Any, Iterable, Sequence

from .fields import is_prime
from .lattice import ExponentSet


class SpecError(ValueError):
    """Invalid construction parameters or malformed spec file."""


@dataclass(frozen=True)
class CodeSpec:
    p: int
    r: int
    s: int
    N: tuple[int, ...]
    U: ExponentSet
    label: str | None = None

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise SpecError(f"p = {self.p} is not prime")
        if self.r < 1 or self.s < 1 or self.r % self.s:
            raise SpecError(f"s = {self.s} must divide r = {self.r}")
        if not self.N:
            raise SpecError("N must have at least one entry")
        q1 = self.p**self.r - 1
        for n in self.N:
            if n < 1 or q1 % n:
                raise SpecError(f"N_i = {n} does not divide p^r - 1 = {q1}")
        if self.U.shape != self.N:
            raise SpecError(f"U lives in box {self.U.shape}, expected {self.N}")

    @classmethod
    def build(
        cls,
        p: int,
        r: int,
        s: int,
        N: Sequence[int],
        U: Iterable[Sequence[int] | int],
        label: str | None = None,
    ) -> "CodeSpec":
        N = tuple(int(n) for n in N)
        vecs = [(u,) if isinstance(u, int) else tuple(u) for u in U]
        try:
            exps = ExponentSet.of(N, vecs)
        except ValueError as exc:
            raise SpecError(str(exc)) from exc
        return cls(int(p), int(r), int(s), N, exps, label)

    @property
    def n(self) -> int:
        return prod(self.N)

    @property
    def q(self) -> int:
        return self.p**self.s

    @property
    def m(self) -> int:
        return len(self.N)


@dataclass(frozen=True)
class Expected:
    n: int
    k: int
    d: int
    q: int


@dataclass(frozen=True)
class CatalogEntry:
    spec: CodeSpec
    expected: Expected
    flags: frozenset[str] = field(default_factory=frozenset)

    @property
    def label(self) -> str:
        return self.spec.label or ""


# (label, p, r, s, N, U, (n, k, d, q), flags)
# U sets are copied as printed except for the repairs listed in
# docs/CATALOG_NOTES.md (bracket typos in E1, U14, U28, U31; a missing orbit
# partner in U17).
_RAW: list[tuple] = [
    ("E1", 2, 2, 2, (3, 3, 3),
     [(0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 1, 1), (1, 2, 0), (1, 0, 2), (0, 1, 2), (1, 1, 2),
      (1, 2, 1), (2, 1, 1)],
     (27, 7, 6, 4), ()),
    ("E2", 2, 3, 3, (7, 7),
     [(1, 3), (4, 4), (1, 6), (5, 0), (1, 2)],
     (49, 39, 4, 8), ()),
    ("U1", 3, 4, 1, (5, 5, 8),
     [(3, 3, 3), (4, 4, 1), (2, 2, 3), (1, 1, 1), (3, 0, 6), (4, 0, 2), (2, 0, 6), (1, 0, 2)],
     (200, 184, 4, 3), ("GV",)),
    ("U2", 2, 6, 1, (7, 7, 3),
     [(2, 4, 2), (4, 1, 1), (1, 2, 2), (2, 4, 1), (4, 1, 2), (1, 2, 1), (2, 0, 0), (4, 0, 0),
      (1, 0, 0), (2, 5, 0), (4, 3, 0), (1, 6, 0)],
     (147, 127, 3, 2), ()),
    ("U3", 2, 6, 1, (7, 7, 3),
     [(6, 2, 2), (5, 4, 1), (3, 1, 2), (6, 2, 1), (5, 4, 2), (3, 1, 1), (2, 3, 0), (4, 6, 0),
      (1, 5, 0), (6, 0, 0), (5, 0, 0), (3, 0, 0)],
     (147, 123, 4, 2), ()),
    ("U4", 2, 6, 1, (7, 7, 3),
     [(2, 4, 0), (4, 1, 0), (1, 2, 0), (6, 0, 2), (5, 0, 1), (3, 0, 2), (6, 0, 1), (5, 0, 2),
      (3, 0, 1), (6, 2, 0), (5, 4, 0), (3, 1, 0), (0, 6, 2), (0, 5, 1), (0, 3, 2), (0, 6, 1),
      (0, 5, 2), (0, 3, 1), (2, 0, 0), (4, 0, 0), (1, 0, 0)],
     (147, 105, 6, 2), ()),
    ("U5", 2, 11, 1, (23,),
     [2, 4, 8, 16, 9, 18, 13, 3, 6, 12, 1],
     (23, 1, 7, 2), ("GV",)),
    ("U6", 2, 6, 1, (9, 7, 3),
     [(0, 2, 0), (0, 4, 0), (0, 1, 0), (0, 6, 2), (0, 5, 1), (0, 3, 2), (0, 6, 1), (0, 5, 2),
      (0, 3, 1), (2, 6, 2), (4, 5, 1), (8, 3, 2), (7, 6, 1), (5, 5, 2), (1, 3, 1), (2, 1, 0),
      (4, 2, 0), (8, 4, 0), (7, 1, 0), (5, 2, 0), (1, 4, 0)],
     (189, 147, 5, 2), ()),
    ("U7", 2, 6, 1, (9, 7, 3),
     [(2, 4, 1), (4, 1, 2), (8, 2, 1), (7, 4, 2), (5, 1, 1), (1, 2, 2), (0, 6, 2), (0, 5, 1),
      (0, 3, 2), (0, 6, 1), (0, 5, 2), (0, 3, 1), (2, 6, 2), (4, 5, 1), (8, 3, 2), (7, 6, 1),
      (5, 5, 2), (1, 3, 1), (2, 2, 0), (4, 4, 0), (8, 1, 0), (7, 2, 0), (5, 4, 0), (1, 1, 0)],
     (189, 141, 6, 2), ()),
    ("U8", 2, 6, 1, (9, 7, 3),
     [(2, 3, 0), (4, 6, 0), (8, 5, 0), (7, 3, 0), (5, 6, 0), (1, 5, 0), (6, 6, 0), (3, 5, 0),
      (6, 3, 0), (3, 6, 0), (6, 5, 0), (3, 3, 0), (2, 3, 1), (4, 6, 2), (8, 5, 1), (7, 3, 2),
      (5, 6, 1), (1, 5, 2), (2, 4, 2), (4, 1, 1), (8, 2, 2), (7, 4, 1), (5, 1, 2), (1, 2, 1),
      (6, 2, 2), (3, 4, 1), (6, 1, 2), (3, 2, 1), (6, 4, 2), (3, 1, 1)],
     (189, 129, 7, 2), ()),
    ("U9", 2, 15, 1, (31, 7),
     [(0, 2), (0, 4), (0, 1), (14, 0), (28, 0), (25, 0), (19, 0), (7, 0), (22, 6), (13, 5),
      (26, 3), (21, 6), (11, 5), (22, 3), (13, 6), (26, 5), (21, 3), (11, 6), (22, 5), (13, 3),
      (26, 6), (21, 5), (11, 3)],
     (217, 171, 6, 2), ()),
    ("U10", 2, 12, 1, (7, 7, 5),
     [(2, 4, 0), (4, 1, 0), (1, 2, 0), (6, 0, 2), (5, 0, 4), (3, 0, 3), (6, 0, 1), (5, 0, 2),
      (3, 0, 4), (6, 0, 3), (5, 0, 1), (3, 0, 2), (6, 0, 4), (5, 0, 3), (3, 0, 1), (2, 0, 0),
      (4, 0, 0), (1, 0, 0)],
     (245, 209, 4, 2), ()),
    ("U11", 2, 12, 1, (7, 7, 5),
     [(2, 4, 2), (4, 1, 4), (1, 2, 3), (2, 4, 1), (4, 1, 2), (1, 2, 4), (2, 4, 3), (4, 1, 1),
      (1, 2, 2), (2, 4, 4), (4, 1, 3), (1, 2, 1), (6, 2, 0), (5, 4, 0), (3, 1, 0), (6, 4, 2),
      (5, 1, 4), (3, 2, 3), (6, 4, 1), (5, 1, 2), (3, 2, 4), (6, 4, 3), (5, 1, 1), (3, 2, 2),
      (6, 4, 4), (5, 1, 3), (3, 2, 1), (6, 6, 0), (5, 5, 0), (3, 3, 0), (6, 0, 0), (5, 0, 0),
      (3, 0, 0)],
     (245, 179, 6, 2), ()),
    ("U12", 2, 12, 1, (9, 7, 7),
     [(0, 6, 2), (0, 5, 4), (0, 3, 1), (6, 2, 2), (3, 4, 4), (6, 1, 1), (3, 2, 2), (6, 4, 4),
      (3, 1, 1), (2, 2, 3), (4, 4, 6), (8, 1, 5), (7, 2, 3), (5, 4, 6), (1, 1, 5)],
     (441, 411, 4, 2), ()),
    ("U13", 2, 12, 1, (9, 7, 7),
     [(2, 0, 1), (4, 0, 2), (8, 0, 4), (7, 0, 1), (5, 0, 2), (1, 0, 4), (0, 2, 0), (0, 4, 0),
      (0, 1, 0)],
     (441, 423, 3, 2), ()),
    ("U14", 2, 6, 2, (7, 3),
     [(0, 2), (5, 1), (6, 1), (3, 1)],
     (21, 13, 3, 4), ()),
    ("U15", 2, 6, 2, (7, 3),
     [(0, 2), (4, 1), (2, 1), (1, 1), (5, 0), (6, 0), (3, 0)],
     (21, 7, 5, 4), ()),
    ("U16", 2, 12, 2, (7, 5),
     [(4, 4), (2, 1), (1, 4), (4, 1), (2, 4), (1, 1), (5, 0), (6, 0), (3, 0), (5, 3), (6, 2),
      (3, 3), (5, 2), (6, 3), (3, 2)],
     (35, 5, 7, 4), ()),
    ("U17", 2, 4, 2, (5, 3, 3),
     [(3, 1, 1), (2, 1, 1), (0, 0, 2), (4, 1, 2), (1, 1, 2), (4, 2, 0), (0, 2, 2), (3, 0, 1),
      (2, 0, 1), (1, 2, 0)],
     (45, 25, 6, 4), ()),
    ("U18", 2, 4, 2, (5, 5, 3),
     [(3, 0, 1), (2, 0, 1), (3, 1, 2), (2, 4, 2)],
     (75, 67, 3, 4), ()),
    ("U19", 2, 2, 2, (3, 3, 3),
     [(2, 2, 0), (0, 1, 2), (2, 0, 1), (1, 0, 0)],
     (27, 19, 3, 4), ()),
    ("U20", 2, 4, 2, (5, 3),
     [(0, 2), (3, 1), (2, 1)],
     (15, 9, 3, 4), ()),
    ("U21", 2, 4, 2, (5, 3, 3),
     [(4, 0, 2), (1, 0, 2), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 2, 1)],
     (45, 33, 4, 4), ()),
    ("U22", 2, 6, 2, (7, 7, 3),
     [(4, 0, 1), (2, 0, 1), (1, 0, 1), (4, 5, 2), (2, 6, 2), (1, 3, 2)],
     (147, 137, 3, 4), ()),
    ("U23", 2, 9, 3, (73,),
     [16, 55, 2],
     (73, 67, 3, 8), ()),
    ("U24", 2, 9, 3, (73,),
     [16, 55, 2, 32, 37, 4, 53, 59, 34],
     (73, 55, 6, 8), ("L",)),
    ("U25", 2, 6, 3, (7, 3),
     [(5, 2), (5, 1), (1, 2), (1, 1), (2, 0), (4, 0)],
     (21, 9, 5, 8), ()),
    ("U26", 2, 6, 3, (7, 9),
     [(3, 0), (6, 0), (1, 5), (1, 4)],
     (63, 55, 4, 8), ("GV",)),
    ("U27", 2, 6, 3, (7, 9),
     [(6, 6), (6, 3), (3, 0), (1, 8), (1, 1), (5, 5), (5, 4)],
     (63, 49, 5, 8), ()),
    ("U28", 2, 9, 3, (73,),
     [23, 38, 12, 22, 30, 21, 54, 67, 25, 56, 10, 7, 15, 47, 11],
     (73, 43, 8, 8), ("L",)),
    ("U29", 3, 2, 1, (8, 8),
     [(3, 2), (1, 6), (0, 3), (0, 1), (7, 0), (5, 0), (7, 3), (5, 1)],
     (64, 48, 4, 3), ()),
    ("U30", 3, 2, 1, (8, 8),
     [(3, 0), (1, 0), (6, 5), (2, 7), (7, 7), (5, 5)],
     (64, 52, 3, 3), ()),
    ("U31", 3, 5, 1, (11,),
     [3, 9, 5, 4, 1],
     (11, 1, 5, 3), ("GV", "L")),
    ("U32", 5, 5, 1, (71,),
     [39, 53, 52, 47, 22, 65, 41, 63, 31, 13],
     (71, 51, 5, 5), ("L",)),
    ("U33", 5, 3, 1, (31,),
     [15, 13, 3, 20, 7, 4, 29, 21, 12],
     (31, 13, 6, 5), ("L",)),
    ("U34", 5, 5, 1, (71,),
     [64, 36, 38, 48, 27, 15, 4, 20, 29, 3, 45, 12, 60, 16, 9],
     (71, 41, 8, 5), ()),
    ("U35", 5, 2, 1, (24, 4),
     [(18, 1), (17, 0), (13, 0), (6, 0)],
     (96, 88, 3, 5), ()),
    ("U36", 5, 2, 1, (24, 4),
     [(23, 3), (19, 3), (11, 2), (7, 2), (18, 0), (12, 3)],
     (96, 84, 4, 5), ()),
    ("U37", 7, 2, 1, (6, 6),
     [(2, 1), (0, 4), (1, 3)],
     (36, 30, 3, 7), ()),
    ("U38", 7, 2, 1, (6, 6),
     [(2, 0), (2, 2), (0, 5), (1, 1), (1, 2)],
     (36, 26, 4, 7), ()),
]


def _entry(raw: tuple) -> CatalogEntry:
    label, p, r, s, N, U, (n, k, d, q), flags = raw
    spec = CodeSpec.build(p, r, s, N, U, label)
    return CatalogEntry(spec, Expected(n, k, d, q), frozenset(flags))


_CATALOG: list[CatalogEntry] | None = None


def catalog() -> list[CatalogEntry]:
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = [_entry(raw) for raw in _RAW]
    return list(_CATALOG)


def lookup(label: str) -> CatalogEntry:
    key = label.strip().upper().replace("_", "")
    for entry in catalog():
        if entry.label.upper() == key:
            return entry
    raise KeyError(f"no catalog entry named {label!r}")


# -- serialization ----------------------------------------------------------


def spec_to_dict(spec: CodeSpec, expected: Expected | None = None,
                 flags: Iterable[str] = ()) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "p": spec.p,
        "r": spec.r,
        "s": spec.s,
        "N": list(spec.N),
        "U": [list(u) for u in spec.U],
    }
    if spec.label:
        doc["label"] = spec.label
    if expected is not None:
        doc["expected"] = {"n": expected.n, "k": expected.k, "d": expected.d, "q": expected.q}
    flags = sorted(flags)
    if flags:
        doc["flags"] = flags
    return doc


def entry_to_dict(entry: CatalogEntry) -> dict[str, Any]:
    return spec_to_dict(entry.spec, entry.expected, entry.flags)


def _require(doc: dict[str, Any], key: str) -> Any:
    if key not in doc:
        raise SpecError(f"missing key {key!r}")
    return doc[key]


def entry_from_dict(doc: dict[str, Any]) -> tuple[CodeSpec, Expected | None, frozenset[str]]:
    try:
        N = [int(n) for n in _require(doc, "N")]
        U = [int(u) if isinstance(u, int) else [int(c) for c in u] for u in _require(doc, "U")]
        spec = CodeSpec.build(
            int(_require(doc, "p")), int(_require(doc, "r")), int(_require(doc, "s")),
            N, U, doc.get("label"),
        )
    except (TypeError, ValueError) as exc:
        if isinstance(exc, SpecError):
            raise
        raise SpecError(f"malformed spec: {exc}") from exc
    expected = None
    if doc.get("expected") is not None:
        e = doc["expected"]
        try:
            expected = Expected(int(e["n"]), int(e["k"]), int(e["d"]), int(e["q"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise SpecError(f"malformed expected block: {e!r}") from exc
    flags = frozenset(str(f) for f in doc.get("flags", ()))
    unknown = flags - {"GV", "L"}
    if unknown:
        raise SpecError(f"unknown flags {sorted(unknown)}")
    return spec, expected, flags


def dumps_text(doc: dict[str, Any]) -> str:
    lines = []
    for key in ("label", "p", "r", "s", "N", "U", "expected", "flags"):
        if key not in doc:
            continue
        val = doc[key]
        if key == "expected":
            val = " ".join(f"{k}={val[k]}" for k in ("n", "k", "d", "q"))
        elif key in ("N", "U", "flags"):
            val = json.dumps(val, separators=(", ", ": "))
        lines.append(f"{key} = {val}")
    return "\n".join(lines) + "\n"


def loads_text(text: str) -> dict[str, Any]:
    doc: dict[str, Any] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise SpecError(f"line {lineno}: expected 'key = value'")
        key, _, val = line.partition("=")
        key, val = key.strip(), val.strip()
        if key in ("p", "r", "s"):
            try:
                doc[key] = int(val)
            except ValueError:
                raise SpecError(f"line {lineno}: {key} must be an integer") from None
        elif key in ("N", "U", "flags"):
            try:
                doc[key] = json.loads(val)
            except json.JSONDecodeError as exc:
                raise SpecError(f"line {lineno}: cannot parse {key}: {exc.msg}") from None
        elif key == "label":
            doc[key] = val
        elif key == "expected":
            parts = dict(item.split("=", 1) for item in val.split() if "=" in item)
            doc[key] = parts
        else:
            raise SpecError(f"line {lineno}: unknown key {key!r}")
    return doc


def loads(text: str) -> tuple[CodeSpec, Expected | None, frozenset[str]]:
    """Parse either spec-file flavour; JSON is detected by a leading ``{``."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise SpecError(f"invalid JSON spec: {exc}") from None
    else:
        doc = loads_text(text)
    return entry_from_dict(doc)


def load(path: str | Path) -> tuple[CodeSpec, Expected | None, frozenset[str]]:
    return loads(Path(path).read_text(encoding="utf-8"))
