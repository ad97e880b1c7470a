"""Coefficient files: self-describing JSON with the basis embedded.

Layout (``format_version`` 1)::

    {
      "format_version": 1,
      "basis": {"kind": "fourier", "domain": [-3.14159..., 3.14159...], "K": 8},
      "entries": [[re, im], ...],          # from the lowest index upward
      "source": {...}                       # optional provenance
    }

Numbers are written with 17 significant digits, which round-trips every
IEEE double exactly.  The real line is written as ``"domain": "real-line"``.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .basis import BasisKind, BasisSpec, CoefficientVector, Domain, DomainKind
from .errors import CoefficientFileError, HarmonicBayesError

__all__ = ["FORMAT_VERSION", "CoefficientFile", "dumps", "loads", "write", "read"]

FORMAT_VERSION = 1

_DOMAIN_FOR = {
    BasisKind.FOURIER: DomainKind.PERIODIC,
    BasisKind.COSINE: DomainKind.INTERVAL,
    BasisKind.HERMITE: DomainKind.REAL_LINE,
}


@dataclass(frozen=True, eq=False)
class CoefficientFile:
    coeffs: CoefficientVector
    source: dict = field(default_factory=dict)


def _num(x: float) -> str:
    if not math.isfinite(x):
        raise CoefficientFileError(f"cannot serialise non-finite value {x!r}")
    return format(float(x), ".17g")


def dumps(coeffs: CoefficientVector, source: dict | None = None) -> str:
    spec = coeffs.spec
    dom = "\"real-line\"" if not spec.domain.bounded else f"[{_num(spec.domain.lo)}, {_num(spec.domain.hi)}]"
    lines = [
        "{",
        f'  "format_version": {FORMAT_VERSION},',
        f'  "basis": {{"kind": "{spec.kind.value}", "domain": {dom}, "K": {spec.K}}},',
        '  "entries": [',
    ]
    rows = [f"    [{_num(z.real)}, {_num(z.imag)}]" for z in coeffs.entries]
    lines.append(",\n".join(rows))
    tail = "  ]"
    if source:
        tail += ",\n  \"source\": " + json.dumps(source, sort_keys=True)
    lines.append(tail)
    lines.append("}")
    return "\n".join(lines) + "\n"


def _fail(msg: str, where: str) -> CoefficientFileError:
    return CoefficientFileError(f"{where}: {msg}")


def loads(text: str, where: str = "<string>") -> CoefficientFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _fail(f"not valid JSON ({exc})", where) from None
    if not isinstance(doc, dict):
        raise _fail("top level must be an object", where)
    if doc.get("format_version") != FORMAT_VERSION:
        raise _fail(f"unsupported format_version {doc.get('format_version')!r}", where)
    basis = doc.get("basis")
    entries = doc.get("entries")
    if not isinstance(basis, dict) or not isinstance(entries, list):
        raise _fail("missing 'basis' object or 'entries' list", where)
    try:
        kind = BasisKind(basis["kind"])
        K = basis["K"]
        if not isinstance(K, int) or isinstance(K, bool):
            raise _fail(f"K must be an integer, got {K!r}", where)
        dom = basis["domain"]
        if dom == "real-line":
            domain = Domain.real_line()
        elif isinstance(dom, list) and len(dom) == 2:
            domain = Domain(_DOMAIN_FOR[kind], float(dom[0]), float(dom[1]))
        else:
            raise _fail(f"bad domain {dom!r}", where)
        spec = BasisSpec(kind, domain, K)
        arr = np.array(entries, dtype=float)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise _fail("entries must be [re, im] pairs", where)
        coeffs = CoefficientVector(spec, arr[:, 0] + 1j * arr[:, 1])
    except CoefficientFileError:
        raise
    except HarmonicBayesError as exc:
        raise _fail(str(exc), where) from None
    except (KeyError, TypeError, ValueError) as exc:
        raise _fail(f"malformed basis or entries ({exc!r})", where) from None
    source = doc.get("source") or {}
    if not isinstance(source, dict):
        raise _fail("'source' must be an object", where)
    return CoefficientFile(coeffs, source)


def write(path: str | Path, coeffs: CoefficientVector, source: dict | None = None) -> None:
    text = dumps(coeffs, source)
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    try:
        tmp.write_text(text, encoding="utf-8")
        os.replace(tmp, path)
    except OSError as exc:
        raise CoefficientFileError(f"cannot write {path}: {exc}") from exc


def read(path: str | Path) -> CoefficientFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise CoefficientFileError(f"cannot read {path}: {exc}") from exc
    return loads(text, str(path))
