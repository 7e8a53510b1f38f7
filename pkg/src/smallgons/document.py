"""Polygon documents (JSON, 17 significant digits) and bare ``x,y`` CSV files."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .errors import SmallgonError
from .geometry import DEFAULT_TOL, CertificateReport, Polygon, ToleranceConfig, certify, perimeter

SCHEMA_VERSION = 1
ALL_CLAIMS = ("small", "convex", "equilateral", "symmetric")


class DocumentError(SmallgonError, ValueError):
    pass


def fmt(value: float) -> str:
    return format(float(value) + 0.0, ".17g")


@dataclass
class PolygonDocument:
    family: str
    n: int
    t: Optional[float]
    side: Optional[float]
    perimeter: float
    vertices: list[tuple[float, float]]
    aux: Optional[float] = None
    cert_tol: float = DEFAULT_TOL.cert_tol
    claims: tuple[str, ...] = ALL_CLAIMS
    certificates: dict = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION

    @classmethod
    def from_instance(cls, inst, cert_tol: float = DEFAULT_TOL.cert_tol, claims=ALL_CLAIMS, report=None):
        if report is None:
            report = certify(inst.polygon, inst.side, ToleranceConfig(cert_tol=cert_tol))
        return cls(
            family=inst.family,
            n=inst.n,
            t=inst.t,
            side=inst.side,
            perimeter=inst.perimeter,
            vertices=[(v.x, v.y) for v in inst.polygon],
            aux=inst.aux,
            cert_tol=cert_tol,
            claims=tuple(claims),
            certificates=report.summary(),
        )

    @property
    def polygon(self) -> Polygon:
        return Polygon(tuple(self.vertices))

    def dumps(self) -> str:
        def num(v):
            return "null" if v is None else fmt(v)

        def cert(v):
            if isinstance(v, bool):
                return "true" if v else "false"
            if isinstance(v, int):
                return str(v)
            return fmt(v)

        lines = [
            "{",
            f'  "schema_version": {self.schema_version},',
            f'  "family": {json.dumps(self.family)},',
            f'  "n": {self.n},',
            f'  "t": {num(self.t)},',
            f'  "aux": {num(self.aux)},',
            f'  "side": {num(self.side)},',
            f'  "perimeter": {fmt(self.perimeter)},',
            f'  "cert_tol": {fmt(self.cert_tol)},',
            f'  "claims": {json.dumps(list(self.claims))},',
            '  "certificates": {'
            + ", ".join(f"{json.dumps(k)}: {cert(v)}" for k, v in self.certificates.items())
            + "},",
            '  "vertices": [',
            ",\n".join(f"    [{fmt(x)}, {fmt(y)}]" for x, y in self.vertices),
            "  ]",
            "}",
        ]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> "PolygonDocument":
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"not a polygon document: {exc}") from None

        def opt(key):
            v = raw.get(key)
            return None if v is None else float(v)

        try:
            doc = cls(
                family=str(raw["family"]),
                n=int(raw["n"]),
                t=opt("t"),
                side=opt("side"),
                perimeter=float(raw["perimeter"]),
                vertices=[(float(x), float(y)) for x, y in raw["vertices"]],
                aux=opt("aux"),
                cert_tol=float(raw.get("cert_tol", DEFAULT_TOL.cert_tol)),
                claims=tuple(raw.get("claims", ALL_CLAIMS)),
                certificates=_load_certificates(raw.get("certificates", {})),
                schema_version=int(raw.get("schema_version", SCHEMA_VERSION)),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise DocumentError(f"malformed polygon document: {exc!r}") from None
        if len(doc.vertices) != doc.n:
            raise DocumentError(f"document declares n = {doc.n} but lists {len(doc.vertices)} vertices")
        unknown = set(doc.claims) - set(ALL_CLAIMS)
        if unknown:
            raise DocumentError(f"unknown claims {sorted(unknown)}")
        return doc


def _load_certificates(raw: dict) -> dict:
    out = {}
    for k, v in raw.items():
        out[k] = v if isinstance(v, (bool, int)) else float(v)
    return out


def dumps_csv(polygon: Polygon) -> str:
    return "".join(f"{fmt(v.x)},{fmt(v.y)}\n" for v in polygon)


def loads_csv(text: str) -> Polygon:
    verts = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise DocumentError(f"line {lineno}: expected 'x,y', got {line!r}")
        try:
            verts.append((float(parts[0]), float(parts[1])))
        except ValueError:
            raise DocumentError(f"line {lineno}: not a number pair: {line!r}") from None
    if len(verts) < 3:
        raise DocumentError(f"need at least 3 vertices, got {len(verts)}")
    return Polygon(tuple(verts))


def load_polygon_source(text: str) -> PolygonDocument:
    """Parse either a polygon document or a bare CSV into a document.

    CSV input claims all four properties and is compared to its mean side.
    """
    if text.lstrip().startswith("{"):
        return PolygonDocument.loads(text)
    poly = loads_csv(text)
    return PolygonDocument(
        family="csv",
        n=len(poly),
        t=None,
        side=None,
        perimeter=perimeter(poly),
        vertices=[(v.x, v.y) for v in poly],
    )


def required_flags(doc: PolygonDocument, report: CertificateReport) -> dict[str, bool]:
    flags = {
        "small": report.is_small,
        "convex": report.is_convex,
        "equilateral": report.is_equilateral,
        "symmetric": report.is_symmetric,
    }
    return {k: v for k, v in flags.items() if k in doc.claims}
