"""Curve description files, bundled example curves and matrix export."""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from importlib import resources
from pathlib import Path

import numpy as np

from .codes import OnePointCode
from .curve import CurveInfo, CurveSpec, build_info, validate_curve
from .linalg import as_matrix

CURVE_KEYS = ("p", "s", "q", "mu", "alphas")


def bundled_curves() -> list[str]:
    root = resources.files("agcode") / "curves"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def _read_curve_text(ref: str) -> str:
    path = Path(ref)
    if path.is_file():
        return path.read_text()
    name = ref[:-5] if ref.endswith(".json") else ref
    if name in bundled_curves():
        return (resources.files("agcode") / "curves" / f"{name}.json").read_text()
    raise FileNotFoundError(f"no curve file or bundled curve named {ref!r} "
                            f"(bundled: {', '.join(bundled_curves())})")


def curve_from_dict(data: dict) -> CurveInfo:
    """Validate a curve description.  An explicit ``betas`` list bypasses root finding."""
    missing = [k for k in CURVE_KEYS if k not in data]
    if missing:
        raise ValueError(f"curve description lacks {', '.join(missing)}")
    spec = CurveSpec.from_ints(int(data["p"]), int(data["s"]), int(data["q"]),
                               int(data["mu"]), [int(a) for a in data["alphas"]])
    info = validate_curve(spec)
    if "betas" in data:
        info = build_info(spec, [spec.field.element(int(b)) for b in data["betas"]])
    return info


def load_curve(ref: str) -> CurveInfo:
    """Load a curve from a JSON path or a bundled name such as ``gf4-q2-m3``."""
    return curve_from_dict(json.loads(_read_curve_text(ref)))


def curve_info_dict(info: CurveInfo) -> dict:
    return {
        "genus": info.genus,
        "n": info.n,
        "betas": [b.enc for b in info.betas],
        "points": [{"alpha": pt.alpha.enc, "beta": pt.beta.enc} for pt in info.points],
    }


def matrix_to_csv(M: np.ndarray) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in np.asarray(M):
        writer.writerow(int(x) for x in row)
    return buf.getvalue()


def matrix_from_csv(text: str, n: int | None = None) -> np.ndarray:
    rows = [[int(x) for x in row] for row in csv.reader(io.StringIO(text)) if row]
    if not rows:
        return np.zeros((0, n or 0), dtype=np.int64)
    return as_matrix(rows, n)


def sidecar(code: OnePointCode) -> dict:
    F, spec = code.curve.field, code.curve.spec
    return {"p": F.p, "s": F.s, "modulus": list(F.modulus), "q": spec.q, "mu": spec.mu.enc,
            "alphas": [a.enc for a in spec.alphas], "r": code.r, "n": code.n, "k": code.k}


def _parity(code: OnePointCode) -> np.ndarray:
    return code.code.dual().gen


def write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def export_code(code: OnePointCode, out: str | Path, fmt: str = "csv") -> list[Path]:
    """Write generator and parity-check matrices.

    ``csv``: ``<out>.gen.csv``, ``<out>.par.csv`` and ``<out>.json`` (metadata).
    ``json``: a single ``<out>.json`` holding the metadata and both matrices.
    """
    out = Path(out)
    stem = out.with_suffix("") if out.suffix in (".json", ".csv") else out
    meta = sidecar(code)
    if fmt == "json":
        meta["generator"] = code.code.gen.tolist()
        meta["parity_check"] = _parity(code).tolist()
        target = stem.with_name(stem.name + ".json")
        write_atomic(target, json.dumps(meta, indent=2) + "\n")
        return [target]
    if fmt != "csv":
        raise ValueError(f"unknown export format {fmt!r}")
    gen = stem.with_name(stem.name + ".gen.csv")
    par = stem.with_name(stem.name + ".par.csv")
    side = stem.with_name(stem.name + ".json")
    write_atomic(gen, matrix_to_csv(code.code.gen))
    write_atomic(par, matrix_to_csv(_parity(code)))
    write_atomic(side, json.dumps(meta, indent=2) + "\n")
    return [gen, par, side]
