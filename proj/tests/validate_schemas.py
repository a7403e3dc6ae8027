"""Run every lcc subcommand and validate its JSON output against schemas/."""

import json
import pathlib
import subprocess
import sys
import tempfile

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

GROUP_RING = {"group": {"rank": 1, "torsion": []}, "terms": [[[1], 1], [[-1], 1], [[0], 1]]}
CYCLE = {"g": 3, "components": [
    {"label": "Theta", "dim": 2, "mult": 1, "cm": ["6", "2", "1"], "gauss_finite": True}]}
CHARACTER = {"type": "A1", "weights": [[[1], 1], [[-1], 1]]}
INVERSE_GALOIS = {
    "target": {"group": {"rank": 1, "torsion": []}, "terms": [[[1], 1], [[-1], 1]]},
    "construction": {"var": 1},
    "e": 2,
    "candidates": [{"group": {"rank": 1, "torsion": []}, "terms": [[[2], 1], [[-2], 1]]}],
}


def invocations(files):
    """(schema name, argv, expected exit code)."""
    return [
        ("symfun", ["symfun", "schur", "3,1"], 0),
        ("symfun", ["symfun", "elementary", "4"], 0),
        ("lambda-eval", ["lambda-eval", "--input", files["x"], "--adams", "3"], 0),
        ("lambda-eval", ["lambda-eval", "--input", files["x"], "--lambda", "2"], 0),
        ("lambda-eval", ["lambda-eval", "--input", files["x"], "--schur", "2,1"], 0),
        ("cycle-convolve", ["cycle-convolve", "--input", files["cycle"], "--input", files["cycle"], "--d-trunc", "2"], 0),
        ("cycle-schur", ["cycle-schur", "--input", files["cycle"], "--partition", "2"], 0),
        ("rep-dim", ["rep-dim", "E7", "varpi_7"], 0),
        ("rep-char", ["rep-char", "B2", "0,1", "--sym", "2", "--decompose"], 0),
        ("rep-char", ["rep-char", "--input", files["character"], "--alt", "2"], 0),
        ("rep-classify", ["rep-classify", "--max-rank", "3", "--max-dim", "30"], 0),
        ("wmf-tables", ["wmf-tables", "--max-rank", "4", "--max-dim", "40"], 0),
        ("theta-group", ["theta-group", "--g", "4", "--k", "2"], 0),
        ("theta-group", ["theta-group", "--g", "5", "--k", "1", "--sum-nonzero"], 0),
        ("cc-odp", ["cc-odp", "--g", "5", "--k", "2", "--torsion-dependent"], 0),
        ("genus5", ["genus5"], 1),
        ("fake-jacobian", ["fake-jacobian", "--g", "4", "--degree", "14", "--hyperelliptic"], 0),
        ("fake-jacobian", ["fake-jacobian", "--g", "5", "--degree", "71"], 1),
        ("summand-bound", ["summand-bound", "--supports", "0,4", "--dz", "4"], 0),
        ("summand-bound", ["summand-bound", "--supports", "0", "--dz", "4"], 0),
        ("simplicity", ["simplicity", "--g", "4", "--gauss-finite", "--m-bound", "2"], 0),
        ("fourfold-table", ["fourfold-table"], 0),
        ("qm-search", ["qm-search", "--dim", "118", "--max-rank", "20"], 0),
        ("qm-search", ["qm-search", "--dim", "7", "--max-rank", "3"], 0),
        ("verify-ig", ["verify-ig", "--input", files["ig"]], 0),
    ]


def main():
    cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.name[: -len(".schema.json")]: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    registry = Registry().with_resources(
        (s["$id"], Resource.from_contents(s)) for s in schemas.values())
    for schema in schemas.values():
        Draft202012Validator.check_schema(schema)

    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        files = {}
        for name, data in [("x", GROUP_RING), ("cycle", CYCLE), ("character", CHARACTER), ("ig", INVERSE_GALOIS)]:
            path = pathlib.Path(tmp) / f"{name}.json"
            path.write_text(json.dumps(data))
            files[name] = str(path)
        runs = invocations(files)
        covered = {name for name, _, _ in runs}
        for name in sorted(set(schemas) - {"common"} - covered):
            print(f"FAIL {name}: no invocation exercises this schema")
            failures += 1
        for name, argv, code in runs:
            proc = subprocess.run([cli, *argv], capture_output=True, text=True)
            label = " ".join(argv)
            if proc.returncode != code:
                print(f"FAIL {label}: exit {proc.returncode}, expected {code}: {proc.stderr.strip()}")
                failures += 1
                continue
            validator = Draft202012Validator(schemas[name], registry=registry)
            errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=lambda e: list(e.path))
            for e in errors[:3]:
                print(f"FAIL {label}: {'/'.join(map(str, e.path))}: {e.message}")
            failures += bool(errors)
            if not errors:
                print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
