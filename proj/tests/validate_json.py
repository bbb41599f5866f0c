#
# btr - Copyright 2026 The btr Authors.
# SPDX-License-Identifier: Apache-2.0
#
"""Runs the btr tool over a set of commands and validates every JSON line
against the shipped schema for its kind."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

SCHEMA_FOR_KIND = {
    "analysis": "analysis.json",
    "enumerate": "enumerate.json",
    "ramsey": "ramsey.json",
    "search_record": "search_record.json",
    "manifest": "manifest.json",
}


def load_registry(schema_dir):
    resources = []
    for path in sorted(schema_dir.glob("*.json")):
        doc = json.loads(path.read_text())
        jsonschema.Draft202012Validator.check_schema(doc)
        resources.append((doc["$id"], Resource.from_contents(doc)))
    return Registry().with_resources(resources)


def main():
    tool = pathlib.Path(sys.argv[1])
    schema_dir = pathlib.Path(sys.argv[2])
    registry = load_registry(schema_dir)
    base = "https://btr.invalid/schemas/btr-1/"
    validators = {
        kind: jsonschema.Draft202012Validator({"$ref": base + name}, registry=registry)
        for kind, name in SCHEMA_FOR_KIND.items()
    }

    tmp = pathlib.Path(tempfile.mkdtemp(prefix="btr_schema_"))
    (tmp / "corpus.g6").write_text("Dhc\nC~\n@\nIheA@GUAo\n")
    (tmp / "order0.g6").write_text("?\n")
    (tmp / "search.json").write_text(json.dumps({
        "n": 7,
        "constraints": [{"type": "subgraph", "name": "K3"},
                        {"type": "induced_kst", "s": 2, "t": 2},
                        {"type": "induced", "graph6": "Bg"}],
        "budget": 3000, "restarts": 2, "seed": 5}))
    (tmp / "stuck.json").write_text(json.dumps({
        "n": 5, "constraints": [{"type": "subgraph", "name": "K2"}], "budget": 10}))

    commands = [
        (["analyze", "petersen", "--checks", "all", "--full-spectrum", "--is", "2,3,4",
          "--moments", "1,2,3"], 0),
        (["analyze", str(tmp / "corpus.g6"), "--checks", "all", "--k", "2,3,4"], 0),
        (["analyze", "k88", "--checks", "th0,lemma1,prop3", "--s", "3", "--H", "C5"], 0),
        (["analyze", "c5", "--checks", "th1,c5pair", "--ramsey-upper", "C5", "3", "9",
          "--variant", "pair", "--H", "C5"], 0),
        (["analyze", str(tmp / "order0.g6"), "--checks", "prop1"], 1),
        (["enumerate", "--n", "4", "--checks", "all"], 0),
        (["enumerate", "--n", "5", "--max-lambda", "--forbid", "K3", "--forbid-induced-kst", "2,2"], 0),
        (["ramsey", "K3", "3", "--mode", "brute"], 0),
        (["ramsey", "C5", "3"], 0),
        (["ramsey", "K4", "4", "--mode", "table"], 0),
        (["search", str(tmp / "search.json")], 0),
        (["search", str(tmp / "stuck.json")], 3),
    ]

    checked = 0
    failures = 0
    for i, (args, want) in enumerate(commands):
        manifest = tmp / f"manifest{i}.json"
        proc = subprocess.run([str(tool), *args, "--manifest", str(manifest)],
                              capture_output=True, text=True, check=False)
        if proc.returncode != want:
            print(f"FAIL {args}: exit {proc.returncode}, want {want}\n{proc.stderr}")
            failures += 1
            continue
        docs = [json.loads(line) for line in proc.stdout.splitlines() if line.strip()]
        docs.append(json.loads(manifest.read_text()))
        for doc in docs:
            errors = list(validators[doc["kind"]].iter_errors(doc))
            checked += 1
            for err in errors:
                failures += 1
                print(f"FAIL {args} kind={doc['kind']}: {err.json_path}: {err.message}")
        m = docs[-1]
        if sum(m["verdict_counts"].values()) != m["items"]:
            failures += 1
            print(f"FAIL {args}: verdict counts do not sum to items")

    print(f"validated {checked} documents, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
