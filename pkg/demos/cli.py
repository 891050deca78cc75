"""Driving the command line tool on the bundled JSON fixtures.

Equivalent shell commands are printed before each run.
"""

import io
from pathlib import Path

from catcheck.cli import main

FIX = Path(__file__).resolve().parent.parent / "fixtures"

RUNS = [
    ["validate", "arrow.json", "M.json", "P.json", "t_MP.json"],
    ["validate", "not_idempotent.json"],
    ["check", "yoneda", "M.json", "--object", "0"],
    ["check", "kan", "Y.json", "arrow.json", "pt0.json", "M.json"],
    ["compute", "end", "M.json", "P.json"],
    ["compute", "kan-right", "--legs", "Y.json", "arrow.json", "pt0.json"],
    ["compute", "map", "--format", "records", "N.json", "P.json"],
    ["validate", "dangling.json"],
]

for argv in RUNS:
    args = [str(FIX / a) if a.endswith(".json") else a for a in argv]
    out, err = io.StringIO(), io.StringIO()
    code = main(args, out, err)
    print("$ catcheck", " ".join(argv))
    print((out.getvalue() + err.getvalue()).rstrip())
    print(f"[exit {code}]\n")
