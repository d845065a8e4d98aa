"""Checks of the mvvol command line: output formats and exit codes."""

import csv
import io
import json
import os
import subprocess
import sys
import tempfile

MVVOL = sys.argv[1]
failures = []


def run(*args):
    p = subprocess.run([MVVOL, *args], capture_output=True, text=True, timeout=300)
    return p.returncode, p.stdout, p.stderr


def check(name, cond, detail=""):
    print(("ok   " if cond else "FAIL ") + name + (f": {detail}" if detail and not cond else ""))
    if not cond:
        failures.append(name)


rc, out, _ = run("volume", "3,-1^3")
check("volume text", rc == 0 and out.strip() == "Vol Q(3,-1^3) = 5/9 * pi^4", out)

rc, out, _ = run("--format", "json", "completed", "3,-1^3")
j = json.loads(out)
check("completed json has three graphs", rc == 0 and len(j["graphs"]) == 3)
check("completed json total", j["completed"] == "2/3 * pi^4")
check("json round trip", json.dumps(json.loads(out), indent=2) + "\n" == out)

rc, out, _ = run("--format", "csv", "volume", "7,-1^3")
rows = list(csv.DictReader(io.StringIO(out)))
check("csv columns", rc == 0 and list(rows[0].keys()) == ["stratum", "d", "g", "vol_num", "vol_den", "completed_num", "completed_den"])
check("csv values", rows[0]["vol_num"] == "27" and rows[0]["vol_den"] == "50" and rows[0]["completed_den"] == "360")

rc, out, _ = run("count-metrics", "--g", "0", "--n", "3", "--kappa", "5,1", "--b", "5,2,1")
check("count-metrics off walls", rc == 0 and out.strip() == "3", out)
rc, out, _ = run("count-metrics", "--g", "0", "--n", "3", "--kappa", "5,1", "--b", "6,2,2")
check("count-metrics on a wall", rc == 0 and out.strip() == "2", out)

rc, out, _ = run("--format", "json", "st-count", "3,-1^3", "--N", "20")
check("st-count json", rc == 0 and json.loads(out)["card"] == "953430", out[:200])

rc, out, _ = run("--format", "json", "cylinders", "3,-1^3")
freq = json.loads(out)["frequency"]
check("cylinder frequencies", rc == 0 and freq == {"1": "3/5", "2": "2/5"}, out)

rc, out, _ = run("--approx", "volume", "3,-1^3")
check("approx is labeled", rc == 0 and "not exact" in out and "5/9 * pi^4" in out, out)

# Exit codes: 0 ok, 1 bad input, 2 unavailable.
rc, _, err = run("volume", "3,-1")
check("invalid stratum exits 1", rc == 1 and "error" in err, err)
rc, _, _ = run("volume", "2,-1^2")
check("even part exits 1", rc == 1)
rc, _, _ = run("bogus")
check("unknown subcommand exits 1", rc == 1)
rc, _, _ = run("--help")
check("help exits 0", rc == 0)
rc, _, err = run("--source", "table", "kontsevich", "--g", "0", "--n", "6", "--kappa", "7^2,1^2")
check("untabulated entry exits 2", rc == 2 and "unavailable" in err, err)
rc, _, _ = run("--minimal-strata", "/nonexistent/minimal.json", "volume", "3,-1^3")
check("missing overrides file exits 1", rc == 1)

with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
    json.dump({"H(2)": "1/120 * pi^4"}, f)
    path = f.name
try:
    rc, out, _ = run("--minimal-strata", path, "volume", "7,-1^3")
    check("overrides file", rc == 0 and out.strip() == "Vol Q(7,-1^3) = 27/50 * pi^6", out)
finally:
    os.unlink(path)

rc, out, _ = run("--format", "json", "verify", "--max-d", "6")
v = json.loads(out)
check("verify d <= 6", rc == 0 and v["passed"] and len(v["rows"]) == 8, out[:300])

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
