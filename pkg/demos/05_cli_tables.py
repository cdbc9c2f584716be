"""Driving the command-line interface to produce plot-ready tables.

Run:  python demos/05_cli_tables.py

Every command writes CSV with a header row (or JSON with a metadata block)
and the same arguments always produce the same bytes.
"""

import subprocess
import sys


def stablelaw(*args):
    proc = subprocess.run([sys.executable, "-m", "stablelaw", *args], capture_output=True, text=True)
    print(f"$ stablelaw {' '.join(args)}   [exit {proc.returncode}]")
    print(proc.stdout or proc.stderr)
    return proc


def main():
    stablelaw("eval", "cf", "--alpha", "2", "--c", "0.7071068", "--grid", "0,3,4")
    stablelaw("eval", "pdf", "--alpha", "1", "--grid", "-2,2,5")
    stablelaw("eval", "levy-density", "--alpha", "1", "--beta", "1", "--grid", "-1,-0.5,2")
    stablelaw("lk-check", "--alpha", "1.2", "--beta", "0.5", "--grid", "-3,3,4")
    stablelaw("tail-balance", "--p", "0.7", "--q", "0.3", "--k", "1.5", "--center")
    stablelaw("verify", "--suite", "eulerian")
    stablelaw("eval", "pdf", "--alpha", "4", "--grid", "0,1,2")  # usage error: exit 2
    a = stablelaw("eval", "cdf", "--alpha", "0.7", "--grid", "-1,1,3", "--format", "json")
    b = subprocess.run([sys.executable, "-m", "stablelaw", "eval", "cdf", "--alpha", "0.7", "--grid", "-1,1,3",
                        "--format", "json"], capture_output=True, text=True)
    print("byte-identical on rerun:", a.stdout == b.stdout)


if __name__ == "__main__":
    main()
