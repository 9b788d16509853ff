"""The command-line front end, driven from Python.

Each line below is what ``tetrasum <args>`` prints in exact format.
"""
from tetrasum.cli import run

for argv in [
    ["sixj", "1", "1", "1", "1", "1", "1"],
    ["threej", "1/2", "1/2", "0", "1/2", "-1/2", "0"],
    ["recouple", "1/2", "1/2", "1/2", "1/2"],
    ["probability", "1/2", "1/2", "1/2", "1/2", "0", "1"],
    ["geometry", "1", "1", "1", "1", "1", "1"],
    ["asympt", "20", "20", "20", "20", "20", "20"],
    ["qsixj", "1", "1", "1", "1", "1", "1", "--level", "7"],
    ["tv", "builtin:s3-5tet", "--level", "5"],
    ["pr-sum", "builtin:s3-2tet", "--cutoff", "1"],
]:
    status, out, err = run(argv + ["--format", "exact"])
    print("$ tetrasum", " ".join(argv), "--format exact")
    print(out or err, end="")

status, out, err = run(["frobnicate"])
print("$ tetrasum frobnicate  -> exit", status)
status, out, err = run(["sixj", "1", "1", "1", "1", "1", "1/3"])
print("$ tetrasum sixj 1 1 1 1 1 1/3  -> exit", status, err.strip())
