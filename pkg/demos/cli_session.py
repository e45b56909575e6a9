"""Drive the command-line interface end to end from Python.

Writes a curve file, then runs synth, classify, verify, and convert the way
a shell user would; every command is deterministic.
"""

import json
import os
import tempfile

from affsphere.cli import main
from affsphere.io import save_curve
from affsphere.paracomplex import ParaPoly
from affsphere.surfaces import ParaCurve

work = tempfile.mkdtemp(prefix="affsphere_cli_")
curve_file = os.path.join(work, "quad_cubic.json")
save_curve(ParaCurve(ParaPoly([0, 0, 1]), ParaPoly([0, 0, 0, 1])), curve_file)

mesh = os.path.join(work, "mesh.obj")
code = main(
    ["synth", "--curve", curve_file, "--domain", "-1.2,1.2,-1.2,1.2",
     "--res", "64", "--out", mesh]
)
print("synth exit", code, "->", mesh, os.path.getsize(mesh), "bytes")

report_file = os.path.join(work, "classes.json")
code = main(
    ["classify", "--curve", curve_file, "--domain", "-1.2,1.2,-1.2,1.2",
     "--res", "64", "--probe", "-0.6666667,0", "--out", report_file]
)
report = json.load(open(report_file))
print("classify exit", code, "->", len(report["points"]), "classified points")

verify_file = os.path.join(work, "verify.json")
code = main(
    ["verify", "--curve", curve_file, "--domain", "-1.2,1.2,-1.2,1.2",
     "--out", verify_file]
)
suites = json.load(open(verify_file))
print("verify exit", code, "->", [(r["name"], r["pass"]) for r in suites])

# a corrupted surface must fail with exit code 1
code = main(
    ["verify", "--curve", curve_file, "--suites", "duality,two_form",
     "--corrupt", "negate-n1", "--out", os.path.join(work, "broken.json")]
)
print("corrupted verify exit", code)

gen_file = os.path.join(work, "generator.json")
with open(gen_file, "w") as fh:
    json.dump({"signature": "indefinite", "poly": [[0, 0], [0, 0], ["1/2", 0]]}, fh)
curve_out = os.path.join(work, "from_generator.json")
code = main(["convert", "--mode", "cls", "--in", gen_file, "--out", curve_out])
print("convert exit", code, "->", json.load(open(curve_out))["F"])
