"""The same computations as machine-readable reports (what the command line prints)."""

import json

from monodromy.cli import cmd_fivepoint, cmd_fusion, cmd_scan, render_csv, validate

rep = cmd_fivepoint(5, "x3 x1")
validate(rep)
print(json.dumps(rep["results"]["projective_order"], indent=2))

print(render_csv(cmd_scan(1, 8, timing=False)))
print(cmd_fusion(4, 0, [1, 1, 1, 1])["results"])
