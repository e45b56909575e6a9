"""Check every identity the construction promises, then break one on purpose.

All suites report the worst scale-relative residual over their sample points;
a corrupted conormal component must make the geometric suites fail, which
shows the checks have teeth.
"""

import numpy as np

from affsphere.paracomplex import ParaPoly
from affsphere.residuals import (
    ccr_residual,
    duality_residual,
    lift_residual,
    metric_conformality,
    monge_ampere_residual,
    random_regular_points,
    regular_graph_patch,
    two_form_residual,
)
from affsphere.surfaces import Domain, ParaCurve, compile_surface

rng = np.random.default_rng(2024)
curve = ParaCurve(
    ParaPoly([(0, 0), (1, 0.5), (-0.25, 1)]),
    ParaPoly([(0, 0), (0.5, -1), (0, 0), (1, 0.125)]),
)
box = Domain(-1.2, 1.2, -1.2, 1.2)


def show(report):
    flag = "pass" if report.passed else "FAIL"
    print(
        f"  {report.name:<13} {flag}  max {report.max_abs:9.3e}"
        f"  mean {report.mean_abs:9.3e}  over {report.points_checked} checks"
    )


points = random_regular_points(curve, 100, rng, box)
patch = regular_graph_patch(curve, box, res=16)
print(f"random degree-3 pair, {len(points)} regular points, {len(patch)} patch points")

print("identity suites:")
show(duality_residual(curve, points))
show(two_form_residual(curve, points))
show(metric_conformality(curve, points))
show(monge_ampere_residual(curve, patch))
show(lift_residual(curve, patch))

main, control = ccr_residual(curve, box)
show(main)
show(control)

# negative control: negate one conormal component and watch the suites object
broken = compile_surface(curve).with_patched_fields(negate_n2=True)
print("with n2 negated:")
show(duality_residual(broken, points))
show(two_form_residual(broken, points))
show(metric_conformality(broken, points))
