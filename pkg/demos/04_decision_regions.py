"""
Decision regions on the t axis
==============================

Four quantiles carve the statistic line into five labeled regions.
Shrinking alpha pushes the outer boundaries outward and the verdict
toward "no rejection"; at alpha = 0.5 the middle region collapses to
the single point t = 0.
"""

from fivedecision import decision_regions, standard_normal, student_t

null = student_t(18)
for alpha in (0.10, 0.05, 0.01):
    regions = decision_regions(null, alpha)
    q1, q2, q3, q4 = regions.boundaries
    print(f"t(18), alpha={alpha}: q={q1:.3f}, {q2:.3f}, {q3:.3f}, {q4:.3f}")
    for span in regions.intervals():
        left = "[" if span.lower_closed else "("
        right = "]" if span.upper_closed else ")"
        body = f"{left}{span.lower:.3f}, {span.upper:.3f}{right}"
        print(f"  decision {span.index}: {body:<22} rejects {span.rejected.value}")
    print()

# Wider tails push t boundaries outward relative to the normal.
t_bounds = decision_regions(student_t(18), 0.05).boundaries
z_bounds = decision_regions(standard_normal(), 0.05).boundaries
print("alpha=0.05 boundaries, t(18) vs normal:")
for qt, qz in zip(t_bounds, z_bounds):
    print(f"  {qt:+.4f}  vs  {qz:+.4f}")

# The degenerate corner: alpha = 0.5 makes the no-rejection region a
# single point, so any nonzero statistic yields a directional verdict.
q = decision_regions(null, 0.5).boundaries
print(f"\nalpha=0.5 boundaries: {q[0]:.3f}, {q[1]:.3f}, {q[2]:.3f}, {q[3]:.3f}")
