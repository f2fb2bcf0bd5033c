"""
Five decisions for a two-group comparison
=========================================

A chick weight feeding experiment: ten chicks per diet, summarized by
mean and standard deviation.  Instead of one yes/no answer about the
null, the procedure picks one of five verdicts about the mean
difference theta, so the report carries a direction.
"""

from fivedecision import (
    chickweight_summary,
    confidence_interval,
    five_decision,
    jones_tukey_decision,
    kaiser_decision,
    two_sample_t,
)

data = chickweight_summary()
diet3 = data.group("diet 3")
diet2 = data.group("diet 2")
print(f"diet 3: n={diet3.n} mean={diet3.mean} sd={diet3.sd}")
print(f"diet 2: n={diet2.n} mean={diet2.mean} sd={diet2.sd}")

# Pooled two-sample t test of theta = mean(diet 3) - mean(diet 2).
r = two_sample_t(diet3, diet2)
print(f"\nt = {r.t_stat:.3f} on {r.null.df:g} df, two-sided p = {r.p_two_sided:.3f}")
print(f"estimate = {r.estimate:.1f} g, se = {r.se:.1f} g")

# The nested intervals behind the five decisions: the wide one at
# level 1 - alpha, the narrow one at 1 - 2*alpha.
for level in (0.95, 0.90):
    lo, hi = confidence_interval(r, level)
    print(f"{level:.0%} CI: [{lo:.1f}, {hi:.1f}]")

# One verdict per significance level.  At 5% the data rule out
# theta < 0 but not theta <= 0; at 10% they rule out theta <= 0; at 1%
# they rule out nothing.
print()
for alpha in (0.10, 0.05, 0.01):
    d = five_decision(r.t_stat, r.null, alpha)
    print(f"alpha={alpha:.2f}: decision {d.index}, reject {d.rejected.value}")

# The two classical three-decision procedures are merges of the same
# partition.  Kaiser runs each side at alpha/2 and stays undecided
# here; Jones-Tukey runs each side at full alpha and, granting that
# theta = 0 is impossible, concludes the diet 3 mean is higher.
k = kaiser_decision(r.t_stat, r.null, 0.05)
jt = jones_tukey_decision(r.t_stat, r.null, 0.05)
print(f"\nKaiser at 5%: decision {k.index} ({k.rejected.value})")
print(f"Jones-Tukey at 5%: decision {jt.index} ({jt.rejected.value})")
