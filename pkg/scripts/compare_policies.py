"""Compare the recorded roots with dyadic policies of increasing depth."""
from archimedes_sqrt.pi_bounds import SqrtPolicy, run_archimedes
from archimedes_sqrt.rational import format_fraction

for policy in [SqrtPolicy.archimedes_recorded()] + [SqrtPolicy.dyadic(d) for d in (2, 3, 4, 8, 16)]:
    result = run_archimedes(policy)
    lo, hi = result.decimals()
    print(f"{policy.name:>12}  {lo} < pi < {hi}   "
          f"({format_fraction(result.lower)}, {format_fraction(result.upper)})")
