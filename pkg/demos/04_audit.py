"""Running the theorem audit and reading a counterexample.

The registry holds ~100 executable statements: lattice lemmas,
neighborhood laws, the eight operator properties per kind, the
cross-kind composition claims, and a few existence searches.  Checks are
exact, trials are seeded, and any failing law comes back with a shrunk,
replayable instance.

Two of the claimed laws -- the kind-3 composition equalities
(lower3 = lower1 | lower2 and upper3 = upper1 & upper2) -- are actually
false, and the audit demonstrates that with tiny concrete spaces.  Only
their containment halves survive.
"""

from betacover import GenConfig, replay, run_audit

config = GenConfig(universe_size=4, parameter_count=3, grid_denominator=10, seed=42)
report = run_audit(config, trials=200)

print(f"{report.trials} trials in {report.wall_time:.1f}s; ok={report.ok}")

for tid, stats in report.stats.items():
    if stats.failures:
        print(f"  {tid} [{stats.status}]: {stats.failures} failures - {stats.statement}")

# Every failing law carries a minimized instance.  Replaying it through
# the public check() entry point reproduces the verdict bit for bit.
ce = report.stats["REL-F1"].first_counterexample
if ce is not None:
    doc = ce["space"]
    print("\nshrunk counterexample space for REL-F1:")
    print("  universe:", doc["universe"])
    print("  beta:", doc["beta"])
    for p, row in doc["membership"].items():
        print(f"  {p}: {row}")
    print("replayed verdict:", replay(ce).outcome)

# Skips are first-class: statements whose hypothesis is unsatisfiable on
# an instance (e.g. the boundedness condition) are skipped with a reason
# rather than silently passed.
sandwich = report.stats["SANDWICH"]
print(f"\nSANDWICH: {sandwich.passes} passes, {sandwich.skips} skips")
print("skip reasons:", sandwich.skip_reasons)
