"""Seeded randomized counterexample search.

Each sample owns a random stream derived from (seed, sample index), so
the same config always produces byte-identical reports and a sweep can
be split into shards and merged without changing any draw.
"""

from limpoly import (
    SearchConfig,
    canonical_dumps,
    merge_reports,
    report_to_jsonable,
    run_search,
)

config = SearchConfig(
    claim_id="squeeze",
    degree_min=3,
    degree_max=4,
    samples=400,
    seed=42,
    distribution="log-uniform:0.001,1000",
    epsilon_policy="measure-times:1.01",  # hypothesis holds by construction
    delta=1.0,
)

report = run_search(config)
print("claim SQUEEZE over log-uniform zeros, eps = 1.01 x rest product, delta = 1")
for bucket in sorted(report.counts):
    print(f"  {bucket}: {report.counts[bucket]}")
print(f"stored counterexamples: {len(report.counterexamples)} (overflow {report.overflow})")
if report.counterexamples:
    first = report.counterexamples[0]
    print(f"example instance (sample {first.sample_index}):")
    print(f"  roots: {[round(r.real, 6) for r in first.roots]}")
    print(f"  worst distance: {first.verdict.details['max_distance']:.4f}")

print()
print("== determinism and sharding ==")
again = run_search(config)
print("rerun is byte-identical:",
      canonical_dumps(report_to_jsonable(report)) == canonical_dumps(report_to_jsonable(again)))

shards = [run_search(config, start=s, count=100) for s in (0, 100, 200, 300)]
merged = merge_reports(shards)
print("4-shard merge equals the single-shot sweep:",
      canonical_dumps(report_to_jsonable(merged)) == canonical_dumps(report_to_jsonable(report)))

print()
print("== the coefficient bound fails often on small zeros ==")
small = SearchConfig(
    claim_id="index_bound",
    degree_min=3,
    degree_max=3,
    samples=1000,
    seed=42,
    distribution="uniform:0.05,0.5",
)
hits = run_search(small)
print(f"violations in 1000 samples over uniform(0.05, 0.5): {hits.counts['COUNTEREXAMPLE']}")
