"""Run the identity suite over a fixture and a seeded random ideal."""

from momidual.corpus import fixture_document, load_fixture, random_ideal
from momidual.verify import run_identity_suite, suite_passed

for tag, ideal, attributes in [
    ("paper:tighten", load_fixture("tighten"), fixture_document("tighten").attributes),
    ("random n=3 seed=11", random_ideal(3, 6, 11), {}),
]:
    results = run_identity_suite(ideal, attributes=attributes)
    print(f"{tag}: {'all checks pass' if suite_passed(results) else 'FAILURES'}")
    for r in results:
        line = f"  {r.status:>4}  {r.name}"
        if r.status in ("skip", "info") and r.detail:
            line += f"  ({r.detail})"
        print(line)
