"""Staircase diagrams as SVG: generators, components and dual arrows."""

from pathlib import Path

from momidual.corpus import load_fixture
from momidual.ideals import minimalize
from momidual.staircase import staircase_svg

out_dir = Path(__file__).resolve().parent / "out"
out_dir.mkdir(exist_ok=True)

# a planar staircase: filled dots are generators, open dots are the
# irreducible components, and components on a coordinate plane grow one
# arrow per zero coordinate for the staircase face running off to infinity
plane = minimalize(2, [(0, 4), (1, 2), (3, 1), (5, 0)])
(out_dir / "staircase_plane.svg").write_text(staircase_svg(plane))

# the worked three-variable example renders as a projected lattice drawing
fig1 = load_fixture("fig1")
(out_dir / "staircase_fig1.svg").write_text(staircase_svg(fig1))

for path in sorted(out_dir.glob("staircase_*.svg")):
    text = path.read_text()
    counts = [text.count(f'class="{kind}"') for kind in ("generator", "component", "arrow")]
    print(f"{path.name}: {len(text)} bytes, {counts[0]} generators,",
          f"{counts[1]} components, {counts[2]} arrows")
