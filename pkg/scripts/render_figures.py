"""Render a few named gaskets to figures/."""

from pathlib import Path

from apollonian.enumeration import GasketKey, key_from_quintet
from apollonian.render import RenderOptions, render_svg
from apollonian.symbols import generate

OUT = Path(__file__).resolve().parents[1] / "figures"

FIGURES = [
    ("window_bends.svg", GasketKey(1, 0, 1, 1), 60, RenderOptions(label_mode="bends")),
    ("window_symbols.svg", GasketKey(1, 0, 1, 1), 40, RenderOptions(width_px=1000, label_mode="symbols")),
    ("d1_frame.svg", key_from_quintet((-2, 3, 6, 7, 7)), 120, RenderOptions(draw_frame=True)),
    ("even_frame.svg", key_from_quintet((-3, 5, 8, 8, 12)), 120, RenderOptions(draw_frame=True)),
    ("irregular.svg", GasketKey(6, 2, 5, 8), 600, RenderOptions(label_mode="bends")),
]


def main():
    OUT.mkdir(exist_ok=True)
    for name, key, max_bend, opts in FIGURES:
        packing = generate(key, max_bend)
        (OUT / name).write_text(render_svg(packing, opts))
        print(f"{name}: {len(packing.circles)} circles")


if __name__ == "__main__":
    main()
