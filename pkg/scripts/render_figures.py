#!/usr/bin/env python3
"""Write DOT files for the square, cube and hexagon (plus T3-annotated variants)."""
import argparse
from pathlib import Path

from opposition.diagrams import FORWARD, Shape, build_diagram, render_dot, verify_shape
from opposition.instances import three_valued


def figures() -> dict[str, str]:
    t3 = three_valued()
    out = {}
    for shape in Shape:
        out[f"{shape}.dot"] = render_dot(build_diagram(shape))
    out["hexagon_abs.dot"] = render_dot(build_diagram(Shape.HEXAGON, abs_form=True))
    out["cube_t3.dot"] = render_dot(build_diagram(Shape.CUBE), verify_shape(t3, Shape.CUBE, FORWARD))
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("outdir", nargs="?", default="figures")
    args = parser.parse_args()
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for name, text in figures().items():
        (outdir / name).write_text(text)
        print(outdir / name)


if __name__ == "__main__":
    main()
