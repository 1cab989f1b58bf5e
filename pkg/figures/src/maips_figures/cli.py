"""Command line entry point: maips-figures SUITE_DIR [--out DIR]."""

import argparse
import sys

from .io import MissingArtifact
from .render import KINDS, render_all


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="maips-figures",
        description="render figures from a suite output directory",
    )
    parser.add_argument("suite_dir", help="directory written by a suite run")
    parser.add_argument("--out", default="figures-out",
                        help="where to write the images")
    parser.add_argument("--kinds", default=None,
                        help="comma-separated subset of: "
                             + ", ".join(sorted(KINDS)))
    args = parser.parse_args(argv)
    kinds = args.kinds.split(",") if args.kinds else None
    try:
        written = render_all(args.suite_dir, args.out, kinds=kinds)
    except (MissingArtifact, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
