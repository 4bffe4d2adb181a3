#!/usr/bin/env python3
"""
Write one OEIS b-file per sequence.

Each file is named b_<sequence>.txt and holds 'n value' lines from the
sequence's first index up to --nmax.

Usage:
    python scripts/generate_bfiles.py --nmax 60 --out-dir bfiles
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / "src" / "packages" / "polite-seating"))

from polite_seating.cli import sequence_lines
from polite_seating.formulas.counting import SEQUENCES


def generate_bfiles(nmax: int, output_dir: str, names=None) -> int:
    """
    Write b-files into output_dir.

    Args:
        nmax: Last index written
        output_dir: Target directory (created if missing)
        names: Sequences to write (default: all)

    Returns:
        Number of files written
    """
    output_path = Path(output_dir)
    output_path.mkdir(parents=True, exist_ok=True)

    print(f"📁 Writing b-files to: {output_dir}\n")
    written = 0
    for name in names or sorted(SEQUENCES):
        filepath = output_path / f"b_{name}.txt"
        lines = 0
        with open(filepath, 'w', encoding='utf-8', newline='\n') as f:
            for line in sequence_lines(name, nmax):
                f.write(line + '\n')
                lines += 1
        print(f"✅ Created: {filepath.name} ({lines} terms)")
        written += 1

    print(f"\n✅ Generated {written} b-files")
    return written


def main():
    parser = argparse.ArgumentParser(description="Generate OEIS b-files for every sequence")
    parser.add_argument('--nmax', type=int, required=True, help='Last index n')
    parser.add_argument('--out-dir', default='bfiles', help='Output directory (default: bfiles)')
    parser.add_argument('--sequence', action='append', choices=sorted(SEQUENCES),
                        help='Only this sequence (repeatable)')
    args = parser.parse_args()

    if args.nmax < 1:
        print(f"❌ --nmax must be >= 1, got {args.nmax}")
        return 1

    generate_bfiles(args.nmax, args.out_dir, args.sequence)
    return 0


if __name__ == "__main__":
    sys.exit(main())
