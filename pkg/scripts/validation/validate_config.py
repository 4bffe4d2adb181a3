#!/usr/bin/env python3
"""
Validate seating.yaml configuration file.

Checks every section for known keys and value types, then loads it through
the package loader so both agree on what is valid.

Usage:
    python scripts/validation/validate_config.py --config config/seating.yaml
"""

import argparse
import sys
from dataclasses import fields
from pathlib import Path

import yaml

sys.path.insert(0, str(Path(__file__).parent.parent.parent / "src" / "packages" / "polite-seating"))

from polite_seating.config import SECTIONS, config_from_dict


def validate_config(config_path: str) -> int:
    """
    Validate a seating configuration.

    Args:
        config_path: Path to seating.yaml

    Returns:
        0 if valid, 1 if invalid
    """
    print(f"📋 Validating {config_path}...")

    try:
        with open(config_path, 'r') as f:
            raw = yaml.safe_load(f) or {}

        if not isinstance(raw, dict):
            print("❌ Top level must be a mapping of sections")
            return 1

        for name in raw:
            if name not in SECTIONS:
                print(f"⚠️  Unknown section '{name}' is ignored")

        for name, cls in SECTIONS.items():
            section = raw.get(name)
            if section is None:
                print(f"   ⚠️  {name}: missing, defaults apply")
                continue
            if not isinstance(section, dict):
                print(f"❌ {name}: must be a mapping, got {type(section).__name__}")
                return 1
            known = {entry.name for entry in fields(cls)}
            for key in section:
                if key not in known:
                    print(f"❌ {name}: unknown key '{key}'")
                    return 1
            print(f"   ✅ {name}: " + ', '.join(f"{key}={section[key]}" for key in section))

        config = config_from_dict(raw, source=config_path)
        if config.verify.nmax_oracle > config.verify.nmax_plain_oracle:
            print("❌ verify: nmax_oracle must not exceed nmax_plain_oracle")
            return 1
        if config.oracle.naive_cap > config.verify.nmax_plain_oracle:
            print("⚠️  oracle.naive_cap is above verify.nmax_plain_oracle and will never be reached")

        print(f"\n✅ Validated {len(SECTIONS)} sections")
        return 0

    except yaml.YAMLError as e:
        print(f"❌ YAML syntax error: {e}")
        return 1
    except FileNotFoundError:
        print(f"❌ File not found: {config_path}")
        return 1
    except ValueError as e:
        print(f"❌ {e}")
        return 1


def main():
    parser = argparse.ArgumentParser(
        description="Validate seating configuration"
    )
    parser.add_argument(
        '--config',
        default='config/seating.yaml',
        help='Path to seating.yaml (default: config/seating.yaml)'
    )

    args = parser.parse_args()
    return validate_config(args.config)


if __name__ == "__main__":
    sys.exit(main())
