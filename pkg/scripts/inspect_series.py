#!/usr/bin/env python3
"""Quick series explorer: print any catalog q-series, chart entry, or the
two expanded sides of an identity spec.

Examples:
    python scripts/inspect_series.py j 6
    python scripts/inspect_series.py t7:Phi7 10
    python scripts/inspect_series.py thm-7A-1.left 12
"""

import sys

from darboux.cli import dump_series


def main() -> int:
    if len(sys.argv) < 2:
        print(__doc__)
        return 2
    name = sys.argv[1]
    order = int(sys.argv[2]) if len(sys.argv) > 2 else 10
    print(dump_series(name, order) or "(zero series)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
