#!/usr/bin/env python3
"""Tabulate the superpolynomial for every coprime (m, n) up to a bound.

Writes one line per knot (text) or a JSON array; knots and their (n, m)
mirrors are deduplicated since the invariant coincides.

    python scripts/superpolynomial_table.py --max-sum 12
    python scripts/superpolynomial_table.py --max-sum 10 --json -o table.json
"""

import argparse
import json
import sys

from khr.dyck import KnotParams, coprime_pairs, rational_catalan
from khr.formula import genus, superpolynomial
from khr.laurent import invariant_to_json


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-sum", type=int, default=12, help="largest m+n to include")
    parser.add_argument("--json", action="store_true", help="emit a JSON array")
    parser.add_argument("-o", "--output", default=None, help="write here instead of stdout")
    args = parser.parse_args()

    rows = []
    for params in coprime_pairs(args.max_sum):
        if params.m < params.n:
            continue  # (m, n) and (n, m) give the same knot
        value = superpolynomial(params)
        rows.append(
            {
                "m": params.m,
                "n": params.n,
                "genus": genus(params),
                "paths": rational_catalan(params),
                "P": invariant_to_json(value),
                "P_text": value.text(),
            }
        )

    out = open(args.output, "w") if args.output else sys.stdout
    try:
        if args.json:
            json.dump(rows, out, indent=1, sort_keys=True)
            out.write("\n")
        else:
            for row in rows:
                out.write(
                    f"T({row['m']},{row['n']})  genus={row['genus']} "
                    f"paths={row['paths']}\n  P = {row['P_text']}\n"
                )
    finally:
        if args.output:
            out.close()


if __name__ == "__main__":
    main()
