"""Print the four worked tables, optionally diffing them against the golden files."""
import argparse
import difflib
import sys
from pathlib import Path

from archimedes_sqrt.tables import emit_table

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--check", action="store_true", help="diff against tests/golden")
    args = parser.parse_args()
    status = 0
    for which in (1, 2, 3, 4):
        text = emit_table(which)
        print(f"== table {which} ==")
        print(text, end="")
        if args.check:
            expected = (GOLDEN / f"table{which}.txt").read_text(encoding="utf-8")
            diff = list(difflib.unified_diff(expected.splitlines(), text.splitlines(), lineterm=""))
            if diff:
                print("\n".join(diff))
                status = 1
    return status


if __name__ == "__main__":
    sys.exit(main())
