#!/usr/bin/env python3
"""Time the exact shell enumeration at acceptance scale."""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from quatdesign.orders import enumerate_shell, shell_count_formula


def main():
    for label, m_max in (("2T", 30), ("2O", 12), ("2I", 8)):
        t0 = time.time()
        total = 0
        for m in range(1, m_max + 1):
            shell = enumerate_shell(label, m)
            assert len(shell) == shell_count_formula(label, m)
            total += len(shell)
        dt = time.time() - t0
        print(f"{label}: m <= {m_max}, {total} points, {dt:.2f}s "
              f"({total / max(dt, 1e-9):,.0f} points/s)")


if __name__ == "__main__":
    main()
