"""Run every desk-scale reproduction check and print one line each.

Equivalent to ``robustconn verify-paper``.  Run with ``python3 demos/reproduce.py``.
"""

from robustconn.acceptance import run

results = run()
print(f"{sum(r.passed for r in results)}/{len(results)} passed")
