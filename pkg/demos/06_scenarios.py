"""
Scenario reports
================

The same checks the command line runs, called from Python.
"""

import json

from gammasym.scenarios import list_scenarios, run_scenario

for name in list_scenarios():
    rep = run_scenario(name)
    print(f"{rep.status:4s}  {name}")

print(json.dumps(run_scenario("h3-z22-grading").as_json(), indent=2))
