"""A seeded experiment on (1)^4 in Gr(2,4): table plus structure report.

Run: python demos/small_experiment.py [output.jsonl]
Re-running with the same output path resumes instead of starting over.
"""

import sys

from oscschubert.exper import ExperimentConfig, check_structures, render, run_experiment, tabulate

out = sys.argv[1] if len(sys.argv) > 1 else "demo_g24.jsonl"
config = ExperimentConfig("GR(2,4): 1^4", instances_per_type=50, master_seed=0, output_path=out)
records = run_experiment(config)
table = tabulate(records)
print(render(table, "text"))
print(check_structures(table, config.problem).to_text())
