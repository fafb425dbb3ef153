"""The laying-off algorithm on a 14-term sequence, step by step.

This sequence does not meet the hypotheses that guarantee a biclique, so
claim checking is off. The table shows each laid-off vertex, the
neighborhood it took and the resulting residual.

    python demos/layoff_trace.py
"""

from potentia.layoff import laying_off

SEQ = (9, 9, 9, 9, 8, 8, 7, 7, 7, 7, 4, 4, 4, 4)

for step, state in laying_off(SEQ, 5, 1, max_steps=4, check_claims=False):
    part = step.partition
    print(
        f"p={step.p}  laid off v{step.laid_off:<2}  N={sorted(step.neighborhood)}  "
        f"residual={step.residual}  inconsistency={part.inconsistency}"
    )
