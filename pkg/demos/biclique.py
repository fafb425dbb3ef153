"""A sequence with a long tail of small terms always has a realization
in which v_1..v_{k-r} are joined to r vertices of the tail.

    python demos/biclique.py
"""

from potentia import run_layoff

seq = (15,) * 3 + (3,) * 9 + (1,) * 12
trace, witness = run_layoff(seq, 4, 1)
print(trace.table())
print("good neighborhoods:", trace.good_vertices)
print("embedding verified:", witness.verify(seq))
