"""Isomorph-free generation and canonical forms.

Run: python3 demos/generation.py
"""

import random
import time

from egsearch import GeneratorSpec, canonical_form, generate
from egsearch.graph_core import relabel

for n in range(4, 15, 2):
    t = time.perf_counter()
    count = sum(1 for _ in generate(GeneratorSpec(n, "cubic_connected")))
    print(f"connected cubic graphs on {n:2} vertices: {count:4}  ({time.perf_counter() - t:.2f}s)")

for n in range(4, 9):
    print(f"connected graphs with minimum degree 3 on {n} vertices:",
          sum(1 for _ in generate(GeneratorSpec(n, "min_degree_3"))))

# The certificate does not depend on how the vertices are labelled.
g = next(iter(generate(GeneratorSpec(10, "cubic_connected"))))
perm = list(range(g.n))
random.Random(1).shuffle(perm)
cf, cf2 = canonical_form(g), canonical_form(relabel(g, perm))
print("certificate:", cf.certificate, "same after relabelling:", cf.certificate == cf2.certificate)
print("automorphism generators:", len(cf.automorphism_generators))
