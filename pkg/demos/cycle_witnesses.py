"""Exact cycle detection and power-of-two witnesses.

Run: python3 demos/cycle_witnesses.py
"""

from egsearch import (
    cycle_spectrum_bruteforce,
    find_power_of_two_cycle,
    graph_from_edges,
    has_cycle_of_length,
    verify_witness,
)

outer = [(i, (i + 1) % 5) for i in range(5)]
spokes = [(i, i + 5) for i in range(5)]
inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
petersen = graph_from_edges(10, outer + spokes + inner)

print("Petersen cycle lengths (brute force):", sorted(cycle_spectrum_bruteforce(petersen)))
print("4-cycle present:", has_cycle_of_length(petersen, 4) is not None)

w = find_power_of_two_cycle(petersen)
print(f"shortest power-of-two cycle: length {w.length}, vertices {w.vertices}")
print("witness checks out:", verify_witness(petersen, w))

# A 16-cycle with one chord splitting it into cycles of lengths 7 and 11:
# nothing shorter than 16 has power-of-two length.
c16 = graph_from_edges(16, [(i, (i + 1) % 16) for i in range(16)] + [(0, 6)])
print("C16 plus chord:", sorted(cycle_spectrum_bruteforce(c16)), "->", find_power_of_two_cycle(c16).length)
