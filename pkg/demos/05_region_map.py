"""ASCII maps of the boundedness region in the (1/p, 1/q) square.

As the critical index grows from 1 to 2 the separating segment

    1/q = 1/p + 1/c - 1,   1 <= p <= c'

sweeps from the diagonal down to 1/q = 1/p - 1/2 and the bounded region
(everything above the segment, plus the p > c' strip) only ever expands.
Cells: '#' bounded, '.' unbounded, '*' on the critical segment.
"""

from fractions import Fraction

from shimorin_lab.classify import BOUNDED, UNBOUNDED, region_grid

GLYPH = {BOUNDED: "#", UNBOUNDED: "."}

for c in (1, Fraction(4, 3), 2):
    rows = region_grid(c, 24)
    cells = {}
    for ip, iq, kind, _ in rows:
        cells[(round(ip * 48), round(iq * 48))] = GLYPH.get(kind, "*")
    print(f"critical index c = {c}   (1/p rightward, 1/q upward)")
    for j in range(47, 0, -2):
        line = "".join(cells[(i, j)] for i in range(1, 48, 2))
        print("   " + line)
    print()

print("legend: '#' bounded, '.' unbounded, '*' critical segment (measure-dependent)")
print("the '#' set is monotone in c: each map contains the previous one.")
