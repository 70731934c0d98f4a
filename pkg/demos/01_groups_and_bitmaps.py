"""
Finite abelian groups, element bitmaps, and CRT splitting
=========================================================

Everything downstream works over Z_{n1} x ... x Z_{nr}: elements are
coordinate tuples, subsets are boolean bitmaps indexed by the mixed-radix
element index, and products of coprime cyclic factors can be viewed either
as one big cyclic group or as the product, with an explicit bijection.
"""

import tempfile

from chroma.groups import CrtSplit, ElementSet, make_group, parse_group_literal

# -- a product group and its element indexing -------------------------------

g = make_group([4, 9, 25])
print("group:", g.literal, "order:", g.order)

x = g.element((1, 2, 3))
y = g.element((3, 8, 24))
print("x + y =", g.add(x, y).coords)          # coordinatewise, each mod n_i
print("-x    =", g.neg(x).coords)
print("index of x:", g.index(x), "and back:", g.from_index(g.index(x)).coords)

# group literals round-trip through a compact text form
for literal in ("Z(7)", "Z(3)^4", "Z(2)xZ(3)", "Zm(15015)"):
    print(literal, "->", parse_group_literal(literal).literal)

# -- element sets are bitmaps with set algebra ------------------------------

a = ElementSet.from_indices(g, [0, 5, 9, 100])
b = ElementSet.from_indices(g, [5, 100, 101])
print("|A| =", a.count, "|A n B| =", a.intersection(b).count,
      "|A u B| =", a.union(b).count)

# bitmaps serialize as a one-line run-length format, stable across runs
with tempfile.NamedTemporaryFile(mode="r", suffix=".bits") as fh:
    a.save(fh.name)
    print("serialized:", open(fh.name).read().strip()[:60], "...")
    print("round-trip ok:", ElementSet.load(fh.name).indices().tolist()
          == a.indices().tolist())

# -- CRT: Z_m vs the product of its prime-power factors ---------------------

m = 7 * 11 * 13
split = CrtSplit(m, (7, 11, 13))
print("\nZ_%d <-> %s" % (m, split.product_group.literal))
scalar = 123
coords = split.to_coords(scalar)
print("123 splits into", coords, "and recombines to", split.to_scalar(coords))
