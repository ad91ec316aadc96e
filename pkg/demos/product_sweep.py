"""
Splitting indices of products
=============================

The index of a product is a min-plus convolution of the factor indices.
"""

from splitrank import lookup, ProductSpace, si_profile, verify_theorem_brain
from splitrank.products import random_products

sl5 = lookup("SL(5,R)/SO(5)")
print("SL(5,R)/SO(5) si:", si_profile(ProductSpace([sl5])).si)

# two copies: at k = 2, both R-factors from one copy (7) beat one from each (4 + 4)
p = si_profile(ProductSpace([sl5, sl5]))
for k, (s, w) in enumerate(zip(p.si, p.witnesses)):
    print(f"  k={k}  si={s:3d}  split per factor {w}")

# a seeded sweep; spaces with an H^2 factor (and four small others) are left out
reports = [verify_theorem_brain(q) for q in random_products(50, seed=3)]
print("\n50 random products, inequality holds on", sum(r.passed for r in reports))
worst = min(reports, key=lambda r: min(c.si_k - c.bound for c in r.checks))
print("tightest:", worst.product.name)
