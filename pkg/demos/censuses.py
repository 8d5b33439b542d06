"""Exhaustive classification of 2-local blocks over small prime fields.

    python demos/censuses.py [p]
"""

import sys

from tripletrep.analysis import classify_homog_2local_fp, classify_l3_2local_fp
from tripletrep.groups import PresentationKind as K

p = int(sys.argv[1]) if len(sys.argv) > 1 else 5

for kind in (K.TRIPLET, K.VIRTUAL_TRIPLET, K.WELDED_TRIPLET):
    census = classify_homog_2local_fp(kind, p)
    print(f"{kind.value:16} p={p}: {len(census.solutions):3} solutions {census.counts()}"
          f" unmatched={len(census.unmatched)}")

census = classify_l3_2local_fp(p)
print(f"{'L3 two blocks':16} p={p}: {len(census.solutions):3} solutions {census.counts()}"
      f" unmatched={len(census.unmatched)}")
print("a few family 2 tuples:", [s for s, f in census.family_matches.items() if f == "family2"][:4])
