"""Homogeneous representations of the virtual triplet group: relations,
kernels and irreducibility.

    python demos/virtual_extensions.py
"""

from tripletrep.analysis import irreducibility_test, root_of_unity_criterion
from tripletrep.groups import (
    GroupWord,
    PresentationKind as K,
    failed_relations,
    kernel_witness_search,
    pair_reflection_rep,
    presentation_of,
    sn_projection,
    word_eval,
)
from tripletrep.reps import omega

welded = presentation_of(K.WELDED_TRIPLET, 3)
print("omega1 failures on the welded group:", failed_relations(omega(3, 1, "b", "x"), welded))
print("omega2 failures on the welded group:", failed_relations(omega(3, 2, x="x"), welded))

print("\n(l1 r1)^2 under omega1 on two strands:")
print(word_eval(omega(2, 1, "b", "x"), "(l1 r1)^2").render())
print("least m with (2/-2)^m = 1:", root_of_unity_criterion(2, -2))

w = GroupWord.parse("(l1 r2)^3")
forget = sn_projection("forget_ell", presentation_of(K.VIRTUAL_TRIPLET, 3))
print(f"\n{w} is trivial under omega1:", word_eval(omega(3, 1, "b", "x"), w).is_identity())
print("but its permutation image is", word_eval(forget, w).to_strings())

oracle = pair_reflection_rep(presentation_of(K.VIRTUAL_TRIPLET, 4))
print("kernel word for n = 4:", kernel_witness_search(omega(4, 1, 2, 3), oracle, 6))

for b, x in (("b", "x"), ("b", "b"), (2, -2)):
    print(f"omega1 n=3 b={b} x={x}:", irreducibility_test(omega(3, 1, b, x)))
