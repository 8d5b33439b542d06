"""Walk through the free-group action, its Fox Jacobians and the matrix image.

    python demos/free_group_and_jacobians.py
"""

from tripletrep.analysis import L3_ELEMENTS
from tripletrep.freegroup import FreeWord, aut_apply, fox_derivative, magnus_jacobian
from tripletrep.groups import image_closure, kernel_witness_search, word_eval
from tripletrep.reps import mu_automorphisms, mu_matrix, tits_theta

aut = mu_automorphisms(3)
l1, l2 = aut.image("l1"), aut.image("l2")
x1 = FreeWord.gen(1)
print("l1 sends x1 to", aut_apply(l1, x1))
print("l1 l2 l1 sends x1 to", aut_apply(l1 @ l2 @ l1, x1))
print("Fox derivative of x1 x2 x1^-1 in x1:", fox_derivative(FreeWord([(1, 1), (2, 1), (1, -1)]), 1))

print("\nJacobian of l1 on three strands:")
print(magnus_jacobian(l1).render())

rep = mu_matrix(3)
print("\nImages of the six elements of L_3:")
for w in L3_ELEMENTS:
    print(f"  {w or 'e':8}", word_eval(rep, w).to_strings())

for n in (3, 4, 5):
    print(f"image of the n = {n} matrix form has {image_closure(mu_matrix(n)).order} elements")

w = kernel_witness_search(mu_matrix(4), tits_theta(4), 8)
print("shortest kernel element for n = 4 (certified against the Tits matrices):", w)
