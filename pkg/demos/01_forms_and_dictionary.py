"""
Forms of discriminant 4n and the triples they encode
====================================================

A binary quadratic form [a, b, c] with b^2 - 4ac = 4n, b even and a = c (mod 2)
maps to a solution of x^2 + y^2 - z^2 = n. The three coefficient moves T, S, U
keep the discriminant, and one of f, Tf, Uf always has the right parity.
"""

from boundedrep import (IntForm, apply_S, apply_T, apply_U, discriminant, form_to_triple,
                        parity_fix, triple_to_form, Triple)

f = IntForm(3, 2, -1)
print(f, "discriminant", discriminant(f))

# the dictionary in both directions
t = form_to_triple(f)
print("triple", t.xyz(), "represents", t.n)
print("back to", triple_to_form(t))

# moves preserve the discriminant
for move in (apply_T, apply_S, apply_U):
    g = move(f)
    print(move.__name__, g, discriminant(g))

# a form with outer coefficients of different parity gets repaired
for g in (IntForm(1, 0, -2), IntForm(2, 0, -1)):
    fixed = parity_fix(g)
    print(g, "->", fixed.form, "via", fixed.move.value, "->", form_to_triple(fixed.form).xyz())

# the square case needs no forms at all
print(Triple(7, 0, 0, 49))
