"""Level-l matrices of g1, g2 and the word maps from loops to braids."""

from monodromy.braidrep import eval_word, lantern_check, level_context, tk_generator
from monodromy.words import Word

for l in (1, 2, 3, 4, 8):
    ctx = level_context(l)
    print(f"l={l}: conductor {ctx.conductor}, t is {ctx.t_mode}")

l = 3
g1, g2 = tk_generator(l, 1), tk_generator(l, 2)
print("braid relation holds:", g1 * g2 * g1 == g2 * g1 * g2)
print("(g1 g2)^3 is scalar:", ((g1 * g2) ** 3).is_scalar())

# the distinguished loop and a five-point loop, both routed to B_3
sigma = Word.parse("s1^-1 s2", "sigma")
print("rho(sigma) trace:", eval_word(l, sigma).trace())
xi = Word.parse("x3 x1", "xi")
print("rho(x3 x1) det:", eval_word(l, xi).det())

rep = lantern_check(l)
print("lantern word", rep["sigma_word"], "acts trivially:", rep["is_identity"])
