"""Probe: three-way R~ agreement on S_4, cbar table self-check."""
import time
from flipclasses.perm import all_perms, bruhat_leq, length
from flipclasses.rtilde import (
    rtilde_oracle, rtilde_dyer, coeff_via_flipclasses, cbar_h3, cbar_h4,
)
from flipclasses.cbar5_data import check_table
from flipclasses.reforder import lex_order, revlex_order, random_ordering, validate
from random import Random

check_table()
print("cbar5 table self-check passed")

assert validate(lex_order(5)) and validate(revlex_order(5))
rng = Random(7)
for _ in range(10):
    assert validate(random_ordering(5, rng))
print("orderings validate")

t0 = time.time()
n_pairs = 0
for u in all_perms(4):
    for v in all_perms(4):
        if not bruhat_leq(u, v):
            continue
        n_pairs += 1
        po = rtilde_oracle(u, v)
        pd = rtilde_dyer(u, v)
        assert po == pd, (u, v, str(po), str(pd))
        pr = rtilde_dyer(u, v, revlex_order(4))
        assert po == pr, (u, v, str(po), str(pr))
        for h in range(6):
            cf = coeff_via_flipclasses(u, v, h)
            assert cf == po.coefficient(h), (u, v, h, cf, po.coefficient(h))
print(f"S_4: {n_pairs} comparable pairs, oracle=dyer=flipclasses(h<=5) "
      f"({time.time()-t0:.1f}s)")

from flipclasses.perm import identity, longest_element
print("R~(e,w0) S_4 =", rtilde_oracle(identity(4), longest_element(4)))

# S_5 exhaustive timing probe
t0 = time.time()
n_pairs = 0
for u in all_perms(5):
    for v in all_perms(5):
        if bruhat_leq(u, v):
            n_pairs += 1
            po = rtilde_oracle(u, v)
            pd = rtilde_dyer(u, v)
            assert po == pd
print(f"S_5: {n_pairs} comparable pairs oracle=dyer ({time.time()-t0:.1f}s)")

t0 = time.time()
for u in all_perms(5):
    for v in all_perms(5):
        if bruhat_leq(u, v):
            po = rtilde_oracle(u, v)
            for h in range(6):
                cf = coeff_via_flipclasses(u, v, h)
                assert cf == po.coefficient(h), (u, v, h, cf, po.coefficient(h))
print(f"S_5: flipclass recipe h<=5 matches oracle ({time.time()-t0:.1f}s)")
