import random

from hypothesis import strategies as st

from tetrasum.wigner import Tetra6j


def random_admissible(rng: random.Random, top: int) -> Tetra6j:
    """Admissible symbol with doubled spins <= top, built face by face."""
    while True:
        a, b = rng.randint(0, top), rng.randint(0, top)
        c = rng.choice(range(abs(a - b), min(a + b, top) + 1, 2))
        d = rng.randint(0, top)
        # (d e c): e ranges over |d-c|..d+c with the parity of d+c
        es = range(abs(d - c), min(d + c, top) + 1, 2)
        if not es:
            continue
        e = rng.choice(es)
        fs = [f for f in range(top + 1)
              if Tetra6j(a, b, c, d, e, f).is_admissible()]
        if fs:
            return Tetra6j(a, b, c, d, e, rng.choice(fs))


@st.composite
def admissible_symbols(draw, top=12):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_admissible(random.Random(seed), top)


@st.composite
def admissible_triads(draw, top=16):
    a = draw(st.integers(0, top))
    b = draw(st.integers(0, top))
    c = draw(st.sampled_from(range(abs(a - b), a + b + 1, 2)))
    return a, b, c


def _pick(rng, rng_range):
    return rng.choice(rng_range) if rng_range else None


def random_be_spins(rng: random.Random, top: int, r: int | None = None):
    """Doubled (a,b,c,d,e,f,p,q,rr) whose right-hand Biedenharn-Elliott
    triads (p q rr), (p a d), (e q d), (e a rr), (f q c), (f b rr), (p b c)
    are admissible (q-admissible at level r when given)."""
    from tetrasum.recoupling import coupling_range
    from tetrasum.qdeform import is_q_admissible
    from tetrasum.spin import _admissible2

    def ok(x, y, z):
        return is_q_admissible(x, y, z, r) if r else _admissible2(x, y, z)

    def rng_of(*pairs):
        return [z for z in coupling_range(*pairs) if z <= top and all(ok(u, v, z) for u, v in pairs)]

    while True:
        p, q, a, b = (rng.randint(0, top) for _ in range(4))
        rr = _pick(rng, rng_of((p, q)))
        d = _pick(rng, rng_of((p, a)))
        c = _pick(rng, rng_of((p, b)))
        if None in (rr, d, c):
            continue
        e = _pick(rng, rng_of((q, d), (a, rr)))
        f = _pick(rng, rng_of((q, c), (b, rr)))
        if None in (e, f):
            continue
        return a, b, c, d, e, f, p, q, rr
