"""The 144-element symmetry group of the 6j symbol and a memo table keyed on it."""
from tetrasum.wigner import SixJCache, Tetra6j, canonical_key, sixj_cached, sixj_exact, symmetry_orbit

s = Tetra6j.of(3, 6, 5, "7/2", "7/2", "7/2")
orbit = symmetry_orbit(s)
classical = symmetry_orbit(s, regge=False)
print(f"{s}: {len(classical)} classical images, {len(orbit)} with Regge's")
print("all equal:", len({sixj_exact(t) for t in orbit}) == 1, "value", sixj_exact(s))

# Orbits of special symbols are smaller; the sizes always divide 144.
for spins in [(1, 1, 1, 1, 1, 1), (2, 2, 2, 1, 1, 1), (1, 1, 1, 1, 1, 0)]:
    t = Tetra6j.of(*spins)
    print(t, "orbit size", len(symmetry_orbit(t)))

# A cache keyed on the smallest classical image turns permutations into hits.
cache = SixJCache()
for t in sorted(classical):
    sixj_cached(t, cache)
print("classical cache:", len(cache), "entry,", cache.hits, "hits,", cache.misses, "miss")

regge_cache = SixJCache(regge=True)
for t in sorted(orbit):
    sixj_cached(t, regge_cache)
print("Regge cache    :", len(regge_cache), "entry for all", len(orbit), "symbols")
print("canonical key  :", canonical_key(s, regge=True))
