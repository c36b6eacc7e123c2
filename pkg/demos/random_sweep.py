"""How often does each tie-breaking mode reach the degree bound on random trees?"""

import time
from collections import Counter

import numpy as np

from treeaug import augment_tree, augmentation_lower_bound, is_k_connected, is_path, random_tree
from treeaug.errors import PatternExhaustedError

rng = np.random.default_rng(0)
sizes = rng.integers(8, 16, size=60)

for mode in ("lowest", "search"):
    tally = Counter()
    t0 = time.perf_counter()
    for seed, n in enumerate(sizes):
        t = random_tree(int(n), seed)
        if is_path(t):
            continue
        for r in range(3, min(int(n) - 1, 5) + 1):
            try:
                h, eca = augment_tree(t, r, tie_break=mode)
            except PatternExhaustedError:
                tally["exhausted"] += 1
                continue
            ok = is_k_connected(h, r) and len(eca) == augmentation_lower_bound(t, r).bound
            tally["optimal" if ok else "off"] += 1
    print(f"{mode:>6}: {dict(tally)}  ({time.perf_counter() - t0:.1f}s)")
