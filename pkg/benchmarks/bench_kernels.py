"""Compare the numba and numpy truth-table kernels.

Usage: python3 benchmarks/bench_kernels.py [--atoms 16 20 24] [--gates 400] [--repeat 3]

Each circuit is random and made unsatisfiable (x and not x at the root) so
both kernels scan the whole assignment space.  The end-to-end rows time the
oracle on a fixture with RDFSURFACES_NUMBA switched off and on.
"""

import argparse
import os
import random
import time
from pathlib import Path

from rdfsurfaces.normalize import merge_documents
from rdfsurfaces.oracle import entails, kernels
from rdfsurfaces.oracle.models import Circuit
from rdfsurfaces.parser import parse_document

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def random_circuit(n_atoms: int, gates: int, seed: int):
    rng = random.Random(seed)
    c = Circuit()
    nodes = [c.atom(i) for i in range(n_atoms)]
    for _ in range(gates):
        u, v = rng.choice(nodes), rng.choice(nodes)
        op = rng.random()
        nodes.append(c.not_(u) if op < 0.2 else c.and_(u, v) if op < 0.6 else c.or_(u, v))
    top = nodes[-1]
    return c.arrays(c.and_(top, c.not_(top)))


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_kernels(atoms, gates: int, repeat: int) -> None:
    if not kernels._HAVE_NUMBA:
        print("numba is not installed; only the numpy kernel runs")
    # compile once outside the timings
    warm = random_circuit(6, 10, 0)
    if kernels._HAVE_NUMBA:
        kernels.first_true_numba(*warm, 6)
    print(f"{'atoms':>5} {'nodes':>6} {'numpy s':>9} {'numba s':>9} {'speedup':>8}")
    for n in atoms:
        ops, a, b = random_circuit(n, gates, n)
        t_np = best_of(lambda: kernels.first_true_numpy(ops, a, b, n), repeat)
        if kernels._HAVE_NUMBA:
            t_nb = best_of(lambda: kernels.first_true_numba(ops, a, b, n), repeat)
            assert kernels.first_true_numba(ops, a, b, n) == kernels.first_true_numpy(ops, a, b, n)
            print(f"{n:>5} {len(ops):>6} {t_np:>9.4f} {t_nb:>9.4f} {t_np / t_nb:>7.1f}x")
        else:
            print(f"{n:>5} {len(ops):>6} {t_np:>9.4f} {'-':>9} {'-':>8}")


def load(*names: str):
    doc, prefixes = None, {}
    for name in names:
        part = parse_document((FIXTURES / f"{name}.n3s").read_text(), prefixes=prefixes)
        prefixes.update(part.prefix_map)
        doc = part if doc is None else merge_documents(doc, part)
    return doc


def bench_oracle(repeat: int) -> None:
    # entailment has to rule out every counter-model, so the scan is complete
    kb = load("researcher_preferences", "department_preferences", "venue_facts")
    goal = load("preference_goal")
    print()
    print(f"{'preferences entail goal, k=2':<30} {'seconds':>9}")
    for flag in ("0", "1"):
        os.environ["RDFSURFACES_NUMBA"] = flag
        entails(kb, goal, 2)
        t = best_of(lambda: entails(kb, goal, 2), repeat)
        label = "numba" if kernels.use_numba() else "numpy"
        print(f"{f'RDFSURFACES_NUMBA={flag} ({label})':<30} {t:>9.4f}")
    os.environ.pop("RDFSURFACES_NUMBA")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--atoms", type=int, nargs="+", default=[16, 20, 24])
    ap.add_argument("--gates", type=int, default=400)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    bench_kernels(args.atoms, args.gates, args.repeat)
    bench_oracle(args.repeat)


if __name__ == "__main__":
    main()
