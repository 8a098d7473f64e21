"""Exact Cayley-ball growth tables for a few standard groups.

Each table lists gamma(k) = |B(k)|, the sphere sizes sigma(k), and the
root upper bounds gamma(k)^(1/k) that squeeze down onto the growth rate.
"""

from groupgrowth import GroupSpec, MatrixZ2, estimate_rates, growth_table, make_group

SPECS = [
    GroupSpec.free(2),
    GroupSpec.free_abelian(2),
    GroupSpec.heisenberg(),
    GroupSpec.klein_bottle(),
    GroupSpec.torus_bundle(MatrixZ2.from_rows(((2, 1), (1, 1)))),
    GroupSpec.free_product(GroupSpec.cyclic(2), GroupSpec.cyclic(3)),
]


def show(spec, kmax=10):
    handle = make_group(spec)
    table = growth_table(handle, handle.default_generators(), kmax)
    rates = estimate_rates(table).to_dict()
    print(f"== {spec.describe()} ==")
    print("  k     gamma     sigma   gamma^(1/k)")
    for k in range(kmax + 1):
        root = f"{table.gamma[k] ** (1 / k):10.4f}" if k else " " * 10
        print(f"  {k:2d} {table.gamma[k]:9d} {table.sigma[k]:9d} {root}")
    print(f"  verdict: {rates['verdict']}  inf root bound: {rates['inf_root']}")
    print()


if __name__ == "__main__":
    for spec in SPECS:
        show(spec)
