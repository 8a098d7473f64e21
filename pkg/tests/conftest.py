"""Shared fixtures. The heavier growth tables are built once per session."""

import pytest

from groupgrowth import GroupSpec, MatrixZ2, growth_table, make_group, scan_hyperbolic

# acceptance tests record (label, passed) here; summary prints one line each
ACCEPTANCE_RESULTS = {}


def record_criterion(num: int, label: str, passed: bool):
    ACCEPTANCE_RESULTS[num] = (label, passed)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        label, passed = ACCEPTANCE_RESULTS[num]
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {num} [{verdict}] {label}")


def build_table(spec, kmax, **kwargs):
    handle = make_group(spec)
    return growth_table(handle, handle.default_generators(), kmax, **kwargs)


@pytest.fixture(scope="session")
def free2_k8():
    return build_table(GroupSpec.free(2), 8)


@pytest.fixture(scope="session")
def z2_k30():
    return build_table(GroupSpec.free_abelian(2), 30)


@pytest.fixture(scope="session")
def z3_k40():
    return build_table(GroupSpec.free_abelian(3), 40)


@pytest.fixture(scope="session")
def dihedral_k50():
    spec = GroupSpec.free_product(GroupSpec.cyclic(2), GroupSpec.cyclic(2))
    return build_table(spec, 50)


@pytest.fixture(scope="session")
def heisenberg_k40():
    return build_table(GroupSpec.heisenberg(), 40)


@pytest.fixture(scope="session")
def surface2_k4():
    return build_table(GroupSpec.surface(2), 4)


@pytest.fixture(scope="session")
def seifert2_k4():
    return build_table(GroupSpec.direct_product_with_Z(GroupSpec.surface(2)), 4)


@pytest.fixture(scope="session")
def torus_bundle_k12():
    A = MatrixZ2.from_rows(((2, 1), (1, 1)))
    return build_table(GroupSpec.torus_bundle(A), 12)


@pytest.fixture(scope="session")
def fp23_k8():
    spec = GroupSpec.free_product(GroupSpec.cyclic(2), GroupSpec.cyclic(3))
    return build_table(spec, 8)


@pytest.fixture(scope="session")
def fp222_k8():
    spec = GroupSpec.free_product(
        GroupSpec.cyclic(2), GroupSpec.cyclic(2), GroupSpec.cyclic(2)
    )
    return build_table(spec, 8)


@pytest.fixture(scope="session")
def scan5():
    return scan_hyperbolic(5)
