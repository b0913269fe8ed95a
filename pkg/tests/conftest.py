import pytest

from semibiplane import (
    SearchOptions,
    Structure,
    components,
    exhaustive_search,
    gold_table,
    make_group,
    make_table,
)


@pytest.fixture(scope="session")
def z2():
    return make_group([2])


@pytest.fixture(scope="session")
def z4():
    return make_group([4])


@pytest.fixture(scope="session")
def z6():
    return make_group([6])


@pytest.fixture(scope="session")
def z2z2():
    return make_group([2, 2])


@pytest.fixture(scope="session")
def gold21():
    return gold_table(2, 1)


@pytest.fixture(scope="session")
def ident_z6(z6):
    return make_table(z6, z6, range(6))


@pytest.fixture(scope="session")
def found_small():
    """All normalized semi-planar tables over Z2, Z4 and Z2xZ2."""
    out = {}
    for factors in ([2], [4], [2, 2]):
        G = make_group(factors)
        out[tuple(factors)] = list(exhaustive_search(G, G, SearchOptions()).found)
    return out


@pytest.fixture(scope="session")
def split_examples(found_small):
    """(table, structure, partition) for every split small example."""
    out = []
    for tables in found_small.values():
        for f in tables:
            S = Structure(f)
            part = components(S)
            if part.component_count == 2:
                out.append((f, S, part))
    return out
