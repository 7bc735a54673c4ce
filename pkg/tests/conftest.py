import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from starcayley import jordan, kkt  # noqa: E402


@pytest.fixture(scope="session")
def instance_cache():
    """Shared construction cache so expensive objects are built once."""
    cache = {}

    def get(kind: str, selector: str, mu=Fraction(1)):
        key = (kind, selector, mu)
        if key in cache:
            return cache[key]
        if kind == "algebra":
            value = jordan.make_algebra(selector)
        elif kind == "lie":
            value = kkt.GradedLieAlgebra(get("algebra", selector), mu)
        elif kind == "chart":
            from starcayley.chart import SymplecticChart

            value = SymplecticChart(get("lie", selector, mu))
        elif kind == "srep":
            from starcayley.starrep import StarRepresentation

            value = StarRepresentation(get("lie", selector, mu))
        elif kind == "rho":
            value = get("srep", selector, mu).rho_basis()
        elif kind == "series":
            from starcayley.hds import DiscreteSeries

            value = DiscreteSeries(get("lie", selector, mu))
        else:
            raise KeyError(kind)
        cache[key] = value
        return value

    return get
