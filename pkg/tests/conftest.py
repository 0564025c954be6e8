import numpy as np
import pytest

from cfft import FieldSpec, Vector


@pytest.fixture(scope="session")
def C():
    return FieldSpec.complex_field()


@pytest.fixture(scope="session")
def GF():
    return FieldSpec.prime_field()


@pytest.fixture(scope="session")
def GF17():
    return FieldSpec.prime_field(17)


@pytest.fixture(scope="session")
def GF97():
    return FieldSpec.prime_field(97)


def rand_vector(field, s, rng) -> Vector:
    if field.is_prime_field:
        return Vector(rng.integers(0, field.p, size=s), field)
    return Vector(rng.standard_normal(s) + 1j * rng.standard_normal(s), field)


def rand_array(field, shape, rng) -> np.ndarray:
    if field.is_prime_field:
        return rng.integers(0, field.p, size=shape)
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
