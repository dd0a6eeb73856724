import random
from fractions import Fraction as Q

import pytest

from starspec import (
    build_star,
    char_transport_up,
    chi_from_char,
    classify,
    reduction_schedule,
    trajectory_dim,
)


@pytest.fixture(scope="session")
def e6():
    return build_star([2, 2, 2])


@pytest.fixture(scope="session")
def e6_class(e6):
    return classify(e6)


def random_feasible_instance(graph, family, k, rng):
    """Instance feasible in the family's k-th dimension, by construction.

    Draws positive terminal character data, transports it up the schedule,
    and rejects draws whose top character is not a valid instance.
    """
    d = trajectory_dim(graph, family, k)
    sched = reduction_schedule(graph, d)
    assert sched is not None
    for _ in range(500):
        f_term = [Q(rng.randint(1, 30)) for _ in range(graph.n_vertices)]
        f_term[sched.terminal] = Q(0)
        chars = char_transport_up(graph, sched, tuple(f_term))
        f = chars[-1]
        try:
            inst = chi_from_char(graph, f)
        except Exception:
            continue
        return d, f, inst
    raise AssertionError("could not sample a feasible instance")


@pytest.fixture
def rng():
    return random.Random(20240817)
