import itertools

import pytest


def brute_force_pattern(sigma):
    """O(L^3) reference: positions p<q<r with sigma_r < sigma_p < sigma_q."""
    return any(
        sigma[r] < sigma[p] < sigma[q]
        for p, q, r in itertools.combinations(range(len(sigma)), 3)
    )


@pytest.fixture(scope="session")
def tables():
    from wheelperiod import class_table

    return {L: class_table(L, workers=1) for L in range(2, 9)}
