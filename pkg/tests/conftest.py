import itertools

import pytest


def words_up_to(k):
    """All binary words of length at most k, shortest first."""
    for m in range(k + 1):
        for letters in itertools.product("ab", repeat=m):
            yield "".join(letters)


def words_of_length(k):
    for letters in itertools.product("ab", repeat=k):
        yield "".join(letters)


@pytest.fixture(scope="session")
def small_words():
    return list(words_up_to(10))
