""" Test tools/python/pool.py """

from xorgames.tools.python.pool import parallel_map, chunked_ranges


def square(x: int) -> int:
    return x * x


def test_chunked_ranges():
    """ Test: chunked_ranges() """
    assert chunked_ranges(10, 3) == [range(0, 3), range(3, 6), range(6, 10)]
    assert chunked_ranges(2, 8) == [range(0, 1), range(1, 2)]
    assert chunked_ranges(0, 4) == []

    # Contiguous, complete, nearly equal
    chunks = chunked_ranges(1001, 16)
    assert [i for r in chunks for i in r] == list(range(1001))
    assert max(map(len, chunks)) - min(map(len, chunks)) <= 1


def test_parallel_map():
    """ Test: parallel_map() keeps the order of the items """
    items = list(range(50))
    expected = [x * x for x in items]
    assert parallel_map(square, items) == expected
    assert parallel_map(square, items, workers=3) == expected
    assert parallel_map(square, [], workers=3) == []
