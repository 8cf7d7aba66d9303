from ldirc import LinearSpan


def test_empty():
    """ Test an empty span. """
    span = LinearSpan()
    assert span.rank == 0
    assert span.solve(0) == 0
    assert span.solve(0b1) is None
    assert 0b1 not in span


def test_add_and_solve():
    """ Test adding rows and solving for parities. """
    span = LinearSpan([(0b011, 1), (0b110, 0)])
    assert span.rank == 2
    assert span.solve(0b101) == 1
    assert span.solve(0b001) is None
    assert 0b101 in span
    assert not span.add(0b101, 1)
    assert span.rank == 2
    assert span.add(0b001, 1)
    assert span.rank == 3
    assert span.solve(0b010) == 0
    assert span.solve(0b100) == 0
    assert span.solve(0b111) == 1


def test_reduce():
    """ Test the leading-bit reduction. """
    span = LinearSpan([(0b100, 1)])
    assert span.reduce(0b110) == (0b010, 1)
    assert span.reduce(0b010, 1) == (0b010, 1)
    assert span.reduce(0b100) == (0, 1)


def test_large_masks():
    """ Test rows over more unknowns than a machine word holds. """
    high = 1 << 200
    span = LinearSpan()
    assert span.add(high | 1, 1)
    assert span.add(1, 0)
    assert span.solve(high) == 1


def test_copy():
    """ Test that a copy grows independently. """
    span = LinearSpan([(0b011, 1)])
    other = span.copy()
    assert other.add(0b001, 0)
    assert other.solve(0b010) == 1
    assert span.solve(0b010) is None
    assert span.rank == 1


def test_truncate():
    """ Test dropping the rows of high leading bits. """
    span = LinearSpan([(0b1001, 1), (0b0110, 0), (0b0010, 1)])
    span.truncate(3)
    assert span.rank == 2
    assert span.solve(0b0100) == 1
    assert span.solve(0b1000) is None
    span.truncate(0)
    assert span.rank == 0
