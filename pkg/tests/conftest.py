from collections import Counter

from hypothesis import strategies as st

from app.schemas.shapes import Partition
from app.services.orders import enumerate_admissible_orders


@st.composite
def partition_strategy(draw, max_n=6, min_n=0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    if n == 0:
        return Partition()
    k = draw(st.integers(min_value=1, max_value=n))

    # Assign each box to a random row, then sort the row lengths
    bin_assignments = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    counts = Counter(bin_assignments)

    return Partition(parts=tuple(sorted(counts.values(), reverse=True)))


@st.composite
def admissible_order_strategy(draw, shape):
    """One admissible order on the cells of `shape`, drawn uniformly from the full list."""
    return draw(st.sampled_from(enumerate_admissible_orders(shape.cells())))
