from collections import Counter

from hypothesis import strategies as st

from ggpunitary.partitions import Partition


@st.composite
def partitions(draw, max_n=12, min_n=0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    if n == 0:
        return Partition()
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    return Partition(sorted(Counter(bins).values(), reverse=True))
