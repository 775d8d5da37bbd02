from hypothesis import strategies as st

from youngpowers.partitions import Partition

primes = st.sampled_from([2, 3, 5])


@st.composite
def partitions(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    parts = []
    left = n
    while left:
        part = draw(st.integers(1, min(left, parts[-1] if parts else left)))
        parts.append(part)
        left -= part
    return Partition(parts)
