"""
Logging setup and small shared helpers
"""

import logging
from typing import Iterable, List, Sequence, Tuple


def setup_logging(log_level: str = "INFO") -> logging.Logger:
    """Setup logging for command-line runs"""
    logging.basicConfig(
        level=getattr(logging, log_level.upper()),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    return logging.getLogger("ccbicat")


def lex_index(coords: Sequence[int], sizes: Sequence[int]) -> int:
    """Flatten a coordinate tuple left-major (the last coordinate varies fastest)"""
    index = 0
    for coord, size in zip(coords, sizes):
        index = index * size + coord
    return index


def lex_coords(index: int, sizes: Sequence[int]) -> Tuple[int, ...]:
    """Inverse of lex_index"""
    coords: List[int] = []
    for size in reversed(sizes):
        coords.append(index % size)
        index //= size
    return tuple(reversed(coords))


def first_occurrence(items: Iterable) -> List:
    """Distinct items in order of first appearance"""
    seen = set()
    ordered = []
    for item in items:
        if item not in seen:
            seen.add(item)
            ordered.append(item)
    return ordered
