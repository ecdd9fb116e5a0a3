# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/tessellate/workers.py


"""Thread fan-out for independent chunks of work.
"""


import concurrent.futures


def map_chunks(fn, chunks, threads=1):
    """Call fn on every chunk and return the results in chunk order."""

    chunks = list(chunks)
    if threads <= 1 or len(chunks) <= 1:
        return [fn(chunk) for chunk in chunks]
    with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, chunks))


def split(n, parts):
    """Split range(n) into at most parts contiguous (start, stop) pairs."""

    parts = max(1, min(int(parts), n)) if n > 0 else 1
    bounds = [n * i // parts for i in range(parts + 1)]
    return [(a, b) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]


def voxel_chunks(n_voxels, size):
    """Split range(n_voxels) into (start, stop) pairs of at most size."""

    return [(a, min(n_voxels, a + size)) for a in range(0, n_voxels, size)]
