import os
import json
from concurrent.futures import ThreadPoolExecutor

import numpy as np

SHARD_SIZE = 100000
THREADS_ENV_VARIABLE = "ISOKAM_THREADS"


def format_value_for_report(value):
    """Format a value into a string to be written in a report cell."""
    if isinstance(value, (list, tuple)):
        return " & ".join([format_value_for_report(v) for v in value])
    if isinstance(value, (float, np.floating)):
        return "%.17g" % value
    return str(value)


def to_json_ready(value):
    """Recursively convert numpy scalars/arrays and tuples into JSON types."""
    if isinstance(value, dict):
        return {str(k): to_json_ready(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json_ready(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_json_ready(value.tolist())
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (np.floating, float)):
        value = float(value)
        if not np.isfinite(value):
            return str(value)
        return value
    return value


def dumps_json(data):
    """Serialize to JSON deterministically (sorted keys, full float precision)."""
    return json.dumps(to_json_ready(data), sort_keys=True, indent=2) + "\n"


def resolve_threads(threads=None):
    """Return the number of worker threads to use.

    The ``ISOKAM_THREADS`` environment variable wins over the ``threads``
    argument, which wins over the number of cores.
    """
    from_env = os.environ.get(THREADS_ENV_VARIABLE, "").strip()
    if from_env:
        threads = int(from_env)
    if threads in (None, "auto"):
        threads = os.cpu_count() or 1
    threads = int(threads)
    if threads < 1:
        raise ValueError("The number of threads must be >= 1, got %d" % threads)
    return threads


def make_rng(seed):
    """Return a numpy Generator from a seed, a SeedSequence or a Generator."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def shard_sizes(n_samples, shard_size=SHARD_SIZE):
    """Split a sample count into fixed-size shards (last one may be smaller).

    The split depends only on ``n_samples`` so that results never depend on
    the number of threads.
    """
    if n_samples < 1:
        raise ValueError("The number of samples must be >= 1, got %d" % n_samples)
    n_full, remainder = divmod(int(n_samples), shard_size)
    sizes = [shard_size] * n_full
    if remainder:
        sizes.append(remainder)
    return sizes


def spawn_shard_seeds(seed, n_shards):
    """Per-shard seeds: shard i uses SeedSequence(seed).spawn(n_shards)[i]."""
    return np.random.SeedSequence(seed).spawn(n_shards)


def parallel_map(function, items, threads=None):
    """Map ``function`` over ``items`` with a thread pool, keeping the order."""
    items = list(items)
    threads = min(resolve_threads(threads), max(len(items), 1))
    if threads == 1:
        return [function(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(function, items))


def sharded_samples(sampler, n_samples, seed, threads=None, logger=None):
    """Run ``sampler(size, rng)`` on fixed-size seeded shards, concatenated.

    ``sampler`` must return an array whose first axis has length ``size``.
    """
    sizes = shard_sizes(n_samples)
    seeds = spawn_shard_seeds(seed, len(sizes))
    if logger is not None:
        logger(message="Sampling %d values in %d shards" % (n_samples, len(sizes)))

    def run_shard(index):
        return sampler(sizes[index], np.random.default_rng(seeds[index]))

    return np.concatenate(parallel_map(run_shard, range(len(sizes)), threads))


def mean_and_standard_error(samples, axis=0):
    """Return the mean and the naive standard error of iid samples."""
    samples = np.asarray(samples, dtype=float)
    n = samples.shape[axis]
    mean = samples.mean(axis=axis)
    if n < 2:
        return mean, np.zeros_like(mean)
    return mean, samples.std(axis=axis, ddof=1) / np.sqrt(n)


def batch_averages(series, n_batches=20):
    """Averages of ``n_batches`` consecutive equal batches of a time series.

    ``series`` has time along the first axis. The leftover samples that do
    not fill a batch are dropped.
    """
    series = np.asarray(series, dtype=float)
    n = series.shape[0]
    batch_length = n // n_batches
    if batch_length < 1:
        raise ValueError(
            "Need at least %d samples for %d batches, got %d" % (n_batches, n_batches, n)
        )
    batches = series[: batch_length * n_batches]
    batches = batches.reshape((n_batches, batch_length) + series.shape[1:])
    return batches.mean(axis=1)


def batch_means(series, n_batches=20):
    """Mean and batch-means standard error of a (possibly correlated) series.

    Extra axes of ``series`` are kept (one estimate per column). The
    leftover samples that do not fill a batch are included in the mean but
    not in the error estimate.
    """
    series = np.asarray(series, dtype=float)
    averages = batch_averages(series, n_batches)
    error = averages.std(axis=0, ddof=1) / np.sqrt(n_batches)
    return series.mean(axis=0), error
