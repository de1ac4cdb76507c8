import re

from lie_defect.errors import ConfigurationError

_RANGE_PATTERN = re.compile(r"^(\d+)(?:\.\.(\d+))?$")


def conjugate(partition):
    """Transpose of a partition given as a non-increasing tuple."""
    if not partition:
        return ()
    columns = [0] * partition[0]
    for part in partition:
        for i in range(part):
            columns[i] += 1
    return tuple(columns)


def n_statistic(partition):
    """ n(lambda) = sum_i (i - 1) * lambda_i """
    return sum(i * part for i, part in enumerate(partition))


def hook_lengths(partition):
    transposed = conjugate(partition)
    return [(row - j - 1) + (transposed[j] - i - 1) + 1
            for i, row in enumerate(partition)
            for j in range(row)]


def multiplicities(partition):
    counts = {}
    for part in partition:
        counts[part] = counts.get(part, 0) + 1
    return counts


def format_partition(partition):
    return "(" + ",".join(str(part) for part in partition) + ")"


def format_labels(labels):
    return "(" + ",".join(str(label) for label in labels) + ")"


def parse_range(text):
    """'3' -> range(3, 4), '2..6' -> range(2, 7)"""
    match = _RANGE_PATTERN.match(text.strip())
    if match is None:
        raise ConfigurationError("Cannot parse rank range '" + text + "', expected e.g. 4 or 2..6")
    low = int(match.group(1))
    high = int(match.group(2)) if match.group(2) is not None else low
    if high < low:
        raise ConfigurationError("Empty rank range '" + text + "'")
    return range(low, high + 1)
