from dataclasses import dataclass
from typing import Optional, Union
import json
import logging
import os
import re

from lie_defect.errors import ConfigurationError, DataMissingError, DomainError, InvalidRecordError
from lie_defect.rootsys import GroupSpec
from lie_defect.util import format_partition
from .diagrams import WeightedDynkinDiagram, diagram_from_partition
from .partitions import class_partitions, is_very_even

logger = logging.getLogger(__name__)

DATA_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")
EXCEPTIONAL_DIAGRAMS_PATH = os.path.join(DATA_DIR, "exceptional_diagrams.json")

_PARTITION_LABEL = re.compile(r"^\(?(\d+(?:\^\d+)?(?:,\d+(?:\^\d+)?)*)\)?(I{1,2})?$")
VERY_EVEN_TAGS = ("I", "II")


@dataclass(frozen=True)
class UnipotentClass:
    group: GroupSpec
    label: Union[tuple, str]
    diagram: WeightedDynkinDiagram
    very_even_tag: Optional[str] = None

    @property
    def is_classical(self):
        return isinstance(self.label, tuple)

    @property
    def name(self):
        if not self.is_classical:
            return self.label
        return format_partition(self.label) + (self.very_even_tag or "")

    def __str__(self):
        return str(self.group) + " " + self.name


def parse_class_label(text):
    """
    "(2,2)", "2,2" or "(2,1^2)" -> (partition, tag); anything else is an exceptional class name.
    Very even classes carry an "I"/"II" suffix, e.g. "(4,4)II".
    """
    text = text.strip().replace(" ", "")
    match = _PARTITION_LABEL.match(text)
    if match is None:
        return text, None
    parts = []
    for token in match.group(1).split(","):
        part, _, count = token.partition("^")
        parts.extend([int(part)] * (int(count) if count else 1))
    return tuple(sorted(parts, reverse=True)), match.group(2)


class ClassCatalog(object):
    """Unipotent classes of exceptional types, ingested from diagram tables."""

    def __init__(self, load_embedded=True):
        self.tables = {}
        if load_embedded:
            self.load(EXCEPTIONAL_DIAGRAMS_PATH)

    def load(self, path):
        with open(path) as data_file:
            records = json.load(data_file)
        self.load_records(records, source=path)

    def load_records(self, records, source="<records>"):
        # Validate everything first, a rejected file leaves the catalog untouched
        new_tables = {}
        for index, record in enumerate(records):
            try:
                group = GroupSpec.parse(record["group"])
                name = str(record["class"])
                labels = tuple(record["diagram"])
            except (KeyError, TypeError, ConfigurationError) as e:
                raise InvalidRecordError(index, "malformed diagram record (" + str(e) + ")")
            if group.is_classical:
                raise InvalidRecordError(index, "diagrams of classical type " + str(group) + " are computed")
            if len(labels) != group.semisimple_rank:
                raise InvalidRecordError(index, "expected " + str(group.semisimple_rank) + " labels for "
                                         + str(group))
            try:
                diagram = WeightedDynkinDiagram(labels)
            except (DomainError, TypeError, ValueError) as e:
                raise InvalidRecordError(index, str(e))
            classes = new_tables.setdefault(group, [])
            if any(known.name == name for known in classes):
                raise InvalidRecordError(index, "duplicate class " + name + " for " + str(group))
            classes.append(UnipotentClass(group, name, diagram))
        self.tables.update(new_tables)
        for group, classes in new_tables.items():
            logger.debug("Loaded %d classes of %s from %s", len(classes), group, source)

    def has(self, group):
        return group in self.tables

    def classes(self, group):
        try:
            return list(self.tables[group])
        except KeyError:
            raise DataMissingError("No unipotent class table loaded for " + str(group)
                                   + ", pass a diagram data file")


_default_catalog = None


def default_catalog():
    global _default_catalog
    if _default_catalog is None:
        _default_catalog = ClassCatalog()
    return _default_catalog


def classical_class(group, partition, very_even_tag=None):
    partition = tuple(partition)
    return UnipotentClass(group, partition, diagram_from_partition(group, partition), very_even_tag)


def enumerate_classes(group, catalog=None):
    """All unipotent classes of `group`; classical ones largest partition first."""
    if not group.is_classical:
        return (catalog or default_catalog()).classes(group)
    classes = []
    for partition in class_partitions(group):
        diagram = diagram_from_partition(group, partition)
        if is_very_even(group, partition):
            classes.extend(UnipotentClass(group, partition, diagram, tag) for tag in VERY_EVEN_TAGS)
        else:
            classes.append(UnipotentClass(group, partition, diagram))
    return classes


def find_class(group, text, catalog=None):
    if group.is_classical:
        label, tag = parse_class_label(text)
    else:
        label, tag = text.strip(), None
    for candidate in enumerate_classes(group, catalog):
        if candidate.label != label:
            continue
        # an untagged very even label resolves to the first class of the pair
        if tag is None or candidate.very_even_tag == tag:
            return candidate
    raise DomainError("No unipotent class " + text + " in " + str(group))


def weighted_dynkin_diagram(unipotent_class):
    if unipotent_class.is_classical:
        return diagram_from_partition(unipotent_class.group, unipotent_class.label)
    return unipotent_class.diagram
