import json
import logging
import os

from lie_defect.errors import ConfigurationError, DataMissingError, DomainError, InvalidRecordError
from lie_defect.nilpotent import find_class
from lie_defect.nilpotent.classes import DATA_DIR
from lie_defect.qpoly import cofactor_is_p_unit, from_record, split_q_part
from lie_defect.rootsys import GroupSpec, bad_primes, order_polynomial
from .records import CharacterRecord

logger = logging.getLogger(__name__)

SP4_TABLE_PATH = os.path.join(DATA_DIR, "sp4.tbl")


def _check_record(index, record, catalog):
    try:
        group = GroupSpec.parse(record["group"])
        label = str(record["label"])
        degree = from_record(record["degree"])
        support_text = str(record["support"])
    except (KeyError, TypeError, AttributeError, ConfigurationError, DomainError) as e:
        raise InvalidRecordError(index, "malformed character record (" + str(e) + ")")
    try:
        support = find_class(group, support_text, catalog)
    except (DomainError, DataMissingError) as e:
        raise InvalidRecordError(index, "unknown support class: " + str(e))
    if degree.is_zero:
        raise InvalidRecordError(index, "degree of " + label + " is zero")
    if not degree.divides(order_polynomial(group)):
        raise InvalidRecordError(index, "degree " + str(degree) + " of " + label + " does not divide |"
                                 + str(group) + "(q)|")
    if not cofactor_is_p_unit(split_q_part(degree).cofactor, bad_primes(group)):
        raise InvalidRecordError(index, "degree " + str(degree) + " of " + label
                                 + " is not a q-power times a unit away from the bad primes")
    return CharacterRecord(group, label, degree, support)


def load_character_table(records, catalog=None):
    """Validate table records {group, label, degree, support}; the first bad record aborts the load."""
    if not isinstance(records, list):
        raise InvalidRecordError(0, "a character table is a list of records")
    return [_check_record(index, record, catalog) for index, record in enumerate(records)]


def resolve_table_path(path):
    """Paths that do not exist on disk fall back to the tables shipped in the data directory."""
    if os.path.exists(path):
        return path
    embedded = os.path.join(DATA_DIR, os.path.basename(path))
    if os.path.exists(embedded):
        logger.debug("Using embedded table %s for %s", embedded, path)
        return embedded
    raise DataMissingError("Character table " + path + " not found")


def load_character_file(path, catalog=None):
    with open(resolve_table_path(path)) as table_file:
        try:
            records = json.load(table_file)
        except ValueError as e:
            raise InvalidRecordError(0, "not a JSON table: " + str(e))
    characters = load_character_table(records, catalog)
    logger.debug("Loaded %d characters from %s", len(characters), path)
    return characters


def sp4_unipotent_characters():
    return load_character_file(SP4_TABLE_PATH)
