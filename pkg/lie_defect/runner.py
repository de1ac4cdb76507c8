from dataclasses import dataclass, field
from typing import List, Optional, Tuple
import csv
import json
import logging
import os
import re
import sys

import sympy
from tqdm import tqdm

from lie_defect.characters import gl_unipotent_characters, load_character_file
from lie_defect.errors import ConfigurationError, DataMissingError, DomainError, InvalidRecordError
from lie_defect.log import RunLog
from lie_defect.nilpotent import ClassCatalog, enumerate_classes, grading_dims
from lie_defect.parser import create_arg_dict
from lie_defect.rootsys import GroupSpec, build_root_system
from lie_defect.util import format_labels, parse_range
from lie_defect.verifier import Status, check_identities_many, verify_all, write_csv

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_DATA_MISSING = 3

DEFAULT_RANK_CAPS = {"GL": 10, "A": 10, "B": 8, "C": 8, "D": 8}
_FAMILY_PATTERN = re.compile(r"^(GL|[A-G])$")
_NUMERIC_PATTERN = re.compile(r"^([pk])=(\d+)$")

CLASS_CSV_COLUMNS = ("group", "N", "rank", "class", "diagram", "dimU1", "dimU2", "dimP", "dimC", "dimBu", "even")
IDENTITY_CSV_COLUMNS = ("group", "classes", "records", "violations")


def parse_numeric(values):
    """ ["p=2", "k=1"] -> (2, 1) """
    if values is None:
        return None
    found = {}
    for value in values:
        match = _NUMERIC_PATTERN.match(value.strip())
        if match is None or match.group(1) in found:
            raise ConfigurationError("Expected --numeric p=<prime> k=<exponent>, got " + " ".join(values))
        found[match.group(1)] = int(match.group(2))
    p, k = found["p"], found["k"]
    if not sympy.isprime(p):
        raise ConfigurationError("p = " + str(p) + " is not prime")
    if k < 1:
        raise ConfigurationError("k must be positive, got " + str(k))
    return p, k


def parse_targets(tokens, rank_cap=0):
    """
    Turn command-line targets into (groups, table path).

    "C2" and "GL3" name one group, a bare family is followed by a rank range ("A 1..8"), "table <path>" selects a
    character table.
    """
    groups = []
    table = ""
    tokens = list(tokens)
    i = 0
    while i < len(tokens):
        token = tokens[i]
        if token == "table":
            if i + 1 >= len(tokens):
                raise ConfigurationError("'table' needs a path")
            table = tokens[i + 1]
            i += 2
            continue
        family = _FAMILY_PATTERN.match(token.upper())
        if family is not None:
            if i + 1 >= len(tokens):
                raise ConfigurationError("Family " + token + " needs a rank range, e.g. " + token + " 1..4")
            groups.extend(GroupSpec(family.group(1), rank) for rank in parse_range(tokens[i + 1]))
            i += 2
            continue
        groups.append(GroupSpec.parse(token))
        i += 1
    for group in groups:
        if group.family not in DEFAULT_RANK_CAPS:
            continue
        cap = rank_cap or DEFAULT_RANK_CAPS[group.family]
        if group.rank > cap:
            raise ConfigurationError(str(group) + " exceeds the rank cap " + str(cap) + ", see --rank-cap")
    return groups, table


@dataclass
class RunConfig:
    command: str
    groups: List[GroupSpec] = field(default_factory=list)
    table: str = ""
    output_format: str = "text"
    diagrams: List[str] = field(default_factory=list)
    numeric: Optional[Tuple[int, int]] = None
    rank_cap: int = 0
    tqdm: int = 0
    verbose: bool = False

    @classmethod
    def from_arg_dict(cls, arg_dict):
        groups, table = parse_targets(arg_dict["targets"], arg_dict.get("rank_cap", 0))
        table = arg_dict.get("table") or table
        command = arg_dict["command"]
        if command == "verify" and not groups and not table:
            raise ConfigurationError("verify needs group specs or a character table")
        if command != "verify" and table:
            raise ConfigurationError("Character tables are only used by verify")
        if command != "verify" and not groups:
            raise ConfigurationError(command + " needs at least one group spec")
        numeric = parse_numeric(arg_dict.get("numeric"))
        if numeric is not None and command != "verify":
            raise ConfigurationError("--numeric only applies to verify")
        return cls(command=command, groups=groups, table=table, output_format=arg_dict.get("format", "text"),
                   diagrams=list(arg_dict.get("diagrams") or []), numeric=numeric,
                   rank_cap=arg_dict.get("rank_cap", 0), tqdm=arg_dict.get("tqdm", 0),
                   verbose=bool(arg_dict.get("verbose", False)))


class Runner(object):
    def __init__(self, config, stream=None, err_stream=None):
        self.config = config
        self.stream = stream if stream is not None else sys.stdout
        self.err_stream = err_stream if err_stream is not None else sys.stderr
        self.log = RunLog(verbose=config.verbose)
        self.disable_tqdm = config.tqdm == 0
        self.catalog = self._create_catalog()

    def _create_catalog(self):
        catalog = ClassCatalog()
        for path in self.config.diagrams:
            if not os.path.exists(path):
                raise DataMissingError("Diagram file " + path + " not found")
            try:
                catalog.load(path)
            except ValueError as e:
                if isinstance(e, InvalidRecordError):
                    raise
                raise InvalidRecordError(0, "not a JSON diagram table: " + str(e))
        return catalog

    def run(self):
        commands = {"classes": self.cmd_classes, "identities": self.cmd_identities, "verify": self.cmd_verify}
        logger.debug("Running %s on %s", self.config.command, ", ".join(str(g) for g in self.config.groups))
        exit_code = commands[self.config.command]()
        if self.config.verbose:
            self.print_summary("Counts: " + json.dumps(self.log.summary()))
            if self.log.get():
                self.print_summary("Ranges: " + json.dumps(self.log.ranges()))
        return exit_code

    def write(self, text):
        print(text, file=self.stream)

    def print_summary(self, text):
        # json and csv payloads stay machine readable
        if self.config.output_format == "text":
            self.write(text)
        else:
            print(text, file=self.err_stream)

    def write_json(self, records):
        self.write(json.dumps(records, indent=2))

    def write_csv_rows(self, columns, rows):
        writer = csv.writer(self.stream, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(rows)

    def cmd_classes(self):
        rows = []
        for group in tqdm(self.config.groups, desc="Classes", disable=self.disable_tqdm):
            n_roots = build_root_system(group).N
            for unipotent_class in enumerate_classes(group, self.catalog):
                dims = grading_dims(unipotent_class)
                rows.append((group, n_roots, unipotent_class, dims))
                self.log.count("classes/" + str(group))
                self.log.add("dim_bu/" + str(group), dims.dim_bu)

        if self.config.output_format == "json":
            self.write_json([{"group": str(group), "N": n_roots, "rank": group.rank, "class": cls.name,
                              "diagram": list(cls.diagram.labels),
                              "dims": {"dimU1": dims.dim_u1, "dimU2": dims.dim_u2, "dimP": dims.dim_p,
                                       "dimC": dims.dim_c, "dimBu": dims.dim_bu, "even": dims.is_even}}
                             for group, n_roots, cls, dims in rows])
        elif self.config.output_format == "csv":
            self.write_csv_rows(CLASS_CSV_COLUMNS,
                                [(str(group), n_roots, group.rank, cls.name, format_labels(cls.diagram.labels),
                                  dims.dim_u1, dims.dim_u2, dims.dim_p, dims.dim_c, dims.dim_bu,
                                  str(dims.is_even).lower())
                                 for group, n_roots, cls, dims in rows])
        else:
            current = None
            for group, n_roots, cls, dims in rows:
                if group != current:
                    current = group
                    self.write("{}: N {}, rank {}, {} classes".format(group, n_roots, group.rank,
                                                                      self.log.summary()["classes_" + str(group)]))
                self.write("  {:<14} {:<20} dimU1 {:>3}  dimU2 {:>3}  dimC {:>3}  dimBu {:>3}".format(
                    cls.name, str(cls.diagram), dims.dim_u1, dims.dim_u2, dims.dim_c, dims.dim_bu))
        return EXIT_OK

    def cmd_identities(self):
        summaries = check_identities_many(self.config.groups, self.catalog, progress=not self.disable_tqdm)
        for summary in summaries:
            self.log.count("classes", summary.classes)
            self.log.count("violations", len(summary.violations))

        if self.config.output_format == "json":
            self.write_json([summary.to_record() for summary in summaries])
        elif self.config.output_format == "csv":
            self.write_csv_rows(IDENTITY_CSV_COLUMNS, [(summary.group, summary.classes, summary.records,
                                                        len(summary.violations)) for summary in summaries])
        else:
            for summary in summaries:
                self.write("{}: {} classes, {} records, {} violations".format(
                    summary.group, summary.classes, summary.records, len(summary.violations)))
                for violation in summary.violations:
                    self.write("  {} {}: {} != {}".format(violation.class_name, violation.identity,
                                                            violation.lhs, violation.rhs))
        total = self.log.summary().get("violations", 0)
        self.print_summary("Total: {} classes, {} violations".format(self.log.summary().get("classes", 0), total))
        return EXIT_FAILURE if total else EXIT_OK

    def load_characters(self):
        characters = []
        if self.config.table:
            characters.extend(load_character_file(self.config.table, self.catalog))
        for group in self.config.groups:
            if group.family != "GL":
                raise DataMissingError("No built-in unipotent characters for " + str(group)
                                       + ", pass a character table")
            characters.extend(gl_unipotent_characters(group.rank))
        return characters

    def cmd_verify(self):
        p, k = self.config.numeric if self.config.numeric is not None else (None, None)
        reports = verify_all(self.load_characters(), p, k, progress=not self.disable_tqdm)
        for report in reports:
            self.log.count("status/" + report.status.value)
            self.log.add("lhs_exponent", report.lhs_exponent)
            if report.numeric is not None and not report.numeric.agrees:
                self.log.count("numeric_mismatch")
            if report.good_prime is False:
                self.log.count("bad_prime")

        with_numeric = self.config.numeric is not None
        if self.config.output_format == "json":
            self.write_json([report.to_record() for report in reports])
        elif self.config.output_format == "csv":
            write_csv(reports, self.stream, with_numeric)
        else:
            for report in reports:
                line = "{} {:<14} class {:<14} diagram {:<16} lhs q^{}  rhs q^{}  {}".format(
                    report.group, report.character, report.support_class, format_labels(report.diagram),
                    report.lhs_exponent, report.rhs_exponent, report.status.value)
                if report.numeric is not None:
                    line += "  [q={}: measured {}, predicted {}, {}]".format(
                        p ** k, report.numeric.measured, report.numeric.predicted,
                        "ok" if report.numeric.agrees else "MISMATCH")
                self.write(line)

        counts = self.log.summary()
        summary = "{} characters: {} pass, {} fail, {} indeterminate".format(
            len(reports), counts.get("status_" + Status.PASS.value, 0), counts.get("status_" + Status.FAIL.value, 0),
            counts.get("status_" + Status.INDETERMINATE.value, 0))
        if with_numeric:
            summary += ", {} numeric mismatches".format(counts.get("numeric_mismatch", 0))
            if counts.get("bad_prime"):
                summary += " (p = {} is bad for some groups)".format(p)
        self.print_summary(summary)
        return EXIT_OK if all(report.ok for report in reports) else EXIT_FAILURE


def run(arg_dict, stream=None, err_stream=None):
    """Run one parsed command line and map the error hierarchy onto exit codes."""
    err_stream = err_stream if err_stream is not None else sys.stderr
    try:
        config = RunConfig.from_arg_dict(arg_dict)
        runner = Runner(config, stream, err_stream)
        return runner.run()
    except (ConfigurationError, DomainError) as e:
        print("Error: " + str(e), file=err_stream)
        return EXIT_USAGE
    except (DataMissingError, InvalidRecordError) as e:
        print("Error: " + str(e), file=err_stream)
        return EXIT_DATA_MISSING


def main(argv=None, stream=None, err_stream=None):
    try:
        arg_dict = create_arg_dict(argv)
    except SystemExit as e:
        return e.code
    return run(arg_dict, stream, err_stream)
