from collections import namedtuple
from dataclasses import asdict, dataclass
from typing import Optional
import csv
import enum

from lie_defect.nilpotent import GradingDims
from lie_defect.util import format_labels

NumericCheck = namedtuple("NumericCheck", ("measured", "predicted", "agrees"))

CSV_COLUMNS = ("group", "character", "class", "diagram", "dimU1", "dimU2", "dimBu", "lhs_exp", "rhs_exp", "status")
NUMERIC_COLUMNS = ("p", "k", "measured", "predicted", "numeric_ok")


class Status(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class VerificationReport:
    """
    Both sides of |U_1^F| / psi(1) = (p-part of |G^F| / chi(1)) for one character, as q-exponents.

    lhs_exponent is the q-valuation of |G^F| / chi(1), rhs_exponent = dim U_1 - psi_degree_exponent.
    """
    group: str
    character: str
    support_class: str
    diagram: tuple
    dims: GradingDims
    u1_order_exponent: int
    psi_degree_exponent: int
    lhs_exponent: int
    rhs_exponent: int
    cofactor_unit: bool
    status: Status
    good_prime: Optional[bool] = None
    p: Optional[int] = None
    k: Optional[int] = None
    numeric: Optional[NumericCheck] = None

    @property
    def numeric_ok(self):
        return self.numeric is None or self.numeric.agrees

    @property
    def ok(self):
        return self.status is Status.PASS and self.numeric_ok

    def to_record(self):
        record = {
            "group": self.group,
            "character": self.character,
            "class": self.support_class,
            "diagram": list(self.diagram),
            "dims": asdict(self.dims),
            "u1_order_exponent": self.u1_order_exponent,
            "psi_degree_exponent": self.psi_degree_exponent,
            "lhs_exponent": self.lhs_exponent,
            "rhs_exponent": self.rhs_exponent,
            "cofactor_unit": self.cofactor_unit,
            "status": self.status.value,
            "good_prime": self.good_prime,
        }
        if self.numeric is not None:
            record["numeric"] = {"p": self.p, "k": self.k, "measured": self.numeric.measured,
                                 "predicted": self.numeric.predicted, "agrees": self.numeric.agrees}
        return record

    def csv_row(self, with_numeric=False):
        row = [self.group, self.character, self.support_class, format_labels(self.diagram), self.dims.dim_u1,
               self.dims.dim_u2, self.dims.dim_bu, self.lhs_exponent, self.rhs_exponent, self.status.value]
        if with_numeric:
            if self.numeric is None:
                row += ["", "", "", "", ""]
            else:
                row += [self.p, self.k, self.numeric.measured, self.numeric.predicted,
                        str(self.numeric.agrees).lower()]
        return [str(value) for value in row]


def write_csv(reports, stream, with_numeric=False):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS + (NUMERIC_COLUMNS if with_numeric else ()))
    for report in reports:
        writer.writerow(report.csv_row(with_numeric))
