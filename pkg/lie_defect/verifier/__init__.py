from .report import NumericCheck, Status, VerificationReport, CSV_COLUMNS, NUMERIC_COLUMNS, write_csv
from .numeric import numeric_check
from .theorem import psi_degree, verify_character, verify_all
from .identities import IdentitySummary, IdentityViolation, check_dimension_identities, check_identities_many
