"""
--- Friedberg ---
Winner-condition referees, provenance records and hypothesis validators.
"""
from .provenance import RowProvenance, EnumeratorCursor, known_limit, resolve_limit, awaiting_rows
from .report import Verdict, RefereeReport, combine, parse_report, reports_agree, report_differences
from .conditions import (Slot, check_coverage, check_members_placed, check_injectivity, check_diag_g2,
                         check_nonreduction, check_faithfulness, check_finite_support, check_fill_cover)
from .hypotheses import check_extension_hypothesis, check_reducibility_witness, finite_subfunctions
from .referee import Referee
from .oracle import brute_force_referee
