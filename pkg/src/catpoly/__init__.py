"""catpoly: exact enumeration, statistics, generating functions and
bijections for Catalan words without weakly decreasing triples and their
Motzkin-counted bargraph polyominoes."""

from .backend import BACKEND
from .bijections import FirstReturnDecomp, chi, decompose, psi, verify_bijectivity
from .closedforms import (
    asym_h,
    asym_s,
    asym_up,
    expected_last,
    expected_sper,
    h_closed,
    motzkin,
    p_closed,
    s_closed,
    trinomial,
    u_closed,
)
from .errors import (
    BadSqrtConstantTerm,
    CatpolyError,
    DepthTooShallow,
    EmptyWord,
    InternalInconsistency,
    NoConvergence,
    NonUnitDivisor,
    NotCatalan,
    NotInDomain,
    OrderMismatch,
    ResourceLimit,
)
from .gfs import (
    cf_B_contfrac,
    cf_C_last,
    cf_C_sper_v,
    cf_S,
    gf_h,
    gf_motzkin,
    gf_p,
    gf_s,
    gf_trinomial,
    gf_u,
    kernel_residual,
    kernel_root_v0,
    master_interior_qv,
    master_pqv,
    prod_area,
    prod_interior,
    sum_B,
    sum_H,
)
from .mpoly import Caps, MPoly
from .series import Series
from .tables import (
    RecurrenceReport,
    TriTable,
    check_recurrences,
    table_c,
    table_c_enumerated,
    table_stat,
    table_stat_enumerated,
    totals,
)
from .verify import VerifyReport, run_verify
from .words import (
    CatalanWord,
    Polyomino,
    StatRecord,
    WordClass,
    avoids,
    count_words,
    enumerate_words,
    from_dyck,
    inter_oracle,
    sper_oracle,
    stat_area,
    stat_inter,
    stat_last,
    stat_record,
    stat_sper,
    to_dyck,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BadSqrtConstantTerm",
    "Caps",
    "CatalanWord",
    "CatpolyError",
    "DepthTooShallow",
    "EmptyWord",
    "FirstReturnDecomp",
    "InternalInconsistency",
    "MPoly",
    "NoConvergence",
    "NonUnitDivisor",
    "NotCatalan",
    "NotInDomain",
    "OrderMismatch",
    "Polyomino",
    "RecurrenceReport",
    "ResourceLimit",
    "Series",
    "StatRecord",
    "TriTable",
    "VerifyReport",
    "WordClass",
    "asym_h",
    "asym_s",
    "asym_up",
    "avoids",
    "cf_B_contfrac",
    "cf_C_last",
    "cf_C_sper_v",
    "cf_S",
    "check_recurrences",
    "chi",
    "count_words",
    "decompose",
    "enumerate_words",
    "expected_last",
    "expected_sper",
    "from_dyck",
    "gf_h",
    "gf_motzkin",
    "gf_p",
    "gf_s",
    "gf_trinomial",
    "gf_u",
    "h_closed",
    "inter_oracle",
    "kernel_residual",
    "kernel_root_v0",
    "master_interior_qv",
    "master_pqv",
    "motzkin",
    "p_closed",
    "prod_area",
    "prod_interior",
    "psi",
    "run_verify",
    "s_closed",
    "sper_oracle",
    "stat_area",
    "stat_inter",
    "stat_last",
    "stat_record",
    "stat_sper",
    "sum_B",
    "sum_H",
    "table_c",
    "table_c_enumerated",
    "table_stat",
    "table_stat_enumerated",
    "to_dyck",
    "totals",
    "trinomial",
    "u_closed",
    "validate",
    "verify_bijectivity",
]
