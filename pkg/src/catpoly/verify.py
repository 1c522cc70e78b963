"""Cross-verification suite tying every module against every other.

Each check recomputes one family of results along two independent routes
(closed form vs series, DP vs enumeration, bijection vs generating
function, ...) and reports pass/fail/skipped.  The suite is deterministic:
same flags, same report.
"""

from dataclasses import dataclass, field
from typing import Callable, List, Tuple

from . import bijections, closedforms, gfs, tables, words
from .mpoly import MPoly
from .series import Series
from .words import WordClass


@dataclass
class CheckResult:
    name: str
    status: str  # pass | fail | skipped
    detail: str = ""


@dataclass
class VerifyReport:
    max_n: int
    max_order: int
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def exit_code(self):
        return 1 if any(c.status == "fail" for c in self.checks) else 0

    def counts(self):
        out = {"pass": 0, "fail": 0, "skipped": 0}
        for c in self.checks:
            out[c.status] += 1
        return out


class _Context:
    """Lazy shared builders so expensive series are computed once."""

    def __init__(self, max_n, max_order):
        self.max_n = max_n
        self.max_order = max_order
        self.enum_limit = max(max_n + 2, 16)
        self._cache = {}

    def get(self, key, builder):
        if key not in self._cache:
            self._cache[key] = builder()
        return self._cache[key]

    def words_of(self, n, cls=WordClass.AVOID_GEQ_GEQ):
        return self.get(
            ("words", n, cls),
            lambda: list(words.enumerate_words(n, cls, self.enum_limit)),
        )


def _poly_from_triples(triples):
    out = MPoly.zero()
    for (dp, dq, dv), cnt in triples.items():
        out = out + MPoly.monomial(cnt, dp, dq, dv)
    return out


def _scalar_histogram(ws, fn):
    hist = {}
    for w in ws:
        hist[fn(w)] = hist.get(fn(w), 0) + 1
    return hist


def _q_poly(hist):
    out = MPoly.zero()
    for e, cnt in hist.items():
        out = out + MPoly.monomial(cnt, 0, e, 0)
    return out


def run_verify(max_n: int = 10, max_order: int = 20) -> VerifyReport:
    ctx = _Context(max_n, max_order)
    report = VerifyReport(max_n=max_n, max_order=max_order)
    for name, fn in _build_checks(ctx):
        try:
            status, detail = fn()
        except Exception as exc:  # a crashed check is a failed check
            status, detail = "fail", f"exception: {type(exc).__name__}: {exc}"
        report.checks.append(CheckResult(name, status, detail))
    return report


def _build_checks(ctx) -> List[Tuple[str, Callable]]:
    max_n = ctx.max_n
    max_order = ctx.max_order

    def counts_match_closed_form():
        for n in range(31):
            if words.count_words(n, WordClass.AVOID_GEQ_GEQ) != closedforms.motzkin(n):
                return "fail", f"count({n}) != motzkin({n})"
        for n in range(1, 15):
            if words.count_words(n, WordClass.AVOID_NEQ_ADJACENT) != closedforms.motzkin(n - 1):
                return "fail", f"unequal-adjacent count({n}) != motzkin({n - 1})"
        return "pass", "counts match Motzkin numbers for n <= 30 (and shifted for n <= 14)"

    def enumeration_cardinalities():
        for n in range(max_n + 1):
            ws = ctx.words_of(n)
            if len(ws) != closedforms.motzkin(n):
                return "fail", f"|enumerate({n})| = {len(ws)} != m_{n}"
            if len(set(ws)) != len(ws):
                return "fail", f"duplicates at n={n}"
            if ws != sorted(ws, key=lambda w: w.letters):
                return "fail", f"not lexicographic at n={n}"
            b = ctx.words_of(n, WordClass.CLASS_B)
            if len(b) != words.count_words(n, WordClass.CLASS_B):
                return "fail", f"B-count mismatch at n={n}"
            if set(b) != {w for w in ws if len(w) < 2 or w[-2] < w[-1]}:
                return "fail", f"B-membership mismatch at n={n}"
        return "pass", f"cardinalities and order agree for n <= {max_n}"

    def length4_catalog():
        expected = ["0010", "0011", "0012", "0101", "0112", "0120", "0121", "0122", "0123"]
        got = [str(w) for w in ctx.words_of(4)]
        if got != expected:
            return "fail", f"got {got}"
        return "pass", "the 9 length-4 words are reproduced exactly"

    def statistic_oracles():
        flagship = words.CatalanWord.parse("00123223401011")
        rec = words.stat_record(flagship)
        if (rec.area, rec.sper, rec.inter) != (34, 22, 13):
            return "fail", f"flagship statistics {rec}"
        for n in range(1, max_n + 1):
            for w in ctx.words_of(n):
                if words.stat_sper(w) != words.sper_oracle(w):
                    return "fail", f"sper mismatch at {w}"
                if words.stat_inter(w) != words.inter_oracle(w):
                    return "fail", f"inter mismatch at {w}"
        return "pass", f"formulas agree with geometric oracles for all n <= {max_n}"

    def dyck_roundtrip():
        for n in range(1, max_n + 1):
            seen = set()
            for w in ctx.words_of(n):
                path = words.to_dyck(w)
                if len(path) != 2 * n or path in seen:
                    return "fail", f"bad path for {w}"
                seen.add(path)
                if words.from_dyck(path) != w:
                    return "fail", f"roundtrip failed for {w}"
        return "pass", f"Dyck conversion is injective and invertible for n <= {max_n}"

    def base_series():
        m = gfs.gf_motzkin(max_order)
        t = gfs.gf_trinomial(max_order)
        for n in range(max_order):
            if m.coeff(n).as_scalar() != closedforms.motzkin(n):
                return "fail", f"Motzkin series at {n}"
            if t.coeff(n).as_scalar() != closedforms.trinomial(n):
                return "fail", f"trinomial series at {n}"
        return "pass", f"Motzkin/trinomial series match closed forms below order {max_order}"

    def totals_series_match():
        top = min(max_order, 30)
        series = {
            "h": gfs.gf_h(top + 1),
            "s": gfs.gf_s(top + 1),
            "u": gfs.gf_u(top + 1),
            "p": gfs.gf_p(top + 1),
        }
        closed = {
            "h": closedforms.h_closed,
            "s": closedforms.s_closed,
            "u": closedforms.u_closed,
            "p": closedforms.p_closed,
        }
        for key, ser in series.items():
            if ser.coeff(0).as_scalar() != 0:
                return "fail", f"{key}-series has nonzero constant term"
            for n in range(1, top + 1):
                if ser.coeff(n).as_scalar() != closed[key](n):
                    return "fail", f"{key}({n}) series != closed form"
        dp = tables.totals(top)
        for key, seq in (("h", dp.h), ("s", dp.s), ("u", dp.u), ("p", dp.p)):
            for n in range(1, top + 1):
                if seq[n] != closed[key](n):
                    return "fail", f"{key}({n}) DP != closed form"
        stat_fns = {
            "h": words.stat_last,
            "s": words.stat_sper,
            "u": words.stat_area,
            "p": words.stat_inter,
        }
        for n in range(1, min(max_n, 12) + 1):
            ws = ctx.words_of(n)
            for key, fn in stat_fns.items():
                if sum(fn(w) for w in ws) != closed[key](n):
                    return "fail", f"{key}({n}) enumeration != closed form"
        return "pass", f"four totals agree (series/DP to n <= {top}, enumeration to n <= {min(max_n, 12)})"

    def master_histograms():
        order = max_n + 1
        master = ctx.get(("master_pqv", order), lambda: gfs.master_pqv(order))
        for n in range(1, max_n + 1):
            hist = {}
            for w in ctx.words_of(n):
                key = (words.stat_sper(w), words.stat_area(w), words.stat_last(w))
                hist[key] = hist.get(key, 0) + 1
            if master.coeff(n) != _poly_from_triples(hist):
                return "fail", f"histogram mismatch at n={n}"
        return "pass", f"master series equals the (sper, area, last) histograms for n <= {max_n}"

    def master_specializations():
        order = min(max_order, 12)
        master = ctx.get(("master_pqv", order), lambda: gfs.master_pqv(order))
        at_q1 = master.eval_one("q")
        if at_q1 != gfs.cf_C_sper_v(order):
            return "fail", "master at q=1 != closed semiperimeter/last form"
        if at_q1.eval_one("v") != gfs.cf_S(order):
            return "fail", "master at q=v=1 != closed semiperimeter form"
        if at_q1.eval_one("p") != gfs.cf_C_last(order):
            return "fail", "master at p=q=1 != closed last-letter form"
        plain = at_q1.eval_one("p").eval_one("v")
        for n in range(1, order):
            if plain.coeff(n).as_scalar() != closedforms.motzkin(n):
                return "fail", f"master at p=q=v=1 != m_{n}"
        if order > 4:
            if gfs.cf_C_last(5).coeff(4) != MPoly({0: 2, 1: 3, 2: 3, 3: 1}):
                return "fail", "last-letter x^4 coefficient != v^3+3v^2+3v+2"
            expected_s = (
                MPoly.monomial(2, 6, 0, 0)
                + MPoly.monomial(6, 7, 0, 0)
                + MPoly.monomial(1, 8, 0, 0)
            )
            if gfs.cf_S(5).coeff(4) != expected_s:
                return "fail", "semiperimeter x^4 coefficient != 2p^6+6p^7+p^8"
        return "pass", f"closed forms equal master specializations to order {order}"

    def area_series():
        order = min(max_order, 13)
        top_n = min(max_n, order - 1)
        b = ctx.get(("sum_B", order), lambda: gfs.sum_B(order))
        for n in range(1, top_n + 1):
            hist = _scalar_histogram(ctx.words_of(n, WordClass.CLASS_B), words.stat_area)
            if b.coeff(n) != _q_poly(hist):
                return "fail", f"rising-tail area mismatch at n={n}"
        cf_order = min(max_order, 12)
        if gfs.cf_B_contfrac(cf_order, cf_order) != gfs.sum_B(cf_order):
            return "fail", "continued fraction != sum form"
        pa = ctx.get(("prod_area", order), lambda: gfs.prod_area(order))
        for n in range(1, top_n + 1):
            hist = _scalar_histogram(ctx.words_of(n), words.stat_area)
            if pa.coeff(n) != _q_poly(hist):
                return "fail", f"area histogram mismatch at n={n}"
        at_one = pa.eval_one("q")
        for n in range(1, order):
            if at_one.coeff(n).as_scalar() != closedforms.motzkin(n):
                return "fail", f"area series at q=1 != m_{n}"
        if order > 5 and pa.coeff(5).coefficient(0, 9, 0) != 5:
            return "fail", "x^5 area coefficient lacks 5q^9"
        return "pass", f"area generating functions cross-check to n <= {top_n}"

    def interior_series():
        order = min(max_order, 13)
        top_n = min(max_n, order - 1)
        h = ctx.get(("sum_H", order), lambda: gfs.sum_H(order))
        for n in range(1, top_n + 1):
            hist = _scalar_histogram(ctx.words_of(n, WordClass.CLASS_B), words.stat_inter)
            if h.coeff(n) != _q_poly(hist):
                return "fail", f"rising-tail interior mismatch at n={n}"
        pi = ctx.get(("prod_interior", order), lambda: gfs.prod_interior(order))
        for n in range(1, top_n + 1):
            hist = _scalar_histogram(ctx.words_of(n), words.stat_inter)
            if pi.coeff(n) != _q_poly(hist):
                return "fail", f"interior histogram mismatch at n={n}"
        cf_order = min(max_order, 12)
        master = gfs.master_interior_qv(cf_order)
        if master.eval_one("v") != gfs.prod_interior(cf_order):
            return "fail", "interior master at v=1 != product form"
        plain = master.eval_one("v").eval_one("q")
        for n in range(1, cf_order):
            if plain.coeff(n).as_scalar() != closedforms.motzkin(n):
                return "fail", f"interior master at q=v=1 != m_{n}"
        if order > 5 and pi.coeff(5).coefficient(0, 3, 0) != 5:
            return "fail", "x^5 interior coefficient lacks 5q^3"
        return "pass", f"interior generating functions cross-check to n <= {top_n}"

    def derivative_identities():
        top = min(max_order, 30)
        ds = gfs.cf_S(top + 1).derivative("p").eval_one("p")
        gs = gfs.gf_s(top + 1)
        for n in range(1, top + 1):
            if ds.coeff(n) != gs.coeff(n):
                return "fail", f"semiperimeter derivative identity fails at n={n}"
        dh = gfs.cf_C_last(top + 1).derivative("v").eval_one("v")
        gh = gfs.gf_h(top + 1)
        for n in range(1, top + 1):
            if dh.coeff(n) != gh.coeff(n):
                return "fail", f"last-letter derivative identity fails at n={n}"
        order = min(max_order, 13)
        du = gfs.prod_area(order).derivative("q").eval_one("q")
        gu = gfs.gf_u(order)
        dp_ = gfs.prod_interior(order).derivative("q").eval_one("q")
        gp = gfs.gf_p(order)
        for n in range(1, order):
            if du.coeff(n) != gu.coeff(n):
                return "fail", f"area derivative identity fails at n={n}"
            if dp_.coeff(n) != gp.coeff(n):
                return "fail", f"interior derivative identity fails at n={n}"
        return "pass", f"all four derivative identities hold (n <= {top} / {order - 1})"

    def kernel_annihilation():
        residual = gfs.kernel_residual(max_order)
        if not residual.is_zero():
            return "fail", "kernel residual is not the zero series"
        v0 = gfs.kernel_root_v0(max_order).eval_one("p")
        caps = v0.caps
        motz = gfs.gf_motzkin(max_order, caps)
        one_plus_x = Series.from_x_polynomial(max_order, [1, 1], caps)
        expected = (
            Series.from_x_polynomial(max_order, [1], caps)
            + motz.mul_monomial(1, x_shift=1)
        ).div(one_plus_x)
        if v0 != expected:
            return "fail", "root at p=1 != (1 + x M(x)) / (1 + x)"
        return "pass", f"kernel root annihilates the kernel mod x^{max_order}"

    def table_c_checks():
        top = 30
        c = tables.table_c(top)
        enum_top = min(max_n, 12)
        oracle = tables.table_c_enumerated(enum_top, ctx.enum_limit)
        for n in range(1, enum_top + 1):
            if c.row(n) != oracle.row(n):
                return "fail", f"c row {n} != enumeration"
        for n in range(1, top + 1):
            if sum(c.row(n)) != closedforms.motzkin(n):
                return "fail", f"c row {n} sum != m_{n}"
        for n in range(1, top - 1):
            if c.entry(n + 2, 0) != closedforms.motzkin(n):
                return "fail", f"c({n + 2},0) != m_{n}"
        if c.row(6) != [9, 13, 13, 10, 5, 1] or c.row(7) != [21, 30, 30, 24, 15, 6, 1]:
            return "fail", "printed c rows 6/7 not reproduced"
        return "pass", "c table matches enumeration, row sums and the printed matrix"

    def stat_tables():
        top = 30
        printed = {
            "sper": [[2], [3, 4], [5, 10, 6], [13, 20, 21, 8], [33, 50, 51, 36, 10], [89, 130, 132, 104, 55, 12]],
            "area": [[1], [2, 3], [4, 9, 6], [12, 20, 24, 10], [35, 55, 63, 50, 15]],
            "inter": [[0], [0, 0], [0, 1, 1], [1, 3, 6, 3], [6, 11, 18, 18, 6]],
        }
        closed = {
            "sper": closedforms.s_closed,
            "area": closedforms.u_closed,
            "inter": closedforms.p_closed,
        }
        enum_top = min(max_n, 12)
        for stat in tables.STATS:
            t = tables.table_stat(top, stat)
            oracle = tables.table_stat_enumerated(enum_top, stat, ctx.enum_limit)
            for n in range(1, enum_top + 1):
                if t.row(n) != oracle.row(n):
                    return "fail", f"{stat} table row {n} != enumeration"
            for n, row in enumerate(printed[stat], start=1):
                if t.row(n) != row:
                    return "fail", f"{stat} table row {n} != printed matrix"
            sums = t.row_sums()
            for n in range(1, top + 1):
                if sums[n - 1] != closed[stat](n):
                    return "fail", f"{stat} row sum at n={n} != closed form"
        return "pass", "statistic tables match enumeration, printed matrices and closed forms"

    def recurrence_audit():
        if max_n < 1:
            return "skipped", "needs max_n >= 1"
        lines = []
        for which in tables.RECURRENCES:
            rep = tables.check_recurrences(min(max_n, 10), which)
            again = tables.check_recurrences(min(max_n, 10), which)
            if rep.mismatches != again.mismatches:
                return "fail", f"{which}: nondeterministic report"
            lines.append(rep.summary())
        return "pass", "; ".join(lines)

    def bijection_checks():
        for n in range(min(max_n, 12) + 1):
            rep = bijections.verify_bijectivity(n, ctx.enum_limit)
            if not rep.ok:
                return "fail", f"n={n}: {rep.violations[0]}"
        w = words.CatalanWord.parse("011201123011")
        img = bijections.chi(w)
        if str(img) != "0121012310121":
            return "fail", f"worked example image {img}"
        if (words.stat_sper(w), words.stat_sper(img)) != (19, 21):
            return "fail", "worked example semiperimeters"
        if words.stat_area(img) == words.stat_area(w):
            return "fail", "area unexpectedly preserved on the worked example"
        return "pass", f"bijections verified exhaustively for n <= {min(max_n, 12)}"

    def asymptotic_diagnostics():
        pairs = [
            ("h", closedforms.h_closed, closedforms.asym_h),
            ("s", closedforms.s_closed, closedforms.asym_s),
            ("u", closedforms.u_closed, closedforms.asym_up),
            ("p", closedforms.p_closed, closedforms.asym_up),
        ]
        for name, exact, approx in pairs:
            near = exact(300) / approx(300)
            far = exact(50) / approx(50)
            if not 0.85 <= near <= 1.15:
                return "fail", f"{name} ratio at n=300 is {near:.4f}"
            if abs(near - 1) >= abs(far - 1):
                return "fail", f"{name} ratio not improving ({far:.4f} -> {near:.4f})"
        e200 = float(closedforms.expected_last(200))
        if not 3.8 <= e200 <= 4.0:
            return "fail", f"expected last letter at n=200 is {e200:.4f}"
        ratio = float(closedforms.expected_sper(300)) / (5 * 300 / 3)
        if not 0.95 <= ratio <= 1.05:
            return "fail", f"expected semiperimeter ratio {ratio:.4f}"
        return "pass", "asymptotic and expected-value diagnostics within tolerance"

    return [
        ("counts_match_closed_form", counts_match_closed_form),
        ("enumeration_cardinalities", enumeration_cardinalities),
        ("length4_catalog", length4_catalog),
        ("statistic_oracles", statistic_oracles),
        ("dyck_roundtrip", dyck_roundtrip),
        ("base_series", base_series),
        ("totals_series_match", totals_series_match),
        ("master_histograms", master_histograms),
        ("master_specializations", master_specializations),
        ("area_series", area_series),
        ("interior_series", interior_series),
        ("derivative_identities", derivative_identities),
        ("kernel_annihilation", kernel_annihilation),
        ("table_c_checks", table_c_checks),
        ("stat_tables", stat_tables),
        ("recurrence_audit", recurrence_audit),
        ("bijection_checks", bijection_checks),
        ("asymptotic_diagnostics", asymptotic_diagnostics),
    ]
