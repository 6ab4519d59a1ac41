use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::bijections::{chi, chi_codomain, chi_inv, g_domain, rho, rho_codomain, rho_inv, rinc_to_syt, syt_to_rinc};
use crate::error::{Error, Result};
use crate::formulas::{self, FormulaResult, OrderCase};
use crate::paths::{enumerate_schroeder, maj_gf_schroeder_enum, schroeder_feasible, StepOrder};
use crate::qseries::LaurentPoly;
use crate::tableaux::{generate_family, stat_gf, Family, Partition, SkewShape, Statistic, Tableau};

use super::config::SweepConfig;

macro_rules! checks {
    ($($variant:ident => $id:literal),* $(,)?) => {
        /// A family of comparisons run over a parameter grid.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Check { $($variant),* }

        impl Check {
            pub const ALL: &'static [Check] = &[$(Check::$variant),*];

            pub fn id(self) -> &'static str {
                match self { $(Check::$variant => $id),* }
            }
        }
    };
}

checks! {
    SchroederMaj => "schroeder-maj",
    CatalanMaj => "catalan-maj",
    CatalanSyt => "catalan-syt",
    RincMaj => "rinc-maj",
    RincAmaj => "rinc-amaj",
    RincShift => "rinc-shift",
    IncMaj => "inc-maj",
    RincToSyt => "rinc-to-syt",
    Chi => "chi",
    Rho => "rho",
    SkewSyt => "skew-syt",
    HookLength => "hook-length",
    HookSkew => "hook-skew",
    HookProduct => "hook-product",
    RincRect => "rinc-rect",
    Count => "count",
    OrderInvariance => "order-invariance",
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL.iter().copied().find(|c| c.id() == s.trim()).ok_or_else(|| {
            let known: Vec<_> = Check::ALL.iter().map(|c| c.id()).collect();
            Error::Config(format!("unknown check {s:?}; known: {}", known.join(", ")))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    Mismatch,
    SkippedEmpty,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::SkippedEmpty => "skipped-empty",
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shape: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(s) = &self.shape {
            parts.push(format!("shape={s}"));
        }
        for (name, v) in [("r", self.r), ("n", self.n), ("m", self.m), ("k", self.k)] {
            if let Some(v) = v {
                parts.push(format!("{name}={v}"));
            }
        }
        if let Some(o) = &self.order {
            parts.push(format!("order={o}"));
        }
        f.write_str(&parts.join(" "))
    }
}

/// One comparison of an enumerated polynomial against a closed form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub check: Check,
    pub params: Params,
    pub enumerated: String,
    pub closed_form: String,
    pub status: Status,
    pub millis: u64,
}

impl Serialize for Check {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

/// A single grid point waiting to be evaluated.
#[derive(Debug, Clone)]
pub struct Task {
    pub check: Check,
    r: u32,
    n: u32,
    m: u32,
    k: u32,
    order: Option<StepOrder>,
    shape: Option<SkewShape>,
    params: Params,
}

impl Task {
    fn rnmk(check: Check, (r, n, m, k): (u32, u32, u32, u32), order: Option<StepOrder>) -> Task {
        let params =
            Params { r: Some(r), n: Some(n), m: Some(m), k: Some(k), shape: None, order: order.map(|o| o.to_string()) };
        Task { check, r, n, m, k, order, shape: None, params }
    }

    fn without_r(mut self) -> Task {
        self.params.r = None;
        self
    }

    fn shape(check: Check, shape: SkewShape, n: Option<u32>) -> Task {
        let params = Params { n, shape: Some(shape.to_string()), ..Params::default() };
        Task { check, r: 0, n: n.unwrap_or(0), m: 0, k: 0, order: None, shape: Some(shape), params }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }
}

struct Outcome {
    enumerated: String,
    closed_form: String,
    status: Status,
}

impl Outcome {
    fn compare(enumerated: &LaurentPoly, closed: &LaurentPoly) -> Outcome {
        let (enumerated, closed_form) = (enumerated.to_string(), closed.to_string());
        let status = if enumerated == closed_form { Status::Match } else { Status::Mismatch };
        Outcome { enumerated, closed_form, status }
    }

    fn error(enumerated: &LaurentPoly, e: impl fmt::Display) -> Outcome {
        Outcome { enumerated: enumerated.to_string(), closed_form: format!("ERROR: {e}"), status: Status::Mismatch }
    }

    fn skipped(enumerated: &LaurentPoly, raw: String) -> Outcome {
        Outcome { enumerated: enumerated.to_string(), closed_form: raw, status: Status::SkippedEmpty }
    }

    /// Compares against a formula result; an empty family is reported with
    /// the formula's raw value instead of being compared.
    fn formula(enumerated: &LaurentPoly, res: Result<FormulaResult>, raw: impl FnOnce() -> String) -> Outcome {
        match res {
            Err(e) => Outcome::error(enumerated, e),
            Ok(r) if r.family_empty => Outcome::skipped(enumerated, raw()),
            Ok(r) => Outcome::compare(enumerated, &r.poly),
        }
    }
}

fn two_row(r: u32, n: u32, m: u32) -> SkewShape {
    let outer = Partition::from_lengths(&[n.into(), m.into()]).expect("m <= n");
    SkewShape::new(outer, Partition::from_lengths(&[r.into()]).unwrap()).expect("r <= n")
}

fn maj_poly<'a>(ts: impl IntoIterator<Item = &'a Tableau>) -> LaurentPoly {
    ts.into_iter().map(|t| LaurentPoly::q_pow(i64::from(t.maj()))).sum()
}

/// `0 ≤ r < n ≤ max_n`, `m ≤ n`, `k ≤ min(m, n − r)` in lexicographic order.
pub fn schroeder_grid(max_n: u32) -> Vec<(u32, u32, u32, u32)> {
    let mut out = Vec::new();
    for r in 0..max_n {
        for n in r + 1..=max_n {
            for m in 0..=n {
                for k in 0..=m.min(n - r) {
                    out.push((r, n, m, k));
                }
            }
        }
    }
    out
}

fn rect_grid(max_n: u32) -> Vec<(u32, u32, u32, u32)> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for m in 0..=n {
            for k in 0..=m {
                out.push((0, n, m, k));
            }
        }
    }
    out
}

fn hook_grid(max_total: u32) -> Vec<(u32, u32, u32, u32)> {
    let mut out = Vec::new();
    for r in 0..=max_total {
        for n in r.max(1)..=max_total {
            for m in 0..=n.min(max_total - n) {
                for k in 0..=max_total - n - m {
                    if Partition::hook(n.into(), m.into(), k.into()).is_some() {
                        out.push((r, n, m, k));
                    }
                }
            }
        }
    }
    out
}

fn path_orders(cfg: &SweepConfig) -> Vec<StepOrder> {
    match cfg.order {
        Some(o) => vec![o],
        None => vec![StepOrder::E_D_N, StepOrder::N_D_E],
    }
}

/// Expands a check into its grid points in lexicographic parameter order.
pub fn tasks_for(check: Check, cfg: &SweepConfig) -> Vec<Task> {
    let two_row_fits = |&(r, n, m, _): &(u32, u32, u32, u32)| n + m - r <= cfg.max_cells;
    let grid = schroeder_grid(cfg.max_n);
    match check {
        Check::SchroederMaj => path_orders(cfg)
            .into_iter()
            .flat_map(|o| grid.iter().map(move |&p| Task::rnmk(check, p, Some(o))))
            .collect(),
        Check::CatalanMaj => path_orders(cfg)
            .into_iter()
            .flat_map(|o| grid.iter().filter(|p| p.3 == 0).map(move |&p| Task::rnmk(check, p, Some(o))))
            .collect(),
        Check::CatalanSyt => {
            grid.iter().filter(|p| p.3 == 0 && two_row_fits(p)).map(|&p| Task::rnmk(check, p, None)).collect()
        }
        Check::RincMaj | Check::RincAmaj | Check::IncMaj | Check::Chi => {
            grid.iter().filter(|p| two_row_fits(p)).map(|&p| Task::rnmk(check, p, None)).collect()
        }
        Check::Count => grid.iter().map(|&p| Task::rnmk(check, p, None)).collect(),
        Check::RincShift | Check::OrderInvariance => [OrderCase::EgtN, OrderCase::EltN]
            .into_iter()
            .flat_map(|c| grid.iter().map(move |&p| Task::rnmk(check, p, Some(c.default_order()))))
            .collect(),
        Check::RincToSyt | Check::Rho | Check::RincRect => rect_grid(cfg.max_n)
            .into_iter()
            .filter(|p| two_row_fits(p))
            .map(|p| Task::rnmk(check, p, None).without_r())
            .collect(),
        Check::HookSkew => hook_grid(cfg.max_hook)
            .into_iter()
            .filter(|&(r, n, m, k)| n + m + k - r <= cfg.max_cells)
            .map(|p| Task::rnmk(check, p, None))
            .collect(),
        Check::HookProduct => hook_grid(cfg.max_hook)
            .into_iter()
            .filter(|&(r, n, m, k)| r == 0 && n + m + k <= cfg.max_cells)
            .map(|p| Task::rnmk(check, p, None).without_r())
            .collect(),
        Check::HookLength => (0..=cfg.max_shape.min(cfg.max_cells))
            .flat_map(|size| Partition::all_of_size(size, size as usize))
            .map(|l| Task::shape(check, SkewShape::straight(l), None))
            .collect(),
        Check::SkewSyt => {
            let mut out = Vec::new();
            for size in 1..=cfg.max_shape.min(cfg.max_cells) {
                for lambda in Partition::all_of_size(size, 4) {
                    for mu in lambda.subpartitions().into_iter().filter(|mu| mu.size() <= 4) {
                        let len = lambda.len() as u32;
                        for n in len..=len + 2 {
                            let sh = SkewShape::new(lambda.clone(), mu.clone()).expect("mu inside lambda");
                            out.push(Task::shape(check, sh, Some(n)));
                        }
                    }
                }
            }
            out
        }
    }
}

/// Evaluates one grid point.
pub fn run_task(task: &Task, timing: bool) -> CheckRecord {
    let start = Instant::now();
    let o = evaluate(task);
    let millis = if timing { start.elapsed().as_millis() as u64 } else { 0 };
    CheckRecord {
        check: task.check,
        params: task.params.clone(),
        enumerated: o.enumerated,
        closed_form: o.closed_form,
        status: o.status,
        millis,
    }
}

fn evaluate(t: &Task) -> Outcome {
    let (r, n, m, k) = (t.r, t.n, t.m, t.k);
    match t.check {
        Check::SchroederMaj | Check::CatalanMaj => {
            let order = t.order.expect("path checks carry an order");
            let case = OrderCase::of(order);
            let enumerated = maj_gf_schroeder_enum(r, n, m, k, order);
            let res = formulas::schroeder_maj_closed(r, n, m, k, case);
            Outcome::formula(&enumerated, Ok(res), || formulas::schroeder_maj_expr(r, n, m, k, case).to_string())
        }
        Check::CatalanSyt => {
            let syt = stat_gf(Family::Syt, &two_row(r, n, m), 0, Statistic::Maj);
            let paths = maj_gf_schroeder_enum(r, n, m, 0, StepOrder::E_D_N);
            if !schroeder_feasible(r.into(), n.into(), m.into(), 0) {
                return Outcome::skipped(&syt, paths.to_string());
            }
            Outcome::compare(&syt, &paths)
        }
        Check::RincMaj | Check::RincAmaj => {
            let (stat, res, case) = if t.check == Check::RincMaj {
                (Statistic::Maj, formulas::rinc_maj_closed(r, n, m, k), OrderCase::EgtN)
            } else {
                (Statistic::Amaj, formulas::rinc_amaj_closed(r, n, m, k), OrderCase::EltN)
            };
            let enumerated = stat_gf(Family::RInc, &two_row(r, n, m), k, stat);
            let shift = i64::from(k) * (i64::from(k) - 1) / 2;
            Outcome::formula(&enumerated, Ok(res), || {
                formulas::schroeder_maj_expr(r, n, m, k, case).shift(shift).to_string()
            })
        }
        Check::RincShift => {
            let case = OrderCase::of(t.order.expect("shift check carries an order"));
            let shift = i64::from(k) * (i64::from(k) - 1) / 2;
            let rinc = match case {
                OrderCase::EgtN => formulas::rinc_maj_closed(r, n, m, k),
                OrderCase::EltN => formulas::rinc_amaj_closed(r, n, m, k),
            };
            let sch = formulas::schroeder_maj_expr(r, n, m, k, case).shift(shift);
            if rinc.family_empty {
                return Outcome::skipped(&rinc.poly, sch.to_string());
            }
            Outcome::compare(&rinc.poly, &sch)
        }
        Check::IncMaj => {
            let enumerated = stat_gf(Family::Inc, &two_row(r, n, m), k, Statistic::Maj);
            Outcome::formula(&enumerated, formulas::inc_maj_closed(r, n, m, k), || {
                match formulas::inc_maj_expr(r, n, m, k) {
                    Ok(p) => p.to_string(),
                    Err(e) => format!("ERROR: {e}"),
                }
            })
        }
        Check::Count => {
            let count = enumerate_schroeder(r, n, m, k).len();
            let enumerated = LaurentPoly::monomial(count as i64, 0);
            let closed = formulas::schroeder_maj_closed(r, n, m, k, OrderCase::EgtN);
            let at_one = |p: LaurentPoly| LaurentPoly::monomial(p.eval_at_one(), 0);
            if closed.family_empty {
                let raw = formulas::schroeder_maj_expr(r, n, m, k, OrderCase::EgtN);
                return Outcome::skipped(&enumerated, at_one(raw).to_string());
            }
            Outcome::compare(&enumerated, &at_one(closed.poly))
        }
        Check::OrderInvariance => {
            let case = OrderCase::of(t.order.expect("order invariance carries an order"));
            let polys: Vec<_> = case.orders().into_iter().map(|o| maj_gf_schroeder_enum(r, n, m, k, o)).collect();
            let first = &polys[0];
            let other = polys.iter().find(|p| *p != first).unwrap_or(first);
            Outcome::compare(first, other)
        }
        Check::RincToSyt => {
            let domain = generate_family(Family::RInc, &two_row(0, n, m), k);
            let Some(target) = g_domain(n, m, k) else {
                return Outcome::skipped(&maj_poly(&domain), "0".into());
            };
            let codomain: BTreeSet<Tableau> = generate_family(Family::Syt, &target, 0).into_iter().collect();
            bijection_outcome(&domain, &codomain, rinc_to_syt, |s| syt_to_rinc(s, n, m, k), false)
        }
        Check::Chi => {
            let domain = generate_family(Family::Inc, &two_row(r, n, m), k);
            let codomain: BTreeSet<Tableau> =
                chi_codomain(r, n, m, k).iter().flat_map(|sh| generate_family(Family::Syt, sh, 0)).collect();
            bijection_outcome(&domain, &codomain, chi, |s| chi_inv(s, k), true)
        }
        Check::Rho => {
            let domain = generate_family(Family::RInc, &two_row(0, n, m), k);
            let codomain: BTreeSet<Tableau> =
                rho_codomain(n, m, k).iter().flat_map(|(sh, k)| generate_family(Family::Inc, sh, *k)).collect();
            bijection_outcome(&domain, &codomain, rho, |s| rho_inv(s, m), true)
        }
        Check::RincRect => {
            let enumerated = stat_gf(Family::RInc, &two_row(0, n, m), k, Statistic::Maj);
            let res = formulas::rinc_rect_closed(n, m, k);
            if let Ok(r) = &res {
                if !r.family_empty && r.poly != formulas::rinc_maj_closed(0, n, m, k).poly {
                    return Outcome::error(&enumerated, "product form differs from the two-row closed form");
                }
            }
            Outcome::formula(&enumerated, res, || "0".into())
        }
        Check::HookSkew => {
            let outer = Partition::hook(n.into(), m.into(), k.into()).expect("grid holds valid hooks");
            let sh = SkewShape::new(outer, Partition::from_lengths(&[r.into()]).unwrap()).expect("r <= n");
            let enumerated = stat_gf(Family::Syt, &sh, 0, Statistic::Maj);
            Outcome::formula(&enumerated, formulas::hook_shape_skew_gf(r, n, m, k), || "0".into())
        }
        Check::HookProduct => {
            let lambda = Partition::hook(n.into(), m.into(), k.into()).expect("grid holds valid hooks");
            let enumerated = stat_gf(Family::Syt, &SkewShape::straight(lambda), 0, Statistic::Maj);
            let res = formulas::syt_hook_gf(n, m, k);
            if k == 0 {
                if let (Ok(a), Ok(b)) = (&res, formulas::syt_two_row_gf(n, m)) {
                    if a.poly != b.poly {
                        return Outcome::error(&enumerated, "two-row product form differs");
                    }
                }
            }
            Outcome::formula(&enumerated, res, || "0".into())
        }
        Check::HookLength => {
            let sh = t.shape.as_ref().expect("shape task");
            let enumerated = stat_gf(Family::Syt, sh, 0, Statistic::Maj);
            Outcome::formula(&enumerated, formulas::qhook_syt_gf(&sh.outer), || "0".into())
        }
        Check::SkewSyt => {
            let sh = t.shape.as_ref().expect("shape task");
            let enumerated = stat_gf(Family::Syt, sh, 0, Statistic::Maj);
            Outcome::formula(&enumerated, formulas::chen_stanley_skew_gf(&sh.outer, &sh.inner, n), || "0".into())
        }
    }
}

/// Checks that `map` sends `domain` bijectively onto `codomain` with inverse
/// `inv`, preserving descent sets (or only maj when `full_descents` is off).
fn bijection_outcome(
    domain: &[Tableau],
    codomain: &BTreeSet<Tableau>,
    map: impl Fn(&Tableau) -> Result<Tableau>,
    inv: impl Fn(&Tableau) -> Result<Tableau>,
    full_descents: bool,
) -> Outcome {
    let enumerated = maj_poly(domain);
    if domain.is_empty() && codomain.is_empty() {
        return Outcome::skipped(&enumerated, "0".into());
    }
    let mut images = BTreeSet::new();
    for t in domain {
        let s = match map(t) {
            Ok(s) => s,
            Err(e) => return Outcome::error(&enumerated, format!("{t}: {e}")),
        };
        let preserved = if full_descents { s.descent_set() == t.descent_set() } else { s.maj() == t.maj() };
        if !preserved {
            return Outcome::error(&enumerated, format!("{t} -> {s} changes the descents"));
        }
        match inv(&s) {
            Ok(back) if back == *t => {}
            Ok(back) => return Outcome::error(&enumerated, format!("{t} -> {s} -> {back}")),
            Err(e) => return Outcome::error(&enumerated, format!("inverse of {s}: {e}")),
        }
        if !codomain.contains(&s) {
            return Outcome::error(&enumerated, format!("{t} -> {s} lands outside the codomain"));
        }
        if !images.insert(s) {
            return Outcome::error(&enumerated, format!("{t} collides with an earlier image"));
        }
    }
    if images.len() != codomain.len() {
        return Outcome::error(
            &enumerated,
            format!("image has {} of {} codomain elements", images.len(), codomain.len()),
        );
    }
    Outcome::compare(&enumerated, &maj_poly(codomain))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(max_n: u32) -> SweepConfig {
        SweepConfig { max_n, max_shape: 5, max_hook: 7, timing: false, ..SweepConfig::default() }
    }

    #[test]
    fn ids_round_trip() {
        for &c in Check::ALL {
            assert_eq!(c.id().parse::<Check>().unwrap(), c);
        }
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn grid_is_lexicographic_and_complete() {
        let g = schroeder_grid(4);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        let brute: Vec<_> = (0..=4u32)
            .flat_map(|r| {
                (0..=4u32).flat_map(move |n| (0..=4u32).flat_map(move |m| (0..=4u32).map(move |k| (r, n, m, k))))
            })
            .filter(|&(r, n, m, k)| r < n && m <= n && k <= m.min(n - r))
            .collect();
        assert_eq!(g, brute);
    }

    #[test]
    fn every_check_passes_on_a_small_grid() {
        let c = cfg(4);
        for &check in Check::ALL {
            let tasks = tasks_for(check, &c);
            assert!(!tasks.is_empty(), "{check}");
            for t in &tasks {
                let rec = run_task(t, false);
                assert_ne!(rec.status, Status::Mismatch, "{check} {} {rec:?}", t.params());
                assert_eq!(rec.millis, 0);
            }
        }
    }

    #[test]
    fn empty_families_are_skipped() {
        let t = Task::rnmk(Check::SchroederMaj, (3, 4, 2, 2), Some(StepOrder::E_D_N));
        let rec = run_task(&t, false);
        assert_eq!(rec.status, Status::SkippedEmpty);
        assert_eq!(rec.enumerated, "0");
    }

    #[test]
    fn record_json_shape() {
        let t = Task::rnmk(Check::SchroederMaj, (0, 2, 2, 1), Some(StepOrder::E_D_N));
        let json = serde_json::to_value(run_task(&t, false)).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "check": "schroeder-maj",
                "params": {"r": 0, "n": 2, "m": 2, "k": 1, "order": "E>D>N"},
                "enumerated": "q + q^2 + q^3",
                "closed_form": "q + q^2 + q^3",
                "status": "match",
                "millis": 0
            })
        );
    }
}
