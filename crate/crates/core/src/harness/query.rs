use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::formulas::{self, FormulaResult, OrderCase};
use crate::paths::{enumerate_schroeder, path_maj, StepOrder};
use crate::qseries::LaurentPoly;
use crate::tableaux::{generate_reverse_tableaux, stat_gf, Family, Partition, SkewShape, Statistic};

use super::config::SweepConfig;

/// Parameters shared by the single-instance queries.
#[derive(Debug, Clone, Default)]
pub struct Inputs {
    pub r: Option<u32>,
    pub n: Option<u32>,
    pub m: Option<u32>,
    pub k: Option<u32>,
    pub shape: Option<String>,
    pub stat: Option<Statistic>,
    pub order: Option<StepOrder>,
}

impl Inputs {
    fn need(v: Option<u32>, name: &str) -> Result<u32> {
        v.ok_or_else(|| Error::Config(format!("missing parameter --{name}")))
    }

    pub fn r(&self) -> u32 {
        self.r.unwrap_or(0)
    }

    pub fn n(&self) -> Result<u32> {
        Inputs::need(self.n, "n")
    }

    pub fn m(&self) -> Result<u32> {
        Inputs::need(self.m, "m")
    }

    pub fn k(&self) -> u32 {
        self.k.unwrap_or(0)
    }

    pub fn skew_shape(&self) -> Result<SkewShape> {
        self.shape.as_deref().ok_or_else(|| Error::Config("missing parameter --shape".into()))?.parse()
    }

    pub fn order(&self) -> StepOrder {
        self.order.unwrap_or(StepOrder::E_D_N)
    }

    /// `(n, m)/(r)`.
    pub fn two_row(&self) -> Result<SkewShape> {
        let (r, n, m) = (self.r(), self.n()?, self.m()?);
        let outer = Partition::from_lengths(&[n.into(), m.into()])
            .ok_or_else(|| Error::InvalidShape(format!("({n},{m}) is not a partition")))?;
        SkewShape::new(outer, Partition::from_lengths(&[r.into()]).expect("r is nonnegative"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumFamily {
    Schroeder,
    Catalan,
    RInc,
    Inc,
    Syt,
    Rt,
}

impl FromStr for EnumFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "schroeder" | "schroder" => Ok(EnumFamily::Schroeder),
            "catalan" => Ok(EnumFamily::Catalan),
            "rinc" => Ok(EnumFamily::RInc),
            "inc" => Ok(EnumFamily::Inc),
            "syt" => Ok(EnumFamily::Syt),
            "rt" => Ok(EnumFamily::Rt),
            other => Err(Error::Config(format!(
                "unknown family {other:?}; expected schroeder, catalan, rinc, inc, syt or rt"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumAnswer {
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<String>,
    pub count: usize,
}

fn check_paths(n: u32, cfg: &SweepConfig) -> Result<()> {
    if n > cfg.max_n {
        return Err(Error::BudgetExceeded(format!("n = {n} exceeds max-n = {}", cfg.max_n)));
    }
    Ok(())
}

fn check_cells(sh: &SkewShape, cfg: &SweepConfig) -> Result<()> {
    if sh.size() > cfg.max_cells {
        return Err(Error::BudgetExceeded(format!("{sh} has {} cells; max-cells = {}", sh.size(), cfg.max_cells)));
    }
    Ok(())
}

/// The generating function and size of one family.
pub fn enumerate(family: EnumFamily, inp: &Inputs, cfg: &SweepConfig) -> Result<EnumAnswer> {
    let stat = inp.stat.unwrap_or(Statistic::Maj);
    let (label, poly, count) = match family {
        EnumFamily::Schroeder | EnumFamily::Catalan => {
            let (r, n, m) = (inp.r(), inp.n()?, inp.m()?);
            let k = if family == EnumFamily::Catalan { 0 } else { inp.k() };
            check_paths(n, cfg)?;
            let paths = enumerate_schroeder(r, n, m, k);
            let order = inp.order();
            let poly: LaurentPoly = paths.iter().map(|p| LaurentPoly::q_pow(path_maj(p, order) as i64)).sum();
            let name = if k == 0 { "Cat" } else { "Sch" };
            (format!("{name}_{k}({r};{n},{m}) order {order}"), Some(poly), paths.len())
        }
        EnumFamily::RInc | EnumFamily::Inc | EnumFamily::Syt => {
            let (fam, k, sh) = match family {
                EnumFamily::RInc => (Family::RInc, inp.k(), inp.two_row()?),
                EnumFamily::Inc => (Family::Inc, inp.k(), inp.two_row()?),
                _ => (Family::Syt, 0, inp.skew_shape()?),
            };
            check_cells(&sh, cfg)?;
            let poly = stat_gf(fam, &sh, k, stat);
            let count = poly.eval_at_one();
            let label = match fam {
                Family::Syt => format!("SYT({sh}) {stat:?}"),
                _ => format!("{fam:?}_{k}({sh}) {stat:?}"),
            };
            (label.to_lowercase(), Some(poly), usize::try_from(count).unwrap_or(usize::MAX))
        }
        EnumFamily::Rt => {
            let mu: Partition = inp.shape.as_deref().unwrap_or("").parse()?;
            let n = inp.n()?;
            check_paths(n, cfg)?;
            if mu.size() > cfg.max_cells {
                return Err(Error::BudgetExceeded(format!("{mu} exceeds max-cells = {}", cfg.max_cells)));
            }
            (format!("RT({mu},{n})"), None, generate_reverse_tableaux(&mu, n).len())
        }
    };
    Ok(EnumAnswer { family: label, polynomial: poly.map(|p| p.to_string()), count })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Formula {
    Schroeder,
    Catalan,
    RincMaj,
    RincAmaj,
    Inc,
    HookLength,
    SkewSyt,
    HookSkew,
    HookProduct,
    TwoRow,
    RincRect,
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "schroeder" | "schroder" => Formula::Schroeder,
            "catalan" => Formula::Catalan,
            "rinc-maj" => Formula::RincMaj,
            "rinc-amaj" => Formula::RincAmaj,
            "inc" | "inc-maj" => Formula::Inc,
            "hook-length" => Formula::HookLength,
            "skew-syt" => Formula::SkewSyt,
            "hook-skew" => Formula::HookSkew,
            "hook-product" => Formula::HookProduct,
            "two-row" => Formula::TwoRow,
            "rinc-rect" => Formula::RincRect,
            other => {
                return Err(Error::Config(format!(
                    "unknown formula {other:?}; expected schroeder, catalan, rinc-maj, rinc-amaj, inc, hook-length, \
                     skew-syt, hook-skew, hook-product, two-row or rinc-rect"
                )))
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedAnswer {
    pub polynomial: String,
    pub family_empty: bool,
}

/// Evaluates one closed form.
pub fn closed_form(formula: Formula, inp: &Inputs) -> Result<ClosedAnswer> {
    let res: FormulaResult = match formula {
        Formula::Schroeder => {
            formulas::schroeder_maj_closed(inp.r(), inp.n()?, inp.m()?, inp.k(), OrderCase::of(inp.order()))
        }
        Formula::Catalan => formulas::catalan_maj_closed(inp.r(), inp.n()?, inp.m()?, OrderCase::of(inp.order())),
        Formula::RincMaj => formulas::rinc_maj_closed(inp.r(), inp.n()?, inp.m()?, inp.k()),
        Formula::RincAmaj => formulas::rinc_amaj_closed(inp.r(), inp.n()?, inp.m()?, inp.k()),
        Formula::Inc => formulas::inc_maj_closed(inp.r(), inp.n()?, inp.m()?, inp.k())?,
        Formula::HookLength => {
            let sh = inp.skew_shape()?;
            if !sh.inner.is_empty() {
                return Err(Error::InvalidShape(format!("{sh} is not a straight shape")));
            }
            formulas::qhook_syt_gf(&sh.outer)?
        }
        Formula::SkewSyt => {
            let sh = inp.skew_shape()?;
            let n = inp.n.unwrap_or(sh.outer.len() as u32);
            formulas::chen_stanley_skew_gf(&sh.outer, &sh.inner, n)?
        }
        Formula::HookSkew => formulas::hook_shape_skew_gf(inp.r(), inp.n()?, inp.m()?, inp.k())?,
        Formula::HookProduct => formulas::syt_hook_gf(inp.n()?, inp.m()?, inp.k())?,
        Formula::TwoRow => formulas::syt_two_row_gf(inp.n()?, inp.m()?)?,
        Formula::RincRect => formulas::rinc_rect_closed(inp.n()?, inp.m()?, inp.k())?,
    };
    Ok(ClosedAnswer { polynomial: res.poly.to_string(), family_empty: res.family_empty })
}
