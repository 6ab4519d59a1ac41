use std::str::FromStr;

use serde::Serialize;

use crate::bijections::{
    chi, chi_inv, g, g_domain, g_inv, jdt_in, jdt_out, phi, phi_inv, psi, psi_descent_set, psi_inv, rho, rho_inv,
    rinc_to_syt, syt_to_rinc, PsiLetter,
};
use crate::error::{Error, Result};
use crate::paths::{descent_set, diagonal_reverse_labelling, enumerate_schroeder, LatticePath, StepOrder};
use crate::tableaux::{generate_family, Family, Partition, SkewShape, Tableau};

use super::config::SweepConfig;
use super::query::Inputs;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapName {
    Phi,
    Psi,
    Chi,
    Rho,
    Jdt,
    G,
    RincToSyt,
}

impl FromStr for MapName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "phi" => MapName::Phi,
            "psi" => MapName::Psi,
            "chi" => MapName::Chi,
            "rho" => MapName::Rho,
            "jdt" => MapName::Jdt,
            "g" => MapName::G,
            "rinc-to-syt" | "rinc_to_syt" => MapName::RincToSyt,
            other => {
                return Err(Error::Config(format!(
                    "unknown bijection {other:?}; expected phi, psi, chi, rho, jdt, g or rinc-to-syt"
                )))
            }
        })
    }
}

/// One domain element pushed through a map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceLine {
    pub input: String,
    pub output: String,
    pub stat_in: String,
    pub stat_out: String,
    pub round_trip: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl TraceLine {
    fn failed(input: String, e: Error) -> TraceLine {
        TraceLine {
            input,
            output: String::new(),
            stat_in: String::new(),
            stat_out: String::new(),
            round_trip: false,
            error: Some(e.to_string()),
        }
    }

    pub fn ok(&self) -> bool {
        self.error.is_none() && self.round_trip && self.stat_in == self.stat_out
    }
}

fn stats<T: std::fmt::Display>(d: &[T]) -> String {
    let maj: u64 = d.iter().map(|x| x.to_string().parse::<u64>().unwrap_or(0)).sum();
    let set: Vec<String> = d.iter().map(ToString::to_string).collect();
    format!("D={{{}}} maj={maj}", set.join(","))
}

fn tab_stats(t: &Tableau) -> String {
    stats(&t.descent_set())
}

fn psi_word(w: &[PsiLetter]) -> String {
    w.iter()
        .map(|l| match l {
            PsiLetter::E => "E".to_string(),
            PsiLetter::N => "N".to_string(),
            PsiLetter::D(i) => format!("D{i}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn tableau_line(
    t: &Tableau,
    map: impl Fn(&Tableau) -> Result<Tableau>,
    inv: impl Fn(&Tableau) -> Result<Tableau>,
) -> TraceLine {
    match map(t) {
        Err(e) => TraceLine::failed(t.to_string(), e),
        Ok(s) => {
            let back = inv(&s);
            TraceLine {
                input: t.to_string(),
                output: s.to_string(),
                stat_in: tab_stats(t),
                stat_out: tab_stats(&s),
                round_trip: back.as_ref() == Ok(t),
                error: back.err().map(|e| format!("inverse: {e}")),
            }
        }
    }
}

fn budget(sh: &SkewShape, cfg: &SweepConfig) -> Result<()> {
    if sh.size() > cfg.max_cells {
        return Err(Error::BudgetExceeded(format!("{sh} has {} cells; max-cells = {}", sh.size(), cfg.max_cells)));
    }
    Ok(())
}

/// The single cell in which two shapes differ, if any.
fn added_cell(small: &Partition, big: &Partition) -> Option<(usize, usize)> {
    (1..=big.len()).find(|&i| big.part(i) > small.part(i)).map(|i| (i, big.part(i) as usize))
}

/// `(n, m, k)` for a tableau of shape `(a, b, 1^k)/(1,1)`.
fn g_params(t: &Tableau) -> Result<(u32, u32, u32)> {
    let outer = &t.shape().outer;
    let k = outer.len().saturating_sub(2) as u32;
    let (n, m) = ((outer.part(1) + k).saturating_sub(1), (outer.part(2) + k).saturating_sub(1));
    if g_domain(n, m, k).as_ref() != Some(t.shape()) {
        return Err(Error::NotInFamily(format!("{t} is not of shape (a, b, 1^k)/(1,1)")));
    }
    Ok((n, m, k))
}

/// Runs a bijection over its domain (or over the single `tableau`) and its
/// inverse, reporting statistics on both sides.
pub fn trace(
    map: MapName,
    inp: &Inputs,
    tableau: Option<&str>,
    cell: Option<(usize, usize)>,
    outward: bool,
    cfg: &SweepConfig,
) -> Result<Vec<TraceLine>> {
    let given: Option<Tableau> = tableau.map(str::parse).transpose()?;
    let domain = |family: Family, sh: SkewShape, k: u32| -> Result<Vec<Tableau>> {
        match &given {
            Some(t) => Ok(vec![t.clone()]),
            None => {
                budget(&sh, cfg)?;
                Ok(generate_family(family, &sh, k))
            }
        }
    };
    let two_row = || -> Result<SkewShape> {
        match &given {
            Some(t) => Ok(t.shape().clone()),
            None => inp.two_row(),
        }
    };
    Ok(match map {
        MapName::Phi => domain(Family::RInc, two_row()?, inp.k())?
            .iter()
            .map(|t| match phi(t) {
                Err(e) => TraceLine::failed(t.to_string(), e),
                Ok(p) => TraceLine {
                    input: t.to_string(),
                    output: format!("({},0) {p}", p.start_x),
                    stat_in: tab_stats(t),
                    stat_out: stats(&descent_set(&diagonal_reverse_labelling(&p, StepOrder::E_D_N))),
                    round_trip: phi_inv(&p).as_ref() == Ok(t),
                    error: None,
                },
            })
            .collect(),
        MapName::Psi => {
            let (r, n, m, k) = (inp.r(), inp.n()?, inp.m()?, inp.k());
            if n > cfg.max_n {
                return Err(Error::BudgetExceeded(format!("n = {n} exceeds max-n = {}", cfg.max_n)));
            }
            let order = inp.order();
            enumerate_schroeder(r, n, m, k)
                .iter()
                .map(|p: &LatticePath| {
                    let w = psi(p);
                    TraceLine {
                        input: p.to_string(),
                        output: psi_word(&w),
                        stat_in: stats(&descent_set(&diagonal_reverse_labelling(p, order))),
                        stat_out: stats(&psi_descent_set(&w, order)),
                        round_trip: psi_inv(&w, r) == *p,
                        error: None,
                    }
                })
                .collect()
        }
        MapName::Chi => domain(Family::Inc, two_row()?, inp.k())?
            .iter()
            .map(|t| tableau_line(t, chi, |s| chi_inv(s, t.repeats())))
            .collect(),
        MapName::Rho => domain(Family::RInc, two_row()?, inp.k())?
            .iter()
            .map(|t| tableau_line(t, rho, |s| rho_inv(s, t.row(2).len() as u32)))
            .collect(),
        MapName::Jdt => {
            let t = given.ok_or_else(|| Error::Config("jdt needs --tableau".into()))?;
            let hole = cell.ok_or_else(|| Error::Config("jdt needs --cell i,j".into()))?;
            let line = if outward {
                tableau_line(
                    &t,
                    |t| jdt_out(t, hole),
                    |s| {
                        let back = added_cell(&t.shape().inner, &s.shape().inner).ok_or(Error::InvalidHole {
                            row: hole.0,
                            col: hole.1,
                            reason: "slide left the inner shape unchanged".into(),
                        })?;
                        jdt_in(s, back)
                    },
                )
            } else {
                tableau_line(
                    &t,
                    |t| jdt_in(t, hole),
                    |s| {
                        let back = added_cell(&s.shape().outer, &t.shape().outer).ok_or(Error::InvalidHole {
                            row: hole.0,
                            col: hole.1,
                            reason: "slide left the outer shape unchanged".into(),
                        })?;
                        jdt_out(s, back)
                    },
                )
            };
            vec![line]
        }
        MapName::G => {
            let tabs = match &given {
                Some(t) => vec![t.clone()],
                None => {
                    let (n, m, k) = (inp.n()?, inp.m()?, inp.k());
                    let sh = g_domain(n, m, k).ok_or_else(|| {
                        Error::InvalidShape(format!("no shape (n-k+1, m-k+1, 1^k)/(1,1) for ({n},{m},{k})"))
                    })?;
                    domain(Family::Syt, sh, 0)?
                }
            };
            tabs.iter()
                .map(|t| match g_params(t) {
                    Err(e) => TraceLine::failed(t.to_string(), e),
                    Ok((n, m, k)) => tableau_line(t, g, |s| g_inv(s, n, m, k)),
                })
                .collect()
        }
        MapName::RincToSyt => domain(Family::RInc, two_row()?, inp.k())?
            .iter()
            .map(|t| {
                let (n, m) = (t.row(1).len() as u32, t.row(2).len() as u32);
                tableau_line(t, rinc_to_syt, |s| syt_to_rinc(s, n, m, t.repeats()))
            })
            .collect(),
    })
}
