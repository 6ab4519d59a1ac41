//! Statistic-preserving maps between paths and tableaux, each paired with
//! its inverse.
//!
//! * [`phi`]: two-row row-increasing tableaux ↔ Schröder paths.
//! * [`psi`]: Schröder paths ↔ shuffles with indexed diagonal letters.
//! * [`chi`]: two-row increasing tableaux ↔ skew SYT with a column leg.
//! * [`rho`]: two-row row-increasing ↔ increasing tableaux.
//! * [`jdt_in`] / [`jdt_out`]: jeu de taquin slides on skew SYT.
//! * [`g`]: SYT of shape `(n−k+1, m−k+1, 1^k)/(1,1)` ↔ four straight shapes.
//! * [`rinc_to_syt`]: the composite `g⁻¹ ∘ χ ∘ ρ`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::paths::{LatticePath, Step, StepOrder};
use crate::tableaux::{Partition, SkewShape, Tableau};

fn not_in_family(what: &str, t: &impl std::fmt::Display) -> Error {
    Error::NotInFamily(format!("{t} is not {what}"))
}

/// `(r, n, m)` for a tableau of shape `(n, m)/(r)` (with `m` possibly 0).
fn two_row_params(t: &Tableau) -> Option<(u32, u32, u32)> {
    let sh = t.shape();
    if sh.outer.len() > 2 || sh.inner.len() > 1 {
        return None;
    }
    Some((sh.inner.part(1), sh.outer.part(1), sh.outer.part(2)))
}

fn skew(outer: Option<Partition>, r: u32) -> Option<SkewShape> {
    let inner = Partition::from_lengths(&[i64::from(r)])?;
    SkewShape::new(outer?, inner).ok()
}

/// Reads values `1..=max`: only in row 1 gives `E`, only in row 2 gives `N`,
/// in both gives `D`.
pub fn phi(t: &Tableau) -> Result<LatticePath> {
    let (r, _, _) = two_row_params(t).ok_or_else(|| not_in_family("a two-row tableau", t))?;
    if !t.is_rinc() {
        return Err(not_in_family("row-increasing", t));
    }
    let top: BTreeSet<u32> = t.row(1).iter().copied().collect();
    let bottom: BTreeSet<u32> = t.row(2).iter().copied().collect();
    let steps = (1..=t.max_value())
        .map(|v| match (top.contains(&v), bottom.contains(&v)) {
            (true, true) => Step::D,
            (true, false) => Step::E,
            _ => Step::N,
        })
        .collect();
    Ok(LatticePath::new(r, steps))
}

/// Replays the steps into the two rows.
pub fn phi_inv(p: &LatticePath) -> Result<Tableau> {
    if !p.is_valid() {
        return Err(not_in_family("a path weakly below y = x", p));
    }
    let (mut top, mut bottom) = (Vec::new(), Vec::new());
    for (i, s) in p.steps.iter().enumerate() {
        let v = i as u32 + 1;
        match s {
            Step::E => top.push(v),
            Step::N => bottom.push(v),
            Step::D => {
                top.push(v);
                bottom.push(v);
            }
        }
    }
    let t = Tableau::from_rows(&[p.start_x], vec![top, bottom])?;
    if !t.is_rinc() {
        return Err(not_in_family("row-increasing after replay", &t));
    }
    Ok(t)
}

/// A step of `ψ(P)`: the `i`-th diagonal from the right becomes `D(i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PsiLetter {
    E,
    D(u32),
    N,
}

/// Replaces the `i`-th `D` (from the left) by `D_{k−i+1}`.
pub fn psi(p: &LatticePath) -> Vec<PsiLetter> {
    let k = p.count(Step::D) as u32;
    let mut seen = 0;
    p.steps
        .iter()
        .map(|s| match s {
            Step::E => PsiLetter::E,
            Step::N => PsiLetter::N,
            Step::D => {
                seen += 1;
                PsiLetter::D(k - seen + 1)
            }
        })
        .collect()
}

pub fn psi_inv(word: &[PsiLetter], start_x: u32) -> LatticePath {
    let steps = word
        .iter()
        .map(|l| match l {
            PsiLetter::E => Step::E,
            PsiLetter::D(_) => Step::D,
            PsiLetter::N => Step::N,
        })
        .collect();
    LatticePath::new(start_x, steps)
}

/// Descents of a `ψ` word when the `D_i` sit in the slot of `D` in `order`
/// and compare among themselves by index.
pub fn psi_descent_set(word: &[PsiLetter], order: StepOrder) -> Vec<usize> {
    let keys: Vec<(u8, u32)> = word
        .iter()
        .map(|l| match *l {
            PsiLetter::E => (order.rank(Step::E), 0),
            PsiLetter::N => (order.rank(Step::N), 0),
            PsiLetter::D(i) => (order.rank(Step::D), i),
        })
        .collect();
    crate::paths::descent_set(&keys)
}

/// Codomain shapes of `χ` on `Inc_k((n,m)/(r))`:
/// `(n−k, m−k, 1^k)/(r)` and `(n−k, m−k+1, 1^(k−1))/(r)`, when they exist.
pub fn chi_codomain(r: u32, n: u32, m: u32, k: u32) -> Vec<SkewShape> {
    let (r, n, m, k) = (i64::from(r), i64::from(n), i64::from(m), i64::from(k));
    [Partition::hook(n - k, m - k, k), Partition::hook(n - k, m - k + 1, k - 1)]
        .into_iter()
        .filter_map(|o| skew(o, r as u32))
        .collect()
}

/// Moves the doubled values out of row 1 and their right neighbours in
/// row 2 down into column 1.
pub fn chi(t: &Tableau) -> Result<Tableau> {
    let (r, _, _) = two_row_params(t).ok_or_else(|| not_in_family("a two-row tableau", t))?;
    if !t.is_inc() {
        return Err(not_in_family("increasing", t));
    }
    let top = t.row(1);
    let bottom = t.row(2);
    let doubled: BTreeSet<u32> = top.iter().filter(|v| bottom.contains(v)).copied().collect();
    let moved: BTreeSet<u32> = bottom.windows(2).filter(|w| doubled.contains(&w[0])).map(|w| w[1]).collect();
    let mut rows = vec![
        top.iter().filter(|v| !doubled.contains(v)).copied().collect::<Vec<_>>(),
        bottom.iter().filter(|v| !moved.contains(v)).copied().collect(),
    ];
    rows.extend(moved.iter().map(|&b| vec![b]));
    let out = Tableau::from_rows(&[r], rows)?;
    debug_assert!(out.is_syt());
    Ok(out)
}

/// Inverse of [`chi`] onto `Inc_k((n,m)/(r))`.
pub fn chi_inv(s: &Tableau, k: u32) -> Result<Tableau> {
    let sh = s.shape();
    if !s.is_syt() || sh.inner.len() > 1 {
        return Err(not_in_family("a standard tableau with inner shape (r)", s));
    }
    if sh.outer.parts().iter().skip(2).any(|&p| p != 1) {
        return Err(not_in_family("a two-row shape with a single column leg", s));
    }
    let leg: Vec<u32> = (3..=sh.outer.len()).map(|i| s.row(i)[0]).collect();
    let first_case = leg.len() as u32 == k;
    if !first_case && leg.len() as u32 + 1 != k {
        return Err(not_in_family(&format!("a χ image with {k} repeated values"), s));
    }
    let mut bottom: Vec<u32> = s.row(2).iter().chain(&leg).copied().collect();
    bottom.sort_unstable();
    let mut top: Vec<u32> = s.row(1).to_vec();
    for w in bottom.windows(2) {
        if leg.contains(&w[1]) {
            top.push(w[0]);
        }
    }
    if !first_case {
        let last = *bottom.last().ok_or_else(|| not_in_family("a tableau with a second row", s))?;
        top.push(last);
    }
    top.sort_unstable();
    top.dedup();
    let t = Tableau::from_rows(&[sh.inner.part(1)], vec![top, bottom])?;
    if !t.is_inc() || t.repeats() != k {
        return Err(not_in_family(&format!("a χ image with {k} repeated values"), s));
    }
    Ok(t)
}

/// Drops the duplicate in the leftmost column whose two entries agree.
pub fn rho(t: &Tableau) -> Result<Tableau> {
    let (r, _, m) = two_row_params(t).ok_or_else(|| not_in_family("a two-row tableau", t))?;
    if r != 0 || !t.is_rinc() {
        return Err(not_in_family("a row-increasing tableau of straight shape (n,m)", t));
    }
    if t.is_inc() {
        return Ok(t.clone());
    }
    let i = (1..=m as usize)
        .find(|&i| t.get(1, i) == t.get(2, i))
        .ok_or_else(|| not_in_family("row-increasing with an equal column", t))?;
    let mut bottom = t.row(2).to_vec();
    bottom.remove(i - 1);
    Tableau::from_rows(&[], vec![t.row(1).to_vec(), bottom])
}

/// Inverse of [`rho`] onto `RInc_k((n, m))`; `m` is the target second-row length.
pub fn rho_inv(s: &Tableau, m: u32) -> Result<Tableau> {
    let (r, _, len2) = two_row_params(s).ok_or_else(|| not_in_family("a two-row tableau", s))?;
    if r != 0 || !s.is_inc() {
        return Err(not_in_family("an increasing tableau of straight shape", s));
    }
    if len2 == m {
        return Ok(s.clone());
    }
    if len2 + 1 != m {
        return Err(not_in_family(&format!("increasing with second row of length {m} or {}", m.wrapping_sub(1)), s));
    }
    let top = s.row(1);
    let bottom = s.row(2);
    // T(2,0) = 0
    let at = |i: usize| if i == 0 { 0 } else { bottom[i - 1] };
    let i = (0..=bottom.len())
        .rev()
        .find(|&i| i < top.len() && at(i) + 1 == top[i])
        .ok_or_else(|| not_in_family("in the image of ρ", s))?;
    let mut new_bottom = bottom.to_vec();
    new_bottom.insert(i, top[i]);
    let t = Tableau::from_rows(&[], vec![top.to_vec(), new_bottom])?;
    if !t.is_rinc() || t.is_inc() {
        return Err(not_in_family("in the image of ρ", s));
    }
    Ok(t)
}

/// `Inc_k((n,m))` and `Inc_{k−1}((n,m−1))` as `(shape, k)` pairs.
pub fn rho_codomain(n: u32, m: u32, k: u32) -> Vec<(SkewShape, u32)> {
    let mut out = Vec::new();
    if let Some(o) = Partition::from_lengths(&[i64::from(n), i64::from(m)]) {
        out.push((SkewShape::straight(o), k));
    }
    if m >= 1 && k >= 1 {
        if let Some(o) = Partition::from_lengths(&[i64::from(n), i64::from(m) - 1]) {
            out.push((SkewShape::straight(o), k - 1));
        }
    }
    out
}

fn hole_err((row, col): (usize, usize), reason: &str) -> Error {
    Error::InvalidHole { row, col, reason: reason.into() }
}

/// Forward slide into the inner corner `hole`: the smaller of the right and
/// lower neighbours moves in until the hole leaves the shape.
pub fn jdt_in(t: &Tableau, hole: (usize, usize)) -> Result<Tableau> {
    if !t.is_syt() {
        return Err(not_in_family("a standard skew tableau", t));
    }
    let (i, j) = hole;
    let inner = &t.shape().inner;
    if i == 0 || j == 0 || inner.part(i) as usize != j || inner.part(i + 1) as usize >= j {
        return Err(hole_err(hole, "not an inner corner"));
    }
    let mut grid = t.to_grid();
    let (mut r, mut c) = (i - 1, j - 1);
    loop {
        let right = grid[r].get(c + 1).copied().flatten();
        let below = grid.get(r + 1).and_then(|row| row.get(c)).copied().flatten();
        let (nr, nc) = match (right, below) {
            (Some(a), Some(b)) if b < a => (r + 1, c),
            (Some(_), _) => (r, c + 1),
            (None, Some(_)) => (r + 1, c),
            (None, None) => break,
        };
        grid[r][c] = grid[nr][nc].take();
        (r, c) = (nr, nc);
    }
    grid[r].pop();
    while grid.last().is_some_and(Vec::is_empty) {
        grid.pop();
    }
    Tableau::from_grid(&grid)
}

/// Backward slide from the outer addable cell `hole`: the larger of the left
/// and upper neighbours moves in until the hole joins the inner shape.
pub fn jdt_out(t: &Tableau, hole: (usize, usize)) -> Result<Tableau> {
    if !t.is_syt() {
        return Err(not_in_family("a standard skew tableau", t));
    }
    let (i, j) = hole;
    let outer = &t.shape().outer;
    let addable = i >= 1 && j >= 1 && outer.part(i) as usize + 1 == j && (i == 1 || outer.part(i - 1) as usize >= j);
    if !addable {
        return Err(hole_err(hole, "not an addable outer cell"));
    }
    let mut grid = t.to_grid();
    if grid.len() < i {
        grid.push(Vec::new());
    }
    grid[i - 1].push(None);
    let (mut r, mut c) = (i - 1, j - 1);
    loop {
        let left = if c > 0 { grid[r][c - 1] } else { None };
        let above = if r > 0 { grid[r - 1].get(c).copied().flatten() } else { None };
        let (nr, nc) = match (left, above) {
            (Some(a), Some(b)) if b > a => (r - 1, c),
            (Some(_), _) => (r, c - 1),
            (None, Some(_)) => (r - 1, c),
            (None, None) => break,
        };
        grid[r][c] = grid[nr][nc].take();
        (r, c) = (nr, nc);
    }
    Tableau::from_grid(&grid)
}

/// `(n−k+1, m−k+1, 1^k)/(1,1)`.
pub fn g_domain(n: u32, m: u32, k: u32) -> Option<SkewShape> {
    let (n, m, k) = (i64::from(n), i64::from(m), i64::from(k));
    let outer = Partition::hook(n - k + 1, m - k + 1, k)?;
    SkewShape::new(outer, Partition::from_lengths(&[1, 1])?).ok()
}

type GCase = (Partition, [(usize, usize); 2], bool);

/// The straight target shapes of `g` that exist, each with the two addable
/// cells that `g⁻¹` slides out of and whether the first row has length `n−k`.
fn g_cases(n: u32, m: u32, k: u32) -> Vec<GCase> {
    let (n, m, k) = (i64::from(n), i64::from(m), i64::from(k));
    let cell = |i: i64, j: i64| (i.max(0) as usize, j.max(0) as usize);
    let row1_end = cell(1, n - k + 1);
    let row2_end = cell(2, m - k + 1);
    let leg_end = cell(k + 2, 1);
    let leg_second = cell(k + 1, 1);
    [
        (Partition::hook(n - k, m - k, k), [row1_end, row2_end], true),
        (Partition::hook(n - k, m - k + 1, k - 1), [row1_end, leg_end], true),
        (Partition::hook(n - k + 1, m - k, k - 1), [row2_end, leg_end], false),
        (Partition::hook(n - k + 1, m - k + 1, k - 2), [leg_second, leg_end], false),
    ]
    .into_iter()
    .filter_map(|(p, cells, short)| p.map(|p| (p, cells, short)))
    .collect()
}

/// The straight shapes `g` can land in.
pub fn g_codomain(n: u32, m: u32, k: u32) -> Vec<Partition> {
    g_cases(n, m, k).into_iter().map(|(p, _, _)| p).collect()
}

/// Slides into `b = (2,1)` and then into `a = (1,1)`.
pub fn g(t: &Tableau) -> Result<Tableau> {
    let sh = t.shape();
    let two_by_one = Partition::from_lengths(&[1, 1]).unwrap();
    if sh.inner != two_by_one || sh.outer.len() < 2 || sh.outer.parts().iter().skip(2).any(|&p| p != 1) {
        return Err(not_in_family("of shape (a, b, 1^k)/(1,1)", t));
    }
    jdt_in(&jdt_in(t, (2, 1))?, (1, 1))
}

/// Inverse of [`g`] onto `SYT((n−k+1, m−k+1, 1^k)/(1,1))`.
pub fn g_inv(s: &Tableau, n: u32, m: u32, k: u32) -> Result<Tableau> {
    if !s.shape().inner.is_empty() {
        return Err(not_in_family("of straight shape", s));
    }
    let (_, [first, second], _) = g_cases(n, m, k)
        .into_iter()
        .find(|(p, _, _)| *p == s.shape().outer)
        .ok_or_else(|| not_in_family(&format!("in the image of g for (n,m,k)=({n},{m},{k})"), s))?;
    let t = jdt_out(&jdt_out(s, first)?, second)?;
    if Some(t.shape()) != g_domain(n, m, k).as_ref() {
        return Err(not_in_family("in the image of g", s));
    }
    Ok(t)
}

/// `g⁻¹ ∘ χ ∘ ρ`: `RInc_k((n,m)) → SYT((n−k+1, m−k+1, 1^k)/(1,1))`.
pub fn rinc_to_syt(t: &Tableau) -> Result<Tableau> {
    let (r, n, m) = two_row_params(t).ok_or_else(|| not_in_family("a two-row tableau", t))?;
    if r != 0 || !t.is_rinc() {
        return Err(not_in_family("a row-increasing tableau of straight shape (n,m)", t));
    }
    let k = t.repeats();
    g_inv(&chi(&rho(t)?)?, n, m, k)
}

/// Inverse of [`rinc_to_syt`] onto `RInc_k((n,m))`.
pub fn syt_to_rinc(s: &Tableau, n: u32, m: u32, k: u32) -> Result<Tableau> {
    let straight = g(s)?;
    // the first two target shapes come from Inc_k((n,m)), the others from Inc_{k-1}((n,m-1))
    let (_, _, short) = g_cases(n, m, k)
        .into_iter()
        .find(|(p, _, _)| *p == straight.shape().outer)
        .ok_or_else(|| not_in_family("in the image of g", s))?;
    let inc = if short { chi_inv(&straight, k)? } else { chi_inv(&straight, k - 1)? };
    rho_inv(&inc, m)
}
