//! Closed forms for the major-index generating functions.
//!
//! Every rational expression is evaluated by clearing denominators and doing
//! a single exact division at the end, so a nonzero remainder surfaces as
//! [`Error::NonExactDivision`] instead of being truncated.

use std::fmt;
use std::str::FromStr;

use crate::bijections::chi_codomain;
use crate::error::{Error, Result};
use crate::paths::{schroeder_feasible, StepOrder};
use crate::qseries::{qbinom, qfact, qint, LaurentPoly};
use crate::tableaux::{content, generate_reverse_tableaux, Partition, SkewShape};

/// Whether `E` is above or below `N` in the step order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrderCase {
    EgtN,
    EltN,
}

impl OrderCase {
    pub fn of(order: StepOrder) -> OrderCase {
        if order.e_above_n() {
            OrderCase::EgtN
        } else {
            OrderCase::EltN
        }
    }

    /// `E>D>N` or `E<D<N`.
    pub fn default_order(self) -> StepOrder {
        match self {
            OrderCase::EgtN => StepOrder::E_D_N,
            OrderCase::EltN => StepOrder::N_D_E,
        }
    }

    /// The three step orders falling in this case.
    pub fn orders(self) -> Vec<StepOrder> {
        StepOrder::all().into_iter().filter(|o| OrderCase::of(*o) == self).collect()
    }
}

impl fmt::Display for OrderCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderCase::EgtN => "E>N",
            OrderCase::EltN => "E<N",
        })
    }
}

impl FromStr for OrderCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "E>N" | "N<E" | "egtn" => Ok(OrderCase::EgtN),
            "E<N" | "N>E" | "eltn" => Ok(OrderCase::EltN),
            other => Err(Error::Parse(format!("unknown order case {other:?}; expected E>N or E<N"))),
        }
    }
}

/// A closed-form value together with whether the family it counts is empty.
/// An empty family always carries the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaResult {
    pub poly: LaurentPoly,
    pub family_empty: bool,
}

impl FormulaResult {
    fn new(family_empty: bool, eval: impl FnOnce() -> Result<LaurentPoly>) -> Result<FormulaResult> {
        if family_empty {
            return Ok(FormulaResult { poly: LaurentPoly::zero(), family_empty });
        }
        Ok(FormulaResult { poly: eval()?, family_empty })
    }
}

fn i(x: u32) -> i64 {
    i64::from(x)
}

fn q(e: i64) -> LaurentPoly {
    LaurentPoly::q_pow(e)
}

/// The Schröder expression evaluated as written, empty family or not.
pub fn schroeder_maj_expr(r: u32, n: u32, m: u32, k: u32, case: OrderCase) -> LaurentPoly {
    let (r, n, m, k) = (i(r), i(n), i(m), i(k));
    let second = qbinom(n + m - r - 2 * k, n - k + 1);
    let second = match case {
        OrderCase::EgtN => second,
        OrderCase::EltN => second.shift(r + 1),
    };
    qbinom(n + m - r - k, k) * (qbinom(n + m - r - 2 * k, n - r - k) - second)
}

/// `Σ_{P ∈ Sch_k(r;n,m)} q^maj(P)`.
pub fn schroeder_maj_closed(r: u32, n: u32, m: u32, k: u32, case: OrderCase) -> FormulaResult {
    let empty = !schroeder_feasible(i(r), i(n), i(m), i(k));
    FormulaResult::new(empty, || Ok(schroeder_maj_expr(r, n, m, k, case))).expect("infallible")
}

/// `Σ_{P ∈ Cat(r;n,m)} q^maj(P)`.
pub fn catalan_maj_closed(r: u32, n: u32, m: u32, case: OrderCase) -> FormulaResult {
    schroeder_maj_closed(r, n, m, 0, case)
}

fn rinc_closed(r: u32, n: u32, m: u32, k: u32, case: OrderCase) -> FormulaResult {
    let mut res = schroeder_maj_closed(r, n, m, k, case);
    let kk = i(k);
    res.poly = res.poly.shift(kk * (kk - 1) / 2);
    res
}

/// `Σ_{T ∈ RInc_k((n,m)/(r))} q^maj(T)`.
pub fn rinc_maj_closed(r: u32, n: u32, m: u32, k: u32) -> FormulaResult {
    rinc_closed(r, n, m, k, OrderCase::EgtN)
}

/// `Σ_{T ∈ RInc_k((n,m)/(r))} q^amaj(T)`.
pub fn rinc_amaj_closed(r: u32, n: u32, m: u32, k: u32) -> FormulaResult {
    rinc_closed(r, n, m, k, OrderCase::EltN)
}

fn two_row_shape(r: u32, n: u32, m: u32) -> Option<SkewShape> {
    let outer = Partition::from_lengths(&[i(n), i(m)])?;
    SkewShape::new(outer, Partition::from_lengths(&[i(r)])?).ok()
}

/// True when `Inc_k((n,m)/(r))` has no elements.
pub fn inc_family_empty(r: u32, n: u32, m: u32, k: u32) -> bool {
    two_row_shape(r, n, m).is_none() || chi_codomain(r, n, m, k).is_empty()
}

/// The increasing-tableau expression evaluated as written.
///
/// `[m−r]` is the signed q-integer, so `r > m` gives a negative bracket.
pub fn inc_maj_expr(r: u32, n: u32, m: u32, k: u32) -> Result<LaurentPoly> {
    let (r, n, m, k) = (i(r), i(n), i(m), i(k));
    let top = n + m - 2 * k - r;
    let denom = qint(n) * qint(n + 1);
    let inner = qbinom(top, m - k) * &denom - (q(n) * qint(k) + qint(n) * qint(m - r)) * qbinom(top, n - k);
    let num = qbinom(n + m - k - r, k) * inner;
    Ok(num.exact_div(&denom)?.shift(k * (k - 1) / 2))
}

/// `Σ_{T ∈ Inc_k((n,m)/(r))} q^maj(T)`.
pub fn inc_maj_closed(r: u32, n: u32, m: u32, k: u32) -> Result<FormulaResult> {
    FormulaResult::new(inc_family_empty(r, n, m, k), || {
        if n == 0 {
            // only the empty tableau
            return Ok(LaurentPoly::one());
        }
        inc_maj_expr(r, n, m, k)
    })
}

/// q-hook-length formula `q^b(λ) [|λ|]! / ∏ [h(u)]`.
pub fn qhook_syt_gf(lambda: &Partition) -> Result<FormulaResult> {
    FormulaResult::new(false, || {
        let num = qfact(lambda.size()).shift(i(lambda.b()));
        num.exact_div(&hook_product(lambda))
    })
}

fn hook_product(lambda: &Partition) -> LaurentPoly {
    lambda.cells().into_iter().map(|c| qint(i(lambda.hook_length(c).expect("cell of lambda")))).product()
}

/// `[x]` with negative `x` read as zero.
fn qint_clamped(x: i64) -> LaurentPoly {
    qint(x.max(0))
}

/// Skew SYT maj generating function via a sum over reverse tableaux
/// `RT(μ, n)`; needs `n ≥ l(λ)`.
pub fn chen_stanley_skew_gf(lambda: &Partition, mu: &Partition, n: u32) -> Result<FormulaResult> {
    if !lambda.contains_partition(mu) {
        return Err(Error::InvalidShape(format!("{mu} is not contained in {lambda}")));
    }
    if (n as usize) < lambda.len() {
        return Err(Error::InvalidShape(format!("n = {n} is below the length of {lambda}")));
    }
    FormulaResult::new(false, || {
        let sum: LaurentPoly = generate_reverse_tableaux(mu, n)
            .iter()
            .map(|s| {
                s.entries()
                    .map(|(u, v)| qint_clamped(i(lambda.part(v as usize)) - content(u)).shift(1 - i(v)))
                    .product::<LaurentPoly>()
            })
            .sum();
        let num = qfact(lambda.size() - mu.size()).shift(i(lambda.b())) * sum;
        num.exact_div(&hook_product(lambda))
    })
}

/// True when `(n, m, 1^k)/(r)` is not a valid skew shape.
pub fn hook_shape_empty(r: u32, n: u32, m: u32, k: u32) -> bool {
    match Partition::hook(i(n), i(m), i(k)) {
        Some(p) => p.part(1) < r,
        None => true,
    }
}

/// `Σ_{T ∈ SYT((n,m,1^k)/(r))} q^maj(T)`.
pub fn hook_shape_skew_gf(r: u32, n: u32, m: u32, k: u32) -> Result<FormulaResult> {
    FormulaResult::new(hook_shape_empty(r, n, m, k), || {
        let (r, n, m, k) = (i(r), i(n), i(m), i(k));
        let base = n + m - r;
        if k == 0 {
            return Ok(qbinom(base, m) - qbinom(base, n + 1));
        }
        let num = qint(m) * qint(n + k + 1) * qbinom(base, m) - qint(n + 1) * qint(m + k) * qbinom(base, n + 1);
        let num = qbinom(base + k, k) * num;
        Ok(num.exact_div(&(qint(m + k) * qint(n + k + 1)))?.shift(k * (k + 1) / 2))
    })
}

/// `Σ_{T ∈ SYT((n,m,1^k))} q^maj(T)` in product form.
///
/// `[m+k−1 choose k]` is taken as 1 when `k = 0`, including at `m = 0`.
pub fn syt_hook_gf(n: u32, m: u32, k: u32) -> Result<FormulaResult> {
    FormulaResult::new(hook_shape_empty(0, n, m, k), || {
        let (n, m, k) = (i(n), i(m), i(k));
        let leg = if k == 0 { LaurentPoly::one() } else { qbinom(m + k - 1, k) };
        let num = qint(n - m + 1) * leg * qbinom(n + m + k, n);
        Ok(num.exact_div(&qint(n + k + 1))?.shift(m + k * (k + 3) / 2))
    })
}

/// `Σ_{T ∈ SYT((n,m))} q^maj(T)`.
pub fn syt_two_row_gf(n: u32, m: u32) -> Result<FormulaResult> {
    FormulaResult::new(m > n, || {
        let (n, m) = (i(n), i(m));
        let num = qint(n - m + 1) * qbinom(n + m, n);
        Ok(num.exact_div(&qint(n + 1))?.shift(m))
    })
}

/// `Σ_{T ∈ RInc_k((n,m))} q^maj(T)` in product form.
pub fn rinc_rect_closed(n: u32, m: u32, k: u32) -> Result<FormulaResult> {
    FormulaResult::new(!schroeder_feasible(0, i(n), i(m), i(k)), || {
        let (n, m, k) = (i(n), i(m), i(k));
        let num = qint(n - m + 1) * qbinom(n + m - k, k) * qbinom(n + m - 2 * k, m - k);
        Ok(num.exact_div(&qint(n - k + 1))?.shift(m + k * (k - 3) / 2))
    })
}
