//! Generalized Schröder and Catalan paths, word statistics under a chosen
//! order on the steps, the diagonal-reverse labelling, standardization and
//! shuffles.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qseries::LaurentPoly;

/// East `(1,0)`, diagonal `(1,1)` or north `(0,1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    E,
    D,
    N,
}

impl Step {
    pub const ALL: [Step; 3] = [Step::E, Step::D, Step::N];

    pub fn as_char(self) -> char {
        match self {
            Step::E => 'E',
            Step::D => 'D',
            Step::N => 'N',
        }
    }

    pub fn from_char(c: char) -> Option<Step> {
        match c {
            'E' => Some(Step::E),
            'D' => Some(Step::D),
            'N' => Some(Step::N),
            _ => None,
        }
    }
}

/// A total order on `{E, D, N}`, stored from smallest to largest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StepOrder([Step; 3]);

impl StepOrder {
    /// `E > D > N`.
    pub const E_D_N: StepOrder = StepOrder([Step::N, Step::D, Step::E]);
    /// `E < D < N`.
    pub const N_D_E: StepOrder = StepOrder([Step::E, Step::D, Step::N]);

    /// Builds an order from the steps listed smallest first.
    pub fn ascending(steps: [Step; 3]) -> Result<StepOrder> {
        let distinct: BTreeSet<_> = steps.iter().collect();
        if distinct.len() != 3 {
            return Err(Error::Parse(format!("step order needs E, D and N once each: {steps:?}")));
        }
        Ok(StepOrder(steps))
    }

    /// All six orders, in a fixed order.
    pub fn all() -> Vec<StepOrder> {
        let mut out = Vec::with_capacity(6);
        for a in Step::ALL {
            for b in Step::ALL {
                for c in Step::ALL {
                    if let Ok(o) = StepOrder::ascending([a, b, c]) {
                        out.push(o);
                    }
                }
            }
        }
        out
    }

    pub fn rank(&self, s: Step) -> u8 {
        self.0.iter().position(|&t| t == s).unwrap() as u8
    }

    pub fn greater(&self, a: Step, b: Step) -> bool {
        self.rank(a) > self.rank(b)
    }

    pub fn e_above_n(&self) -> bool {
        self.greater(Step::E, Step::N)
    }

    pub fn ascending_steps(&self) -> [Step; 3] {
        self.0
    }
}

/// Rendered largest first, e.g. `E>D>N`.
impl fmt::Display for StepOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "{}>{}>{}", c.as_char(), b.as_char(), a.as_char())
    }
}

/// Accepts `X>Y>Z` or `X<Y<Z`.
impl FromStr for StepOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("step order {s:?}: expected e.g. \"E>D>N\" or \"E<D<N\""));
        let (sep, descending) = if s.contains('>') { ('>', true) } else { ('<', false) };
        let steps: Vec<Step> = s
            .split(sep)
            .map(|t| {
                let mut cs = t.trim().chars();
                match (cs.next(), cs.next()) {
                    (Some(c), None) => Step::from_char(c),
                    _ => None,
                }
            })
            .collect::<Option<_>>()
            .ok_or_else(bad)?;
        let mut arr: [Step; 3] = steps.try_into().map_err(|_| bad())?;
        if descending {
            arr.reverse();
        }
        StepOrder::ascending(arr).map_err(|_| bad())
    }
}

/// A lattice path starting at `(start_x, 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    pub start_x: u32,
    pub steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(start_x: u32, steps: Vec<Step>) -> Self {
        LatticePath { start_x, steps }
    }

    /// Parses a step string such as `"NDDE"`.
    pub fn parse(start_x: u32, word: &str) -> Result<Self> {
        let steps = word
            .chars()
            .map(|c| Step::from_char(c).ok_or_else(|| Error::Parse(format!("bad step {c:?} in {word:?}"))))
            .collect::<Result<_>>()?;
        Ok(LatticePath { start_x, steps })
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn count(&self, s: Step) -> usize {
        self.steps.iter().filter(|&&t| t == s).count()
    }

    pub fn end(&self) -> (i64, i64) {
        let e = self.count(Step::E) as i64;
        let d = self.count(Step::D) as i64;
        let n = self.count(Step::N) as i64;
        (i64::from(self.start_x) + e + d, n + d)
    }

    /// Never rises above `y = x`.
    pub fn is_valid(&self) -> bool {
        let (mut x, mut y) = (i64::from(self.start_x), 0i64);
        for s in &self.steps {
            match s {
                Step::E => x += 1,
                Step::D => {
                    x += 1;
                    y += 1
                }
                Step::N => y += 1,
            }
            if y > x {
                return false;
            }
        }
        true
    }

    pub fn word(&self) -> String {
        self.steps.iter().map(|s| s.as_char()).collect()
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

/// `Sch_k(r; n, m)` is nonempty exactly when these inequalities hold.
pub fn schroeder_feasible(r: i64, n: i64, m: i64, k: i64) -> bool {
    r >= 0 && n >= 0 && m >= 0 && k >= 0 && m <= n && k <= m && k <= n - r && r <= n
}

/// All paths from `(r,0)` to `(n,m)` with `k` diagonal steps staying weakly
/// below `y = x`, in lexicographic order of their words under `E<D<N`.
pub fn enumerate_schroeder(r: u32, n: u32, m: u32, k: u32) -> Vec<LatticePath> {
    let mut out = Vec::new();
    let (r, n, m, k) = (i64::from(r), i64::from(n), i64::from(m), i64::from(k));
    if !schroeder_feasible(r, n, m, k) {
        return out;
    }
    let mut counts = [n - r - k, k, m - k];
    let mut buf = Vec::with_capacity((n - r - k + m) as usize);
    fill_paths(r, 0, &mut counts, &mut buf, &mut |steps| out.push(LatticePath::new(r as u32, steps.to_vec())));
    out
}

fn fill_paths(x: i64, y: i64, left: &mut [i64; 3], buf: &mut Vec<Step>, emit: &mut impl FnMut(&[Step])) {
    if left.iter().all(|&c| c == 0) {
        emit(buf);
        return;
    }
    for (i, step) in Step::ALL.into_iter().enumerate() {
        if left[i] == 0 {
            continue;
        }
        let (nx, ny) = match step {
            Step::E => (x + 1, y),
            Step::D => (x + 1, y + 1),
            Step::N => (x, y + 1),
        };
        if ny > nx {
            continue;
        }
        left[i] -= 1;
        buf.push(step);
        fill_paths(nx, ny, left, buf, emit);
        buf.pop();
        left[i] += 1;
    }
}

/// `Cat(r; n, m) = Sch_0(r; n, m)`.
pub fn enumerate_catalan(r: u32, n: u32, m: u32) -> Vec<LatticePath> {
    enumerate_schroeder(r, n, m, 0)
}

/// 1-based positions `i` with `w[i] > w[i+1]`.
pub fn descent_set<T: Ord>(w: &[T]) -> Vec<usize> {
    w.windows(2).enumerate().filter(|(_, p)| p[0] > p[1]).map(|(i, _)| i + 1).collect()
}

pub fn maj<T: Ord>(w: &[T]) -> usize {
    descent_set(w).into_iter().sum()
}

/// Major index of the step word compared under `order`.
pub fn path_maj(p: &LatticePath, order: StepOrder) -> usize {
    let ranks: Vec<u8> = p.steps.iter().map(|&s| order.rank(s)).collect();
    maj(&ranks)
}

/// Labels the steps `1..=len`: smaller step types get smaller labels; within
/// `E` and within `N` labels increase left to right, within `D` they
/// decrease.
pub fn diagonal_reverse_labelling(p: &LatticePath, order: StepOrder) -> Vec<u32> {
    let mut idx: Vec<usize> = (0..p.len()).collect();
    idx.sort_by_key(|&i| {
        let s = p.steps[i];
        let within = if s == Step::D { -(i as i64) } else { i as i64 };
        (order.rank(s), within)
    });
    let mut labels = vec![0u32; p.len()];
    for (label, i) in idx.into_iter().enumerate() {
        labels[i] = label as u32 + 1;
    }
    labels
}

/// Replaces letters by `1..=len`, preserving relative order and breaking ties
/// left to right.
pub fn standardize<T: Ord>(w: &[T]) -> Vec<u32> {
    let mut idx: Vec<usize> = (0..w.len()).collect();
    idx.sort_by(|&a, &b| w[a].cmp(&w[b]).then(a.cmp(&b)));
    let mut out = vec![0u32; w.len()];
    for (label, i) in idx.into_iter().enumerate() {
        out[i] = label as u32 + 1;
    }
    out
}

/// Every interleaving of `words` keeping each as a subword, as a sorted set.
///
/// The words must use pairwise disjoint letters.
pub fn shuffles<T: Ord + Clone + Hash + fmt::Debug>(words: &[Vec<T>]) -> Result<Vec<Vec<T>>> {
    let mut owner: HashMap<&T, usize> = HashMap::new();
    let mut shared = BTreeSet::new();
    for (wi, w) in words.iter().enumerate() {
        for letter in w {
            if let Some(&prev) = owner.get(letter) {
                if prev != wi {
                    shared.insert(format!("{letter:?}"));
                }
            } else {
                owner.insert(letter, wi);
            }
        }
    }
    if !shared.is_empty() {
        return Err(Error::NotComplementary(shared.into_iter().collect::<Vec<_>>().join(", ")));
    }
    let total: usize = words.iter().map(Vec::len).sum();
    let mut out = BTreeSet::new();
    let mut pos = vec![0usize; words.len()];
    let mut buf = Vec::with_capacity(total);
    interleave(words, &mut pos, &mut buf, total, &mut out);
    Ok(out.into_iter().collect())
}

fn interleave<T: Ord + Clone>(
    words: &[Vec<T>],
    pos: &mut [usize],
    buf: &mut Vec<T>,
    total: usize,
    out: &mut BTreeSet<Vec<T>>,
) {
    if buf.len() == total {
        out.insert(buf.clone());
        return;
    }
    for wi in 0..words.len() {
        if pos[wi] < words[wi].len() {
            buf.push(words[wi][pos[wi]].clone());
            pos[wi] += 1;
            interleave(words, pos, buf, total, out);
            pos[wi] -= 1;
            buf.pop();
        }
    }
}

/// `Σ_{P ∈ Sch_k(r;n,m)} q^maj(P)` by enumeration.
pub fn maj_gf_schroeder_enum(r: u32, n: u32, m: u32, k: u32, order: StepOrder) -> LaurentPoly {
    enumerate_schroeder(r, n, m, k).iter().map(|p| LaurentPoly::q_pow(path_maj(p, order) as i64)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(ps: &[LatticePath]) -> Vec<String> {
        ps.iter().map(LatticePath::word).collect()
    }

    /// Every word over {E,D,N} with the right counts, filtered by validity.
    fn brute_force(r: u32, n: u32, m: u32, k: u32) -> Vec<String> {
        if n < r + k || m < k {
            return vec![];
        }
        let (e, d, nn) = ((n - r - k) as usize, k as usize, (m - k) as usize);
        let len = e + d + nn;
        let mut out = Vec::new();
        let mut code = vec![0usize; len];
        loop {
            let steps: Vec<Step> = code.iter().map(|&c| Step::ALL[c]).collect();
            let p = LatticePath::new(r, steps);
            if p.count(Step::E) == e && p.count(Step::D) == d && p.is_valid() {
                out.push(p.word());
            }
            let mut i = len;
            loop {
                if i == 0 {
                    // Step's derived order is E<D<N
                    out.sort_by_key(|w| w.chars().map(|c| Step::from_char(c).unwrap()).collect::<Vec<_>>());
                    return out;
                }
                i -= 1;
                code[i] += 1;
                if code[i] < 3 {
                    break;
                }
                code[i] = 0;
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(words(&enumerate_schroeder(0, 2, 2, 1)), ["EDN", "END", "DEN"]);
        assert_eq!(words(&enumerate_catalan(0, 1, 1)), ["EN"]);
        assert_eq!(words(&enumerate_catalan(0, 2, 2)), ["EENN", "ENEN"]);
        assert!(enumerate_schroeder(0, 2, 3, 0).is_empty());
    }

    #[test]
    fn enumeration_matches_brute_force_and_feasibility() {
        for n in 0..=5 {
            for m in 0..=5 {
                for r in 0..=n {
                    for k in 0..=m {
                        let got = words(&enumerate_schroeder(r, n, m, k));
                        assert_eq!(got, brute_force(r, n, m, k), "r={r} n={n} m={m} k={k}");
                        let feasible = schroeder_feasible(r.into(), n.into(), m.into(), k.into());
                        assert_eq!(feasible, !got.is_empty(), "r={r} n={n} m={m} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn word_descents() {
        let eenn = LatticePath::parse(0, "EENN").unwrap();
        let ranks: Vec<u8> = eenn.steps.iter().map(|&s| StepOrder::E_D_N.rank(s)).collect();
        assert_eq!(descent_set(&ranks), vec![2]);
        assert_eq!(maj(&ranks), 2);
        let w = [1, 3, 6, 4, 2, 8, 5, 7];
        assert_eq!(descent_set(&w), vec![3, 4, 6]);
        assert_eq!(maj(&w), 13);
        assert!(descent_set(&[1, 2, 5, 9]).is_empty());
    }

    #[test]
    fn path_maj_examples() {
        let end = LatticePath::parse(0, "END").unwrap();
        assert_eq!(path_maj(&end, StepOrder::E_D_N), 1);
        let den = LatticePath::parse(0, "DEN").unwrap();
        assert_eq!(path_maj(&den, StepOrder::N_D_E), 1);
        let ddd = LatticePath::parse(0, "DDDD").unwrap();
        for o in StepOrder::all() {
            assert_eq!(path_maj(&ddd, o), 0);
        }
    }

    #[test]
    fn labelling_examples() {
        let p = LatticePath::parse(1, "NDDE").unwrap();
        assert_eq!(diagonal_reverse_labelling(&p, StepOrder::E_D_N), [1, 3, 2, 4]);
        assert_eq!(diagonal_reverse_labelling(&p, StepOrder::N_D_E), [4, 3, 2, 1]);
        let single = LatticePath::parse(0, "E").unwrap();
        assert_eq!(diagonal_reverse_labelling(&single, StepOrder::E_D_N), [1]);
        // equal E/N steps never form descents, equal D steps always do
        let p = LatticePath::parse(0, "EEDDNN").unwrap();
        let w = diagonal_reverse_labelling(&p, StepOrder::E_D_N);
        assert_eq!(descent_set(&w), vec![2, 3, 4]);
    }

    #[test]
    fn standardize_examples() {
        let s = standardize(&[1, 2, 3, 2, 1, 4, 2, 3]);
        assert_eq!(s, [1, 3, 6, 4, 2, 8, 5, 7]);
        assert_eq!(descent_set(&s), vec![3, 4, 6]);
        assert_eq!(standardize(&[10, 30, 20]), [1, 3, 2]);
        let ones = standardize(&[1, 1, 1, 1]);
        assert_eq!(ones, [1, 2, 3, 4]);
        assert!(descent_set(&ones).is_empty());
    }

    #[test]
    fn standardize_preserves_descents_exhaustively() {
        // all words of length <= 8 over a 3-letter alphabet
        for len in 0..=8u32 {
            for code in 0..3u32.pow(len) {
                let w: Vec<u32> = (0..len).map(|i| (code / 3u32.pow(i)) % 3).collect();
                assert_eq!(descent_set(&standardize(&w)), descent_set(&w), "{w:?}");
            }
        }
    }

    #[test]
    fn shuffle_examples() {
        let en = vec![Step::E, Step::N];
        let d = vec![Step::D];
        let sh = shuffles(&[en.clone(), d.clone()]).unwrap();
        let rendered: Vec<String> = sh.iter().map(|w| w.iter().map(|s| s.as_char()).collect()).collect();
        assert_eq!(rendered, ["EDN", "END", "DEN"]);
        assert_eq!(shuffles(std::slice::from_ref(&en)).unwrap(), vec![en.clone()]);

        let gf: LaurentPoly = sh
            .iter()
            .map(|w| LaurentPoly::q_pow(path_maj(&LatticePath::new(0, w.clone()), StepOrder::E_D_N) as i64))
            .sum();
        assert_eq!(gf.to_string(), "q + q^2 + q^3");
        let rhs = crate::qseries::qbinom(3, 1)
            * LaurentPoly::q_pow(path_maj(&LatticePath::new(0, en), StepOrder::E_D_N) as i64);
        assert_eq!(gf, rhs);

        assert!(matches!(shuffles(&[vec![1, 2], vec![2, 3]]), Err(Error::NotComplementary(_))));
    }

    #[test]
    fn schroeder_gf_examples() {
        assert_eq!(maj_gf_schroeder_enum(0, 2, 2, 0, StepOrder::E_D_N).to_string(), "q^2 + q^4");
        assert_eq!(maj_gf_schroeder_enum(0, 2, 2, 1, StepOrder::E_D_N).to_string(), "q + q^2 + q^3");
        assert_eq!(maj_gf_schroeder_enum(0, 2, 2, 1, StepOrder::N_D_E).to_string(), "1 + q + q^2");
        assert!(maj_gf_schroeder_enum(3, 2, 2, 0, StepOrder::N_D_E).is_zero());
    }

    #[test]
    fn order_parsing() {
        let o: StepOrder = "E>D>N".parse().unwrap();
        assert_eq!(o, StepOrder::E_D_N);
        assert_eq!("N<D<E".parse::<StepOrder>().unwrap(), StepOrder::E_D_N);
        assert_eq!("E<D<N".parse::<StepOrder>().unwrap().to_string(), "N>D>E");
        assert!("E>E>N".parse::<StepOrder>().is_err());
        assert!("E>D".parse::<StepOrder>().is_err());
        assert_eq!(StepOrder::all().len(), 6);
    }

    #[test]
    fn diagonal_insertion_preserves_validity() {
        for n in 0..=6 {
            for m in 0..=n {
                for r in 0..=n {
                    for p in enumerate_schroeder(r, n, m, 0) {
                        for pos in 0..=p.len() {
                            let mut steps = p.steps.clone();
                            steps.insert(pos, Step::D);
                            assert!(LatticePath::new(r, steps).is_valid());
                        }
                    }
                }
            }
        }
        for n in 0..=6 {
            for m in 0..=n {
                for r in 0..=n {
                    for k in 1..=m {
                        for p in enumerate_schroeder(r, n, m, k) {
                            for pos in (0..p.len()).filter(|&i| p.steps[i] == Step::D) {
                                let mut steps = p.steps.clone();
                                steps.remove(pos);
                                assert!(LatticePath::new(r, steps).is_valid());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn schroeder_is_shuffle_of_catalan_with_diagonals() {
        for n in 0..=6 {
            for m in 0..=n {
                for r in 0..=n {
                    for k in 0..=m.min(n - r) {
                        let mut from_shuffles = BTreeSet::new();
                        for c in enumerate_catalan(r, n - k, m - k) {
                            let ds = vec![Step::D; k as usize];
                            for w in shuffles(&[c.steps.clone(), ds]).unwrap() {
                                from_shuffles.insert(w);
                            }
                        }
                        let direct: BTreeSet<Vec<Step>> =
                            enumerate_schroeder(r, n, m, k).into_iter().map(|p| p.steps).collect();
                        assert_eq!(direct, from_shuffles, "r={r} n={n} m={m} k={k}");
                    }
                }
            }
        }
    }
}
