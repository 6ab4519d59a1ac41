//! Partitions, skew shapes and tableaux.
//!
//! Rows are numbered from 1 at the top (the longest row) and columns from 1
//! at the left. A skew tableau stores, for every row, only the entries of
//! the cells outside the inner shape.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qseries::LaurentPoly;

/// A weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        Partition::from_lengths(&parts.iter().map(|&p| i64::from(p)).collect::<Vec<_>>())
            .ok_or_else(|| Error::InvalidShape(format!("{parts:?} is not a partition")))
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    /// Accepts row lengths with trailing zeros; `None` unless they form a
    /// partition.
    pub fn from_lengths(lengths: &[i64]) -> Option<Partition> {
        let mut parts: Vec<i64> = lengths.to_vec();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.iter().any(|&p| p <= 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition(parts.into_iter().map(|p| p as u32).collect()))
    }

    /// `(a, b, 1^ones)`; `None` if that is not a partition.
    pub fn hook(a: i64, b: i64, ones: i64) -> Option<Partition> {
        if ones < 0 {
            return None;
        }
        let mut rows = vec![a, b];
        rows.extend(std::iter::repeat_n(1, ones as usize));
        Partition::from_lengths(&rows)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part `i` (1-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition((1..=cols).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    pub fn contains_partition(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn contains_cell(&self, (i, j): (usize, usize)) -> bool {
        i >= 1 && j >= 1 && j as u32 <= self.part(i)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.0.iter().enumerate().flat_map(|(i, &p)| (1..=p as usize).map(move |j| (i + 1, j))).collect()
    }

    /// `λ_i + λ'_j − i − j + 1`.
    pub fn hook_length(&self, cell: (usize, usize)) -> Result<u32> {
        if !self.contains_cell(cell) {
            return Err(Error::CellOutOfShape { row: cell.0, col: cell.1 });
        }
        let conj = self.conjugate();
        let (i, j) = cell;
        Ok(self.part(i) + conj.part(j) + 1 - i as u32 - j as u32)
    }

    /// `Σ_i (i − 1) λ_i`.
    pub fn b(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &p)| i as u32 * p).sum()
    }

    /// All partitions of `size` with at most `max_len` parts, in reverse
    /// lexicographic order.
    pub fn all_of_size(size: u32, max_len: usize) -> Vec<Partition> {
        fn go(rem: u32, cap: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if cur.len() == max_len {
                return;
            }
            for p in (1..=rem.min(cap)).rev() {
                cur.push(p);
                go(rem - p, p, max_len, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(size, size, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// Every partition contained in `self`, including the empty one.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(outer: &[u32], i: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if i == outer.len() {
                return;
            }
            for p in 1..=cap.min(outer[i]) {
                cur.push(p);
                go(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.0, 0, u32::MAX, &mut Vec::new(), &mut out);
        out
    }
}

/// `u = (i, j) ↦ j − i`.
pub fn content((i, j): (usize, usize)) -> i64 {
    j as i64 - i as i64
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Parses `4,3,1`, `(4,3,1)`, `4 3 1`, or an empty string / `()` / `0`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("bad partition {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::from_lengths(&parts).ok_or_else(|| Error::InvalidShape(format!("{s:?} is not a partition")))
    }
}

/// `outer / inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<SkewShape> {
        if !outer.contains_partition(&inner) {
            return Err(Error::InvalidShape(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> SkewShape {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    pub fn contains(&self, (i, j): (usize, usize)) -> bool {
        self.outer.contains_cell((i, j)) && !self.inner.contains_cell((i, j))
    }

    /// Cells of the skew shape in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (1..=self.outer.len())
            .flat_map(|i| (self.inner.part(i) as usize + 1..=self.outer.part(i) as usize).map(move |j| (i, j)))
            .collect()
    }

    pub fn row_len(&self, i: usize) -> usize {
        (self.outer.part(i) - self.inner.part(i)) as usize
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// Accepts `4,3` or `4,3/1`.
impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((o, i)) => SkewShape::new(o.parse()?, i.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Rows strictly, columns weakly increasing; entries form `{1..max}`.
    RInc,
    /// Row-increasing with strictly increasing columns.
    Inc,
    Syt,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "rinc" => Ok(Family::RInc),
            "inc" => Ok(Family::Inc),
            "syt" => Ok(Family::Syt),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    Maj,
    Amaj,
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "maj" => Ok(Statistic::Maj),
            "amaj" => Ok(Statistic::Amaj),
            _ => Err(Error::Parse(format!("unknown statistic {s:?}"))),
        }
    }
}

/// A filling of a skew shape by positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// `rows[i]` lists the entries of row `i + 1` left to right.
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Tableau> {
        let fits =
            rows.len() == shape.outer.len() && rows.iter().enumerate().all(|(i, r)| r.len() == shape.row_len(i + 1));
        if !fits {
            return Err(Error::InvalidShape(format!("rows {rows:?} do not fill {shape}")));
        }
        Ok(Tableau { shape, rows })
    }

    /// Builds a tableau from inner row lengths and the entries right of them.
    pub fn from_rows(inner: &[u32], rows: Vec<Vec<u32>>) -> Result<Tableau> {
        let outer: Vec<i64> = rows
            .iter()
            .enumerate()
            .map(|(i, r)| i64::from(inner.get(i).copied().unwrap_or(0)) + r.len() as i64)
            .collect();
        let outer = Partition::from_lengths(&outer)
            .ok_or_else(|| Error::InvalidShape(format!("rows {rows:?} over inner {inner:?}")))?;
        let inner = Partition::from_lengths(&inner.iter().map(|&p| i64::from(p)).collect::<Vec<_>>())
            .ok_or_else(|| Error::InvalidShape(format!("inner {inner:?} is not a partition")))?;
        let mut rows = rows;
        rows.truncate(outer.len());
        Tableau::new(SkewShape::new(outer, inner)?, rows)
    }

    /// Builds a tableau from a grid where `None` marks inner cells.
    pub fn from_grid(grid: &[Vec<Option<u32>>]) -> Result<Tableau> {
        let mut inner = Vec::with_capacity(grid.len());
        let mut rows = Vec::with_capacity(grid.len());
        for row in grid {
            let lead = row.iter().take_while(|c| c.is_none()).count();
            let rest: Option<Vec<u32>> = row[lead..].iter().copied().collect();
            let rest = rest.ok_or_else(|| Error::InvalidShape("inner cell right of an entry".into()))?;
            inner.push(lead as u32);
            rows.push(rest);
        }
        while rows.last().is_some_and(|r| r.is_empty()) && inner.last() == Some(&0) {
            rows.pop();
            inner.pop();
        }
        Tableau::from_rows(&inner, rows)
    }

    pub fn to_grid(&self) -> Vec<Vec<Option<u32>>> {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = vec![None; self.shape.inner.part(i + 1) as usize];
                row.extend(r.iter().map(|&v| Some(v)));
                row
            })
            .collect()
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entries of row `i` (1-based), empty past the last row.
    pub fn row(&self, i: usize) -> &[u32] {
        if i == 0 {
            return &[];
        }
        self.rows.get(i - 1).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `T(i, j)`, 1-based; `None` for inner cells and cells outside the shape.
    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        if !self.shape.contains((i, j)) {
            return None;
        }
        let offset = self.shape.inner.part(i) as usize;
        Some(self.rows[i - 1][j - 1 - offset])
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        self.shape.cells().into_iter().map(|(i, j)| ((i, j), self.get(i, j).unwrap()))
    }

    pub fn size(&self) -> u32 {
        self.shape.size()
    }

    pub fn max_value(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Number of cells minus the largest entry.
    pub fn repeats(&self) -> u32 {
        self.size() - self.max_value()
    }

    fn rows_strict(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    fn columns_ok(&self, strict: bool) -> bool {
        self.entries().all(|((i, j), v)| match self.get(i + 1, j) {
            Some(below) => {
                if strict {
                    v < below
                } else {
                    v <= below
                }
            }
            None => true,
        })
    }

    fn initial_segment(&self) -> bool {
        let values: BTreeSet<u32> = self.rows.iter().flatten().copied().collect();
        values.iter().copied().eq(1..=self.max_value())
    }

    pub fn is_rinc(&self) -> bool {
        self.rows_strict() && self.columns_ok(false) && self.initial_segment()
    }

    pub fn is_inc(&self) -> bool {
        self.rows_strict() && self.columns_ok(true) && self.initial_segment()
    }

    pub fn is_syt(&self) -> bool {
        self.is_inc() && self.repeats() == 0
    }

    /// Membership in `family` with `k` repeated values.
    pub fn is_in(&self, family: Family, k: u32) -> bool {
        let ok = match family {
            Family::RInc => self.is_rinc(),
            Family::Inc => self.is_inc(),
            Family::Syt => k == 0 && self.is_syt(),
        };
        ok && self.repeats() == k
    }

    /// Weakly decreasing rows, strictly decreasing columns, entries in `1..=n`.
    pub fn is_reverse(&self, n: u32) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] >= w[1]))
            && self
                .entries()
                .all(|((i, j), v)| (1..=n).contains(&v) && self.get(i + 1, j).is_none_or(|below| v > below))
    }

    /// Smallest and largest row holding each value `1..=max`.
    fn row_span(&self) -> Vec<(usize, usize)> {
        let mut span = vec![(usize::MAX, 0usize); self.max_value() as usize + 1];
        for ((i, _), v) in self.entries() {
            let s = &mut span[v as usize];
            s.0 = s.0.min(i);
            s.1 = s.1.max(i);
        }
        span
    }

    /// Values `i` with some occurrence of `i` strictly above some occurrence of `i + 1`.
    pub fn descent_set(&self) -> Vec<u32> {
        let span = self.row_span();
        (1..self.max_value()).filter(|&i| span[i as usize].0 < span[i as usize + 1].1).collect()
    }

    /// Values `i` with some occurrence of `i` strictly below some occurrence of `i + 1`.
    pub fn ascent_set(&self) -> Vec<u32> {
        let span = self.row_span();
        (1..self.max_value()).filter(|&i| span[i as usize].1 > span[i as usize + 1].0).collect()
    }

    pub fn maj(&self) -> u32 {
        self.descent_set().iter().sum()
    }

    pub fn amaj(&self) -> u32 {
        self.ascent_set().iter().sum()
    }

    pub fn stat(&self, stat: Statistic) -> u32 {
        match stat {
            Statistic::Maj => self.maj(),
            Statistic::Amaj => self.amaj(),
        }
    }
}

/// Row lists separated by `/`, inner cells as `.`: `. 2 3 4 / 1 2 3`.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self
            .to_grid()
            .iter()
            .map(|row| {
                row.iter().map(|c| c.map_or_else(|| ".".to_string(), |v| v.to_string())).collect::<Vec<_>>().join(" ")
            })
            .collect();
        f.write_str(&rendered.join(" / "))
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let grid = s
            .split('/')
            .map(|row| {
                row.split_whitespace()
                    .map(|t| match t {
                        "." => Ok(None),
                        _ => t.parse::<u32>().map(Some).map_err(|_| Error::Parse(format!("bad entry {t:?} in {s:?}"))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if grid.iter().any(Vec::is_empty) {
            return Err(Error::Parse(format!("empty row in {s:?}")));
        }
        Tableau::from_grid(&grid)
    }
}

/// Every tableau of `shape` in `family` whose largest entry is
/// `|shape| − k`, in lexicographic order of the row-major reading word.
pub fn generate_family(family: Family, shape: &SkewShape, k: u32) -> Vec<Tableau> {
    let mut out = Vec::new();
    for_each_in_family(family, shape, k, |t| out.push(t));
    out
}

/// Streaming form of [`generate_family`].
pub fn for_each_in_family(family: Family, shape: &SkewShape, k: u32, mut emit: impl FnMut(Tableau)) {
    let size = shape.size();
    if k > size || (family == Family::Syt && k != 0) {
        return;
    }
    let max = size - k;
    if max == 0 && size > 0 {
        return;
    }
    let cells = shape.cells();
    let mut search = Search {
        shape,
        cells: &cells,
        max,
        strict_cols: family != Family::RInc,
        distinct: family == Family::Syt,
        grid: shape.outer.parts().iter().map(|&p| vec![0u32; p as usize]).collect(),
        uses: vec![0u32; max as usize + 1],
        unused: max,
    };
    search.fill(0, &mut emit);
}

struct Search<'a> {
    shape: &'a SkewShape,
    cells: &'a [(usize, usize)],
    max: u32,
    strict_cols: bool,
    distinct: bool,
    grid: Vec<Vec<u32>>,
    uses: Vec<u32>,
    unused: u32,
}

impl Search<'_> {
    fn fill(&mut self, idx: usize, emit: &mut impl FnMut(Tableau)) {
        if idx == self.cells.len() {
            if self.unused == 0 {
                let rows = self
                    .grid
                    .iter()
                    .enumerate()
                    .map(|(i, r)| r[self.shape.inner.part(i + 1) as usize..].to_vec())
                    .collect();
                emit(Tableau { shape: self.shape.clone(), rows });
            }
            return;
        }
        let remaining = (self.cells.len() - idx) as u32;
        if self.unused > remaining {
            return;
        }
        let (i, j) = self.cells[idx];
        let mut lo = 1;
        if self.shape.contains((i, j - 1)) {
            lo = lo.max(self.grid[i - 1][j - 2] + 1);
        }
        if i > 1 && self.shape.contains((i - 1, j)) {
            let above = self.grid[i - 2][j - 1];
            lo = lo.max(if self.strict_cols { above + 1 } else { above });
        }
        for v in lo..=self.max {
            let fresh = self.uses[v as usize] == 0;
            if self.distinct && !fresh {
                continue;
            }
            // leave room for every still-unused value
            if !fresh && self.unused > remaining - 1 {
                continue;
            }
            self.grid[i - 1][j - 1] = v;
            self.uses[v as usize] += 1;
            if fresh {
                self.unused -= 1;
            }
            self.fill(idx + 1, emit);
            self.uses[v as usize] -= 1;
            if fresh {
                self.unused += 1;
            }
        }
    }
}

/// Reverse tableaux of shape `mu` with entries in `1..=n`.
pub fn generate_reverse_tableaux(mu: &Partition, n: u32) -> Vec<Tableau> {
    fn go(
        shape: &SkewShape,
        cells: &[(usize, usize)],
        idx: usize,
        n: u32,
        grid: &mut Vec<Vec<u32>>,
        out: &mut Vec<Tableau>,
    ) {
        if idx == cells.len() {
            out.push(Tableau { shape: shape.clone(), rows: grid.clone() });
            return;
        }
        let (i, j) = cells[idx];
        let mut hi = n;
        if j > 1 {
            hi = hi.min(grid[i - 1][j - 2]);
        }
        if i > 1 {
            hi = hi.min(grid[i - 2][j - 1].saturating_sub(1));
        }
        for v in 1..=hi {
            grid[i - 1][j - 1] = v;
            go(shape, cells, idx + 1, n, grid, out);
        }
    }
    let shape = SkewShape::straight(mu.clone());
    let cells = shape.cells();
    let mut grid = mu.parts().iter().map(|&p| vec![0u32; p as usize]).collect();
    let mut out = Vec::new();
    go(&shape, &cells, 0, n, &mut grid, &mut out);
    out
}

/// `Σ q^stat(T)` over [`generate_family`].
pub fn stat_gf(family: Family, shape: &SkewShape, k: u32, stat: Statistic) -> LaurentPoly {
    let mut hist: Vec<u64> = Vec::new();
    for_each_in_family(family, shape, k, |t| {
        let s = t.stat(stat) as usize;
        if hist.len() <= s {
            hist.resize(s + 1, 0);
        }
        hist[s] += 1;
    });
    LaurentPoly::from_coeffs(0, hist.into_iter().map(Into::into).collect())
}
