//! Rectangular standard Young tableaux of shape (nk) x r and the invariant
//! section combinatorics built on them.
//!
//! A tableau is stored as a chain of rows (each a [`PluckerIndex`]); for this
//! rectangular shape, column monotonicity is exactly the componentwise chain
//! condition on rows. The invariant set is enumerated by row-by-row
//! backtracking with value-count and prefix-window pruning, and is indexed by
//! families of non-decreasing sequences through [`build_gamma`] /
//! [`sequences_of_gamma`].

use serde_json::json;

use crate::error::{Error, Result};
use crate::weyl::{
    binomial_usize, bruhat_leq, v_of_m, w_min, GrassmannianContext, ParamM, PluckerIndex,
};

/// A grid of nk rows and r columns, each row strictly increasing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct YoungTableau {
    rows: Vec<PluckerIndex>,
}

impl std::fmt::Debug for YoungTableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "[{}]", rows.join(" "))
    }
}

impl YoungTableau {
    /// Builds a tableau from rows in the given order. All rows must share
    /// the same r and n; monotonicity is *not* required here, so malformed
    /// fillings can be constructed and then rejected by [`is_standard`].
    pub fn from_rows(rows: Vec<PluckerIndex>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Shape("tableau must have at least one row".into()));
        }
        let r = rows[0].r();
        let n = rows[0].n();
        for row in &rows {
            if row.r() != r || row.n() != n {
                return Err(Error::Shape(format!(
                    "all rows must be {}-tuples over n={}, got {}",
                    r, n, row
                )));
            }
        }
        Ok(YoungTableau { rows })
    }

    /// Builds a tableau from an unordered multiset of rows, sorting them
    /// lexicographically. For pairwise-comparable rows this is the chain
    /// order.
    pub fn from_row_multiset(mut rows: Vec<PluckerIndex>) -> Result<Self> {
        rows.sort();
        Self::from_rows(rows)
    }

    pub fn rows(&self) -> &[PluckerIndex] {
        &self.rows
    }

    /// Row with 1-based index.
    pub fn row(&self, i: usize) -> &PluckerIndex {
        &self.rows[i - 1]
    }

    /// Entry E_{i,j} with 1-based row and column.
    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.rows[i - 1].entry(j)
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows[0].r()
    }

    pub fn n(&self) -> usize {
        self.rows[0].n()
    }

    /// Degree k with nk rows; errors when the shape does not match the
    /// context.
    pub fn degree(&self, ctx: &GrassmannianContext) -> Result<usize> {
        if self.n() != ctx.n || self.num_cols() != ctx.r {
            return Err(Error::Dimension(format!(
                "tableau over n={} with {} columns does not match context (n={}, r={})",
                self.n(),
                self.num_cols(),
                ctx.n,
                ctx.r
            )));
        }
        if !self.num_rows().is_multiple_of(ctx.n) {
            return Err(Error::Shape(format!(
                "row count {} is not a multiple of n={}",
                self.num_rows(),
                ctx.n
            )));
        }
        Ok(self.num_rows() / ctx.n)
    }

    pub fn census(&self) -> ColumnCensus {
        ColumnCensus::of(self)
    }

    /// Plain-text grid, one row per line, entries space-separated.
    pub fn to_text_grid(&self) -> String {
        self.rows
            .iter()
            .map(|row| {
                row.entries()
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// JSON array-of-rows form.
    pub fn to_json(&self) -> serde_json::Value {
        json!(self
            .rows
            .iter()
            .map(|row| row.entries().to_vec())
            .collect::<Vec<_>>())
    }
}

/// Box counts: N_{t,j} per column and the totals c(t).
pub struct ColumnCensus {
    n: usize,
    r: usize,
    // per_column[j-1][t] = N_{t,j}; totals[t] = c(t); index 0 unused.
    per_column: Vec<Vec<usize>>,
    totals: Vec<usize>,
}

impl ColumnCensus {
    fn of(tab: &YoungTableau) -> Self {
        let n = tab.n();
        let r = tab.num_cols();
        let mut per_column = vec![vec![0usize; n + 1]; r];
        let mut totals = vec![0usize; n + 1];
        for row in tab.rows() {
            for (c, &val) in row.entries().iter().enumerate() {
                per_column[c][val] += 1;
                totals[val] += 1;
            }
        }
        ColumnCensus {
            n,
            r,
            per_column,
            totals,
        }
    }

    /// N_{t,j} with 1-based column j.
    pub fn in_column(&self, t: usize, j: usize) -> usize {
        self.per_column[j - 1][t]
    }

    /// c(t), the total number of boxes containing t.
    pub fn total(&self, t: usize) -> usize {
        self.totals[t]
    }

    /// The weight vector (c(1), ..., c(n)).
    pub fn weight(&self) -> Vec<usize> {
        self.totals[1..=self.n].to_vec()
    }

    pub fn column_sum(&self, j: usize) -> usize {
        (1..=self.n).map(|t| self.in_column(t, j)).sum()
    }

    pub fn num_cols(&self) -> usize {
        self.r
    }
}

/// True iff rows strictly increase left to right (enforced by construction)
/// and columns are non-decreasing top to bottom, i.e. the rows form a
/// componentwise chain.
pub fn is_standard(tab: &YoungTableau) -> bool {
    tab.rows().windows(2).all(|pair| {
        pair[0]
            .entries()
            .iter()
            .zip(pair[1].entries())
            .all(|(a, b)| a <= b)
    })
}

/// True iff every value 1..=n appears exactly r*k times.
pub fn is_t_invariant(tab: &YoungTableau, ctx: &GrassmannianContext, k: usize) -> bool {
    let census = tab.census();
    (1..=ctx.n).all(|t| census.total(t) == ctx.r * k)
}

/// True iff the first row dominates v and the last row is dominated by w.
pub fn supports_richardson(tab: &YoungTableau, v: &PluckerIndex, w: &PluckerIndex) -> Result<bool> {
    let first = bruhat_leq(v, &tab.rows[0])?;
    let last = bruhat_leq(tab.rows.last().unwrap(), w)?;
    Ok(first && last)
}

/// Full membership test for the invariant set at the tableau's own degree.
pub fn is_invariant_member(
    tab: &YoungTableau,
    m: &ParamM,
    ctx: &GrassmannianContext,
) -> Result<bool> {
    let k = tab.degree(ctx)?;
    Ok(is_standard(tab)
        && is_t_invariant(tab, ctx, k)
        && supports_richardson(tab, &v_of_m(m, ctx), &w_min(ctx))?)
}

/// Bounds on enumeration work.
#[derive(Clone, Copy, Debug)]
pub struct SearchLimits {
    /// Gate on k * binomial(n, r) before searching.
    pub search_space: u128,
    /// Backstop on backtracking steps during the search.
    pub max_nodes: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            search_space: 1_000_000,
            max_nodes: 50_000_000,
        }
    }
}

struct Enumerator<'a> {
    ctx: &'a GrassmannianContext,
    k: usize,
    lower: Vec<usize>,  // v_of_m entries, 0-based columns
    upper: Vec<usize>,  // w_min entries
    target: usize,      // r*k copies of each value
    total_rows: usize,  // n*k
    counts: Vec<usize>, // counts[t]
    rows: Vec<Vec<usize>>,
    current: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
    results: Vec<YoungTableau>,
}

impl Enumerator<'_> {
    fn window_ok(&self, col: usize, row_idx: usize, x: usize) -> bool {
        // Prefix windows: in column j+1 the first k(r-j) entries are at most
        // jq+1 and the rest at least jq+2 (a consequence of invariance plus
        // support, so pruning with it is lossless).
        if col == 0 {
            return true;
        }
        let j = col; // 0-based column col pairs with group j = col
        let cutoff = self.k * (self.ctx.r - j);
        if row_idx < cutoff {
            x <= j * self.ctx.q + 1
        } else {
            x >= j * self.ctx.q + 2
        }
    }

    fn feasible_after_row(&self) -> bool {
        let remaining = self.total_rows - self.rows.len();
        let bottom = self.rows.last().unwrap();
        for t in 1..=self.ctx.n {
            let needed = self.target - self.counts[t];
            if needed == 0 {
                continue;
            }
            let open = (0..self.ctx.r)
                .filter(|&c| bottom[c] <= t && t <= self.upper[c])
                .count();
            if needed > remaining * open {
                return false;
            }
        }
        true
    }

    fn fill_row(&mut self, col: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::ResourceLimit(format!(
                "backtracking exceeded {} steps",
                self.max_nodes
            )));
        }
        if col == self.ctx.r {
            let row = std::mem::take(&mut self.current);
            self.rows.push(row);
            if self.rows.len() == self.total_rows {
                if (1..=self.ctx.n).all(|t| self.counts[t] == self.target) {
                    let rows: Vec<PluckerIndex> = self
                        .rows
                        .iter()
                        .map(|r| PluckerIndex::new(r.clone(), self.ctx.n).unwrap())
                        .collect();
                    self.results.push(YoungTableau::from_rows(rows)?);
                }
            } else if self.feasible_after_row() {
                self.fill_row(0)?;
            }
            self.current = self.rows.pop().expect("row was just pushed");
            return Ok(());
        }

        let row_idx = self.rows.len();
        let prev_in_row = if col == 0 { 0 } else { self.current[col - 1] };
        let floor = if row_idx == 0 {
            self.lower[col]
        } else {
            self.rows[row_idx - 1][col]
        };
        let lo = floor.max(prev_in_row + 1);
        let hi = self.upper[col];
        for x in lo..=hi {
            if self.counts[x] >= self.target || !self.window_ok(col, row_idx, x) {
                continue;
            }
            self.current.push(x);
            self.counts[x] += 1;
            self.fill_row(col + 1)?;
            self.counts[x] -= 1;
            self.current.pop();
        }
        Ok(())
    }
}

/// Enumerates the degree-k standard, torus-invariant tableaux supported on
/// the Richardson interval [v_m, w]. Output is sorted lexicographically on
/// the flattened row lists.
pub fn enumerate_invariant(
    m: &ParamM,
    ctx: &GrassmannianContext,
    k: usize,
    limits: &SearchLimits,
) -> Result<Vec<YoungTableau>> {
    if k == 0 {
        return Err(Error::Domain("degree must be at least 1".into()));
    }
    let space = ctx.binomial_n_r().saturating_mul(k as u128);
    if space > limits.search_space {
        return Err(Error::ResourceLimit(format!(
            "k * binomial(n, r) = {space} exceeds the configured bound {}",
            limits.search_space
        )));
    }
    let v = v_of_m(m, ctx);
    let w = w_min(ctx);
    let mut en = Enumerator {
        ctx,
        k,
        lower: v.entries().to_vec(),
        upper: w.entries().to_vec(),
        target: ctx.r * k,
        total_rows: ctx.n * k,
        counts: vec![0; ctx.n + 1],
        rows: Vec::new(),
        current: Vec::new(),
        nodes: 0,
        max_nodes: limits.max_nodes,
        results: Vec::new(),
    };
    en.fill_row(0)?;
    let mut results = en.results;
    results.sort_by(|a, b| {
        a.rows()
            .iter()
            .flat_map(|r| r.entries())
            .cmp(b.rows().iter().flat_map(|r| r.entries()))
    });
    Ok(results)
}

/// The family t = (t_{1,j} <= ... <= t_{r-j,j})_{1 <= j <= r-1} with entries
/// in [m_j + 1, q + 1].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SequenceFamily {
    seqs: Vec<Vec<usize>>,
}

impl SequenceFamily {
    pub fn new(seqs: Vec<Vec<usize>>, m: &ParamM, ctx: &GrassmannianContext) -> Result<Self> {
        if seqs.len() != ctx.r - 1 {
            return Err(Error::Dimension(format!(
                "need r-1 = {} sequences, got {}",
                ctx.r - 1,
                seqs.len()
            )));
        }
        for (j0, seq) in seqs.iter().enumerate() {
            let j = j0 + 1;
            if seq.len() != ctx.r - j {
                return Err(Error::Shape(format!(
                    "sequence {} must have length {}, got {}",
                    j,
                    ctx.r - j,
                    seq.len()
                )));
            }
            for window in seq.windows(2) {
                if window[0] > window[1] {
                    return Err(Error::Domain(format!(
                        "sequence {} is not non-decreasing: {:?}",
                        j, seq
                    )));
                }
            }
            for &t in seq {
                if t < m.m(j) + 1 || t > ctx.q + 1 {
                    return Err(Error::Domain(format!(
                        "entry {} of sequence {} out of range [{}, {}]",
                        t,
                        j,
                        m.m(j) + 1,
                        ctx.q + 1
                    )));
                }
            }
        }
        Ok(SequenceFamily { seqs })
    }

    pub fn seqs(&self) -> &[Vec<usize>] {
        &self.seqs
    }

    /// The sequence for a 1-based group index j.
    pub fn seq(&self, j: usize) -> &[usize] {
        &self.seqs[j - 1]
    }

    /// t_{m,j}, both indices 1-based.
    pub fn t(&self, m: usize, j: usize) -> usize {
        self.seqs[j - 1][m - 1]
    }

    /// Every family in A_1 x ... x A_{r-1}, lexicographically ordered.
    pub fn enumerate_all(m: &ParamM, ctx: &GrassmannianContext) -> Vec<SequenceFamily> {
        let mut families = vec![Vec::new()];
        for j in 1..ctx.r {
            let seqs_j = nondecreasing_sequences(ctx.r - j, m.m(j) + 1, ctx.q + 1);
            let mut next = Vec::with_capacity(families.len() * seqs_j.len());
            for prefix in &families {
                for seq in &seqs_j {
                    let mut f: Vec<Vec<usize>> = prefix.clone();
                    f.push(seq.clone());
                    next.push(f);
                }
            }
            families = next;
        }
        families
            .into_iter()
            .map(|seqs| SequenceFamily { seqs })
            .collect()
    }
}

/// All non-decreasing sequences of the given length with entries in
/// [lo, hi], in lexicographic order.
pub fn nondecreasing_sequences(len: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    fn rec(out: &mut Vec<Vec<usize>>, current: &mut Vec<usize>, len: usize, lo: usize, hi: usize) {
        if current.len() == len {
            out.push(current.clone());
            return;
        }
        let start = current.last().copied().unwrap_or(lo).max(lo);
        for x in start..=hi {
            current.push(x);
            rec(out, current, len, lo, hi);
            current.pop();
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    rec(&mut out, &mut current, len, lo, hi);
    out
}

/// Expected size of the invariant set at degree 1: the product of
/// binomial(q - m_j + r - j, r - j) over the groups.
pub fn invariant_count_formula(m: &ParamM, ctx: &GrassmannianContext) -> u128 {
    (1..ctx.r)
        .map(|j| binomial_usize(ctx.q - m.m(j) + ctx.r - j, ctx.r - j))
        .product()
}

/// Builds the degree-1 tableau indexed by the sequence family.
///
/// Column 1 starts with r copies of 1 and continues with the sorted multiset
/// B_1; column j (2 <= j <= r-1) starts with the shifted group-(j-1) sequence
/// and continues with the sorted multiset B_j; column r places one sequence
/// entry and then the top values in blocks of r. Here B_j contains each value
/// in [(j-1)q+2, jq+1] with multiplicity r, minus one copy of (j-1)q + t_{m,j}
/// for each entry of the group-j sequence.
pub fn build_gamma(
    family: &SequenceFamily,
    m: &ParamM,
    ctx: &GrassmannianContext,
) -> Result<YoungTableau> {
    // Revalidate against (m, ctx) in case the family was built elsewhere.
    let family = SequenceFamily::new(family.seqs.clone(), m, ctx)?;
    let (n, r, q) = (ctx.n, ctx.r, ctx.q);
    let mut columns: Vec<Vec<usize>> = Vec::with_capacity(r);

    let multiset_b = |j: usize| -> Vec<usize> {
        let mut b = Vec::with_capacity(r * q);
        for val in (j - 1) * q + 2..=j * q + 1 {
            for _ in 0..r {
                b.push(val);
            }
        }
        for mm in 1..=r - j {
            let val = (j - 1) * q + family.t(mm, j);
            let pos = b.iter().position(|&x| x == val).expect("value lies in B'");
            b.remove(pos);
        }
        b
    };

    // Column 1.
    let mut col = vec![1usize; r];
    col.extend(multiset_b(1));
    debug_assert_eq!(col.len(), n);
    columns.push(col);

    // Columns 2 .. r-1.
    for j in 2..r {
        let mut col = Vec::with_capacity(n);
        for mm in 1..=r - j + 1 {
            col.push((j - 2) * q + family.t(mm, j - 1));
        }
        col.extend(multiset_b(j));
        debug_assert_eq!(col.len(), n);
        columns.push(col);
    }

    // Column r: one sequence entry, then blocks of r.
    let mut col = Vec::with_capacity(n);
    col.push((r - 2) * q + family.t(1, r - 1));
    for m0 in 1..n {
        let l = m0.div_ceil(r) + 1;
        col.push((r - 1) * q + l);
    }
    columns.push(col);

    let rows: Vec<PluckerIndex> = (0..n)
        .map(|i| {
            let entries: Vec<usize> = (0..r).map(|c| columns[c][i]).collect();
            PluckerIndex::new(entries, n)
        })
        .collect::<Result<_>>()?;
    YoungTableau::from_rows(rows)
}

/// Inverse of [`build_gamma`]: reads t_{m,j} = E_{m,j+1} - (j-1)q off the top
/// of each column. Errors when the tableau is not a degree-1 member of the
/// invariant set.
pub fn sequences_of_gamma(
    tab: &YoungTableau,
    m: &ParamM,
    ctx: &GrassmannianContext,
) -> Result<SequenceFamily> {
    let k = tab.degree(ctx)?;
    if k != 1 {
        return Err(Error::Domain(format!(
            "sequence extraction needs a degree-1 tableau, got degree {k}"
        )));
    }
    if !is_invariant_member(tab, m, ctx)? {
        return Err(Error::Domain(
            "tableau is not an invariant member for the given parameters".into(),
        ));
    }
    let mut seqs = Vec::with_capacity(ctx.r - 1);
    for j in 1..ctx.r {
        let seq: Vec<usize> = (1..=ctx.r - j)
            .map(|mm| tab.entry(mm, j + 1) - (j - 1) * ctx.q)
            .collect();
        seqs.push(seq);
    }
    SequenceFamily::new(seqs, m, ctx)
}

/// Per-lemma verdicts for the structural facts about invariant tableaux.
/// Every field is a theorem, so any `false` signals an implementation bug.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub column_locality: bool,
    pub prefix_window: bool,
    pub last_column_blocks: bool,
    pub pinned_entries: bool,
    pub two_value_bands: bool,
    pub count_transfer: bool,
}

impl StructureReport {
    pub fn all_hold(&self) -> bool {
        self.column_locality
            && self.prefix_window
            && self.last_column_blocks
            && self.pinned_entries
            && self.two_value_bands
            && self.count_transfer
    }
}

/// Evaluates the structural predicates on an invariant tableau.
pub fn check_structure_lemmas(
    tab: &YoungTableau,
    m: &ParamM,
    ctx: &GrassmannianContext,
) -> Result<StructureReport> {
    let k = tab.degree(ctx)?;
    let (r, q, n) = (ctx.r, ctx.q, ctx.n);
    let census = tab.census();

    // Values in [(j-1)q+2, jq+1] live in columns {j, j+1}; the top band lives
    // in column r alone.
    let mut column_locality = true;
    for j in 1..r {
        for t in (j - 1) * q + 2..=j * q + 1 {
            for c in 1..=r {
                if c != j && c != j + 1 && census.in_column(t, c) != 0 {
                    column_locality = false;
                }
            }
        }
    }
    for t in (r - 1) * q + 2..=r * q + 1 {
        for c in 1..r {
            if census.in_column(t, c) != 0 {
                column_locality = false;
            }
        }
    }

    // Column j+1 prefix of length k(r-j) sits in [(j-1)q+m_j+1, jq+1] and the
    // next entry jumps past jq+1.
    let mut prefix_window = true;
    for j in 1..r {
        let cutoff = k * (r - j);
        for i in 1..=cutoff {
            let e = tab.entry(i, j + 1);
            if e < (j - 1) * q + m.m(j) + 1 || e > j * q + 1 {
                prefix_window = false;
            }
        }
        if tab.entry(cutoff + 1, j + 1) < j * q + 2 {
            prefix_window = false;
        }
    }

    // Column r: entry k is still below the top band, then value (r-1)q+l
    // occupies rows up to k(r(l-1)+1) with l minimal >= 2.
    let mut last_column_blocks = tab.entry(k, r) <= (r - 1) * q + 1;
    for i in k + 1..=n * k {
        let mut l = 2;
        while k * (r * (l - 1) + 1) < i {
            l += 1;
        }
        if tab.entry(i, r) != (r - 1) * q + l {
            last_column_blocks = false;
        }
    }

    // Pinned bands in columns 1..r-1.
    let mut pinned_entries = true;
    for j in 1..r {
        for l in 2..=m.m(j) {
            for i in k * (r * (l - 1) + 1 - j) + 1..=k * (r * l + 1 - j) {
                if tab.entry(i, j) != (j - 1) * q + l {
                    pinned_entries = false;
                }
            }
        }
        for l in m.m(j) + 1..=q + 1 {
            for i in k * (r * (l - 1) + 1 - j) + 1..=k * (r * (l - 1) + 1) {
                if tab.entry(i, j) != (j - 1) * q + l {
                    pinned_entries = false;
                }
            }
        }
    }

    // Two-value bands between the pinned blocks.
    let mut two_value_bands = true;
    for j in 1..r {
        for l in m.m(j) + 2..=q + 1 {
            for i in k * (r * (l - 2) + 1) + 1..=k * (r * (l - 1) + 1 - j) {
                let e = tab.entry(i, j);
                if e != (j - 1) * q + l - 1 && e != (j - 1) * q + l {
                    two_value_bands = false;
                }
            }
        }
    }

    // Count-transfer bound instantiated with the tightest admissible counts
    // from column j+1.
    let mut count_transfer = true;
    for j in 1..r {
        let col_count = |t: usize| census.in_column((j - 1) * q + t, j + 1);
        for l in 2..=q + 1 {
            let (lo, hi);
            if l == 2 {
                let n2 = col_count(2);
                lo = k * (r + 1 - j) + 1;
                hi = (k * (2 * r + 1 - j)).saturating_sub(n2);
            } else {
                let n1 = (2..=l - 1).map(col_count).sum::<usize>();
                let n2 = (2..=l).map(col_count).sum::<usize>();
                if n2 > k * (r - j) {
                    count_transfer = false;
                    continue;
                }
                lo = (k * (r * (l - 1) + 1 - j) - n1) + 1;
                hi = (k * (r * l + 1 - j)).saturating_sub(n2);
            }
            for i in lo..=hi.min(n * k) {
                if tab.entry(i, j) != (j - 1) * q + l {
                    count_transfer = false;
                }
            }
        }
    }

    Ok(StructureReport {
        column_locality,
        prefix_window,
        last_column_blocks,
        pinned_entries,
        two_value_bands,
        count_transfer,
    })
}

/// Splits a degree-k (k >= 2) invariant tableau into a degree-1 subtableau
/// (rows k(m-1)+1 for m <= r and rows km above) and the chain of remaining
/// rows.
pub fn extract_degree_one(
    tab: &YoungTableau,
    ctx: &GrassmannianContext,
) -> Result<(YoungTableau, YoungTableau)> {
    let k = tab.degree(ctx)?;
    if k < 2 {
        return Err(Error::Domain(format!(
            "extraction needs degree at least 2, got {k}"
        )));
    }
    let mut picked = vec![false; tab.num_rows() + 1];
    for m in 1..=ctx.r {
        picked[k * (m - 1) + 1] = true;
    }
    for m in ctx.r + 1..=ctx.n {
        picked[k * m] = true;
    }
    let mut first = Vec::with_capacity(ctx.n);
    let mut rest = Vec::with_capacity(tab.num_rows() - ctx.n);
    for (i, row) in tab.rows().iter().enumerate() {
        if picked[i + 1] {
            first.push(row.clone());
        } else {
            rest.push(row.clone());
        }
    }
    Ok((
        YoungTableau::from_rows(first)?,
        YoungTableau::from_row_multiset(rest)?,
    ))
}
