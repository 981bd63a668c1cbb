//! Index combinatorics for the Grassmannian G(r, n) with n = qr + 1.
//!
//! Minimal coset representatives are identified with strictly increasing
//! r-tuples in [1, n] ([`PluckerIndex`]), ordered componentwise (Bruhat
//! order). The weight-sign predicates below characterize the two extremal
//! elements `w_min` and `v_max`, and [`v_of_m`] produces the family of
//! representatives parameterized by an (r-1)-tuple `m`.

use crate::error::{Error, Result};

/// Strictly increasing r-tuple (a_1, ..., a_r) with 1 <= a_i <= n.
///
/// Entries are 1-based, matching the one-line notation for minimal coset
/// representatives.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PluckerIndex {
    entries: Vec<usize>,
    n: usize,
}

impl std::fmt::Debug for PluckerIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.render_inner())
    }
}

impl std::fmt::Display for PluckerIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.render_inner())
    }
}

impl PluckerIndex {
    pub fn new(entries: Vec<usize>, n: usize) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Domain("index tuple must be nonempty".into()));
        }
        for window in entries.windows(2) {
            if window[0] >= window[1] {
                return Err(Error::Domain(format!(
                    "entries must be strictly increasing, got {:?}",
                    entries
                )));
            }
        }
        if entries[0] < 1 || *entries.last().unwrap() > n {
            return Err(Error::Domain(format!(
                "entries {:?} out of range [1, {}]",
                entries, n
            )));
        }
        Ok(PluckerIndex { entries, n })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Entry a_j with 1-based position j.
    pub fn entry(&self, j: usize) -> usize {
        self.entries[j - 1]
    }

    pub fn r(&self) -> usize {
        self.entries.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn render_inner(&self) -> String {
        self.entries
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    fn check_compatible(&self, other: &PluckerIndex) -> Result<()> {
        if self.r() != other.r() || self.n != other.n {
            return Err(Error::Dimension(format!(
                "cannot compare {} over n={} with {} over n={}",
                self, self.n, other, other.n
            )));
        }
        Ok(())
    }
}

/// The ambient parameters: n = q*r + 1 with r >= 2 and q >= 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrassmannianContext {
    pub n: usize,
    pub r: usize,
    pub q: usize,
}

impl GrassmannianContext {
    pub fn new(r: usize, q: usize) -> Result<Self> {
        if r < 2 {
            return Err(Error::Domain(format!("r must be at least 2, got {r}")));
        }
        if q < 1 {
            return Err(Error::Domain("q must be at least 1".into()));
        }
        Ok(GrassmannianContext { n: q * r + 1, r, q })
    }

    /// Builds the context from all three parameters, rejecting n != qr + 1.
    pub fn from_nrq(n: usize, r: usize, q: usize) -> Result<Self> {
        let ctx = Self::new(r, q)?;
        if ctx.n != n {
            return Err(Error::Domain(format!(
                "inconsistent parameters: n={n} but q*r+1={}",
                ctx.n
            )));
        }
        Ok(ctx)
    }

    pub fn index(&self, entries: Vec<usize>) -> Result<PluckerIndex> {
        let idx = PluckerIndex::new(entries, self.n)?;
        if idx.r() != self.r {
            return Err(Error::Dimension(format!(
                "expected an {}-tuple, got {}",
                self.r, idx
            )));
        }
        Ok(idx)
    }

    pub fn binomial_n_r(&self) -> u128 {
        binomial(self.n as u128, self.r as u128)
    }
}

/// The tuple m = (m_1, ..., m_{r-1}) with 1 <= m_j <= q.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamM {
    values: Vec<usize>,
}

impl ParamM {
    pub fn new(values: Vec<usize>, ctx: &GrassmannianContext) -> Result<Self> {
        if values.len() != ctx.r - 1 {
            return Err(Error::Dimension(format!(
                "m must have length r-1 = {}, got {}",
                ctx.r - 1,
                values.len()
            )));
        }
        for (j, &mj) in values.iter().enumerate() {
            if mj < 1 || mj > ctx.q {
                return Err(Error::Domain(format!(
                    "m_{} = {} out of range [1, {}]",
                    j + 1,
                    mj,
                    ctx.q
                )));
            }
        }
        Ok(ParamM { values })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// m_j with 1-based j.
    pub fn m(&self, j: usize) -> usize {
        self.values[j - 1]
    }

    pub fn render(&self) -> String {
        let inner = self
            .values
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",");
        format!("({inner})")
    }
}

pub fn bruhat_leq(a: &PluckerIndex, b: &PluckerIndex) -> Result<bool> {
    a.check_compatible(b)?;
    Ok(a.entries().iter().zip(b.entries()).all(|(x, y)| x <= y))
}

/// Coefficient of the k-th simple root in w(n*omega_r), for 1 <= k <= n-1.
///
/// Writing n*omega_r = n(e_1 + ... + e_r) - r(e_1 + ... + e_n), the simple
/// root coefficients of w applied to it are the partial sums
/// n*#{j : w_j <= k} - r*k.
fn weight_coefficient(w: &PluckerIndex, ctx: &GrassmannianContext, k: usize) -> i64 {
    let hits = w.entries().iter().filter(|&&a| a <= k).count() as i64;
    ctx.n as i64 * hits - ctx.r as i64 * k as i64
}

/// True iff all simple-root coefficients of w(n*omega_r) are <= 0.
pub fn nonpositive_weight_predicate(w: &PluckerIndex, ctx: &GrassmannianContext) -> bool {
    (1..ctx.n).all(|k| weight_coefficient(w, ctx, k) <= 0)
}

/// True iff all simple-root coefficients of v(n*omega_r) are >= 0.
pub fn nonnegative_weight_predicate(v: &PluckerIndex, ctx: &GrassmannianContext) -> bool {
    (1..ctx.n).all(|k| weight_coefficient(v, ctx, k) >= 0)
}

/// The minimal representative with nonpositive weight: (q+1, 2q+1, ..., rq+1).
pub fn w_min(ctx: &GrassmannianContext) -> PluckerIndex {
    let entries = (1..=ctx.r).map(|i| i * ctx.q + 1).collect();
    PluckerIndex::new(entries, ctx.n).expect("w_min is always valid")
}

/// The maximal representative with nonnegative weight:
/// (1, q+1, 2q+1, ..., (r-1)q+1).
pub fn v_max(ctx: &GrassmannianContext) -> PluckerIndex {
    let entries = (0..ctx.r).map(|i| i * ctx.q + 1).collect();
    PluckerIndex::new(entries, ctx.n).expect("v_max is always valid")
}

/// One-line notation of v_m: (1, m_1+1, q+m_2+1, ..., (r-2)q+m_{r-1}+1).
pub fn v_of_m(m: &ParamM, ctx: &GrassmannianContext) -> PluckerIndex {
    let mut entries = vec![1];
    for j in 2..=ctx.r {
        entries.push((j - 2) * ctx.q + m.m(j - 1) + 1);
    }
    PluckerIndex::new(entries, ctx.n).expect("v_of_m is always valid")
}

/// Coxeter length of the minimal coset representative: sum of (w_i - i).
pub fn coset_length(w: &PluckerIndex) -> usize {
    w.entries()
        .iter()
        .enumerate()
        .map(|(i, &a)| a - (i + 1))
        .sum()
}

/// Checks that n*omega_r lies in the root lattice by expanding it in simple
/// roots with the closed-form integer coefficients min(k,r)(n - max(k,r)) and
/// verifying the defining tridiagonal identity 2c_k - c_{k-1} - c_{k+1} =
/// n*[k = r].
pub fn descent_hypothesis(ctx: &GrassmannianContext) -> bool {
    let n = ctx.n as i64;
    let r = ctx.r as i64;
    let coeff = |k: i64| -> i64 {
        if k < 1 || k > n - 1 {
            0
        } else {
            k.min(r) * (n - k.max(r))
        }
    };
    (1..n).all(|k| {
        let lhs = 2 * coeff(k) - coeff(k - 1) - coeff(k + 1);
        let rhs = if k == r { n } else { 0 };
        lhs == rhs
    })
}

/// All of I(r, n) in lexicographic order.
pub fn enumerate_indices(ctx: &GrassmannianContext) -> Vec<PluckerIndex> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (1..=ctx.r).collect();
    loop {
        out.push(PluckerIndex::new(current.clone(), ctx.n).unwrap());
        // Advance to the next strictly increasing tuple.
        let mut pos = ctx.r;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if current[pos] < ctx.n - (ctx.r - 1 - pos) {
                current[pos] += 1;
                for t in pos + 1..ctx.r {
                    current[t] = current[t - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Outcome of an exhaustive extremality search over I(r, n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtremalityVerdict {
    /// The predicate's extremal elements are exactly the stated one.
    Confirmed,
    /// The search space exceeded the configured bound.
    Skipped { space: u128, limit: u128 },
}

/// Exhaustively verifies that `w_min(ctx)` is the unique Bruhat-minimal
/// element of {w : w(n*omega_r) <= 0} and `v_max(ctx)` the unique maximal
/// element of {v : v(n*omega_r) >= 0}.
pub fn verify_extremality(ctx: &GrassmannianContext, limit: u128) -> Result<ExtremalityVerdict> {
    let space = ctx.binomial_n_r();
    if space > limit {
        return Ok(ExtremalityVerdict::Skipped { space, limit });
    }
    let all = enumerate_indices(ctx);
    let nonpos: Vec<&PluckerIndex> = all
        .iter()
        .filter(|w| nonpositive_weight_predicate(w, ctx))
        .collect();
    let nonneg: Vec<&PluckerIndex> = all
        .iter()
        .filter(|v| nonnegative_weight_predicate(v, ctx))
        .collect();

    let minimal: Vec<&PluckerIndex> = nonpos
        .iter()
        .filter(|w| nonpos.iter().all(|o| *o == **w || !bruhat_leq(o, w).unwrap()))
        .copied()
        .collect();
    let maximal: Vec<&PluckerIndex> = nonneg
        .iter()
        .filter(|v| nonneg.iter().all(|o| *o == **v || !bruhat_leq(v, o).unwrap()))
        .copied()
        .collect();

    let expected_w = w_min(ctx);
    let expected_v = v_max(ctx);
    if minimal.len() != 1 || *minimal[0] != expected_w {
        return Err(Error::Certificate(format!(
            "minimal nonpositive-weight elements {:?} differ from {}",
            minimal, expected_w
        )));
    }
    if maximal.len() != 1 || *maximal[0] != expected_v {
        return Err(Error::Certificate(format!(
            "maximal nonnegative-weight elements {:?} differ from {}",
            maximal, expected_v
        )));
    }
    Ok(ExtremalityVerdict::Confirmed)
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// binomial(a, b) over usize, saturating into u128 internally.
pub fn binomial_usize(a: usize, b: usize) -> u128 {
    binomial(a as u128, b as u128)
}
