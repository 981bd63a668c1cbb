//! The explicit chart matrix for the pair (v_m, w) and the restriction of
//! invariant standard monomials to it.
//!
//! The chart lives in an n x r matrix whose column 1 is a tail of layer-1
//! products and whose column j >= 2 carries a unit at row (j-2)q + m_{j-1} + 1,
//! a band of mixed two-layer sums through row (j-1)q + 1, and a band of
//! monomials through row jq + 1. Restricting a Plücker coordinate means taking
//! the r x r minor on its rows; for rows of invariant tableaux this minor
//! collapses to the product of diagonal entries, and the product over a whole
//! tableau splits exactly into a common monomial factor and a per-tableau
//! cofactor.

use num_bigint::BigInt;
use serde_json::json;

use crate::error::{Error, Result};
use crate::poly::{determinant, Monomial, SparsePoly, VarId};
use crate::tableau::{sequences_of_gamma, SequenceFamily, YoungTableau};
use crate::weyl::{bruhat_leq, v_of_m, w_min, GrassmannianContext, ParamM, PluckerIndex};

/// The n x r matrix of chart entries, together with its parameters.
#[derive(Clone, Debug)]
pub struct DeodharMatrix {
    ctx: GrassmannianContext,
    m: ParamM,
    /// entries[l-1][j-1] = e_{l,j}
    entries: Vec<Vec<SparsePoly>>,
    /// Original column labels in the full n x n picture: the entries of v_m.
    column_labels: Vec<usize>,
}

impl DeodharMatrix {
    pub fn ctx(&self) -> &GrassmannianContext {
        &self.ctx
    }

    pub fn m(&self) -> &ParamM {
        &self.m
    }

    /// Entry e_{l,j} with 1-based row and column.
    pub fn entry(&self, l: usize, j: usize) -> &SparsePoly {
        &self.entries[l - 1][j - 1]
    }

    pub fn column_labels(&self) -> &[usize] {
        &self.column_labels
    }

    /// One line per row, canonical entry renderings joined by single spaces.
    pub fn to_text(&self) -> String {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.render())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.ctx.n,
            "r": self.ctx.r,
            "q": self.ctx.q,
            "m": self.m.values(),
            "column_labels": self.column_labels,
            "entries": self.entries.iter().map(|row| {
                row.iter().map(|e| e.render()).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }
}

fn prod_layer1(lo: usize, hi_inclusive: usize) -> SparsePoly {
    let mut powers = Vec::new();
    for t in lo..=hi_inclusive {
        powers.push((VarId::layer1(t), 1));
    }
    SparsePoly::from_term(Monomial::from_powers(powers), BigInt::from(1))
}

fn prod_layer2(
    lo: usize,
    hi_inclusive: usize,
    m: &ParamM,
    ctx: &GrassmannianContext,
) -> SparsePoly {
    let mut powers = Vec::new();
    for t in lo..=hi_inclusive {
        let var = VarId::layer2_in_band(t, m, ctx).expect("chart bands carry a second layer");
        powers.push((var, 1));
    }
    SparsePoly::from_term(Monomial::from_powers(powers), BigInt::from(1))
}

/// Builds the chart matrix for (v_m, w).
pub fn build_matrix(m: &ParamM, ctx: &GrassmannianContext) -> DeodharMatrix {
    let (n, r, q) = (ctx.n, ctx.r, ctx.q);
    let mut entries = vec![vec![SparsePoly::zero(); r]; n];

    // Column 1: unit, then the tail products, then zeros.
    entries[0][0] = SparsePoly::one();
    for l in 2..=q + 1 {
        entries[l - 1][0] = prod_layer1(1, l - 1);
    }

    // Column j >= 2 around the unit at row s + 1 with s = (j-2)q + m_{j-1}.
    for j in 2..=r {
        let s = (j - 2) * q + m.m(j - 1);
        entries[s][j - 1] = SparsePoly::one();
        for l in s + 2..=(j - 1) * q + 1 {
            // Mixed band: sum over the split point between the two layers.
            let mut acc = prod_layer2(s + 1, l - 1, m, ctx);
            for t in s + 1..=l - 1 {
                acc = acc.add(&prod_layer2(s + 1, t - 1, m, ctx).mul(&prod_layer1(t, l - 1)));
            }
            entries[l - 1][j - 1] = acc;
        }
        for l in (j - 1) * q + 2..=j * q + 1 {
            entries[l - 1][j - 1] =
                prod_layer2(s + 1, (j - 1) * q, m, ctx).mul(&prod_layer1((j - 1) * q + 1, l - 1));
        }
    }

    DeodharMatrix {
        ctx: *ctx,
        m: m.clone(),
        entries,
        column_labels: v_of_m(m, ctx).entries().to_vec(),
    }
}

/// True iff no consecutive pair (i_{j-1}, i_j) lies entirely inside the
/// column-overlap interval [(j-2)q + m_{j-1} + 1, (j-1)q + 1].
pub fn interval_condition(idx: &PluckerIndex, m: &ParamM, ctx: &GrassmannianContext) -> bool {
    (2..=ctx.r).all(|j| {
        let lo = (j - 2) * ctx.q + m.m(j - 1) + 1;
        let hi = (j - 1) * ctx.q + 1;
        let a = idx.entry(j - 1);
        let b = idx.entry(j);
        !(lo <= a && a <= hi && lo <= b && b <= hi)
    })
}

/// True iff the Plücker coordinate can be nonzero on the Richardson variety:
/// v_m <= idx <= w componentwise.
pub fn in_support_window(
    idx: &PluckerIndex,
    m: &ParamM,
    ctx: &GrassmannianContext,
) -> Result<bool> {
    Ok(bruhat_leq(&v_of_m(m, ctx), idx)? && bruhat_leq(idx, &w_min(ctx))?)
}

/// Restriction of the Plücker coordinate to the chart: determinant of the
/// r x r minor on the rows of `idx`. Indices outside the support window
/// short-circuit to zero.
pub fn plucker_restrict(mat: &DeodharMatrix, idx: &PluckerIndex) -> Result<SparsePoly> {
    check_index(mat, idx)?;
    if !in_support_window(idx, &mat.m, &mat.ctx)? {
        return Ok(SparsePoly::zero());
    }
    determinant(&submatrix(mat, idx))
}

/// Product of diagonal entries e_{i_j, j}.
pub fn diagonal_product(mat: &DeodharMatrix, idx: &PluckerIndex) -> Result<SparsePoly> {
    check_index(mat, idx)?;
    let mut acc = SparsePoly::one();
    for j in 1..=mat.ctx.r {
        acc = acc.mul(mat.entry(idx.entry(j), j));
    }
    Ok(acc)
}

fn check_index(mat: &DeodharMatrix, idx: &PluckerIndex) -> Result<()> {
    if idx.r() != mat.ctx.r || idx.n() != mat.ctx.n {
        return Err(Error::Dimension(format!(
            "index {idx} does not fit an {}x{} chart matrix",
            mat.ctx.n, mat.ctx.r
        )));
    }
    Ok(())
}

fn submatrix(mat: &DeodharMatrix, idx: &PluckerIndex) -> Vec<Vec<SparsePoly>> {
    idx.entries()
        .iter()
        .map(|&l| mat.entries[l - 1].clone())
        .collect()
}

/// Determinant of the minor without the support-window shortcut; cross-check
/// oracle for the vanishing criterion.
pub fn restrict_determinant_oracle(mat: &DeodharMatrix, idx: &PluckerIndex) -> Result<SparsePoly> {
    check_index(mat, idx)?;
    determinant(&submatrix(mat, idx))
}

/// Product of the restrictions of all rows of a tableau.
pub fn restriction_of_tableau(mat: &DeodharMatrix, tab: &YoungTableau) -> Result<SparsePoly> {
    let mut acc = SparsePoly::one();
    for row in tab.rows() {
        acc = acc.mul(&plucker_restrict(mat, row)?);
    }
    Ok(acc)
}

/// The common factor F of the restrictions of all degree-1 invariant
/// standard monomials: a single monomial with coefficient 1, assembled
/// column by column from the pinned and two-value bands.
pub fn common_factor(m: &ParamM, ctx: &GrassmannianContext) -> SparsePoly {
    let (r, q) = (ctx.r, ctx.q);
    let mut exps: std::collections::BTreeMap<VarId, u32> = std::collections::BTreeMap::new();
    let mut bump = |var: VarId, e: usize| {
        *exps.entry(var).or_insert(0) += e as u32;
    };

    // Column 1: r copies per pinned value, one per band start, r-1 per
    // two-value band.
    for l in 1..=m.m(1) {
        for t in 1..l {
            bump(VarId::layer1(t), r);
        }
    }
    for l in m.m(1) + 1..=q + 1 {
        for t in 1..l {
            bump(VarId::layer1(t), 1);
        }
    }
    for l in m.m(1) + 2..=q + 1 {
        for t in 1..=l - 2 {
            bump(VarId::layer1(t), r - 1);
        }
    }

    // Columns 2..r-1: the same three blocks, each carrying the full layer-2
    // band of the column.
    for j in 2..r {
        let band_lo = (j - 2) * q + m.m(j - 1) + 1;
        let band_hi = (j - 1) * q;
        let mut block = |l_hi: usize, e: usize| {
            for t in band_lo..=band_hi {
                bump(VarId::layer2_in_band(t, m, ctx).expect("band variable"), e);
            }
            for t in (j - 1) * q + 1..=l_hi {
                bump(VarId::layer1(t), e);
            }
        };
        for l in 2..=m.m(j) {
            block((j - 1) * q + l - 1, r);
        }
        for l in m.m(j) + 1..=q + 1 {
            block((j - 1) * q + l - 1, j);
        }
        for l in m.m(j) + 2..=q + 1 {
            block((j - 1) * q + l - 2, r - j);
        }
    }

    // Column r: every value is pinned with multiplicity r.
    let band_lo = (r - 2) * q + m.m(r - 1) + 1;
    let band_hi = (r - 1) * q;
    for l in 2..=q + 1 {
        for t in band_lo..=band_hi {
            bump(VarId::layer2_in_band(t, m, ctx).expect("band variable"), r);
        }
        for t in (r - 1) * q + 1..=(r - 1) * q + l - 1 {
            bump(VarId::layer1(t), r);
        }
    }

    SparsePoly::from_term(
        Monomial::from_powers(exps.into_iter().collect()),
        BigInt::from(1),
    )
}

/// The cofactor of one tableau: the product over all groups and sequence
/// entries of the chart polynomials indexed by the family.
pub fn noncommon_factor(
    family: &SequenceFamily,
    m: &ParamM,
    ctx: &GrassmannianContext,
) -> SparsePoly {
    let mut acc = SparsePoly::one();
    for j in 1..ctx.r {
        for &t in family.seq(j) {
            acc = acc.mul(&x_factor(j, t, m, ctx));
        }
    }
    acc
}

/// The chart polynomial attached to value (j-1)q + l in group j: the layer-1
/// tail from l to q times the split sum over the band below l.
fn x_factor(j: usize, l: usize, m: &ParamM, ctx: &GrassmannianContext) -> SparsePoly {
    let q = ctx.q;
    let base = (j - 1) * q;
    let tail = prod_layer1(base + l, base + q);
    let mut sum = prod_layer2(base + m.m(j) + 1, base + l - 1, m, ctx);
    for b in m.m(j) + 1..=l.saturating_sub(1) {
        sum = sum.add(
            &prod_layer2(base + m.m(j) + 1, base + b - 1, m, ctx)
                .mul(&prod_layer1(base + b, base + l - 1)),
        );
    }
    tail.mul(&sum)
}

/// A verified factorization: restriction = common * noncommon, exactly.
#[derive(Clone, Debug)]
pub struct FactorizationCertificate {
    pub gamma: YoungTableau,
    pub family: SequenceFamily,
    pub restriction: SparsePoly,
    pub common: SparsePoly,
    pub noncommon: SparsePoly,
}

impl FactorizationCertificate {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "gamma": self.gamma.to_json(),
            "sequence_family": self.family.seqs(),
            "restriction": self.restriction.render(),
            "common": self.common.render(),
            "noncommon": self.noncommon.render(),
        })
    }
}

/// Restricts a degree-1 invariant tableau and certifies its factorization
/// into the common factor and its cofactor.
pub fn factorization_certificate(
    mat: &DeodharMatrix,
    gamma: &YoungTableau,
) -> Result<FactorizationCertificate> {
    let m = &mat.m;
    let ctx = &mat.ctx;
    let family = sequences_of_gamma(gamma, m, ctx)?;
    let restriction = restriction_of_tableau(mat, gamma)?;
    let common = common_factor(m, ctx);
    let noncommon = noncommon_factor(&family, m, ctx);

    // Two routes: exact product equality and the division path.
    if restriction != common.mul(&noncommon) {
        return Err(Error::Certificate(format!(
            "restriction of {gamma:?} is not common * noncommon"
        )));
    }
    let quotient = restriction.divide_exact(&common).map_err(|e| {
        Error::Certificate(format!("common factor does not divide restriction: {e}"))
    })?;
    if quotient != noncommon {
        return Err(Error::Certificate(format!(
            "restriction / common differs from the cofactor for {gamma:?}"
        )));
    }
    Ok(FactorizationCertificate {
        gamma: gamma.clone(),
        family,
        restriction,
        common,
        noncommon,
    })
}

/// Run-length block data for one group sequence: end positions b_1 < ... <
/// b_y = r - j and the strictly increasing values t_{b_1} < ... < t_{b_y}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockStructure {
    pub ends: Vec<usize>,
    pub values: Vec<usize>,
}

impl BlockStructure {
    pub fn new(ends: Vec<usize>, values: Vec<usize>) -> Result<Self> {
        if ends.is_empty() || ends.len() != values.len() {
            return Err(Error::Domain(
                "block ends and values must be nonempty and of equal length".into(),
            ));
        }
        for w in ends.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::Domain(format!(
                    "block ends must be strictly increasing: {ends:?}"
                )));
            }
        }
        for w in values.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::Domain(format!(
                    "block values must be strictly increasing: {values:?}"
                )));
            }
        }
        if ends[0] == 0 {
            return Err(Error::Domain("block ends must be positive".into()));
        }
        Ok(BlockStructure { ends, values })
    }

    /// Blocks of a non-decreasing sequence: maximal runs of equal values.
    pub fn of_sequence(seq: &[usize]) -> Result<Self> {
        if seq.is_empty() {
            return Err(Error::Domain(
                "cannot take blocks of an empty sequence".into(),
            ));
        }
        let mut ends = Vec::new();
        let mut values = Vec::new();
        for (i, &v) in seq.iter().enumerate() {
            if values.last() == Some(&v) {
                *ends.last_mut().unwrap() = i + 1;
            } else {
                ends.push(i + 1);
                values.push(v);
            }
        }
        BlockStructure::new(ends, values)
    }

    /// The flattened sequence t_1 <= ... <= t_d the blocks describe.
    pub fn expand(&self) -> Vec<usize> {
        let mut seq = Vec::new();
        let mut start = 0;
        for (i, &end) in self.ends.iter().enumerate() {
            for _ in start..end {
                seq.push(self.values[i]);
            }
            start = end;
        }
        seq
    }
}

/// Verifies the monomial identity that collapses block-exponent products to
/// the per-entry tail products: with d = r - j and blocks (b_i, t_i),
///
/// prod_{i<y} (prod_{l=t_i}^{t_{i+1}-1} c_{(j-1)q+l,1}^{b_i}) *
/// (prod_{l=t_y}^{q} c_{(j-1)q+l,1}^{d})
///   = prod_{m=1}^{d} prod_{l=t(m)}^{q} c_{(j-1)q+l,1}.
pub fn appendix_identity(
    blocks: &BlockStructure,
    j: usize,
    m: &ParamM,
    ctx: &GrassmannianContext,
) -> Result<bool> {
    if j < 1 || j > ctx.r - 1 {
        return Err(Error::Domain(format!("group index {j} out of range")));
    }
    let d = ctx.r - j;
    if *blocks.ends.last().unwrap() != d {
        return Err(Error::Domain(format!(
            "block ends must finish at r - j = {d}, got {:?}",
            blocks.ends
        )));
    }
    for &t in &blocks.values {
        if t < m.m(j) + 1 || t > ctx.q + 1 {
            return Err(Error::Domain(format!(
                "block value {t} outside [{}, {}]",
                m.m(j) + 1,
                ctx.q + 1
            )));
        }
    }
    let base = (j - 1) * ctx.q;
    let y = blocks.ends.len();

    let mut lhs = SparsePoly::one();
    for i in 0..y - 1 {
        for l in blocks.values[i]..blocks.values[i + 1] {
            lhs = lhs.mul(&SparsePoly::from_term(
                Monomial::from_powers(vec![(VarId::layer1(base + l), blocks.ends[i] as u32)]),
                BigInt::from(1),
            ));
        }
    }
    for l in blocks.values[y - 1]..=ctx.q {
        lhs = lhs.mul(&SparsePoly::from_term(
            Monomial::from_powers(vec![(VarId::layer1(base + l), d as u32)]),
            BigInt::from(1),
        ));
    }

    let mut rhs = SparsePoly::one();
    for t in blocks.expand() {
        rhs = rhs.mul(&prod_layer1(base + t, base + ctx.q));
    }

    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;
    use crate::tableau::{enumerate_invariant, SearchLimits};
    use crate::weyl::enumerate_indices;

    fn ctx(r: usize, q: usize) -> GrassmannianContext {
        GrassmannianContext::new(r, q).unwrap()
    }

    fn param(values: &[usize], c: &GrassmannianContext) -> ParamM {
        ParamM::new(values.to_vec(), c).unwrap()
    }

    fn example_matrix() -> DeodharMatrix {
        let c = ctx(3, 3);
        build_matrix(&param(&[2, 2], &c), &c)
    }

    #[test]
    fn matrix_matches_printed_example() {
        let mat = example_matrix();
        let expected = [
            ["1", "0", "0"],
            ["c1,1", "0", "0"],
            ["c1,1*c2,1", "1", "0"],
            ["c1,1*c2,1*c3,1", "c3,1+c3,2", "0"],
            ["0", "c3,2*c4,1", "0"],
            ["0", "c3,2*c4,1*c5,1", "1"],
            ["0", "c3,2*c4,1*c5,1*c6,1", "c6,1+c6,2"],
            ["0", "0", "c6,2*c7,1"],
            ["0", "0", "c6,2*c7,1*c8,1"],
            ["0", "0", "c6,2*c7,1*c8,1*c9,1"],
        ];
        for (l, row) in expected.iter().enumerate() {
            for (j, want) in row.iter().enumerate() {
                assert_eq!(
                    mat.entry(l + 1, j + 1).render(),
                    *want,
                    "entry ({}, {})",
                    l + 1,
                    j + 1
                );
            }
        }
        assert_eq!(mat.column_labels(), &[1, 3, 6]);
    }

    #[test]
    fn first_column_zero_tail() {
        let c = ctx(4, 2);
        let mat = build_matrix(&param(&[1, 2, 1], &c), &c);
        for l in c.q + 2..=c.n {
            assert!(mat.entry(l, 1).is_zero());
        }
    }

    #[test]
    fn small_case_bands() {
        // (7,2,3), m = (1): unit at row 2, mixed band through row 4.
        let c = ctx(2, 3);
        let mat = build_matrix(&param(&[1], &c), &c);
        assert_eq!(mat.entry(2, 2).render(), "1");
        assert_eq!(mat.entry(3, 2).render(), "c2,1+c2,2");
        assert_eq!(mat.entry(4, 2).render(), "c2,1*c3,1+c2,2*c3,1+c2,2*c3,2");
        assert_eq!(mat.entry(5, 2).render(), "c2,2*c3,2*c4,1");
        assert_eq!(mat.entry(7, 2).render(), "c2,2*c3,2*c4,1*c5,1*c6,1");
    }

    #[test]
    fn interval_condition_examples() {
        let c = ctx(3, 3);
        let m = param(&[2, 2], &c);
        // Every row of every invariant tableau passes.
        for tab in enumerate_invariant(&m, &c, 1, &SearchLimits::default()).unwrap() {
            for row in tab.rows() {
                assert!(interval_condition(row, &m, &c), "row {row} failed");
            }
        }
        // Membership is checked against [m_1+1, q+1] = [3,4] for the first
        // pair and [q+m_2+1, 2q+1] = [6,7] for the second; (1,3,4) has no
        // pair inside a single interval.
        assert!(interval_condition(&c.index(vec![1, 3, 4]).unwrap(), &m, &c));
        // (3,4,8) puts both first entries inside [3,4].
        assert!(!interval_condition(&c.index(vec![3, 4, 8]).unwrap(), &m, &c));
        assert!(interval_condition(&c.index(vec![1, 4, 7]).unwrap(), &m, &c));
    }

    #[test]
    fn restriction_examples() {
        let mat = example_matrix();
        let c = *mat.ctx();
        let one = plucker_restrict(&mat, &c.index(vec![1, 3, 6]).unwrap()).unwrap();
        assert_eq!(one, SparsePoly::one());

        let p = plucker_restrict(&mat, &c.index(vec![2, 4, 7]).unwrap()).unwrap();
        let expected = SparsePoly::var(VarId::layer1(1))
            .mul(&SparsePoly::var(VarId::layer1(3)).add(&SparsePoly::var(VarId::layer2(3))))
            .mul(&SparsePoly::var(VarId::layer1(6)).add(&SparsePoly::var(VarId::layer2(6))));
        assert_eq!(p, expected);

        let z = plucker_restrict(&mat, &c.index(vec![8, 9, 10]).unwrap()).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn restriction_vanishes_exactly_off_window() {
        let mat = example_matrix();
        let c = *mat.ctx();
        let m = param(&[2, 2], &c);
        for idx in enumerate_indices(&c) {
            let direct = restrict_determinant_oracle(&mat, &idx).unwrap();
            let shortcut = plucker_restrict(&mat, &idx).unwrap();
            assert_eq!(direct, shortcut, "mismatch at {idx}");
            assert_eq!(
                !direct.is_zero(),
                in_support_window(&idx, &m, &c).unwrap(),
                "vanishing criterion failed at {idx}"
            );
        }
    }

    #[test]
    fn diagonal_product_matches_determinant_on_rows() {
        let mat = example_matrix();
        let c = *mat.ctx();
        let m = param(&[2, 2], &c);
        for tab in enumerate_invariant(&m, &c, 1, &SearchLimits::default()).unwrap() {
            for row in tab.rows() {
                assert!(interval_condition(row, &m, &c));
                assert_eq!(
                    diagonal_product(&mat, row).unwrap(),
                    plucker_restrict(&mat, row).unwrap()
                );
            }
        }
        let diag = diagonal_product(&mat, &c.index(vec![1, 3, 6]).unwrap()).unwrap();
        assert_eq!(diag, SparsePoly::one());
    }

    #[test]
    fn common_factor_properties() {
        let c = ctx(3, 3);
        let m = param(&[2, 2], &c);
        let f = common_factor(&m, &c);
        assert!(f.is_unit_monomial());

        let mut ones = std::collections::BTreeMap::new();
        for var in f.variables() {
            ones.insert(var, 1u64);
        }
        assert_eq!(f.eval_mod_p(&ones, crate::poly::DEFAULT_PRIME).unwrap(), 1);

        // F divides every restriction.
        let mat = build_matrix(&m, &c);
        for tab in enumerate_invariant(&m, &c, 1, &SearchLimits::default()).unwrap() {
            let restriction = restriction_of_tableau(&mat, &tab).unwrap();
            assert!(restriction.divide_exact(&f).is_ok());
        }
    }

    #[test]
    fn common_factor_is_the_monomial_gcd() {
        // Independent gcd oracle: the componentwise minimum over all
        // restrictions of the largest monomial dividing each one.
        for (r, q, mv) in [(3usize, 3usize, vec![2usize, 2]), (2, 3, vec![1]), (3, 2, vec![1, 2])] {
            let c = ctx(r, q);
            let m = param(&mv, &c);
            let mat = build_matrix(&m, &c);
            let tabs = enumerate_invariant(&m, &c, 1, &SearchLimits::default()).unwrap();
            let mut gcd: Option<crate::poly::Monomial> = None;
            for tab in &tabs {
                let content = restriction_of_tableau(&mat, tab).unwrap().monomial_content();
                gcd = Some(match gcd {
                    None => content,
                    Some(g) => g.gcd(&content),
                });
            }
            let f = common_factor(&m, &c);
            let (f_mono, _) = f.leading().unwrap();
            assert_eq!(gcd.unwrap(), *f_mono, "gcd mismatch for m={mv:?}");
        }
    }

    #[test]
    fn common_factor_degenerate_at_maximal_m() {
        // With every m_j = q there is a single tableau and no cofactor, so F
        // is its whole restriction.
        let c = ctx(3, 2);
        let m = param(&[2, 2], &c);
        let mat = build_matrix(&m, &c);
        let tabs = enumerate_invariant(&m, &c, 1, &SearchLimits::default()).unwrap();
        assert_eq!(tabs.len(), 1);
        let restriction = restriction_of_tableau(&mat, &tabs[0]).unwrap();
        assert_eq!(common_factor(&m, &c), restriction);
    }

    #[test]
    fn noncommon_factor_examples() {
        let c = ctx(3, 3);
        let m = param(&[2, 2], &c);
        let fam = |seqs: Vec<Vec<usize>>| SequenceFamily::new(seqs, &m, &c).unwrap();

        let p = noncommon_factor(&fam(vec![vec![3, 3], vec![3]]), &m, &c);
        assert_eq!(p.render(), "c3,1^2*c6,1");

        let p = noncommon_factor(&fam(vec![vec![4, 4], vec![4]]), &m, &c);
        let x4 = SparsePoly::var(VarId::layer1(3)).add(&SparsePoly::var(VarId::layer2(3)));
        let x7 = SparsePoly::var(VarId::layer1(6)).add(&SparsePoly::var(VarId::layer2(6)));
        assert_eq!(p, x4.pow(2).mul(&x7));

        let p = noncommon_factor(&fam(vec![vec![3, 4], vec![3]]), &m, &c);
        let x3 = SparsePoly::var(VarId::layer1(3));
        let x6 = SparsePoly::var(VarId::layer1(6));
        assert_eq!(p, x3.mul(&x4).mul(&x6));
    }

    #[test]
    fn certificates_validate_small_cases() {
        for (r, q, mv) in [
            (3usize, 3usize, vec![2usize, 2]),
            (2, 3, vec![1]),
            (2, 3, vec![2]),
        ] {
            let c = ctx(r, q);
            let m = param(&mv, &c);
            let mat = build_matrix(&m, &c);
            let tabs = enumerate_invariant(&m, &c, 1, &SearchLimits::default()).unwrap();
            assert!(!tabs.is_empty());
            for tab in &tabs {
                let cert = factorization_certificate(&mat, tab).unwrap();
                assert_eq!(cert.restriction, cert.common.mul(&cert.noncommon));
            }
        }
    }

    #[test]
    fn certificate_json_shape() {
        let c = ctx(3, 3);
        let m = param(&[2, 2], &c);
        let mat = build_matrix(&m, &c);
        let tabs = enumerate_invariant(&m, &c, 1, &SearchLimits::default()).unwrap();
        let cert = factorization_certificate(&mat, &tabs[0]).unwrap();
        let js = cert.to_json();
        for key in [
            "gamma",
            "sequence_family",
            "restriction",
            "common",
            "noncommon",
        ] {
            assert!(js.get(key).is_some(), "missing key {key}");
        }
    }

    #[test]
    fn blocks_of_sequences() {
        let b = BlockStructure::of_sequence(&[3, 3]).unwrap();
        assert_eq!(b.ends, vec![2]);
        assert_eq!(b.values, vec![3]);
        assert_eq!(b.expand(), vec![3, 3]);

        let b = BlockStructure::of_sequence(&[3, 4, 4, 6]).unwrap();
        assert_eq!(b.ends, vec![1, 3, 4]);
        assert_eq!(b.values, vec![3, 4, 6]);
        assert_eq!(b.expand(), vec![3, 4, 4, 6]);

        assert!(BlockStructure::of_sequence(&[4, 3]).is_err());
    }

    #[test]
    fn appendix_identity_examples() {
        let c = ctx(3, 3);
        let m = param(&[2, 2], &c);

        // Single block: both sides are the same tail power.
        let single = BlockStructure::new(vec![2], vec![3]).unwrap();
        assert!(appendix_identity(&single, 1, &m, &c).unwrap());

        // Two blocks with values (3, 4) at j = 1.
        let two = BlockStructure::new(vec![1, 2], vec![3, 4]).unwrap();
        assert!(appendix_identity(&two, 1, &m, &c).unwrap());
    }

    #[test]
    fn appendix_identity_from_tableaux() {
        let c = ctx(3, 3);
        let m = param(&[2, 2], &c);
        for tab in enumerate_invariant(&m, &c, 1, &SearchLimits::default()).unwrap() {
            let fam = sequences_of_gamma(&tab, &m, &c).unwrap();
            for j in 1..c.r {
                let blocks = BlockStructure::of_sequence(fam.seq(j)).unwrap();
                assert!(appendix_identity(&blocks, j, &m, &c).unwrap());
            }
        }
    }

    fn shuffle(v: &mut [usize], rng: &mut SplitMix64) {
        for i in (1..v.len()).rev() {
            let j = rng.below(i as u64 + 1) as usize;
            v.swap(i, j);
        }
    }

    #[test]
    fn appendix_identity_randomized() {
        let mut rng = SplitMix64::new(0xA11CE);
        let mut done = 0;
        while done < 60 {
            let d = rng.range(1, 5) as usize;
            let q = rng.range(1, 6) as usize;
            let j = rng.range(1, 3) as usize;
            let r = d + j;
            let c = match GrassmannianContext::new(r, q) {
                Ok(c) => c,
                Err(_) => continue,
            };
            let mj = rng.range(1, q as u64) as usize;
            let mut mv = vec![1usize; r - 1];
            mv[j - 1] = mj;
            let m = param(&mv, &c);
            // Random block structure over [m_j + 1, q + 1].
            let span = q + 1 - mj;
            let max_blocks = span.min(d);
            let y = rng.range(1, max_blocks as u64) as usize;
            let mut pool: Vec<usize> = (1..d).collect();
            shuffle(&mut pool, &mut rng);
            let mut ends: Vec<usize> = pool.into_iter().take(y - 1).collect();
            ends.push(d);
            ends.sort_unstable();
            let mut vals: Vec<usize> = (mj + 1..=q + 1).collect();
            shuffle(&mut vals, &mut rng);
            let mut vals: Vec<usize> = vals.into_iter().take(y).collect();
            vals.sort_unstable();
            let blocks = BlockStructure::new(ends, vals).unwrap();
            assert!(appendix_identity(&blocks, j, &m, &c).unwrap());
            done += 1;
        }
    }

    #[test]
    fn malformed_blocks_rejected() {
        let c = ctx(3, 3);
        let m = param(&[2, 2], &c);
        assert!(BlockStructure::new(vec![2, 1], vec![3, 4]).is_err());
        assert!(BlockStructure::new(vec![1, 2], vec![4, 4]).is_err());
        let ok = BlockStructure::new(vec![1], vec![3]).unwrap();
        // Wrong terminal end for j = 1 (needs r - j = 2).
        assert!(appendix_identity(&ok, 1, &m, &c).is_err());
        // Value below m_j + 1.
        let low = BlockStructure::new(vec![2], vec![2]).unwrap();
        assert!(appendix_identity(&low, 1, &m, &c).is_err());
    }
}
