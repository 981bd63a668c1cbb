//! The homogeneous quotient coordinates and the identification of the
//! quotient with a product of projective spaces.
//!
//! Group j (1 <= j <= r-1) carries the coordinates X_{(j-1)q+l} for
//! l = m_j+1, ..., q+1, which are triangular in the layer-2 band variables:
//! each new coordinate introduces exactly one new layer-2 variable. Their
//! algebraic independence is certified by the rank of a modular Jacobian at
//! random points, the section basis is matched against the multidegree
//! monomial basis, and the resulting product of projective spaces can be
//! prescribed freely via [`realize_product`].

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::json;

use crate::deodhar::noncommon_factor;
use crate::error::{Error, Result};
use crate::poly::{invmod, mulmod, Monomial, SparsePoly, VarId, DEFAULT_PRIME};
use crate::rng::SplitMix64;
use crate::tableau::{
    enumerate_invariant, nondecreasing_sequences, sequences_of_gamma, SearchLimits,
};
use crate::weyl::{GrassmannianContext, ParamM};

/// One group of quotient coordinates: the chart polynomials X_{(j-1)q+l}
/// for l in [m_j + 1, q + 1], serving as homogeneous coordinates on a
/// projective space of dimension q - m_j.
#[derive(Clone, Debug)]
pub struct CoordinateGroup {
    pub j: usize,
    pub bundle_degree: usize,
    /// (l, X_{(j-1)q+l}) in increasing l.
    pub coords: Vec<(usize, SparsePoly)>,
}

impl CoordinateGroup {
    pub fn x(&self, l: usize) -> &SparsePoly {
        &self
            .coords
            .iter()
            .find(|(ll, _)| *ll == l)
            .expect("coordinate index in range")
            .1
    }

    pub fn projective_dimension(&self) -> usize {
        self.coords.len() - 1
    }
}

/// The full coordinate system over all groups.
#[derive(Clone, Debug)]
pub struct QuotientCoordinateSystem {
    ctx: GrassmannianContext,
    m: ParamM,
    groups: Vec<CoordinateGroup>,
}

impl QuotientCoordinateSystem {
    pub fn ctx(&self) -> &GrassmannianContext {
        &self.ctx
    }

    pub fn m(&self) -> &ParamM {
        &self.m
    }

    pub fn groups(&self) -> &[CoordinateGroup] {
        &self.groups
    }

    pub fn group(&self, j: usize) -> &CoordinateGroup {
        &self.groups[j - 1]
    }

    pub fn num_coordinates(&self) -> usize {
        self.groups.iter().map(|g| g.coords.len()).sum()
    }
}

fn layer1_product(base: usize, lo: usize, hi: usize) -> SparsePoly {
    let powers: Vec<(VarId, u32)> = (lo..=hi).map(|a| (VarId::layer1(base + a), 1)).collect();
    SparsePoly::from_term(Monomial::from_powers(powers), BigInt::from(1))
}

fn layer2_product(
    base: usize,
    lo: usize,
    hi: usize,
    m: &ParamM,
    ctx: &GrassmannianContext,
) -> SparsePoly {
    let powers: Vec<(VarId, u32)> = (lo..=hi)
        .map(|a| {
            (
                VarId::layer2_in_band(base + a, m, ctx).expect("band variable"),
                1,
            )
        })
        .collect();
    SparsePoly::from_term(Monomial::from_powers(powers), BigInt::from(1))
}

/// The split part g_{(j,l)}: the tail times the sum over split points below l.
fn g_part(j: usize, l: usize, m: &ParamM, ctx: &GrassmannianContext) -> SparsePoly {
    let base = (j - 1) * ctx.q;
    let tail = layer1_product(base, l, ctx.q);
    let mut sum = SparsePoly::zero();
    for b in m.m(j) + 1..=l - 1 {
        sum = sum.add(
            &layer2_product(base, m.m(j) + 1, b - 1, m, ctx).mul(&layer1_product(base, b, l - 1)),
        );
    }
    tail.mul(&sum)
}

/// The coefficient part f_{(j,l)} of the newest layer-2 variable.
fn f_part(j: usize, l: usize, m: &ParamM, ctx: &GrassmannianContext) -> SparsePoly {
    let base = (j - 1) * ctx.q;
    layer1_product(base, l, ctx.q).mul(&layer2_product(base, m.m(j) + 1, l - 2, m, ctx))
}

/// Builds all quotient coordinates. The coordinate for l = m_j + 1 is the
/// pure layer-1 monomial; each later one is assembled as
/// f_{(j,l)} * c_{(j-1)q+l-1,2} + g_{(j,l)}.
pub fn build_coordinates(m: &ParamM, ctx: &GrassmannianContext) -> QuotientCoordinateSystem {
    let mut groups = Vec::with_capacity(ctx.r - 1);
    for j in 1..ctx.r {
        let base = (j - 1) * ctx.q;
        let mut coords = Vec::with_capacity(ctx.q - m.m(j) + 1);
        coords.push((m.m(j) + 1, layer1_product(base, m.m(j) + 1, ctx.q)));
        for l in m.m(j) + 2..=ctx.q + 1 {
            let pivot = VarId::layer2_in_band(base + l - 1, m, ctx).expect("band variable");
            let x = f_part(j, l, m, ctx)
                .mul(&SparsePoly::var(pivot))
                .add(&g_part(j, l, m, ctx));
            coords.push((l, x));
        }
        groups.push(CoordinateGroup {
            j,
            bundle_degree: ctx.r - j,
            coords,
        });
    }
    QuotientCoordinateSystem {
        ctx: *ctx,
        m: m.clone(),
        groups,
    }
}

/// Checks the triangular structure: for every l >= m_j + 2, the terms of
/// X_{(j-1)q+l} free of c_{(j-1)q+l-1,2} form g, the rest divides exactly by
/// that variable, and the quotient involves no layer-2 variable with index
/// >= (j-1)q + l - 1.
pub fn verify_triangularity(sys: &QuotientCoordinateSystem) -> Result<bool> {
    let q = sys.ctx.q;
    for group in &sys.groups {
        let j = group.j;
        let base = (j - 1) * q;
        let m_j = sys.m.m(j);

        // The first coordinate is the pure band monomial.
        let first = group.x(m_j + 1);
        if *first != layer1_product(base, m_j + 1, q) {
            return Ok(false);
        }

        for l in m_j + 2..=q + 1 {
            let x = group.x(l);
            let pivot = VarId::layer2(base + l - 1);
            let pivot_poly = SparsePoly::var(pivot);
            let mut g = SparsePoly::zero();
            for (mono, coeff) in x.terms_desc() {
                if mono.exponent(pivot) == 0 {
                    g = g.add(&SparsePoly::from_term(mono.clone(), coeff.clone()));
                }
            }
            let f = match x.sub(&g).divide_exact(&pivot_poly) {
                Ok(f) => f,
                Err(_) => return Ok(false),
            };
            if f.is_zero() {
                return Ok(false);
            }
            let clean = |p: &SparsePoly| {
                p.variables()
                    .iter()
                    .all(|v| v.layer() != 2 || v.index() < base + l - 1)
            };
            if !clean(&f) || !clean(&g) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of the randomized independence certification.
#[derive(Clone, Debug)]
pub struct IndependenceReport {
    pub passed: bool,
    /// Achieved rank, counting each constant group (m_j = q) as 1 by the
    /// nonvanishing convention.
    pub rank: usize,
    pub expected_rank: usize,
    pub constant_groups: usize,
    pub trials: u32,
    pub seed: u64,
}

/// Rank of the Jacobian of `polys` with respect to `vars`, evaluated at the
/// given point modulo `prime`.
pub fn modular_jacobian_rank(
    polys: &[SparsePoly],
    vars: &[VarId],
    point: &BTreeMap<VarId, u64>,
    prime: u64,
) -> Result<usize> {
    let mut matrix: Vec<Vec<u64>> = Vec::with_capacity(polys.len());
    for p in polys {
        let mut row = Vec::with_capacity(vars.len());
        for &v in vars {
            row.push(p.partial_derivative(v).eval_mod_p(point, prime)?);
        }
        matrix.push(row);
    }
    Ok(rank_mod_p(matrix, prime))
}

fn rank_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let pivot = (row..rows).find(|&i| !m[i][col].is_multiple_of(p));
        let Some(pivot) = pivot else { continue };
        m.swap(row, pivot);
        let inv = invmod(m[row][col] % p, p);
        let pivot_row = m[row].clone();
        for lower in m.iter_mut().skip(row + 1) {
            let factor = mulmod(lower[col] % p, inv, p);
            if factor == 0 {
                continue;
            }
            for (c, cell) in lower.iter_mut().enumerate().skip(col) {
                let sub = mulmod(factor, pivot_row[c] % p, p);
                *cell = (*cell % p + p - sub) % p;
            }
        }
        row += 1;
        rank += 1;
    }
    rank
}

/// The variables the Jacobian is taken against: the layer-2 band of each
/// non-constant group plus the last layer-1 band variable of that group.
pub fn jacobian_variables(m: &ParamM, ctx: &GrassmannianContext) -> Vec<VarId> {
    let mut vars = Vec::new();
    for j in 1..ctx.r {
        if m.m(j) == ctx.q {
            continue;
        }
        for z in (j - 1) * ctx.q + m.m(j) + 1..=j * ctx.q {
            vars.push(VarId::layer2(z));
        }
        vars.push(VarId::layer1(j * ctx.q));
    }
    vars
}

/// Certifies algebraic independence of the coordinates by modular Jacobian
/// rank at random points. A group with m_j = q has the single constant
/// coordinate 1; it is checked for nonvanishing and counted as rank 1.
pub fn independence_check(
    sys: &QuotientCoordinateSystem,
    trials: u32,
    seed: u64,
) -> Result<IndependenceReport> {
    if trials == 0 {
        return Err(Error::Domain("need at least one trial".into()));
    }
    let ctx = &sys.ctx;
    let m = &sys.m;

    let mut constant_groups = 0;
    let mut polys: Vec<SparsePoly> = Vec::new();
    let mut constants_ok = true;
    for group in sys.groups() {
        if m.m(group.j) == ctx.q {
            constant_groups += 1;
            if *group.x(ctx.q + 1) != SparsePoly::one() {
                constants_ok = false;
            }
        } else {
            polys.extend(group.coords.iter().map(|(_, x)| x.clone()));
        }
    }
    let vars = jacobian_variables(m, ctx);
    let expected_nonconstant = polys.len();
    let expected_rank = expected_nonconstant + constant_groups;

    let mut rng = SplitMix64::new(seed);
    let mut best = 0;
    let mut used = 0;
    for _ in 0..trials {
        used += 1;
        let mut point = BTreeMap::new();
        for i in 1..=ctx.r * ctx.q {
            point.insert(VarId::layer1(i), rng.below(DEFAULT_PRIME));
            point.insert(VarId::layer2(i), rng.below(DEFAULT_PRIME));
        }
        let rank = modular_jacobian_rank(&polys, &vars, &point, DEFAULT_PRIME)?;
        best = best.max(rank);
        if rank == expected_nonconstant {
            break;
        }
    }
    Ok(IndependenceReport {
        passed: constants_ok && best == expected_nonconstant,
        rank: best + constant_groups,
        expected_rank,
        constant_groups,
        trials: used,
        seed,
    })
}

/// Outcome of matching the invariant sections against the multidegree
/// monomial basis of the product of projective spaces.
#[derive(Clone, Debug)]
pub struct SegreReport {
    /// Every tableau cofactor equals the corresponding product of quotient
    /// coordinates.
    pub cofactors_match: bool,
    /// Distinct tableaux give distinct coordinate monomials.
    pub injective: bool,
    /// The image is the whole multidegree monomial basis.
    pub basis_complete: bool,
    pub sections: usize,
    pub expected_sections: u128,
}

impl SegreReport {
    pub fn passed(&self) -> bool {
        self.cofactors_match
            && self.injective
            && self.basis_complete
            && self.sections as u128 == self.expected_sections
    }
}

/// For every degree-1 invariant tableau, checks that its cofactor equals the
/// product of quotient coordinates named by its sequence family, and that
/// the family-to-monomial map is a bijection onto the multidegree basis.
pub fn segre_consistency(
    m: &ParamM,
    ctx: &GrassmannianContext,
    limits: &SearchLimits,
) -> Result<SegreReport> {
    let sys = build_coordinates(m, ctx);
    let tabs = enumerate_invariant(m, ctx, 1, limits)?;
    let mut cofactors_match = true;
    // Exponent vectors, one entry per (group, l).
    let mut seen: Vec<Vec<(usize, usize, u32)>> = Vec::with_capacity(tabs.len());
    for tab in &tabs {
        let family = sequences_of_gamma(tab, m, ctx)?;
        let mut product = SparsePoly::one();
        let mut expo: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for j in 1..ctx.r {
            for &l in family.seq(j) {
                product = product.mul(sys.group(j).x(l));
                *expo.entry((j, l)).or_insert(0) += 1;
            }
        }
        if product != noncommon_factor(&family, m, ctx) {
            cofactors_match = false;
        }
        seen.push(expo.into_iter().map(|((j, l), e)| (j, l, e)).collect());
    }

    let mut sorted = seen.clone();
    sorted.sort();
    sorted.dedup();
    let injective = sorted.len() == seen.len();

    // Independent enumeration of the multidegree basis: per group, all
    // degree-(r-j) monomials in the q-m_j+1 coordinates, as multisets of l.
    let mut basis: Vec<Vec<(usize, usize, u32)>> = vec![Vec::new()];
    for j in 1..ctx.r {
        let seqs = nondecreasing_sequences(ctx.r - j, m.m(j) + 1, ctx.q + 1);
        let mut next = Vec::with_capacity(basis.len() * seqs.len());
        for prefix in &basis {
            for seq in &seqs {
                let mut expo: BTreeMap<usize, u32> = BTreeMap::new();
                for &l in seq {
                    *expo.entry(l).or_insert(0) += 1;
                }
                let mut item = prefix.clone();
                item.extend(expo.into_iter().map(|(l, e)| (j, l, e)));
                next.push(item);
            }
        }
        basis = next;
    }
    let mut basis_sorted = basis;
    basis_sorted.sort();
    basis_sorted.dedup();
    let basis_complete = sorted == basis_sorted;

    Ok(SegreReport {
        cofactors_match,
        injective,
        basis_complete,
        sections: tabs.len(),
        expected_sections: crate::tableau::invariant_count_formula(m, ctx),
    })
}

/// One projective factor of the quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Factor {
    pub dim: usize,
    pub degree: usize,
}

/// The quotient identified as a polarized product of projective spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientIdentification {
    pub factors: Vec<Factor>,
    pub sections: u128,
    pub dimension: usize,
}

impl QuotientIdentification {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "factors": self.factors.iter().map(|f| json!({"dim": f.dim, "degree": f.degree})).collect::<Vec<_>>(),
            "sections": self.sections.to_string(),
            "dimension": self.dimension,
        })
    }

    pub fn is_point(&self) -> bool {
        self.factors.iter().all(|f| f.dim == 0)
    }
}

/// Factor j has projective dimension q - m_j and bundle degree r - j;
/// dimension-0 factors are retained to keep the factor-to-group
/// correspondence stable.
pub fn identify_quotient(m: &ParamM, ctx: &GrassmannianContext) -> QuotientIdentification {
    let factors: Vec<Factor> = (1..ctx.r)
        .map(|j| Factor {
            dim: ctx.q - m.m(j),
            degree: ctx.r - j,
        })
        .collect();
    QuotientIdentification {
        sections: crate::tableau::invariant_count_formula(m, ctx),
        dimension: factors.iter().map(|f| f.dim).sum(),
        factors,
    }
}

/// Produces parameters whose quotient is exactly the prescribed product
/// P^{a_1} x ... x P^{a_l}: take q = max(a) + 1, r = l + 1, m_i = q - a_i.
pub fn realize_product(targets: &[i64]) -> Result<(GrassmannianContext, ParamM)> {
    if targets.is_empty() {
        return Err(Error::Domain("need at least one target dimension".into()));
    }
    if let Some(&bad) = targets.iter().find(|&&a| a < 0) {
        return Err(Error::Domain(format!(
            "projective dimensions must be non-negative, got {bad}"
        )));
    }
    let dims: Vec<usize> = targets.iter().map(|&a| a as usize).collect();
    let l = dims.len();
    let q = dims.iter().max().unwrap() + 1;
    let ctx = GrassmannianContext::new(l + 1, q)?;
    let m = ParamM::new(dims.iter().map(|&a| q - a).collect(), &ctx)?;
    Ok((ctx, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(r: usize, q: usize) -> GrassmannianContext {
        GrassmannianContext::new(r, q).unwrap()
    }

    fn param(values: &[usize], c: &GrassmannianContext) -> ParamM {
        ParamM::new(values.to_vec(), c).unwrap()
    }

    #[test]
    fn coordinates_for_printed_example() {
        let c = ctx(3, 3);
        let m = param(&[2, 2], &c);
        let sys = build_coordinates(&m, &c);
        assert_eq!(sys.num_coordinates(), 4);
        assert_eq!(sys.group(1).x(3).render(), "c3,1");
        assert_eq!(sys.group(1).x(4).render(), "c3,1+c3,2");
        assert_eq!(sys.group(2).x(3).render(), "c6,1");
        assert_eq!(sys.group(2).x(4).render(), "c6,1+c6,2");
        assert_eq!(sys.group(1).bundle_degree, 2);
        assert_eq!(sys.group(2).bundle_degree, 1);
    }

    #[test]
    fn coordinates_for_small_case() {
        // (7,2,3), m = (1): three coordinates on P^2.
        let c = ctx(2, 3);
        let m = param(&[1], &c);
        let sys = build_coordinates(&m, &c);
        let g = sys.group(1);
        assert_eq!(g.projective_dimension(), 2);
        assert_eq!(g.x(2).render(), "c2,1*c3,1");
        assert_eq!(g.x(3).render(), "c2,1*c3,1+c2,2*c3,1");
        assert_eq!(g.x(4).render(), "c2,1*c3,1+c2,2*c3,1+c2,2*c3,2");
    }

    #[test]
    fn degenerate_group_is_single_constant() {
        let c = ctx(3, 3);
        let m = param(&[3, 3], &c);
        let sys = build_coordinates(&m, &c);
        for j in 1..c.r {
            assert_eq!(sys.group(j).coords.len(), 1);
            assert_eq!(*sys.group(j).x(c.q + 1), SparsePoly::one());
        }
    }

    #[test]
    fn triangularity_across_cases() {
        for (r, q, mv) in [
            (3usize, 3usize, vec![2usize, 2]),
            (3, 3, vec![1, 1]),
            (3, 3, vec![1, 3]),
            (2, 3, vec![1]),
            (2, 5, vec![2]),
            (4, 3, vec![2, 2, 2]),
        ] {
            let c = ctx(r, q);
            let m = param(&mv, &c);
            let sys = build_coordinates(&m, &c);
            assert!(verify_triangularity(&sys).unwrap(), "failed for m={mv:?}");
        }
    }

    #[test]
    fn independence_examples() {
        let c = ctx(3, 3);
        let m = param(&[2, 2], &c);
        let sys = build_coordinates(&m, &c);
        let report = independence_check(&sys, 3, 0xFEED).unwrap();
        assert!(report.passed);
        assert_eq!(report.rank, 4);
        assert_eq!(report.expected_rank, 4);

        // Both groups degenerate: rank comes entirely from the convention.
        let m = param(&[3, 3], &c);
        let sys = build_coordinates(&m, &c);
        let report = independence_check(&sys, 3, 0xFEED).unwrap();
        assert!(report.passed);
        assert_eq!(report.rank, 2);
        assert_eq!(report.constant_groups, 2);
    }

    #[test]
    fn duplicate_coordinate_drops_rank() {
        let c = ctx(3, 3);
        let m = param(&[2, 2], &c);
        let sys = build_coordinates(&m, &c);
        let mut polys: Vec<SparsePoly> = sys
            .groups()
            .iter()
            .flat_map(|g| g.coords.iter().map(|(_, x)| x.clone()))
            .collect();
        polys.push(polys[0].clone());
        let vars = jacobian_variables(&m, &c);
        let mut rng = SplitMix64::new(1);
        let mut point = BTreeMap::new();
        for i in 1..=c.r * c.q {
            point.insert(VarId::layer1(i), rng.below(DEFAULT_PRIME));
            point.insert(VarId::layer2(i), rng.below(DEFAULT_PRIME));
        }
        let rank = modular_jacobian_rank(&polys, &vars, &point, DEFAULT_PRIME).unwrap();
        assert!(rank < polys.len());
    }

    #[test]
    fn segre_consistency_cases() {
        let limits = SearchLimits::default();
        let c = ctx(3, 3);
        let report = segre_consistency(&param(&[2, 2], &c), &c, &limits).unwrap();
        assert!(report.passed());
        assert_eq!(report.sections, 6);

        let report = segre_consistency(&param(&[3, 3], &c), &c, &limits).unwrap();
        assert!(report.passed());
        assert_eq!(report.sections, 1);
    }

    #[test]
    fn segre_consistency_large_case() {
        // (13,4,3), m = (1,1,1): 10 * 6 * 3 = 180 sections.
        let c = ctx(4, 3);
        let m = param(&[1, 1, 1], &c);
        assert_eq!(invariant_sections(&m, &c), 180);
        let report = segre_consistency(&m, &c, &SearchLimits::default()).unwrap();
        assert!(report.passed());
        assert_eq!(report.sections, 180);
    }

    fn invariant_sections(m: &ParamM, c: &GrassmannianContext) -> u128 {
        crate::tableau::invariant_count_formula(m, c)
    }

    #[test]
    fn quotient_identification_examples() {
        let c = ctx(3, 3);
        let id = identify_quotient(&param(&[2, 2], &c), &c);
        assert_eq!(
            id.factors,
            vec![Factor { dim: 1, degree: 2 }, Factor { dim: 1, degree: 1 }]
        );
        assert_eq!(id.sections, 6);
        assert_eq!(id.dimension, 2);

        let id = identify_quotient(&param(&[1, 2], &c), &c);
        assert_eq!(
            id.factors,
            vec![Factor { dim: 2, degree: 2 }, Factor { dim: 1, degree: 1 }]
        );
        assert_eq!(id.sections, 12);

        let id = identify_quotient(&param(&[3, 3], &c), &c);
        assert!(id.is_point());
        assert_eq!(id.sections, 1);
        assert_eq!(id.dimension, 0);
    }

    #[test]
    fn dimension_counts_coordinates() {
        for (r, q, mv) in [
            (3usize, 3usize, vec![2usize, 2]),
            (3, 3, vec![1, 3]),
            (4, 3, vec![2, 2, 2]),
            (2, 5, vec![4]),
        ] {
            let c = ctx(r, q);
            let m = param(&mv, &c);
            let sys = build_coordinates(&m, &c);
            let id = identify_quotient(&m, &c);
            assert_eq!(id.dimension, sys.num_coordinates() - (c.r - 1));
        }
    }

    #[test]
    fn realize_product_examples() {
        // The construction uses q = max(a) + 1.
        let (c, m) = realize_product(&[1, 1]).unwrap();
        assert_eq!((c.n, c.r, c.q), (7, 3, 2));
        assert_eq!(m.values(), &[1, 1]);

        let (c, m) = realize_product(&[2, 1]).unwrap();
        assert_eq!((c.n, c.r, c.q), (10, 3, 3));
        assert_eq!(m.values(), &[1, 2]);

        let (c, m) = realize_product(&[0]).unwrap();
        assert_eq!((c.n, c.r, c.q), (3, 2, 1));
        assert_eq!(m.values(), &[1]);
        assert!(identify_quotient(&m, &c).is_point());

        let (c, m) = realize_product(&[3, 1, 2]).unwrap();
        assert_eq!((c.n, c.r, c.q), (17, 4, 4));
        assert_eq!(m.values(), &[1, 3, 2]);

        assert!(realize_product(&[]).is_err());
        assert!(realize_product(&[2, -1]).is_err());
    }

    #[test]
    fn realize_is_right_inverse_on_dimensions() {
        let mut rng = SplitMix64::new(2024);
        for _ in 0..30 {
            let l = rng.range(1, 4) as usize;
            let targets: Vec<i64> = (0..l).map(|_| rng.range(0, 4) as i64).collect();
            let (c, m) = realize_product(&targets).unwrap();
            let id = identify_quotient(&m, &c);
            let dims: Vec<i64> = id.factors.iter().map(|f| f.dim as i64).collect();
            assert_eq!(dims, targets);
            let degrees: Vec<usize> = id.factors.iter().map(|f| f.degree).collect();
            let expected: Vec<usize> = (1..=l).rev().collect();
            assert_eq!(degrees, expected);
        }
    }

    #[test]
    fn identification_json_shape() {
        let c = ctx(3, 3);
        let id = identify_quotient(&param(&[2, 2], &c), &c);
        let js = id.to_json();
        assert_eq!(js["factors"][0]["dim"], 1);
        assert_eq!(js["factors"][0]["degree"], 2);
        assert_eq!(js["sections"], "6");
        assert_eq!(js["dimension"], 2);
    }
}
