//! Sparse multivariate polynomials over the chart coordinates c_{i,layer}
//! with arbitrary-precision integer coefficients.
//!
//! Terms are kept in graded-lexicographic order over the variable order
//! (index ascending, then layer), which fixes a canonical text rendering:
//! variables print as `c{i},{layer}`, monomial factors join with `*`, and
//! terms join with `+`/`-` from the leading term down.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default prime for modular evaluation: 2^61 - 1.
pub const DEFAULT_PRIME: u64 = (1 << 61) - 1;

/// A chart coordinate c_{i,layer} with i >= 1 and layer in {1, 2}.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId {
    index: u32,
    layer: u8,
}

impl VarId {
    pub fn new(index: usize, layer: u8) -> Result<Self> {
        if index == 0 {
            return Err(Error::Domain("variable index must be >= 1".into()));
        }
        if layer != 1 && layer != 2 {
            return Err(Error::Domain(format!("layer must be 1 or 2, got {layer}")));
        }
        Ok(VarId {
            index: index as u32,
            layer,
        })
    }

    pub fn layer1(index: usize) -> Self {
        VarId::new(index, 1).expect("layer 1 is valid")
    }

    pub fn layer2(index: usize) -> Self {
        VarId::new(index, 2).expect("layer 2 is valid")
    }

    /// Context-aware layer-2 constructor: the index must fall in one of the
    /// bands [(j-1)q + m_j + 1, jq], the only places a second chart layer
    /// exists.
    pub fn layer2_in_band(
        index: usize,
        m: &crate::weyl::ParamM,
        ctx: &crate::weyl::GrassmannianContext,
    ) -> Result<Self> {
        let in_band = (1..ctx.r).any(|j| {
            ((j - 1) * ctx.q + m.m(j) + 1..=j * ctx.q).contains(&index)
        });
        if !in_band {
            return Err(Error::Domain(format!(
                "no layer-2 variable with index {index} exists for these parameters"
            )));
        }
        VarId::new(index, 2)
    }

    pub fn index(&self) -> usize {
        self.index as usize
    }

    pub fn layer(&self) -> u8 {
        self.layer
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{},{}", self.index, self.layer)
    }
}

impl fmt::Debug for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{},{}", self.index, self.layer)
    }
}

/// Product of variables with positive exponents, kept sorted by variable.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    // (variable, exponent) pairs, sorted by VarId, exponents nonzero.
    powers: Vec<(VarId, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { powers: Vec::new() }
    }

    pub fn var(v: VarId) -> Self {
        Monomial {
            powers: vec![(v, 1)],
        }
    }

    pub fn from_powers(mut powers: Vec<(VarId, u32)>) -> Self {
        powers.retain(|&(_, e)| e > 0);
        powers.sort_by_key(|&(v, _)| v);
        let mut merged: Vec<(VarId, u32)> = Vec::with_capacity(powers.len());
        for (v, e) in powers {
            match merged.last_mut() {
                Some((last, exp)) if *last == v => *exp += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { powers: merged }
    }

    pub fn powers(&self) -> &[(VarId, u32)] {
        &self.powers
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.powers.iter().map(|&(_, e)| e as u64).sum()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.powers
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.powers[i].1)
            .unwrap_or(0)
    }

    /// Componentwise minimum of exponents.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut powers = Vec::new();
        let mut j = 0;
        for &(v, e) in &self.powers {
            while j < other.powers.len() && other.powers[j].0 < v {
                j += 1;
            }
            if j < other.powers.len() && other.powers[j].0 == v {
                powers.push((v, e.min(other.powers[j].1)));
            }
        }
        Monomial { powers }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut powers = Vec::with_capacity(self.powers.len() + other.powers.len());
        let (mut i, mut j) = (0, 0);
        while i < self.powers.len() && j < other.powers.len() {
            match self.powers[i].0.cmp(&other.powers[j].0) {
                Ordering::Less => {
                    powers.push(self.powers[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    powers.push(other.powers[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    powers.push((self.powers[i].0, self.powers[i].1 + other.powers[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        powers.extend_from_slice(&self.powers[i..]);
        powers.extend_from_slice(&other.powers[j..]);
        Monomial { powers }
    }

    /// Componentwise quotient, or None when some exponent would go negative.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut powers = Vec::with_capacity(self.powers.len());
        let mut j = 0;
        for &(v, e) in &self.powers {
            let mut e = e;
            if j < other.powers.len() && other.powers[j].0 < v {
                return None; // divisor has a variable we lack
            }
            if j < other.powers.len() && other.powers[j].0 == v {
                let d = other.powers[j].1;
                if d > e {
                    return None;
                }
                e -= d;
                j += 1;
            }
            if e > 0 {
                powers.push((v, e));
            }
        }
        if j < other.powers.len() {
            return None;
        }
        Some(Monomial { powers })
    }

    fn cmp_grlex(&self, other: &Monomial) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Lexicographic tie-break: scan the merged variable list in
        // ascending variable order; the first variable where the exponents
        // differ decides, larger exponent first.
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.powers.get(i), other.powers.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    // A variable present here but absent there means our
                    // exponent on the smaller variable is larger.
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_grlex(other)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .powers
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    format!("{v}")
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Sparse polynomial: monomial -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SparsePoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly::default()
    }

    pub fn one() -> Self {
        SparsePoly::constant(BigInt::from(1))
    }

    pub fn constant(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        SparsePoly { terms }
    }

    pub fn var(v: VarId) -> Self {
        SparsePoly::from_term(Monomial::var(v), BigInt::from(1))
    }

    pub fn from_term(m: Monomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SparsePoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True when the polynomial is a single monomial with coefficient 1.
    pub fn is_unit_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().unwrap() == &BigInt::from(1)
    }

    /// Terms from the leading (largest) monomial down.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// The largest monomial dividing every term (1 for the zero polynomial).
    pub fn monomial_content(&self) -> Monomial {
        let mut iter = self.terms.keys();
        let Some(first) = iter.next() else {
            return Monomial::one();
        };
        iter.fold(first.clone(), |acc, m| acc.gcd(m))
    }

    /// All variables occurring in some term.
    pub fn variables(&self) -> Vec<VarId> {
        let mut vars: Vec<VarId> = self
            .terms
            .keys()
            .flat_map(|m| m.powers().iter().map(|&(v, _)| v))
            .collect();
        vars.sort();
        vars.dedup();
        vars
    }

    fn insert_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> SparsePoly {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (ma, ca) in &self.terms {
            out.insert_term(ma.mul(m), ca * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> SparsePoly {
        let mut out = SparsePoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exact division: returns s with s*d = self, or a divisibility error.
    pub fn divide_exact(&self, d: &SparsePoly) -> Result<SparsePoly> {
        if d.is_zero() {
            return Err(Error::Domain("division by the zero polynomial".into()));
        }
        let (dm, dc) = d.leading().unwrap();
        let mut rem = self.clone();
        let mut quot = SparsePoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(dm).ok_or_else(|| {
                Error::NotDivisible(format!("leading monomial {rm:?} not divisible by {dm:?}"))
            })?;
            let (qc, carry) = div_rem_bigint(rc, dc);
            if !carry.is_zero() {
                return Err(Error::NotDivisible(format!(
                    "coefficient {rc} not divisible by {dc}"
                )));
            }
            let t = SparsePoly::from_term(qm, qc);
            rem = rem.sub(&t.mul(d));
            quot = quot.add(&t);
        }
        Ok(quot)
    }

    /// Formal partial derivative with respect to `v`.
    pub fn partial_derivative(&self, v: VarId) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let powers: Vec<(VarId, u32)> = m
                .powers()
                .iter()
                .map(|&(w, x)| if w == v { (w, x - 1) } else { (w, x) })
                .collect();
            out.insert_term(Monomial::from_powers(powers), c * BigInt::from(e));
        }
        out
    }

    /// Evaluates modulo `prime`; every variable must be assigned.
    pub fn eval_mod_p(&self, assignment: &BTreeMap<VarId, u64>, prime: u64) -> Result<u64> {
        let mut acc: u64 = 0;
        for (m, c) in &self.terms {
            let mut val = bigint_mod_u64(c, prime);
            for &(v, e) in m.powers() {
                let base = *assignment.get(&v).ok_or_else(|| {
                    Error::Domain(format!("no assignment for variable {v}"))
                })?;
                val = mulmod(val, powmod(base % prime, e as u64, prime), prime);
            }
            acc = addmod(acc, val, prime);
        }
        Ok(acc)
    }

    /// Canonical rendering: leading term first, no spaces.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms_desc().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let coeff_is_one = abs == BigInt::from(1);
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else {
                if !coeff_is_one {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                let parts: Vec<String> = m
                    .powers()
                    .iter()
                    .map(|&(v, e)| {
                        if e == 1 {
                            format!("{v}")
                        } else {
                            format!("{v}^{e}")
                        }
                    })
                    .collect();
                out.push_str(&parts.join("*"));
            }
        }
        out
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

fn div_rem_bigint(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    let q = a / b;
    let r = a - &q * b;
    (q, r)
}

fn bigint_mod_u64(c: &BigInt, p: u64) -> u64 {
    let m = c % BigInt::from(p);
    let m = if m.is_negative() { m + BigInt::from(p) } else { m };
    m.to_u64().expect("residue fits in u64")
}

pub fn addmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u64 = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Modular inverse via Fermat; `p` must be prime and `a` nonzero mod p.
pub fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

/// Determinant by cofactor expansion along the first column.
///
/// The chart matrices are near-bidiagonal, so most first-column entries of
/// each minor vanish and the expansion stays close to linear work.
pub fn determinant(matrix: &[Vec<SparsePoly>]) -> Result<SparsePoly> {
    let size = matrix.len();
    for row in matrix {
        if row.len() != size {
            return Err(Error::Shape(format!(
                "determinant needs a square matrix, got a row of length {} in a {}-row matrix",
                row.len(),
                size
            )));
        }
    }
    Ok(det_cofactor(matrix))
}

fn det_cofactor(matrix: &[Vec<SparsePoly>]) -> SparsePoly {
    let size = matrix.len();
    if size == 0 {
        return SparsePoly::one();
    }
    if size == 1 {
        return matrix[0][0].clone();
    }
    let mut acc = SparsePoly::zero();
    for i in 0..size {
        if matrix[i][0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<SparsePoly>> = matrix
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, row)| row[1..].to_vec())
            .collect();
        let term = matrix[i][0].mul(&det_cofactor(&minor));
        if i % 2 == 0 {
            acc = acc.add(&term);
        } else {
            acc = acc.sub(&term);
        }
    }
    acc
}

/// Determinant by fraction-free (Bareiss) elimination; exact cross-check
/// oracle for [`determinant`].
pub fn determinant_fraction_free(matrix: &[Vec<SparsePoly>]) -> Result<SparsePoly> {
    let size = matrix.len();
    for row in matrix {
        if row.len() != size {
            return Err(Error::Shape("matrix is not square".into()));
        }
    }
    if size == 0 {
        return Ok(SparsePoly::one());
    }
    let mut m: Vec<Vec<SparsePoly>> = matrix.to_vec();
    let mut sign_flip = false;
    let mut prev_pivot = SparsePoly::one();
    for k in 0..size - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..size).find(|&i| !m[i][k].is_zero());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return Ok(SparsePoly::zero()),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .divide_exact(&prev_pivot)
                    .expect("Bareiss step divides exactly");
            }
            m[i][k] = SparsePoly::zero();
        }
        prev_pivot = m[k][k].clone();
    }
    let det = m[size - 1][size - 1].clone();
    Ok(if sign_flip { det.neg() } else { det })
}

/// Parses the canonical rendering produced by [`SparsePoly::render`].
pub fn parse_poly(input: &str) -> Result<SparsePoly> {
    let s = input.trim();
    if s.is_empty() {
        return Err(Error::Domain("empty polynomial text".into()));
    }
    if s == "0" {
        return Ok(SparsePoly::zero());
    }
    let mut out = SparsePoly::zero();
    // Split into signed terms at top level (no parentheses in canonical form).
    let mut term_start = 0;
    let bytes = s.as_bytes();
    let mut chunks: Vec<(&str, bool)> = Vec::new();
    let mut negative = false;
    if bytes[0] == b'-' {
        negative = true;
        term_start = 1;
    } else if bytes[0] == b'+' {
        term_start = 1;
    }
    for (i, &b) in bytes.iter().enumerate().skip(term_start) {
        if b == b'+' || b == b'-' {
            chunks.push((&s[term_start..i], negative));
            negative = b == b'-';
            term_start = i + 1;
        }
    }
    chunks.push((&s[term_start..], negative));
    for (chunk, neg) in chunks {
        let (m, c) = parse_term(chunk)?;
        let c = if neg { -c } else { c };
        out.insert_term(m, c);
    }
    Ok(out)
}

fn parse_term(term: &str) -> Result<(Monomial, BigInt)> {
    let term = term.trim();
    if term.is_empty() {
        return Err(Error::Domain("empty term in polynomial text".into()));
    }
    let mut coeff = BigInt::from(1);
    let mut powers: Vec<(VarId, u32)> = Vec::new();
    for factor in term.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::Domain(format!("malformed term `{term}`")));
        }
        if let Some(rest) = factor.strip_prefix('c') {
            let (var_part, exp) = match rest.split_once('^') {
                Some((v, e)) => {
                    let e: u32 = e
                        .parse()
                        .map_err(|_| Error::Domain(format!("bad exponent in `{factor}`")))?;
                    (v, e)
                }
                None => (rest, 1),
            };
            let (i, layer) = var_part
                .split_once(',')
                .ok_or_else(|| Error::Domain(format!("bad variable `{factor}`")))?;
            let i: usize = i
                .parse()
                .map_err(|_| Error::Domain(format!("bad variable index in `{factor}`")))?;
            let layer: u8 = layer
                .parse()
                .map_err(|_| Error::Domain(format!("bad layer in `{factor}`")))?;
            powers.push((VarId::new(i, layer)?, exp));
        } else {
            let c: BigInt = factor
                .parse()
                .map_err(|_| Error::Domain(format!("bad coefficient `{factor}`")))?;
            coeff *= c;
        }
    }
    Ok((Monomial::from_powers(powers), coeff))
}
