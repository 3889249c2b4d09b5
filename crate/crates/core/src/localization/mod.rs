//! Euler characteristics `χ(X_E, ∧^p S_L ⊗ ∧^q Q_L)` on the permutohedral
//! variety, computed by summing local contributions over its `(n+1)!`
//! torus-fixed points.
//!
//! At the fixed point of a permutation `w` with flag `G_i = {w_1, .., w_i}`,
//! the fiber of `S_L` has one character `s·e_{w_i}` for every rank step
//! `rk G_i > rk G_{i-1}`, the fiber of `Q_L` carries the remaining indices
//! and the tangent space has characters `t·(e_{w_i} - e_{w_{i+1}})`. The
//! rational function `e_p(S) e_q(Q) / prod (1 - χ^{-1})` is evaluated along a
//! one-parameter subgroup `z^a` at `z = 1 + ε` as a Laurent series in `ε`.
//! The poles cancel in the sum and the constant term is the answer.

mod series;

use std::collections::HashMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Result, WorkbenchError};
use crate::matroid::Matroid;
use crate::matroid::OrderedSetPartition;
use crate::poly::BivariatePolynomial;

pub use series::{binomial_any, TruncatedSeries};

/// Default cap on the number of fixed points, `7! = 5040`.
pub const DEFAULT_FIXED_POINT_BUDGET: u128 = 5040;

/// Global signs of the fiber and tangent characters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SignConvention {
    pub fiber: i64,
    pub tangent: i64,
}

impl SignConvention {
    /// The convention selected by [`calibrate`].
    pub const CALIBRATED: SignConvention = SignConvention { fiber: -1, tangent: 1 };

    pub const ALL: [SignConvention; 4] = [
        SignConvention { fiber: 1, tangent: 1 },
        SignConvention { fiber: 1, tangent: -1 },
        SignConvention { fiber: -1, tangent: 1 },
        SignConvention { fiber: -1, tangent: -1 },
    ];
}

impl Default for SignConvention {
    fn default() -> Self {
        Self::CALIBRATED
    }
}

/// A weight vector in `Z^E`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Character(Vec<i64>);

impl Character {
    pub fn new(coords: Vec<i64>) -> Self {
        Character(coords)
    }

    /// `sign · e_i` in `Z^size`.
    pub fn basis(size: usize, i: usize, sign: i64) -> Self {
        let mut v = vec![0; size];
        v[i] = sign;
        Character(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn pairing(&self, a: &[i64]) -> i64 {
        self.0.iter().zip(a).map(|(x, y)| x * y).sum()
    }

    /// Whether the character lies in `e_E^⊥`.
    pub fn is_orthogonal_to_diagonal(&self) -> bool {
        self.0.iter().sum::<i64>() == 0
    }
}

/// Local data at the fixed point of a permutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointData {
    pub permutation: Vec<usize>,
    pub s_chars: Vec<Character>,
    pub q_chars: Vec<Character>,
    pub tangent_chars: Vec<Character>,
}

/// Fiber and tangent characters at the fixed point of `w`.
pub fn fixed_point_data(m: &Matroid, w: &[usize], signs: SignConvention) -> Result<FixedPointData> {
    let size = m.size();
    if w.len() != size {
        return Err(WorkbenchError::invalid(format!(
            "permutation has length {}, ground set has {size} elements",
            w.len()
        )));
    }
    let flag = OrderedSetPartition::from_permutation(w)?.flag();
    let mut s_chars = Vec::new();
    let mut q_chars = Vec::new();
    let mut prev = 0;
    for (i, &e) in w.iter().enumerate() {
        let rk = m.rank_of(flag[i + 1])?;
        let ch = Character::basis(size, e, signs.fiber);
        if rk > prev {
            s_chars.push(ch);
        } else {
            q_chars.push(ch);
        }
        prev = rk;
    }
    let tangent_chars = w
        .windows(2)
        .map(|pair| {
            let mut v = vec![0; size];
            v[pair[0]] += signs.tangent;
            v[pair[1]] -= signs.tangent;
            Character(v)
        })
        .collect();
    Ok(FixedPointData {
        permutation: w.to_vec(),
        s_chars,
        q_chars,
        tangent_chars,
    })
}

/// Knobs for the localization sum.
#[derive(Clone, Debug)]
pub struct LocalizationOptions {
    /// Largest admissible number of fixed points `(n+1)!`.
    pub max_fixed_points: u128,
    pub signs: SignConvention,
    /// First one-parameter subgroup to try; the default sequence is used
    /// when absent or degenerate.
    pub one_parameter_subgroup: Option<Vec<i64>>,
    /// Seed of the random fallback candidates.
    pub seed: u64,
}

impl Default for LocalizationOptions {
    fn default() -> Self {
        LocalizationOptions {
            max_fixed_points: DEFAULT_FIXED_POINT_BUDGET,
            signs: SignConvention::CALIBRATED,
            one_parameter_subgroup: None,
            seed: 0,
        }
    }
}

/// `a` is generic when its pairings with the fiber characters `±e_i` are
/// distinct, which also makes every tangent pairing nonzero.
pub fn is_generic(a: &[i64]) -> bool {
    a.iter().all_unique()
}

/// `(0, 1, M, M^2, ..)` with `M = n + 2`.
pub fn standard_one_parameter_subgroup(size: usize) -> Vec<i64> {
    let base = size as i64 + 1;
    let mut out = Vec::with_capacity(size);
    let mut pow = 1i64;
    out.push(0);
    for _ in 1..size {
        out.push(pow);
        pow = pow.saturating_mul(base);
    }
    out
}

/// Candidate one-parameter subgroups in the order they are tried.
pub fn one_parameter_subgroup_candidates(
    size: usize,
    first: Option<Vec<i64>>,
    seed: u64,
) -> impl Iterator<Item = Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = (size * size + 4) as i64;
    first
        .into_iter()
        .chain(std::iter::once(standard_one_parameter_subgroup(size)))
        .chain(std::iter::repeat_with(move || {
            (0..size).map(|_| rng.gen_range(-bound..=bound)).collect()
        }))
}

fn choose_one_parameter_subgroup(size: usize, options: &LocalizationOptions) -> Result<Vec<i64>> {
    if let Some(a) = &options.one_parameter_subgroup {
        if a.len() != size {
            return Err(WorkbenchError::invalid(format!(
                "one-parameter subgroup has length {}, ground set has {size} elements",
                a.len()
            )));
        }
    }
    Ok(
        one_parameter_subgroup_candidates(size, options.one_parameter_subgroup.clone(), options.seed)
            .find(|a| is_generic(a))
            .expect("random candidates eventually have distinct entries"),
    )
}

/// `χ(∧^p S ⊗ ∧^q Q)` for every `p ≤ r`, `q ≤ #E - r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerTable {
    pub entries: Vec<Vec<BigInt>>,
    pub one_parameter_subgroup: Vec<i64>,
    pub fixed_points: usize,
}

impl EulerTable {
    pub fn get(&self, p: usize, q: usize) -> Option<&BigInt> {
        self.entries.get(p)?.get(q)
    }

    /// The table expected for the dual matroid: `h_{M*}(u,v) = u^{#E-r} v^r
    /// h_M(1/v, 1/u)`, i.e. the transpose with both axes reversed.
    pub fn cremona_transpose(&self) -> Vec<Vec<BigInt>> {
        cremona_transpose(&self.entries)
    }

    /// Whether the table is the coefficient matrix of `h`.
    pub fn matches(&self, h: &BivariatePolynomial) -> bool {
        let rows = self.entries.len();
        let cols = self.entries.first().map_or(0, Vec::len);
        h.terms().all(|(i, j, _)| (i as usize) < rows && (j as usize) < cols)
            && coefficient_matrix(h, rows, cols) == self.entries
    }
}

/// The `rows × cols` matrix of coefficients of `u^p v^q` in `h`.
pub fn coefficient_matrix(h: &BivariatePolynomial, rows: usize, cols: usize) -> Vec<Vec<BigInt>> {
    (0..rows)
        .map(|p| (0..cols).map(|q| h.coeff(p as u32, q as u32)).collect())
        .collect()
}

/// `D[p][q] = T[rows - 1 - q][cols - 1 - p]`.
pub fn cremona_transpose(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .rev()
        .map(|j| m.iter().rev().map(|row| row[j].clone()).collect())
        .collect()
}

fn check_budget(size: usize, budget: u128) -> Result<()> {
    let mut count: u128 = 1;
    for k in 2..=size as u128 {
        count = count.saturating_mul(k);
    }
    if count > budget {
        return Err(WorkbenchError::too_large("number of torus-fixed points", count, budget));
    }
    Ok(())
}

/// Multiset of subset sums of `values` by subset size.
fn subset_sums_by_size(values: &[i64]) -> Vec<HashMap<i64, u64>> {
    let mut out = vec![HashMap::new(); values.len() + 1];
    out[0].insert(0, 1);
    for (seen, &v) in values.iter().enumerate() {
        for k in (0..=seen).rev() {
            let prev: Vec<(i64, u64)> = out[k].iter().map(|(&s, &c)| (s, c)).collect();
            for (s, c) in prev {
                *out[k + 1].entry(s + v).or_insert(0) += c;
            }
        }
    }
    out
}

/// Power-series coefficients of `(1 + ε)^m` for `k < order`, as integers.
fn binomial_row(m: i64, order: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(order);
    let mut c = BigInt::one();
    for k in 0..order {
        row.push(c.clone());
        c = c * BigInt::from(m - k as i64) / BigInt::from(k as i64 + 1);
    }
    row
}

fn convolve(x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
    let order = x.len();
    let mut out = vec![BigInt::zero(); order];
    for (i, a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y[..order - i].iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

/// `c^order / f` for `f = (1 - (1+ε)^{-c}) / ε`, an integer series.
fn scaled_factor_inverse(c: i64, order: usize) -> Vec<BigInt> {
    // f = sum f_k ε^k with f_0 = c; 1/f = sum B_k ε^k / c^{k+1} where
    // B_k = -sum_{j=1..k} f_j B_{k-j} c^{j-1}.
    let f: Vec<BigInt> = (0..order).map(|k| -binomial_any(-c, k + 1)).collect();
    let c_big = BigInt::from(c);
    let powers: Vec<BigInt> = (0..=order).map(|k| num_traits::pow(c_big.clone(), k)).collect();
    let mut b = vec![BigInt::one()];
    for k in 1..order {
        let mut acc = BigInt::zero();
        for j in 1..=k {
            acc += &f[j] * &b[k - j] * &powers[j - 1];
        }
        b.push(-acc);
    }
    b.into_iter()
        .enumerate()
        .map(|(k, bk)| bk * &powers[order - 1 - k])
        .collect()
}

/// Sum over fixed points of `numerator / denominator`, kept over the common
/// denominator `prod_{i<j} (a_i - a_j)^order`, which every local
/// denominator divides.
struct Accumulator {
    series: Vec<Vec<BigInt>>,
}

impl Accumulator {
    fn zero(entries: usize, order: usize) -> Self {
        Accumulator {
            series: vec![vec![BigInt::zero(); order]; entries],
        }
    }

    fn add(mut self, other: Accumulator) -> Accumulator {
        for (a, b) in self.series.iter_mut().zip(other.series) {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
        }
        self
    }
}

fn common_denominator(a: &[i64], order: usize) -> BigInt {
    let mut den = BigInt::one();
    for (i, x) in a.iter().enumerate() {
        for y in &a[i + 1..] {
            den *= num_traits::pow(BigInt::from(x - y), order);
        }
    }
    den
}

fn local_terms(
    m: &Matroid,
    w: &[usize],
    a: &[i64],
    signs: SignConvention,
    wanted: &[(usize, usize)],
    order: usize,
    common: &BigInt,
) -> Result<Accumulator> {
    let data = fixed_point_data(m, w, signs)?;
    let s_pairings: Vec<i64> = data.s_chars.iter().map(|c| c.pairing(a)).collect();
    let q_pairings: Vec<i64> = data.q_chars.iter().map(|c| c.pairing(a)).collect();
    let mut d_num = vec![BigInt::zero(); order];
    d_num[0] = BigInt::one();
    let mut d_den = BigInt::one();
    for c in data.tangent_chars.iter().map(|c| c.pairing(a)) {
        if c == 0 {
            return Err(WorkbenchError::invariant(
                "tangent pairing vanishes at a generic subgroup",
            ));
        }
        d_num = convolve(&d_num, &scaled_factor_inverse(c, order));
        d_den *= num_traits::pow(BigInt::from(c), order);
    }
    let (scale, rem) = common.div_rem(&d_den);
    if !rem.is_zero() {
        return Err(WorkbenchError::invariant(
            "local denominator does not divide the common one",
        ));
    }
    let d_num: Vec<BigInt> = d_num.into_iter().map(|x| x * &scale).collect();
    let s_sums = subset_sums_by_size(&s_pairings);
    let q_sums = subset_sums_by_size(&q_pairings);
    let mut rows: HashMap<i64, Vec<BigInt>> = HashMap::new();
    let mut series = Vec::with_capacity(wanted.len());
    for &(p, q) in wanted {
        let mut exponents: HashMap<i64, u64> = HashMap::new();
        for (&x, &cx) in &s_sums[p] {
            for (&y, &cy) in &q_sums[q] {
                *exponents.entry(x + y).or_insert(0) += cx * cy;
            }
        }
        let mut numerator = vec![BigInt::zero(); order];
        for (e, count) in exponents {
            let row = rows.entry(e).or_insert_with(|| binomial_row(e, order));
            let count = BigInt::from(count);
            for (slot, b) in numerator.iter_mut().zip(row.iter()) {
                *slot += &count * b;
            }
        }
        series.push(convolve(&numerator, &d_num));
    }
    Ok(Accumulator { series })
}

/// Sum the local contributions for every `(p, q)` in `wanted`.
fn localize(
    m: &Matroid,
    wanted: &[(usize, usize)],
    options: &LocalizationOptions,
) -> Result<(Vec<BigInt>, Vec<i64>, usize)> {
    let size = m.size();
    check_budget(size, options.max_fixed_points)?;
    m.rank_table()?;
    let a = choose_one_parameter_subgroup(size, options)?;
    let n = size - 1;
    let order = n + 2;
    let common = common_denominator(&a, order);
    let perms: Vec<Vec<usize>> = (0..size).permutations(size).collect();
    let total = perms
        .par_iter()
        .map(|w| local_terms(m, w, &a, options.signs, wanted, order, &common))
        .try_reduce(|| Accumulator::zero(wanted.len(), order), |x, y| Ok(x.add(y)))?;
    let mut values = Vec::with_capacity(wanted.len());
    for (&(p, q), s) in wanted.iter().zip(&total.series) {
        let s: Vec<BigRational> = s.iter().map(|x| BigRational::new(x.clone(), common.clone())).collect();
        if let Some(k) = s[..n].iter().position(|c| !c.is_zero()) {
            return Err(WorkbenchError::invariant(format!(
                "pole of order {} survives in the ({p},{q}) localization sum",
                n - k
            )));
        }
        let c = &s[n];
        if !c.is_integer() {
            return Err(WorkbenchError::invariant(format!(
                "({p},{q}) localization sum has non-integral constant term {c}"
            )));
        }
        values.push(c.to_integer());
    }
    Ok((values, a, perms.len()))
}

/// `χ(X_E, ∧^p S_L ⊗ ∧^q Q_L)`; zero outside `p ≤ r`, `q ≤ #E - r`.
pub fn euler_char(m: &Matroid, p: usize, q: usize, options: &LocalizationOptions) -> Result<BigInt> {
    if p > m.rank() || q > m.size() - m.rank() {
        return Ok(BigInt::zero());
    }
    Ok(localize(m, &[(p, q)], options)?.0.remove(0))
}

/// The full `(r+1) × (#E - r + 1)` table of Euler characteristics.
pub fn euler_table(m: &Matroid, options: &LocalizationOptions) -> Result<EulerTable> {
    let (r, corank) = (m.rank(), m.size() - m.rank());
    let wanted: Vec<(usize, usize)> = (0..=r).cartesian_product(0..=corank).collect();
    let (values, a, fixed_points) = localize(m, &wanted, options)?;
    let mut it = values.into_iter();
    let entries = (0..=r).map(|_| it.by_ref().take(corank + 1).collect()).collect();
    Ok(EulerTable {
        entries,
        one_parameter_subgroup: a,
        fixed_points,
    })
}

/// Outcome of the sign calibration for one convention.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CalibrationResult {
    pub signs: SignConvention,
    pub passed: bool,
    pub failures: Vec<String>,
}

/// Test every sign convention against the calibration checks: `χ(O) = 1`
/// for `n ≤ 4`, `χ(Q_H) = n + 1` for a generic hyperplane with `n ≤ 4`, and
/// the full table of `U_{1,2}`.
pub fn calibrate() -> Result<Vec<CalibrationResult>> {
    let mut out = Vec::new();
    for signs in SignConvention::ALL {
        let options = LocalizationOptions {
            signs,
            ..Default::default()
        };
        let mut failures = Vec::new();
        let mut record = |label: String, got: Result<BigInt>, want: i64| match got {
            Ok(v) if v == BigInt::from(want) => {}
            Ok(v) => failures.push(format!("{label}: got {v}, expected {want}")),
            Err(e) => failures.push(format!("{label}: {e}")),
        };
        for size in 1..=5 {
            let m = Matroid::boolean(size)?;
            record(format!("chi(O) on B_{size}"), euler_char(&m, 0, 0, &options), 1);
        }
        for size in 2..=5 {
            let m = crate::catalog::generic_hyperplane(size);
            record(
                format!("chi(Q_H) for a hyperplane in k^{size}"),
                euler_char(&m, 0, 1, &options),
                size as i64,
            );
        }
        let u12 = Matroid::uniform(1, 2)?;
        for (p, q, want) in [(0, 0, 1), (0, 1, 2), (1, 0, 0), (1, 1, 1)] {
            record(format!("U_1,2 entry ({p},{q})"), euler_char(&u12, p, q, &options), want);
        }
        out.push(CalibrationResult {
            passed: failures.is_empty(),
            signs,
            failures,
        });
    }
    Ok(out)
}

/// Fail unless [`SignConvention::CALIBRATED`] passes every calibration check.
pub fn assert_calibrated() -> Result<()> {
    let results = calibrate()?;
    match results.iter().find(|r| r.signs == SignConvention::CALIBRATED) {
        Some(r) if r.passed => Ok(()),
        Some(r) => Err(WorkbenchError::invariant(format!(
            "configured sign convention fails calibration: {}",
            r.failures.join("; ")
        ))),
        None => Err(WorkbenchError::invariant("configured sign convention was not tested")),
    }
}

#[cfg(test)]
mod tests;
