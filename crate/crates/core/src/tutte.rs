//! Tutte, characteristic and `h(u,v)` polynomials.
//!
//! Every polynomial here has two independent routes: the subset sum over
//! all `A ⊆ E` and the deletion–contraction recursion (or, for `h`, the
//! Tutte specialisation `h(u,v) = v^{#E-r} T(u+1, 1/v+1)`).

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use sha2::{Digest, Sha256};

use crate::error::{Result, WorkbenchError};
use crate::matroid::Matroid;
use crate::poly::{BivariatePolynomial, UnivariatePolynomial};
use crate::subset::ElementSet;

/// Largest ground set accepted by [`tutte_sum`].
pub const SUBSET_SUM_LIMIT: usize = 24;

/// Minors smaller than this are evaluated on the current thread.
const PARALLEL_THRESHOLD: usize = 8;

/// `(x - 1)^a (y - 1)^b`, expanded.
fn shifted_monomial(a: u32, b: u32) -> BivariatePolynomial {
    let mut p = BivariatePolynomial::zero();
    for i in 0..=a {
        for j in 0..=b {
            let sign = if (a - i + b - j).is_multiple_of(2) { 1 } else { -1 };
            let c = binomial(BigInt::from(a), BigInt::from(i)) * binomial(BigInt::from(b), BigInt::from(j)) * sign;
            p.add_term(i, j, c);
        }
    }
    p
}

/// Histogram of `(r - rk(A), #A - rk(A))` over all subsets.
fn corank_nullity_counts(m: &Matroid) -> Result<Vec<Vec<u64>>> {
    if m.size() > SUBSET_SUM_LIMIT {
        return Err(WorkbenchError::too_large(
            "ground set for subset sums",
            m.size() as u64,
            SUBSET_SUM_LIMIT as u64,
        ));
    }
    let table = m.rank_table()?;
    let r = m.rank();
    let mut counts = vec![vec![0u64; m.size() - r + 1]; r + 1];
    for (bits, &rk) in table.iter().enumerate() {
        let rk = rk as usize;
        let len = (bits as u64).count_ones() as usize;
        counts[r - rk][len - rk] += 1;
    }
    Ok(counts)
}

/// `T_M(x,y) = sum_A (x-1)^{r - rk A} (y-1)^{#A - rk A}`.
pub fn tutte_sum(m: &Matroid) -> Result<BivariatePolynomial> {
    let counts = corank_nullity_counts(m)?;
    let mut t = BivariatePolynomial::zero();
    for (a, row) in counts.iter().enumerate() {
        for (b, &n) in row.iter().enumerate() {
            if n > 0 {
                t = &t + &shifted_monomial(a as u32, b as u32).scale(&BigInt::from(n));
            }
        }
    }
    Ok(t)
}

/// Memo table for [`tutte_dc`], keyed by [`Matroid::canonical_key`],
/// optionally persisted to a directory with one content-addressed file per
/// entry.
#[derive(Debug, Default)]
pub struct TutteCache {
    memory: Mutex<HashMap<Vec<u8>, BivariatePolynomial>>,
    dir: Option<PathBuf>,
    hits: AtomicUsize,
    misses: AtomicUsize,
}

#[derive(serde::Serialize, serde::Deserialize)]
struct CacheFile {
    key: String,
    tutte: BivariatePolynomial,
}

impl TutteCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// A cache backed by `dir`, created if missing.
    pub fn with_dir(dir: impl AsRef<Path>) -> Result<Self> {
        let dir = dir.as_ref().to_path_buf();
        fs::create_dir_all(&dir)
            .map_err(|e| WorkbenchError::invalid(format!("cannot create cache dir {}: {e}", dir.display())))?;
        Ok(TutteCache {
            dir: Some(dir),
            ..Self::default()
        })
    }

    fn file_for(dir: &Path, key: &[u8]) -> PathBuf {
        dir.join(format!("{}.json", hex::encode(Sha256::digest(key))))
    }

    pub fn get(&self, key: &[u8]) -> Option<BivariatePolynomial> {
        if let Some(p) = self.memory.lock().unwrap().get(key) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return Some(p.clone());
        }
        let found = self.dir.as_ref().and_then(|dir| {
            let text = fs::read_to_string(Self::file_for(dir, key)).ok()?;
            let file: CacheFile = serde_json::from_str(&text).ok()?;
            // guard against digest collisions and stale files
            (file.key == hex::encode(key)).then_some(file.tutte)
        });
        match &found {
            Some(p) => {
                self.hits.fetch_add(1, Ordering::Relaxed);
                self.memory.lock().unwrap().insert(key.to_vec(), p.clone());
            }
            None => {
                self.misses.fetch_add(1, Ordering::Relaxed);
            }
        }
        found
    }

    /// Values for a key are equal by construction, so concurrent inserts of
    /// the same key are harmless (last write wins).
    pub fn insert(&self, key: Vec<u8>, value: BivariatePolynomial) {
        self.memory.lock().unwrap().insert(key, value);
    }

    pub fn len(&self) -> usize {
        self.memory.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn hits(&self) -> usize {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> usize {
        self.misses.load(Ordering::Relaxed)
    }

    /// Writes every entry not yet on disk. Returns the number written.
    pub fn persist(&self) -> Result<usize> {
        let Some(dir) = &self.dir else {
            return Ok(0);
        };
        let memory = self.memory.lock().unwrap();
        let mut written = 0;
        for (key, tutte) in memory.iter() {
            let path = Self::file_for(dir, key);
            if path.exists() {
                continue;
            }
            let body = serde_json::to_string(&CacheFile {
                key: hex::encode(key),
                tutte: tutte.clone(),
            })
            .expect("cache entries serialize");
            let tmp = path.with_extension("tmp");
            fs::write(&tmp, body)
                .and_then(|_| fs::rename(&tmp, &path))
                .map_err(|e| WorkbenchError::invalid(format!("cannot write {}: {e}", path.display())))?;
            written += 1;
        }
        Ok(written)
    }
}

/// Tutte polynomial by deletion–contraction on the largest element that is
/// neither a loop nor a coloop, memoised in `cache`.
pub fn tutte_dc(m: &Matroid, cache: &TutteCache) -> Result<BivariatePolynomial> {
    let mixed = m.ground_set().difference(m.loops().union(m.coloops()));
    let Some(e) = mixed.max_element() else {
        return Ok(BivariatePolynomial::monomial(
            1,
            m.coloops().len() as u32,
            m.loops().len() as u32,
        ));
    };
    let key = m.canonical_key().ok();
    if let Some(hit) = key.as_ref().and_then(|k| cache.get(k)) {
        return Ok(hit);
    }
    let deleted = m.delete(e)?;
    let contracted = m.contract(e)?;
    let (a, b) = if m.size() >= PARALLEL_THRESHOLD {
        rayon::join(|| tutte_dc(&deleted, cache), || tutte_dc(&contracted, cache))
    } else {
        (tutte_dc(&deleted, cache), tutte_dc(&contracted, cache))
    };
    let t = &a? + &b?;
    if let Some(k) = key {
        cache.insert(k, t.clone());
    }
    Ok(t)
}

/// Characteristic polynomial and, for loopless matroids, its quotient by
/// `u - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicPolynomial {
    pub chi: UnivariatePolynomial,
    pub reduced: Option<UnivariatePolynomial>,
}

/// `chi_M(u) = (-1)^r T_M(1 - u, 0)`, from a precomputed Tutte polynomial.
pub fn char_poly_from_tutte(m: &Matroid, tutte: &BivariatePolynomial) -> Result<CharacteristicPolynomial> {
    let at_zero = tutte.at_y_zero();
    let mut chi = UnivariatePolynomial::zero();
    for (i, c) in at_zero.terms() {
        // (1 - u)^i
        for k in 0..=i {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            chi.add_term(k, c * binomial(BigInt::from(i), BigInt::from(k)) * sign);
        }
    }
    if m.rank() % 2 == 1 {
        chi = -&chi;
    }
    let reduced = if m.is_loopless() {
        let (q, rem) = chi.div_linear(&BigInt::one());
        if !rem.is_zero() {
            return Err(WorkbenchError::invariant(format!(
                "chi(1) = {rem} for a loopless matroid"
            )));
        }
        Some(q)
    } else {
        None
    };
    Ok(CharacteristicPolynomial { chi, reduced })
}

pub fn char_poly(m: &Matroid) -> Result<CharacteristicPolynomial> {
    char_poly_from_tutte(m, &tutte_sum(m)?)
}

/// `h(u,v)` with the realisability label: for a basis-list backing the
/// polynomial is only the formal subset sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolynomial {
    pub poly: BivariatePolynomial,
    pub formal: bool,
}

/// `sum_A u^{r - rk A} v^{#(E \ A) - (r - rk A)}`.
pub fn h_subset_sum(m: &Matroid) -> Result<BivariatePolynomial> {
    let counts = corank_nullity_counts(m)?;
    let (n, r) = (m.size(), m.rank());
    let mut h = BivariatePolynomial::zero();
    for (corank, row) in counts.iter().enumerate() {
        for (nullity, &c) in row.iter().enumerate() {
            if c == 0 {
                continue;
            }
            // #A = rk + nullity = r - corank + nullity
            let complement = n - (r - corank + nullity);
            h.add_term(corank as u32, (complement - corank) as u32, BigInt::from(c));
        }
    }
    Ok(h)
}

/// `v^{#E - r} T(u + 1, 1/v + 1)` with the `v`-denominators cleared.
pub fn h_from_tutte(tutte: &BivariatePolynomial, size: usize, rank: usize) -> Result<BivariatePolynomial> {
    let nullity = (size - rank) as u32;
    let u_plus_one = &BivariatePolynomial::x() + &BivariatePolynomial::one();
    let v_plus_one = &BivariatePolynomial::y() + &BivariatePolynomial::one();
    let mut h = BivariatePolynomial::zero();
    for (i, j, c) in tutte.terms() {
        // (1/v + 1)^j v^N = (1 + v)^j v^{N - j}
        let Some(shift) = nullity.checked_sub(j) else {
            return Err(WorkbenchError::invariant(format!(
                "Tutte term y^{j} exceeds the nullity {nullity}"
            )));
        };
        let term = (&u_plus_one.pow(i) * &v_plus_one.pow(j)).shift(0, shift).scale(c);
        h = &h + &term;
    }
    Ok(h)
}

/// `h(u,v)` by both routes, which must agree.
pub fn h_polynomial(m: &Matroid) -> Result<HPolynomial> {
    let direct = h_subset_sum(m)?;
    let via_tutte = h_from_tutte(&tutte_sum(m)?, m.size(), m.rank())?;
    if direct != via_tutte {
        return Err(WorkbenchError::invariant(format!(
            "h subset sum {direct} differs from Tutte specialisation {via_tutte}"
        )));
    }
    if !direct.all_coefficients_nonnegative() {
        return Err(WorkbenchError::invariant(format!(
            "h has a negative coefficient: {direct}"
        )));
    }
    Ok(HPolynomial {
        poly: direct,
        formal: !m.is_realized(),
    })
}

/// Number of spanning subsets `A` of each size, as `sum v^{#E - #A}`.
pub fn spanning_subset_polynomial(m: &Matroid) -> Result<UnivariatePolynomial> {
    let table = m.rank_table()?;
    let mut p = UnivariatePolynomial::zero();
    for (bits, &rk) in table.iter().enumerate() {
        if rk as usize == m.rank() {
            let a = ElementSet::from_bits(bits as u64);
            p.add_term((m.size() - a.len()) as u32, BigInt::one());
        }
    }
    Ok(p)
}
