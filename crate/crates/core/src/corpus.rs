//! The shipped corpus of matroids with expected invariants, and the
//! verifier that recomputes every expected value.
//!
//! Expected values were produced by the brute-force script
//! `corpus/oracle.py`, which shares no code with this crate.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Result, WorkbenchError};
use crate::localization::{euler_table, LocalizationOptions};
use crate::matroid::{Descriptor, Matroid};
use crate::orlik_solomon::{os_dimensions, reduced_nbc_index_sets, reduced_os_dimensions};
use crate::poly::{BivariatePolynomial, UnivariatePolynomial};
use crate::toric_white::{check_degree, DEFAULT_MULTISET_BUDGET};
use crate::tutte::{char_poly, h_polynomial, tutte_dc, tutte_sum, TutteCache};

/// The corpus bundled with the crate.
pub const BUILTIN_CORPUS: &str = include_str!("../corpus/corpus.json");

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Provenance {
    Paper,
    Trivial,
    Derived,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Bases,
    Tutte,
    CharPoly,
    ReducedCharPoly,
    HPolynomial,
    OsDims,
    ReducedOsDims,
    ReducedNbcSets,
    EulerTable,
    #[serde(rename = "white_degree_3")]
    WhiteDegree3,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub quantity: Quantity,
    pub value: Value,
    pub provenance: Provenance,
    #[serde(default)]
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub name: String,
    #[serde(default)]
    pub summary: String,
    pub descriptor: Descriptor,
    pub expected: Vec<Expected>,
}

impl CorpusEntry {
    pub fn matroid(&self) -> Result<Matroid> {
        self.descriptor.to_matroid()
    }

    pub fn expected(&self, quantity: Quantity) -> Option<&Expected> {
        self.expected.iter().find(|e| e.quantity == quantity)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    pub fn builtin() -> Self {
        Self::from_json(BUILTIN_CORPUS).expect("bundled corpus parses")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| WorkbenchError::invalid(format!("bad corpus: {e}")))
    }

    pub fn get(&self, name: &str) -> Option<&CorpusEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

/// Shared state for a verification run.
pub struct VerifyOptions<'a> {
    pub cache: &'a TutteCache,
    pub localization: LocalizationOptions,
    pub multiset_budget: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub quantity: Quantity,
    pub provenance: Provenance,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub all_passed: bool,
    pub entries: Vec<EntryReport>,
}

fn same<T: PartialEq + std::fmt::Debug>(got: T, want: T) -> Option<String> {
    (got != want).then(|| format!("got {got:?}, expected {want:?}"))
}

fn from_value<T: for<'de> Deserialize<'de>>(v: &Value) -> Result<T> {
    serde_json::from_value(v.clone()).map_err(|e| WorkbenchError::invalid(format!("bad expected value: {e}")))
}

fn check(m: &Matroid, e: &Expected, options: &VerifyOptions) -> Result<Option<String>> {
    Ok(match e.quantity {
        Quantity::Bases => same(m.bases()?.len(), from_value(&e.value)?),
        Quantity::Tutte => {
            let want = BivariatePolynomial::from_json(&e.value)?;
            let sum = tutte_sum(m)?;
            let dc = tutte_dc(m, options.cache)?;
            if sum != dc {
                Some(format!("subset sum {sum} and deletion-contraction {dc} disagree"))
            } else {
                same(sum.to_string(), want.to_string())
            }
        }
        Quantity::CharPoly => {
            let want = UnivariatePolynomial::from_json(&e.value)?;
            same(char_poly(m)?.chi.to_string(), want.to_string())
        }
        Quantity::ReducedCharPoly => {
            let want = UnivariatePolynomial::from_json(&e.value)?;
            same(char_poly(m)?.reduced.map(|p| p.to_string()), Some(want.to_string()))
        }
        Quantity::HPolynomial => {
            let want = BivariatePolynomial::from_json(&e.value)?;
            same(h_polynomial(m)?.poly.to_string(), want.to_string())
        }
        Quantity::OsDims => same(os_dimensions(m, m.natural_field())?, from_value(&e.value)?),
        Quantity::ReducedOsDims => same(reduced_os_dimensions(m, m.natural_field())?, from_value(&e.value)?),
        Quantity::ReducedNbcSets => {
            let got = (1..m.rank())
                .map(|k| Ok(reduced_nbc_index_sets(m, k)?.iter().map(|s| s.to_vec()).collect()))
                .collect::<Result<Vec<Vec<Vec<usize>>>>>()?;
            same(got, from_value(&e.value)?)
        }
        Quantity::EulerTable => {
            let table = euler_table(m, &options.localization)?;
            let got: Vec<Vec<String>> = table
                .entries
                .iter()
                .map(|row| row.iter().map(|c| c.to_string()).collect())
                .collect();
            same(got, from_value(&e.value)?)
        }
        Quantity::WhiteDegree3 => same(
            check_degree(m, 3, options.multiset_budget)?.all_connected,
            from_value(&e.value)?,
        ),
    })
}

/// Recompute every expected value of one entry.
pub fn verify_entry(entry: &CorpusEntry, options: &VerifyOptions) -> EntryReport {
    let matroid = entry.matroid();
    let checks: Vec<CheckResult> = entry
        .expected
        .iter()
        .map(|e| {
            let detail = match &matroid {
                Ok(m) => check(m, e, options).unwrap_or_else(|err| Some(err.to_string())),
                Err(err) => Some(err.to_string()),
            };
            CheckResult {
                quantity: e.quantity,
                provenance: e.provenance,
                passed: detail.is_none(),
                detail,
            }
        })
        .collect();
    EntryReport {
        name: entry.name.clone(),
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}

pub fn verify_corpus(corpus: &Corpus, options: &VerifyOptions) -> CorpusReport {
    let entries: Vec<EntryReport> = corpus.entries.iter().map(|e| verify_entry(e, options)).collect();
    CorpusReport {
        all_passed: entries.iter().all(|e| e.passed),
        entries,
    }
}

impl Default for VerifyOptions<'static> {
    fn default() -> Self {
        static CACHE: std::sync::OnceLock<TutteCache> = std::sync::OnceLock::new();
        VerifyOptions {
            cache: CACHE.get_or_init(TutteCache::new),
            localization: LocalizationOptions::default(),
            multiset_budget: DEFAULT_MULTISET_BUDGET,
        }
    }
}
