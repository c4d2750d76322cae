//! Upper bounds on `f(k, N)` and the combined bound report.
//!
//! Ramsey numbers enter only through upper bounds, by default the binomial
//! bound `R(a, b) ≤ C(a+b-2, a-1)`. Any valid upper bound keeps every result
//! here sound, so a [`RamseyTable`] of known smaller values may be supplied.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::constructions::best_known_lower;
use crate::error::Result;
use crate::set_family::{FamilyParams, SetFamily};

/// Stand-in for `R(7, 7)`: `C(12, 6)`.
pub const DEFAULT_RAMSEY_THRESHOLD: u64 = 924;

/// Binomials with `min(r, n-r)` above this stay symbolic.
pub const EXPAND_LIMIT: u64 = 10_000;

/// `2k(⌊N/k⌋ - 1) + 1`: a member meets at most `k(⌊N/k⌋ - 1)` others
/// on each side.
pub fn bound_l1(k: u64, n: u64) -> u64 {
    2 * k * (n / k - 1) + 1
}

/// `⌊N·⌊N/k⌋ / k⌋`: each point lies in at most `⌊N/k⌋` members.
pub fn bound_l2(k: u64, n: u64) -> u64 {
    n * (n / k) / k
}

/// `⌊N/2⌋ + 4` for `k = 2`, valid once `⌊N/2⌋` reaches an upper bound on `R(7, 7)`.
pub fn bound_f2n(n: u64, ramsey_threshold: u64) -> Option<u64> {
    (n / 2 >= ramsey_threshold).then_some(n / 2 + 4)
}

/// `C(n, r)` for small `r`.
pub fn binomial(n: &BigUint, r: u64) -> BigUint {
    if BigUint::from(r) > *n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 1..=r {
        acc *= n - BigUint::from(r) + BigUint::from(i);
        acc /= BigUint::from(i);
    }
    acc
}

/// `C(a+b-2, a-1)`, an upper bound on `R(a, b)`.
pub fn ramsey_upper(a: u64, b: u64) -> BigUint {
    assert!(a >= 1 && b >= 1, "Ramsey arguments must be positive");
    let n = BigUint::from(a + b - 2);
    binomial(&n, (a - 1).min(b - 1))
}

/// Known upper bounds on small Ramsey numbers, consulted before the binomial bound.
#[derive(Debug, Clone, Default)]
pub struct RamseyTable {
    values: HashMap<(u64, u64), BigUint>,
}

impl RamseyTable {
    pub fn new() -> Self {
        RamseyTable::default()
    }

    /// Records `R(a, b) ≤ value` (symmetric).
    pub fn insert(&mut self, a: u64, b: u64, value: impl Into<BigUint>) {
        let v = value.into();
        self.values.insert((a, b), v.clone());
        self.values.insert((b, a), v);
    }

    fn get(&self, a: &BigUint, b: &BigUint) -> Option<&BigUint> {
        self.values.get(&(a.to_u64()?, b.to_u64()?))
    }
}

/// An upper bound on a Ramsey number, expanded when small enough.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RamseyValue {
    Exact(BigUint),
    /// `C(n, r)`, too large to expand.
    Binomial {
        n: BigUint,
        r: BigUint,
    },
}

impl RamseyValue {
    fn bound(a: &BigUint, b: &BigUint, table: &RamseyTable) -> RamseyValue {
        let one = BigUint::one();
        let n = a + b - 2u32;
        let r = (a.min(b)) - &one;
        let binom = match r.to_u64() {
            Some(small) if small <= EXPAND_LIMIT => RamseyValue::Exact(binomial(&n, small)),
            _ => RamseyValue::Binomial { n, r },
        };
        match (table.get(a, b), binom) {
            (Some(t), RamseyValue::Exact(v)) => RamseyValue::Exact(v.min(t.clone())),
            (Some(t), RamseyValue::Binomial { .. }) => RamseyValue::Exact(t.clone()),
            (None, v) => v,
        }
    }

    pub fn exact(&self) -> Option<&BigUint> {
        match self {
            RamseyValue::Exact(v) => Some(v),
            RamseyValue::Binomial { .. } => None,
        }
    }

    /// Lower bound on `log2` of the value (`C(n, s) ≥ 2^s` for `s ≤ n/2`).
    fn log2_floor(&self) -> BigUint {
        match self {
            RamseyValue::Exact(v) => BigUint::from(v.bits().saturating_sub(1)),
            RamseyValue::Binomial { n, r } => r.clone().min(n - r),
        }
    }

    /// True when the value is certainly at least `x`.
    pub fn at_least(&self, x: &BigUint) -> bool {
        match self {
            RamseyValue::Exact(v) => v >= x,
            RamseyValue::Binomial { .. } => self.log2_floor() >= BigUint::from(x.bits()),
        }
    }

    /// Ordering when it can be decided without expanding; `None` otherwise.
    pub fn try_cmp(&self, other: &RamseyValue) -> Option<Ordering> {
        use RamseyValue::*;
        match (self, other) {
            (Exact(a), Exact(b)) => Some(a.cmp(b)),
            (Binomial { .. }, Exact(b)) => self.at_least(&(b + 1u32)).then_some(Ordering::Greater),
            (Exact(a), Binomial { .. }) => other.at_least(&(a + 1u32)).then_some(Ordering::Less),
            (Binomial { n: n1, r: r1 }, Binomial { n: n2, r: r2 }) => {
                let s1 = r1.clone().min(n1 - r1);
                let s2 = r2.clone().min(n2 - r2);
                if n1 == n2 && s1 == s2 {
                    Some(Ordering::Equal)
                } else if n1 >= n2 && s1 >= s2 {
                    Some(Ordering::Greater)
                } else if n1 <= n2 && s1 <= s2 {
                    Some(Ordering::Less)
                } else {
                    None
                }
            }
        }
    }
}

/// The sequences `r_1 = k+1`, `m_i = i·r_i`, `r_i = R(m_{i-1}, 2k+1)` and
/// `m_final = R(m_k, m_k)`, with Ramsey numbers replaced by upper bounds.
/// `f(k, N) ≤ ⌊N/k⌋ + m_final - 1` for every N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamseySequence {
    pub k: u64,
    pub r: Vec<BigUint>,
    pub m: Vec<BigUint>,
    pub m_final: RamseyValue,
}

impl RamseySequence {
    /// The additive constant `c = m_final - 1`, when it can be expanded.
    pub fn constant(&self) -> Option<BigUint> {
        self.m_final.exact().map(|v| v - 1u32)
    }

    /// True when `c ≥ x` is certain.
    pub fn constant_at_least(&self, x: &BigUint) -> bool {
        self.m_final.at_least(&(x + 1u32))
    }
}

pub fn theorem_constant(k: u64) -> RamseySequence {
    theorem_constant_with(k, &RamseyTable::new(), None).expect("no size cap")
}

/// Computes the sequence, or `None` when some `r_i` would exceed `max_bits`.
pub fn theorem_constant_with(
    k: u64,
    table: &RamseyTable,
    max_bits: Option<u64>,
) -> Option<RamseySequence> {
    assert!(k >= 1, "k must be positive");
    let width = BigUint::from(2 * k + 1);
    let mut r = vec![BigUint::from(k + 1)];
    let mut m = vec![BigUint::from(k + 1)];
    for i in 2..=k {
        let ri = match RamseyValue::bound(&m[m.len() - 1], &width, table) {
            RamseyValue::Exact(v) => v,
            RamseyValue::Binomial { .. } => unreachable!("2k+1 side keeps the binomial small"),
        };
        if max_bits.is_some_and(|b| ri.bits() > b) {
            return None;
        }
        m.push(&ri * i);
        r.push(ri);
    }
    let mk = m.last().unwrap();
    let m_final = RamseyValue::bound(mk, mk, table);
    Some(RamseySequence { k, r, m, m_final })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerEntry {
    pub value: u64,
    pub provenance: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpperEntry {
    pub value: u64,
    pub rule: String,
}

pub mod rules {
    pub const DEGREE: &str = "degree";
    pub const DOUBLE_COUNTING: &str = "double-counting";
    pub const K2_SHARP: &str = "k2-sharp";
    pub const RAMSEY_CONSTANT: &str = "ramsey-constant";
    pub const SOLVER: &str = "solver";
}

/// All bounds known for one `(k, N)`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundReport {
    pub k: u64,
    #[serde(rename = "N")]
    pub n: u64,
    pub lower: LowerEntry,
    pub uppers: Vec<UpperEntry>,
    pub exact: Option<u64>,
    #[serde(skip)]
    pub witness: Option<SetFamily>,
}

impl BoundReport {
    pub fn min_upper(&self) -> Option<&UpperEntry> {
        self.uppers.iter().min_by_key(|u| u.value)
    }

    /// Lower bound does not exceed any upper bound.
    pub fn is_consistent(&self) -> bool {
        self.uppers.iter().all(|u| self.lower.value <= u.value)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub(crate) fn settle_exact(&mut self) {
        self.exact = self
            .min_upper()
            .filter(|u| u.value == self.lower.value)
            .map(|u| u.value);
    }
}

#[derive(Debug, Clone)]
pub struct ReportOptions {
    /// Upper bound on `R(7, 7)` used by the `k = 2` rule.
    pub ramsey_threshold: u64,
    pub ramsey_table: RamseyTable,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            ramsey_threshold: DEFAULT_RAMSEY_THRESHOLD,
            ramsey_table: RamseyTable::new(),
        }
    }
}

/// Best lower bound against every applicable upper bound.
pub fn report(k: usize, n: usize, opts: &ReportOptions) -> Result<BoundReport> {
    FamilyParams::new(k, n)?;
    let lower = best_known_lower(k, n)?;
    let (k64, n64) = (k as u64, n as u64);
    let mut uppers = vec![
        UpperEntry {
            value: bound_l1(k64, n64),
            rule: rules::DEGREE.into(),
        },
        UpperEntry {
            value: bound_l2(k64, n64),
            rule: rules::DOUBLE_COUNTING.into(),
        },
    ];
    if k == 2 {
        if let Some(v) = bound_f2n(n64, opts.ramsey_threshold) {
            uppers.push(UpperEntry {
                value: v,
                rule: rules::K2_SHARP.into(),
            });
        }
    }
    let constant = theorem_constant_with(k64, &opts.ramsey_table, Some(256))
        .and_then(|s| s.constant())
        .and_then(|c| c.to_u64())
        .and_then(|c| (n64 / k64).checked_add(c));
    if let Some(v) = constant {
        uppers.push(UpperEntry {
            value: v,
            rule: rules::RAMSEY_CONSTANT.into(),
        });
    }
    let mut rep = BoundReport {
        k: k64,
        n: n64,
        lower: LowerEntry {
            value: lower.value as u64,
            provenance: lower.provenance,
        },
        uppers,
        exact: None,
        witness: lower.witness,
    };
    rep.settle_exact();
    Ok(rep)
}
