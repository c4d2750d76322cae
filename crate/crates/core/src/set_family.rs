//! Families of subsets of the universe `A ∪ B` and the semiintersecting check.
//!
//! The universe is flat: `A = 0..N`, `B = N..2N`. A family is
//! *semiintersecting* when every member has `k` points on each side and any
//! two distinct members meet on exactly one side.
//!
//! Families serialize to the canonical JSON form
//! `{"k":..,"N":..,"provenance":..,"sets":[{"A":[..],"B":[..]},..]}` with both
//! index lists strictly ascending.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    pub k: usize,
    pub n: usize,
}

impl FamilyParams {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidParams(format!(
                "need 1 <= k <= N, got k={k}, N={n}"
            )));
        }
        Ok(FamilyParams { k, n })
    }
}

/// One member `S`, split into `S_A` and `S_B`. Both halves are stored as
/// bit vectors over their own side (`B` point `N + i` is bit `i`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MemberSet {
    a: BitSet,
    b: BitSet,
}

impl MemberSet {
    /// Builds a member from global universe indices.
    pub fn new(n: usize, a: &[usize], b: &[usize]) -> Result<Self> {
        let mut sa = BitSet::new(n);
        for &p in a {
            if p >= n {
                return Err(Error::PointOutOfRange { point: p, n });
            }
            sa.insert(p);
        }
        let mut sb = BitSet::new(n);
        for &p in b {
            if p < n || p >= 2 * n {
                return Err(Error::PointOutOfRange { point: p, n });
            }
            sb.insert(p - n);
        }
        Ok(MemberSet { a: sa, b: sb })
    }

    pub(crate) fn from_bits(a: BitSet, b: BitSet) -> Self {
        debug_assert_eq!(a.width(), b.width());
        MemberSet { a, b }
    }

    pub fn a_bits(&self) -> &BitSet {
        &self.a
    }

    /// B side, as offsets `0..N` from the start of `B`.
    pub fn b_bits(&self) -> &BitSet {
        &self.b
    }

    pub fn a_points(&self) -> Vec<usize> {
        self.a.iter().collect()
    }

    pub fn b_points(&self) -> Vec<usize> {
        let n = self.b.width();
        self.b.iter().map(|i| i + n).collect()
    }

    pub fn a_size(&self) -> usize {
        self.a.count()
    }

    pub fn b_size(&self) -> usize {
        self.b.count()
    }

    pub fn meets_in_a(&self, other: &MemberSet) -> bool {
        self.a.intersects(&other.a)
    }

    pub fn meets_in_b(&self, other: &MemberSet) -> bool {
        self.b.intersects(&other.b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FamilyJson", into = "FamilyJson")]
pub struct SetFamily {
    params: FamilyParams,
    members: Vec<MemberSet>,
    provenance: String,
}

impl SetFamily {
    /// Wraps members without checking them; use [`verify_semiintersecting`]
    /// for that. Panics if a member was built for a different `N`.
    pub fn new(
        params: FamilyParams,
        members: Vec<MemberSet>,
        provenance: impl Into<String>,
    ) -> Self {
        for m in &members {
            assert_eq!(m.a.width(), params.n, "member built for another N");
        }
        SetFamily {
            params,
            members,
            provenance: provenance.into(),
        }
    }

    pub fn params(&self) -> FamilyParams {
        self.params
    }

    pub fn members(&self) -> &[MemberSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = provenance.into();
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("family serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("family serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Malformed(e.to_string()))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct SetJson {
    #[serde(rename = "A")]
    a: Vec<usize>,
    #[serde(rename = "B")]
    b: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct FamilyJson {
    k: usize,
    #[serde(rename = "N")]
    n: usize,
    #[serde(default)]
    provenance: String,
    sets: Vec<SetJson>,
}

impl From<SetFamily> for FamilyJson {
    fn from(f: SetFamily) -> Self {
        FamilyJson {
            k: f.params.k,
            n: f.params.n,
            provenance: f.provenance,
            sets: f
                .members
                .iter()
                .map(|m| SetJson {
                    a: m.a_points(),
                    b: m.b_points(),
                })
                .collect(),
        }
    }
}

impl TryFrom<FamilyJson> for SetFamily {
    type Error = Error;

    fn try_from(j: FamilyJson) -> Result<Self> {
        let params = FamilyParams::new(j.k, j.n).map_err(|e| Error::Malformed(e.to_string()))?;
        let members = j
            .sets
            .iter()
            .enumerate()
            .map(|(i, s)| {
                for (side, list) in [("A", &s.a), ("B", &s.b)] {
                    if list.windows(2).any(|w| w[0] >= w[1]) {
                        return Err(Error::Malformed(format!(
                            "set {i}: {side} indices must be strictly ascending"
                        )));
                    }
                }
                MemberSet::new(j.n, &s.a, &s.b)
                    .map_err(|e| Error::Malformed(format!("set {i}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SetFamily::new(params, members, j.provenance))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// A member without exactly `k` points on some side.
    SizeViolation {
        member: usize,
        a_size: usize,
        b_size: usize,
    },
    /// Two identical members.
    Duplicate {
        i: usize,
        j: usize,
    },
    BothSidesDisjoint {
        i: usize,
        j: usize,
    },
    BothSidesIntersecting {
        i: usize,
        j: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub members: usize,
    pub violations: Vec<Violation>,
}

/// Checks the semiintersecting property, listing every violation.
///
/// Size violations come first by member index, then pair violations ordered
/// by `(i, j)`. Identical members are reported as [`Violation::Duplicate`].
pub fn verify_semiintersecting(fam: &SetFamily) -> VerificationReport {
    let k = fam.params.k;
    let mut violations = Vec::new();
    for (i, m) in fam.members.iter().enumerate() {
        let (a_size, b_size) = (m.a_size(), m.b_size());
        if a_size != k || b_size != k {
            violations.push(Violation::SizeViolation {
                member: i,
                a_size,
                b_size,
            });
        }
    }
    for (i, s) in fam.members.iter().enumerate() {
        for (j, t) in fam.members.iter().enumerate().skip(i + 1) {
            if s == t {
                violations.push(Violation::Duplicate { i, j });
                continue;
            }
            match (s.meets_in_a(t), s.meets_in_b(t)) {
                (true, true) => violations.push(Violation::BothSidesIntersecting { i, j }),
                (false, false) => violations.push(Violation::BothSidesDisjoint { i, j }),
                _ => {}
            }
        }
    }
    VerificationReport {
        valid: violations.is_empty(),
        members: fam.len(),
        violations,
    }
}

/// `⌊N/k⌋` members sharing `S_A = {0..k-1}` with pairwise disjoint B-blocks.
pub fn trivial_construction(params: FamilyParams) -> SetFamily {
    let FamilyParams { k, n } = params;
    let a: Vec<usize> = (0..k).collect();
    let members = (0..n / k)
        .map(|i| {
            let b: Vec<usize> = (n + i * k..n + (i + 1) * k).collect();
            MemberSet::new(n, &a, &b).expect("points in range")
        })
        .collect();
    SetFamily::new(params, members, format!("trivial(k={k},N={n})"))
}

/// Positive weight per universe point, indexed `0..2N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightFunction {
    weights: Vec<usize>,
}

impl WeightFunction {
    pub fn new(weights: Vec<usize>) -> Result<Self> {
        if let Some(p) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidParams(format!("weight of point {p} is zero")));
        }
        Ok(WeightFunction { weights })
    }

    pub fn constant(n: usize, d: usize) -> Result<Self> {
        WeightFunction::new(vec![d; 2 * n])
    }

    pub fn weight(&self, point: usize) -> usize {
        self.weights[point]
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }
}

/// Replaces each point `c` by `g(c)` fresh points.
///
/// Requires both sides of the universe to have the same total weight `N'`
/// and every member side to have the same weight `k'`. The blocks are laid
/// out in ascending point order on each side.
pub fn blow_up(fam: &SetFamily, g: &WeightFunction) -> Result<SetFamily> {
    let FamilyParams { k, n } = fam.params;
    if g.weights.len() != 2 * n {
        return Err(Error::InvalidParams(format!(
            "weight function covers {} points, universe has {}",
            g.weights.len(),
            2 * n
        )));
    }
    let (wa, wb) = g.weights.split_at(n);
    let (na, nb): (usize, usize) = (wa.iter().sum(), wb.iter().sum());
    if na != nb {
        return Err(Error::UnbalancedWeights(format!(
            "side totals differ: A={na}, B={nb}"
        )));
    }
    let new_n = na;

    let mut new_k = None;
    for (i, m) in fam.members.iter().enumerate() {
        let sa: usize = m.a.iter().map(|p| wa[p]).sum();
        let sb: usize = m.b.iter().map(|p| wb[p]).sum();
        if sa != sb {
            return Err(Error::UnbalancedWeights(format!(
                "member {i} has side weights A={sa}, B={sb}"
            )));
        }
        match new_k {
            None => new_k = Some(sa),
            Some(prev) if prev != sa => {
                return Err(Error::UnbalancedWeights(format!(
                    "member {i} has weight {sa}, earlier members {prev}"
                )))
            }
            _ => {}
        }
    }
    let new_k = new_k.unwrap_or(k);
    let params = FamilyParams::new(new_k, new_n)?;

    let offsets = |w: &[usize]| -> Vec<usize> {
        w.iter()
            .scan(0, |acc, &x| {
                let start = *acc;
                *acc += x;
                Some(start)
            })
            .collect()
    };
    let (oa, ob) = (offsets(wa), offsets(wb));

    let members = fam
        .members
        .iter()
        .map(|m| {
            let mut a = BitSet::new(new_n);
            for p in m.a.iter() {
                (oa[p]..oa[p] + wa[p]).for_each(|x| a.insert(x));
            }
            let mut b = BitSet::new(new_n);
            for p in m.b.iter() {
                (ob[p]..ob[p] + wb[p]).for_each(|x| b.insert(x));
            }
            MemberSet::from_bits(a, b)
        })
        .collect();
    Ok(SetFamily::new(
        params,
        members,
        format!("blow_up[{}]", fam.provenance),
    ))
}

/// Re-indexes a family into a universe with `N = bigger_n`; the A indices
/// are kept and the B indices shift by `bigger_n - N`.
pub fn embed(fam: &SetFamily, bigger_n: usize) -> Result<SetFamily> {
    let FamilyParams { k, n } = fam.params;
    if bigger_n < n {
        return Err(Error::ShrinkNotAllowed {
            from: n,
            to: bigger_n,
        });
    }
    if bigger_n == n {
        return Ok(fam.clone());
    }
    let widen = |s: &BitSet| BitSet::from_indices(bigger_n, s.iter());
    let members = fam
        .members
        .iter()
        .map(|m| MemberSet::from_bits(widen(&m.a), widen(&m.b)))
        .collect();
    Ok(SetFamily::new(
        FamilyParams { k, n: bigger_n },
        members,
        format!("embed(N={bigger_n})[{}]", fam.provenance),
    ))
}
