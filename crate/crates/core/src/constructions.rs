//! Lower-bound constructions of semiintersecting families.
//!
//! All of them start from the affine plane over GF(p): its first p parallel
//! classes supply the A-parts, and each class is paired with its own B-block.
//! Since lines from different classes always meet in exactly one point, two
//! members meet in A exactly when their B-blocks differ.

use crate::affine_plane::{line, parallel_classes};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::gf_field::{is_prime_power, Field, FieldElement, DEFAULT_FIELD_CAP};
use crate::set_family::{
    blow_up, embed, trivial_construction, FamilyParams, MemberSet, SetFamily, WeightFunction,
};

/// `p²` members for `(p, p²)`: the lines of parallel class `i < p`, each
/// joined with B-block `B_i = {N + i·p, .., N + (i+1)·p - 1}`.
pub fn affine_construction(p: usize) -> Result<SetFamily> {
    let f = Field::new(p as u64)?;
    let n = p * p;
    let classes = parallel_classes(&f);
    let mut members = Vec::with_capacity(n);
    for (i, class) in classes.iter().take(p).enumerate() {
        let block = BitSet::from_indices(n, i * p..(i + 1) * p);
        for l in &class.lines {
            let a = BitSet::from_indices(n, l.point_indices());
            members.push(MemberSet::from_bits(a, block.clone()));
        }
    }
    Ok(SetFamily::new(
        FamilyParams::new(p, n)?,
        members,
        format!("affine(p={p})"),
    ))
}

/// `l·p²` members for `(p, l·p²)`: `l` disjoint copies of the affine plane
/// on A, where copy `j` takes its B-blocks from the lines of parallel class
/// `j` of a single plane `E` on the first `p²` points of B.
pub fn stacked_affine(p: usize, l: usize) -> Result<SetFamily> {
    let f = Field::new(p as u64)?;
    if l > p + 1 {
        return Err(Error::TooManyCopies { l, max: p + 1 });
    }
    if l == 0 {
        return Err(Error::InvalidParams("need at least one copy".into()));
    }
    let plane = p * p;
    let n = l * plane;
    let classes = parallel_classes(&f);
    let mut members = Vec::with_capacity(n);
    for copy in 0..l {
        let base = copy * plane;
        for (i, class) in classes.iter().take(p).enumerate() {
            let block = BitSet::from_indices(n, classes[copy].lines[i].point_indices());
            for ln in &class.lines {
                let a = BitSet::from_indices(n, ln.point_indices().map(|x| base + x));
                members.push(MemberSet::from_bits(a, block.clone()));
            }
        }
    }
    Ok(SetFamily::new(
        FamilyParams::new(p, n)?,
        members,
        format!("stacked(p={p},l={l})"),
    ))
}

/// `⌊N/p⌋ - p² + p³` members for `(p, N)` with `N ≥ p³`.
///
/// [`stacked_affine`] with `l = p` on the first `p³` points of A, plus
/// disjoint p-blocks of the remaining A points, all paired with the offset-0
/// line of the vertical class of `E` (the one class the stack leaves unused).
pub fn big_n_construction(p: usize, n: usize) -> Result<SetFamily> {
    let f = Field::new(p as u64)?;
    let cube = p * p * p;
    if n < cube {
        return Err(Error::NTooSmall { n, min: cube });
    }
    let stacked = embed(&stacked_affine(p, p)?, n)?;
    let reserved = line(&f, p, FieldElement::ZERO);
    let e = BitSet::from_indices(n, reserved.point_indices());
    let mut members = stacked.members().to_vec();
    for j in 0..(n - cube) / p {
        let c = BitSet::from_indices(n, cube + j * p..cube + (j + 1) * p);
        members.push(MemberSet::from_bits(c, e.clone()));
    }
    Ok(SetFamily::new(
        FamilyParams::new(p, n)?,
        members,
        format!("big_n(p={p},N={n})"),
    ))
}

/// Weight function turning [`affine_construction`]`(p)` into a `(k, pk)`
/// family: weight `k-p+1` on the vertical line `x = 0` (A points `0..p`) and
/// on the first point of every B-block, weight 1 elsewhere.
pub fn weighted_pk_weights(k: usize, p: usize) -> Result<WeightFunction> {
    if p > k {
        return Err(Error::PTooLarge { p, k });
    }
    let n = p * p;
    let heavy = k - p + 1;
    let mut w = vec![1; 2 * n];
    w[..p].iter_mut().for_each(|x| *x = heavy);
    (0..p).for_each(|i| w[n + i * p] = heavy);
    WeightFunction::new(w)
}

/// `p²` members for `(k, pk)`, by blowing up [`affine_construction`]`(p)`.
pub fn weighted_pk_construction(k: usize, p: usize) -> Result<SetFamily> {
    if p > k {
        return Err(Error::PTooLarge { p, k });
    }
    let base = affine_construction(p)?;
    let g = weighted_pk_weights(k, p)?;
    Ok(blow_up(&base, &g)?.with_provenance(format!("weighted(k={k},p={p})")))
}

/// Constructions tried by [`best_known_lower`], in tie-break order: on equal
/// values the earlier branch wins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Branch {
    Trivial,
    DivisorLift,
    Affine,
    Stacked,
    BigN,
    Weighted,
}

#[derive(Debug, Clone)]
pub struct LowerBound {
    pub value: usize,
    pub branch: Branch,
    pub provenance: String,
    /// Absent when the family would be too large to materialize.
    pub witness: Option<SetFamily>,
}

/// Upper limit on `|family|·2N` bits for building witnesses.
pub const WITNESS_BIT_BUDGET: usize = 1 << 28;

#[derive(Debug, Clone)]
struct Candidate {
    branch: Branch,
    value: usize,
    plan: Plan,
}

#[derive(Debug, Clone)]
enum Plan {
    Trivial,
    Lift { d: usize, inner: Box<Candidate> },
    Affine { p: usize },
    Stacked { p: usize, l: usize },
    BigN { p: usize },
    Weighted { p: usize },
}

fn field_prime_power(k: usize) -> bool {
    k as u64 <= DEFAULT_FIELD_CAP && is_prime_power(k as u64)
}

fn candidates(k: usize, n: usize, allow_lift: bool) -> Vec<Candidate> {
    let mut out = vec![Candidate {
        branch: Branch::Trivial,
        value: n / k,
        plan: Plan::Trivial,
    }];
    if allow_lift {
        // d | k with the family lifted into d·⌊N/d⌋ and then embedded, so the
        // branch stays monotone in N.
        for d in (2..=k).filter(|d| k.is_multiple_of(*d)) {
            let inner = best_candidate(k / d, n / d, false);
            out.push(Candidate {
                branch: Branch::DivisorLift,
                value: inner.value,
                plan: Plan::Lift {
                    d,
                    inner: Box::new(inner),
                },
            });
        }
    }
    if field_prime_power(k) {
        let p = k;
        if n >= p * p {
            out.push(Candidate {
                branch: Branch::Affine,
                value: p * p,
                plan: Plan::Affine { p },
            });
            let l = (n / (p * p)).min(p + 1);
            out.push(Candidate {
                branch: Branch::Stacked,
                value: l * p * p,
                plan: Plan::Stacked { p, l },
            });
        }
        if n >= p * p * p {
            out.push(Candidate {
                branch: Branch::BigN,
                value: n / p - p * p + p * p * p,
                plan: Plan::BigN { p },
            });
        }
    }
    if let Some(p) = (2..=k).rev().find(|&p| field_prime_power(p) && p * k <= n) {
        out.push(Candidate {
            branch: Branch::Weighted,
            value: p * p,
            plan: Plan::Weighted { p },
        });
    }
    out
}

fn best_candidate(k: usize, n: usize, allow_lift: bool) -> Candidate {
    candidates(k, n, allow_lift)
        .into_iter()
        .reduce(|best, c| {
            if c.value > best.value || (c.value == best.value && c.branch < best.branch) {
                c
            } else {
                best
            }
        })
        .expect("trivial branch always present")
}

fn describe(c: &Candidate, k: usize, n: usize) -> String {
    match &c.plan {
        Plan::Trivial => format!("trivial(k={k},N={n})"),
        Plan::Lift { d, inner } => {
            format!("lift(d={d})[{}]", describe(inner, k / d, n / d))
        }
        Plan::Affine { p } => format!("affine(p={p})"),
        Plan::Stacked { p, l } => format!("stacked(p={p},l={l})"),
        Plan::BigN { p } => format!("big_n(p={p},N={n})"),
        Plan::Weighted { p } => format!("weighted(k={k},p={p})"),
    }
}

fn build(c: &Candidate, k: usize, n: usize) -> Result<SetFamily> {
    let fam = match &c.plan {
        Plan::Trivial => trivial_construction(FamilyParams::new(k, n)?),
        Plan::Lift { d, inner } => {
            let small = build(inner, k / d, n / d)?;
            let g = WeightFunction::constant(n / d, *d)?;
            embed(&blow_up(&small, &g)?, n)?
        }
        Plan::Affine { p } => embed(&affine_construction(*p)?, n)?,
        Plan::Stacked { p, l } => embed(&stacked_affine(*p, *l)?, n)?,
        Plan::BigN { p } => big_n_construction(*p, n)?,
        Plan::Weighted { p } => embed(&weighted_pk_construction(k, *p)?, n)?,
    };
    debug_assert_eq!(fam.len(), c.value);
    Ok(fam.with_provenance(describe(c, k, n)))
}

/// Largest family among all constructions applicable to `(k, N)`, with a
/// witness when it fits in [`WITNESS_BIT_BUDGET`].
pub fn best_known_lower(k: usize, n: usize) -> Result<LowerBound> {
    FamilyParams::new(k, n)?;
    let best = best_candidate(k, n, true);
    let witness = if best.value.saturating_mul(2 * n) <= WITNESS_BIT_BUDGET {
        Some(build(&best, k, n)?)
    } else {
        None
    };
    Ok(LowerBound {
        value: best.value,
        branch: best.branch,
        provenance: describe(&best, k, n),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set_family::verify_semiintersecting;

    fn valid(f: &SetFamily) -> bool {
        verify_semiintersecting(f).valid
    }

    #[test]
    fn affine_sizes() {
        for (p, size) in [(2, 4), (3, 9), (7, 49)] {
            let f = affine_construction(p).unwrap();
            assert_eq!(f.len(), size);
            assert_eq!(f.params(), FamilyParams { k: p, n: p * p });
            assert!(valid(&f));
        }
        assert_eq!(affine_construction(6).unwrap_err(), Error::NotPrimePower(6));
    }

    #[test]
    fn stacked_sizes() {
        let f = stacked_affine(2, 3).unwrap();
        assert_eq!((f.len(), f.params().n), (12, 12));
        assert!(valid(&f));
        let f = stacked_affine(3, 2).unwrap();
        assert_eq!((f.len(), f.params().n), (18, 18));
        assert!(valid(&f));
        assert_eq!(
            stacked_affine(3, 1).unwrap().len(),
            affine_construction(3).unwrap().len()
        );
        assert_eq!(
            stacked_affine(2, 4).unwrap_err(),
            Error::TooManyCopies { l: 4, max: 3 }
        );
    }

    #[test]
    fn big_n_sizes() {
        let f = big_n_construction(2, 8).unwrap();
        assert_eq!(f.len(), 8);
        assert!(valid(&f));
        let f = big_n_construction(2, 12).unwrap();
        assert_eq!(f.len(), 10);
        assert!(valid(&f));
        let f = big_n_construction(3, 27).unwrap();
        assert_eq!(f.len(), 27);
        assert!(valid(&f));
        assert_eq!(
            big_n_construction(2, 7).unwrap_err(),
            Error::NTooSmall { n: 7, min: 8 }
        );
    }

    #[test]
    fn weighted_sizes() {
        let f = weighted_pk_construction(5, 3).unwrap();
        assert_eq!(f.params(), FamilyParams { k: 5, n: 15 });
        assert_eq!(f.len(), 9);
        assert!(valid(&f));

        let f = weighted_pk_construction(4, 2).unwrap();
        assert_eq!(f.params(), FamilyParams { k: 4, n: 8 });
        assert_eq!(f.len(), 4);
        assert!(valid(&f));
        let w = weighted_pk_weights(4, 2).unwrap();
        assert_eq!(w.weights()[..4].iter().sum::<usize>(), 8);
        assert_eq!(w.weights()[4..].iter().sum::<usize>(), 8);

        let same = weighted_pk_construction(3, 3).unwrap();
        assert_eq!(same.members(), affine_construction(3).unwrap().members());

        assert_eq!(
            weighted_pk_construction(2, 3).unwrap_err(),
            Error::PTooLarge { p: 3, k: 2 }
        );
    }

    #[test]
    fn best_lower_examples() {
        let b = best_known_lower(2, 100).unwrap();
        assert_eq!(b.value, 54);
        assert_eq!(b.branch, Branch::BigN);

        let b = best_known_lower(6, 36).unwrap();
        assert_eq!(b.value, 25);
        assert_eq!(b.branch, Branch::Weighted);
        assert!(valid(b.witness.as_ref().unwrap()));

        let b = best_known_lower(1, 5).unwrap();
        assert_eq!(b.value, 5);
        assert_eq!(b.branch, Branch::Trivial);

        let b = best_known_lower(3, 9).unwrap();
        assert_eq!((b.value, b.branch), (9, Branch::Affine));

        let b = best_known_lower(5, 15).unwrap();
        assert_eq!((b.value, b.branch), (9, Branch::Weighted));
    }

    #[test]
    fn lift_witness_is_valid() {
        // (6, 54): lifting stacked (3, 27) by d = 2 gives 27 > weighted 25.
        let b = best_known_lower(6, 54).unwrap();
        assert_eq!(b.branch, Branch::DivisorLift);
        assert_eq!(b.value, 27);
        let w = b.witness.unwrap();
        assert_eq!(w.len(), 27);
        assert_eq!(w.params(), FamilyParams { k: 6, n: 54 });
        assert!(valid(&w));
        let next = best_known_lower(6, 55).unwrap();
        assert_eq!(next.value, 27);
        assert!(valid(next.witness.as_ref().unwrap()));
    }

    #[test]
    fn stacked_beats_affine_when_room() {
        let b = best_known_lower(4, 56).unwrap();
        assert_eq!((b.value, b.branch), (48, Branch::Stacked));
    }

    #[test]
    fn huge_instances_skip_witness() {
        let b = best_known_lower(1, 1 << 20).unwrap();
        assert_eq!(b.value, 1 << 20);
        assert!(b.witness.is_none());
    }
}
