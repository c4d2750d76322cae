use serde::Serialize;

use super::clique::{max_clique, CliqueResult, SolveStatus, SolverOptions};
use super::kneser::DEFAULT_VERTEX_CAP;
use super::xor::{build_xor_product, clique_to_family, family_to_clique, xor_vertex_count};
use crate::bounds::{report, rules, BoundReport, ReportOptions, UpperEntry};
use crate::error::Result;
use crate::set_family::SetFamily;

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub solver: SolverOptions,
    pub vertex_cap: usize,
    pub report: ReportOptions,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            solver: SolverOptions::default(),
            vertex_cap: DEFAULT_VERTEX_CAP,
            report: ReportOptions::default(),
        }
    }
}

/// How the final answer was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Bounds alone meet; no search was needed.
    Bounds,
    /// The clique search ran.
    Search,
    /// The graph exceeds the vertex cap; only bounds are available.
    BoundsOnly,
}

#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub report: BoundReport,
    pub method: Method,
    pub clique: Option<CliqueResult>,
    /// Best family found, if one was materialized.
    pub family: Option<SetFamily>,
}

impl SolveOutcome {
    pub fn status(&self) -> SolveStatus {
        if self.report.exact.is_some() {
            SolveStatus::Exact
        } else {
            SolveStatus::LowerBoundOnly
        }
    }

    pub fn size(&self) -> u64 {
        self.report.exact.unwrap_or(self.report.lower.value)
    }
}

/// Computes `f(k, N)` exactly when bounds or the clique search allow it.
pub fn solve_f(k: usize, n: usize, opts: &SolveOptions) -> Result<SolveOutcome> {
    let mut rep = report(k, n, &opts.report)?;
    if rep.exact.is_some() {
        let family = rep.witness.clone();
        return Ok(SolveOutcome {
            report: rep,
            method: Method::Bounds,
            clique: None,
            family,
        });
    }
    if xor_vertex_count(n, k) > opts.vertex_cap as u128 {
        let family = rep.witness.clone();
        return Ok(SolveOutcome {
            report: rep,
            method: Method::BoundsOnly,
            clique: None,
            family,
        });
    }

    let g = build_xor_product(n, k, opts.vertex_cap)?;
    let mut solver = opts.solver.clone();
    if solver.seed_clique.is_none() {
        solver.seed_clique = rep.witness.as_ref().map(family_to_clique).transpose()?;
    }
    let min_upper = rep.min_upper().map(|u| u.value as usize);
    solver.upper_bound = match (solver.upper_bound, min_upper) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    let result = max_clique(&g, &solver);
    let family = clique_to_family(&g, &result.witness)?.with_provenance("solver");
    let size = result.size as u64;
    if size > rep.lower.value {
        rep.lower.value = size;
        rep.lower.provenance = rules::SOLVER.into();
        rep.witness = Some(family.clone());
    }
    if result.status == SolveStatus::Exact {
        rep.uppers.push(UpperEntry {
            value: size,
            rule: rules::SOLVER.into(),
        });
        rep.exact = Some(size);
    }
    Ok(SolveOutcome {
        report: rep,
        method: Method::Search,
        clique: Some(result),
        family: Some(family),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set_family::verify_semiintersecting;

    #[test]
    fn k1_is_n() {
        for n in 1..=6 {
            let out = solve_f(1, n, &SolveOptions::default()).unwrap();
            assert_eq!(out.report.exact, Some(n as u64), "N={n}");
        }
    }

    #[test]
    fn k2_n4_from_bounds_or_search() {
        let out = solve_f(2, 4, &SolveOptions::default()).unwrap();
        assert_eq!(out.report.exact, Some(4));
        let fam = out.family.unwrap();
        assert_eq!(fam.len(), 4);
        assert!(verify_semiintersecting(&fam).valid);
    }

    #[test]
    fn over_cap_gives_bounds_only() {
        let opts = SolveOptions {
            vertex_cap: 10,
            ..Default::default()
        };
        let out = solve_f(2, 7, &opts).unwrap();
        assert_eq!(out.method, Method::BoundsOnly);
        assert!(out.clique.is_none());
    }
}
