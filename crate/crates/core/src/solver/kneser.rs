use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Graphs stored as one adjacency bit vector per vertex.
pub trait BitGraph {
    fn order(&self) -> usize;
    fn neighbors(&self, v: usize) -> &BitSet;

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).contains(v)
    }

    fn edge_count(&self) -> usize {
        (0..self.order())
            .map(|v| self.neighbors(v).count())
            .sum::<usize>()
            / 2
    }

    fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            u < self.order() && vertices[i + 1..].iter().all(|&v| self.adjacent(u, v))
        })
    }
}

/// Default limit on graph order.
pub const DEFAULT_VERTEX_CAP: usize = 20_000;

/// `C(n, r)` in 128 bits, saturating.
pub fn binom(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Rank of a sorted k-subset in colexicographic order: `Σ C(c_i, i+1)`.
pub fn colex_rank(subset: &[usize]) -> u128 {
    subset
        .iter()
        .enumerate()
        .map(|(i, &c)| binom(c, i + 1))
        .sum()
}

/// All k-subsets of `0..n` in colex order.
pub fn k_subsets_colex(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        out.push(c.clone());
        // Advance the lowest position that can move up without colliding.
        let mut i = 0;
        while i < k {
            let limit = if i + 1 < k { c[i + 1] } else { n };
            if c[i] + 1 < limit {
                break;
            }
            i += 1;
        }
        if i == k {
            break;
        }
        c[i] += 1;
        for (j, x) in c.iter_mut().enumerate().take(i) {
            *x = j;
        }
    }
    out
}

/// `KG(N, k)`: k-subsets of `0..N` in colex order, adjacent when disjoint.
#[derive(Debug, Clone)]
pub struct KneserGraph {
    n: usize,
    k: usize,
    subsets: Vec<BitSet>,
    adj: Vec<BitSet>,
}

impl KneserGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Subset of vertex `v`, as a bit vector over `0..N`.
    pub fn subset(&self, v: usize) -> &BitSet {
        &self.subsets[v]
    }

    pub fn rank(&self, subset: &[usize]) -> Option<usize> {
        if subset.len() != self.k || subset.windows(2).any(|w| w[0] >= w[1]) {
            return None;
        }
        if subset.last().is_some_and(|&x| x >= self.n) {
            return None;
        }
        Some(colex_rank(subset) as usize)
    }
}

impl BitGraph for KneserGraph {
    fn order(&self) -> usize {
        self.subsets.len()
    }

    fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }
}

pub fn build_kneser(n: usize, k: usize, cap: usize) -> Result<KneserGraph> {
    if k == 0 || k > n {
        return Err(Error::InvalidParams(format!(
            "need 1 <= k <= N, got k={k}, N={n}"
        )));
    }
    let count = binom(n, k);
    if count > cap as u128 {
        return Err(Error::TooLarge {
            vertices: count,
            cap,
        });
    }
    let subsets: Vec<BitSet> = k_subsets_colex(n, k)
        .into_iter()
        .map(|s| BitSet::from_indices(n, s))
        .collect();
    let v = subsets.len();
    let mut adj = vec![BitSet::new(v); v];
    for i in 0..v {
        for j in i + 1..v {
            if !subsets[i].intersects(&subsets[j]) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    Ok(KneserGraph { n, k, subsets, adj })
}
