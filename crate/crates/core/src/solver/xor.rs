use std::io::{self, Write};

use super::kneser::{binom, build_kneser, colex_rank, BitGraph, KneserGraph};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::set_family::{FamilyParams, MemberSet, SetFamily};

/// Xor product of `KG(N, k)` with itself.
///
/// Vertex `rank(A) * C(N,k) + rank(B)` stands for the set `A ∪ (N + B)`.
/// Two vertices are adjacent when exactly one of the coordinate pairs is
/// adjacent in the Kneser graph, i.e. the sets meet on exactly one side.
#[derive(Debug, Clone)]
pub struct XorGraph {
    kneser: KneserGraph,
    adj: Vec<BitSet>,
}

impl XorGraph {
    pub fn n(&self) -> usize {
        self.kneser.n()
    }

    pub fn k(&self) -> usize {
        self.kneser.k()
    }

    pub fn kneser(&self) -> &KneserGraph {
        &self.kneser
    }

    /// Coordinate ranks `(rank(A), rank(B))` of vertex `v`.
    pub fn coords(&self, v: usize) -> (usize, usize) {
        let c = self.kneser.order();
        (v / c, v % c)
    }

    /// The member set represented by vertex `v`.
    pub fn member(&self, v: usize) -> MemberSet {
        let (a, b) = self.coords(v);
        MemberSet::from_bits(self.kneser.subset(a).clone(), self.kneser.subset(b).clone())
    }
}

impl BitGraph for XorGraph {
    fn order(&self) -> usize {
        self.adj.len()
    }

    fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }
}

/// Number of vertices of the Xor product, `C(N,k)^2`, saturating.
pub fn xor_vertex_count(n: usize, k: usize) -> u128 {
    let c = binom(n, k);
    c.saturating_mul(c)
}

pub fn build_xor_product(n: usize, k: usize, cap: usize) -> Result<XorGraph> {
    FamilyParams::new(k, n)?;
    let vertices = xor_vertex_count(n, k);
    if vertices > cap as u128 {
        return Err(Error::TooLarge { vertices, cap });
    }
    let kneser = build_kneser(n, k, usize::MAX)?;
    let c = kneser.order();
    let v = c * c;
    let non_adj: Vec<BitSet> = (0..c)
        .map(|i| {
            let mut s = kneser.neighbors(i).complement();
            s.remove(i);
            s
        })
        .collect();
    let mut adj = Vec::with_capacity(v);
    for x in 0..v {
        let (a, b) = (x / c, x % c);
        let mut row = BitSet::new(v);
        for a2 in 0..c {
            // Within block a2 the row is either the Kneser row of b or its
            // complement, minus b itself when a2 == a.
            let disjoint_a = kneser.adjacent(a, a2);
            let block = if disjoint_a {
                // A sides disjoint: B sides must meet (b2 != b allowed, b2 == b meets).
                let mut s = non_adj[b].clone();
                s.insert(b);
                s
            } else {
                kneser.neighbors(b).clone()
            };
            for b2 in block.iter() {
                let y = a2 * c + b2;
                if y != x {
                    row.insert(y);
                }
            }
        }
        adj.push(row);
    }
    Ok(XorGraph { kneser, adj })
}

/// Vertex ids of the members of `fam` in the Xor product of its parameters.
pub fn family_to_clique(fam: &SetFamily) -> Result<Vec<usize>> {
    let FamilyParams { k, n } = fam.params();
    let c = binom(n, k);
    if c.checked_mul(c).is_none_or(|v| v > usize::MAX as u128) {
        return Err(Error::TooLarge {
            vertices: u128::MAX,
            cap: usize::MAX,
        });
    }
    fam.members()
        .iter()
        .enumerate()
        .map(|(i, m)| {
            if m.a_size() != k || m.b_size() != k {
                return Err(Error::ParamMismatch(format!(
                    "member {i} has sides of size {} and {}, expected {k}",
                    m.a_size(),
                    m.b_size()
                )));
            }
            let a: Vec<usize> = m.a_bits().iter().collect();
            let b: Vec<usize> = m.b_bits().iter().collect();
            Ok((colex_rank(&a) * c + colex_rank(&b)) as usize)
        })
        .collect()
}

/// Family of the given vertices, without checking adjacency.
pub fn vertices_to_family(g: &XorGraph, vertices: &[usize]) -> Result<SetFamily> {
    let count = g.order();
    if let Some(&v) = vertices.iter().find(|&&v| v >= count) {
        return Err(Error::VertexOutOfRange { vertex: v, count });
    }
    let params = FamilyParams::new(g.k(), g.n())?;
    let members = vertices.iter().map(|&v| g.member(v)).collect();
    Ok(SetFamily::new(params, members, "clique"))
}

/// Family of a clique; fails on the first non-adjacent pair.
pub fn clique_to_family(g: &XorGraph, vertices: &[usize]) -> Result<SetFamily> {
    let count = g.order();
    if let Some(&v) = vertices.iter().find(|&&v| v >= count) {
        return Err(Error::VertexOutOfRange { vertex: v, count });
    }
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            if !g.adjacent(u, v) {
                return Err(Error::NotAClique(u, v));
            }
        }
    }
    vertices_to_family(g, vertices)
}

/// Writes the graph in DIMACS edge format with 1-based vertex ids.
pub fn write_dimacs<G: BitGraph, W: Write>(g: &G, mut w: W) -> io::Result<()> {
    writeln!(w, "p edge {} {}", g.order(), g.edge_count())?;
    for u in 0..g.order() {
        for v in g.neighbors(u).iter().filter(|&v| v > u) {
            writeln!(w, "e {} {}", u + 1, v + 1)?;
        }
    }
    w.flush()
}
