//! Exact maximum clique search on bit-vector graphs.
//!
//! Branch and bound in the style of BBMC: vertices are renumbered by a
//! smallest-last degeneracy order, candidate sets are bit vectors, and each
//! node is bounded by a greedy coloring of its candidate set.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::kneser::BitGraph;
use crate::bitset::BitSet;

#[derive(Debug, Clone, Default)]
pub struct SolverOptions {
    /// Stop after this long and report the incumbent as a lower bound.
    pub time_limit: Option<Duration>,
    /// Known clique used as the initial incumbent. Ignored unless valid.
    pub seed_clique: Option<Vec<usize>>,
    /// Worker threads; 0 and 1 both mean sequential.
    pub threads: usize,
    /// Known upper bound on the clique number; reaching it ends the search.
    pub upper_bound: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolveStatus {
    Exact,
    LowerBoundOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueResult {
    pub size: usize,
    pub status: SolveStatus,
    /// Clique vertices in ascending order.
    pub witness: Vec<usize>,
    pub nodes: u64,
    #[serde(rename = "ms")]
    pub elapsed_ms: u64,
}

/// Smallest-last order: repeatedly remove a vertex of minimum remaining
/// degree, lowest index first. Returned in removal order.
pub fn degeneracy_order<G: BitGraph>(g: &G) -> Vec<usize> {
    let n = g.order();
    let mut deg: Vec<usize> = (0..n).map(|v| g.neighbors(v).count()).collect();
    let max_deg = deg.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); max_deg + 1];
    for v in 0..n {
        buckets[deg[v]].insert(v);
    }
    let mut alive = BitSet::full(n);
    let mut order = Vec::with_capacity(n);
    let mut lo = 0;
    for _ in 0..n {
        while buckets[lo].is_empty() {
            lo += 1;
        }
        let v = buckets[lo].pop_first().expect("bucket not empty");
        alive.remove(v);
        order.push(v);
        for u in g.neighbors(v).iter() {
            if alive.contains(u) {
                buckets[deg[u]].remove(&u);
                deg[u] -= 1;
                buckets[deg[u]].insert(u);
            }
        }
        lo = lo.saturating_sub(1);
    }
    order
}

struct Shared {
    best_size: AtomicUsize,
    best: Mutex<Vec<usize>>,
    stop: AtomicBool,
    timed_out: AtomicBool,
    deadline: Option<Instant>,
    target: usize,
}

impl Shared {
    fn offer(&self, clique: &[usize]) {
        let mut best = self.best.lock().expect("incumbent lock");
        if clique.len() > best.len() {
            best.clear();
            best.extend_from_slice(clique);
            self.best_size.store(clique.len(), Ordering::SeqCst);
            if clique.len() >= self.target {
                self.stop.store(true, Ordering::SeqCst);
            }
        }
    }
}

struct Search<'a> {
    adj: &'a [BitSet],
    shared: &'a Shared,
    clique: Vec<usize>,
    nodes: u64,
}

impl Search<'_> {
    fn should_stop(&mut self) -> bool {
        if self.shared.stop.load(Ordering::Relaxed) {
            return true;
        }
        if self.nodes.is_multiple_of(256) {
            if let Some(d) = self.shared.deadline {
                if Instant::now() >= d {
                    self.shared.timed_out.store(true, Ordering::SeqCst);
                    self.shared.stop.store(true, Ordering::SeqCst);
                    return true;
                }
            }
        }
        false
    }

    /// Greedy sequential coloring of `p`. Returns the vertices whose color
    /// reaches `kmin`, with nondecreasing colors.
    fn color(&self, p: &BitSet, kmin: usize) -> (Vec<usize>, Vec<usize>) {
        let mut verts = Vec::new();
        let mut colors = Vec::new();
        let mut uncolored = p.clone();
        let mut k = 0;
        while !uncolored.is_empty() {
            k += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.first() {
                uncolored.remove(v);
                q.remove(v);
                q.difference_with(&self.adj[v]);
                if k >= kmin {
                    verts.push(v);
                    colors.push(k);
                }
            }
        }
        (verts, colors)
    }

    fn expand(&mut self, mut p: BitSet) {
        self.nodes += 1;
        if self.should_stop() {
            return;
        }
        let best = self.shared.best_size.load(Ordering::Relaxed);
        let kmin = (best + 1).saturating_sub(self.clique.len()).max(1);
        let (verts, colors) = self.color(&p, kmin);
        for idx in (0..verts.len()).rev() {
            let best = self.shared.best_size.load(Ordering::Relaxed);
            if self.clique.len() + colors[idx] <= best {
                return;
            }
            let v = verts[idx];
            self.clique.push(v);
            let mut np = p.clone();
            np.intersect_with(&self.adj[v]);
            if np.is_empty() {
                if self.clique.len() > best {
                    self.shared.offer(&self.clique);
                }
            } else {
                self.expand(np);
            }
            self.clique.pop();
            if self.shared.stop.load(Ordering::Relaxed) {
                return;
            }
            p.remove(v);
        }
    }
}

fn valid_seed<G: BitGraph>(g: &G, seed: &[usize]) -> bool {
    let mut s = seed.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len() == seed.len() && g.is_clique(seed)
}

/// Maximum clique of `g`. The witness is checked against `g` before return.
pub fn max_clique<G: BitGraph + Sync>(g: &G, opts: &SolverOptions) -> CliqueResult {
    let start = Instant::now();
    let n = g.order();
    let target = opts.upper_bound.unwrap_or(usize::MAX);

    // Position i in the search holds vertex order[i]; the densest core goes first.
    let mut order = degeneracy_order(g);
    order.reverse();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let adj: Vec<BitSet> = order
        .iter()
        .map(|&v| BitSet::from_indices(n, g.neighbors(v).iter().map(|u| pos[u])))
        .collect();

    let seed: Vec<usize> = opts
        .seed_clique
        .as_ref()
        .filter(|s| valid_seed(g, s))
        .map(|s| s.iter().map(|&v| pos[v]).collect())
        .unwrap_or_default();
    let shared = Shared {
        best_size: AtomicUsize::new(seed.len()),
        stop: AtomicBool::new(seed.len() >= target),
        best: Mutex::new(seed),
        timed_out: AtomicBool::new(false),
        deadline: opts.time_limit.map(|d| start + d),
        target,
    };

    let mut nodes = 0u64;
    if n > 0 && !shared.stop.load(Ordering::SeqCst) {
        nodes = run_root(&adj, &shared, opts.threads.max(1));
    }

    let mut witness: Vec<usize> = shared
        .best
        .into_inner()
        .expect("incumbent lock")
        .into_iter()
        .map(|i| order[i])
        .collect();
    witness.sort_unstable();
    assert!(g.is_clique(&witness), "solver produced a non-clique");
    let timed_out = shared.timed_out.load(Ordering::SeqCst);
    CliqueResult {
        size: witness.len(),
        status: if timed_out {
            SolveStatus::LowerBoundOnly
        } else {
            SolveStatus::Exact
        },
        witness,
        nodes,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

fn run_root(adj: &[BitSet], shared: &Shared, threads: usize) -> u64 {
    let n = adj.len();
    let all = BitSet::full(n);
    let mut root = Search {
        adj,
        shared,
        clique: Vec::new(),
        nodes: 0,
    };
    if threads == 1 {
        root.expand(all);
        return root.nodes;
    }

    // Each top-level branch becomes a task; task i may use every vertex
    // not branched on by a task before it.
    root.nodes = 1;
    let kmin = shared.best_size.load(Ordering::SeqCst) + 1;
    let (verts, colors) = root.color(&all, kmin);
    let tasks: Vec<(usize, usize, BitSet)> = {
        let mut p = all;
        let mut out = Vec::with_capacity(verts.len());
        for idx in (0..verts.len()).rev() {
            let v = verts[idx];
            let mut np = p.clone();
            np.intersect_with(&adj[v]);
            out.push((v, colors[idx], np));
            p.remove(v);
        }
        out
    };
    let next = AtomicUsize::new(0);
    let total = AtomicUsize::new(1);
    std::thread::scope(|s| {
        for _ in 0..threads {
            s.spawn(|| {
                let mut w = Search {
                    adj,
                    shared,
                    clique: Vec::new(),
                    nodes: 0,
                };
                loop {
                    let i = next.fetch_add(1, Ordering::SeqCst);
                    if i >= tasks.len() || shared.stop.load(Ordering::SeqCst) {
                        break;
                    }
                    let (v, color, ref np) = tasks[i];
                    if color <= shared.best_size.load(Ordering::SeqCst) {
                        continue;
                    }
                    w.clique.push(v);
                    if np.is_empty() {
                        shared.offer(&w.clique);
                    } else {
                        w.expand(np.clone());
                    }
                    w.clique.pop();
                }
                total.fetch_add(w.nodes as usize, Ordering::SeqCst);
            });
        }
    });
    total.into_inner() as u64
}
