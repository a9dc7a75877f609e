//! Graphicality tests and deterministic greedy constructions.
//!
//! Ties are always broken by the lowest vertex index, so every construction
//! is reproducible.

use crate::error::{Error, Result};
use crate::graphs::{
    BipartiteDegreeSequence, BipartiteGraph, DegreeSequence, DirectedDegreeSequence, DirectedGraph,
    SimpleGraph,
};

/// Erdős–Gallai test. Sorting dominates: `O(n log n)`.
pub fn erdos_gallai_check(d: &DegreeSequence) -> bool {
    let n = d.len();
    if d.sum() % 2 == 1 || d.as_slice().iter().any(|&x| x >= n) {
        return false;
    }
    let mut sorted = d.as_slice().to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut suffix = vec![0usize; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] + sorted[i];
    }
    let mut lhs = 0;
    // `p` = first index in the tail whose degree is < k; degrees beyond it
    // contribute themselves, degrees before it contribute k.
    let mut p = n;
    for k in 1..=n {
        lhs += sorted[k - 1];
        while p > k && sorted[p - 1] < k {
            p -= 1;
        }
        let split = p.max(k);
        let rhs = k * (k - 1) + k * (split - k) + suffix[split];
        if lhs > rhs {
            return false;
        }
    }
    true
}

/// Havel–Hakimi: repeatedly connect the vertex of largest residual degree to
/// the next-largest ones.
pub fn havel_hakimi(d: &DegreeSequence) -> Result<SimpleGraph> {
    let n = d.len();
    let mut residual = d.as_slice().to_vec();
    if d.sum() % 2 == 1 || residual.iter().any(|&x| x >= n) {
        return Err(Error::NotGraphical);
    }
    let mut edges = Vec::new();
    let mut alive = vec![true; n];
    for _ in 0..n {
        let Some(v) = (0..n).filter(|&v| alive[v]).max_by(|&a, &b| residual[a].cmp(&residual[b]).then(b.cmp(&a))) else {
            break;
        };
        alive[v] = false;
        let need = residual[v];
        residual[v] = 0;
        let mut targets: Vec<usize> = (0..n).filter(|&u| alive[u]).collect();
        targets.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        if targets.len() < need {
            return Err(Error::NotGraphical);
        }
        for &u in &targets[..need] {
            if residual[u] == 0 {
                return Err(Error::NotGraphical);
            }
            residual[u] -= 1;
            edges.push((v, u));
        }
    }
    SimpleGraph::new(n, edges)
}

/// Gale–Ryser feasibility of a bipartite degree sequence.
pub fn gale_ryser_check(bd: &BipartiteDegreeSequence) -> bool {
    let (k, l) = (bd.class_u.len(), bd.class_w.len());
    if bd.class_u.iter().any(|&a| a > l) || bd.class_w.iter().any(|&b| b > k) {
        return false;
    }
    if bd.class_u.iter().sum::<usize>() != bd.class_w.iter().sum::<usize>() {
        return false;
    }
    let mut a = bd.class_u.clone();
    a.sort_unstable_by(|x, y| y.cmp(x));
    let mut lhs = 0;
    for (i, &ai) in a.iter().enumerate() {
        lhs += ai;
        let rhs: usize = bd.class_w.iter().map(|&b| b.min(i + 1)).sum();
        if lhs > rhs {
            return false;
        }
    }
    true
}

/// Greedy bipartite construction: each `U` vertex (largest degree first)
/// takes the `W` vertices of largest residual degree.
pub fn bipartite_realize(bd: &BipartiteDegreeSequence) -> Result<BipartiteGraph> {
    let (k, l) = (bd.class_u.len(), bd.class_w.len());
    if bd.class_u.iter().sum::<usize>() != bd.class_w.iter().sum::<usize>() {
        return Err(Error::NotGraphical);
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&x, &y| bd.class_u[y].cmp(&bd.class_u[x]).then(x.cmp(&y)));
    let mut residual = bd.class_w.clone();
    let mut edges = Vec::new();
    for u in order {
        let need = bd.class_u[u];
        if need > l {
            return Err(Error::NotGraphical);
        }
        let mut targets: Vec<usize> = (0..l).collect();
        targets.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        for &w in &targets[..need] {
            if residual[w] == 0 {
                return Err(Error::NotGraphical);
            }
            residual[w] -= 1;
            edges.push((u, w));
        }
    }
    BipartiteGraph::new(k, l, edges)
}

/// Fulkerson–Chen–Anstee test: bipartite feasibility of `(α; β)` with the
/// diagonal `(u_x, w_x)` forbidden.
pub fn fulkerson_check(dd: &DirectedDegreeSequence) -> bool {
    let n = dd.len();
    if dd.in_degrees.len() != n {
        return false;
    }
    if dd.out_degrees.iter().chain(&dd.in_degrees).any(|&x| x >= n) {
        return false;
    }
    if dd.out_degrees.iter().sum::<usize>() != dd.in_degrees.iter().sum::<usize>() {
        return false;
    }
    let mut pairs: Vec<(usize, usize)> = dd.out_degrees.iter().copied().zip(dd.in_degrees.iter().copied()).collect();
    pairs.sort_unstable_by(|a, b| b.cmp(a));
    let mut lhs = 0;
    for k in 1..=n {
        lhs += pairs[k - 1].0;
        let head: usize = pairs[..k].iter().map(|&(_, b)| b.min(k - 1)).sum();
        let tail: usize = pairs[k..].iter().map(|&(_, b)| b.min(k)).sum();
        if lhs > head + tail {
            return false;
        }
    }
    true
}

/// Kleitman–Wang: each vertex in turn (lowest index first) sends its
/// out-edges to the other vertices with lexicographically largest residual
/// `(in-degree, out-degree)`.
pub fn directed_realize(dd: &DirectedDegreeSequence) -> Result<DirectedGraph> {
    let n = dd.len();
    if dd.in_degrees.len() != n
        || dd.out_degrees.iter().sum::<usize>() != dd.in_degrees.iter().sum::<usize>()
    {
        return Err(Error::NotGraphical);
    }
    let mut out = dd.out_degrees.clone();
    let mut inn = dd.in_degrees.clone();
    let mut edges = Vec::new();
    for x in 0..n {
        let need = out[x];
        out[x] = 0;
        let mut targets: Vec<usize> = (0..n).filter(|&y| y != x).collect();
        targets.sort_by(|&a, &b| (inn[b], out[b]).cmp(&(inn[a], out[a])).then(a.cmp(&b)));
        if targets.len() < need {
            return Err(Error::NotGraphical);
        }
        for &y in &targets[..need] {
            if inn[y] == 0 {
                return Err(Error::NotGraphical);
            }
            inn[y] -= 1;
            edges.push((x, y));
        }
    }
    if inn.iter().any(|&b| b > 0) {
        return Err(Error::NotGraphical);
    }
    DirectedGraph::new(n, edges)
}
