//! Second implementation of the directed move search, written directly on
//! arc sets, to cross-check the values the acceptance suite pins.

use std::collections::{BTreeSet, HashMap, VecDeque};

use swapdist_core::oracle::{exact_swap_distance, MoveSet, DEFAULT_NODE_BUDGET};
use swapdist_core::DirectedGraph;

type Arcs = BTreeSet<(usize, usize)>;

fn neighbors(g: &Arcs, triangles: bool) -> Vec<(Arcs, usize)> {
    let arcs: Vec<(usize, usize)> = g.iter().copied().collect();
    let mut out = Vec::new();
    for &(x, y) in &arcs {
        for &(u, v) in &arcs {
            if (x, y) >= (u, v) || x == u || y == v || x == v || u == y {
                continue;
            }
            if g.contains(&(x, v)) || g.contains(&(u, y)) {
                continue;
            }
            let mut h = g.clone();
            h.remove(&(x, y));
            h.remove(&(u, v));
            h.insert((x, v));
            h.insert((u, y));
            out.push((h, 1));
        }
    }
    if triangles {
        for &(x, y) in &arcs {
            for &(y2, z) in &arcs {
                if y2 != y || z == x || !g.contains(&(z, x)) {
                    continue;
                }
                if g.contains(&(y, x)) || g.contains(&(z, y)) || g.contains(&(x, z)) {
                    continue;
                }
                let mut h = g.clone();
                for a in [(x, y), (y, z), (z, x)] {
                    h.remove(&a);
                }
                for a in [(y, x), (z, y), (x, z)] {
                    h.insert(a);
                }
                out.push((h, 2));
            }
        }
    }
    out
}

/// Dijkstra with a deque (0-1-2 weights handled by re-queueing).
fn distance(from: &Arcs, to: &Arcs, triangles: bool) -> Option<usize> {
    let mut best: HashMap<Arcs, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    best.insert(from.clone(), 0);
    queue.push_back(from.clone());
    while let Some(g) = queue.pop_front() {
        let d = best[&g];
        for (h, w) in neighbors(&g, triangles) {
            if best.get(&h).is_none_or(|&old| old > d + w) {
                best.insert(h.clone(), d + w);
                queue.push_back(h);
            }
        }
    }
    best.get(to).copied()
}

fn regular_pair() -> (Arcs, Arcs) {
    let rest = [(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0), (3, 4), (4, 5), (5, 3)];
    let g1: Arcs = [(0, 1), (1, 2), (2, 0)].into_iter().chain(rest).collect();
    let g2: Arcs = [(1, 0), (2, 1), (0, 2)].into_iter().chain(rest).collect();
    (g1, g2)
}

#[test]
fn regular_pair_distances_agree() {
    let (a1, a2) = regular_pair();
    let c4 = distance(&a1, &a2, false);
    let full = distance(&a1, &a2, true);
    assert_eq!(c4, Some(3));
    assert_eq!(full, Some(2));

    let g1 = DirectedGraph::new(6, a1.iter().copied()).unwrap();
    let g2 = DirectedGraph::new(6, a2.iter().copied()).unwrap();
    assert_eq!(exact_swap_distance(&g1, &g2, MoveSet::C4Only, DEFAULT_NODE_BUDGET).unwrap(), c4);
    assert_eq!(exact_swap_distance(&g1, &g2, MoveSet::Standard, DEFAULT_NODE_BUDGET).unwrap(), full);
}

#[test]
fn bowtie_distance_agrees() {
    let g1: Arcs = [(1, 2), (2, 0), (0, 1), (0, 3), (3, 4), (4, 0)].into_iter().collect();
    let g2: Arcs = g1.iter().map(|&(x, y)| (y, x)).collect();
    assert_eq!(distance(&g1, &g2, true), Some(4));
}
