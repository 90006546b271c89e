//! The resolution quiver: the functional graph `i -> f(i)` on the quiver
//! vertices, where `f(i) = i + |P_i|` taken mod `n`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::{vertex_add, NakayamaAlgebra};

/// Gustafson's function.
pub fn gustafson(algebra: &NakayamaAlgebra, i: usize) -> usize {
    vertex_add(algebra.n(), i, algebra.projective_length(i))
}

/// A connected component of the resolution quiver.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    /// Sorted.
    pub vertices: Vec<usize>,
    /// The unique oriented cycle, starting at its smallest vertex.
    pub cycle: Vec<usize>,
    pub weight: usize,
}

impl Component {
    pub fn min_vertex(&self) -> usize {
        self.vertices[0]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionQuiver {
    pub n: usize,
    /// `targets[i - 1] = f(i)`.
    pub targets: Vec<usize>,
    /// Sorted by smallest vertex.
    pub components: Vec<Component>,
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(len: usize) -> Self {
        DisjointSets {
            parent: (0..len).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

impl ResolutionQuiver {
    pub fn build(algebra: &NakayamaAlgebra) -> Self {
        let n = algebra.n();
        let targets: Vec<usize> = (1..=n).map(|i| gustafson(algebra, i)).collect();

        let mut sets = DisjointSets::new(n);
        for (i, &t) in targets.iter().enumerate() {
            sets.union(i, t - 1);
        }
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); n];
        for v in 1..=n {
            let root = sets.find(v - 1);
            groups[root].push(v);
        }

        let mut components: Vec<Component> = groups
            .into_iter()
            .filter(|g| !g.is_empty())
            .map(|vertices| {
                let cycle = find_cycle(&targets, vertices[0]);
                let total: usize = cycle.iter().map(|&v| algebra.projective_length(v)).sum();
                assert!(
                    total.is_multiple_of(n),
                    "cycle length sum {total} is not divisible by n = {n}"
                );
                Component {
                    vertices,
                    cycle,
                    weight: total / n,
                }
            })
            .collect();
        components.sort_by_key(Component::min_vertex);
        ResolutionQuiver { n, targets, components }
    }

    pub fn target(&self, i: usize) -> usize {
        self.targets[i - 1]
    }

    /// Arrows `(i, f(i))` for `i = 1..=n`.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        (1..=self.n).map(|i| (i, self.target(i))).collect()
    }

    /// Vertices that are not the target of any arrow.
    pub fn leaves(&self) -> Vec<usize> {
        let mut hit = vec![false; self.n];
        for &t in &self.targets {
            hit[t - 1] = true;
        }
        (1..=self.n).filter(|&v| !hit[v - 1]).collect()
    }

    /// Vertices that are targets; these correspond to the relations.
    pub fn nodes(&self) -> Vec<usize> {
        let leaves = self.leaves();
        (1..=self.n).filter(|v| !leaves.contains(v)).collect()
    }

    pub fn weights(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.weight).collect()
    }

    pub fn weight_one_components(&self) -> usize {
        self.components.iter().filter(|c| c.weight == 1).count()
    }

    pub fn all_weights_equal(&self) -> bool {
        self.components.windows(2).all(|w| w[0].weight == w[1].weight)
    }

    /// Vertices lying on some cycle.
    pub fn cycle_vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.components.iter().flat_map(|c| c.cycle.iter().copied()).collect();
        v.sort_unstable();
        v
    }

    /// Graphviz rendering; cycle arrows are bold and each component's weight is a comment line.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph resolution_quiver {\n");
        for c in &self.components {
            let _ = writeln!(out, "  // component {}: weight {}", c.min_vertex(), c.weight);
        }
        for v in 1..=self.n {
            let _ = writeln!(out, "  {v} [label=\"{v}\"];");
        }
        for (i, j) in self.arrows() {
            let on_cycle = self.components.iter().any(|c| c.cycle.contains(&i));
            if on_cycle {
                let _ = writeln!(out, "  {i} -> {j} [style=bold];");
            } else {
                let _ = writeln!(out, "  {i} -> {j};");
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Iterates `f` from `start` until a vertex repeats; returns that cycle rotated to its minimum.
fn find_cycle(targets: &[usize], start: usize) -> Vec<usize> {
    let n = targets.len();
    let mut seen_at = vec![usize::MAX; n];
    let mut path = Vec::new();
    let mut v = start;
    while seen_at[v - 1] == usize::MAX {
        seen_at[v - 1] = path.len();
        path.push(v);
        v = targets[v - 1];
    }
    let mut cycle = path.split_off(seen_at[v - 1]);
    let min_pos = cycle
        .iter()
        .enumerate()
        .min_by_key(|(_, &x)| x)
        .map(|(k, _)| k)
        .unwrap_or(0);
    cycle.rotate_left(min_pos);
    cycle
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Component count and weight for `K Q_n / rad^l`: `(gcd(n, l), l / gcd(n, l))`.
pub fn rad_power_closed_form(n: usize, l: usize) -> (usize, usize) {
    let g = gcd(n, l);
    (g, l / g)
}
