//! The relation complex: one vertex per relation of length `<= n`; a set of
//! relations spans a simplex when their interiors miss at least one quiver vertex.
//!
//! Homology is reduced homology over the rationals, computed from the augmented
//! chain complex (the empty simplex sits in degree -1).

use std::collections::HashMap;
use std::fmt::Write as _;

use itertools::Itertools;
use serde::Serialize;

use crate::algebra::{NakayamaAlgebra, Relation};
use crate::linalg::IntMatrix;

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// True iff the interiors of `subset` fail to cover every vertex of `Q_n`.
pub fn is_simplex(algebra: &NakayamaAlgebra, subset: &[Relation]) -> bool {
    let n = algebra.n();
    let covered = subset.iter().fold(0u64, |acc, r| acc | r.interior_mask(n));
    covered != full_mask(n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationVertex {
    pub relation: Relation,
    pub interior: Vec<usize>,
    #[serde(skip)]
    mask: u64,
}

#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    n: usize,
    vertices: Vec<RelationVertex>,
    /// Position of each vertex in the relation list the complex was built from.
    source: Vec<usize>,
    /// `simplices[p]`: sorted vertex tuples of the `p`-simplices, lexicographic.
    simplices: Vec<Vec<Vec<usize>>>,
    /// `boundaries[p]`: `C_p -> C_{p-1}`; `boundaries[0]` is the augmentation.
    boundaries: Vec<IntMatrix>,
}

/// Reduced Betti numbers; `minus_one` is nonzero only for the empty complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducedBetti {
    pub minus_one: usize,
    pub dims: Vec<usize>,
}

impl ReducedBetti {
    /// `beta~_q` for any `q >= -1`.
    pub fn get(&self, q: isize) -> usize {
        if q < 0 {
            if q == -1 {
                self.minus_one
            } else {
                0
            }
        } else {
            self.dims.get(q as usize).copied().unwrap_or(0)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.minus_one == 0 && self.dims.iter().all(|&b| b == 0)
    }

    /// Dims with trailing zeros removed, prefixed by `beta~_{-1}`.
    pub fn normalized(&self) -> Vec<usize> {
        let mut v = vec![self.minus_one];
        v.extend(&self.dims);
        while v.len() > 1 && v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    /// `sum_q (-1)^q beta~_q`, starting at `q = -1`.
    pub fn alternating_sum(&self) -> i64 {
        let mut s = -(self.minus_one as i64);
        for (p, &b) in self.dims.iter().enumerate() {
            s += if p % 2 == 0 { b as i64 } else { -(b as i64) };
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexReport {
    pub f_vector: Vec<usize>,
    pub euler: i64,
    pub reduced_betti: Vec<usize>,
    pub reduced_betti_minus1: usize,
    pub empty: bool,
}

impl SimplicialComplex {
    pub fn build(algebra: &NakayamaAlgebra) -> Self {
        Self::from_relations(algebra.n(), algebra.relations())
    }

    /// Builds the complex from any relation list on `Q_n`, redundant or not.
    pub fn from_relations(n: usize, relations: &[Relation]) -> Self {
        let (source, vertices): (Vec<usize>, Vec<RelationVertex>) = relations
            .iter()
            .enumerate()
            .filter(|(_, r)| r.length <= n)
            .map(|(k, r)| {
                let interior = r.interior(n);
                let mask = r.interior_mask(n);
                (
                    k,
                    RelationVertex {
                        relation: *r,
                        interior,
                        mask,
                    },
                )
            })
            .unzip();
        let r = vertices.len();
        let full = full_mask(n);

        let mut simplices: Vec<Vec<Vec<usize>>> = Vec::new();
        let mut index: Vec<HashMap<u64, usize>> = Vec::new();
        for size in 1..=r {
            let layer: Vec<Vec<usize>> = (0..r)
                .combinations(size)
                .filter(|c| c.iter().fold(0u64, |acc, &v| acc | vertices[v].mask) != full)
                .collect();
            if layer.is_empty() {
                break;
            }
            index.push(layer.iter().enumerate().map(|(k, s)| (subset_mask(s), k)).collect());
            simplices.push(layer);
        }

        let mut boundaries = Vec::with_capacity(simplices.len());
        for (p, layer) in simplices.iter().enumerate() {
            if p == 0 {
                let mut aug = IntMatrix::zeros(1, layer.len());
                for j in 0..layer.len() {
                    aug.set(0, j, 1);
                }
                boundaries.push(aug);
                continue;
            }
            let below = &index[p - 1];
            let mut m = IntMatrix::zeros(simplices[p - 1].len(), layer.len());
            for (j, s) in layer.iter().enumerate() {
                let mask = subset_mask(s);
                for (i, &v) in s.iter().enumerate() {
                    let face = below[&(mask & !(1u64 << v))];
                    m.set(face, j, if i % 2 == 0 { 1 } else { -1 });
                }
            }
            boundaries.push(m);
        }

        SimplicialComplex {
            n,
            vertices,
            source,
            simplices,
            boundaries,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[RelationVertex] {
        &self.vertices
    }

    /// Index into the originating relation list for each vertex.
    pub fn vertex_sources(&self) -> &[usize] {
        &self.source
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn simplices(&self, p: usize) -> &[Vec<usize>] {
        self.simplices.get(p).map_or(&[], Vec::as_slice)
    }

    /// Every simplex, as tuples of originating relation indices.
    pub fn all_simplices_by_source(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self
            .simplices
            .iter()
            .flatten()
            .map(|s| s.iter().map(|&v| self.source[v]).collect())
            .collect();
        out.sort();
        out
    }

    pub fn contains_simplex(&self, tuple: &[usize]) -> bool {
        match tuple.len() {
            0 => true,
            k => self
                .simplices(k - 1)
                .binary_search_by(|s| s.as_slice().cmp(tuple))
                .is_ok(),
        }
    }

    /// `boundary(p)`: `C_p -> C_{p-1}`; `boundary(0)` is the augmentation `C_0 -> Q`.
    pub fn boundary(&self, p: usize) -> Option<&IntMatrix> {
        self.boundaries.get(p)
    }

    pub fn boundaries(&self) -> &[IntMatrix] {
        &self.boundaries
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(p, &f)| if p % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    pub fn reduced_betti(&self) -> ReducedBetti {
        let ranks: Vec<usize> = self.boundaries.iter().map(IntMatrix::rank).collect();
        let rank_at = |p: usize| ranks.get(p).copied().unwrap_or(0);
        let f = self.f_vector();
        let minus_one = 1 - rank_at(0);
        let dims = (0..f.len()).map(|p| f[p] - rank_at(p) - rank_at(p + 1)).collect();
        ReducedBetti { minus_one, dims }
    }

    /// Simplices not properly contained in another simplex.
    pub fn maximal_simplices(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for (p, layer) in self.simplices.iter().enumerate() {
            let above: Vec<u64> = self.simplices(p + 1).iter().map(|s| subset_mask(s)).collect();
            for s in layer {
                let m = subset_mask(s);
                if !above.iter().any(|&a| a & m == m) {
                    out.push(s.clone());
                }
            }
        }
        out
    }

    pub fn report(&self) -> ComplexReport {
        let betti = self.reduced_betti();
        ComplexReport {
            f_vector: self.f_vector(),
            euler: self.euler_characteristic(),
            reduced_betti: betti.dims,
            reduced_betti_minus1: betti.minus_one,
            empty: self.is_empty(),
        }
    }

    /// Plain-text dump in the spirit of OFF: a header, one line per vertex
    /// (`v index start length`), then one line per simplex (`k i0 ... i_{k-1}`).
    pub fn to_off(&self) -> String {
        let total: usize = self.f_vector().iter().sum();
        let mut out = format!("LOFF\n{} {}\n", self.vertices.len(), total);
        for (k, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "v {} {} {}", k, v.relation.start, v.relation.length);
        }
        for layer in &self.simplices {
            for s in layer {
                let _ = writeln!(out, "{} {}", s.len(), s.iter().join(" "));
            }
        }
        out
    }
}

fn subset_mask(s: &[usize]) -> u64 {
    s.iter().fold(0u64, |acc, &v| acc | (1u64 << v))
}

/// `chi(L)` for `K Q_n / rad^l`: `l` when `l` divides `n`, otherwise 0.
pub fn rad_power_euler(n: usize, l: usize) -> i64 {
    if n.is_multiple_of(l) {
        l as i64
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn algebra(n: usize, pairs: &[(usize, usize)]) -> NakayamaAlgebra {
        NakayamaAlgebra::new(n, pairs.iter().map(|&(s, l)| Relation::new(s, l)).collect()).unwrap()
    }

    fn lambda1() -> NakayamaAlgebra {
        algebra(5, &[(2, 2), (3, 2), (5, 3)])
    }

    fn lambda2() -> NakayamaAlgebra {
        algebra(5, &[(1, 3), (2, 4), (4, 3), (5, 3)])
    }

    fn lambda3() -> NakayamaAlgebra {
        algebra(4, &[(1, 2), (2, 2), (3, 2), (4, 2)])
    }

    #[test]
    fn simplex_membership() {
        let a = lambda2();
        let y = |s, l| Relation::new(s, l);
        assert!(!is_simplex(&a, &[y(2, 4), y(5, 3)]));
        assert!(is_simplex(&a, &[y(1, 3), y(4, 3), y(5, 3)]));
        assert!(!is_simplex(&a, &[y(1, 3), y(2, 4), y(4, 3)]));
        assert!(is_simplex(&a, &[]));
    }

    #[test]
    fn lambda2_complex() {
        let l = SimplicialComplex::build(&lambda2());
        assert_eq!(l.f_vector(), vec![4, 5, 1]);
        assert_eq!(l.euler_characteristic(), 0);
        assert_eq!(l.reduced_betti().dims, vec![0, 1, 0]);
    }

    #[test]
    fn lambda3_is_a_hollow_tetrahedron() {
        let l = SimplicialComplex::build(&lambda3());
        assert_eq!(l.f_vector(), vec![4, 6, 4]);
        assert_eq!(l.euler_characteristic(), 2);
        assert_eq!(
            l.reduced_betti(),
            ReducedBetti {
                minus_one: 0,
                dims: vec![0, 0, 1]
            }
        );
    }

    #[test]
    fn lambda1_is_a_solid_triangle() {
        let l = SimplicialComplex::build(&lambda1());
        assert_eq!(l.f_vector(), vec![3, 3, 1]);
        assert_eq!(l.euler_characteristic(), 1);
        assert!(l.reduced_betti().is_zero());
    }

    #[test]
    fn linear_algebras_are_cones() {
        let a = algebra(4, &[(4, 1), (1, 2), (2, 2)]);
        let l = SimplicialComplex::build(&a);
        let apex = l.vertices().iter().position(|v| v.relation.length == 1).unwrap();
        assert!(l.maximal_simplices().iter().all(|s| s.contains(&apex)));
        assert!(l.reduced_betti().is_zero());
        assert_eq!(l.euler_characteristic(), 1);
    }

    #[test]
    fn boundary_squares_to_zero() {
        for a in [lambda1(), lambda2(), lambda3()] {
            let l = SimplicialComplex::build(&a);
            for w in l.boundaries().windows(2) {
                assert!(w[0].mul(&w[1]).is_zero());
            }
        }
    }

    #[test]
    fn empty_complex() {
        // rad^3 on Q_2: both relations are longer than n
        let a = NakayamaAlgebra::rad_power(2, 3).unwrap();
        let l = SimplicialComplex::build(&a);
        assert!(l.is_empty());
        assert_eq!(l.euler_characteristic(), 0);
        let b = l.reduced_betti();
        assert_eq!((b.minus_one, b.dims.len()), (1, 0));
        assert_eq!(l.euler_characteristic(), 1 + b.alternating_sum());
    }

    #[test]
    fn rad_power_formula() {
        assert_eq!(rad_power_euler(4, 2), 2);
        assert_eq!(rad_power_euler(5, 3), 0);
        assert_eq!(rad_power_euler(7, 1), 1);
    }

    #[test]
    fn off_dump_lists_everything() {
        let off = SimplicialComplex::build(&lambda2()).to_off();
        let mut lines = off.lines();
        assert_eq!(lines.next(), Some("LOFF"));
        assert_eq!(lines.next(), Some("4 10"));
        assert_eq!(off.lines().count(), 2 + 4 + 10);
    }
}
