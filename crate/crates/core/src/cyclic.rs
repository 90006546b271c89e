//! Degree-`n` slice of the cyclic complex of `rad Λ`.
//!
//! A basis element in degree `p` is a cycle of `p + 1` radical morphisms between
//! distinct indecomposable projectives. We record it by its stations
//! `w_0, ..., w_p` (quiver vertices, in forward cyclic order) and the gaps
//! `g_t`, the forward distance from `w_t` to `w_{t+1}`. The morphism at station
//! `w_t` is the path of length `g_t` starting at `w_t`, which is nonzero iff
//! `g_t < |P_{w_t}|`. The gaps sum to `n`.
//!
//! The generator of `Z_{p+1}` acts by `t(f_0, ..., f_p) = (-1)^p (f_1, ..., f_p, f_0)`.
//! Distinct stations make the action free, so the quotient has one basis vector per
//! valid station set, represented with its smallest station first.

use std::collections::HashMap;

use itertools::Itertools;
use serde::Serialize;

use crate::algebra::{forward_distance, NakayamaAlgebra};
use crate::linalg::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MorphismCycle {
    pub stations: Vec<usize>,
    pub gaps: Vec<usize>,
}

impl MorphismCycle {
    /// Cycle through `stations` in the given order; gaps are forward distances.
    pub fn through(n: usize, stations: Vec<usize>) -> Self {
        let k = stations.len();
        let gaps = if k == 1 {
            vec![n]
        } else {
            (0..k)
                .map(|t| forward_distance(n, stations[t], stations[(t + 1) % k]))
                .collect()
        };
        MorphismCycle { stations, gaps }
    }

    pub fn degree(&self) -> usize {
        self.stations.len() - 1
    }

    /// Every morphism is a nonzero path in the algebra.
    pub fn is_valid(&self, algebra: &NakayamaAlgebra) -> bool {
        self.stations
            .iter()
            .zip(&self.gaps)
            .all(|(&w, &g)| g < algebra.projective_length(w))
    }

    /// One step of the generator, without the sign: `(f_1, ..., f_p, f_0)`.
    pub fn rotated(&self, k: usize) -> Self {
        let mut s = self.clone();
        let k = k % s.stations.len();
        s.stations.rotate_left(k);
        s.gaps.rotate_left(k);
        s
    }
}

/// Rotates to the smallest-station-first representative and returns the sign
/// `x = sign * [representative]` in the quotient by the signed rotation action.
pub fn canonicalize(cycle: &MorphismCycle) -> (MorphismCycle, i64) {
    let len = cycle.stations.len();
    let q = len - 1;
    let k = cycle.stations.iter().position_min().expect("nonempty cycle");
    let rep = cycle.rotated(k);
    debug_assert!(
        (1..len).all(|j| rep.rotated(j).stations != rep.stations),
        "rotation action must be free"
    );
    // [rot^k x] = (-1)^{qk} [x]
    let sign = if (q * k).is_multiple_of(2) { 1 } else { -1 };
    (rep, sign)
}

/// The faces of `b` applied to an arbitrary (not necessarily canonical) tuple,
/// as `(sign, face)` pairs before canonicalization; dead compositions are dropped.
pub fn faces(algebra: &NakayamaAlgebra, cycle: &MorphismCycle) -> Vec<(i64, MorphismCycle)> {
    let p = cycle.degree();
    if p == 0 {
        return Vec::new();
    }
    let st = &cycle.stations;
    let gp = &cycle.gaps;
    let mut out = Vec::with_capacity(p + 1);
    for i in 0..p {
        // f_i f_{i+1}: station w_{i+1} disappears, gaps merge at w_i
        let merged = gp[i] + gp[i + 1];
        if merged >= algebra.projective_length(st[i]) {
            continue;
        }
        let mut stations = st.clone();
        let mut gaps = gp.clone();
        stations.remove(i + 1);
        gaps.remove(i + 1);
        gaps[i] = merged;
        out.push((if i % 2 == 0 { 1 } else { -1 }, MorphismCycle { stations, gaps }));
    }
    // f_p f_0 placed first: (f_p f_0, f_1, ..., f_{p-1})
    let merged = gp[p] + gp[0];
    if merged < algebra.projective_length(st[p]) {
        let mut stations = vec![st[p]];
        stations.extend_from_slice(&st[1..p]);
        let mut gaps = vec![merged];
        gaps.extend_from_slice(&gp[1..p]);
        out.push((
            if p.is_multiple_of(2) { 1 } else { -1 },
            MorphismCycle { stations, gaps },
        ));
    }
    out
}

/// Canonical basis of the orbit space in degree `p`, in lexicographic order.
pub fn basis(algebra: &NakayamaAlgebra, p: usize) -> Vec<MorphismCycle> {
    let n = algebra.n();
    if p >= n {
        return Vec::new();
    }
    (1..=n)
        .combinations(p + 1)
        .map(|s| MorphismCycle::through(n, s))
        .filter(|c| c.is_valid(algebra))
        .collect()
}

#[derive(Clone, Debug)]
pub struct CyclicComplex {
    n: usize,
    bases: Vec<Vec<MorphismCycle>>,
    /// `differentials[p]`: degree `p` to degree `p - 1`; `differentials[0]` has no rows.
    differentials: Vec<IntMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicReport {
    pub hc_dims: Vec<usize>,
    pub hc_euler: i64,
    pub basis_sizes: Vec<usize>,
}

impl CyclicComplex {
    pub fn build(algebra: &NakayamaAlgebra) -> Self {
        let n = algebra.n();
        let bases: Vec<Vec<MorphismCycle>> = (0..n).map(|p| basis(algebra, p)).collect();
        let mut differentials = vec![IntMatrix::zeros(0, bases[0].len())];
        for p in 1..n {
            differentials.push(differential_between(algebra, &bases[p], &bases[p - 1]));
        }
        CyclicComplex {
            n,
            bases,
            differentials,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self, p: usize) -> &[MorphismCycle] {
        self.bases.get(p).map_or(&[], Vec::as_slice)
    }

    pub fn differential(&self, p: usize) -> Option<&IntMatrix> {
        self.differentials.get(p)
    }

    pub fn differentials(&self) -> &[IntMatrix] {
        &self.differentials
    }

    pub fn basis_sizes(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    /// `dim HC_p^n` for `p = 0..n`.
    pub fn hc_dimensions(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.differentials.iter().map(IntMatrix::rank).collect();
        (0..self.n)
            .map(|p| self.bases[p].len() - ranks[p] - ranks.get(p + 1).copied().unwrap_or(0))
            .collect()
    }

    pub fn hc_euler(&self) -> i64 {
        alternating(&self.hc_dimensions())
    }

    /// Alternating sum of basis sizes; equals `hc_euler` without any rank computation.
    pub fn chain_euler(&self) -> i64 {
        alternating(&self.basis_sizes())
    }

    pub fn report(&self) -> CyclicReport {
        let hc_dims = self.hc_dimensions();
        CyclicReport {
            hc_euler: alternating(&hc_dims),
            hc_dims,
            basis_sizes: self.basis_sizes(),
        }
    }
}

fn alternating(v: &[usize]) -> i64 {
    v.iter()
        .enumerate()
        .map(|(p, &x)| if p % 2 == 0 { x as i64 } else { -(x as i64) })
        .sum()
}

/// Matrix of the induced differential from `source` (degree `p`) to `target` (degree `p-1`).
pub fn differential_between(
    algebra: &NakayamaAlgebra,
    source: &[MorphismCycle],
    target: &[MorphismCycle],
) -> IntMatrix {
    let position: HashMap<&[usize], usize> = target
        .iter()
        .enumerate()
        .map(|(k, c)| (c.stations.as_slice(), k))
        .collect();
    let mut m = IntMatrix::zeros(target.len(), source.len());
    for (j, x) in source.iter().enumerate() {
        for (sign, face) in faces(algebra, x) {
            let (rep, rot_sign) = canonicalize(&face);
            let i = position[rep.stations.as_slice()];
            m.add_to(i, j, sign * rot_sign);
        }
    }
    m
}

/// `b` of an arbitrary tuple, expanded in the canonical degree-`p-1` basis.
pub fn apply_differential(algebra: &NakayamaAlgebra, x: &MorphismCycle) -> Vec<(MorphismCycle, i64)> {
    let mut acc: HashMap<MorphismCycle, i64> = HashMap::new();
    for (sign, face) in faces(algebra, x) {
        let (rep, rot_sign) = canonicalize(&face);
        *acc.entry(rep).or_insert(0) += sign * rot_sign;
    }
    let mut out: Vec<(MorphismCycle, i64)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Relation;

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
    fn lambda3_top_cycle() {
        let a = lambda3();
        let b = basis(&a, 3);
        assert_eq!(
            b,
            vec![MorphismCycle {
                stations: vec![1, 2, 3, 4],
                gaps: vec![1, 1, 1, 1]
            }]
        );
        for p in 0..3 {
            assert!(basis(&a, p).is_empty());
        }
        let cx = CyclicComplex::build(&a);
        assert!(cx.differential(3).unwrap().is_zero());
        assert_eq!(cx.hc_dimensions(), vec![0, 0, 0, 1]);
    }

    #[test]
    fn linear_algebras_have_empty_bases() {
        let a = algebra(4, &[(4, 1), (1, 2), (2, 2)]);
        for p in 0..4 {
            assert!(basis(&a, p).is_empty());
        }
        assert_eq!(CyclicComplex::build(&a).hc_dimensions(), vec![0; 4]);
    }

    #[test]
    fn lambda1_has_no_loops() {
        assert!(basis(&lambda1(), 0).is_empty());
        assert_eq!(CyclicComplex::build(&lambda1()).hc_dimensions(), vec![0; 5]);
    }

    #[test]
    fn canonical_signs() {
        let c = MorphismCycle::through(5, vec![3, 5, 1]);
        let (rep, sign) = canonicalize(&c);
        assert_eq!(rep.stations, vec![1, 3, 5]);
        // two steps in degree 2
        assert_eq!(sign, 1);
        let c = MorphismCycle::through(5, vec![4, 1]);
        let (rep, sign) = canonicalize(&c);
        assert_eq!((rep.stations, sign), (vec![1, 4], -1));
    }

    #[test]
    fn differential_is_rotation_equivariant() {
        for a in [
            lambda1(),
            lambda2(),
            lambda3(),
            NakayamaAlgebra::rad_power(5, 4).unwrap(),
        ] {
            for p in 1..a.n() {
                let q = p;
                for x in basis(&a, p) {
                    let base = apply_differential(&a, &x);
                    for k in 0..=p {
                        // [rot^k x] = (-1)^{pk} [x]
                        let s = if (q * k) % 2 == 0 { 1 } else { -1 };
                        let rotated: Vec<_> = apply_differential(&a, &x.rotated(k))
                            .into_iter()
                            .map(|(c, v)| (c, v * s))
                            .collect();
                        assert_eq!(rotated, base, "degree {p}, rotation {k}, {x:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn b_squares_to_zero() {
        for a in [
            lambda1(),
            lambda2(),
            lambda3(),
            NakayamaAlgebra::rad_power(6, 5).unwrap(),
        ] {
            let cx = CyclicComplex::build(&a);
            for p in 2..a.n() {
                let prod = cx.differential(p - 1).unwrap().mul(cx.differential(p).unwrap());
                assert!(prod.is_zero(), "p = {p}");
            }
        }
    }

    #[test]
    fn lambda2_euler() {
        let cx = CyclicComplex::build(&lambda2());
        assert_eq!(cx.hc_euler(), 1);
        assert_eq!(cx.chain_euler(), 1);
    }
}
