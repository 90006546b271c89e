//! Independent reference implementations used to cross-check the library.
//!
//! Nothing here calls into the library's homological code: modules are
//! explicit quiver representations over GF(3), ranks are computed with
//! rationals, and the relation complex is rebuilt from vertex sets.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub const P: u8 = 3;

pub type Vector = Vec<u8>;

fn add(a: u8, b: u8) -> u8 {
    (a + b) % P
}

fn mul(a: u8, b: u8) -> u8 {
    (a * b) % P
}

fn inv(a: u8) -> u8 {
    (1..P).find(|&b| mul(a, b) == 1).expect("nonzero element")
}

/// Row-reduces in place; returns pivot columns.
pub fn rref(rows: &mut [Vector]) -> Vec<usize> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let s = inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = mul(*x, s);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = P - row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = add(*x, mul(f, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(vectors: &[Vector]) -> usize {
    let mut rows = vectors.to_vec();
    rref(&mut rows).len()
}

/// Basis of `{x : A x = 0}` for `A` given by rows of length `cols`.
pub fn nullspace(a: &[Vector], cols: usize) -> Vec<Vector> {
    let mut rows = a.to_vec();
    let pivots = rref(&mut rows);
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut x = vec![0; cols];
            x[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = (P - rows[r][free]) % P;
            }
            x
        })
        .collect()
}

/// Coordinates of `y` in the span of `basis` (which must be independent).
pub fn solve(basis: &[Vector], y: &Vector) -> Option<Vector> {
    let len = y.len();
    let k = basis.len();
    let mut rows: Vec<Vector> = (0..len)
        .map(|i| basis.iter().map(|b| b[i]).chain(std::iter::once(y[i])).collect())
        .collect();
    let pivots = rref(&mut rows);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![0; k];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = rows[r][k];
    }
    Some(x)
}

/// A path algebra quotient described only by its relation words.
#[derive(Clone, Debug)]
pub struct PathAlgebra {
    pub n: usize,
    pub relations: Vec<(usize, usize)>,
}

impl PathAlgebra {
    /// 0-based vertex reached after `k` arrows from `v`.
    fn step(&self, v: usize, k: usize) -> usize {
        (v + k) % self.n
    }

    /// Is the path of `k` arrows from 0-based vertex `v` nonzero?
    pub fn path_nonzero(&self, v: usize, k: usize) -> bool {
        !(0..k).any(|j| {
            self.relations
                .iter()
                .any(|&(s, l)| self.step(v, j) == s - 1 && j + l <= k)
        })
    }

    pub fn projective_length(&self, v: usize) -> usize {
        (0..).find(|&k| !self.path_nonzero(v, k)).unwrap()
    }
}

/// Finite-dimensional representation: `maps[v]` sends `V_v` to `V_{v+1}`,
/// stored as the images of the basis vectors of `V_v`.
#[derive(Clone, Debug)]
pub struct Rep {
    pub dims: Vec<usize>,
    pub maps: Vec<Vec<Vector>>,
}

impl Rep {
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    fn apply(&self, v: usize, x: &Vector) -> Vector {
        let n = self.dims.len();
        let mut out = vec![0; self.dims[(v + 1) % n]];
        for (j, &xj) in x.iter().enumerate() {
            for (o, &a) in out.iter_mut().zip(&self.maps[v][j]) {
                *o = add(*o, mul(xj, a));
            }
        }
        out
    }
}

/// Quotient of the indecomposable projective at `top` by paths of length
/// at least `length` (both 0-based vertex and positive length).
pub fn uniserial(alg: &PathAlgebra, top: usize, length: usize) -> Rep {
    let n = alg.n;
    let mut dims = vec![0; n];
    let mut index = vec![0; length];
    for (k, slot) in index.iter_mut().enumerate() {
        let v = alg.step(top, k);
        *slot = dims[v];
        dims[v] += 1;
    }
    let mut maps: Vec<Vec<Vector>> = (0..n).map(|v| vec![vec![0; dims[(v + 1) % n]]; dims[v]]).collect();
    for k in 0..length.saturating_sub(1) {
        let v = alg.step(top, k);
        maps[v][index[k]][index[k + 1]] = 1;
    }
    Rep { dims, maps }
}

/// The kernel of the projective cover of `m`.
pub fn syzygy(alg: &PathAlgebra, m: &Rep) -> Rep {
    let n = alg.n;
    // generators of the top at each vertex
    let mut generators: Vec<(usize, Vector)> = Vec::new();
    for v in 0..n {
        let prev = (v + n - 1) % n;
        let mut span: Vec<Vector> = (0..m.dims[prev])
            .map(|j| m.apply(prev, &unit(m.dims[prev], j)))
            .collect();
        let mut r = rank(&span);
        for j in 0..m.dims[v] {
            span.push(unit(m.dims[v], j));
            let r2 = rank(&span);
            if r2 > r {
                generators.push((v, unit(m.dims[v], j)));
                r = r2;
            } else {
                span.pop();
            }
        }
    }

    // cover basis at each vertex: (generator, path length)
    let mut cover: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (g, (u, _)) in generators.iter().enumerate() {
        for k in 0..alg.projective_length(*u) {
            cover[alg.step(*u, k)].push((g, k));
        }
    }

    // images in M, then kernels
    let kernels: Vec<Vec<Vector>> = (0..n)
        .map(|w| {
            let images: Vec<Vector> = cover[w]
                .iter()
                .map(|&(g, k)| {
                    let (u, ref x) = generators[g];
                    (0..k).fold(x.clone(), |acc, j| m.apply(alg.step(u, j), &acc))
                })
                .collect();
            let rows: Vec<Vector> = (0..m.dims[w]).map(|i| images.iter().map(|c| c[i]).collect()).collect();
            nullspace(&rows, cover[w].len())
        })
        .collect();

    let dims: Vec<usize> = kernels.iter().map(Vec::len).collect();
    let maps = (0..n)
        .map(|w| {
            let next = (w + 1) % n;
            kernels[w]
                .iter()
                .map(|x| {
                    let mut y = vec![0; cover[next].len()];
                    for (i, &(g, k)) in cover[w].iter().enumerate() {
                        if x[i] == 0 || k + 1 >= alg.projective_length(generators[g].0) {
                            continue;
                        }
                        let j = cover[next].iter().position(|&e| e == (g, k + 1)).unwrap();
                        y[j] = add(y[j], x[i]);
                    }
                    solve(&kernels[next], &y).expect("arrow preserves the kernel")
                })
                .collect()
        })
        .collect();
    Rep { dims, maps }
}

fn unit(len: usize, j: usize) -> Vector {
    let mut e = vec![0; len];
    e[j] = 1;
    e
}

/// Projective dimension by repeated syzygies; `None` when the cutoff is hit.
pub fn projective_dimension(alg: &PathAlgebra, m: &Rep, cutoff: usize) -> Option<usize> {
    let mut current = m.clone();
    for d in 0..=cutoff {
        let next = syzygy(alg, &current);
        if next.total_dim() == 0 {
            return Some(d);
        }
        current = next;
    }
    None
}

/// Every Kupisch series of length `n` with entries in `1..=c_max`, by filtering
/// the full box.
pub fn naive_kupisch(n: usize, c_max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let total = c_max.pow(n as u32);
    for code in 0..total {
        let mut c = Vec::with_capacity(n);
        let mut x = code;
        for _ in 0..n {
            c.push(x % c_max + 1);
            x /= c_max;
        }
        c.reverse();
        if (0..n).all(|i| c[(i + 1) % n] + 1 >= c[i]) {
            out.push(c);
        }
    }
    out
}

pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot_row = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot_row[c];
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x -= &f * y;
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced Betti numbers `(b_{-1}, b_0, b_1, ...)` of the complex whose faces
/// are the sets of relations (of length at most `n`) whose interiors do not
/// cover every vertex. Relations are `(start, length)`, 1-based.
pub fn relation_complex_betti(n: usize, relations: &[(usize, usize)]) -> (Vec<usize>, Vec<usize>) {
    let verts: Vec<BTreeSet<usize>> = relations
        .iter()
        .filter(|&&(_, l)| l <= n)
        .map(|&(s, l)| (1..l).map(|k| (s - 1 + k) % n + 1).collect())
        .collect();
    let r = verts.len();
    let mut faces: Vec<Vec<Vec<usize>>> = Vec::new();
    for mask in 0u64..(1 << r) {
        let subset: Vec<usize> = (0..r).filter(|&i| mask >> i & 1 == 1).collect();
        let covered: BTreeSet<usize> = subset.iter().flat_map(|&i| verts[i].iter().copied()).collect();
        if covered.len() < n {
            let dim = subset.len();
            if faces.len() <= dim {
                faces.resize(dim + 1, Vec::new());
            }
            faces[dim].push(subset);
        }
    }
    for f in faces.iter_mut() {
        f.sort();
    }
    let f_vector: Vec<usize> = faces.iter().map(Vec::len).collect();
    // boundary from size k to size k-1 faces
    let ranks: Vec<usize> = (0..faces.len())
        .map(|k| {
            if k == 0 {
                return 0;
            }
            let mut rows = vec![vec![0i64; faces[k].len()]; faces[k - 1].len()];
            for (col, upper) in faces[k].iter().enumerate() {
                for i in 0..upper.len() {
                    let mut lower = upper.clone();
                    lower.remove(i);
                    let row = faces[k - 1]
                        .binary_search(&lower)
                        .expect("faces are closed under subsets");
                    rows[row][col] = if i % 2 == 0 { 1 } else { -1 };
                }
            }
            rational_rank(&rows)
        })
        .collect();
    let betti: Vec<usize> = (0..faces.len())
        .map(|k| f_vector[k] - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0))
        .collect();
    (f_vector, betti)
}

/// `(cycle vertex sets, weights)` of the map `i -> i + c_i` on `Z/n`, by
/// following orbits.
pub fn orbit_cycles(c: &[usize]) -> Vec<(BTreeSet<usize>, usize)> {
    let n = c.len();
    let f = |i: usize| (i + c[i]) % n;
    let mut cycles: Vec<BTreeSet<usize>> = Vec::new();
    for start in 0..n {
        let mut x = start;
        for _ in 0..n {
            x = f(x);
        }
        let mut cycle = BTreeSet::from([x]);
        let mut y = f(x);
        while y != x {
            cycle.insert(y);
            y = f(y);
        }
        if !cycles.contains(&cycle) {
            cycles.push(cycle);
        }
    }
    cycles
        .into_iter()
        .map(|cy| {
            let w = cy.iter().map(|&i| c[i]).sum::<usize>() / n;
            (cy, w)
        })
        .collect()
}
