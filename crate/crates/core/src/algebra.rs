//! Nakayama algebras on the cyclic quiver `Q_n`.
//!
//! Vertices are `1..=n`; arrow `x_i` goes `i -> i+1` with `n+1 = 1`. A monomial
//! relation is stored as its arrow interval `(start, length)`, i.e. the path
//! `x_start x_{start+1} ... x_{start+length-1}`. Lengths may exceed `n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported quiver; vertex sets are packed into `u64` masks.
pub const MAX_ORDER: usize = 64;

/// `v + k` on the vertex cycle `1..=n`.
#[inline]
pub fn vertex_add(n: usize, v: usize, k: usize) -> usize {
    (v - 1 + k) % n + 1
}

/// Forward distance from `from` to `to` along the quiver, in `0..n`.
#[inline]
pub fn forward_distance(n: usize, from: usize, to: usize) -> usize {
    (to + n - from) % n
}

/// A monomial relation: the path of `length` arrows starting at vertex `start`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Relation {
    pub start: usize,
    pub length: usize,
}

impl From<[usize; 2]> for Relation {
    fn from([start, length]: [usize; 2]) -> Self {
        Relation { start, length }
    }
}

impl From<Relation> for [usize; 2] {
    fn from(r: Relation) -> Self {
        [r.start, r.length]
    }
}

impl Relation {
    pub fn new(start: usize, length: usize) -> Self {
        Relation { start, length }
    }

    /// True if `other` occurs as a subword of `self` on `Q_n`.
    pub fn contains(&self, other: &Relation, n: usize) -> bool {
        forward_distance(n, self.start, other.start) + other.length <= self.length
    }

    /// Arrow indices of the word, in order.
    pub fn arrows(&self, n: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.length).map(move |m| vertex_add(n, self.start, m))
    }

    /// Index of the last arrow of the word.
    pub fn last_arrow(&self, n: usize) -> usize {
        vertex_add(n, self.start, self.length - 1)
    }

    /// Internal vertices `start+1, ..., start+length-1`, meaningful for `length <= n`.
    pub fn interior(&self, n: usize) -> Vec<usize> {
        (1..self.length.min(n)).map(|m| vertex_add(n, self.start, m)).collect()
    }

    /// Interior as a bit mask (bit `v-1` for vertex `v`).
    pub fn interior_mask(&self, n: usize) -> u64 {
        self.interior(n).iter().fold(0u64, |acc, &v| acc | (1u64 << (v - 1)))
    }

    /// Number of occurrences of arrow `arrow` in the word.
    pub fn arrow_count(&self, n: usize, arrow: usize) -> usize {
        let first = forward_distance(n, self.start, arrow);
        if first < self.length {
            (self.length - 1 - first) / n + 1
        } else {
            0
        }
    }

    /// Words like `x2x3x4`.
    pub fn word(&self, n: usize) -> String {
        self.arrows(n).map(|a| format!("x{a}")).collect()
    }
}

/// How an algebra decomposes, read off from its length-one relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgebraClass {
    Cyclic,
    Linear,
    ProductOfLinear,
}

impl AlgebraClass {
    pub fn from_unit_relations(count: usize) -> Self {
        match count {
            0 => AlgebraClass::Cyclic,
            1 => AlgebraClass::Linear,
            _ => AlgebraClass::ProductOfLinear,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            AlgebraClass::Cyclic => "cyclic",
            AlgebraClass::Linear => "linear",
            AlgebraClass::ProductOfLinear => "product_of_linear",
        }
    }
}

impl fmt::Display for AlgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for AlgebraClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "cyclic" => Ok(AlgebraClass::Cyclic),
            "linear" => Ok(AlgebraClass::Linear),
            "product" | "product_of_linear" | "productoflinear" => Ok(AlgebraClass::ProductOfLinear),
            other => Err(format!("unknown algebra class `{other}`")),
        }
    }
}

/// Lengths `c_i = |P_i|` of the indecomposable projectives.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct KupischSeries(Vec<usize>);

impl KupischSeries {
    /// Checks `c_i >= 1` and `c_{i+1} >= c_i - 1` cyclically.
    pub fn new(c: Vec<usize>) -> Result<Self> {
        if c.len() < 2 {
            return Err(Error::KupischTooShort { len: c.len() });
        }
        if c.len() > MAX_ORDER {
            return Err(Error::QuiverTooLarge {
                n: c.len(),
                max: MAX_ORDER,
            });
        }
        if let Some(position) = c.iter().position(|&x| x == 0) {
            return Err(Error::KupischEntryZero { position });
        }
        let n = c.len();
        for i in 0..n {
            if c[(i + 1) % n] + 1 < c[i] {
                return Err(Error::InvalidKupisch { position: i });
            }
        }
        Ok(KupischSeries(c))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `|P_i|` for vertex `i` in `1..=n`.
    pub fn length(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// The minimal relations `(i, c_i)` for every `i` with `c_i <= c_{i+1}`.
    pub fn relations(&self) -> Vec<Relation> {
        let n = self.n();
        (1..=n)
            .filter(|&i| self.length(i) <= self.length(vertex_add(n, i, 1)))
            .map(|i| Relation::new(i, self.length(i)))
            .collect()
    }
}

impl fmt::Display for KupischSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `c_j = min over relations (k, l) of ((k - j) mod n) + l`.
pub fn kupisch_lengths(n: usize, relations: &[Relation]) -> Vec<usize> {
    (1..=n)
        .map(|j| {
            relations
                .iter()
                .map(|r| forward_distance(n, j, r.start) + r.length)
                .min()
                .expect("relation set is nonempty")
        })
        .collect()
}

/// Uniserial module with composition series `S_top, S_{top+1}, ..., S_{top+length-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct UniserialModule {
    pub top: usize,
    pub length: usize,
}

impl UniserialModule {
    pub fn new(top: usize, length: usize) -> Self {
        UniserialModule { top, length }
    }

    pub fn simple(top: usize) -> Self {
        UniserialModule { top, length: 1 }
    }
}

/// Projective (or global) dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProjDim {
    Finite(usize),
    Infinite,
}

impl ProjDim {
    pub fn is_finite(&self) -> bool {
        matches!(self, ProjDim::Finite(_))
    }

    pub fn finite(&self) -> Option<usize> {
        match self {
            ProjDim::Finite(d) => Some(*d),
            ProjDim::Infinite => None,
        }
    }

    /// `self + k`, with `Infinite` absorbing.
    pub fn plus(self, k: usize) -> ProjDim {
        match self {
            ProjDim::Finite(d) => ProjDim::Finite(d + k),
            ProjDim::Infinite => ProjDim::Infinite,
        }
    }
}

impl fmt::Display for ProjDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjDim::Finite(d) => write!(f, "finite ({d})"),
            ProjDim::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for ProjDim {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ProjDim::Finite(d) => s.serialize_u64(*d as u64),
            ProjDim::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// A Nakayama algebra `K Q_n / I` with an irredundant set of monomial relations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NakayamaAlgebra {
    n: usize,
    relations: Vec<Relation>,
    class: AlgebraClass,
    kupisch: KupischSeries,
}

impl NakayamaAlgebra {
    /// Validates and classifies. Relations are stored sorted by start vertex.
    pub fn new(n: usize, relations: Vec<Relation>) -> Result<Self> {
        if n < 2 {
            return Err(Error::QuiverTooSmall { n });
        }
        if n > MAX_ORDER {
            return Err(Error::QuiverTooLarge { n, max: MAX_ORDER });
        }
        if relations.is_empty() {
            return Err(Error::EmptyRelationSet);
        }
        for (index, r) in relations.iter().enumerate() {
            if r.start == 0 || r.start > n {
                return Err(Error::StartOutOfRange {
                    index,
                    start: r.start,
                    n,
                });
            }
            if r.length == 0 {
                return Err(Error::ZeroLength { index });
            }
        }
        for (i, a) in relations.iter().enumerate() {
            for (j, b) in relations.iter().enumerate().skip(i + 1) {
                if a.start == b.start {
                    return Err(Error::DuplicateStart {
                        first: i,
                        second: j,
                        start: a.start,
                    });
                }
            }
        }
        for (i, a) in relations.iter().enumerate() {
            for (j, b) in relations.iter().enumerate() {
                if i != j && a.contains(b, n) {
                    return Err(Error::RedundantRelation {
                        contained: j,
                        container: i,
                    });
                }
            }
        }
        Ok(Self::assemble(n, relations))
    }

    /// Builds the algebra whose projectives have the given lengths.
    pub fn from_kupisch(kupisch: &KupischSeries) -> Self {
        Self::assemble(kupisch.n(), kupisch.relations())
    }

    /// `K Q_n / rad^l`.
    pub fn rad_power(n: usize, l: usize) -> Result<Self> {
        Self::new(n, (1..=n).map(|i| Relation::new(i, l)).collect())
    }

    fn assemble(n: usize, mut relations: Vec<Relation>) -> Self {
        relations.sort();
        let class = AlgebraClass::from_unit_relations(relations.iter().filter(|r| r.length == 1).count());
        let kupisch = KupischSeries(kupisch_lengths(n, &relations));
        NakayamaAlgebra {
            n,
            relations,
            class,
            kupisch,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn class(&self) -> AlgebraClass {
        self.class
    }

    pub fn kupisch(&self) -> &KupischSeries {
        &self.kupisch
    }

    /// `|P_i|`.
    pub fn projective_length(&self, i: usize) -> usize {
        self.kupisch.length(i)
    }

    pub fn is_semisimple(&self) -> bool {
        self.kupisch.as_slice().iter().all(|&c| c == 1)
    }

    fn check_module(&self, m: UniserialModule) -> Result<()> {
        if m.top == 0 || m.top > self.n {
            return Err(Error::ModuleTopOutOfRange { top: m.top, n: self.n });
        }
        let max = self.projective_length(m.top);
        if m.length == 0 || m.length > max {
            return Err(Error::ModuleTooLong {
                top: m.top,
                length: m.length,
                max,
            });
        }
        Ok(())
    }

    /// Kernel of the projective cover `P_top -> M`; `None` when `M` is projective.
    pub fn syzygy(&self, m: UniserialModule) -> Result<Option<UniserialModule>> {
        self.check_module(m)?;
        Ok(self.syzygy_unchecked(m))
    }

    fn syzygy_unchecked(&self, m: UniserialModule) -> Option<UniserialModule> {
        let c = self.projective_length(m.top);
        (m.length < c).then(|| UniserialModule::new(vertex_add(self.n, m.top, m.length), c - m.length))
    }

    /// Follows syzygies until a projective appears or a state repeats.
    pub fn projective_dimension(&self, m: UniserialModule) -> Result<ProjDim> {
        self.check_module(m)?;
        let width = self.kupisch.as_slice().iter().copied().max().unwrap_or(1) + 1;
        let mut seen = vec![false; self.n * width];
        let mut current = m;
        let mut steps = 0;
        loop {
            let slot = (current.top - 1) * width + current.length;
            if seen[slot] {
                return Ok(ProjDim::Infinite);
            }
            seen[slot] = true;
            match self.syzygy_unchecked(current) {
                None => return Ok(ProjDim::Finite(steps)),
                Some(next) => {
                    current = next;
                    steps += 1;
                }
            }
        }
    }

    /// Projective dimensions of `S_1, ..., S_n`.
    pub fn simple_projective_dimensions(&self) -> Vec<ProjDim> {
        (1..=self.n)
            .map(|i| {
                self.projective_dimension(UniserialModule::simple(i))
                    .expect("simples are valid modules")
            })
            .collect()
    }

    /// Supremum of the projective dimensions of the simples.
    pub fn global_dimension(&self) -> ProjDim {
        self.simple_projective_dimensions()
            .into_iter()
            .max()
            .unwrap_or(ProjDim::Finite(0))
    }

    /// Every valid uniserial module `(top, length)`.
    pub fn modules(&self) -> impl Iterator<Item = UniserialModule> + '_ {
        (1..=self.n).flat_map(move |t| (1..=self.projective_length(t)).map(move |l| UniserialModule::new(t, l)))
    }
}

impl fmt::Display for NakayamaAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KQ_{} / (", self.n)?;
        for (k, r) in self.relations.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", r.word(self.n))?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rels(pairs: &[(usize, usize)]) -> Vec<Relation> {
        pairs.iter().map(|&(s, l)| Relation::new(s, l)).collect()
    }

    fn lambda1() -> NakayamaAlgebra {
        NakayamaAlgebra::new(5, rels(&[(2, 2), (3, 2), (5, 3)])).unwrap()
    }

    fn lambda3() -> NakayamaAlgebra {
        NakayamaAlgebra::new(4, rels(&[(1, 2), (2, 2), (3, 2), (4, 2)])).unwrap()
    }

    #[test]
    fn validates_and_classifies() {
        assert_eq!(lambda1().class(), AlgebraClass::Cyclic);
        let ss = NakayamaAlgebra::new(2, rels(&[(1, 1), (2, 1)])).unwrap();
        assert_eq!(ss.class(), AlgebraClass::ProductOfLinear);
        assert!(ss.is_semisimple());
        let lin = NakayamaAlgebra::new(3, rels(&[(3, 1), (1, 2)])).unwrap();
        assert_eq!(lin.class(), AlgebraClass::Linear);
        assert_eq!(lin.relations(), &rels(&[(1, 2), (3, 1)])[..]);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            NakayamaAlgebra::new(5, rels(&[(2, 2), (2, 3)])),
            Err(Error::DuplicateStart {
                first: 0,
                second: 1,
                start: 2
            })
        ));
        assert_eq!(NakayamaAlgebra::new(5, vec![]), Err(Error::EmptyRelationSet));
        assert_eq!(
            NakayamaAlgebra::new(1, rels(&[(1, 2)])),
            Err(Error::QuiverTooSmall { n: 1 })
        );
        assert!(matches!(
            NakayamaAlgebra::new(4, rels(&[(1, 3), (2, 2)])),
            Err(Error::RedundantRelation {
                contained: 1,
                container: 0
            })
        ));
        // x4 x1 sits inside the wrapping word x3 x4 x1
        assert!(matches!(
            NakayamaAlgebra::new(4, rels(&[(3, 3), (4, 2)])),
            Err(Error::RedundantRelation {
                contained: 1,
                container: 0
            })
        ));
        assert!(matches!(
            NakayamaAlgebra::new(3, rels(&[(4, 2)])),
            Err(Error::StartOutOfRange { .. })
        ));
        assert!(matches!(
            NakayamaAlgebra::new(3, rels(&[(1, 0)])),
            Err(Error::ZeroLength { .. })
        ));
    }

    #[test]
    fn wrapping_relations_are_not_confused_with_short_ones() {
        // Kupisch (3, 2) on Q_2: the only minimal relation is the wrapping word x2x1.
        let c = KupischSeries::new(vec![3, 2]).unwrap();
        assert_eq!(c.relations(), rels(&[(2, 2)]));
        let a = NakayamaAlgebra::from_kupisch(&c);
        assert_eq!(a.kupisch().as_slice(), &[3, 2]);
        // a relation longer than n wraps and is kept verbatim
        let long = NakayamaAlgebra::new(2, rels(&[(1, 4), (2, 4)])).unwrap();
        assert_eq!(long.kupisch().as_slice(), &[4, 4]);
    }

    #[test]
    fn kupisch_of_worked_examples() {
        assert_eq!(lambda1().kupisch().as_slice(), &[3, 2, 2, 4, 3]);
        assert_eq!(lambda3().kupisch().as_slice(), &[2, 2, 2, 2]);
        let ss = NakayamaAlgebra::new(2, rels(&[(1, 1), (2, 1)])).unwrap();
        assert_eq!(ss.kupisch().as_slice(), &[1, 1]);
    }

    #[test]
    fn relations_from_kupisch_examples() {
        let c = KupischSeries::new(vec![3, 2, 2, 4, 3]).unwrap();
        assert_eq!(c.relations(), rels(&[(2, 2), (3, 2), (5, 3)]));
        let c = KupischSeries::new(vec![2, 2, 2, 2]).unwrap();
        assert_eq!(c.relations(), rels(&[(1, 2), (2, 2), (3, 2), (4, 2)]));
        let c = KupischSeries::new(vec![1, 1]).unwrap();
        assert_eq!(c.relations(), rels(&[(1, 1), (2, 1)]));
        assert_eq!(
            KupischSeries::new(vec![4, 2, 2]),
            Err(Error::InvalidKupisch { position: 0 })
        );
        assert_eq!(
            KupischSeries::new(vec![2, 0]),
            Err(Error::KupischEntryZero { position: 1 })
        );
    }

    #[test]
    fn syzygies() {
        let a1 = lambda1();
        assert_eq!(
            a1.syzygy(UniserialModule::simple(4)).unwrap(),
            Some(UniserialModule::new(5, 3))
        );
        assert_eq!(a1.syzygy(UniserialModule::new(5, 3)).unwrap(), None);
        assert_eq!(
            lambda3().syzygy(UniserialModule::simple(1)).unwrap(),
            Some(UniserialModule::simple(2))
        );
        assert!(matches!(
            a1.syzygy(UniserialModule::new(5, 4)),
            Err(Error::ModuleTooLong { max: 3, .. })
        ));
    }

    #[test]
    fn global_dimensions() {
        assert_eq!(lambda1().global_dimension(), ProjDim::Finite(4));
        assert_eq!(lambda3().global_dimension(), ProjDim::Infinite);
        let ss = NakayamaAlgebra::new(2, rels(&[(1, 1), (2, 1)])).unwrap();
        assert_eq!(ss.global_dimension(), ProjDim::Finite(0));
        assert_eq!(
            lambda1().projective_dimension(UniserialModule::simple(4)).unwrap(),
            ProjDim::Finite(1)
        );
    }

    #[test]
    fn arrow_counts() {
        let r = Relation::new(3, 7);
        // x3 x4 x1 x2 x3 x4 x1 on Q_4
        assert_eq!(r.arrow_count(4, 4), 2);
        assert_eq!(r.arrow_count(4, 2), 1);
        assert_eq!(Relation::new(1, 3).arrow_count(5, 5), 0);
        assert_eq!(r.word(4), "x3x4x1x2x3x4x1");
    }
}
