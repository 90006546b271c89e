//! Removing a leaf of the resolution quiver.
//!
//! For a leaf `j` we relabel so that `j` becomes `n`, then every relation word
//! loses its letters `x_n`, and a word that started at `n` gets `x_{n-1}`
//! prepended. The result is a (possibly redundant) relation list on `Q_{n-1}`
//! presenting `End(P_1 ⊕ ... ⊕ P_{n-1})`.

use serde::Serialize;

use crate::algebra::{NakayamaAlgebra, ProjDim, Relation};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::resolution::ResolutionQuiver;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EliminatedRelation {
    /// The redundant relation `z`.
    pub relation: Relation,
    /// A kept relation `z0` occurring inside `z`.
    pub witness: Relation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnamalgamationStep {
    pub input: NakayamaAlgebra,
    /// Leaf in the input's own labels.
    pub leaf: usize,
    /// `relabel[i - 1]`: label of input vertex `i` after moving the leaf to `n`.
    pub relabel: Vec<usize>,
    /// One entry per input relation, in the input's relation order, on `Q_{n-1}`.
    pub raw_relations: Vec<Relation>,
    pub output: NakayamaAlgebra,
    pub eliminated: Vec<EliminatedRelation>,
}

/// `i -> ((i - j - 1) mod n) + 1`, which sends `j` to `n`.
pub fn relabel_map(n: usize, leaf: usize) -> Vec<usize> {
    (1..=n).map(|i| (i + 2 * n - leaf - 1) % n + 1).collect()
}

/// Deletes `x_n` from each word on `Q_n` and prepends `x_{n-1}` to words starting at `n`.
/// Output lives on `Q_{n-1}`; `n - 1` may be 1.
pub fn delete_last_arrow(n: usize, relations: &[Relation]) -> Vec<Relation> {
    relations
        .iter()
        .map(|r| {
            let removed = r.arrow_count(n, n);
            if r.start == n {
                Relation::new(n - 1, r.length - removed + 1)
            } else {
                Relation::new(r.start, r.length - removed)
            }
        })
        .collect()
}

/// Drops every relation that contains another one as a subword.
///
/// The survivors are the minimal words (duplicates collapse to their first
/// occurrence), so the result does not depend on the deletion order. Output is
/// sorted; each dropped relation is reported with a surviving witness.
pub fn eliminate_redundant(n: usize, relations: &[Relation]) -> (Vec<Relation>, Vec<EliminatedRelation>) {
    let is_redundant = |i: usize| {
        let z = relations[i];
        relations
            .iter()
            .enumerate()
            .any(|(k, z0)| k != i && z.contains(z0, n) && (*z0 != z || k < i))
    };
    let kept: Vec<Relation> = (0..relations.len())
        .filter(|&i| !is_redundant(i))
        .map(|i| relations[i])
        .collect();
    let eliminated = (0..relations.len())
        .filter(|&i| is_redundant(i))
        .map(|i| {
            let z = relations[i];
            let witness = *kept
                .iter()
                .find(|z0| z.contains(z0, n))
                .expect("a minimal subword survives");
            EliminatedRelation { relation: z, witness }
        })
        .collect();
    let mut kept = kept;
    kept.sort();
    kept.dedup();
    (kept, eliminated)
}

fn check_leaf(algebra: &NakayamaAlgebra, leaf: usize) -> Result<ResolutionQuiver> {
    let rq = ResolutionQuiver::build(algebra);
    if leaf == 0 || leaf > algebra.n() || !rq.leaves().contains(&leaf) {
        return Err(Error::NotALeaf { vertex: leaf });
    }
    Ok(rq)
}

fn relabeled_relations(algebra: &NakayamaAlgebra, relabel: &[usize]) -> Vec<Relation> {
    algebra
        .relations()
        .iter()
        .map(|r| Relation::new(relabel[r.start - 1], r.length))
        .collect()
}

pub fn unamalgamate(algebra: &NakayamaAlgebra, leaf: usize) -> Result<UnamalgamationStep> {
    let n = algebra.n();
    if n < 3 {
        return Err(Error::TooSmall { n });
    }
    check_leaf(algebra, leaf)?;
    let relabel = relabel_map(n, leaf);
    let raw_relations = delete_last_arrow(n, &relabeled_relations(algebra, &relabel));
    let (kept, eliminated) = eliminate_redundant(n - 1, &raw_relations);
    let output = NakayamaAlgebra::new(n - 1, kept)?;
    Ok(UnamalgamationStep {
        input: algebra.clone(),
        leaf,
        relabel,
        raw_relations,
        output,
        eliminated,
    })
}

impl UnamalgamationStep {
    /// Label in the output algebra of a non-leaf input vertex.
    pub fn image(&self, v: usize) -> Option<usize> {
        (v != self.leaf).then(|| self.relabel[v - 1])
    }

    /// The complex on the raw (possibly redundant) relation list.
    pub fn raw_complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_relations(self.output.n(), &self.raw_relations)
    }

    /// Raw complex and the input's complex agree simplex for simplex under `y_i <-> y_i'`.
    pub fn raw_complex_matches_input(&self) -> bool {
        let before = SimplicialComplex::build(&self.input);
        let after = self.raw_complex();
        before.vertex_sources() == after.vertex_sources()
            && before.all_simplices_by_source() == after.all_simplices_by_source()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    /// Resolution quiver of the output is the input's with the leaf removed.
    pub quiver: bool,
    /// Component weights agree.
    pub weight: bool,
    /// Reduced Betti numbers of the relation complexes agree.
    pub betti: bool,
    /// `gldim Λ' <= gldim Λ <= gldim Λ' + 2`.
    pub gldim: bool,
}

impl PropertyReport {
    pub fn all(&self) -> bool {
        self.quiver && self.weight && self.betti && self.gldim
    }
}

pub fn gldim_sandwich(before: ProjDim, after: ProjDim) -> bool {
    match (before, after) {
        (ProjDim::Infinite, ProjDim::Infinite) => true,
        (ProjDim::Finite(g), ProjDim::Finite(h)) => h <= g && g <= h + 2,
        _ => false,
    }
}

pub fn check_step(step: &UnamalgamationStep) -> PropertyReport {
    let before = ResolutionQuiver::build(&step.input);
    let after = ResolutionQuiver::build(&step.output);
    let n = step.input.n();

    let quiver = (1..=n).filter(|&v| v != step.leaf).all(|v| {
        step.image(before.target(v))
            .map(|t| after.target(step.image(v).unwrap()) == t)
            == Some(true)
    });

    let mut w_before = before.weights();
    let mut w_after = after.weights();
    w_before.sort_unstable();
    w_after.sort_unstable();
    let weight = w_before == w_after;

    let betti = SimplicialComplex::build(&step.input).reduced_betti().normalized()
        == SimplicialComplex::build(&step.output).reduced_betti().normalized();

    let gldim = gldim_sandwich(step.input.global_dimension(), step.output.global_dimension());

    PropertyReport {
        quiver,
        weight,
        betti,
        gldim,
    }
}

pub fn check_properties(algebra: &NakayamaAlgebra, leaf: usize) -> Result<PropertyReport> {
    Ok(check_step(&unamalgamate(algebra, leaf)?))
}

/// Which leaf `reduce_fully` removes next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeafPolicy {
    Smallest,
    Largest,
}

/// Where a full reduction stops.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Terminal {
    /// A leafless algebra on `Q_m`, `m >= 2`.
    Algebra {
        #[serde(serialize_with = "crate::schema::serialize_algebra")]
        algebra: NakayamaAlgebra,
    },
    /// Removing the last leaf of a two-vertex algebra leaves the local algebra
    /// `K[x]/(x^relation_length)` on one vertex.
    SingleVertex { relation_length: usize },
}

impl Terminal {
    pub fn is_semisimple(&self) -> bool {
        match self {
            Terminal::Algebra { algebra } => algebra.is_semisimple(),
            Terminal::SingleVertex { relation_length } => *relation_length == 1,
        }
    }

    pub fn weights(&self) -> Vec<usize> {
        match self {
            Terminal::Algebra { algebra } => ResolutionQuiver::build(algebra).weights(),
            Terminal::SingleVertex { relation_length } => vec![*relation_length],
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Terminal::Algebra { algebra } => algebra.n(),
            Terminal::SingleVertex { .. } => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub steps: Vec<UnamalgamationStep>,
    pub terminal: Terminal,
}

pub fn reduce_fully(algebra: &NakayamaAlgebra) -> Reduction {
    reduce_with(algebra, LeafPolicy::Smallest)
}

pub fn reduce_with(algebra: &NakayamaAlgebra, policy: LeafPolicy) -> Reduction {
    let mut steps = Vec::new();
    let mut current = algebra.clone();
    loop {
        let leaves = ResolutionQuiver::build(&current).leaves();
        let leaf = match policy {
            LeafPolicy::Smallest => leaves.first(),
            LeafPolicy::Largest => leaves.last(),
        };
        let Some(&leaf) = leaf else {
            return Reduction {
                steps,
                terminal: Terminal::Algebra { algebra: current },
            };
        };
        if current.n() == 2 {
            let relabel = relabel_map(2, leaf);
            let raw = delete_last_arrow(2, &relabeled_relations(&current, &relabel));
            let relation_length = raw.iter().map(|r| r.length).min().expect("relations are nonempty");
            return Reduction {
                steps,
                terminal: Terminal::SingleVertex { relation_length },
            };
        }
        let step = unamalgamate(&current, leaf).expect("leaf of an algebra with n >= 3");
        current = step.output.clone();
        steps.push(step);
    }
}

impl Reduction {
    /// Input vertices removed, in the labels of the algebra each step acted on.
    pub fn removed_leaves(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.leaf).collect()
    }
}
