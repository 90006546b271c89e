//! Exhaustive checking over every Kupisch series up to a bound.
//!
//! Each algebra gets a verdict per check; a failed check becomes a
//! counterexample record carrying the algebra document for reproduction.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;
use std::io;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::algebra::{AlgebraClass, KupischSeries, NakayamaAlgebra, ProjDim};
use crate::complex::SimplicialComplex;
use crate::cyclic::CyclicComplex;
use crate::resolution::ResolutionQuiver;
use crate::schema::algebra_to_value;
use crate::unamalgamation::{check_step, gldim_sandwich, reduce_fully, unamalgamate};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Check {
    /// Finite global dimension iff one component of weight 1.
    A,
    /// Finite global dimension iff `chi(L) = 1`.
    B,
    /// Finite global dimension iff `L` is acyclic and reduction ends semisimple.
    #[serde(rename = "Bprime")]
    BPrime,
    /// `chi(L)` equals the number of weight-one components.
    C,
    #[serde(rename = "HCvsBetti")]
    HcVsBetti,
    UnamalgamationProps,
    SameWeight,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::A,
        Check::B,
        Check::BPrime,
        Check::C,
        Check::HcVsBetti,
        Check::UnamalgamationProps,
        Check::SameWeight,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Check::A => "A",
            Check::B => "B",
            Check::BPrime => "Bprime",
            Check::C => "C",
            Check::HcVsBetti => "HCvsBetti",
            Check::UnamalgamationProps => "UnamalgamationProps",
            Check::SameWeight => "SameWeight",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s) || (s == "B'" && *c == Check::BPrime))
            .ok_or_else(|| format!("unknown check `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub c_max: usize,
    pub classes: BTreeSet<AlgebraClass>,
    pub checks: BTreeSet<Check>,
    /// Worker threads; `None` lets rayon decide.
    #[serde(skip)]
    pub threads: Option<usize>,
    /// Resume strictly after this series (ordered by length, then lexicographically).
    pub start_after: Option<Vec<usize>>,
}

impl SweepConfig {
    /// All classes, all checks.
    pub fn new(n_min: usize, n_max: usize, c_max: usize) -> Self {
        SweepConfig {
            n_min,
            n_max,
            c_max,
            classes: [
                AlgebraClass::Cyclic,
                AlgebraClass::Linear,
                AlgebraClass::ProductOfLinear,
            ]
            .into(),
            checks: Check::ALL.into(),
            threads: None,
            start_after: None,
        }
    }

    pub fn with_classes(mut self, classes: impl IntoIterator<Item = AlgebraClass>) -> Self {
        self.classes = classes.into_iter().collect();
        self
    }

    pub fn with_checks(mut self, checks: impl IntoIterator<Item = Check>) -> Self {
        self.checks = checks.into_iter().collect();
        self
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.n_min < 2 {
            return Err(format!("n_min must be at least 2, got {}", self.n_min));
        }
        if self.n_max < self.n_min {
            return Err(format!("n_max ({}) is below n_min ({})", self.n_max, self.n_min));
        }
        if self.c_max < 1 {
            return Err("c_max must be at least 1".into());
        }
        Ok(())
    }
}

/// Every Kupisch series of length `n` with entries in `1..=c_max`, lexicographic.
pub fn kupisch_series_of_length(n: usize, c_max: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, n: usize, c_max: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            // closing condition c_1 >= c_n - 1
            if prefix[0] + 1 >= prefix[n - 1] {
                out.push(prefix.clone());
            }
            return;
        }
        let lo = prefix.last().map_or(1, |&c| c.saturating_sub(1).max(1));
        for c in lo..=c_max {
            prefix.push(c);
            extend(prefix, n, c_max, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), n, c_max, &mut out);
    out
}

/// The algebras a sweep visits, in order.
pub fn enumerate_kupisch(config: &SweepConfig) -> impl Iterator<Item = NakayamaAlgebra> + '_ {
    (config.n_min..=config.n_max)
        .flat_map(move |n| kupisch_series_of_length(n, config.c_max))
        .filter(move |c| match &config.start_after {
            Some(cursor) => (c.len(), c.as_slice()) > (cursor.len(), cursor.as_slice()),
            None => true,
        })
        .filter(move |c| {
            let ones = c.iter().filter(|&&x| x == 1).count();
            config.classes.contains(&AlgebraClass::from_unit_relations(ones))
        })
        .map(|c| NakayamaAlgebra::from_kupisch(&KupischSeries::new(c).expect("enumerated series are valid")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraVerdict {
    pub n: usize,
    pub kupisch: Vec<usize>,
    pub class: AlgebraClass,
    pub gldim: ProjDim,
    pub components: usize,
    pub weights: Vec<usize>,
    pub chi: i64,
    pub reduced_betti: Vec<usize>,
    pub reduced_betti_minus1: usize,
    pub hc_dims: Vec<usize>,
    pub leaves: Vec<usize>,
    pub verdicts: BTreeMap<Check, bool>,
}

impl AlgebraVerdict {
    pub fn passed(&self) -> bool {
        self.verdicts.values().all(|&ok| ok)
    }

    pub fn failed_checks(&self) -> Vec<Check> {
        self.verdicts.iter().filter(|(_, &ok)| !ok).map(|(&c, _)| c).collect()
    }
}

/// Computes every invariant of `algebra` and evaluates the requested checks.
pub fn verify(algebra: &NakayamaAlgebra, checks: &BTreeSet<Check>) -> AlgebraVerdict {
    let n = algebra.n();
    let gldim = algebra.global_dimension();
    let finite = gldim.is_finite();
    let rq = ResolutionQuiver::build(algebra);
    let complex = SimplicialComplex::build(algebra);
    let chi = complex.euler_characteristic();
    let betti = complex.reduced_betti();
    let hc = checks
        .contains(&Check::HcVsBetti)
        .then(|| CyclicComplex::build(algebra));
    let hc_dims = hc.as_ref().map(CyclicComplex::hc_dimensions).unwrap_or_default();

    let mut verdicts = BTreeMap::new();
    for &check in checks {
        let ok = match check {
            Check::A => finite == (rq.components.len() == 1 && rq.components[0].weight == 1),
            Check::B => finite == (chi == 1),
            Check::BPrime => {
                if finite {
                    betti.is_zero() && reduce_fully(algebra).terminal.is_semisimple()
                } else {
                    !betti.is_zero() || chi != 1
                }
            }
            Check::C => chi == rq.weight_one_components() as i64,
            Check::SameWeight => rq.all_weights_equal(),
            Check::HcVsBetti => {
                let cx = hc.as_ref().expect("built above");
                let shifted = (0..n).all(|p| hc_dims[p] == betti.get(p as isize - 1));
                let beyond = (n - 1..betti.dims.len()).all(|q| betti.dims[q] == 0);
                let euler = cx.hc_euler() == 1 - chi && cx.chain_euler() == cx.hc_euler();
                shifted && beyond && euler
            }
            Check::UnamalgamationProps => {
                n < 3
                    || rq.leaves().into_iter().all(|leaf| match unamalgamate(algebra, leaf) {
                        Ok(step) => check_step(&step).all() && step.raw_complex_matches_input(),
                        Err(_) => false,
                    })
            }
        };
        verdicts.insert(check, ok);
    }

    AlgebraVerdict {
        n,
        kupisch: algebra.kupisch().as_slice().to_vec(),
        class: algebra.class(),
        gldim,
        components: rq.components.len(),
        weights: rq.weights(),
        chi,
        reduced_betti: betti.dims.clone(),
        reduced_betti_minus1: betti.minus_one,
        hc_dims,
        leaves: rq.leaves(),
        verdicts,
    }
}

/// Identities that hold for every algebra regardless of the theorems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralReport {
    pub boundary_squares_zero: bool,
    pub cyclic_differential_squares_zero: bool,
    pub weight_integral: bool,
    pub kupisch_round_trip: bool,
    pub euler_poincare: bool,
    /// Over every leaf; vacuous when there are none or `n < 3`.
    pub gldim_sandwich: bool,
}

impl StructuralReport {
    pub fn all(&self) -> bool {
        self.boundary_squares_zero
            && self.cyclic_differential_squares_zero
            && self.weight_integral
            && self.kupisch_round_trip
            && self.euler_poincare
            && self.gldim_sandwich
    }
}

pub fn structural_checks(algebra: &NakayamaAlgebra) -> StructuralReport {
    let n = algebra.n();
    let complex = SimplicialComplex::build(algebra);
    let boundary_squares_zero = complex.boundaries().windows(2).all(|w| w[0].mul(&w[1]).is_zero());
    let cx = CyclicComplex::build(algebra);
    let cyclic_differential_squares_zero = cx.differentials().windows(2).all(|w| w[0].mul(&w[1]).is_zero());
    let rq = ResolutionQuiver::build(algebra);
    let weight_integral = rq
        .components
        .iter()
        .all(|c| c.cycle.iter().map(|&v| algebra.projective_length(v)).sum::<usize>() % n == 0);
    let kupisch_round_trip = algebra.kupisch().relations() == algebra.relations()
        && KupischSeries::new(algebra.kupisch().as_slice().to_vec()).is_ok();
    let euler_poincare = complex.euler_characteristic() == 1 + complex.reduced_betti().alternating_sum();
    let gldim_sandwich = n < 3
        || rq.leaves().into_iter().all(|leaf| {
            unamalgamate(algebra, leaf)
                .map(|s| gldim_sandwich(s.input.global_dimension(), s.output.global_dimension()))
                .unwrap_or(false)
        });
    StructuralReport {
        boundary_squares_zero,
        cyclic_differential_squares_zero,
        weight_integral,
        kupisch_round_trip,
        euler_poincare,
        gldim_sandwich,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub algebra: Value,
    pub kupisch: Vec<usize>,
    pub failed: Vec<Check>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub n: usize,
    pub class: Option<AlgebraClass>,
    pub algebras: usize,
    pub finite_gldim: usize,
    pub counterexamples: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub config: SweepConfig,
    pub total: usize,
    pub totals: Vec<Totals>,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip)]
    pub entries: Vec<AlgebraVerdict>,
}

impl TheoremReport {
    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// One row per algebra.
    pub fn write_csv<W: io::Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "n",
            "kupisch",
            "class",
            "gldim",
            "components",
            "weight",
            "chi",
            "betti",
            "hc_dims",
            "verdicts",
        ])?;
        for e in &self.entries {
            let gldim = match e.gldim {
                ProjDim::Finite(d) => d.to_string(),
                ProjDim::Infinite => "inf".into(),
            };
            let mut betti = vec![e.reduced_betti_minus1];
            betti.extend(&e.reduced_betti);
            w.write_record([
                e.n.to_string(),
                e.kupisch.iter().join(" "),
                e.class.to_string(),
                gldim,
                e.components.to_string(),
                e.weights.iter().join(" "),
                e.chi.to_string(),
                betti.iter().join(" "),
                e.hc_dims.iter().join(" "),
                e.verdicts
                    .iter()
                    .map(|(c, ok)| format!("{c}={}", if *ok { "ok" } else { "FAIL" }))
                    .join(" "),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

fn run(config: &SweepConfig) -> TheoremReport {
    let algebras: Vec<NakayamaAlgebra> = enumerate_kupisch(config).collect();
    let entries: Vec<AlgebraVerdict> = algebras.par_iter().map(|a| verify(a, &config.checks)).collect();

    let mut totals: BTreeMap<(usize, AlgebraClass), Totals> = BTreeMap::new();
    let mut counterexamples = Vec::new();
    for (a, e) in algebras.iter().zip(&entries) {
        let t = totals.entry((e.n, e.class)).or_insert_with(|| Totals {
            n: e.n,
            class: Some(e.class),
            ..Totals::default()
        });
        t.algebras += 1;
        t.finite_gldim += usize::from(e.gldim.is_finite());
        if !e.passed() {
            t.counterexamples += 1;
            counterexamples.push(Counterexample {
                algebra: algebra_to_value(a),
                kupisch: e.kupisch.clone(),
                failed: e.failed_checks(),
            });
        }
    }

    TheoremReport {
        config: config.clone(),
        total: entries.len(),
        totals: totals.into_values().collect(),
        counterexamples,
        entries,
    }
}

/// Runs [`verify`] over the enumeration; output order is the enumeration order.
pub fn sweep(config: &SweepConfig) -> Result<TheoremReport, String> {
    config.validate()?;
    match config.threads {
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| e.to_string())?;
            Ok(pool.install(|| run(config)))
        }
        None => Ok(run(config)),
    }
}
