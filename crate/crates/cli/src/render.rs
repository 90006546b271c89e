//! Plain-text renderings. Every line is `key: value` so the output greps well.

use std::fmt::Write;

use itertools::Itertools;
use nakayama::harness::{verify, Check, TheoremReport};
use nakayama::unamalgamation::Terminal;
use nakayama::{CyclicComplex, NakayamaAlgebra, Reduction, ResolutionQuiver, SimplicialComplex, UnamalgamationStep};

fn tuple<T: std::fmt::Display>(xs: impl IntoIterator<Item = T>) -> String {
    format!("({})", xs.into_iter().join(", "))
}

pub fn quiver(rq: &ResolutionQuiver) -> String {
    let mut out = String::new();
    let arrows = rq.arrows().iter().map(|(i, j)| format!("{i}->{j}")).join(" ");
    let _ = writeln!(out, "arrows: {arrows}");
    let _ = writeln!(out, "components: {}", rq.components.len());
    for c in &rq.components {
        let _ = writeln!(
            out,
            "component {}: cycle {} weight {}",
            c.min_vertex(),
            tuple(&c.cycle),
            c.weight
        );
    }
    if rq.all_weights_equal() {
        let _ = writeln!(out, "weight: {}", rq.components[0].weight);
    } else {
        let _ = writeln!(out, "weights: {}", rq.weights().iter().join(" "));
    }
    let _ = writeln!(out, "leaves: {}", rq.leaves().iter().join(" "));
    out
}

pub fn complex(alg: &NakayamaAlgebra, l: &SimplicialComplex) -> String {
    let n = alg.n();
    let mut out = String::new();
    let words = l
        .vertices()
        .iter()
        .enumerate()
        .map(|(k, v)| format!("{k}={}", v.relation.word(n)))
        .join(" ");
    let _ = writeln!(out, "vertices: {words}");
    let _ = writeln!(out, "f-vector: {}", tuple(l.f_vector()));
    let maximal = l
        .maximal_simplices()
        .iter()
        .map(|s| format!("{{{}}}", s.iter().join(",")))
        .join(" ");
    let _ = writeln!(out, "maximal simplices: {maximal}");
    let _ = writeln!(out, "euler: {}", l.euler_characteristic());
    let _ = writeln!(
        out,
        "reduced betti (from -1): {}",
        tuple(l.reduced_betti().normalized())
    );
    out
}

pub fn hc(cx: &CyclicComplex) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "basis sizes: {}", tuple(cx.basis_sizes()));
    let _ = writeln!(out, "hc dims: {}", tuple(cx.hc_dimensions()));
    let _ = writeln!(out, "hc euler: {}", cx.hc_euler());
    out
}

pub fn gldim(alg: &NakayamaAlgebra) -> String {
    let mut out = String::new();
    for (i, pd) in alg.simple_projective_dimensions().iter().enumerate() {
        let _ = writeln!(out, "pd S{}: {pd}", i + 1);
    }
    let _ = writeln!(out, "gldim: {}", alg.global_dimension());
    out
}

pub fn analysis(alg: &NakayamaAlgebra) -> String {
    let verdict = verify(alg, &Check::ALL.into());
    let rq = ResolutionQuiver::build(alg);
    let l = SimplicialComplex::build(alg);
    let mut out = String::new();
    let _ = writeln!(out, "algebra: {alg}");
    let _ = writeln!(out, "kupisch: {}", alg.kupisch());
    let _ = writeln!(out, "class: {}", alg.class());
    out.push_str(&quiver(&rq));
    out.push_str(&complex(alg, &l));
    let _ = writeln!(out, "hc dims: {}", tuple(&verdict.hc_dims));
    let _ = writeln!(out, "gldim: {}", verdict.gldim);
    let verdicts = verdict
        .verdicts
        .iter()
        .map(|(c, ok)| format!("{c}={}", if *ok { "ok" } else { "FAIL" }))
        .join(" ");
    let _ = writeln!(out, "verdicts: {verdicts}");
    out
}

pub fn step(step: &UnamalgamationStep) -> String {
    let n = step.output.n();
    let mut out = String::new();
    let _ = writeln!(out, "leaf: {}", step.leaf);
    let _ = writeln!(out, "relabel: {}", tuple(&step.relabel));
    let _ = writeln!(
        out,
        "raw relations: {}",
        step.raw_relations.iter().map(|r| r.word(n)).join(", ")
    );
    for e in &step.eliminated {
        let _ = writeln!(
            out,
            "eliminated: {} (contains {})",
            e.relation.word(n),
            e.witness.word(n)
        );
    }
    let _ = writeln!(out, "output: {}", step.output);
    let _ = writeln!(out, "output kupisch: {}", step.output.kupisch());
    let checks = nakayama::unamalgamation::check_step(step);
    let _ = writeln!(
        out,
        "checks: quiver={} weight={} betti={} gldim={}",
        checks.quiver, checks.weight, checks.betti, checks.gldim
    );
    out
}

pub fn reduction(alg: &NakayamaAlgebra, reduction: &Reduction) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "input: {alg}");
    for (k, s) in reduction.steps.iter().enumerate() {
        let _ = writeln!(out, "step {}: leaf {} -> {}", k + 1, s.leaf, s.output);
    }
    match &reduction.terminal {
        Terminal::Algebra { algebra } => {
            let _ = writeln!(out, "terminal: {algebra}");
        }
        Terminal::SingleVertex { relation_length } => {
            let _ = writeln!(
                out,
                "terminal: single vertex with loop relation of length {relation_length}"
            );
        }
    }
    let _ = writeln!(
        out,
        "terminal weights: {}",
        reduction.terminal.weights().iter().join(" ")
    );
    let _ = writeln!(out, "semisimple: {}", reduction.terminal.is_semisimple());
    out
}

pub fn sweep_summary(report: &TheoremReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "algebras: {}", report.total);
    for t in &report.totals {
        let class = t.class.map_or("-".to_string(), |c| c.to_string());
        let _ = writeln!(
            out,
            "n={} class={class}: {} algebras, {} finite gldim, {} counterexamples",
            t.n, t.algebras, t.finite_gldim, t.counterexamples
        );
    }
    let _ = writeln!(out, "counterexamples: {}", report.counterexamples.len());
    for c in &report.counterexamples {
        let _ = writeln!(out, "counterexample: {} fails {}", c.algebra, c.failed.iter().join(","));
    }
    out
}
