use std::io::Read;
use std::time::{Duration, Instant};

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use outerlink_core::canon::MAX_ENUMERATION_VERTICES;
use outerlink_core::minor::find_obstruction;
use outerlink_core::{
    apex_extension, cg_sum, classify, convex_diagram, crossing_change, enumerate_cyclic_orders,
    enumerate_graphs, find_nonsplit_link, find_nonsplit_outer_link, is_intrinsically_s1_linked_bruteforce,
    is_outerplanar, is_planar, link_parity_sum, linkless_order_from_outerplanar, standard_graph,
    standard_labels, two_page_linkless_diagram, validate_diagram, CyclicOrder, Error as CoreError,
    Graph, GraphName, ObstructionKind, OverRule, S1Decision, S1LinkExample, MAX_CANONICAL_VERTICES,
};

use crate::args::{Cli, Command, Theorem, WitnessKind};
use crate::graphio::{parse_graph, to_graph6, InputError, LabeledGraph};
use crate::report::{
    classification_out, diagram_out, label_seq, obstruction_out, outer_link_out, s1_link_out,
    CertificateOut, GraphSummary, RunReport, SweepOut, WitnessOut,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("cannot read `{path}`: {err}")]
    Io { path: String, err: std::io::Error },
    #[error("{0}")]
    Flag(String),
    #[error("internal cross-check failed: {0}")]
    Internal(String),
}

/// 0 all good, 1 a check failed or a requested witness cannot exist,
/// 2 the input or a flag was unusable.
pub fn exit_code(e: &CliError) -> i32 {
    match e {
        CliError::Input(_) | CliError::Io { .. } | CliError::Flag(_) => 2,
        CliError::Internal(_) => 1,
    }
}

#[derive(Debug)]
pub struct Outcome {
    pub report: RunReport,
    pub ok: bool,
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let mut outcome = match &cli.command {
        Command::Classify { input } => cmd_classify(input)?,
        Command::Verify {
            theorem,
            n,
            trials,
            seed,
            jobs,
        } => cmd_verify(*theorem, *n, *trials, *seed, *jobs)?,
        Command::Witness { kind, input } => cmd_witness(*kind, input)?,
    };
    outcome.report.elapsed = start.elapsed();
    Ok(outcome)
}

fn internal(e: CoreError) -> CliError {
    CliError::Internal(e.to_string())
}

/// Inputs resolve in this order: `-` is standard input, a recognized
/// graph name is that standard graph, anything else is a file path.
fn load_input(input: &str) -> Result<(LabeledGraph, String), CliError> {
    if input == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|err| CliError::Io {
                path: "-".into(),
                err,
            })?;
        return Ok((parse_graph(&text)?, "-".to_string()));
    }
    if let Ok(name) = input.parse::<GraphName>() {
        let graph = standard_graph(name).map_err(internal)?;
        let labels = standard_labels(name);
        return Ok((LabeledGraph { graph, labels }, input.to_string()));
    }
    let text = std::fs::read_to_string(input).map_err(|err| CliError::Io {
        path: input.to_string(),
        err,
    })?;
    Ok((parse_graph(&text)?, input.to_string()))
}

fn base_report(command: String) -> RunReport {
    RunReport {
        command,
        input: None,
        seed: None,
        classification: None,
        sweep: None,
        witness: None,
        elapsed: Duration::ZERO,
    }
}

fn cmd_classify(input: &str) -> Result<Outcome, CliError> {
    let (lg, source) = load_input(input)?;
    let r = classify(&lg.graph).map_err(internal)?;
    let mut report = base_report(format!("classify {source}"));
    report.input = Some(GraphSummary::new(&source, &lg));
    report.classification = Some(classification_out(&lg, &r));
    Ok(Outcome { report, ok: true })
}

fn order_text(lg: &LabeledGraph, order: &CyclicOrder) -> String {
    format!("({})", label_seq(lg, order.as_slice()).join(","))
}

fn cmd_witness(kind: WitnessKind, input: &str) -> Result<Outcome, CliError> {
    let (lg, source) = load_input(input)?;
    let g = &lg.graph;
    let (certificate, impossibility): (Option<CertificateOut>, Option<String>) = match kind {
        WitnessKind::LinklessOrder => match linkless_order_from_outerplanar(g) {
            Ok(order) => (
                Some(CertificateOut::LinklessOrder {
                    order: label_seq(&lg, order.as_slice()),
                }),
                None,
            ),
            Err(CoreError::NotOuterplanar) => (
                None,
                Some(
                    "the graph is not outerplanar, so every cyclic order carries a non-split \
                     pair of edges"
                        .into(),
                ),
            ),
            Err(e) => return Err(internal(e)),
        },
        WitnessKind::S1Link => {
            let outer = is_outerplanar(g);
            if let Some(order) = &outer.boundary_order {
                (
                    None,
                    Some(format!(
                        "the graph is outerplanar; the boundary order {} is link-free",
                        order_text(&lg, order)
                    )),
                )
            } else {
                let order = CyclicOrder::identity(g.vertex_count());
                match find_nonsplit_link(&order, g).map_err(internal)? {
                    Some(link) => (
                        Some(CertificateOut::S1Link(s1_link_out(
                            &lg,
                            &S1LinkExample { order, link },
                        ))),
                        None,
                    ),
                    None => {
                        return Err(CliError::Internal(
                            "non-outerplanar graph with a link-free identity order".into(),
                        ))
                    }
                }
            }
        }
        WitnessKind::Minor => {
            let outer = is_outerplanar(g);
            if outer.outerplanar {
                (
                    None,
                    Some("the graph is outerplanar, so it has no K4 or K32 minor".into()),
                )
            } else {
                let mut obstructions = Vec::new();
                if let Some(o) = &outer.obstruction {
                    obstructions.push(obstruction_out(&lg, o));
                }
                if let Some(o) = &is_planar(g).obstruction {
                    obstructions.push(obstruction_out(&lg, o));
                }
                if obstructions.is_empty() {
                    (
                        None,
                        Some(
                            "not outerplanar, but past the 12-vertex minor-search bound; \
                             no branch sets were computed"
                                .into(),
                        ),
                    )
                } else {
                    (Some(CertificateOut::Minors { obstructions }), None)
                }
            }
        }
        WitnessKind::OuterLink => {
            let order = CyclicOrder::identity(g.vertex_count());
            let d = convex_diagram(g, &order, &OverRule::LexicographicOver).map_err(internal)?;
            match find_nonsplit_outer_link(&d) {
                Some(link) => (
                    Some(CertificateOut::OuterLink(outer_link_out(&lg, &d, &link))),
                    None,
                ),
                None => (
                    None,
                    Some(
                        "the canonical convex diagram has no non-split cycle/edge link".into(),
                    ),
                ),
            }
        }
        WitnessKind::LinklessDiagram => match two_page_linkless_diagram(g) {
            Some(d) => (Some(CertificateOut::LinklessDiagram(diagram_out(&lg, &d))), None),
            None => {
                let smallish = g.vertex_count() <= MAX_CANONICAL_VERTICES;
                let parity_bound = smallish
                    && [GraphName::Complete(5), GraphName::CompleteBipartite(3, 3)]
                        .into_iter()
                        .any(|name| {
                            outerlink_core::canon::isomorphic(
                                g,
                                &standard_graph(name).unwrap(),
                            )
                            .unwrap()
                        });
                let reason = if parity_bound {
                    "the link parity sum is 1 for every crossing assignment, so every \
                     diagram has a non-split link"
                } else if !is_planar(g).planar {
                    "the graph is not planar, so every outer embedding carries a non-split \
                     link"
                } else {
                    "planar, but no two-page diagram was found within the 9-vertex search \
                     bound"
                };
                (None, Some(reason.into()))
            }
        },
    };
    let found = certificate.is_some();
    let mut report = base_report(format!("witness {} {source}", kind.name()));
    report.input = Some(GraphSummary::new(&source, &lg));
    report.witness = Some(WitnessOut {
        kind: kind.name().to_string(),
        found,
        certificate,
        impossibility,
    });
    Ok(Outcome { report, ok: found })
}

fn cmd_verify(
    theorem: Theorem,
    n: usize,
    trials: u64,
    seed: u64,
    jobs: usize,
) -> Result<Outcome, CliError> {
    let exhaustive = matches!(
        theorem,
        Theorem::S1Equivalence | Theorem::OuterEquivalence
    );
    if exhaustive && !(1..=MAX_ENUMERATION_VERTICES).contains(&n) {
        return Err(CliError::Flag(format!(
            "--n must lie in 1..={MAX_ENUMERATION_VERTICES} for exhaustive sweeps"
        )));
    }
    let seeded = matches!(
        theorem,
        Theorem::K5Parity | Theorem::K33Parity | Theorem::CrossingInvariance | Theorem::ApexCg
    );
    if seeded && trials == 0 {
        return Err(CliError::Flag("--trials must be at least 1".into()));
    }

    let sweep = || match theorem {
        Theorem::S1Equivalence => sweep_s1_equivalence(n),
        Theorem::ExpansionPreservation => sweep_expansion_preservation(),
        Theorem::K5Parity => sweep_parity(GraphName::Complete(5), theorem, trials, seed),
        Theorem::K33Parity => {
            sweep_parity(GraphName::CompleteBipartite(3, 3), theorem, trials, seed)
        }
        Theorem::CrossingInvariance => sweep_crossing_invariance(trials, seed),
        Theorem::ApexCg => sweep_apex_cg(trials, seed),
        Theorem::OuterEquivalence => sweep_outer_equivalence(n),
    };
    let out = if jobs > 0 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| CliError::Flag(format!("--jobs: {e}")))?;
        pool.install(sweep)
    } else {
        sweep()
    };

    let command = if exhaustive {
        format!("verify {} --n {n}", theorem.name())
    } else if seeded {
        format!("verify {} --trials {trials} --seed {seed}", theorem.name())
    } else {
        format!("verify {}", theorem.name())
    };
    let ok = out.passed;
    let mut report = base_report(command);
    report.seed = seeded.then_some(seed);
    report.sweep = Some(out);
    Ok(Outcome { report, ok })
}

fn collect_sweep(
    theorem: Theorem,
    max_vertices: Option<usize>,
    trials: Option<u64>,
    results: Vec<(u64, Option<String>)>,
) -> SweepOut {
    let checked = results.iter().map(|(c, _)| c).sum();
    let counterexample = results.into_iter().find_map(|(_, ce)| ce);
    SweepOut {
        theorem: theorem.name().to_string(),
        max_vertices,
        trials,
        checked,
        passed: counterexample.is_none(),
        counterexample,
    }
}

fn graphs_through(n: usize) -> Vec<Graph> {
    (1..=n)
        .flat_map(|k| enumerate_graphs(k).expect("bound was validated"))
        .collect()
}

fn sweep_s1_equivalence(n: usize) -> SweepOut {
    let graphs = graphs_through(n);
    let results: Vec<(u64, Option<String>)> = graphs
        .par_iter()
        .map(|g| {
            let outerplanar = is_outerplanar(g).outerplanar;
            let decision = is_intrinsically_s1_linked_bruteforce(g)
                .expect("enumeration stays within the brute-force bound");
            let linked = matches!(decision, S1Decision::Linked);
            let ce = (linked == outerplanar).then(|| {
                format!(
                    "graph6 {}: order sweep linked={linked}, outerplanar={outerplanar}",
                    to_graph6(g)
                )
            });
            (1, ce)
        })
        .collect();
    collect_sweep(Theorem::S1Equivalence, Some(n), None, results)
}

fn sweep_expansion_preservation() -> SweepOut {
    let mut cases: Vec<(String, Graph)> = Vec::new();
    for name in [GraphName::Complete(4), GraphName::CompleteBipartite(3, 2)] {
        let base = standard_graph(name).unwrap();
        for v in base.vertices() {
            let expansions = base.enumerate_expansions(v).unwrap();
            for (i, expanded) in expansions.into_iter().enumerate() {
                cases.push((format!("{name:?} vertex {v} split {i}"), expanded));
            }
        }
    }
    let results: Vec<(u64, Option<String>)> = cases
        .par_iter()
        .map(|(tag, g)| {
            let decision = is_intrinsically_s1_linked_bruteforce(g)
                .expect("expansions stay within the brute-force bound");
            let ce = match decision {
                S1Decision::Linked => None,
                S1Decision::LinklessOrder(o) => {
                    Some(format!("{tag}: linkless order {o} exists"))
                }
            };
            (1, ce)
        })
        .collect();
    collect_sweep(Theorem::ExpansionPreservation, None, None, results)
}

/// Per-trial seeds are drawn sequentially from the master seed, then the
/// trials run in parallel; the work list fixes the report regardless of
/// scheduling.
fn seeded_work(units: usize, seed: u64) -> Vec<u64> {
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    (0..units).map(|_| master.next_u64()).collect()
}

fn sweep_parity(name: GraphName, theorem: Theorem, trials: u64, seed: u64) -> SweepOut {
    let g = standard_graph(name).unwrap();
    let orders = enumerate_cyclic_orders(&g).unwrap();
    let subseeds = seeded_work(orders.len() * trials as usize, seed);
    let work: Vec<(usize, u64)> = (0..orders.len())
        .flat_map(|oi| (0..trials as usize).map(move |t| (oi, t)))
        .zip(subseeds)
        .map(|((oi, _), sub)| (oi, sub))
        .collect();
    let results: Vec<(u64, Option<String>)> = work
        .par_iter()
        .map(|&(oi, sub)| {
            let d = convex_diagram(&g, &orders[oi], &OverRule::Random(sub))
                .expect("enumerated orders fit the graph");
            let parity = link_parity_sum(&d);
            let linked = find_nonsplit_outer_link(&d).is_some();
            let ce = (parity != 1 || !linked).then(|| {
                format!(
                    "order {}, subseed {sub}: parity {parity}, non-split link found: {linked}",
                    orders[oi]
                )
            });
            (1, ce)
        })
        .collect();
    collect_sweep(theorem, None, Some(trials), results)
}

fn sweep_crossing_invariance(trials: u64, seed: u64) -> SweepOut {
    let mut work: Vec<(GraphName, usize, u64)> = Vec::new();
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let mut order_counts = Vec::new();
    for name in [GraphName::Complete(5), GraphName::CompleteBipartite(3, 3)] {
        let g = standard_graph(name).unwrap();
        order_counts.push((name, enumerate_cyclic_orders(&g).unwrap()));
        for t in 0..trials as usize {
            work.push((name, t, master.next_u64()));
        }
    }
    let results: Vec<(u64, Option<String>)> = work
        .par_iter()
        .map(|&(name, t, sub)| {
            let (_, orders) = order_counts
                .iter()
                .find(|(n, _)| *n == name)
                .expect("both graphs are prepared");
            let g = standard_graph(name).unwrap();
            let order = &orders[t % orders.len()];
            let d = convex_diagram(&g, order, &OverRule::Random(sub)).unwrap();
            let before = link_parity_sum(&d);
            let mut flips = 0;
            let mut ce = None;
            for id in 0..d.crossings().len() {
                let flipped = crossing_change(&d, id).unwrap();
                flips += 1;
                if link_parity_sum(&flipped) != before {
                    ce = Some(format!(
                        "{name:?} order {order}, subseed {sub}: flipping crossing {id} \
                         changed the parity sum"
                    ));
                    break;
                }
            }
            (flips, ce)
        })
        .collect();
    collect_sweep(Theorem::CrossingInvariance, None, Some(trials), results)
}

fn sweep_apex_cg(trials: u64, seed: u64) -> SweepOut {
    let mut work: Vec<(GraphName, usize, u64)> = Vec::new();
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    for name in [GraphName::Complete(5), GraphName::CompleteBipartite(3, 3)] {
        for t in 0..trials as usize {
            work.push((name, t, master.next_u64()));
        }
    }
    let results: Vec<(u64, Option<String>)> = work
        .par_iter()
        .map(|&(name, t, sub)| {
            let g = standard_graph(name).unwrap();
            let orders = enumerate_cyclic_orders(&g).unwrap();
            let order = &orders[t % orders.len()];
            let d = convex_diagram(&g, order, &OverRule::Random(sub)).unwrap();
            let s = apex_extension(&d);
            let ce = match cg_sum(&s) {
                Ok(1) => None,
                Ok(v) => Some(format!(
                    "{name:?} order {order}, subseed {sub}: cg sum {v}"
                )),
                Err(e) => Some(format!(
                    "{name:?} order {order}, subseed {sub}: cg sum failed: {e}"
                )),
            };
            (1, ce)
        })
        .collect();
    collect_sweep(Theorem::ApexCg, None, Some(trials), results)
}

fn sweep_outer_equivalence(n: usize) -> SweepOut {
    let graphs = graphs_through(n);
    let results: Vec<(u64, Option<String>)> = graphs
        .par_iter()
        .map(|g| {
            let planar = is_planar(g).planar;
            let minor_free = find_obstruction(g, &[ObstructionKind::K5, ObstructionKind::K33])
                .expect("enumeration stays within the minor-search bound")
                .is_none();
            if planar != minor_free {
                return (
                    1,
                    Some(format!(
                        "graph6 {}: planar={planar} but K5/K33-minor-free={minor_free}",
                        to_graph6(g)
                    )),
                );
            }
            let diagram = two_page_linkless_diagram(g);
            let ce = if planar {
                match diagram {
                    Some(d) => {
                        let violations = validate_diagram(&d);
                        (!violations.is_empty() || find_nonsplit_outer_link(&d).is_some())
                            .then(|| {
                                format!(
                                    "graph6 {}: two-page diagram is broken or linked",
                                    to_graph6(g)
                                )
                            })
                    }
                    None => g.has_hamiltonian_cycle().then(|| {
                        format!(
                            "graph6 {}: Hamiltonian planar but no two-page diagram found",
                            to_graph6(g)
                        )
                    }),
                }
            } else {
                diagram.map(|_| {
                    format!(
                        "graph6 {}: non-planar graph received a two-page diagram",
                        to_graph6(g)
                    )
                })
            };
            (1, ce)
        })
        .collect();
    collect_sweep(Theorem::OuterEquivalence, Some(n), None, results)
}
