use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

use outerlink_core::{
    ClassificationReport, CycleEdgeLink, Edge, Obstruction, OuterDiagram, S1LinkExample,
};

use crate::args::Format;
use crate::graphio::LabeledGraph;

/// One run, one report: the command and its inputs up front so the run
/// can be reproduced from the document alone, then the results. Timing
/// is text-only; the structured form stays byte-identical across runs.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<GraphSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessOut>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Serialize)]
pub struct GraphSummary {
    pub source: String,
    pub vertices: usize,
    pub edges: usize,
    pub labels: Vec<String>,
}

impl GraphSummary {
    pub fn new(source: &str, lg: &LabeledGraph) -> GraphSummary {
        GraphSummary {
            source: source.to_string(),
            vertices: lg.graph.vertex_count(),
            edges: lg.graph.edge_count(),
            labels: lg.labels.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ClassificationOut {
    pub outerplanar: bool,
    pub planar: bool,
    pub intrinsically_s1_linked: bool,
    pub intrinsically_outer_linked: bool,
    pub outer_flat_and_linkless: bool,
    pub witnesses: WitnessesOut,
}

#[derive(Debug, Serialize)]
pub struct WitnessesOut {
    pub linkless_order: Option<Vec<String>>,
    pub s1_link: Option<S1LinkOut>,
    pub outerplanarity_obstruction: Option<ObstructionOut>,
    pub planarity_obstruction: Option<ObstructionOut>,
    pub linkless_diagram: Option<DiagramOut>,
}

#[derive(Debug, Serialize)]
pub struct S1LinkOut {
    pub order: Vec<String>,
    pub first_edge: String,
    pub second_edge: String,
}

#[derive(Debug, Serialize)]
pub struct ObstructionOut {
    pub kind: String,
    pub branch_sets: Vec<Vec<String>>,
}

#[derive(Debug, Serialize)]
pub struct DiagramOut {
    pub order: Vec<String>,
    pub crossings: usize,
    pub text: String,
}

#[derive(Debug, Serialize)]
pub struct SweepOut {
    pub theorem: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_vertices: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
    pub checked: u64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct WitnessOut {
    pub kind: String,
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub impossibility: Option<String>,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateOut {
    LinklessOrder { order: Vec<String> },
    S1Link(S1LinkOut),
    Minors { obstructions: Vec<ObstructionOut> },
    OuterLink(OuterLinkOut),
    LinklessDiagram(DiagramOut),
}

#[derive(Debug, Serialize)]
pub struct OuterLinkOut {
    pub order: Vec<String>,
    pub cycle: Vec<String>,
    pub edge: String,
}

pub fn label_edge(lg: &LabeledGraph, e: Edge) -> String {
    format!("{}-{}", lg.label(e.u()), lg.label(e.v()))
}

pub fn label_seq(lg: &LabeledGraph, seq: &[usize]) -> Vec<String> {
    seq.iter().map(|&v| lg.label(v).to_string()).collect()
}

pub fn obstruction_out(lg: &LabeledGraph, o: &Obstruction) -> ObstructionOut {
    ObstructionOut {
        kind: o.kind.name().to_string(),
        branch_sets: o
            .witness
            .branch_sets()
            .iter()
            .map(|set| label_seq(lg, set))
            .collect(),
    }
}

pub fn s1_link_out(lg: &LabeledGraph, example: &S1LinkExample) -> S1LinkOut {
    S1LinkOut {
        order: label_seq(lg, example.order.as_slice()),
        first_edge: label_edge(lg, example.link.first()),
        second_edge: label_edge(lg, example.link.second()),
    }
}

pub fn diagram_out(lg: &LabeledGraph, d: &OuterDiagram) -> DiagramOut {
    DiagramOut {
        order: label_seq(lg, d.boundary_order().as_slice()),
        crossings: d.crossings().len(),
        text: d.to_text(),
    }
}

pub fn outer_link_out(lg: &LabeledGraph, d: &OuterDiagram, link: &CycleEdgeLink) -> OuterLinkOut {
    OuterLinkOut {
        order: label_seq(lg, d.boundary_order().as_slice()),
        cycle: label_seq(lg, link.cycle()),
        edge: label_edge(lg, link.edge()),
    }
}

pub fn classification_out(lg: &LabeledGraph, r: &ClassificationReport) -> ClassificationOut {
    let w = &r.witnesses;
    ClassificationOut {
        outerplanar: r.outerplanar,
        planar: r.planar,
        intrinsically_s1_linked: r.intrinsically_s1_linked,
        intrinsically_outer_linked: r.intrinsically_outer_linked,
        outer_flat_and_linkless: r.outer_flat_and_linkless,
        witnesses: WitnessesOut {
            linkless_order: w
                .linkless_order
                .as_ref()
                .map(|o| label_seq(lg, o.as_slice())),
            s1_link: w.s1_link.as_ref().map(|e| s1_link_out(lg, e)),
            outerplanarity_obstruction: w
                .outerplanarity_obstruction
                .as_ref()
                .map(|o| obstruction_out(lg, o)),
            planarity_obstruction: w
                .planarity_obstruction
                .as_ref()
                .map(|o| obstruction_out(lg, o)),
            linkless_diagram: w.linkless_diagram.as_ref().map(|d| diagram_out(lg, d)),
        },
    }
}

pub fn render(report: &RunReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => render_text(report),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn crossing_count(k: usize) -> String {
    if k == 1 {
        "1 crossing".to_string()
    } else {
        format!("{k} crossings")
    }
}

fn order_line(order: &[String]) -> String {
    format!("({})", order.join(","))
}

fn branch_line(o: &ObstructionOut) -> String {
    let sets: Vec<String> = o
        .branch_sets
        .iter()
        .map(|s| format!("{{{}}}", s.join(",")))
        .collect();
    format!("{} on {}", o.kind, sets.join(" "))
}

fn push_row(out: &mut String, key: &str, value: &str) {
    let _ = writeln!(out, "{key:<28}{value}");
}

fn render_text(r: &RunReport) -> String {
    let mut out = String::new();
    push_row(&mut out, "command", &r.command);
    if let Some(input) = &r.input {
        push_row(
            &mut out,
            "input",
            &format!(
                "{} ({} vertices, {} edges)",
                input.source, input.vertices, input.edges
            ),
        );
    }
    if let Some(seed) = r.seed {
        push_row(&mut out, "seed", &seed.to_string());
    }
    if let Some(c) = &r.classification {
        push_row(&mut out, "outerplanar", yes_no(c.outerplanar));
        push_row(&mut out, "planar", yes_no(c.planar));
        push_row(
            &mut out,
            "intrinsically S1-linked",
            yes_no(c.intrinsically_s1_linked),
        );
        push_row(
            &mut out,
            "intrinsically outer-linked",
            yes_no(c.intrinsically_outer_linked),
        );
        push_row(
            &mut out,
            "outer-flat and -linkless",
            yes_no(c.outer_flat_and_linkless),
        );
        let w = &c.witnesses;
        if let Some(order) = &w.linkless_order {
            push_row(&mut out, "linkless order", &order_line(order));
        }
        if let Some(link) = &w.s1_link {
            push_row(
                &mut out,
                "S1 link",
                &format!(
                    "order {}, edges {} and {}",
                    order_line(&link.order),
                    link.first_edge,
                    link.second_edge
                ),
            );
        }
        if let Some(o) = &w.outerplanarity_obstruction {
            push_row(&mut out, "outerplanarity obstruction", &branch_line(o));
        }
        if let Some(o) = &w.planarity_obstruction {
            push_row(&mut out, "planarity obstruction", &branch_line(o));
        }
        if let Some(d) = &w.linkless_diagram {
            push_row(
                &mut out,
                "linkless diagram",
                &format!("order {}, {}", order_line(&d.order), crossing_count(d.crossings)),
            );
        }
    }
    if let Some(s) = &r.sweep {
        push_row(&mut out, "theorem", &s.theorem);
        if let Some(n) = s.max_vertices {
            push_row(&mut out, "max vertices", &n.to_string());
        }
        if let Some(t) = s.trials {
            push_row(&mut out, "trials", &t.to_string());
        }
        push_row(&mut out, "checked", &s.checked.to_string());
        push_row(&mut out, "result", if s.passed { "pass" } else { "FAIL" });
        if let Some(ce) = &s.counterexample {
            push_row(&mut out, "counterexample", ce);
        }
    }
    if let Some(w) = &r.witness {
        push_row(&mut out, "witness kind", &w.kind);
        push_row(&mut out, "found", yes_no(w.found));
        match &w.certificate {
            Some(CertificateOut::LinklessOrder { order }) => {
                push_row(&mut out, "linkless order", &order_line(order));
            }
            Some(CertificateOut::S1Link(link)) => {
                push_row(
                    &mut out,
                    "S1 link",
                    &format!(
                        "order {}, edges {} and {}",
                        order_line(&link.order),
                        link.first_edge,
                        link.second_edge
                    ),
                );
            }
            Some(CertificateOut::Minors { obstructions }) => {
                for o in obstructions {
                    push_row(&mut out, "minor", &branch_line(o));
                }
            }
            Some(CertificateOut::OuterLink(l)) => {
                push_row(
                    &mut out,
                    "outer link",
                    &format!(
                        "order {}, cycle ({}) against edge {}",
                        order_line(&l.order),
                        l.cycle.join(","),
                        l.edge
                    ),
                );
            }
            Some(CertificateOut::LinklessDiagram(d)) => {
                push_row(
                    &mut out,
                    "linkless diagram",
                    &format!("order {}, {}", order_line(&d.order), crossing_count(d.crossings)),
                );
                out.push_str(&d.text);
            }
            None => {}
        }
        if let Some(reason) = &w.impossibility {
            push_row(&mut out, "impossibility", reason);
        }
    }
    push_row(
        &mut out,
        "elapsed",
        &format!("{:.3} s", r.elapsed.as_secs_f64()),
    );
    out
}
