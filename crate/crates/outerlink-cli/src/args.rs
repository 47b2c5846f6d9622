use clap::{Parser, Subcommand, ValueEnum};

/// Decide and certify intrinsic linking on the circle and in the ball.
#[derive(Debug, Parser)]
#[command(name = "outerlink", version, about)]
pub struct Cli {
    /// Output style: a human-readable table or one JSON document.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a graph against both dichotomies and report certificates.
    Classify {
        /// Graph name (K5, K3,2, C6, Petersen, ...), a file path, or `-`
        /// for standard input; files hold an edge list or one graph6 line.
        input: String,
    },
    /// Run one theorem's exhaustive or seeded verification sweep.
    Verify {
        #[arg(value_enum)]
        theorem: Theorem,
        /// Largest vertex count for the exhaustive sweeps.
        #[arg(long, default_value_t = 6)]
        n: usize,
        /// Trial count per configuration for the seeded sweeps.
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        /// Master seed; per-trial seeds are drawn from it.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Worker threads for the sweep; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Emit one certificate for a graph, or say why none can exist.
    Witness {
        #[arg(value_enum)]
        kind: WitnessKind,
        /// Graph name, file path, or `-` for standard input.
        input: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    /// Brute-forced intrinsic circle linking equals non-outerplanarity.
    S1Equivalence,
    /// Every vertex expansion of K4 and K3,2 stays intrinsically linked.
    ExpansionPreservation,
    /// Every K5 diagram has link parity 1 and a non-split link.
    K5Parity,
    /// Every K3,3 diagram has link parity 1 and a non-split link.
    K33Parity,
    /// Single crossing changes preserve the link parity sum.
    CrossingInvariance,
    /// Apex extensions of K5 and K3,3 diagrams have cg sum 1.
    ApexCg,
    /// Outer linking equals non-planarity, with two-page certificates.
    OuterEquivalence,
}

impl Theorem {
    pub fn name(self) -> &'static str {
        match self {
            Theorem::S1Equivalence => "s1-equivalence",
            Theorem::ExpansionPreservation => "expansion-preservation",
            Theorem::K5Parity => "k5-parity",
            Theorem::K33Parity => "k33-parity",
            Theorem::CrossingInvariance => "crossing-invariance",
            Theorem::ApexCg => "apex-cg",
            Theorem::OuterEquivalence => "outer-equivalence",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WitnessKind {
    /// Cyclic order with no non-split pair (outerplanar graphs).
    LinklessOrder,
    /// A linked edge pair in a sample order (non-outerplanar graphs).
    S1Link,
    /// Forbidden-minor branch sets behind the classification.
    Minor,
    /// Non-split cycle/edge link in the canonical convex diagram.
    OuterLink,
    /// Two-page diagram with every cycle/edge link zero (planar graphs).
    LinklessDiagram,
}

impl WitnessKind {
    pub fn name(self) -> &'static str {
        match self {
            WitnessKind::LinklessOrder => "linkless-order",
            WitnessKind::S1Link => "s1-link",
            WitnessKind::Minor => "minor",
            WitnessKind::OuterLink => "outer-link",
            WitnessKind::LinklessDiagram => "linkless-diagram",
        }
    }
}
