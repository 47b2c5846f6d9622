//! Decides and certifies two linking properties of finite simple graphs.
//!
//! A graph is *intrinsically S¹-linked* when every placement of its vertices
//! on a circle leaves two disjoint edges whose endpoint pairs interleave.
//! That holds exactly for the non-outerplanar graphs. One dimension up, a
//! graph drawn in a disk with its vertices on the boundary circle is
//! *outer-flat* when some such drawing has no non-split cycle/edge link;
//! that holds exactly for the planar graphs. This crate implements both
//! characterizations three ways and cross-checks the routes against each
//! other: brute force over cyclic orders, forbidden-minor search (K4 and
//! K3,2 for outerplanarity, K5 and K3,3 for planarity), and a mod-2
//! linking calculus on convex chord diagrams.

pub mod canon;
pub mod classify;
pub mod cycles;
pub mod diagram;
pub mod error;
pub mod graph;
pub mod minor;
pub mod planar;
pub mod s1link;

pub use canon::{enumerate_graphs, CanonicalLabel, MAX_CANONICAL_VERTICES};
pub use classify::{classify, ClassificationReport, ClassificationWitnesses, S1LinkExample};
pub use cycles::simple_cycles;
pub use diagram::{
    apex_extension, cg_sum, convex_diagram, crossing_change, find_nonsplit_outer_link,
    link_parity_sum, lk2_cycle_cycle, lk2_cycle_edge, two_page_linkless_diagram, validate_diagram,
    Crossing, CycleEdgeLink, OuterDiagram, OverRule, SpatialDiagram, MAX_TWO_PAGE_VERTICES,
};
pub use error::{Error, Result};
pub use graph::{standard_graph, standard_labels, Edge, Graph, GraphName, NeighborPartition};
pub use minor::{has_minor, MinorWitness, Obstruction, ObstructionKind, MAX_MINOR_HOST};
pub use planar::{is_outerplanar, is_planar, OuterplanarityResult, PlanarityResult, RotationSystem};
pub use s1link::{
    enumerate_cyclic_orders, find_nonsplit_link, is_intrinsically_s1_linked_bruteforce,
    linkless_order_from_outerplanar, lk2_s1, parity_sum, CyclicOrder, EdgePairLink, S1Decision,
    S1LinkReport, MAX_BRUTEFORCE_VERTICES,
};
