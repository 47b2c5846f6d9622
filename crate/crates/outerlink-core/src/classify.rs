use crate::diagram::{find_nonsplit_outer_link, two_page_linkless_diagram, OuterDiagram};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::minor::Obstruction;
use crate::planar::{is_outerplanar, is_planar};
use crate::s1link::{
    find_nonsplit_link, is_intrinsically_s1_linked_bruteforce, CyclicOrder, EdgePairLink,
    S1Decision, MAX_BRUTEFORCE_VERTICES,
};

/// A cyclic order in which a concrete non-split pair of edges was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct S1LinkExample {
    pub order: CyclicOrder,
    pub link: EdgePairLink,
}

/// Evidence backing a classification: whichever side of each dichotomy
/// holds, a checkable certificate for it.
#[derive(Clone, Debug, Default)]
pub struct ClassificationWitnesses {
    /// Link-free placement on the circle; present iff outerplanar.
    pub linkless_order: Option<CyclicOrder>,
    /// A linked pair in a sample order; present iff not outerplanar.
    pub s1_link: Option<S1LinkExample>,
    /// K4 or K3,2 minor; present iff not outerplanar and the graph is
    /// small enough for the minor sweep.
    pub outerplanarity_obstruction: Option<Obstruction>,
    /// K5 or K3,3 minor under the same size proviso.
    pub planarity_obstruction: Option<Obstruction>,
    /// Two-page diagram with every cycle/edge link zero; present iff
    /// planar and the order search is within its vertex bound.
    pub linkless_diagram: Option<OuterDiagram>,
}

/// Where a graph sits in the two dichotomies. Intrinsic circle linking
/// coincides with failing outerplanarity, and intrinsic linking of the
/// outer spatial extension coincides with failing planarity; the
/// equivalent flat/linkless statements are recorded alongside.
#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub outerplanar: bool,
    pub planar: bool,
    pub intrinsically_s1_linked: bool,
    pub intrinsically_outer_linked: bool,
    pub outer_flat_and_linkless: bool,
    pub witnesses: ClassificationWitnesses,
}

/// Classifies a graph and gathers certificates, cross-checking the
/// embedding route against independent evidence: a boundary order is
/// re-verified to be link-free, a linked example is extracted from the
/// identity order, and on small graphs the exhaustive order sweep must
/// agree with the outerplanarity test.
pub fn classify(g: &Graph) -> Result<ClassificationReport> {
    let outer = is_outerplanar(g);
    let plane = is_planar(g);
    let mut witnesses = ClassificationWitnesses::default();

    if let Some(order) = &outer.boundary_order {
        if let Some(link) = find_nonsplit_link(order, g)? {
            return Err(Error::CrossValidationMismatch(format!(
                "boundary order {order} of an outerplanar graph carries the link {link}"
            )));
        }
        witnesses.linkless_order = Some(order.clone());
    } else {
        let order = CyclicOrder::identity(g.vertex_count());
        match find_nonsplit_link(&order, g)? {
            Some(link) => witnesses.s1_link = Some(S1LinkExample { order, link }),
            None => {
                return Err(Error::CrossValidationMismatch(
                    "graph is not outerplanar, yet the identity order is link-free".into(),
                ))
            }
        }
    }

    if g.vertex_count() <= MAX_BRUTEFORCE_VERTICES {
        let brute = is_intrinsically_s1_linked_bruteforce(g)?;
        let brute_linked = matches!(brute, S1Decision::Linked);
        if brute_linked == outer.outerplanar {
            return Err(Error::CrossValidationMismatch(format!(
                "order sweep says linked={brute_linked}, outerplanarity test says {}",
                outer.outerplanar
            )));
        }
    }

    witnesses.outerplanarity_obstruction = outer.obstruction.clone();
    witnesses.planarity_obstruction = plane.obstruction.clone();
    if plane.planar {
        if let Some(d) = two_page_linkless_diagram(g) {
            debug_assert!(find_nonsplit_outer_link(&d).is_none());
            witnesses.linkless_diagram = Some(d);
        }
    }

    Ok(ClassificationReport {
        outerplanar: outer.outerplanar,
        planar: plane.planar,
        intrinsically_s1_linked: !outer.outerplanar,
        intrinsically_outer_linked: !plane.planar,
        outer_flat_and_linkless: plane.planar,
        witnesses,
    })
}
