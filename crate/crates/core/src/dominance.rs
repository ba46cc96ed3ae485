//! Strict and weak two-step reachability, kings, serfs, weak kings, weak
//! serfs, r-kings, triple classification, and the Lemma-1 witness.
//!
//! A vertex v is *reachable within two steps* from u if u→v or u→w→v for
//! some w. It is *weakly reachable within two steps* if one of exactly five
//! forms holds: u→v, u(0-0)v, u→w→v, u→w(0-0)v, or u(0-0)w→v. A tie-tie
//! chain is not weak reachability. Kings (serfs) strictly reach (are reached
//! from) every other vertex within two steps; weak kings and weak serfs are
//! the weak analogues.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{bits, OrientedGraph, Relation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DominanceError {
    SameVertex { v: usize },
    OutOfRange { v: usize, n: usize },
    NotDistinct,
    BadRadius { r: usize },
    /// Lemma-1 witness requested for a vertex that already is a weak king
    /// (king side) or weak serf (serf side).
    PreconditionViolated { vertex: usize, side: Side },
}

impl fmt::Display for DominanceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DominanceError::SameVertex { v } => {
                write!(f, "reachability is defined between distinct vertices (got {v} twice)")
            }
            DominanceError::OutOfRange { v, n } => write!(f, "vertex {v} out of range 1..={n}"),
            DominanceError::NotDistinct => write!(f, "triple vertices must be distinct"),
            DominanceError::BadRadius { r } => write!(f, "r-king radius must be >= 1 (got {r})"),
            DominanceError::PreconditionViolated { vertex, side } => write!(
                f,
                "vertex {vertex} already is a weak {} — no Lemma-1 witness applies",
                match side {
                    Side::King => "king",
                    Side::Serf => "serf",
                }
            ),
        }
    }
}

impl core::error::Error for DominanceError {}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Side {
    King,
    Serf,
}

/// The form of a weak two-step path, with the intermediate vertex when one
/// is involved.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum WeakPathWitness {
    DirectArc,
    DirectTie,
    ArcArc { via: usize },
    ArcTie { via: usize },
    TieArc { via: usize },
}

impl WeakPathWitness {
    pub fn via(&self) -> Option<usize> {
        match *self {
            WeakPathWitness::ArcArc { via }
            | WeakPathWitness::ArcTie { via }
            | WeakPathWitness::TieArc { via } => Some(via),
            _ => None,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TripleKind {
    Transitive,
    Intransitive,
}

/// All dominance sets of a graph plus the (k, s, b) counts: k weak kings,
/// s weak serfs, b vertices that are both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominanceReport {
    pub kings: Vec<usize>,
    pub serfs: Vec<usize>,
    pub weak_kings: Vec<usize>,
    pub weak_serfs: Vec<usize>,
    pub transmitters: Vec<usize>,
    pub k: usize,
    pub s: usize,
    pub b: usize,
}

impl DominanceReport {
    pub fn compute(g: &OrientedGraph) -> DominanceReport {
        let (wk, ws) = weak_masks(g);
        let (kings, serfs) = strict_masks(g);
        DominanceReport {
            kings: mask_to_vertices(kings),
            serfs: mask_to_vertices(serfs),
            weak_kings: mask_to_vertices(wk),
            weak_serfs: mask_to_vertices(ws),
            transmitters: g.transmitters(),
            k: wk.count_ones() as usize,
            s: ws.count_ones() as usize,
            b: (wk & ws).count_ones() as usize,
        }
    }

    pub fn ksb(&self) -> (usize, usize, usize) {
        (self.k, self.s, self.b)
    }
}

fn mask_to_vertices(mask: u64) -> Vec<usize> {
    bits(mask).map(|v0| v0 + 1).collect()
}

fn check(g: &OrientedGraph, v: usize) -> Result<usize, DominanceError> {
    let n = g.vertex_count();
    if v < 1 || v > n {
        Err(DominanceError::OutOfRange { v, n })
    } else {
        Ok(v - 1)
    }
}

/// Everything strictly reachable from `u0` within two steps (0-based mask).
pub(crate) fn strict_reach_mask(g: &OrientedGraph, u0: usize) -> u64 {
    let direct = g.out_mask(u0);
    let mut reach = direct;
    for w in bits(direct) {
        reach |= g.out_mask(w);
    }
    reach & !(1 << u0)
}

/// Everything weakly reachable from `u0` within two steps (0-based mask):
/// direct ∪ (strict image expanded by out∪tie) ∪ (tie image expanded by out).
pub(crate) fn weak_reach_mask(g: &OrientedGraph, u0: usize) -> u64 {
    let outs = g.out_mask(u0);
    let ties = g.tie_mask(u0);
    let mut reach = outs | ties;
    for w in bits(outs) {
        reach |= g.out_mask(w) | g.tie_mask(w);
    }
    for w in bits(ties) {
        reach |= g.out_mask(w);
    }
    reach & !(1 << u0)
}

/// (king mask, serf mask) in one pass over the strict reach rows. A vertex
/// is a serf iff it sits in the strict reach of every other vertex, so serfs
/// are the intersection of the rows (each row widened by its own source).
pub(crate) fn strict_masks(g: &OrientedGraph) -> (u64, u64) {
    let full = g.full_mask();
    let mut kings = 0u64;
    let mut serfs = full;
    for u0 in 0..g.vertex_count() {
        let reach = strict_reach_mask(g, u0);
        if reach == full & !(1 << u0) {
            kings |= 1 << u0;
        }
        serfs &= reach | (1 << u0);
    }
    (kings, serfs)
}

/// (weak-king mask, weak-serf mask), same scheme over weak reach rows.
pub(crate) fn weak_masks(g: &OrientedGraph) -> (u64, u64) {
    let full = g.full_mask();
    let mut kings = 0u64;
    let mut serfs = full;
    for u0 in 0..g.vertex_count() {
        let reach = weak_reach_mask(g, u0);
        if reach == full & !(1 << u0) {
            kings |= 1 << u0;
        }
        serfs &= reach | (1 << u0);
    }
    (kings, serfs)
}

pub(crate) fn king_mask(g: &OrientedGraph) -> u64 {
    strict_masks(g).0
}

pub(crate) fn weak_king_mask(g: &OrientedGraph) -> u64 {
    weak_masks(g).0
}

pub(crate) fn serf_mask(g: &OrientedGraph) -> u64 {
    strict_masks(g).1
}

pub(crate) fn weak_serf_mask(g: &OrientedGraph) -> u64 {
    weak_masks(g).1
}

/// Whether v is weakly reachable within two steps from u, with the witness
/// form. Forms are tried in a fixed order (direct arc, direct tie, then for
/// each intermediate ascending: arc-arc, arc-tie, tie-arc), so the returned
/// witness is deterministic.
pub fn weakly_reachable_within_two(
    g: &OrientedGraph,
    u: usize,
    v: usize,
) -> Result<Option<WeakPathWitness>, DominanceError> {
    let u0 = check(g, u)?;
    let v0 = check(g, v)?;
    if u == v {
        return Err(DominanceError::SameVertex { v: u });
    }
    match g.relation(u, v) {
        Relation::Forward => return Ok(Some(WeakPathWitness::DirectArc)),
        Relation::Tie => return Ok(Some(WeakPathWitness::DirectTie)),
        Relation::Backward => {}
    }
    for w0 in 0..g.vertex_count() {
        if w0 == u0 || w0 == v0 {
            continue;
        }
        let via = w0 + 1;
        let first_arc = g.out_mask(u0) >> w0 & 1 == 1;
        let first_tie = g.tie_mask(u0) >> w0 & 1 == 1;
        let second_arc = g.out_mask(w0) >> v0 & 1 == 1;
        let second_tie = g.tie_mask(w0) >> v0 & 1 == 1;
        if first_arc && second_arc {
            return Ok(Some(WeakPathWitness::ArcArc { via }));
        }
        if first_arc && second_tie {
            return Ok(Some(WeakPathWitness::ArcTie { via }));
        }
        if first_tie && second_arc {
            return Ok(Some(WeakPathWitness::TieArc { via }));
        }
    }
    Ok(None)
}

/// Whether v is strictly reachable within two steps from u.
pub fn reachable_within_two(
    g: &OrientedGraph,
    u: usize,
    v: usize,
) -> Result<bool, DominanceError> {
    let u0 = check(g, u)?;
    let v0 = check(g, v)?;
    if u == v {
        return Err(DominanceError::SameVertex { v: u });
    }
    Ok(strict_reach_mask(g, u0) >> v0 & 1 == 1)
}

pub fn kings(g: &OrientedGraph) -> Vec<usize> {
    mask_to_vertices(king_mask(g))
}

pub fn serfs(g: &OrientedGraph) -> Vec<usize> {
    mask_to_vertices(serf_mask(g))
}

pub fn weak_kings(g: &OrientedGraph) -> Vec<usize> {
    mask_to_vertices(weak_king_mask(g))
}

pub fn weak_serfs(g: &OrientedGraph) -> Vec<usize> {
    mask_to_vertices(weak_serf_mask(g))
}

/// Vertices from which every other vertex is reachable by a strict directed
/// path of length <= r. `r_kings(g, 2)` equals `kings(g)`.
pub fn r_kings(g: &OrientedGraph, r: usize) -> Result<Vec<usize>, DominanceError> {
    if r < 1 {
        return Err(DominanceError::BadRadius { r });
    }
    let full = g.full_mask();
    let mut result = 0u64;
    for u0 in 0..g.vertex_count() {
        let mut reach = g.out_mask(u0);
        let mut frontier = reach;
        for _ in 1..r {
            let mut next = 0u64;
            for w in bits(frontier) {
                next |= g.out_mask(w);
            }
            frontier = next & !reach;
            reach |= next;
            if frontier == 0 {
                break;
            }
        }
        if reach & !(1 << u0) == full & !(1 << u0) {
            result |= 1 << u0;
        }
    }
    Ok(mask_to_vertices(result))
}

/// Classify the induced triple on three distinct vertices.
///
/// Intransitive iff the triple is cyclically oriented: a directed 3-cycle,
/// or a directed 2-path closed by a tie. Pattern matching is up to
/// relabeling, so the cyclic relations (u,v), (v,w), (w,u) are intransitive
/// exactly when at least two are arcs and all arcs point the same way around
/// the cycle. The zero-arc triple is transitive.
pub fn classify_triple(
    g: &OrientedGraph,
    u: usize,
    v: usize,
    w: usize,
) -> Result<TripleKind, DominanceError> {
    check(g, u)?;
    check(g, v)?;
    check(g, w)?;
    if u == v || v == w || u == w {
        return Err(DominanceError::NotDistinct);
    }
    let around = [g.relation(u, v), g.relation(v, w), g.relation(w, u)];
    let forwards = around.iter().filter(|&&r| r == Relation::Forward).count();
    let backwards = around.iter().filter(|&&r| r == Relation::Backward).count();
    let cyclic = (forwards >= 2 && backwards == 0) || (backwards >= 2 && forwards == 0);
    Ok(if cyclic {
        TripleKind::Intransitive
    } else {
        TripleKind::Transitive
    })
}

/// True iff every induced triple is transitive.
pub fn is_transitive_oriented_graph(g: &OrientedGraph) -> bool {
    let n = g.vertex_count();
    for u in 1..=n {
        for v in (u + 1)..=n {
            for w in (v + 1)..=n {
                if classify_triple(g, u, v, w) == Ok(TripleKind::Intransitive) {
                    return false;
                }
            }
        }
    }
    true
}

/// Counts of (transitive, intransitive) induced triples.
pub fn triple_census(g: &OrientedGraph) -> (usize, usize) {
    let n = g.vertex_count();
    let mut transitive = 0;
    let mut intransitive = 0;
    for u in 1..=n {
        for v in (u + 1)..=n {
            for w in (v + 1)..=n {
                match classify_triple(g, u, v, w).unwrap() {
                    TripleKind::Transitive => transitive += 1,
                    TripleKind::Intransitive => intransitive += 1,
                }
            }
        }
    }
    (transitive, intransitive)
}

/// The Lemma-1 witness. King side: for u not a weak king, a vertex v with
/// v→u, v not a weak serf, and the arc vu in no intransitive triple. Serf
/// side is the dual. The L1 claim asserts such a witness always exists, so
/// `None` from a valid input is a counterexample, not an error.
pub fn lemma1_witness(
    g: &OrientedGraph,
    u: usize,
    side: Side,
) -> Result<Option<usize>, DominanceError> {
    check(g, u)?;
    match side {
        Side::King => {
            if weak_king_mask(g) >> (u - 1) & 1 == 1 {
                return Err(DominanceError::PreconditionViolated { vertex: u, side });
            }
            let ws = weak_serf_mask(g);
            Ok(find_lemma1_vertex(g, u, ws, Relation::Backward))
        }
        Side::Serf => {
            if weak_serf_mask(g) >> (u - 1) & 1 == 1 {
                return Err(DominanceError::PreconditionViolated { vertex: u, side });
            }
            let wk = weak_king_mask(g);
            Ok(find_lemma1_vertex(g, u, wk, Relation::Forward))
        }
    }
}

/// Scan candidates ascending: `rel_from_u` is the required relation(u, cand)
/// (Backward on the king side: cand→u), `excluded` the weak set the
/// candidate must avoid.
fn find_lemma1_vertex(
    g: &OrientedGraph,
    u: usize,
    excluded: u64,
    rel_from_u: Relation,
) -> Option<usize> {
    let n = g.vertex_count();
    'candidate: for cand in 1..=n {
        if cand == u
            || g.relation(u, cand) != rel_from_u
            || excluded >> (cand - 1) & 1 == 1
        {
            continue;
        }
        for x in 1..=n {
            if x == u || x == cand {
                continue;
            }
            if classify_triple(g, u, cand, x) == Ok(TripleKind::Intransitive) {
                continue 'candidate;
            }
        }
        return Some(cand);
    }
    None
}
