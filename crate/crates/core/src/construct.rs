//! Generators for oriented graphs with prescribed weak-king / weak-serf
//! structure. Every generator runs the dominance checker on its output and
//! records the outcome in [`CertifiedGraph::verified`]; nothing is returned
//! on faith.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::dominance::DominanceReport;
use crate::enumerate::{self, EnumerateError};
use crate::graph::{GraphError, OrientedGraph, Relation};

/// A target 4-tuple: n vertices, exactly k weak kings, s weak serfs, and b
/// vertices that are both.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct NksbSpec {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub b: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum NksbMode {
    /// Build the fixed two-block-plus-ties construction verbatim and
    /// certify it; `verified` may come back false.
    Verbatim,
    /// Exhaustively search the labeled n-vertex graphs for any graph whose
    /// dominance report matches the spec.
    CertifiedSearch,
}

/// Which vertices v1 gets arcs to in the two-kings construction. The
/// ambiguous index list "2, 4, ..., n" supports both readings.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub enum TwoKingsReading {
    /// i in {2} ∪ {4..n}: every index except 1 and 3.
    #[default]
    SkipThree,
    /// Even indices only.
    EvenOnly,
}

/// What a generator promises about its output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClaimedOutcome {
    WeakKingCount(usize),
    KingSet(Vec<usize>),
    WeakKingSet(Vec<usize>),
    Nksb { k: usize, s: usize, b: usize },
}

impl fmt::Display for ClaimedOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn set(f: &mut fmt::Formatter<'_>, vs: &[usize]) -> fmt::Result {
            write!(f, "{{")?;
            for (i, v) in vs.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "}}")
        }
        match self {
            ClaimedOutcome::WeakKingCount(k) => write!(f, "exactly {k} weak kings"),
            ClaimedOutcome::KingSet(v) => {
                write!(f, "kings exactly ")?;
                set(f, v)
            }
            ClaimedOutcome::WeakKingSet(v) => {
                write!(f, "weak kings exactly ")?;
                set(f, v)
            }
            ClaimedOutcome::Nksb { k, s, b } => {
                write!(f, "(k, s, b) = ({k}, {s}, {b})")
            }
        }
    }
}

/// A generator output: the graph, its full dominance report, the claimed
/// property, whether the report matches the claim, and presentation labels
/// for the construction blocks (x, y, u_i, ...).
#[derive(Clone, Debug)]
pub struct CertifiedGraph {
    pub graph: OrientedGraph,
    pub report: DominanceReport,
    pub claimed: ClaimedOutcome,
    pub verified: bool,
    pub labels: Vec<(usize, String)>,
}

impl CertifiedGraph {
    fn certify(
        graph: OrientedGraph,
        claimed: ClaimedOutcome,
        labels: Vec<(usize, String)>,
    ) -> CertifiedGraph {
        let report = DominanceReport::compute(&graph);
        let verified = match &claimed {
            ClaimedOutcome::WeakKingCount(k) => report.k == *k,
            ClaimedOutcome::KingSet(v) => &report.kings == v,
            ClaimedOutcome::WeakKingSet(v) => &report.weak_kings == v,
            ClaimedOutcome::Nksb { k, s, b } => report.ksb() == (*k, *s, *b),
        };
        CertifiedGraph {
            graph,
            report,
            claimed,
            verified,
            labels,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructError {
    BadParams { reason: String },
    /// Verbatim mode outside the regime the verbatim construction covers.
    UnsupportedSpec { reason: String },
    /// Certification of a construction that is supposed to be sound failed;
    /// signals an implementation bug.
    ConstructionInvalid { detail: String },
    /// Certified search exhausted the space without a witness.
    NotFound,
    TransmitterPresent { vertex: usize },
    TooSmall { n: usize },
    Graph(GraphError),
    Enumerate(EnumerateError),
}

impl fmt::Display for ConstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructError::BadParams { reason } => write!(f, "bad parameters: {reason}"),
            ConstructError::UnsupportedSpec { reason } => {
                write!(f, "spec outside the verbatim construction's regime: {reason}")
            }
            ConstructError::ConstructionInvalid { detail } => {
                write!(f, "construction failed certification: {detail}")
            }
            ConstructError::NotFound => write!(f, "search exhausted: no witness exists"),
            ConstructError::TransmitterPresent { vertex } => {
                write!(f, "input graph has a transmitter (vertex {vertex})")
            }
            ConstructError::TooSmall { n } => {
                write!(f, "construction needs at least 3 vertices (got {n})")
            }
            ConstructError::Graph(e) => write!(f, "{e}"),
            ConstructError::Enumerate(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ConstructError {}

impl From<GraphError> for ConstructError {
    fn from(e: GraphError) -> Self {
        ConstructError::Graph(e)
    }
}

impl From<EnumerateError> for ConstructError {
    fn from(e: EnumerateError) -> Self {
        ConstructError::Enumerate(e)
    }
}

fn label_block(labels: &mut Vec<(usize, String)>, start: usize, count: usize, stem: &str) {
    for i in 0..count {
        labels.push((start + i, format!("{stem}{}", i + 1)));
    }
}

/// An n-vertex oriented graph with exactly k weak kings, 1 <= k <= n.
///
/// Layout: x = 1, y = 2, u_i = 2 + i. The k = n base graph ties x with y,
/// has every u_i beat x and lose to y, and ties all u-pairs. For
/// 3 <= k <= n-1 the base graph additionally gets arcs u_{n-2}→u_i for
/// k-2 <= i <= n-3, knocking those u_i out of weak kingship. k = 2 has x
/// and y beat every u_i instead; k = 1 makes u_1 dominant over everything.
pub fn weak_kings_exact(n: usize, k: usize) -> Result<CertifiedGraph, ConstructError> {
    if k < 1 || k > n {
        return Err(ConstructError::BadParams {
            reason: format!("need 1 <= k <= n, got n={n}, k={k}"),
        });
    }
    if n > crate::graph::MAX_VERTICES {
        return Err(ConstructError::BadParams {
            reason: format!("n={n} exceeds the vertex ceiling"),
        });
    }

    let mut labels = Vec::new();
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    if n == 1 {
        labels.push((1, String::from("x")));
    } else if n == 2 && k == 1 {
        labels.push((1, String::from("x")));
        labels.push((2, String::from("y")));
        arcs.push((1, 2));
    } else {
        let x = 1;
        let y = 2;
        let u = |i: usize| 2 + i; // u_1 .. u_{n-2}
        labels.push((x, String::from("x")));
        labels.push((y, String::from("y")));
        label_block(&mut labels, 3, n - 2, "u");
        match k {
            1 => {
                // u_1 dominant; x and y beat the remaining u_i.
                arcs.push((u(1), x));
                arcs.push((u(1), y));
                for i in 2..=(n - 2) {
                    arcs.push((u(1), u(i)));
                    arcs.push((x, u(i)));
                    arcs.push((y, u(i)));
                }
            }
            2 => {
                for i in 1..=(n - 2) {
                    arcs.push((x, u(i)));
                    arcs.push((y, u(i)));
                }
            }
            _ => {
                for i in 1..=(n - 2) {
                    arcs.push((u(i), x));
                    arcs.push((y, u(i)));
                }
                if k < n {
                    // Step-down arcs kill weak kingship of u_{k-2}..u_{n-3}.
                    for i in (k - 2)..=(n - 3) {
                        arcs.push((u(n - 2), u(i)));
                    }
                }
            }
        }
    }

    let graph = OrientedGraph::build(n, &arcs)?;
    let certified = CertifiedGraph::certify(graph, ClaimedOutcome::WeakKingCount(k), labels);
    if certified.verified {
        Ok(certified)
    } else {
        Err(ConstructError::ConstructionInvalid {
            detail: format!(
                "weak_kings_exact({n}, {k}) produced {} weak kings",
                certified.report.k
            ),
        })
    }
}

/// The "exactly two kings" construction: v1 beats the index set
/// given by `reading`, v3 beats v1, v2 beats v3 and every v_i with i >= 4;
/// all other pairs tied. The claim "kings = {v1, v3}" is certified, not
/// assumed; the checker's verdict lands in `verified`.
pub fn two_kings_oriented(
    n: usize,
    reading: TwoKingsReading,
) -> Result<CertifiedGraph, ConstructError> {
    if n < 4 {
        return Err(ConstructError::BadParams {
            reason: format!("construction references v4, need n >= 4 (got {n})"),
        });
    }
    if n > crate::graph::MAX_VERTICES {
        return Err(ConstructError::BadParams {
            reason: format!("n={n} exceeds the vertex ceiling"),
        });
    }
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    match reading {
        TwoKingsReading::SkipThree => {
            arcs.push((1, 2));
            for i in 4..=n {
                arcs.push((1, i));
            }
        }
        TwoKingsReading::EvenOnly => {
            for i in (2..=n).step_by(2) {
                arcs.push((1, i));
            }
        }
    }
    arcs.push((3, 1));
    arcs.push((2, 3));
    for i in 4..=n {
        arcs.push((2, i));
    }
    let mut labels = Vec::new();
    label_block(&mut labels, 1, n, "v");
    let graph = OrientedGraph::build(n, &arcs)?;
    Ok(CertifiedGraph::certify(
        graph,
        ClaimedOutcome::KingSet([1, 3].to_vec()),
        labels,
    ))
}

/// An (n, k, s, b)-oriented graph, either by the fixed three-block
/// construction (`Verbatim`) or by exhaustive search (`CertifiedSearch`).
pub fn nksb_oriented(spec: NksbSpec, mode: NksbMode) -> Result<CertifiedGraph, ConstructError> {
    match mode {
        NksbMode::Verbatim => nksb_verbatim(spec),
        NksbMode::CertifiedSearch => nksb_certified_search(spec),
    }
}

/// The verbatim three-block construction: block D1 = {x1, y1,
/// u_1..u_{k-b-2}} with the base weak-king pattern, D2 = {x2, y2,
/// v_1..v_{b-2}} likewise (omitted when b = 0), D3 = s-b mutually tied z's,
/// plus fixed cross-arc families; every unlisted cross pair is a tie.
/// Certification against (k, s, b) is authoritative and `verified` is false
/// where the construction leaks extra weak kings or serfs.
fn nksb_verbatim(spec: NksbSpec) -> Result<CertifiedGraph, ConstructError> {
    let NksbSpec { n, k, s, b } = spec;
    if !(n >= 1 && k >= s && s > b) {
        return Err(ConstructError::BadParams {
            reason: format!("need n >= k >= s > b >= 0, got ({n}, {k}, {s}, {b})"),
        });
    }
    if k > n || n < k + s - b {
        return Err(ConstructError::BadParams {
            reason: format!("need n >= k and n >= k+s-b, got ({n}, {k}, {s}, {b})"),
        });
    }
    if k < b + 2 {
        return Err(ConstructError::UnsupportedSpec {
            reason: format!("verbatim construction needs k - b >= 2, got k={k}, b={b}"),
        });
    }
    if b == 1 {
        return Err(ConstructError::UnsupportedSpec {
            reason: String::from("verbatim construction has no b = 1 form (D2 needs x2 and y2)"),
        });
    }
    if n != k + s - b {
        return Err(ConstructError::UnsupportedSpec {
            reason: format!(
                "verbatim construction has exactly k+s-b = {} vertices, got n={n}",
                k + s - b
            ),
        });
    }

    let nu = k - b - 2; // u_1..u_nu
    let x1 = 1;
    let y1 = 2;
    let u = |i: usize| 2 + i;
    let mut labels = Vec::new();
    labels.push((x1, String::from("x1")));
    labels.push((y1, String::from("y1")));
    label_block(&mut labels, 3, nu, "u");

    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for i in 1..=nu {
        arcs.push((u(i), x1));
        arcs.push((y1, u(i)));
    }

    let mut next = 2 + nu + 1;
    let (x2, y2, v) = if b >= 2 {
        let x2 = next;
        let y2 = next + 1;
        let v0 = next + 1; // v_j = v0 + j
        labels.push((x2, String::from("x2")));
        labels.push((y2, String::from("y2")));
        label_block(&mut labels, y2 + 1, b - 2, "v");
        next += b;
        (Some(x2), Some(y2), Some(v0))
    } else {
        (None, None, None)
    };
    let z0 = next - 1; // z_i = z0 + i
    label_block(&mut labels, next, s - b, "z");

    if let (Some(x2), Some(y2), Some(v0)) = (x2, y2, v) {
        // D2 internal arcs.
        for j in 1..=(b - 2) {
            arcs.push((v0 + j, x2));
            arcs.push((y2, v0 + j));
        }
        // Cross arcs into D2.
        for i in 1..=(s - b) {
            arcs.push((z0 + i, y2));
        }
        arcs.push((x1, y2));
        arcs.push((y1, y2));
        for r in 1..=nu {
            arcs.push((u(r), y2));
        }
    }
    for i in 1..=(s - b) {
        arcs.push((x1, z0 + i));
        arcs.push((y1, z0 + i));
    }

    let graph = OrientedGraph::build(n, &arcs)?;
    Ok(CertifiedGraph::certify(
        graph,
        ClaimedOutcome::Nksb { k, s, b },
        labels,
    ))
}

/// Exhaustive search over all labeled n-vertex oriented graphs for one whose
/// dominance report is exactly (k, s, b). Unlike verbatim mode this accepts
/// any triple with k, s <= n and b <= min(k, s), including s = b and s > k.
fn nksb_certified_search(spec: NksbSpec) -> Result<CertifiedGraph, ConstructError> {
    let NksbSpec { n, k, s, b } = spec;
    if n < 1 || k > n || s > n || b > k.min(s) {
        return Err(ConstructError::BadParams {
            reason: format!("need k, s <= n and b <= min(k, s), got ({n}, {k}, {s}, {b})"),
        });
    }
    let mut found: Option<OrientedGraph> = None;
    enumerate::scan_all(n, |_, g| {
        if found.is_none() && crate::dominance::DominanceReport::compute(g).ksb() == (k, s, b) {
            found = Some(g.clone());
        }
        found.is_none()
    })?;
    match found {
        Some(graph) => Ok(CertifiedGraph::certify(
            graph,
            ClaimedOutcome::Nksb { k, s, b },
            Vec::new(),
        )),
        None => Err(ConstructError::NotFound),
    }
}

/// Embed a transmitter-free oriented graph d on n >= 3 vertices into a
/// 2n-vertex graph whose weak kings are exactly the original vertices:
/// vertices 1..n induce d, vertices n+1..2n an isomorphic copy, each
/// original beats every copy except its own twin, and each twin beats its
/// original.
pub fn all_weak_kings_embedding(d: &OrientedGraph) -> Result<CertifiedGraph, ConstructError> {
    let n = d.vertex_count();
    if n < 3 {
        return Err(ConstructError::TooSmall { n });
    }
    if let Some(&t) = d.transmitters().first() {
        return Err(ConstructError::TransmitterPresent { vertex: t });
    }
    if 2 * n > crate::graph::MAX_VERTICES {
        return Err(ConstructError::BadParams {
            reason: format!("2n = {} exceeds the vertex ceiling", 2 * n),
        });
    }

    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i < j && d.relation(i, j) == Relation::Forward {
                arcs.push((i, j));
                arcs.push((n + i, n + j));
            } else if i < j && d.relation(i, j) == Relation::Backward {
                arcs.push((j, i));
                arcs.push((n + j, n + i));
            }
            if i != j {
                arcs.push((i, n + j));
            }
        }
        arcs.push((n + i, i));
    }

    let mut labels = Vec::new();
    label_block(&mut labels, 1, n, "u");
    label_block(&mut labels, n + 1, n, "v");
    let graph = OrientedGraph::build(2 * n, &arcs)?;
    Ok(CertifiedGraph::certify(
        graph,
        ClaimedOutcome::WeakKingSet((1..=n).collect()),
        labels,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dominance;
    use crate::fixtures::{c3, tt3};

    #[test]
    fn weak_kings_exact_small() {
        let g = weak_kings_exact(4, 4).unwrap();
        assert!(g.verified);
        assert_eq!(g.report.weak_kings, vec![1, 2, 3, 4]);
        assert_eq!(g.report.weak_serfs.len(), 4);

        let g = weak_kings_exact(1, 1).unwrap();
        assert!(g.verified);
        assert_eq!(g.report.weak_kings, vec![1]);
    }

    #[test]
    fn weak_kings_exact_documented_sets() {
        // 6 vertices, 5 weak kings x, y, u1, u2, u4.
        let g = weak_kings_exact(6, 5).unwrap();
        assert_eq!(g.report.weak_kings, vec![1, 2, 3, 4, 6]);
        // 6 vertices, 3 weak kings x, y, u4.
        let g = weak_kings_exact(6, 3).unwrap();
        assert_eq!(g.report.weak_kings, vec![1, 2, 6]);
    }

    #[test]
    fn weak_kings_exact_full_range() {
        for n in 1..=8 {
            for k in 1..=n {
                let g = weak_kings_exact(n, k).unwrap();
                assert!(g.verified, "({n}, {k})");
                assert_eq!(g.report.k, k, "({n}, {k})");
            }
        }
    }

    #[test]
    fn weak_kings_exact_bad_params() {
        assert!(matches!(
            weak_kings_exact(3, 4),
            Err(ConstructError::BadParams { .. })
        ));
        assert!(matches!(
            weak_kings_exact(3, 0),
            Err(ConstructError::BadParams { .. })
        ));
    }

    #[test]
    fn lemma1_witness_in_step_down_graph() {
        // In weak_kings_exact(6, 5), u3 (= vertex 5) is the non-weak-king;
        // its Lemma-1 witness is u4 (= vertex 6).
        let g = weak_kings_exact(6, 5).unwrap();
        assert_eq!(
            dominance::lemma1_witness(&g.graph, 5, dominance::Side::King),
            Ok(Some(6))
        );
    }

    #[test]
    fn two_kings_construction_is_checked_not_trusted() {
        let g = two_kings_oriented(4, TwoKingsReading::SkipThree).unwrap();
        // v1 and v3 are kings as claimed...
        assert!(g.report.kings.contains(&1));
        assert!(g.report.kings.contains(&3));
        // ...but v2 sneaks in through v2→v3→v1, so certification fails.
        assert_eq!(g.report.kings, vec![1, 2, 3]);
        assert!(!g.verified);

        assert!(matches!(
            two_kings_oriented(3, TwoKingsReading::SkipThree),
            Err(ConstructError::BadParams { .. })
        ));
    }

    #[test]
    fn two_kings_readings_are_deterministic() {
        for n in 4..=7 {
            for reading in [TwoKingsReading::SkipThree, TwoKingsReading::EvenOnly] {
                let a = two_kings_oriented(n, reading).unwrap();
                let b = two_kings_oriented(n, reading).unwrap();
                assert_eq!(a.graph, b.graph);
                assert_eq!(a.report, b.report);
            }
            // Under the skip-three reading v1 and v3 really are kings; the
            // even-only reading loses v3 for odd n (v1's out-set misses v5).
            let a = two_kings_oriented(n, TwoKingsReading::SkipThree).unwrap();
            assert!(a.report.kings.contains(&1));
            assert!(a.report.kings.contains(&3));
        }
    }

    #[test]
    fn nksb_verbatim_b2_leaks_weak_kings() {
        // Hand analysis: with b = 2, y2 has no out-arcs or useful ties, so
        // it fails weak kingship and certification records the miss.
        let g = nksb_oriented(
            NksbSpec { n: 5, k: 4, s: 3, b: 2 },
            NksbMode::Verbatim,
        )
        .unwrap();
        assert!(!g.verified);
        assert_eq!(g.report.ksb(), (3, 2, 1));

        let g = nksb_oriented(
            NksbSpec { n: 8, k: 6, s: 4, b: 2 },
            NksbMode::Verbatim,
        )
        .unwrap();
        assert!(!g.verified);
    }

    #[test]
    fn nksb_verbatim_regime_checks() {
        assert!(matches!(
            nksb_oriented(NksbSpec { n: 5, k: 4, s: 4, b: 4 }, NksbMode::Verbatim),
            Err(ConstructError::BadParams { .. })
        ));
        assert!(matches!(
            nksb_oriented(NksbSpec { n: 6, k: 4, s: 3, b: 1 }, NksbMode::Verbatim),
            Err(ConstructError::UnsupportedSpec { .. })
        ));
        assert!(matches!(
            nksb_oriented(NksbSpec { n: 9, k: 6, s: 4, b: 2 }, NksbMode::Verbatim),
            Err(ConstructError::UnsupportedSpec { .. })
        ));
    }

    #[test]
    fn nksb_search_finds_and_refutes() {
        let g = nksb_oriented(NksbSpec { n: 4, k: 3, s: 2, b: 1 }, NksbMode::CertifiedSearch);
        if let Ok(g) = g {
            assert!(g.verified);
            assert_eq!(g.report.ksb(), (3, 2, 1));
        }
        // No (n, k, s, s) graph has n > k and s > 0, so the search exhausts.
        assert_eq!(
            nksb_oriented(NksbSpec { n: 5, k: 4, s: 4, b: 4 }, NksbMode::CertifiedSearch)
                .unwrap_err(),
            ConstructError::NotFound
        );
    }

    #[test]
    fn embedding_c3() {
        let g = all_weak_kings_embedding(&c3()).unwrap();
        assert!(g.verified);
        assert_eq!(g.report.weak_kings, vec![1, 2, 3]);
        assert_eq!(g.graph.vertex_count(), 6);
        // The induced subgraph on the originals is d itself.
        assert_eq!(g.graph.induced(&[1, 2, 3]).unwrap(), c3());
        assert_eq!(g.graph.induced(&[4, 5, 6]).unwrap(), c3());
    }

    #[test]
    fn embedding_rejects_transmitters_and_tiny_inputs() {
        assert_eq!(
            all_weak_kings_embedding(&tt3()).unwrap_err(),
            ConstructError::TransmitterPresent { vertex: 1 }
        );
        let two = OrientedGraph::build(2, &[]).unwrap();
        assert_eq!(
            all_weak_kings_embedding(&two).unwrap_err(),
            ConstructError::TooSmall { n: 2 }
        );
    }
}
