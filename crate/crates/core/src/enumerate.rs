//! Exhaustive enumeration of all labeled oriented graphs on n vertices,
//! claim verification, and (k, s, b) realizability tables.
//!
//! Each unordered pair {i, j}, i < j, taken in lexicographic order, carries
//! one trit: 0 tie, 1 arc i→j, 2 arc j→i. The base-3 integer over the C(n,2)
//! trits is a bijection between codes and labeled n-vertex oriented graphs.
//! Enumeration is labeled, not isomorphism-reduced; the code space is split
//! into contiguous ranges for parallel workers and partial results merge
//! associatively in range order.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;
use core::time::Duration;

use crate::dominance::{self, DominanceReport};
use crate::graph::OrientedGraph;

/// Full-enumeration ceiling: 3^15 ≈ 14.3M codes at n = 6.
pub const MAX_ENUM_VERTICES: usize = 6;
/// Tournament-only enumeration ceiling: 2^21 ≈ 2.1M tournaments at n = 7.
pub const MAX_TOURNAMENT_VERTICES: usize = 7;
/// Largest n whose code space fits in a u128 (3^78 < 2^128).
pub const MAX_CODE_VERTICES: usize = 13;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnumerateError {
    TooLarge { n: usize, max: usize },
    CodeOutOfRange { n: usize, code: u128 },
    UnknownClaim { id: String },
    BadParams { reason: String },
}

impl fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerateError::TooLarge { n, max } => {
                write!(f, "n={n} exceeds the enumeration ceiling {max}")
            }
            EnumerateError::CodeOutOfRange { n, code } => {
                write!(f, "code {code} out of range for n={n}")
            }
            EnumerateError::UnknownClaim { id } => write!(f, "unknown claim id {id:?}"),
            EnumerateError::BadParams { reason } => write!(f, "bad parameters: {reason}"),
        }
    }
}

impl core::error::Error for EnumerateError {}

/// Base-3 integer encoding of an n-vertex oriented graph.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphCode {
    pub n: usize,
    pub code: u128,
}

pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// 3^C(n,2), the number of labeled n-vertex oriented graphs.
pub fn code_space(n: usize) -> Result<u128, EnumerateError> {
    if n < 1 || n > MAX_CODE_VERTICES {
        return Err(EnumerateError::TooLarge {
            n,
            max: MAX_CODE_VERTICES,
        });
    }
    Ok(3u128.pow(pair_count(n) as u32))
}

/// The pairs (i, j), i < j, 0-based, in code order.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut ps = Vec::with_capacity(pair_count(n));
    for i in 0..n {
        for j in (i + 1)..n {
            ps.push((i, j));
        }
    }
    ps
}

fn graph_from_trits(n: usize, pairs: &[(usize, usize)], trits: &[u8]) -> OrientedGraph {
    let mut out = vec![0u64; n];
    let mut tie = vec![0u64; n];
    for (p, &(i, j)) in pairs.iter().enumerate() {
        match trits[p] {
            0 => {
                tie[i] |= 1 << j;
                tie[j] |= 1 << i;
            }
            1 => out[i] |= 1 << j,
            _ => out[j] |= 1 << i,
        }
    }
    OrientedGraph::from_rows(n, out, tie)
}

pub fn encode(g: &OrientedGraph) -> Result<GraphCode, EnumerateError> {
    let n = g.vertex_count();
    code_space(n)?; // range check
    let mut code = 0u128;
    let mut weight = 1u128;
    for (i, j) in pairs(n) {
        let trit = match g.relation(i + 1, j + 1) {
            crate::graph::Relation::Tie => 0u128,
            crate::graph::Relation::Forward => 1,
            crate::graph::Relation::Backward => 2,
        };
        code += trit * weight;
        weight *= 3;
    }
    Ok(GraphCode { n, code })
}

pub fn decode(c: &GraphCode) -> Result<OrientedGraph, EnumerateError> {
    let space = code_space(c.n)?;
    if c.code >= space {
        return Err(EnumerateError::CodeOutOfRange {
            n: c.n,
            code: c.code,
        });
    }
    let ps = pairs(c.n);
    let mut trits = vec![0u8; ps.len()];
    let mut rest = c.code;
    for t in trits.iter_mut() {
        *t = (rest % 3) as u8;
        rest /= 3;
    }
    Ok(graph_from_trits(c.n, &ps, &trits))
}

/// Visit every code in `range` (clamped to the code space) in ascending
/// order. The visitor returns false to stop early. Returns the number of
/// graphs visited.
pub fn scan_codes(
    n: usize,
    range: Range<u128>,
    mut visitor: impl FnMut(u128, &OrientedGraph) -> bool,
) -> Result<u64, EnumerateError> {
    if n > MAX_ENUM_VERTICES {
        return Err(EnumerateError::TooLarge {
            n,
            max: MAX_ENUM_VERTICES,
        });
    }
    let space = code_space(n)?;
    let start = range.start.min(space);
    let end = range.end.min(space);
    let ps = pairs(n);
    // Trit odometer seeded from the range start; incrementing it beats
    // re-dividing the code on every step.
    let mut trits = vec![0u8; ps.len()];
    let mut rest = start;
    for t in trits.iter_mut() {
        *t = (rest % 3) as u8;
        rest /= 3;
    }
    let mut visited = 0u64;
    let mut code = start;
    while code < end {
        let g = graph_from_trits(n, &ps, &trits);
        visited += 1;
        if !visitor(code, &g) {
            break;
        }
        code += 1;
        for t in trits.iter_mut() {
            if *t < 2 {
                *t += 1;
                break;
            }
            *t = 0;
        }
    }
    Ok(visited)
}

/// Visit every labeled n-vertex oriented graph.
pub fn scan_all(
    n: usize,
    visitor: impl FnMut(u128, &OrientedGraph) -> bool,
) -> Result<u64, EnumerateError> {
    scan_codes(n, 0..code_space(n)?, visitor)
}

pub fn tournament_space(n: usize) -> Result<u64, EnumerateError> {
    if n < 1 || n > MAX_TOURNAMENT_VERTICES {
        return Err(EnumerateError::TooLarge {
            n,
            max: MAX_TOURNAMENT_VERTICES,
        });
    }
    Ok(1u64 << pair_count(n))
}

/// Visit every labeled n-tournament; `index` ranges over the 2^C(n,2)
/// tie-free orientations, and the graph's base-3 [`GraphCode`] is
/// recoverable via [`encode`].
pub fn scan_tournaments(
    n: usize,
    range: Range<u64>,
    mut visitor: impl FnMut(u64, &OrientedGraph) -> bool,
) -> Result<u64, EnumerateError> {
    let space = tournament_space(n)?;
    let start = range.start.min(space);
    let end = range.end.min(space);
    let ps = pairs(n);
    let mut trits = vec![0u8; ps.len()];
    let mut visited = 0u64;
    for index in start..end {
        for (p, t) in trits.iter_mut().enumerate() {
            *t = 1 + (index >> p & 1) as u8;
        }
        let g = graph_from_trits(n, &ps, &trits);
        visited += 1;
        if !visitor(index, &g) {
            break;
        }
    }
    Ok(visited)
}

// ---------------------------------------------------------------------------
// Claim verification
// ---------------------------------------------------------------------------

/// A verifiable claim about all (small) oriented graphs or tournaments.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Claim {
    /// T5: every maximum-score vertex is a weak king.
    MaxScoreWeakKing,
    /// T6: a transmitter-free oriented graph has at least three weak kings.
    TransmitterFreeThreeWeakKings,
    /// T8: no oriented graph has n > k weak kings with a nonempty weak-serf
    /// set entirely contained in the weak kings (s = b > 0).
    NoProperKssGraph,
    /// L1: every non-weak-king has a dominating witness whose arc lies in no
    /// intransitive triple (dually for non-weak-serfs).
    DominatedVertexWitness,
    /// MOON: no tournament has exactly two kings.
    NoTwoKingTournament,
    /// K4: no 4-vertex oriented graph has exactly 4 kings.
    NoFourKingFourVertex,
    /// T1EX: an n-tournament with exactly k kings exists for every k <= n
    /// except k = 2 and (n, k) = (4, 4).
    TournamentKingCounts,
    /// DUAL: weak serfs of g are the weak kings of the converse, and serfs
    /// of g the kings of the converse.
    ConverseDuality,
}

pub const ALL_CLAIMS: [Claim; 8] = [
    Claim::MaxScoreWeakKing,
    Claim::TransmitterFreeThreeWeakKings,
    Claim::NoProperKssGraph,
    Claim::DominatedVertexWitness,
    Claim::NoTwoKingTournament,
    Claim::NoFourKingFourVertex,
    Claim::TournamentKingCounts,
    Claim::ConverseDuality,
];

impl Claim {
    pub fn id(&self) -> &'static str {
        match self {
            Claim::MaxScoreWeakKing => "T5",
            Claim::TransmitterFreeThreeWeakKings => "T6",
            Claim::NoProperKssGraph => "T8",
            Claim::DominatedVertexWitness => "L1",
            Claim::NoTwoKingTournament => "MOON",
            Claim::NoFourKingFourVertex => "K4",
            Claim::TournamentKingCounts => "T1EX",
            Claim::ConverseDuality => "DUAL",
        }
    }

    pub fn description(&self) -> &'static str {
        match self {
            Claim::MaxScoreWeakKing => "every maximum-score vertex is a weak king",
            Claim::TransmitterFreeThreeWeakKings => {
                "a transmitter-free oriented graph has at least 3 weak kings"
            }
            Claim::NoProperKssGraph => {
                "no oriented graph has n > k weak kings and weak serfs = weak king-serfs > 0"
            }
            Claim::DominatedVertexWitness => {
                "every non-weak-king (non-weak-serf) has a witness arc in no intransitive triple"
            }
            Claim::NoTwoKingTournament => "no tournament has exactly two kings",
            Claim::NoFourKingFourVertex => "no 4-vertex oriented graph has exactly 4 kings",
            Claim::TournamentKingCounts => {
                "n-tournaments with exactly k kings exist except k = 2 and (n, k) = (4, 4)"
            }
            Claim::ConverseDuality => "weak serfs (serfs) are the weak kings (kings) of the converse",
        }
    }

    pub fn parse(id: &str) -> Result<Claim, EnumerateError> {
        let up = id.to_ascii_uppercase();
        ALL_CLAIMS
            .iter()
            .copied()
            .find(|c| c.id() == up)
            .ok_or(EnumerateError::UnknownClaim { id: String::from(id) })
    }

    /// MOON and T1EX range over tournaments only.
    pub fn tournaments_only(&self) -> bool {
        matches!(
            self,
            Claim::NoTwoKingTournament | Claim::TournamentKingCounts
        )
    }

    /// K4 fixes n = 4 regardless of the requested maximum.
    pub fn fixed_n(&self) -> Option<usize> {
        match self {
            Claim::NoFourKingFourVertex => Some(4),
            _ => None,
        }
    }

    pub fn enumeration_ceiling(&self) -> usize {
        if self.tournaments_only() {
            MAX_TOURNAMENT_VERTICES
        } else {
            MAX_ENUM_VERTICES
        }
    }
}

/// A violating graph with a human-readable diagnostic. `code` is absent for
/// non-existence counterexamples (a witness that should exist but does not).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub code: Option<GraphCode>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim: Claim,
    pub n_max: usize,
    pub scanned: u64,
    /// Capped at the scan option's maximum; `total_counterexamples` is exact.
    pub counterexamples: Vec<Counterexample>,
    pub total_counterexamples: u64,
    pub notes: Vec<String>,
    /// Wall time, filled in by the caller that timed the scan.
    pub elapsed: Option<Duration>,
}

impl VerificationReport {
    pub fn certified(&self) -> bool {
        self.total_counterexamples == 0
    }
}

#[derive(Copy, Clone, Debug)]
pub struct ScanOptions {
    pub max_counterexamples: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            max_counterexamples: 100,
        }
    }
}

/// Partial result of scanning one code range at one n. Partials for the
/// same n merge associatively; merge them in range order for deterministic
/// counterexample lists.
#[derive(Clone, Debug, Default)]
pub struct ClaimScan {
    pub scanned: u64,
    pub counterexamples: Vec<Counterexample>,
    pub total_counterexamples: u64,
    /// T1EX: first tournament seen with exactly k kings, indexed by k.
    pub king_count_witnesses: Vec<Option<GraphCode>>,
    /// K4: largest king count seen.
    pub max_kings_seen: usize,
    /// T8 side report: graphs with an empty weak-serf set (expected none).
    pub zero_weak_serf_graphs: u64,
}

impl ClaimScan {
    fn new(n: usize) -> ClaimScan {
        ClaimScan {
            king_count_witnesses: vec![None; n + 1],
            ..ClaimScan::default()
        }
    }

    fn push(&mut self, cap: usize, code: Option<GraphCode>, detail: String) {
        self.total_counterexamples += 1;
        if self.counterexamples.len() < cap {
            self.counterexamples.push(Counterexample { code, detail });
        }
    }
}

/// Merge two partials of the same n, `a` covering the earlier range.
pub fn merge_scans(mut a: ClaimScan, b: ClaimScan, cap: usize) -> ClaimScan {
    a.scanned += b.scanned;
    a.total_counterexamples += b.total_counterexamples;
    for ce in b.counterexamples {
        if a.counterexamples.len() < cap {
            a.counterexamples.push(ce);
        }
    }
    if a.king_count_witnesses.len() < b.king_count_witnesses.len() {
        a.king_count_witnesses
            .resize(b.king_count_witnesses.len(), None);
    }
    for (k, w) in b.king_count_witnesses.into_iter().enumerate() {
        if a.king_count_witnesses[k].is_none() {
            a.king_count_witnesses[k] = w;
        }
    }
    a.max_kings_seen = a.max_kings_seen.max(b.max_kings_seen);
    a.zero_weak_serf_graphs += b.zero_weak_serf_graphs;
    a
}

fn vertex_set(vs: &[usize]) -> String {
    let mut s = String::from("{");
    for (i, v) in vs.iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        s.push_str(&format!("{v}"));
    }
    s.push('}');
    s
}

/// Scan one claim over the graphs of size exactly `n` whose codes (or, for
/// tournament claims, tournament indices) fall in `range`.
pub fn scan_claim(
    claim: Claim,
    n: usize,
    range: Range<u128>,
    options: ScanOptions,
) -> Result<ClaimScan, EnumerateError> {
    let cap = options.max_counterexamples;
    let mut scan = ClaimScan::new(n);
    if claim.tournaments_only() {
        let r = range.start.min(u64::MAX as u128) as u64..range.end.min(u64::MAX as u128) as u64;
        let visited = scan_tournaments(n, r, |_, g| {
            check_tournament_claim(claim, g, &mut scan, cap);
            true
        })?;
        scan.scanned = visited;
        return Ok(scan);
    }
    let visited = scan_codes(n, range, |code, g| {
        check_graph_claim(claim, GraphCode { n, code }, g, &mut scan, cap);
        true
    })?;
    scan.scanned = visited;
    Ok(scan)
}

fn check_tournament_claim(claim: Claim, g: &OrientedGraph, scan: &mut ClaimScan, cap: usize) {
    let kings = dominance::kings(g);
    let k = kings.len();
    let needs_witness = k < scan.king_count_witnesses.len() && scan.king_count_witnesses[k].is_none();
    let two_king_violation = claim == Claim::NoTwoKingTournament && k == 2;
    if !needs_witness && !two_king_violation {
        return;
    }
    let code = encode(g).expect("tournament within code range");
    if needs_witness {
        scan.king_count_witnesses[k] = Some(code);
    }
    if two_king_violation {
        scan.push(
            cap,
            Some(code),
            format!("tournament with exactly two kings {}", vertex_set(&kings)),
        );
    }
}

fn check_graph_claim(
    claim: Claim,
    code: GraphCode,
    g: &OrientedGraph,
    scan: &mut ClaimScan,
    cap: usize,
) {
    match claim {
        Claim::MaxScoreWeakKing => {
            let n = g.vertex_count();
            let scores: Vec<usize> = (1..=n).map(|v| g.score(v).unwrap()).collect();
            let max = *scores.iter().max().unwrap();
            let wk = dominance::weak_kings(g);
            for v in 1..=n {
                if scores[v - 1] == max && !wk.contains(&v) {
                    scan.push(
                        cap,
                        Some(code),
                        format!("maximum-score vertex {v} (score {max}) is not a weak king"),
                    );
                }
            }
        }
        Claim::TransmitterFreeThreeWeakKings => {
            if g.transmitters().is_empty() {
                let wk = dominance::weak_kings(g);
                if wk.len() < 3 {
                    scan.push(
                        cap,
                        Some(code),
                        format!(
                            "transmitter-free graph with only {} weak kings {}",
                            wk.len(),
                            vertex_set(&wk)
                        ),
                    );
                }
            }
        }
        Claim::NoProperKssGraph => {
            let report = DominanceReport::compute(g);
            let (k, s, b) = report.ksb();
            if s == 0 {
                scan.zero_weak_serf_graphs += 1;
            }
            if g.vertex_count() > k && s > 0 && s == b {
                scan.push(
                    cap,
                    Some(code),
                    format!("(n, k, s, b) = ({}, {k}, {s}, {b}) with n > k and s = b > 0", g.vertex_count()),
                );
            }
        }
        Claim::DominatedVertexWitness => {
            let wk = dominance::weak_kings(g);
            let ws = dominance::weak_serfs(g);
            for v in 1..=g.vertex_count() {
                if !wk.contains(&v)
                    && dominance::lemma1_witness(g, v, dominance::Side::King) == Ok(None)
                {
                    scan.push(
                        cap,
                        Some(code),
                        format!("non-weak-king {v} has no king-side witness"),
                    );
                }
                if !ws.contains(&v)
                    && dominance::lemma1_witness(g, v, dominance::Side::Serf) == Ok(None)
                {
                    scan.push(
                        cap,
                        Some(code),
                        format!("non-weak-serf {v} has no serf-side witness"),
                    );
                }
            }
        }
        Claim::NoFourKingFourVertex => {
            let kings = dominance::kings(g);
            scan.max_kings_seen = scan.max_kings_seen.max(kings.len());
            if kings.len() == 4 {
                scan.push(cap, Some(code), String::from("4-vertex graph with 4 kings"));
            }
        }
        Claim::ConverseDuality => {
            let conv = g.converse();
            if dominance::weak_serfs(g) != dominance::weak_kings(&conv) {
                scan.push(
                    cap,
                    Some(code),
                    String::from("weak serfs differ from weak kings of the converse"),
                );
            }
            if dominance::serfs(g) != dominance::kings(&conv) {
                scan.push(
                    cap,
                    Some(code),
                    String::from("serfs differ from kings of the converse"),
                );
            }
        }
        Claim::NoTwoKingTournament | Claim::TournamentKingCounts => unreachable!(),
    }
}

/// Combine per-n partials into a final report. `partials` must hold one
/// fully merged scan per n, ascending.
pub fn finalize_claim(
    claim: Claim,
    n_max: usize,
    partials: &[(usize, ClaimScan)],
    options: ScanOptions,
) -> VerificationReport {
    let cap = options.max_counterexamples;
    let mut report = VerificationReport {
        claim,
        n_max,
        scanned: 0,
        counterexamples: Vec::new(),
        total_counterexamples: 0,
        notes: Vec::new(),
        elapsed: None,
    };
    let mut max_kings = 0usize;
    let mut zero_serfs = 0u64;
    for (n, scan) in partials {
        report.scanned += scan.scanned;
        report.total_counterexamples += scan.total_counterexamples;
        for ce in &scan.counterexamples {
            if report.counterexamples.len() < cap {
                report.counterexamples.push(ce.clone());
            }
        }
        max_kings = max_kings.max(scan.max_kings_seen);
        zero_serfs += scan.zero_weak_serf_graphs;
        if claim == Claim::TournamentKingCounts {
            for k in 1..=*n {
                let exception = k == 2 || (*n == 4 && k == 4);
                match (&scan.king_count_witnesses[k], exception) {
                    (Some(code), true) => {
                        report.total_counterexamples += 1;
                        if report.counterexamples.len() < cap {
                            report.counterexamples.push(Counterexample {
                                code: Some(*code),
                                detail: format!(
                                    "{n}-tournament with exactly {k} kings should not exist"
                                ),
                            });
                        }
                    }
                    (None, false) => {
                        report.total_counterexamples += 1;
                        if report.counterexamples.len() < cap {
                            report.counterexamples.push(Counterexample {
                                code: None,
                                detail: format!(
                                    "no {n}-tournament with exactly {k} kings found"
                                ),
                            });
                        }
                    }
                    _ => {}
                }
            }
        }
    }
    if claim == Claim::NoFourKingFourVertex {
        report
            .notes
            .push(format!("maximum king count observed: {max_kings}"));
    }
    if claim == Claim::NoProperKssGraph {
        report.notes.push(format!(
            "graphs with zero weak serfs: {zero_serfs} (the s = 0 case is vacuous when this is 0)"
        ));
    }
    report
}

/// Sequentially verify a claim over all sizes up to `n_max` (or the claim's
/// fixed n). Parallel callers should drive [`scan_claim`] per range and
/// merge with [`merge_scans`] and [`finalize_claim`] instead.
pub fn verify_claim(
    claim: Claim,
    n_max: usize,
    options: ScanOptions,
) -> Result<VerificationReport, EnumerateError> {
    let ceiling = claim.enumeration_ceiling();
    if n_max > ceiling {
        return Err(EnumerateError::TooLarge { n: n_max, max: ceiling });
    }
    if n_max < 1 {
        return Err(EnumerateError::BadParams {
            reason: String::from("nmax must be at least 1"),
        });
    }
    let sizes: Vec<usize> = match claim.fixed_n() {
        Some(n) => vec![n],
        None => (1..=n_max).collect(),
    };
    let mut partials = Vec::new();
    for n in sizes {
        let scan = scan_claim(claim, n, 0..u128::MAX, options)?;
        partials.push((n, scan));
    }
    Ok(finalize_claim(claim, n_max, &partials, options))
}

// ---------------------------------------------------------------------------
// Realizability
// ---------------------------------------------------------------------------

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct RealizableTriple {
    pub k: usize,
    pub s: usize,
    pub b: usize,
    pub witness: GraphCode,
}

/// The exact set of (k, s, b) triples realized by at least one n-vertex
/// oriented graph, each with the least-code witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizabilityTable {
    pub n: usize,
    pub entries: Vec<RealizableTriple>,
}

impl RealizabilityTable {
    pub fn contains(&self, k: usize, s: usize, b: usize) -> bool {
        self.entries
            .iter()
            .any(|t| (t.k, t.s, t.b) == (k, s, b))
    }
}

pub fn realizability_table(n: usize) -> Result<RealizabilityTable, EnumerateError> {
    let mut seen: BTreeMap<(usize, usize, usize), u128> = BTreeMap::new();
    scan_all(n, |code, g| {
        let ksb = DominanceReport::compute(g).ksb();
        seen.entry(ksb).or_insert(code);
        true
    })?;
    Ok(RealizabilityTable {
        n,
        entries: seen
            .into_iter()
            .map(|((k, s, b), code)| RealizableTriple {
                k,
                s,
                b,
                witness: GraphCode { n, code },
            })
            .collect(),
    })
}

/// A tournament on n vertices with exactly k kings, if one exists.
pub fn find_tournament_with_k_kings(
    n: usize,
    k: usize,
) -> Result<Option<GraphCode>, EnumerateError> {
    if k < 1 || k > n {
        return Err(EnumerateError::BadParams {
            reason: format!("need 1 <= k <= n, got n={n}, k={k}"),
        });
    }
    let mut found = None;
    scan_tournaments(n, 0..u64::MAX, |_, g| {
        if dominance::kings(g).len() == k {
            found = Some(encode(g).expect("within code range"));
            false
        } else {
            true
        }
    })?;
    Ok(found)
}

/// A non-null graph whose weak-king set S (with |S| >= 3) induces a
/// sub-oriented-graph containing a transmitter: such a graph shows that a
/// graph can realize "weak kings = vertices of D" even though D has a
/// transmitter. Returns the witness code and S.
pub fn find_weak_king_set_with_transmitter(
    n: usize,
) -> Result<Option<(GraphCode, Vec<usize>)>, EnumerateError> {
    let mut found = None;
    scan_all(n, |code, g| {
        if g.arc_count() == 0 {
            return true;
        }
        let wk = dominance::weak_kings(g);
        if wk.len() < 3 {
            return true;
        }
        let induced = g.induced(&wk).expect("weak kings are in range");
        if induced.transmitters().is_empty() {
            return true;
        }
        found = Some((GraphCode { n, code }, wk));
        false
    })?;
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{c3, null};

    #[test]
    fn code_examples() {
        assert_eq!(encode(&null(3)).unwrap(), GraphCode { n: 3, code: 0 });
        let arc = OrientedGraph::build(2, &[(1, 2)]).unwrap();
        assert_eq!(encode(&arc).unwrap().code, 1);
        assert_eq!(encode(&c3()).unwrap().code, 16);
        assert_eq!(decode(&GraphCode { n: 3, code: 16 }).unwrap(), c3());
    }

    #[test]
    fn code_out_of_range() {
        assert_eq!(
            decode(&GraphCode { n: 2, code: 3 }),
            Err(EnumerateError::CodeOutOfRange { n: 2, code: 3 })
        );
        assert!(code_space(14).is_err());
    }

    #[test]
    fn roundtrip_all_n_le_4() {
        for n in 1..=4 {
            let space = code_space(n).unwrap();
            for code in 0..space {
                let gc = GraphCode { n, code };
                let g = decode(&gc).unwrap();
                assert_eq!(encode(&g).unwrap(), gc);
            }
        }
    }

    #[test]
    fn scan_counts() {
        assert_eq!(scan_all(2, |_, _| true).unwrap(), 3);
        assert_eq!(scan_all(3, |_, _| true).unwrap(), 27);
        let mut tournaments = 0;
        scan_all(3, |_, g| {
            if g.is_tournament() {
                tournaments += 1;
            }
            true
        })
        .unwrap();
        assert_eq!(tournaments, 8);
        assert_eq!(scan_tournaments(3, 0..u64::MAX, |_, _| true).unwrap(), 8);
    }

    #[test]
    fn partition_independence() {
        let space = code_space(4).unwrap();
        let mut sequential = Vec::new();
        scan_all(4, |code, g| {
            sequential.push((code, dominance::weak_kings(g).len()));
            true
        })
        .unwrap();
        let mut partitioned = Vec::new();
        for split in [0, 1, 100, space / 3, space / 2, space] {
            let mut left = Vec::new();
            scan_codes(4, 0..split, |code, g| {
                left.push((code, dominance::weak_kings(g).len()));
                true
            })
            .unwrap();
            scan_codes(4, split..space, |code, g| {
                left.push((code, dominance::weak_kings(g).len()));
                true
            })
            .unwrap();
            partitioned.push(left);
        }
        for p in partitioned {
            assert_eq!(p, sequential);
        }
    }

    #[test]
    fn small_claim_scans_are_clean() {
        for claim in [
            Claim::MaxScoreWeakKing,
            Claim::TransmitterFreeThreeWeakKings,
            Claim::NoProperKssGraph,
            Claim::ConverseDuality,
        ] {
            let report = verify_claim(claim, 4, ScanOptions::default()).unwrap();
            assert!(report.certified(), "{:?}: {:?}", claim, report.counterexamples);
            assert_eq!(report.scanned, 1 + 3 + 27 + 729);
        }
    }

    #[test]
    fn lemma_scan_is_clean_at_n3() {
        let report =
            verify_claim(Claim::DominatedVertexWitness, 3, ScanOptions::default()).unwrap();
        assert!(report.certified());
    }

    #[test]
    fn tournament_claims() {
        let moon = verify_claim(Claim::NoTwoKingTournament, 4, ScanOptions::default()).unwrap();
        assert!(moon.certified());
        assert_eq!(moon.scanned, 1 + 2 + 8 + 64);

        let t1 = verify_claim(Claim::TournamentKingCounts, 4, ScanOptions::default()).unwrap();
        assert!(t1.certified(), "{:?}", t1.counterexamples);

        let k4 = verify_claim(Claim::NoFourKingFourVertex, 4, ScanOptions::default()).unwrap();
        assert!(k4.certified());
        assert_eq!(k4.scanned, 729);
        assert_eq!(k4.notes, vec![String::from("maximum king count observed: 3")]);
    }

    #[test]
    fn claim_parsing() {
        assert_eq!(Claim::parse("t5"), Ok(Claim::MaxScoreWeakKing));
        assert_eq!(Claim::parse("MOON"), Ok(Claim::NoTwoKingTournament));
        assert!(matches!(
            Claim::parse("T99"),
            Err(EnumerateError::UnknownClaim { .. })
        ));
    }

    #[test]
    fn ceiling_enforced() {
        assert!(verify_claim(Claim::MaxScoreWeakKing, 7, ScanOptions::default()).is_err());
        assert!(scan_all(7, |_, _| true).is_err());
    }

    #[test]
    fn realizability_small() {
        let t1 = realizability_table(1).unwrap();
        assert_eq!(t1.entries.len(), 1);
        assert!(t1.contains(1, 1, 1));

        let t2 = realizability_table(2).unwrap();
        assert_eq!(t2.entries.len(), 2);
        assert!(t2.contains(2, 2, 2));
        assert!(t2.contains(1, 1, 0));

        let t3 = realizability_table(3).unwrap();
        assert!(t3.contains(3, 3, 3));
        for t in &t3.entries {
            let g = decode(&t.witness).unwrap();
            assert_eq!(DominanceReport::compute(&g).ksb(), (t.k, t.s, t.b));
        }
    }

    #[test]
    fn tournament_witnesses() {
        assert_eq!(find_tournament_with_k_kings(4, 4).unwrap(), None);
        assert_eq!(find_tournament_with_k_kings(5, 2).unwrap(), None);
        let w = find_tournament_with_k_kings(3, 3).unwrap().unwrap();
        let g = decode(&w).unwrap();
        assert!(g.is_tournament());
        assert_eq!(dominance::kings(&g).len(), 3);
        assert!(find_tournament_with_k_kings(3, 4).is_err());
    }

    #[test]
    fn weak_king_set_with_transmitter_exists() {
        let (code, wk) = find_weak_king_set_with_transmitter(4).unwrap().unwrap();
        let g = decode(&code).unwrap();
        assert!(g.arc_count() > 0);
        assert_eq!(dominance::weak_kings(&g), wk);
        assert!(wk.len() >= 3);
        assert!(!g.induced(&wk).unwrap().transmitters().is_empty());
    }
}
