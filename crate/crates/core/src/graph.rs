//! The oriented-graph value type: trinary pair relation, degrees, scores,
//! score sequences, converse, transmitters.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Ceiling for the dense bit-row representation (one `u64` out-mask and
/// tie-mask per vertex).
pub const MAX_VERTICES: usize = 64;

/// The state of an ordered pair (u, v) of distinct vertices.
///
/// `Forward` is an arc u→v, `Backward` an arc v→u, and `Tie` no arc
/// either way.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Forward,
    Backward,
    Tie,
}

impl Relation {
    pub fn reversed(self) -> Relation {
        match self {
            Relation::Forward => Relation::Backward,
            Relation::Backward => Relation::Forward,
            Relation::Tie => Relation::Tie,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    ZeroVertices,
    TooManyVertices { n: usize },
    SelfLoop { v: usize },
    OutOfRange { v: usize, n: usize },
    ConflictingPair { u: usize, v: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::ZeroVertices => write!(f, "an oriented graph needs at least one vertex"),
            GraphError::TooManyVertices { n } => {
                write!(f, "{n} vertices exceeds the supported maximum of {MAX_VERTICES}")
            }
            GraphError::SelfLoop { v } => write!(f, "loop at vertex {v} (loops are forbidden)"),
            GraphError::OutOfRange { v, n } => {
                write!(f, "vertex {v} out of range 1..={n}")
            }
            GraphError::ConflictingPair { u, v } => {
                write!(f, "both arcs {u}->{v} and {v}->{u} listed (symmetric pairs are forbidden)")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// Per-vertex degree triple and score.
///
/// Always satisfies `out_degree + in_degree + tie_degree = n - 1` and
/// `score = 2*out_degree + tie_degree = n - 1 + out_degree - in_degree`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct VertexReport {
    pub vertex: usize,
    pub out_degree: usize,
    pub in_degree: usize,
    pub tie_degree: usize,
    pub score: usize,
}

/// Vertex scores listed in non-decreasing order. Entries sum to n(n-1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScoreSequence(Vec<usize>);

impl ScoreSequence {
    pub fn scores(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Display for ScoreSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "]")
    }
}

/// An immutable oriented graph on vertices 1..=n.
///
/// Internally each vertex carries two bit rows: the set of vertices it beats
/// and the set it is tied with. In-neighbourhoods are derived. No analysis
/// operation mutates a graph once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrientedGraph {
    n: usize,
    out: Vec<u64>,
    tie: Vec<u64>,
}

impl fmt::Debug for OrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrientedGraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs())
            .finish()
    }
}

/// Iterate the 0-based positions set in `mask`, ascending.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

impl OrientedGraph {
    /// Build a graph from an explicit arc list; every unlisted pair is a tie.
    pub fn build(n: usize, arcs: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::ZeroVertices);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut out = vec![0u64; n];
        let mut in_ = vec![0u64; n];
        for &(u, v) in arcs {
            if u == v {
                return Err(GraphError::SelfLoop { v: u });
            }
            for w in [u, v] {
                if w < 1 || w > n {
                    return Err(GraphError::OutOfRange { v: w, n });
                }
            }
            let (u0, v0) = (u - 1, v - 1);
            if out[v0] >> u0 & 1 == 1 {
                return Err(GraphError::ConflictingPair { u: v, v: u });
            }
            out[u0] |= 1 << v0;
            in_[v0] |= 1 << u0;
        }
        let full = Self::full_mask_for(n);
        let tie = (0..n)
            .map(|v| full & !(out[v] | in_[v] | (1 << v)))
            .collect();
        Ok(OrientedGraph { n, out, tie })
    }

    /// Assemble directly from bit rows. Caller guarantees consistency
    /// (antisymmetry, symmetric ties, no loop bits, no bits >= n).
    pub(crate) fn from_rows(n: usize, out: Vec<u64>, tie: Vec<u64>) -> Self {
        debug_assert!(n >= 1 && n <= MAX_VERTICES);
        debug_assert_eq!(out.len(), n);
        debug_assert_eq!(tie.len(), n);
        OrientedGraph { n, out, tie }
    }

    fn full_mask_for(n: usize) -> u64 {
        if n >= 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Mask of all vertices (0-based bit positions).
    pub(crate) fn full_mask(&self) -> u64 {
        Self::full_mask_for(self.n)
    }

    pub(crate) fn out_mask(&self, v0: usize) -> u64 {
        self.out[v0]
    }

    pub(crate) fn tie_mask(&self, v0: usize) -> u64 {
        self.tie[v0]
    }

    pub(crate) fn in_mask(&self, v0: usize) -> u64 {
        self.full_mask() & !(self.out[v0] | self.tie[v0] | (1 << v0))
    }

    fn check(&self, v: usize) -> Result<usize, GraphError> {
        if v < 1 || v > self.n {
            Err(GraphError::OutOfRange { v, n: self.n })
        } else {
            Ok(v - 1)
        }
    }

    /// The relation on the ordered pair (u, v).
    ///
    /// Panics if `u == v` or either vertex is out of range.
    pub fn relation(&self, u: usize, v: usize) -> Relation {
        assert!(u != v, "relation is undefined on a loop");
        let u0 = self.check(u).expect("vertex in range");
        let v0 = self.check(v).expect("vertex in range");
        if self.out[u0] >> v0 & 1 == 1 {
            Relation::Forward
        } else if self.out[v0] >> u0 & 1 == 1 {
            Relation::Backward
        } else {
            Relation::Tie
        }
    }

    /// All arcs (u, v) with u→v, sorted ascending.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs = Vec::new();
        for u0 in 0..self.n {
            for v0 in bits(self.out[u0]) {
                arcs.push((u0 + 1, v0 + 1));
            }
        }
        arcs
    }

    /// All tied unordered pairs {u, v} with u < v, sorted ascending.
    pub fn tie_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for u0 in 0..self.n {
            for v0 in bits(self.tie[u0]) {
                if v0 > u0 {
                    pairs.push((u0 + 1, v0 + 1));
                }
            }
        }
        pairs
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|m| m.count_ones() as usize).sum()
    }

    pub fn tie_count(&self) -> usize {
        self.tie.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertex_report(&self, v: usize) -> Result<VertexReport, GraphError> {
        let v0 = self.check(v)?;
        let out_degree = self.out[v0].count_ones() as usize;
        let tie_degree = self.tie[v0].count_ones() as usize;
        let in_degree = self.n - 1 - out_degree - tie_degree;
        Ok(VertexReport {
            vertex: v,
            out_degree,
            in_degree,
            tie_degree,
            score: 2 * out_degree + tie_degree,
        })
    }

    /// Score of vertex v: 2d⁺ + d* (= n - 1 + d⁺ - d⁻).
    pub fn score(&self, v: usize) -> Result<usize, GraphError> {
        Ok(self.vertex_report(v)?.score)
    }

    pub fn score_sequence(&self) -> ScoreSequence {
        let mut scores: Vec<usize> = (0..self.n)
            .map(|v0| {
                2 * self.out[v0].count_ones() as usize + self.tie[v0].count_ones() as usize
            })
            .collect();
        scores.sort_unstable();
        ScoreSequence(scores)
    }

    /// The converse: every arc reversed, ties unchanged. An involution.
    pub fn converse(&self) -> OrientedGraph {
        let out = (0..self.n).map(|v0| self.in_mask(v0)).collect();
        OrientedGraph {
            n: self.n,
            out,
            tie: self.tie.clone(),
        }
    }

    /// Vertices of in-degree zero, ascending. Ties do not count as in-arcs,
    /// so every vertex of the null graph is a transmitter.
    pub fn transmitters(&self) -> Vec<usize> {
        let mut covered = 0u64;
        for v0 in 0..self.n {
            covered |= self.out[v0];
        }
        bits(self.full_mask() & !covered).map(|v0| v0 + 1).collect()
    }

    /// True iff no pair is a tie (every pair joined by exactly one arc).
    pub fn is_tournament(&self) -> bool {
        self.tie.iter().all(|&m| m == 0)
    }

    /// The induced sub-oriented-graph on the given vertices. The i-th vertex
    /// of the result corresponds to `vertices[i]` (which must be sorted,
    /// distinct, and in range).
    pub fn induced(&self, vertices: &[usize]) -> Result<OrientedGraph, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::ZeroVertices);
        }
        let mut arcs = Vec::new();
        for (a, &u) in vertices.iter().enumerate() {
            self.check(u)?;
            for (b, &v) in vertices.iter().enumerate() {
                if a < b && self.relation(u, v) == Relation::Forward {
                    arcs.push((a + 1, b + 1));
                } else if a < b && self.relation(u, v) == Relation::Backward {
                    arcs.push((b + 1, a + 1));
                }
            }
        }
        OrientedGraph::build(vertices.len(), &arcs)
    }
}
