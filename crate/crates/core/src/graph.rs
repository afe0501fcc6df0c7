//! Undirected graphs, cut semantics and the classical exhaustive oracle.
//!
//! Vertices are 1-indexed at every public boundary. A cut assignment is an
//! n-bit string `x_n … x_1`; bit `d` set means vertex `d` lies in `V1`,
//! clear means `V2`. Displayed strings put vertex `n` leftmost.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// Largest vertex count accepted by the exhaustive routines.
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed header, expected \"n m\": {reason}")]
    MalformedHeader { line: usize, reason: String },
    #[error("line {line}: malformed edge, expected \"k p\": {reason}")]
    MalformedEdge { line: usize, reason: String },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge ({k}, {p})")]
    DuplicateEdge { line: usize, k: usize, p: usize },
    #[error("edge count mismatch: header declares {declared}, found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("missing header line")]
    MissingHeader,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("assignment has {got} bits but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("exhaustive search over {n} vertices exceeds the cap of {cap}")]
    ExhaustiveCap { n: usize, cap: usize },
    #[error("cut size {t} out of range 0..={m}")]
    CutSizeOutOfRange { t: usize, m: usize },
    #[error("vertex count must be at least 1")]
    Empty,
}

/// An undirected, unweighted graph with edges kept in insertion order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from 1-indexed edges, applying the same validation as
    /// the file parser (reported line numbers are edge positions, 1-based).
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut seen = HashSet::with_capacity(edges.len());
        for (idx, &(k, p)) in edges.iter().enumerate() {
            validate_edge(idx + 1, n, k, p, &mut seen)?;
        }
        Ok(Self { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Number of edges cut by the assignment packed into the low `n` bits
    /// of `bits` (bit `d - 1` is vertex `d`).
    pub fn cut_size_bits(&self, bits: u64) -> usize {
        self.edges
            .iter()
            .filter(|&&(k, p)| {
                let xk = (bits >> (k - 1)) & 1 == 1;
                let xp = (bits >> (p - 1)) & 1 == 1;
                edge_in_cut(xk, xp)
            })
            .count()
    }

    /// Renders the graph in the text format accepted by [`parse_graph`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for (k, p) in &self.edges {
            out.push_str(&format!("{k} {p}\n"));
        }
        out
    }

    fn check_exhaustive(&self, cap: usize) -> Result<(), GraphError> {
        if self.n > cap || self.n >= 64 {
            return Err(GraphError::ExhaustiveCap { n: self.n, cap });
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_graph(s)
    }
}

fn validate_edge(
    line: usize,
    n: usize,
    k: usize,
    p: usize,
    seen: &mut HashSet<(usize, usize)>,
) -> Result<(), ParseError> {
    for vertex in [k, p] {
        if vertex == 0 || vertex > n {
            return Err(ParseError::VertexOutOfRange { line, vertex, n });
        }
    }
    if k == p {
        return Err(ParseError::SelfLoop { line, vertex: k });
    }
    if !seen.insert((k.min(p), k.max(p))) {
        return Err(ParseError::DuplicateEdge { line, k, p });
    }
    Ok(())
}

/// Parses the `"n m"` header followed by `m` lines of `"k p"`.
///
/// Blank lines and lines starting with `#` are ignored. Errors carry the
/// 1-based line number in the original text.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (n, m) = parse_pair(header).map_err(|reason| ParseError::MalformedHeader {
        line: header_line,
        reason,
    })?;
    if n == 0 {
        return Err(ParseError::MalformedHeader {
            line: header_line,
            reason: "vertex count must be positive".into(),
        });
    }

    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    for (line, body) in lines {
        if edges.len() == m {
            return Err(ParseError::EdgeCountMismatch {
                declared: m,
                found: m + 1,
            });
        }
        let (k, p) =
            parse_pair(body).map_err(|reason| ParseError::MalformedEdge { line, reason })?;
        validate_edge(line, n, k, p, &mut seen)?;
        edges.push((k, p));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph { n, edges })
}

fn parse_pair(line: &str) -> Result<(usize, usize), String> {
    let mut fields = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize, String> {
        let tok = fields.next().ok_or_else(|| format!("missing {what}"))?;
        tok.parse::<usize>()
            .map_err(|e| format!("{what} {tok:?}: {e}"))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = fields.next() {
        return Err(format!("unexpected trailing field {extra:?}"));
    }
    Ok((a, b))
}

/// Whether an edge with endpoint bits `x_k`, `x_p` crosses the cut.
pub fn edge_in_cut(xk: bool, xp: bool) -> bool {
    (xk && !xp) || (!xk && xp)
}

/// Whether an edge with endpoint bits `x_k`, `x_p` stays on one side.
pub fn edge_not_in_cut(xk: bool, xp: bool) -> bool {
    (!xk && !xp) || (xk && xp)
}

/// A bipartition of the vertices; `bit(d)` is true when vertex `d` is in `V1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CutAssignment {
    bits: Vec<bool>,
}

impl CutAssignment {
    pub fn from_bits(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    /// Unpacks the low `n` bits of `value`; bit `d - 1` is vertex `d`.
    pub fn from_value(n: usize, value: u64) -> Self {
        Self {
            bits: (0..n).map(|d| (value >> d) & 1 == 1).collect(),
        }
    }

    /// Parses display order `x_n … x_1`.
    pub fn from_display(s: &str) -> Option<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars().rev() {
            bits.push(match c {
                '0' => false,
                '1' => true,
                _ => return None,
            });
        }
        Some(Self { bits })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Membership of 1-indexed vertex `d` in `V1`.
    pub fn bit(&self, d: usize) -> bool {
        self.bits[d - 1]
    }

    /// Packs the assignment into an integer (requires fewer than 65 vertices).
    pub fn value(&self) -> u64 {
        self.bits
            .iter()
            .enumerate()
            .fold(0, |acc, (d, &b)| acc | (u64::from(b) << d))
    }

    pub fn complement(&self) -> Self {
        Self {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    /// Vertices in `V1`, ascending.
    pub fn v1(&self) -> Vec<usize> {
        (1..=self.bits.len()).filter(|&d| self.bit(d)).collect()
    }

    /// Vertices in `V2`, ascending.
    pub fn v2(&self) -> Vec<usize> {
        (1..=self.bits.len()).filter(|&d| !self.bit(d)).collect()
    }
}

impl fmt::Display for CutAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in self.bits.iter().rev() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl Serialize for CutAssignment {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Formats an `n`-bit value in display order `x_n … x_1`.
pub fn display_bits(n: usize, value: u64) -> String {
    CutAssignment::from_value(n, value).to_string()
}

/// A cut together with its size and the number of optimal assignments.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CutReport {
    pub size: usize,
    pub assignment: CutAssignment,
    /// Number of assignments attaining `size` (each cut is counted together
    /// with its complement).
    #[serde(rename = "complementCount")]
    pub optimal_count: u64,
}

pub fn cut_size(g: &Graph, a: &CutAssignment) -> Result<usize, GraphError> {
    if a.len() != g.n {
        return Err(GraphError::LengthMismatch {
            expected: g.n,
            got: a.len(),
        });
    }
    Ok(g.edges
        .iter()
        .filter(|&&(k, p)| edge_in_cut(a.bit(k), a.bit(p)))
        .count())
}

/// Exhaustive maximum cut with the default vertex cap.
pub fn brute_force_max_cut(g: &Graph) -> Result<CutReport, GraphError> {
    brute_force_max_cut_capped(g, DEFAULT_EXHAUSTIVE_CAP)
}

/// Enumerates all `2^n` assignments. The witness is the lowest-valued
/// assignment of maximum size.
pub fn brute_force_max_cut_capped(g: &Graph, cap: usize) -> Result<CutReport, GraphError> {
    g.check_exhaustive(cap)?;
    let mut best = 0usize;
    let mut witness = 0u64;
    let mut count = 0u64;
    for x in 0..(1u64 << g.n) {
        let size = g.cut_size_bits(x);
        if size > best {
            best = size;
            witness = x;
            count = 1;
        } else if size == best {
            count += 1;
        }
    }
    Ok(CutReport {
        size: best,
        assignment: CutAssignment::from_value(g.n, witness),
        optimal_count: count,
    })
}

/// Histogram of cut sizes: entry `t` is the number of assignments cutting
/// exactly `t` edges, for `t = 0..=m`.
pub fn cut_size_distribution(g: &Graph, cap: usize) -> Result<Vec<u64>, GraphError> {
    g.check_exhaustive(cap)?;
    let mut counts = vec![0u64; g.edges.len() + 1];
    for x in 0..(1u64 << g.n) {
        counts[g.cut_size_bits(x)] += 1;
    }
    Ok(counts)
}

pub fn count_cuts_of_size(g: &Graph, t: usize) -> Result<u64, GraphError> {
    count_cuts_of_size_capped(g, t, DEFAULT_EXHAUSTIVE_CAP)
}

/// Sizes above `m` are unattainable and count as zero.
pub fn count_cuts_of_size_capped(g: &Graph, t: usize, cap: usize) -> Result<u64, GraphError> {
    g.check_exhaustive(cap)?;
    if t > g.edges.len() {
        return Ok(0);
    }
    Ok((0..(1u64 << g.n))
        .filter(|&x| g.cut_size_bits(x) == t)
        .count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        parse_graph("3 2\n1 2\n2 3").unwrap()
    }

    fn a(s: &str) -> CutAssignment {
        CutAssignment::from_display(s).unwrap()
    }

    #[test]
    fn parses_three_vertex_path() {
        let g = path3();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(1, 2), (2, 3)]);
    }

    #[test]
    fn parses_single_vertex_without_edges() {
        let g = parse_graph("1 0").unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert!(g.edges().is_empty());
    }

    #[test]
    fn comments_blank_lines_and_trailing_newline() {
        let g = parse_graph("# header comment\n\n3 2\n# edge list\n1 2\n\n2 3\n").unwrap();
        assert_eq!(g, path3());
    }

    #[test]
    fn rejects_duplicate_edges_in_either_orientation() {
        assert_eq!(
            parse_graph("3 2\n1 2\n1 2"),
            Err(ParseError::DuplicateEdge {
                line: 3,
                k: 1,
                p: 2
            })
        );
        assert_eq!(
            parse_graph("3 2\n1 2\n2 1"),
            Err(ParseError::DuplicateEdge {
                line: 3,
                k: 2,
                p: 1
            })
        );
    }

    #[test]
    fn distinct_parse_errors() {
        assert!(matches!(
            parse_graph("3"),
            Err(ParseError::MalformedHeader { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("x 2"),
            Err(ParseError::MalformedHeader { line: 1, .. })
        ));
        assert_eq!(
            parse_graph("3 1\n1 4"),
            Err(ParseError::VertexOutOfRange {
                line: 2,
                vertex: 4,
                n: 3
            })
        );
        assert_eq!(
            parse_graph("3 1\n0 1"),
            Err(ParseError::VertexOutOfRange {
                line: 2,
                vertex: 0,
                n: 3
            })
        );
        assert_eq!(
            parse_graph("3 1\n2 2"),
            Err(ParseError::SelfLoop { line: 2, vertex: 2 })
        );
        assert!(matches!(
            parse_graph("3 1\n1"),
            Err(ParseError::MalformedEdge { line: 2, .. })
        ));
        assert_eq!(
            parse_graph("3 2\n1 2"),
            Err(ParseError::EdgeCountMismatch {
                declared: 2,
                found: 1
            })
        );
        assert!(matches!(
            parse_graph("3 1\n1 2\n2 3"),
            Err(ParseError::EdgeCountMismatch { .. })
        ));
        assert_eq!(
            parse_graph("# only a comment\n"),
            Err(ParseError::MissingHeader)
        );
    }

    #[test]
    fn predicates() {
        assert!(edge_in_cut(true, false));
        assert!(!edge_in_cut(false, false));
        assert!(!edge_in_cut(true, true));
        assert!(edge_not_in_cut(false, false));
        assert!(!edge_not_in_cut(true, false));
        assert!(edge_not_in_cut(true, true));
    }

    #[test]
    fn cut_sizes_on_path() {
        let g = path3();
        assert_eq!(cut_size(&g, &a("010")).unwrap(), 2);
        assert_eq!(cut_size(&g, &a("001")).unwrap(), 1);
        assert_eq!(cut_size(&g, &a("000")).unwrap(), 0);
        assert_eq!(
            cut_size(&g, &a("01")),
            Err(GraphError::LengthMismatch {
                expected: 3,
                got: 2
            })
        );
    }

    #[test]
    fn display_order_puts_highest_vertex_first() {
        let x = a("010");
        assert!(!x.bit(1));
        assert!(x.bit(2));
        assert!(!x.bit(3));
        assert_eq!(x.value(), 0b010);
        assert_eq!(x.v1(), vec![2]);
        assert_eq!(x.v2(), vec![1, 3]);
        assert_eq!(x.complement().to_string(), "101");
        assert_eq!(display_bits(4, 0b0101), "0101");
    }

    #[test]
    fn brute_force_examples() {
        let r = brute_force_max_cut(&path3()).unwrap();
        assert_eq!(
            (r.size, r.assignment.to_string(), r.optimal_count),
            (2, "010".into(), 2)
        );

        let k3 = parse_graph("3 3\n1 2\n2 3\n1 3").unwrap();
        let r = brute_force_max_cut(&k3).unwrap();
        assert_eq!((r.size, r.optimal_count), (2, 6));

        let single = parse_graph("1 0").unwrap();
        let r = brute_force_max_cut(&single).unwrap();
        assert_eq!((r.size, r.optimal_count), (0, 2));
    }

    #[test]
    fn brute_force_respects_cap() {
        let g = Graph::new(25, vec![(1, 2)]).unwrap();
        assert_eq!(
            brute_force_max_cut(&g),
            Err(GraphError::ExhaustiveCap { n: 25, cap: 24 })
        );
    }

    #[test]
    fn counts_by_size() {
        let g = path3();
        assert_eq!(count_cuts_of_size(&g, 2).unwrap(), 2);
        assert_eq!(count_cuts_of_size(&g, 0).unwrap(), 2);
        assert_eq!(count_cuts_of_size(&g, 3).unwrap(), 0);
        assert_eq!(cut_size_distribution(&g, 24).unwrap(), vec![2, 4, 2]);
    }

    #[test]
    fn graph_new_validates_like_parser() {
        assert!(matches!(
            Graph::new(3, vec![(1, 2), (2, 1)]),
            Err(GraphError::Parse(ParseError::DuplicateEdge { line: 2, .. }))
        ));
        assert_eq!(Graph::new(0, vec![]), Err(GraphError::Empty));
        let g = path3();
        assert_eq!(parse_graph(&g.to_text()).unwrap(), g);
    }
}
