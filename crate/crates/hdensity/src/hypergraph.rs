//! Simple undirected j-uniform hypergraphs on m labeled vertices and their
//! independence profiles.
//!
//! Vertices are 0-based integers; an edge is a j-element subset stored as a
//! `u64` bitmask (so m ≤ 64 structurally). A vertex set is *independent* if it
//! contains no edge, and `i_k` counts the independent sets of size k. The
//! profile vector (i_0, …, i_m) is what the per-prime density factors consume.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{CapacityError, InputError};

/// Hard structural bound: edges are u64 bitmasks.
pub const MAX_VERTICES: u32 = 64;

/// Default cap on exact independence-count enumeration (2^m subsets).
pub const DEFAULT_ENUM_CAP: u32 = 24;

/// A validated j-uniform hypergraph on m labeled vertices {0, …, m−1}.
///
/// Invariants (enforced at construction): 2 ≤ j ≤ m ≤ 64, every edge has
/// exactly j distinct in-range vertices, and the edge set is duplicate-free.
/// Edgeless hypergraphs are fine; j is still carried as metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    m: u32,
    j: u32,
    edges: Vec<u64>,
}

/// Raw, unvalidated hypergraph description, e.g. fresh out of the parser.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypergraphSpec {
    pub m: u32,
    pub j: u32,
    pub edges: Vec<Vec<u32>>,
}

/// One invariant violation found by [`HypergraphSpec::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// 0-based index into the edge list, if the violation is edge-local.
    pub edge_index: Option<usize>,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.edge_index {
            Some(i) => write!(f, "edge {}: {}", i, self.message),
            None => f.write_str(&self.message),
        }
    }
}

/// The independence profile (i_0(H), …, i_m(H)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndepProfile {
    counts: Vec<u64>,
}

impl IndepProfile {
    /// Number of vertices m (the profile has m+1 entries).
    pub fn m(&self) -> u32 {
        (self.counts.len() - 1) as u32
    }

    /// i_k, the number of independent k-subsets.
    pub fn count(&self, k: usize) -> u64 {
        self.counts.get(k).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Profile of the complete j-uniform hypergraph K_m^(j):
    /// i_k = C(m,k) for k ≤ j−1, else 0.
    pub fn complete_uniform(m: u32, j: u32) -> Result<Self, InputError> {
        if j < 2 || j > m {
            return Err(InputError::new(format!(
                "complete uniform profile requires 2 <= j <= m, got j={j}, m={m}"
            )));
        }
        let counts = (0..=m)
            .map(|k| if k < j { binomial(m, k) } else { 0 })
            .collect();
        Ok(IndepProfile { counts })
    }

    /// Construct from raw counts. Checks the structural invariants
    /// (i_0 = 1, i_1 = m, i_k ≤ C(m,k), hereditary zero tail).
    pub fn from_counts(counts: Vec<u64>) -> Result<Self, InputError> {
        if counts.len() < 2 {
            return Err(InputError::new("profile needs at least i_0 and i_1"));
        }
        let m = (counts.len() - 1) as u32;
        if counts[0] != 1 {
            return Err(InputError::new("i_0 must be 1"));
        }
        if counts[1] != m as u64 {
            return Err(InputError::new(format!("i_1 must equal m={m}")));
        }
        let mut seen_zero = false;
        for (k, &c) in counts.iter().enumerate() {
            if m <= MAX_VERTICES && c > binomial(m, k as u32) {
                return Err(InputError::new(format!("i_{k} exceeds C({m},{k})")));
            }
            if seen_zero && c != 0 {
                return Err(InputError::new(format!(
                    "i_{k} nonzero after a zero entry (independence is downward closed)"
                )));
            }
            if c == 0 {
                seen_zero = true;
            }
        }
        Ok(IndepProfile { counts })
    }
}

/// C(n, k) in u64; n ≤ 64 keeps this comfortably in range.
pub fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n as u128 - i) / (i + 1);
    }
    acc as u64
}

impl HypergraphSpec {
    /// Collect every invariant violation (range, arity, duplicates); empty
    /// means the spec is well-formed.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.m == 0 {
            out.push(Violation {
                edge_index: None,
                message: "vertex count m must be positive".into(),
            });
        }
        if self.m > MAX_VERTICES {
            out.push(Violation {
                edge_index: None,
                message: format!("vertex count m={} exceeds maximum {}", self.m, MAX_VERTICES),
            });
        }
        if self.j < 2 {
            out.push(Violation {
                edge_index: None,
                message: format!("uniformity j={} must be at least 2", self.j),
            });
        }
        if self.j > self.m {
            out.push(Violation {
                edge_index: None,
                message: format!("uniformity j={} exceeds vertex count m={}", self.j, self.m),
            });
        }
        let mut seen = BTreeSet::new();
        for (i, edge) in self.edges.iter().enumerate() {
            let distinct: BTreeSet<u32> = edge.iter().copied().collect();
            if distinct.len() != edge.len() || edge.len() != self.j as usize {
                let dup = distinct.len() != edge.len();
                out.push(Violation {
                    edge_index: Some(i),
                    message: if dup {
                        format!("edge arity != j (duplicate vertex in {:?})", edge)
                    } else {
                        format!("edge arity {} != j={}", edge.len(), self.j)
                    },
                });
            }
            if let Some(&v) = edge.iter().find(|&&v| v >= self.m) {
                out.push(Violation {
                    edge_index: Some(i),
                    message: format!("vertex {} out of range [0, {})", v, self.m),
                });
            }
            if !seen.insert(distinct) {
                out.push(Violation {
                    edge_index: Some(i),
                    message: format!("duplicate edge {:?}", edge),
                });
            }
        }
        out
    }

    /// Validate and construct the hypergraph; duplicate edges are rejected,
    /// not silently merged.
    pub fn build(self) -> Result<Hypergraph, InputError> {
        let violations = self.validate();
        if !violations.is_empty() {
            let msgs: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
            return Err(InputError::new(msgs.join("; ")));
        }
        let mut edges: Vec<u64> = self
            .edges
            .iter()
            .map(|e| e.iter().fold(0u64, |acc, &v| acc | (1 << v)))
            .collect();
        edges.sort_unstable();
        Ok(Hypergraph {
            m: self.m,
            j: self.j,
            edges,
        })
    }
}

impl Hypergraph {
    /// Build from explicit vertex lists, validating all invariants.
    pub fn new(m: u32, j: u32, edges: Vec<Vec<u32>>) -> Result<Self, InputError> {
        HypergraphSpec { m, j, edges }.build()
    }

    /// K_m^(j): all C(m,j) j-subsets as edges.
    pub fn complete_uniform(m: u32, j: u32) -> Result<Self, InputError> {
        if j < 2 || j > m || m > MAX_VERTICES {
            return Err(InputError::new(format!(
                "complete uniform hypergraph requires 2 <= j <= m <= {MAX_VERTICES}, got j={j}, m={m}"
            )));
        }
        let mut edges = Vec::with_capacity(binomial(m, j) as usize);
        // Gosper's hack: iterate all j-bit masks below 2^m in increasing order.
        let mut mask: u64 = (1 << j) - 1;
        let limit: u64 = if m == 64 { u64::MAX } else { (1 << m) - 1 };
        loop {
            edges.push(mask);
            if mask == mask_top(m, j) {
                break;
            }
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
            if mask > limit {
                break;
            }
        }
        Ok(Hypergraph { m, j, edges })
    }

    /// Edgeless hypergraph on m vertices (density contribution is 1).
    pub fn edgeless(m: u32, j: u32) -> Result<Self, InputError> {
        HypergraphSpec { m, j, edges: vec![] }.build()
    }

    /// Path 0–1–⋯–(m−1) as a 2-uniform hypergraph.
    pub fn path(m: u32) -> Result<Self, InputError> {
        let edges = (0..m.saturating_sub(1)).map(|i| vec![i, i + 1]).collect();
        HypergraphSpec { m, j: 2, edges }.build()
    }

    /// Cycle on m ≥ 3 vertices as a 2-uniform hypergraph.
    pub fn cycle(m: u32) -> Result<Self, InputError> {
        if m < 3 {
            return Err(InputError::new("cycle requires m >= 3"));
        }
        let mut edges: Vec<Vec<u32>> = (0..m - 1).map(|i| vec![i, i + 1]).collect();
        edges.push(vec![m - 1, 0]);
        HypergraphSpec { m, j: 2, edges }.build()
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted bitmasks.
    pub fn edge_masks(&self) -> &[u64] {
        &self.edges
    }

    /// Edges as sorted vertex lists.
    pub fn edge_sets(&self) -> Vec<Vec<u32>> {
        self.edges
            .iter()
            .map(|&mask| (0..self.m).filter(|&v| mask & (1 << v) != 0).collect())
            .collect()
    }

    /// True iff the bitmask set contains no edge. Callers must ensure the
    /// mask only uses the low m bits.
    #[inline]
    pub fn is_independent_mask(&self, set: u64) -> bool {
        self.edges.iter().all(|&e| set & e != e)
    }

    /// True iff the vertex set contains no edge of the hypergraph.
    pub fn is_independent(&self, set: &[u32]) -> Result<bool, InputError> {
        let mut mask = 0u64;
        for &v in set {
            if v >= self.m {
                return Err(InputError::new(format!(
                    "vertex {} out of range [0, {})",
                    v, self.m
                )));
            }
            mask |= 1 << v;
        }
        Ok(self.is_independent_mask(mask))
    }

    /// Exact independence profile by subset enumeration, capped at the given
    /// number of vertices (2^m subsets are visited).
    ///
    /// A set is dependent iff removing its highest vertex leaves a dependent
    /// set or some edge whose maximum vertex is that highest vertex is
    /// contained in it, so one upward DP pass over all masks suffices.
    pub fn independence_counts_capped(&self, cap: u32) -> Result<IndepProfile, CapacityError> {
        if self.m > cap {
            return Err(CapacityError::new(format!(
                "independence enumeration is capped at m = {cap} (got m = {})",
                self.m
            )));
        }
        let m = self.m as usize;
        let mut by_max: Vec<Vec<u64>> = vec![Vec::new(); m];
        for &e in &self.edges {
            by_max[63 - e.leading_zeros() as usize].push(e);
        }
        let mut counts = vec![0u64; m + 1];
        counts[0] = 1; // empty set
        let mut indep = vec![false; 1usize << m];
        indep[0] = true;
        for mask in 1..(1u64 << m) {
            let top = 63 - mask.leading_zeros() as usize;
            let parent = mask & !(1 << top);
            let ok = indep[parent as usize]
                && by_max[top].iter().all(|&e| mask & e != e);
            if ok {
                indep[mask as usize] = true;
                counts[mask.count_ones() as usize] += 1;
            }
        }
        Ok(IndepProfile { counts })
    }

    /// Exact independence profile with the default enumeration cap.
    pub fn independence_counts(&self) -> Result<IndepProfile, CapacityError> {
        self.independence_counts_capped(DEFAULT_ENUM_CAP)
    }
}

fn mask_top(m: u32, j: u32) -> u64 {
    // highest j-subset: the top j bits of an m-bit word
    (((1u128 << j) - 1) << (m - j)) as u64
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "m={} j={} edges={}",
            self.m,
            self.j,
            self.edges.len()
        )
    }
}

/// Parse the text format: first line `m=<int> j=<int>`, then one edge per
/// non-empty, non-`#` line as j whitespace-separated vertex indices.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, InputError> {
    let mut lines = text.lines().enumerate();
    let (header_no, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .ok_or_else(|| InputError::new("empty hypergraph input"))?;
    let (m, j) = parse_header(header)
        .map_err(|e| InputError::new(format!("line {}: {}", header_no + 1, e)))?;
    let mut edges = Vec::new();
    for (no, line) in lines {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut edge = Vec::new();
        for tok in line.split_whitespace() {
            let v: u32 = tok.parse().map_err(|_| {
                InputError::new(format!("line {}: invalid vertex index {:?}", no + 1, tok))
            })?;
            edge.push(v);
        }
        edges.push(edge);
    }
    let spec = HypergraphSpec { m, j, edges };
    let violations = spec.validate();
    if !violations.is_empty() {
        let msgs: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        return Err(InputError::new(msgs.join("; ")));
    }
    spec.build()
}

fn parse_header(line: &str) -> Result<(u32, u32), String> {
    let mut m = None;
    let mut j = None;
    for tok in line.split_whitespace() {
        if let Some(v) = tok.strip_prefix("m=") {
            m = Some(v.parse::<u32>().map_err(|_| format!("bad m value {v:?}"))?);
        } else if let Some(v) = tok.strip_prefix("j=") {
            j = Some(v.parse::<u32>().map_err(|_| format!("bad j value {v:?}"))?);
        } else {
            return Err(format!("unexpected token {tok:?} in header (want `m=<int> j=<int>`)"));
        }
    }
    match (m, j) {
        (Some(m), Some(j)) => Ok((m, j)),
        _ => Err("header must declare both m= and j=".into()),
    }
}

/// Parse a named family: `complete:m,j`, `path:m`, `cycle:m`, `edgeless:m,j`.
pub fn parse_family(name: &str) -> Result<Hypergraph, InputError> {
    let (family, args) = name
        .split_once(':')
        .ok_or_else(|| InputError::new(format!("not a hypergraph family spec: {name:?}")))?;
    let nums: Vec<u32> = args
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| InputError::new(format!("bad family parameter {s:?}")))
        })
        .collect::<Result<_, _>>()?;
    match (family, nums.as_slice()) {
        ("complete", [m, j]) => Hypergraph::complete_uniform(*m, *j),
        ("path", [m]) => Hypergraph::path(*m),
        ("cycle", [m]) => Hypergraph::cycle(*m),
        ("edgeless", [m, j]) => Hypergraph::edgeless(*m, *j),
        _ => Err(InputError::new(format!(
            "unknown family {family:?} or wrong parameter count (want complete:m,j | path:m | cycle:m | edgeless:m,j)"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_accepts_wellformed() {
        let spec = HypergraphSpec {
            m: 3,
            j: 2,
            edges: vec![vec![0, 1]],
        };
        assert!(spec.validate().is_empty());
    }

    #[test]
    fn validate_reports_out_of_range() {
        let spec = HypergraphSpec {
            m: 3,
            j: 2,
            edges: vec![vec![0, 3]],
        };
        let v = spec.validate();
        assert_eq!(v.len(), 1);
        assert!(v[0].message.contains("out of range"));
    }

    #[test]
    fn validate_reports_arity_mismatch() {
        let spec = HypergraphSpec {
            m: 3,
            j: 3,
            edges: vec![vec![0, 1]],
        };
        let v = spec.validate();
        assert_eq!(v.len(), 1);
        assert!(v[0].message.contains("arity"));
    }

    #[test]
    fn validate_reports_duplicate_vertex_and_edge() {
        let spec = HypergraphSpec {
            m: 2,
            j: 2,
            edges: vec![vec![0, 0]],
        };
        let v = spec.validate();
        assert!(v.iter().any(|x| x.message.contains("duplicate vertex")));

        let spec = HypergraphSpec {
            m: 3,
            j: 2,
            edges: vec![vec![0, 1], vec![1, 0]],
        };
        let v = spec.validate();
        assert!(v.iter().any(|x| x.message.contains("duplicate edge")));
    }

    #[test]
    fn independence_path3() {
        // path 0-1-2: independents are {}, {0}, {1}, {2}, {0,2}
        let h = Hypergraph::path(3).unwrap();
        let p = h.independence_counts().unwrap();
        assert_eq!(p.counts(), &[1, 3, 1, 0]);
    }

    #[test]
    fn independence_edgeless() {
        let h = Hypergraph::edgeless(3, 2).unwrap();
        let p = h.independence_counts().unwrap();
        assert_eq!(p.counts(), &[1, 3, 3, 1]);
    }

    #[test]
    fn independence_complete_matches_closed_form() {
        for m in 2..=10u32 {
            for j in 2..=m {
                let h = Hypergraph::complete_uniform(m, j).unwrap();
                let p = h.independence_counts().unwrap();
                let expected = IndepProfile::complete_uniform(m, j).unwrap();
                assert_eq!(p, expected, "K_{m}^({j})");
            }
        }
    }

    #[test]
    fn is_independent_examples() {
        let path = Hypergraph::path(3).unwrap();
        assert!(path.is_independent(&[0, 2]).unwrap());
        assert!(path.is_independent(&[]).unwrap());
        let k3 = Hypergraph::complete_uniform(3, 2).unwrap();
        assert!(!k3.is_independent(&[0, 1]).unwrap());
        assert!(k3.is_independent(&[5]).is_err());
    }

    #[test]
    fn complete_uniform_edge_counts() {
        assert_eq!(Hypergraph::complete_uniform(3, 2).unwrap().edge_count(), 3);
        assert_eq!(Hypergraph::complete_uniform(4, 3).unwrap().edge_count(), 4);
        assert_eq!(Hypergraph::complete_uniform(5, 2).unwrap().edge_count(), 10);
        assert!(Hypergraph::complete_uniform(2, 3).is_err());
    }

    #[test]
    fn parse_examples() {
        let h = parse_hypergraph("m=3 j=2\n0 1\n1 2\n").unwrap();
        assert_eq!(h, Hypergraph::path(3).unwrap());

        let err = parse_hypergraph("m=2 j=2\n0 0\n").unwrap_err();
        assert!(err.to_string().contains("duplicate vertex"));

        let h = parse_hypergraph("m=4 j=3\n0 1 2\n").unwrap();
        assert_eq!(h.edge_count(), 1);
        assert_eq!(h.j(), 3);

        // comments and blank lines are skipped
        let h = parse_hypergraph("# a path\nm=3 j=2\n\n0 1\n# mid\n1 2\n").unwrap();
        assert_eq!(h, Hypergraph::path(3).unwrap());
    }

    #[test]
    fn parse_family_examples() {
        assert_eq!(
            parse_family("complete:4,2").unwrap(),
            Hypergraph::complete_uniform(4, 2).unwrap()
        );
        assert_eq!(parse_family("path:3").unwrap(), Hypergraph::path(3).unwrap());
        assert_eq!(parse_family("cycle:5").unwrap().edge_count(), 5);
        assert_eq!(parse_family("edgeless:3,2").unwrap().edge_count(), 0);
        assert!(parse_family("torus:3").is_err());
    }

    #[test]
    fn enumeration_cap_is_reported() {
        let h = Hypergraph::edgeless(30, 2).unwrap();
        let err = h.independence_counts().unwrap_err();
        assert!(err.to_string().contains("24"));
    }

    #[test]
    fn profile_invariant_checks() {
        assert!(IndepProfile::from_counts(vec![1, 3, 1, 0]).is_ok());
        assert!(IndepProfile::from_counts(vec![2, 3, 1, 0]).is_err()); // i_0 != 1
        assert!(IndepProfile::from_counts(vec![1, 2, 0, 1]).is_err()); // tail not hereditary
        assert!(IndepProfile::from_counts(vec![1, 3, 9, 0]).is_err()); // i_2 > C(3,2)
    }
}
