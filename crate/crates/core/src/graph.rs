//! Simple undirected graphs on vertices `1..=n`, stored as adjacency bitsets.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A set of vertices drawn from `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    n: usize,
    bits: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            bits: vec![0; words_for(n)],
        }
    }

    /// `{lo, lo+1, ..., hi}`, clipped to `1..=n`.
    pub fn range(n: usize, lo: usize, hi: usize) -> Self {
        let mut set = Self::empty(n);
        for v in lo.max(1)..=hi.min(n) {
            set.insert(v);
        }
        set
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Result<Self> {
        let mut set = Self::empty(n);
        for v in members {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange {
                    vertex: v as u64,
                    n: n as u64,
                });
            }
            set.insert(v);
        }
        Ok(set)
    }

    pub(crate) fn from_words(n: usize, bits: Vec<u64>) -> Self {
        debug_assert_eq!(bits.len(), words_for(n));
        VertexSet { n, bits }
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    /// Panics if `v` is outside `1..=n`.
    pub fn insert(&mut self, v: usize) {
        assert!((1..=self.n).contains(&v), "vertex {v} out of range");
        let i = v - 1;
        self.bits[i / WORD] |= 1 << (i % WORD);
    }

    pub fn remove(&mut self, v: usize) {
        if (1..=self.n).contains(&v) {
            let i = v - 1;
            self.bits[i / WORD] &= !(1 << (i % WORD));
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        (1..=self.n).contains(&v) && self.bits[(v - 1) / WORD] >> ((v - 1) % WORD) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & b == 0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a | b).collect();
        VertexSet { n: self.n, bits }
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + b + 1)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Simple undirected graph on `1..=n`.
///
/// Rows are stored contiguously, `words` 64-bit words per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
        }
    }

    /// Builds a graph from 1-indexed edges. Repeated edges are merged.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w == 0 || w > self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w as u64,
                    n: self.n as u64,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop { vertex: u as u64 });
        }
        self.set_pair(u - 1, v - 1);
        Ok(())
    }

    /// Zero-indexed, unchecked beyond slice bounds.
    #[inline]
    pub(crate) fn set_pair(&mut self, a: usize, b: usize) {
        self.adj[a * self.words + b / WORD] |= 1 << (b % WORD);
        self.adj[b * self.words + a / WORD] |= 1 << (a % WORD);
    }

    pub(crate) fn clear(&mut self) {
        self.adj.iter_mut().for_each(|w| *w = 0);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if !(1..=self.n).contains(&u) || !(1..=self.n).contains(&v) {
            return false;
        }
        self.row_words(u - 1)[(v - 1) / WORD] >> ((v - 1) % WORD) & 1 == 1
    }

    pub(crate) fn row_words(&self, i: usize) -> &[u64] {
        &self.adj[i * self.words..(i + 1) * self.words]
    }

    /// Open neighborhood `N(v)`.
    pub fn neighborhood(&self, v: usize) -> VertexSet {
        assert!((1..=self.n).contains(&v), "vertex {v} out of range");
        VertexSet::from_words(self.n, self.row_words(v - 1).to_vec())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row_words(v - 1).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Edges `(u, v)` with `u < v`, in lex order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.n).flat_map(move |u| {
            self.neighborhood(u)
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
                .collect::<Vec<_>>()
        })
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for i in 0..self.n {
            for w in 0..self.words {
                let mut keep = !self.adj[i * self.words + w];
                let lo = w * WORD;
                // mask out the diagonal and bits beyond n
                if (lo..lo + WORD).contains(&i) {
                    keep &= !(1 << (i - lo));
                }
                if lo + WORD > self.n {
                    let valid = self.n - lo;
                    keep &= if valid == 0 { 0 } else { u64::MAX >> (WORD - valid) };
                }
                g.adj[i * self.words + w] = keep;
            }
        }
        g
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.neighborhood(v).is_disjoint(set))
    }

    /// Every vertex outside `set` has a neighbor inside it.
    pub fn is_dominating(&self, set: &VertexSet) -> bool {
        (1..=self.n)
            .filter(|&v| !set.contains(v))
            .all(|v| !self.neighborhood(v).is_disjoint(set))
    }

    /// Whether every edge of `self` is an edge of `other`.
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj.iter().zip(&other.adj).all(|(a, b)| a & !b == 0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_symmetric_and_counted() {
        let g = Graph::from_edges(5, [(1, 2), (2, 3), (3, 1), (2, 1)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(2, 1) && g.has_edge(1, 2));
        assert!(!g.has_edge(1, 4));
        assert!(!g.has_edge(0, 1) && !g.has_edge(1, 0) && !g.has_edge(1, 9));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(g.degree(2), 2);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, [(1, 1)]).unwrap_err(),
            Error::SelfLoop { vertex: 1 }
        );
        assert!(matches!(
            Graph::from_edges(3, [(1, 4)]),
            Err(Error::VertexOutOfRange { vertex: 4, .. })
        ));
    }

    #[test]
    fn complement_is_involution_across_word_boundary() {
        for n in [0usize, 1, 5, 63, 64, 65, 130] {
            let edges = (1..n).map(|i| (i, i + 1));
            let g = Graph::from_edges(n, edges).unwrap();
            let c = g.complement();
            assert_eq!(c.edge_count() + g.edge_count(), n * n.saturating_sub(1) / 2);
            assert_eq!(c.complement(), g);
            for v in 1..=n {
                assert!(!c.has_edge(v, v));
            }
        }
        assert_eq!(Graph::empty(4).complement().edge_count(), 6);
    }

    #[test]
    fn vertex_set_ops() {
        let s = VertexSet::from_members(70, [3, 65, 1]).unwrap();
        assert_eq!(s.to_vec(), vec![1, 3, 65]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(65) && !s.contains(2) && !s.contains(0) && !s.contains(71));
        assert!(VertexSet::from_members(3, [4]).is_err());
        assert_eq!(VertexSet::range(5, 3, 9).to_vec(), vec![3, 4, 5]);
        assert!(VertexSet::range(5, 4, 3).is_empty());
    }

    #[test]
    fn independence_and_domination() {
        // path 1-2-3-4
        let g = Graph::from_edges(4, [(1, 2), (2, 3), (3, 4)]).unwrap();
        let s = VertexSet::from_members(4, [1, 3]).unwrap();
        assert!(g.is_independent(&s) && g.is_dominating(&s));
        let s = VertexSet::from_members(4, [1, 4]).unwrap();
        assert!(g.is_independent(&s) && g.is_dominating(&s));
        let s = VertexSet::from_members(4, [1]).unwrap();
        assert!(!g.is_dominating(&s));
        let s = VertexSet::from_members(4, [1, 2]).unwrap();
        assert!(!g.is_independent(&s));
    }
}
