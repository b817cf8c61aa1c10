//! Exact counting of independent sets by size.
//!
//! Both routines branch on a remaining vertex of maximum remaining degree
//! (exclude it, or include it and drop its neighborhood) and stop as soon as
//! the candidate set has no internal edges, where the count is a binomial.
//! A disconnected candidate set is split into components whose results are
//! combined (profiles multiply as polynomials, independence numbers add).
//! Graphs of order at most 64 run on single-word masks with `u128` counters;
//! larger graphs fall back to multi-word sets with big-integer counters.

use num_traits::Zero;

use crate::arith::Count;
use crate::graph::Graph;

/// `i_0, i_1, ..., i_n`: the number of independent sets of each size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceProfile {
    counts: Vec<Count>,
}

impl IndependenceProfile {
    pub fn from_counts(counts: Vec<Count>) -> Self {
        IndependenceProfile { counts }
    }

    pub fn counts(&self) -> &[Count] {
        &self.counts
    }

    /// `i_r`, zero beyond the graph order.
    pub fn get(&self, r: usize) -> Count {
        self.counts.get(r).cloned().unwrap_or_default()
    }

    /// Total number of independent sets, the empty set included.
    pub fn total(&self) -> Count {
        self.counts.iter().sum()
    }

    pub fn independence_number(&self) -> usize {
        self.counts.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }
}

pub(crate) const SMALL_ORDER: usize = 64;

pub fn independence_profile(g: &Graph) -> IndependenceProfile {
    let n = g.order();
    if n <= SMALL_ORDER {
        let rows = small_rows(g);
        let mut counts = vec![0u128; n + 1];
        small_profile(&rows, &mut counts);
        IndependenceProfile::from_counts(counts.into_iter().map(Count::from).collect())
    } else {
        general_profile(g)
    }
}

/// `alpha(G)`, by branch and bound without building the full profile.
pub fn independence_number(g: &Graph) -> usize {
    if g.order() <= SMALL_ORDER {
        let rows = small_rows(g);
        let all = full_mask(g.order());
        let mut best = 0;
        small_alpha(&rows, all, 0, &mut best);
        best as usize
    } else {
        general_alpha(g)
    }
}

pub fn complement(g: &Graph) -> Graph {
    g.complement()
}

/// `c_0, c_1, ...`: cliques of each size, counted as independent sets of the complement.
pub fn clique_profile(g: &Graph) -> IndependenceProfile {
    independence_profile(&complement(g))
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn small_rows(g: &Graph) -> Vec<u64> {
    (0..g.order()).map(|i| g.row_words(i)[0]).collect()
}

#[inline]
fn max_degree_vertex(rows: &[u64], cand: u64) -> (usize, u32) {
    let (mut best_v, mut best_deg) = (0, 0);
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let deg = (rows[v] & cand).count_ones();
        if deg > best_deg {
            best_v = v;
            best_deg = deg;
        }
    }
    (best_v, best_deg)
}

/// Vertices of `cand` reachable from its lowest member.
#[inline]
fn small_component(rows: &[u64], cand: u64) -> u64 {
    let mut comp = cand & cand.wrapping_neg();
    let mut frontier = comp;
    while frontier != 0 {
        let mut reach = 0;
        let mut rest = frontier;
        while rest != 0 {
            reach |= rows[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        frontier = reach & cand & !comp;
        comp |= frontier;
    }
    comp
}

/// Adds the independent-set counts of `rows` into `counts`, indexed by size.
/// `counts` needs at least `rows.len() + 1` entries.
pub(crate) fn small_profile(rows: &[u64], counts: &mut [u128]) {
    small_profile_rec(rows, full_mask(rows.len()), 0, counts);
}

fn small_profile_rec(rows: &[u64], cand: u64, chosen: usize, counts: &mut [u128]) {
    let (v, deg) = max_degree_vertex(rows, cand);
    if deg == 0 {
        let size = cand.count_ones() as u128;
        let mut c: u128 = 1;
        for j in 0..=size {
            counts[chosen + j as usize] += c;
            c = c * (size - j) / (j + 1);
        }
        return;
    }
    let comp = small_component(rows, cand);
    if comp != cand {
        // disjoint union: multiply the two profiles
        let rest = cand & !comp;
        let mut left = [0u128; SMALL_ORDER + 1];
        let mut right = [0u128; SMALL_ORDER + 1];
        small_profile_rec(rows, comp, 0, &mut left);
        small_profile_rec(rows, rest, 0, &mut right);
        let (ln, rn) = (comp.count_ones() as usize, rest.count_ones() as usize);
        for (i, &a) in left[..=ln].iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &b) in right[..=rn].iter().enumerate() {
                counts[chosen + i + j] += a * b;
            }
        }
        return;
    }
    let bit = 1u64 << v;
    small_profile_rec(rows, cand & !bit, chosen, counts);
    small_profile_rec(rows, cand & !bit & !rows[v], chosen + 1, counts);
}

fn small_alpha(rows: &[u64], cand: u64, size: u32, best: &mut u32) {
    if size + cand.count_ones() <= *best {
        return;
    }
    let (v, deg) = max_degree_vertex(rows, cand);
    if deg == 0 {
        *best = size + cand.count_ones();
        return;
    }
    let comp = small_component(rows, cand);
    if comp != cand {
        let (mut left, mut right) = (0, 0);
        small_alpha(rows, comp, 0, &mut left);
        small_alpha(rows, cand & !comp, 0, &mut right);
        *best = (*best).max(size + left + right);
        return;
    }
    let bit = 1u64 << v;
    small_alpha(rows, cand & !bit & !rows[v], size + 1, best);
    small_alpha(rows, cand & !bit, size, best);
}

// Multi-word path.

struct Wide<'a> {
    g: &'a Graph,
}

impl Wide<'_> {
    fn pick(&self, cand: &[u64]) -> Option<usize> {
        let mut best: Option<(usize, u32)> = None;
        for (wi, &w) in cand.iter().enumerate() {
            let mut rest = w;
            while rest != 0 {
                let v = wi * 64 + rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let deg: u32 = self
                    .g
                    .row_words(v)
                    .iter()
                    .zip(cand)
                    .map(|(a, b)| (a & b).count_ones())
                    .sum();
                if deg > 0 && best.is_none_or(|(_, d)| deg > d) {
                    best = Some((v, deg));
                }
            }
        }
        best.map(|(v, _)| v)
    }

    fn without(&self, cand: &[u64], v: usize, neighbors: bool) -> Vec<u64> {
        let row = self.g.row_words(v);
        let mut next: Vec<u64> = cand.to_vec();
        next[v / 64] &= !(1 << (v % 64));
        if neighbors {
            next.iter_mut().zip(row).for_each(|(a, b)| *a &= !b);
        }
        next
    }

    fn component(&self, cand: &[u64]) -> Vec<u64> {
        let mut comp = vec![0u64; cand.len()];
        if let Some(wi) = cand.iter().position(|&w| w != 0) {
            comp[wi] = cand[wi] & cand[wi].wrapping_neg();
        }
        let mut frontier = comp.clone();
        while frontier.iter().any(|&w| w != 0) {
            let mut reach = vec![0u64; cand.len()];
            for v in members(&frontier) {
                reach.iter_mut().zip(self.g.row_words(v)).for_each(|(a, b)| *a |= b);
            }
            for i in 0..cand.len() {
                frontier[i] = reach[i] & cand[i] & !comp[i];
                comp[i] |= frontier[i];
            }
        }
        comp
    }

    /// Splits `cand` into the component of its lowest member and the rest,
    /// or `None` when `cand` is connected.
    fn split(&self, cand: &[u64]) -> Option<(Vec<u64>, Vec<u64>)> {
        let comp = self.component(cand);
        let rest: Vec<u64> = cand.iter().zip(&comp).map(|(a, b)| a & !b).collect();
        rest.iter().any(|&w| w != 0).then_some((comp, rest))
    }

    fn profile(&self, cand: &[u64], chosen: usize, counts: &mut [Count]) {
        let Some(v) = self.pick(cand) else {
            let size = popcount(cand) as u64;
            for j in 0..=size {
                counts[chosen + j as usize] += crate::arith::binom(size, j);
            }
            return;
        };
        if let Some((comp, rest)) = self.split(cand) {
            let mut left = vec![Count::zero(); popcount(&comp) + 1];
            let mut right = vec![Count::zero(); popcount(&rest) + 1];
            self.profile(&comp, 0, &mut left);
            self.profile(&rest, 0, &mut right);
            for (i, a) in left.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                for (j, b) in right.iter().enumerate() {
                    counts[chosen + i + j] += a * b;
                }
            }
            return;
        }
        self.profile(&self.without(cand, v, false), chosen, counts);
        self.profile(&self.without(cand, v, true), chosen + 1, counts);
    }

    fn alpha(&self, cand: &[u64], size: usize, best: &mut usize) {
        let pop = popcount(cand);
        if size + pop <= *best {
            return;
        }
        let Some(v) = self.pick(cand) else {
            *best = size + pop;
            return;
        };
        if let Some((comp, rest)) = self.split(cand) {
            let (mut left, mut right) = (0, 0);
            self.alpha(&comp, 0, &mut left);
            self.alpha(&rest, 0, &mut right);
            *best = (*best).max(size + left + right);
            return;
        }
        self.alpha(&self.without(cand, v, true), size + 1, best);
        self.alpha(&self.without(cand, v, false), size, best);
    }
}

fn members(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            (w != 0).then(|| {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                wi * 64 + b
            })
        })
    })
}

fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

fn all_words(n: usize) -> Vec<u64> {
    let mut words = vec![u64::MAX; n.div_ceil(64)];
    if !n.is_multiple_of(64) {
        *words.last_mut().unwrap() = (1u64 << (n % 64)) - 1;
    }
    words
}

fn general_profile(g: &Graph) -> IndependenceProfile {
    let mut counts = vec![Count::zero(); g.order() + 1];
    Wide { g }.profile(&all_words(g.order()), 0, &mut counts);
    IndependenceProfile::from_counts(counts)
}

fn general_alpha(g: &Graph) -> usize {
    let mut best = 0;
    Wide { g }.alpha(&all_words(g.order()), 0, &mut best);
    best
}
