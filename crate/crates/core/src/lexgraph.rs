//! Lex graphs: `L(n, m)` takes as edges the first `m` vertex pairs in lex order.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::sds::{check_edge_count, sds_decompose, SdsDecomposition};

/// Lex order on finite sets: `a` comes first iff the smallest element of the
/// symmetric difference lies in `a`.
pub fn lex_compare<T: Ord + Copy>(a: &BTreeSet<T>, b: &BTreeSet<T>) -> Ordering {
    match a.symmetric_difference(b).next() {
        None => Ordering::Equal,
        Some(x) if a.contains(x) => Ordering::Less,
        Some(_) => Ordering::Greater,
    }
}

/// All pairs `{i, j}` of `1..=n` in lex order.
pub fn lex_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
}

pub fn build_lex_graph(n: usize, m: u64) -> Result<Graph> {
    check_edge_count(n as u64, m, 0)?;
    let mut g = Graph::empty(n);
    for (i, j) in lex_pairs(n).take(m as usize) {
        g.set_pair(i - 1, j - 1);
    }
    Ok(g)
}

fn lex_depth(n: usize, m: u64) -> Result<SdsDecomposition> {
    if n < 2 {
        // no pairs at all, so any m >= 1 is out of range
        return Err(Error::EdgeCountOutOfRange {
            n: n as u64,
            m,
            min: 1,
            max: 0,
        });
    }
    sds_decompose(n as u64, m)
}

/// `N(i)` in `L(n, m)` from the depth `k` and final part `p_k`, without building the graph.
///
/// Vertices before `k` are universal, `k` sees everything before it plus the
/// next `p_k` vertices, those `p_k` vertices see `1..=k`, and the rest see `1..k`.
pub fn lex_neighborhood(n: usize, m: u64, i: usize) -> Result<VertexSet> {
    let d = lex_depth(n, m)?;
    if i == 0 || i > n {
        return Err(Error::VertexOutOfRange {
            vertex: i as u64,
            n: n as u64,
        });
    }
    let k = d.depth as usize;
    let p = d.last_part as usize;
    let set = if i < k {
        let mut s = VertexSet::range(n, 1, n);
        s.remove(i);
        s
    } else if i == k {
        VertexSet::range(n, 1, k - 1).union(&VertexSet::range(n, k + 1, k + p))
    } else if i <= k + p {
        VertexSet::range(n, 1, k)
    } else {
        VertexSet::range(n, 1, k - 1)
    };
    Ok(set)
}

// Results are cross-checked against the built graph up to this order.
const SELF_CHECK_ORDER: usize = 512;

/// All maximum independent sets of `L(n, m)`, each of size `n - k`.
///
/// The tail `{k+1, ..., n}` always qualifies. When `p_k = 1`, so does
/// `{k} ∪ {k+2, ..., n}`. For the complete graph every singleton is
/// maximum; the two above come first and the remaining singletons follow
/// in increasing order.
pub fn lex_maximum_independent_sets(n: usize, m: u64) -> Result<Vec<VertexSet>> {
    let d = lex_depth(n, m)?;
    let k = d.depth as usize;
    let p = d.last_part as usize;

    let mut sets = vec![VertexSet::range(n, k + 1, n)];
    if p == 1 {
        let mut b = VertexSet::range(n, k + p + 1, n);
        b.insert(k);
        sets.push(b);
    }
    if k == n - 1 {
        sets.extend((1..n - 1).map(|v| VertexSet::range(n, v, v)));
    }

    if n <= SELF_CHECK_ORDER {
        let g = build_lex_graph(n, m)?;
        for s in &sets {
            assert!(
                s.len() == n - k && g.is_independent(s) && g.is_dominating(s),
                "{s:?} is not a maximum independent set of L({n},{m})"
            );
        }
    }
    Ok(sets)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    fn vset(n: usize, xs: &[usize]) -> VertexSet {
        VertexSet::from_members(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn lex_compare_examples() {
        assert_eq!(lex_compare(&set(&[1, 5]), &set(&[2, 3])), Ordering::Less);
        assert_eq!(lex_compare(&set(&[2, 3]), &set(&[2, 4])), Ordering::Less);
        assert_eq!(lex_compare(&set(&[2, 4]), &set(&[2, 3])), Ordering::Greater);
        assert_eq!(lex_compare(&set(&[2, 3]), &set(&[2, 3])), Ordering::Equal);
    }

    #[test]
    fn l56_graph() {
        let g = build_lex_graph(5, 6).unwrap();
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4)]
        );
        assert_eq!(build_lex_graph(7, 0).unwrap().edge_count(), 0);
        assert_eq!(build_lex_graph(4, 6).unwrap(), Graph::empty(4).complement());
        assert!(build_lex_graph(4, 7).is_err());
    }

    #[test]
    fn neighborhood_examples() {
        assert_eq!(lex_neighborhood(5, 6, 2).unwrap(), vset(5, &[1, 3, 4]));
        assert_eq!(lex_neighborhood(5, 6, 5).unwrap(), vset(5, &[1]));
        assert_eq!(lex_neighborhood(5, 6, 3).unwrap(), vset(5, &[1, 2]));
        assert!(lex_neighborhood(5, 0, 1).is_err());
        assert!(lex_neighborhood(5, 6, 6).is_err());
        assert!(lex_neighborhood(1, 1, 1).is_err());
    }

    #[test]
    fn construction_matches_sorted_pairs() {
        for n in 0..=12usize {
            let mut all: Vec<BTreeSet<usize>> = lex_pairs(n).map(|(i, j)| set(&[i, j])).collect();
            all.reverse();
            all.sort_by(lex_compare);
            let pairs = n * n.saturating_sub(1) / 2;
            for m in 0..=pairs {
                let g = build_lex_graph(n, m as u64).unwrap();
                let expected: Vec<(usize, usize)> = all[..m]
                    .iter()
                    .map(|s| {
                        let v: Vec<_> = s.iter().copied().collect();
                        (v[0], v[1])
                    })
                    .collect();
                let got: Vec<_> = g.edges().collect();
                assert_eq!(got, expected, "n={n} m={m}");
                if m < pairs {
                    assert!(g.is_subgraph_of(&build_lex_graph(n, m as u64 + 1).unwrap()));
                }
            }
        }
    }

    #[test]
    fn neighborhood_formula_matches_construction() {
        for n in 2..=12usize {
            for m in 1..=(n * (n - 1) / 2) as u64 {
                let g = build_lex_graph(n, m).unwrap();
                for i in 1..=n {
                    assert_eq!(lex_neighborhood(n, m, i).unwrap(), g.neighborhood(i), "n={n} m={m} i={i}");
                }
            }
        }
    }

    #[test]
    fn maximum_independent_set_examples() {
        assert_eq!(lex_maximum_independent_sets(5, 6).unwrap(), vec![vset(5, &[3, 4, 5])]);
        assert_eq!(
            lex_maximum_independent_sets(5, 5).unwrap(),
            vec![vset(5, &[3, 4, 5]), vset(5, &[2, 4, 5])]
        );
        assert_eq!(
            lex_maximum_independent_sets(4, 6).unwrap(),
            vec![vset(4, &[4]), vset(4, &[3]), vset(4, &[1]), vset(4, &[2])]
        );
        assert_eq!(
            lex_maximum_independent_sets(2, 1).unwrap(),
            vec![vset(2, &[2]), vset(2, &[1])]
        );
        assert!(lex_maximum_independent_sets(5, 0).is_err());
    }
}
