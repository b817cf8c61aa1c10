//! The two integer parameterizations behind every bound.
//!
//! [`SdsDecomposition`] writes `m = (n-1) + (n-2) + ... + (n-k+1) + p_k`
//! with `1 <= p_k <= n-k`; the lex graph `L(n, m)` is read straight off it.
//! [`ErdosDecomposition`] writes a count as `C(s,2) + t` with `0 < t <= s`.

use crate::arith::{floor_sqrt_quarter_plus_half, triangular_decompose};
use crate::error::{Error, Result};

/// `C(n, 2)`, checked against `u64` overflow.
pub fn max_edges(n: u64) -> Result<u64> {
    let pairs = n as u128 * n.saturating_sub(1) as u128 / 2;
    u64::try_from(pairs).map_err(|_| Error::OrderTooLarge {
        n,
        max: u32::MAX as u64 + 1,
    })
}

pub(crate) fn check_edge_count(n: u64, m: u64, min: u64) -> Result<u64> {
    let max = max_edges(n)?;
    if m < min || m > max {
        return Err(Error::EdgeCountOutOfRange { n, m, min, max });
    }
    Ok(max)
}

/// Sum of the first `depth` parts `(n-1) + ... + (n-depth)`, i.e. `depth(2n-depth-1)/2`.
fn full_prefix(n: u64, depth: u64) -> u128 {
    let (n, d) = (n as u128, depth as u128);
    d * (2 * n - d - 1) / 2
}

/// Subsequent decreasing summation decomposition of `m` with base `n`.
///
/// The parts are `p_i = n - i` for `i < depth` followed by `last_part`.
/// Only `(depth, last_part)` is stored; the leading parts are implied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SdsDecomposition {
    pub n: u64,
    pub m: u64,
    /// `k`, the number of parts.
    pub depth: u64,
    /// `p_k`, the final part.
    pub last_part: u64,
}

impl SdsDecomposition {
    /// `n - k`, the number of vertices after the depth vertex.
    pub fn tail_len(&self) -> u64 {
        self.n - self.depth
    }

    /// Whether the final part is full, i.e. `p_k = n - k`.
    pub fn is_full(&self) -> bool {
        self.last_part == self.tail_len()
    }
}

/// Computes `sds(m, n)` for `n >= 2` and `1 <= m <= C(n, 2)`.
///
/// The depth comes from the closed form `k = n - floor(1/2 + sqrt(1/4 + n^2 - n - 2m))`
/// and is then checked against the minimality inequalities directly.
pub fn sds_decompose(n: u64, m: u64) -> Result<SdsDecomposition> {
    if n < 2 {
        return Err(Error::OrderTooSmall { n, min: 2 });
    }
    check_edge_count(n, m, 1)?;
    let radicand = n as u128 * (n as u128 - 1) - 2 * m as u128;
    let depth = n as u128 - floor_sqrt_quarter_plus_half(radicand);
    let depth = depth as u64;

    assert!(
        (1..n).contains(&depth)
            && m as u128 <= full_prefix(n, depth)
            && (depth == 1 || full_prefix(n, depth - 1) < m as u128),
        "closed-form depth {depth} is not minimal for n = {n}, m = {m}"
    );

    let last_part = (m as u128 - full_prefix(n, depth - 1)) as u64;
    debug_assert!(1 <= last_part && last_part <= n - depth);
    Ok(SdsDecomposition {
        n,
        m,
        depth,
        last_part,
    })
}

/// Recovers `m = (k-1)(2n-k)/2 + p_k` from a decomposition.
pub fn sds_reconstruct(d: &SdsDecomposition) -> u64 {
    (full_prefix(d.n, d.depth - 1) + d.last_part as u128) as u64
}

/// A count written as `C(s, 2) + t` with `0 < t <= s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ErdosDecomposition {
    /// The decomposed count: `C(n,2) - m` for the independent-set form, `m` for cliques.
    pub value: u64,
    /// `s`.
    pub base: u64,
    /// `t`.
    pub remainder: u64,
}

/// Decomposes a raw edge count, as used by the clique bound.
pub fn erdos_decompose(m: u64) -> Result<ErdosDecomposition> {
    let (base, remainder) = triangular_decompose(m)?;
    Ok(ErdosDecomposition {
        value: m,
        base,
        remainder,
    })
}

/// Decomposes the non-edge count `C(n,2) - m`; requires `m < C(n,2)`.
pub fn erdos_decompose_for_independent_sets(n: u64, m: u64) -> Result<ErdosDecomposition> {
    if n < 2 {
        return Err(Error::OrderTooSmall { n, min: 2 });
    }
    let max = max_edges(n)?;
    if m >= max {
        return Err(Error::EdgeCountOutOfRange {
            n,
            m,
            min: 0,
            max: max - 1,
        });
    }
    erdos_decompose(max - m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::is_exact_triangular;

    fn brute_force_sds(n: u64, m: u64) -> Vec<(u64, u64)> {
        let mut found = Vec::new();
        for k in 1..n {
            let lead: u64 = (1..k).map(|i| n - i).sum();
            for p in 1..=n - k {
                if lead + p == m {
                    found.push((k, p));
                }
            }
        }
        found
    }

    #[test]
    fn sds_examples() {
        let d = sds_decompose(5, 6).unwrap();
        assert_eq!((d.depth, d.last_part), (2, 2));
        let d = sds_decompose(5, 10).unwrap();
        assert_eq!((d.depth, d.last_part), (4, 1));
        for n in 2..20 {
            let d = sds_decompose(n, 1).unwrap();
            assert_eq!((d.depth, d.last_part), (1, 1));
        }
    }

    #[test]
    fn sds_rejects_out_of_range() {
        assert!(matches!(
            sds_decompose(5, 0),
            Err(Error::EdgeCountOutOfRange { .. })
        ));
        assert!(matches!(
            sds_decompose(5, 11),
            Err(Error::EdgeCountOutOfRange { .. })
        ));
        assert!(matches!(sds_decompose(1, 0), Err(Error::OrderTooSmall { .. })));
    }

    #[test]
    fn reconstruct_examples() {
        let d = |n, depth, last_part| SdsDecomposition {
            n,
            m: 0,
            depth,
            last_part,
        };
        assert_eq!(sds_reconstruct(&d(5, 2, 2)), 6);
        assert_eq!(sds_reconstruct(&d(5, 4, 1)), 10);
        assert_eq!(sds_reconstruct(&d(9, 1, 3)), 3);
    }

    #[test]
    fn erdos_examples() {
        let e = erdos_decompose_for_independent_sets(5, 6).unwrap();
        assert_eq!((e.value, e.base, e.remainder), (4, 3, 1));
        let e = erdos_decompose_for_independent_sets(5, 7).unwrap();
        assert_eq!((e.base, e.remainder), (2, 2));
        let e = erdos_decompose_for_independent_sets(5, 9).unwrap();
        assert_eq!((e.base, e.remainder), (1, 1));
        assert!(erdos_decompose_for_independent_sets(5, 10).is_err());
    }

    #[test]
    fn unique_and_round_trips_up_to_sixty() {
        for n in 2..=60u64 {
            for m in 1..=n * (n - 1) / 2 {
                let d = sds_decompose(n, m).unwrap();
                assert_eq!(brute_force_sds(n, m), vec![(d.depth, d.last_part)]);
                assert_eq!(sds_reconstruct(&d), m);
            }
        }
    }

    #[test]
    fn bridge_between_parameterizations() {
        for n in 2..=60u64 {
            let pairs = n * (n - 1) / 2;
            for m in 1..pairs {
                let d = sds_decompose(n, m).unwrap();
                let e = erdos_decompose_for_independent_sets(n, m).unwrap();
                let q = d.tail_len();
                if d.is_full() {
                    assert_eq!((e.base, e.remainder), (q - 1, q - 1), "n={n} m={m}");
                    assert_eq!(is_exact_triangular(pairs - m), Some(q - 1));
                } else {
                    assert_eq!((e.base, e.remainder), (q, q - d.last_part), "n={n} m={m}");
                    assert_eq!(is_exact_triangular(pairs - m), None);
                }
            }
        }
    }

    #[test]
    fn large_orders_stay_exact() {
        let n = 3_000_000_000u64;
        let max = max_edges(n).unwrap();
        let d = sds_decompose(n, max).unwrap();
        assert_eq!((d.depth, d.last_part), (n - 1, 1));
        let d = sds_decompose(n, max - 1).unwrap();
        assert_eq!(sds_reconstruct(&d), max - 1);
        assert_eq!((d.depth, d.last_part), (n - 2, 2));
        let d = sds_decompose(n, n - 1).unwrap();
        assert_eq!((d.depth, d.last_part), (1, n - 1));
        let d = sds_decompose(n, n).unwrap();
        assert_eq!((d.depth, d.last_part), (2, 1));
        assert!(max_edges(u64::MAX).is_err());
    }
}
