//! Closed-form bounds, evaluated with exact integers in both parameterizations.

use crate::arith::{binom, floor_sqrt_quarter_plus_half, is_exact_triangular, Count};
use crate::error::{Error, Result};
use crate::sds::{
    check_edge_count, erdos_decompose, erdos_decompose_for_independent_sets, sds_decompose,
    ErdosDecomposition, SdsDecomposition,
};

/// How `s` from the non-edge decomposition relates to the sharp independence bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SRelation {
    /// `s = alpha_u`
    EqualsAlphaUpper,
    /// `s = alpha_u - 1`, when `C(n,2) - m = C(s,2) + s`
    EqualsAlphaUpperMinusOne,
}

impl SRelation {
    pub fn as_str(&self) -> &'static str {
        match self {
            SRelation::EqualsAlphaUpper => "S_EQUALS_ALPHA_U",
            SRelation::EqualsAlphaUpperMinusOne => "S_EQUALS_ALPHA_U_MINUS_1",
        }
    }
}

fn check_size(r: u64, min: u64) -> Result<()> {
    if r < min {
        return Err(Error::SizeOutOfRange { r, min });
    }
    Ok(())
}

/// Sharp upper bound on the independence number of a graph with `n` vertices and `m` edges: `n - k`.
pub fn alpha_upper(n: u64, m: u64) -> Result<u64> {
    check_edge_count(n, m, 0)?;
    if m == 0 {
        return Ok(n);
    }
    Ok(sds_decompose(n, m)?.tail_len())
}

/// The same bound as `floor(1/2 + sqrt(1/4 + n^2 - n - 2m))`.
pub fn alpha_upper_closed_form(n: u64, m: u64) -> Result<u64> {
    check_edge_count(n, m, 0)?;
    if n == 0 {
        return Ok(0);
    }
    let d = n as u128 * (n as u128).saturating_sub(1) - 2 * m as u128;
    Ok(floor_sqrt_quarter_plus_half(d) as u64)
}

/// `C(n-k-p_k, r-1) + C(n-k, r)`, the sharp bound on `i_r`; exact for `L(n, m)`.
pub fn ir_upper_lex(n: u64, m: u64, r: u64) -> Result<Count> {
    check_size(r, 2)?;
    check_edge_count(n, m, 0)?;
    if m == 0 {
        return Ok(binom(n, r));
    }
    let d = sds_decompose(n, m)?;
    Ok(lex_form(&d, r))
}

fn lex_form(d: &SdsDecomposition, r: u64) -> Count {
    let q = d.tail_len();
    binom(q - d.last_part, r - 1) + binom(q, r)
}

/// `C(s, r) + C(t, r-1)` with `C(n,2) - m = C(s,2) + t`.
pub fn ir_upper_erdos(n: u64, m: u64, r: u64) -> Result<Count> {
    check_size(r, 2)?;
    let max = check_edge_count(n, m, 0)?;
    if m == max {
        return Ok(Count::default());
    }
    let e = erdos_decompose_for_independent_sets(n, m)?;
    Ok(erdos_form(&e, r))
}

fn erdos_form(e: &ErdosDecomposition, r: u64) -> Count {
    binom(e.base, r) + binom(e.remainder, r - 1)
}

/// Maximum number of `r`-cliques in a graph with `m` edges; independent of the order.
pub fn cr_upper(m: u64, r: u64) -> Result<Count> {
    check_size(r, 3)?;
    if m == 0 {
        return Ok(Count::default());
    }
    Ok(erdos_form(&erdos_decompose(m)?, r))
}

/// Requires `0 < m < C(n, 2)`.
pub fn s_alpha_relation(n: u64, m: u64) -> Result<SRelation> {
    let max = check_edge_count(n, m, 1)?;
    if m == max {
        return Err(Error::EdgeCountOutOfRange {
            n,
            m,
            min: 1,
            max: max - 1,
        });
    }
    let relation = if is_exact_triangular(max - m).is_some() {
        SRelation::EqualsAlphaUpperMinusOne
    } else {
        SRelation::EqualsAlphaUpper
    };
    let s = erdos_decompose_for_independent_sets(n, m)?.base;
    let alpha = alpha_upper(n, m)?;
    let direct = match alpha - s {
        0 => SRelation::EqualsAlphaUpper,
        1 => SRelation::EqualsAlphaUpperMinusOne,
        gap => panic!("s = {s} is {gap} below alpha_u = {alpha} for n = {n}, m = {m}"),
    };
    assert_eq!(relation, direct, "n = {n}, m = {m}");
    Ok(relation)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrBound {
    pub r: u64,
    pub lex: Count,
    pub erdos: Count,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub n: u64,
    pub m: u64,
    /// Absent for the empty graph.
    pub sds: Option<SdsDecomposition>,
    /// Absent for the empty and the complete graph.
    pub erdos: Option<ErdosDecomposition>,
    pub alpha_upper: u64,
    pub s_relation: Option<SRelation>,
    pub entries: Vec<IrBound>,
}

/// All bounds for `r = 2..=r_max`, with `r_max <= n`.
pub fn bound_report(n: u64, m: u64, r_max: u64) -> Result<BoundReport> {
    bound_report_for(n, m, &(2..=r_max).collect::<Vec<_>>())
}

/// All bounds for the given sizes, each in `2..=n`.
pub fn bound_report_for(n: u64, m: u64, sizes: &[u64]) -> Result<BoundReport> {
    let max = check_edge_count(n, m, 0)?;
    for &r in sizes {
        check_size(r, 2)?;
        if r > n {
            return Err(Error::SizeExceedsOrder { r, n });
        }
    }
    let interior = m > 0 && m < max;
    let sds = if m > 0 { Some(sds_decompose(n, m)?) } else { None };
    let erdos = if interior {
        Some(erdos_decompose_for_independent_sets(n, m)?)
    } else {
        None
    };
    let s_relation = if interior {
        Some(s_alpha_relation(n, m)?)
    } else {
        None
    };
    let alpha = alpha_upper(n, m)?;
    assert_eq!(alpha, alpha_upper_closed_form(n, m)?);

    let mut entries = Vec::with_capacity(sizes.len());
    for &r in sizes {
        let lex = ir_upper_lex(n, m, r)?;
        let erdos = ir_upper_erdos(n, m, r)?;
        assert_eq!(lex, erdos, "i_{r} forms disagree for n = {n}, m = {m}");
        entries.push(IrBound { r, lex, erdos });
    }
    Ok(BoundReport {
        n,
        m,
        sds,
        erdos,
        alpha_upper: alpha,
        s_relation,
        entries,
    })
}
