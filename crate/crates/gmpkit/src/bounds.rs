//! Minimum-distance lower bounds for generalized matrix product codes.
//!
//! Both bounds apply when the stacked defining matrices `[A_0; ...; A_r]`
//! have rank `M + rank[A_1; ...; A_r]`, i.e. the rows of `A_0` stay
//! independent modulo the span of the shifted layers. When the condition
//! fails the report comes back with `applicable = false` and a reason
//! string instead of an error, so callers can print a diagnosis.

use serde::Serialize;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gmp::GmpSpec;
use crate::matrix::Matrix;

/// Largest column count for which subset enumeration (tau search, NSC
/// test) is allowed; both walk all column subsets.
pub const MAX_SUBSET_COLUMNS: usize = 16;

/// Which lower bound a report was produced by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundMethod {
    /// Distance-of-row-span route: `min_t D_t * d(C_t)`.
    Thm61,
    /// Column-threshold route: `min_t (N - tau_t + 1) * d(C_t)`.
    Thm62,
    /// Classical matrix product bound `min_t (N - t + 1) * d(C_t)`;
    /// needs a plain MP code with a non-singular-by-columns matrix.
    MpBound1,
    /// Classical matrix product bound `min_t D_t * d(C_t)` for a plain
    /// MP code with a full-row-rank matrix.
    MpBound2,
}

impl BoundMethod {
    pub fn name(&self) -> &'static str {
        match self {
            BoundMethod::Thm61 => "thm61",
            BoundMethod::Thm62 => "thm62",
            BoundMethod::MpBound1 => "mp_bound1",
            BoundMethod::MpBound2 => "mp_bound2",
        }
    }
}

impl std::fmt::Display for BoundMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// One row of a bound computation: the per-constituent term.
#[derive(Clone, Debug, Serialize)]
pub struct PerT {
    /// Constituent index, 1-based.
    pub t: usize,
    /// The method-specific parameter: `D_t` for the span route, `tau_t`
    /// for the threshold route, `t` itself for the classical MP bound.
    pub param: usize,
    /// Minimum distance of the constituent code `C_t`.
    pub code_dist: u32,
    /// The term this constituent contributes to the minimum.
    pub term: u64,
}

/// Outcome of a bound computation.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub method: BoundMethod,
    /// False when a precondition fails; `reason` then says which.
    pub applicable: bool,
    pub reason: Option<String>,
    pub per_t: Vec<PerT>,
    /// `min` over the `per_t` terms; `None` when not applicable.
    pub bound: Option<u64>,
    /// True distance, if the caller chose to compute it.
    pub actual: Option<u32>,
}

impl BoundReport {
    fn not_applicable(method: BoundMethod, reason: String, per_t: Vec<PerT>) -> Self {
        BoundReport {
            method,
            applicable: false,
            reason: Some(reason),
            per_t,
            bound: None,
            actual: None,
        }
    }
}

/// Checks the shared precondition of both bounds. Returns
/// `(met, full_rank, tail_rank)` where `full_rank = rank[A_0;...;A_r]`,
/// `tail_rank = rank[A_1;...;A_r]` (zero when `r = 0`), and the
/// condition is `full_rank == M + tail_rank`.
pub fn rank_condition(mats: &[Matrix]) -> Result<(bool, usize, usize)> {
    if mats.is_empty() {
        return Err(Error::SpecInvalid(
            "rank condition needs at least one defining matrix".into(),
        ));
    }
    let m_rows = mats[0].rows();
    let full = Matrix::vstack(mats)?.rank();
    let tail = if mats.len() > 1 {
        Matrix::vstack(&mats[1..])?.rank()
    } else {
        0
    };
    Ok((full == m_rows + tail, full, tail))
}

/// Stacks the first `t` rows of every defining matrix into one matrix.
fn stacked_prefix(mats: &[Matrix], t: usize) -> Result<Matrix> {
    let indices: Vec<usize> = (1..=t).collect();
    let parts: Vec<Matrix> = mats
        .iter()
        .map(|a| a.take_rows(&indices))
        .collect::<Result<_>>()?;
    Matrix::vstack(&parts)
}

/// `D_t`: the minimum distance of the length-`N` code spanned by the
/// first `t` rows of all defining matrices. Errors with `ZeroSpan` when
/// those rows span only the zero vector.
pub fn compute_d_t(mats: &[Matrix], t: usize, cap: u64) -> Result<u32> {
    let stacked = stacked_prefix(mats, t)?;
    if stacked.row_basis().is_none() {
        return Err(Error::ZeroSpan);
    }
    LinearCode::from_gen(stacked).min_distance(cap)
}

/// Advances `idx` to the next ascending `k`-subset of `0..n` in
/// lexicographic order; returns false when exhausted.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// `tau_t`: the smallest number of columns such that for *every* column
/// subset of that size, the first `t` rows of `A_0` (restricted to the
/// subset) contribute one more rank than the first `t - 1` rows do, on
/// top of the shifted layers. Returns `Ok(None)` when no size works.
pub fn compute_tau(mats: &[Matrix], t: usize) -> Result<Option<usize>> {
    if mats.is_empty() {
        return Err(Error::SpecInvalid(
            "tau needs at least one defining matrix".into(),
        ));
    }
    let n_cols = mats[0].cols();
    if n_cols > MAX_SUBSET_COLUMNS {
        return Err(Error::TooManyColumns {
            cols: n_cols,
            max: MAX_SUBSET_COLUMNS,
        });
    }
    let rows_t: Vec<usize> = (1..=t).collect();
    let rows_t1: Vec<usize> = (1..t).collect();
    let lhs = stacked_prefix(mats, t)?;
    let mut rhs_parts: Vec<Matrix> = Vec::new();
    if t > 1 {
        rhs_parts.push(mats[0].take_rows(&rows_t1)?);
    }
    for a in &mats[1..] {
        rhs_parts.push(a.take_rows(&rows_t)?);
    }
    let rhs = if rhs_parts.is_empty() {
        None
    } else {
        Some(Matrix::vstack(&rhs_parts)?)
    };

    'tau: for tau in 1..=n_cols {
        let mut idx: Vec<usize> = (0..tau).collect();
        loop {
            let cols: Vec<usize> = idx.iter().map(|&c| c + 1).collect();
            let lhs_rank = lhs.take_cols(&cols)?.rank();
            let rhs_rank = match &rhs {
                Some(m) => m.take_cols(&cols)?.rank(),
                None => 0,
            };
            if lhs_rank != rhs_rank + 1 {
                continue 'tau;
            }
            if !next_combination(&mut idx, n_cols) {
                return Ok(Some(tau));
            }
        }
    }
    Ok(None)
}

/// Tests whether a matrix is non-singular by columns: for each
/// `t = 1..=M`, every `t x t` submatrix of the first `t` rows is
/// invertible. Requires `M <= N`.
pub fn is_nsc(a: &Matrix) -> Result<bool> {
    let (m_rows, n_cols) = (a.rows(), a.cols());
    if m_rows > n_cols {
        return Err(Error::NscShape {
            rows: m_rows,
            cols: n_cols,
        });
    }
    if n_cols > MAX_SUBSET_COLUMNS {
        return Err(Error::TooManyColumns {
            cols: n_cols,
            max: MAX_SUBSET_COLUMNS,
        });
    }
    for t in 1..=m_rows {
        let rows: Vec<usize> = (1..=t).collect();
        let prefix = a.take_rows(&rows)?;
        let mut idx: Vec<usize> = (0..t).collect();
        loop {
            let cols: Vec<usize> = idx.iter().map(|&c| c + 1).collect();
            if prefix.take_cols(&cols)?.rank() != t {
                return Ok(false);
            }
            if !next_combination(&mut idx, n_cols) {
                break;
            }
        }
    }
    Ok(true)
}

fn rank_condition_reason(full: usize, m_rows: usize, tail: usize) -> String {
    format!(
        "rank condition not met: rank[A_0;..;A_r] = {} but M + rank[A_1;..;A_r] = {} + {} = {}",
        full,
        m_rows,
        tail,
        m_rows + tail
    )
}

/// Lower bound via row-span distances: `min_t D_t * d(C_t)`.
pub fn bound_thm61(spec: &GmpSpec, cap: u64) -> Result<BoundReport> {
    let mats = spec.mats();
    let (met, full, tail) = rank_condition(mats)?;
    if !met {
        return Ok(BoundReport::not_applicable(
            BoundMethod::Thm61,
            rank_condition_reason(full, spec.num_codes(), tail),
            Vec::new(),
        ));
    }
    let mut per_t = Vec::new();
    let mut bound: Option<u64> = None;
    for (i, code) in spec.codes().iter().enumerate() {
        let t = i + 1;
        let d_t = compute_d_t(mats, t, cap)?;
        let code_dist = code.min_distance(cap)?;
        let term = u64::from(d_t) * u64::from(code_dist);
        per_t.push(PerT {
            t,
            param: d_t as usize,
            code_dist,
            term,
        });
        bound = Some(bound.map_or(term, |b| b.min(term)));
    }
    Ok(BoundReport {
        method: BoundMethod::Thm61,
        applicable: true,
        reason: None,
        per_t,
        bound,
        actual: None,
    })
}

/// Lower bound via column thresholds: `min_t (N - tau_t + 1) * d(C_t)`.
pub fn bound_thm62(spec: &GmpSpec, cap: u64) -> Result<BoundReport> {
    let mats = spec.mats();
    let (met, full, tail) = rank_condition(mats)?;
    if !met {
        return Ok(BoundReport::not_applicable(
            BoundMethod::Thm62,
            rank_condition_reason(full, spec.num_codes(), tail),
            Vec::new(),
        ));
    }
    let n_cols = spec.num_blocks();
    let mut per_t = Vec::new();
    let mut bound: Option<u64> = None;
    for (i, code) in spec.codes().iter().enumerate() {
        let t = i + 1;
        let tau = match compute_tau(mats, t)? {
            Some(tau) => tau,
            None => {
                return Ok(BoundReport::not_applicable(
                    BoundMethod::Thm62,
                    format!("no column threshold tau_{t} exists"),
                    per_t,
                ));
            }
        };
        let code_dist = code.min_distance(cap)?;
        let term = (n_cols - tau + 1) as u64 * u64::from(code_dist);
        per_t.push(PerT {
            t,
            param: tau,
            code_dist,
            term,
        });
        bound = Some(bound.map_or(term, |b| b.min(term)));
    }
    Ok(BoundReport {
        method: BoundMethod::Thm62,
        applicable: true,
        reason: None,
        per_t,
        bound,
        actual: None,
    })
}

fn mp_matrix(spec: &GmpSpec) -> std::result::Result<Matrix, String> {
    match spec.mp_collapse() {
        (true, Some(a)) => Ok(a),
        _ => Err(
            "not a plain matrix product code: needs a single defining matrix (r = 0), T = 0, or T = I"
                .into(),
        ),
    }
}

/// Classical matrix product bound `min_t (N - t + 1) * d(C_t)`; applies
/// to plain MP codes whose matrix is non-singular by columns.
pub fn bound_mp1(spec: &GmpSpec, cap: u64) -> Result<BoundReport> {
    let a = match mp_matrix(spec) {
        Ok(a) => a,
        Err(reason) => {
            return Ok(BoundReport::not_applicable(
                BoundMethod::MpBound1,
                reason,
                Vec::new(),
            ));
        }
    };
    if a.rows() > a.cols() {
        return Ok(BoundReport::not_applicable(
            BoundMethod::MpBound1,
            format!(
                "non-singular by columns needs M <= N, got {} x {}",
                a.rows(),
                a.cols()
            ),
            Vec::new(),
        ));
    }
    if !is_nsc(&a)? {
        return Ok(BoundReport::not_applicable(
            BoundMethod::MpBound1,
            "defining matrix is not non-singular by columns".into(),
            Vec::new(),
        ));
    }
    let n_cols = a.cols();
    let mut per_t = Vec::new();
    let mut bound: Option<u64> = None;
    for (i, code) in spec.codes().iter().enumerate() {
        let t = i + 1;
        let code_dist = code.min_distance(cap)?;
        let term = (n_cols - t + 1) as u64 * u64::from(code_dist);
        per_t.push(PerT {
            t,
            param: t,
            code_dist,
            term,
        });
        bound = Some(bound.map_or(term, |b| b.min(term)));
    }
    Ok(BoundReport {
        method: BoundMethod::MpBound1,
        applicable: true,
        reason: None,
        per_t,
        bound,
        actual: None,
    })
}

/// Classical matrix product bound `min_t D_t * d(C_t)` for plain MP
/// codes with a full-row-rank matrix.
pub fn bound_mp2(spec: &GmpSpec, cap: u64) -> Result<BoundReport> {
    let a = match mp_matrix(spec) {
        Ok(a) => a,
        Err(reason) => {
            return Ok(BoundReport::not_applicable(
                BoundMethod::MpBound2,
                reason,
                Vec::new(),
            ));
        }
    };
    let rank = a.rank();
    if rank != a.rows() {
        return Ok(BoundReport::not_applicable(
            BoundMethod::MpBound2,
            format!(
                "defining matrix has rank {} but full row rank {} is needed",
                rank,
                a.rows()
            ),
            Vec::new(),
        ));
    }
    let single = [a];
    let mut per_t = Vec::new();
    let mut bound: Option<u64> = None;
    for (i, code) in spec.codes().iter().enumerate() {
        let t = i + 1;
        let d_t = compute_d_t(&single, t, cap)?;
        let code_dist = code.min_distance(cap)?;
        let term = u64::from(d_t) * u64::from(code_dist);
        per_t.push(PerT {
            t,
            param: d_t as usize,
            code_dist,
            term,
        });
        bound = Some(bound.map_or(term, |b| b.min(term)));
    }
    Ok(BoundReport {
        method: BoundMethod::MpBound2,
        applicable: true,
        reason: None,
        per_t,
        bound,
        actual: None,
    })
}

/// Dispatches to the bound routine named by `method`.
pub fn bound_by_method(spec: &GmpSpec, method: BoundMethod, cap: u64) -> Result<BoundReport> {
    match method {
        BoundMethod::Thm61 => bound_thm61(spec, cap),
        BoundMethod::Thm62 => bound_thm62(spec, cap),
        BoundMethod::MpBound1 => bound_mp1(spec, cap),
        BoundMethod::MpBound2 => bound_mp2(spec, cap),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DEFAULT_DISTANCE_CAP;
    use crate::field::FieldSpec;

    const CAP: u64 = DEFAULT_DISTANCE_CAP;

    fn spec_from_strs(p: u64, m_t: &str, gens: &[&str], mats: &[&str]) -> GmpSpec {
        let f = FieldSpec::prime(p).unwrap();
        let t = Matrix::parse(&f, m_t).unwrap();
        let codes = gens
            .iter()
            .map(|g| LinearCode::from_gen(Matrix::parse(&f, g).unwrap()))
            .collect();
        let mats = mats
            .iter()
            .map(|a| Matrix::parse(&f, a).unwrap())
            .collect();
        GmpSpec::new(t, codes, mats).unwrap()
    }

    fn binary_two_block() -> GmpSpec {
        spec_from_strs(
            2,
            "0,1,0,0;0,1,1,0;1,1,0,0;1,1,1,1",
            &[
                "1,0,0,1;0,1,0,1;0,0,1,1",
                "1,0,0,1;0,1,0,1;0,0,1,1",
            ],
            &["0,1,1,1,1;1,0,1,1,1", "1,1,0,1,1;1,0,0,1,0"],
        )
    }

    fn ternary_three_block() -> GmpSpec {
        spec_from_strs(
            3,
            "0,1,2,2,1;2,2,2,1,2;1,1,1,2,1;1,2,0,0,0;0,2,1,1,2",
            &[
                "1,0,1,0,2;0,1,0,1,2",
                "1,0,1,0,2;0,1,0,1,2",
                "1,1,1,1,1",
            ],
            &[
                "0,0,2,2,0;2,2,0,2,1;1,0,2,0,2",
                "1,0,2,2,2;1,2,2,0,0;2,2,1,2,2",
            ],
        )
    }

    fn binary_long() -> GmpSpec {
        let g = "1,0,0,1,0,1,0,1,1,1;0,1,0,1,0,1,0,1,0,0;0,0,1,1,0,0,0,0,1,1;0,0,0,0,1,1,0,0,1,1;0,0,0,0,0,0,1,1,1,1";
        spec_from_strs(
            2,
            "0,0,0,0,0,0,0,0,0,1;0,0,0,0,0,0,0,0,1,0;0,0,0,0,0,0,0,1,0,0;0,0,0,0,0,0,1,0,0,0;0,0,0,0,0,1,0,0,0,0;0,0,0,0,1,0,0,0,0,0;0,0,0,1,0,0,0,0,0,0;0,0,1,0,0,0,0,0,0,0;0,1,0,0,0,0,0,0,0,0;1,0,0,0,0,0,0,0,0,0",
            &[g, g],
            &[
                "1,0,0,0,1,1,1,1,1;0,0,0,0,1,1,0,0,1",
                "0,1,0,0,1,0,0,0,0;1,0,1,1,0,1,1,1,1",
                "1,1,0,0,0,0,0,0,0;0,1,1,0,1,0,0,1,1",
                "0,0,1,0,0,0,0,1,1;1,0,1,1,0,1,1,1,1",
            ],
        )
    }

    fn septenary_three_block() -> GmpSpec {
        spec_from_strs(
            7,
            "0,2,0,2;0,6,0,3;1,3,4,1;6,4,0,6",
            &[
                "1,0,0,0;0,1,0,0;0,0,1,0;0,0,0,1",
                "1,0,6,3;0,1,3,3",
                "1,0,3,5;0,1,4,0",
            ],
            &[
                "6,6,4,1,5,6,4,4;4,2,0,6,2,4,6,2;0,3,3,2,6,1,0,0",
                "3,6,5,5,4,4,1,3;4,5,4,1,3,0,0,5;2,4,0,6,4,0,0,2",
            ],
        )
    }

    /// 4x7 matrix over F_5 that is full rank but not non-singular by
    /// columns, with trivial length-1 constituents so the per-t
    /// multipliers show through directly.
    fn quinary_mp() -> GmpSpec {
        spec_from_strs(
            5,
            "1",
            &["1", "1", "1", "1"],
            &["1,1,3,0,1,2,3;3,1,0,0,1,1,3;3,1,0,4,0,1,0;1,3,4,2,4,3,4"],
        )
    }

    fn params(report: &BoundReport) -> Vec<usize> {
        report.per_t.iter().map(|p| p.param).collect()
    }

    fn dists(report: &BoundReport) -> Vec<u32> {
        report.per_t.iter().map(|p| p.code_dist).collect()
    }

    #[test]
    fn rank_condition_examples() {
        assert_eq!(
            rank_condition(binary_two_block().mats()).unwrap(),
            (true, 4, 2)
        );
        assert_eq!(
            rank_condition(ternary_three_block().mats()).unwrap(),
            (true, 5, 2)
        );
        assert_eq!(rank_condition(binary_long().mats()).unwrap(), (true, 6, 4));
        assert_eq!(
            rank_condition(septenary_three_block().mats()).unwrap(),
            (true, 6, 3)
        );
    }

    #[test]
    fn rank_condition_failure_gives_inapplicable_reports() {
        let f = FieldSpec::prime(2).unwrap();
        let spec = GmpSpec::new(
            Matrix::identity(&f, 1).unwrap(),
            vec![
                LinearCode::from_gen(Matrix::parse(&f, "1").unwrap()),
                LinearCode::from_gen(Matrix::parse(&f, "1").unwrap()),
            ],
            vec![Matrix::parse(&f, "1,1;1,1").unwrap()],
        )
        .unwrap();
        assert_eq!(rank_condition(spec.mats()).unwrap(), (false, 1, 0));
        for method in [BoundMethod::Thm61, BoundMethod::Thm62] {
            let report = bound_by_method(&spec, method, CAP).unwrap();
            assert!(!report.applicable);
            assert_eq!(report.bound, None);
            assert!(report.reason.as_deref().unwrap().contains("rank condition"));
        }
    }

    #[test]
    fn span_route_on_binary_two_block() {
        let report = bound_thm61(&binary_two_block(), CAP).unwrap();
        assert!(report.applicable);
        assert_eq!(params(&report), vec![2, 2]);
        assert_eq!(dists(&report), vec![2, 2]);
        assert_eq!(report.bound, Some(4));
    }

    #[test]
    fn span_route_on_ternary_three_block() {
        let report = bound_thm61(&ternary_three_block(), CAP).unwrap();
        assert_eq!(params(&report), vec![2, 2, 1]);
        assert_eq!(dists(&report), vec![3, 3, 5]);
        assert_eq!(report.bound, Some(5));
    }

    #[test]
    fn span_route_on_binary_long() {
        let report = bound_thm61(&binary_long(), CAP).unwrap();
        assert_eq!(params(&report), vec![2, 2]);
        assert_eq!(dists(&report), vec![4, 4]);
        assert_eq!(report.bound, Some(8));
    }

    #[test]
    fn span_route_on_septenary_three_block() {
        let report = bound_thm61(&septenary_three_block(), CAP).unwrap();
        assert_eq!(params(&report), vec![6, 3, 2]);
        assert_eq!(dists(&report), vec![1, 3, 2]);
        assert_eq!(report.bound, Some(4));
    }

    #[test]
    fn threshold_route_on_binary_two_block() {
        let report = bound_thm62(&binary_two_block(), CAP).unwrap();
        assert!(report.applicable);
        assert_eq!(params(&report), vec![4, 4]);
        assert_eq!(report.bound, Some(4));
    }

    #[test]
    fn threshold_route_on_ternary_three_block() {
        let report = bound_thm62(&ternary_three_block(), CAP).unwrap();
        assert_eq!(params(&report), vec![4, 4, 5]);
        assert_eq!(report.bound, Some(5));
    }

    #[test]
    fn threshold_route_beats_span_route_on_binary_long() {
        let report = bound_thm62(&binary_long(), CAP).unwrap();
        assert_eq!(params(&report), vec![7, 7]);
        assert_eq!(report.bound, Some(12));
        let span = bound_thm61(&binary_long(), CAP).unwrap();
        assert!(report.bound.unwrap() > span.bound.unwrap());
    }

    #[test]
    fn threshold_route_on_septenary_three_block() {
        let report = bound_thm62(&septenary_three_block(), CAP).unwrap();
        assert_eq!(params(&report), vec![3, 6, 6]);
        let terms: Vec<u64> = report.per_t.iter().map(|p| p.term).collect();
        assert_eq!(terms, vec![6, 9, 6]);
        assert_eq!(report.bound, Some(6));
    }

    #[test]
    fn bounds_never_exceed_true_distance() {
        for (spec, expected_d) in [
            (binary_two_block(), 4),
            (ternary_three_block(), 5),
            (binary_long(), 12),
            (septenary_three_block(), 6),
        ] {
            let actual = spec.analyze().unwrap().code.min_distance(CAP).unwrap();
            assert_eq!(actual, expected_d);
            for method in [BoundMethod::Thm61, BoundMethod::Thm62] {
                let report = bound_by_method(&spec, method, CAP).unwrap();
                assert!(report.bound.unwrap() <= u64::from(actual));
            }
        }
    }

    #[test]
    fn full_rank_matrix_can_still_fail_nsc() {
        let spec = quinary_mp();
        let a = &spec.mats()[0];
        assert_eq!(a.rank(), 4);
        assert!(!is_nsc(a).unwrap());

        let mp1 = bound_mp1(&spec, CAP).unwrap();
        assert!(!mp1.applicable);
        assert!(mp1
            .reason
            .as_deref()
            .unwrap()
            .contains("non-singular by columns"));

        let t61 = bound_thm61(&spec, CAP).unwrap();
        assert_eq!(params(&t61), vec![6, 3, 3, 3]);
        assert_eq!(t61.bound, Some(3));

        let t62 = bound_thm62(&spec, CAP).unwrap();
        assert_eq!(params(&t62), vec![2, 5, 5, 4]);
        let terms: Vec<u64> = t62.per_t.iter().map(|p| p.term).collect();
        assert_eq!(terms, vec![6, 3, 3, 4]);
        assert_eq!(t62.bound, Some(3));

        let mp2 = bound_mp2(&spec, CAP).unwrap();
        assert!(mp2.applicable);
        assert_eq!(params(&mp2), vec![6, 3, 3, 3]);
        assert_eq!(mp2.bound, Some(3));
    }

    #[test]
    fn nsc_matrix_gives_tau_equal_t_and_matching_bounds() {
        let f = FieldSpec::prime(5).unwrap();
        let a = Matrix::parse(&f, "1,1,1;1,2,3").unwrap();
        assert!(is_nsc(&a).unwrap());
        let spec = GmpSpec::new(
            Matrix::parse(&f, "0,1;1,0").unwrap(),
            vec![
                LinearCode::from_gen(Matrix::parse(&f, "1,0;0,1").unwrap()),
                LinearCode::from_gen(Matrix::parse(&f, "1,1").unwrap()),
            ],
            vec![a],
        )
        .unwrap();
        for t in 1..=2 {
            assert_eq!(compute_tau(spec.mats(), t).unwrap(), Some(t));
        }
        let t62 = bound_thm62(&spec, CAP).unwrap();
        let mp1 = bound_mp1(&spec, CAP).unwrap();
        assert!(mp1.applicable);
        assert_eq!(t62.bound, Some(3));
        assert_eq!(mp1.bound, t62.bound);
        let t61 = bound_thm61(&spec, CAP).unwrap();
        let mp2 = bound_mp2(&spec, CAP).unwrap();
        assert_eq!(t61.bound, Some(3));
        assert_eq!(mp2.bound, t61.bound);
    }

    #[test]
    fn nsc_upper_triangular_with_unit_diagonal() {
        let f = FieldSpec::prime(2).unwrap();
        let a = Matrix::parse(&f, "1,1;0,1").unwrap();
        assert!(is_nsc(&a).unwrap());
        let id = Matrix::identity(&f, 2).unwrap();
        assert!(!is_nsc(&id).unwrap());
    }

    #[test]
    fn nsc_shape_and_size_guards() {
        let f = FieldSpec::prime(2).unwrap();
        let tall = Matrix::parse(&f, "1;1").unwrap();
        assert!(matches!(
            is_nsc(&tall),
            Err(Error::NscShape { rows: 2, cols: 1 })
        ));
        let wide = Matrix::zero(&f, 1, 17).unwrap();
        assert!(matches!(
            is_nsc(&wide),
            Err(Error::TooManyColumns { cols: 17, max: 16 })
        ));
        assert!(matches!(
            compute_tau(&[wide], 1),
            Err(Error::TooManyColumns { cols: 17, max: 16 })
        ));
    }

    #[test]
    fn tau_can_fail_to_exist() {
        let f = FieldSpec::prime(2).unwrap();
        let a = Matrix::parse(&f, "1,1;1,1").unwrap();
        assert_eq!(compute_tau(std::slice::from_ref(&a), 1).unwrap(), Some(1));
        assert_eq!(compute_tau(&[a], 2).unwrap(), None);
    }

    #[test]
    fn zero_span_is_an_error() {
        let f = FieldSpec::prime(2).unwrap();
        let a = Matrix::parse(&f, "0,0;1,1").unwrap();
        assert!(matches!(compute_d_t(&[a], 1, CAP), Err(Error::ZeroSpan)));
    }

    #[test]
    fn mp_bounds_reject_genuine_gmp_specs() {
        let spec = binary_two_block();
        for method in [BoundMethod::MpBound1, BoundMethod::MpBound2] {
            let report = bound_by_method(&spec, method, CAP).unwrap();
            assert!(!report.applicable);
            assert!(report
                .reason
                .as_deref()
                .unwrap()
                .contains("matrix product"));
        }
    }

    #[test]
    fn method_names() {
        assert_eq!(BoundMethod::Thm61.name(), "thm61");
        assert_eq!(BoundMethod::Thm62.name(), "thm62");
        assert_eq!(BoundMethod::MpBound1.to_string(), "mp_bound1");
        assert_eq!(BoundMethod::MpBound2.to_string(), "mp_bound2");
    }
}
