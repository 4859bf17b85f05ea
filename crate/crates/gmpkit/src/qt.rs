//! Quasi-twisted (QT) codes and their conversion to and from GMP form.
//!
//! A λ-QT code of index ℓ and co-index m is a subspace of F_q^{mℓ} invariant
//! under applying the constacyclic shift T_λ simultaneously to all ℓ blocks
//! of m coordinates. In polynomial form it is an R-submodule of R^ℓ for
//! R = F_q\[x\]/(x^m − λ), described by a generator polynomial matrix (GPM)
//! whose rows generate the submodule.

use crate::code::LinearCode;
use crate::field::{Field, FieldElem};
use crate::gmp::GmpSpec;
use crate::matrix::Matrix;
use crate::ring::{Poly, Ring, RingElem, RingSpec};
use crate::{Error, Result};

/// The m×m constacyclic shift matrix: λ in the top-right corner, ones on the
/// subdiagonal. Multiplying a column by T_λ shifts its entries down and
/// wraps the last entry to the top scaled by λ.
pub fn t_lambda(field: &Field, m: usize, lambda: &FieldElem) -> Result<Matrix> {
    if !lambda.field().same_as(field) {
        return Err(Error::FieldMismatch);
    }
    if lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    if m == 0 {
        return Err(Error::EmptyMatrix);
    }
    let mut t = Matrix::zero(field, m, m)?;
    t.set_code(0, m - 1, lambda.code());
    for i in 1..m {
        t.set_code(i, i - 1, 1);
    }
    Ok(t)
}

/// Recognizes a matrix of the exact `t_lambda` shape and returns its λ.
fn shift_form_lambda(t: &Matrix) -> Result<FieldElem> {
    let m = t.rows();
    let lambda = t.get(0, m - 1);
    if lambda.is_zero() {
        return Err(Error::NotShiftForm);
    }
    let expected = t_lambda(t.field(), m, &lambda)?;
    if *t != expected {
        return Err(Error::NotShiftForm);
    }
    Ok(lambda)
}

/// A QT code given by a generator polynomial matrix over R = F_q\[x\]/(x^m − λ).
#[derive(Clone, Debug)]
pub struct QtSpec {
    ring: Ring,
    ell: usize,
    gpm: Vec<Vec<RingElem>>,
}

/// The intermediate pieces of the QT → GMP conversion.
#[derive(Debug)]
pub struct QtDecomposition {
    /// Row gcds g_1, …, g_M (monic).
    pub gs: Vec<Poly>,
    /// 𝔊′ with entries g_{i,t} / g_i.
    pub gprime: Vec<Vec<Poly>>,
    /// Coefficient matrices A_0, …, A_r read off 𝔊′ = Σ_k x^k A_k.
    pub mats: Vec<Matrix>,
    /// Constituent constacyclic codes C_i = ⟨g_i⟩.
    pub codes: Vec<LinearCode>,
}

impl QtSpec {
    /// Validates that the GPM is a nonempty rectangle over one ring.
    pub fn new(ring: &Ring, gpm: Vec<Vec<RingElem>>) -> Result<Self> {
        let ell = gpm.first().map(Vec::len).unwrap_or(0);
        if gpm.is_empty() || ell == 0 {
            return Err(Error::SpecInvalid(
                "generator polynomial matrix needs at least one row and one column".into(),
            ));
        }
        for row in &gpm {
            if row.len() != ell {
                return Err(Error::ShapeMismatch(format!(
                    "ragged generator polynomial matrix: expected {ell} entries per row, got {}",
                    row.len()
                )));
            }
            for e in row {
                if !e.ring().same_as(ring) {
                    return Err(Error::RingMismatch);
                }
            }
        }
        Ok(QtSpec { ring: ring.clone(), ell, gpm })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Index ℓ (number of blocks).
    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Co-index m (block length).
    pub fn m(&self) -> usize {
        self.ring.m()
    }

    pub fn gpm(&self) -> &[Vec<RingElem>] {
        &self.gpm
    }

    /// Length of the expanded code, mℓ.
    pub fn length(&self) -> usize {
        self.m() * self.ell
    }

    /// Expands the GPM to a generator matrix over F_q: for every row g of
    /// the GPM and every shift j < m, one row vec([φ⁻¹(x^j g_1) ⋯ φ⁻¹(x^j g_ℓ)]).
    pub fn expand(&self) -> Result<LinearCode> {
        let mut rows = Vec::with_capacity(self.gpm.len() * self.m());
        for grow in &self.gpm {
            for j in 0..self.m() {
                let shifted: Vec<RingElem> = grow.iter().map(|e| e.mul_xk(j)).collect();
                rows.push(self.ring.phi_inv_mat(&shifted)?.vec_row());
            }
        }
        Ok(LinearCode::from_gen(Matrix::vstack(&rows)?))
    }

    /// QT → GMP: factors each GPM row as g_i · (row of 𝔊′), reads the
    /// coefficient matrices A_k off 𝔊′ = Σ_k x^k A_k, and assembles the GMP
    /// spec with T = T_λ and constituent codes C_i = ⟨g_i⟩. A GPM row of
    /// zeros has no factorization and is rejected.
    pub fn to_gmp(&self) -> Result<(QtDecomposition, GmpSpec)> {
        let field = self.ring.field().clone();
        let mut gs = Vec::new();
        let mut gprime = Vec::new();
        for (i, grow) in self.gpm.iter().enumerate() {
            let mut g: Option<Poly> = None;
            for e in grow {
                if e.is_zero() {
                    continue;
                }
                g = Some(match g {
                    None => e.rep().monic(),
                    Some(acc) => acc.gcd(e.rep())?,
                });
            }
            let g = g.ok_or(Error::ZeroGpmRow(i + 1))?;
            let mut prow = Vec::with_capacity(self.ell);
            for e in grow {
                let (quot, rem) = e.rep().divmod(&g)?;
                debug_assert!(rem.is_zero(), "row gcd must divide every entry");
                prow.push(quot);
            }
            gs.push(g);
            gprime.push(prow);
        }
        let r = gprime
            .iter()
            .flatten()
            .filter_map(Poly::degree)
            .max()
            .unwrap_or(0);
        let mut mats = Vec::with_capacity(r + 1);
        for k in 0..=r {
            mats.push(Matrix::from_fn(&field, self.gpm.len(), self.ell, |i, t| {
                gprime[i][t].coeff(k)
            })?);
        }
        let codes: Vec<LinearCode> =
            gs.iter().map(|g| LinearCode::constacyclic(&self.ring, g)).collect::<Result<_>>()?;
        let t = t_lambda(&field, self.m(), &self.ring.lambda())?;
        let spec = GmpSpec::new(t, codes.clone(), mats.clone())?;
        Ok((QtDecomposition { gs, gprime, mats, codes }, spec))
    }
}

/// GMP → QT: requires T to be exactly T_λ, every constituent code to be
/// constacyclic over F_q\[x\]/(x^m − λ), and r ≤ m − 1. The GPM row for code
/// i is g_i · Σ_k x^k (row i of A_k), reduced in the ring.
pub fn gmp_to_qt(spec: &GmpSpec) -> Result<QtSpec> {
    let lambda = shift_form_lambda(spec.t())?;
    let ring = RingSpec::new(spec.field(), spec.m(), &lambda)?;
    let r = spec.r();
    if r > spec.m() - 1 {
        return Err(Error::DegreeTooHigh { r, max: spec.m() - 1 });
    }
    let mut gens = Vec::with_capacity(spec.num_codes());
    for (i, code) in spec.codes().iter().enumerate() {
        match code.constacyclic_info() {
            Some((code_ring, g_star)) if code_ring.same_as(&ring) => gens.push(g_star.clone()),
            Some(_) => return Err(Error::RingMismatch),
            None => return Err(Error::NoConstacyclicGenerator(i + 1)),
        }
    }
    let mut gpm = Vec::with_capacity(spec.num_codes());
    for (i, g) in gens.iter().enumerate() {
        let mut row = Vec::with_capacity(spec.num_blocks());
        for t in 0..spec.num_blocks() {
            // Σ_k A_k[i][t] x^k, then multiply by g_i in the ring
            let coeffs: Vec<FieldElem> =
                (0..=r).map(|k| spec.mats()[k].get(i, t)).collect();
            let profile = Poly::from_elems(spec.field(), &coeffs)?;
            row.push(RingElem::from_poly(&ring, &profile.mul(g)?)?);
        }
        gpm.push(row);
    }
    QtSpec::new(&ring, gpm)
}

/// Checks that a code of length mℓ is invariant under the blockwise
/// constacyclic shift: every basis row, reshaped column-major to m×ℓ,
/// left-multiplied by T_λ and flattened again, must stay in the code.
pub fn invariance_check(code: &LinearCode, ring: &Ring) -> Result<bool> {
    let m = ring.m();
    if !code.length().is_multiple_of(m) {
        return Err(Error::ShapeMismatch(format!(
            "code length {} is not a multiple of m = {m}",
            code.length()
        )));
    }
    let ell = code.length() / m;
    let t = t_lambda(ring.field(), m, &ring.lambda())?;
    let Some(basis) = code.basis() else {
        return Ok(true);
    };
    for i in 1..=basis.rows() {
        let word = basis.take_rows(&[i])?;
        let shifted = t.mul(&word.reshape_col_major(m, ell)?)?.vec_row();
        if !code.contains(&shifted)? {
            return Ok(false);
        }
    }
    Ok(true)
}
