//! Linear codes over F_q, given by generator matrices or as λ-constacyclic
//! codes ⟨g(x)⟩ ⊆ F_q\[x\]/(x^m − λ).
//!
//! Minimum distance is computed by exhaustive enumeration of one projective
//! representative per codeword line, walking messages in mixed-radix Gray
//! order so each step touches only one basis row's support.

use std::sync::OnceLock;

use crate::field::Field;
use crate::matrix::Matrix;
use crate::ring::{Poly, Ring, RingElem};
use crate::{Error, Result};

/// Default ceiling on q^dim for exhaustive enumeration.
pub const DEFAULT_DISTANCE_CAP: u64 = 1 << 24;

/// A linear code C ⊆ F_q^n with a fixed generator matrix.
#[derive(Clone)]
pub struct LinearCode {
    field: Field,
    length: usize,
    gen: Matrix,
    /// Canonical RREF basis; `None` for the zero code.
    basis: Option<Matrix>,
    dim: usize,
    constacyclic: Option<ConstacyclicInfo>,
    dist: OnceLock<u32>,
}

/// Constacyclic provenance: the ambient ring and the normalized generator g*.
#[derive(Clone)]
struct ConstacyclicInfo {
    ring: Ring,
    g_star: Poly,
}

impl std::fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{},{}] code over F_{}", self.length, self.dim, self.field.q())
    }
}

impl LinearCode {
    /// Code spanned by the rows of `gen`; dimension is the rank, so
    /// dependent rows are fine and an all-zero matrix gives the zero code.
    pub fn from_gen(gen: Matrix) -> Self {
        let basis = gen.row_basis();
        let dim = basis.as_ref().map_or(0, Matrix::rows);
        LinearCode {
            field: gen.field().clone(),
            length: gen.cols(),
            gen,
            basis,
            dim,
            constacyclic: None,
            dist: OnceLock::new(),
        }
    }

    /// The λ-constacyclic code ⟨g⟩ in F_q\[x\]/(x^m − λ). The stored generator
    /// is normalized to g* = monic gcd(g, x^m − λ), whose shifts
    /// g*, x·g*, …, x^{m−deg−1}·g* give the generator matrix rows. A zero g
    /// is rejected; g* = x^m − λ itself yields the zero code.
    pub fn constacyclic(ring: &Ring, g: &Poly) -> Result<Self> {
        if !g.field().same_as(ring.field()) {
            return Err(Error::FieldMismatch);
        }
        if g.is_zero() {
            return Err(Error::ZeroGenerator);
        }
        let m = ring.m();
        let g_star = g.gcd(&ring.modulus_poly())?;
        let dim = m - g_star.degree().expect("gcd of nonzero polynomials is nonzero");
        let gen = if dim == 0 {
            Matrix::zero(ring.field(), 1, m)?
        } else {
            let rows: Vec<Matrix> = (0..dim)
                .map(|j| {
                    let shifted = RingElem::from_poly(ring, &g_star.mul_xk(j))?;
                    Ok(ring.phi_inv(&shifted)?.transpose())
                })
                .collect::<Result<_>>()?;
            Matrix::vstack(&rows)?
        };
        let mut code = Self::from_gen(gen);
        debug_assert_eq!(code.dim, dim);
        code.constacyclic = Some(ConstacyclicInfo { ring: ring.clone(), g_star });
        Ok(code)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Block length n.
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The generator matrix as constructed (not row-reduced).
    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    /// Canonical RREF basis of the code; `None` for the zero code.
    pub fn basis(&self) -> Option<&Matrix> {
        self.basis.as_ref()
    }

    pub fn is_zero_code(&self) -> bool {
        self.dim == 0
    }

    /// For constacyclic codes, the ambient ring and normalized generator g*.
    pub fn constacyclic_info(&self) -> Option<(&Ring, &Poly)> {
        self.constacyclic.as_ref().map(|i| (&i.ring, &i.g_star))
    }

    /// Membership test for a 1×n row vector.
    pub fn contains(&self, word: &Matrix) -> Result<bool> {
        if !word.field().same_as(&self.field) {
            return Err(Error::FieldMismatch);
        }
        if word.rows() != 1 || word.cols() != self.length {
            return Err(Error::ShapeMismatch(format!(
                "expected a 1x{} row vector, got {}x{}",
                self.length,
                word.rows(),
                word.cols()
            )));
        }
        match &self.basis {
            None => Ok(word.is_zero()),
            Some(b) => {
                let stacked = Matrix::vstack(&[b.clone(), word.clone()])?;
                Ok(stacked.rank() == self.dim)
            }
        }
    }

    /// Minimum Hamming distance by exhaustive search, cached after the first
    /// call. Fails with `TrivialCode` for the zero code and `CapExceeded`
    /// when q^dim > cap.
    pub fn min_distance(&self, cap: u64) -> Result<u32> {
        if let Some(&d) = self.dist.get() {
            return Ok(d);
        }
        let basis = self.basis.as_ref().ok_or(Error::TrivialCode)?;
        check_enumeration_cap(&self.field, self.dim, cap)?;
        let d = min_weight_projective(&self.field, basis);
        let _ = self.dist.set(d);
        Ok(d)
    }

    /// Every codeword (including zero) as packed code vectors, in message
    /// enumeration order. Fails when q^dim > cap.
    pub fn all_codewords(&self, cap: u64) -> Result<Vec<Vec<u32>>> {
        check_enumeration_cap(&self.field, self.dim, cap)?;
        let q = self.field.q() as u32;
        let Some(basis) = &self.basis else {
            return Ok(vec![vec![0; self.length]]);
        };
        let k = self.dim;
        let mut out = Vec::new();
        let mut digits = vec![0u32; k];
        let mut cw = vec![0u32; self.length];
        out.push(cw.clone());
        loop {
            let mut j = 0;
            while j < k && digits[j] == q - 1 {
                add_scaled_row(&self.field, &mut cw, basis.row_codes(j), digits[j], 0);
                digits[j] = 0;
                j += 1;
            }
            if j == k {
                break;
            }
            add_scaled_row(&self.field, &mut cw, basis.row_codes(j), digits[j], digits[j] + 1);
            digits[j] += 1;
            out.push(cw.clone());
        }
        Ok(out)
    }
}

fn check_enumeration_cap(field: &Field, dim: usize, cap: u64) -> Result<()> {
    let needed = (field.q() as u128)
        .checked_pow(dim as u32)
        .unwrap_or(u128::MAX);
    if needed > cap as u128 {
        return Err(Error::CapExceeded { needed, cap });
    }
    Ok(())
}

/// cw += (new − old) · row, where old/new are element codes.
fn add_scaled_row(field: &Field, cw: &mut [u32], row: &[u32], old: u32, new: u32) {
    let s = field.sub_code(new, old);
    if s == 0 {
        return;
    }
    for (c, &r) in row.iter().enumerate() {
        if r != 0 {
            cw[c] = field.add_code(cw[c], field.mul_code(s, r));
        }
    }
}

/// Minimum weight over all nonzero codewords of the row space of `basis`
/// (rows linearly independent). Enumerates one representative per scalar
/// line: messages whose first nonzero digit is 1, walked in reflected
/// mixed-radix Gray order with incremental weight updates.
fn min_weight_projective(field: &Field, basis: &Matrix) -> u32 {
    let k = basis.rows();
    let n = basis.cols();
    let q = field.q() as i64;
    let rows: Vec<&[u32]> = (0..k).map(|r| basis.row_codes(r)).collect();
    let supports: Vec<Vec<usize>> = rows
        .iter()
        .map(|row| (0..n).filter(|&c| row[c] != 0).collect())
        .collect();
    let mut best = u32::MAX;
    let mut cw = vec![0u32; n];
    for lead in 0..k {
        // block: message = e_lead + anything on the later digits
        cw.copy_from_slice(rows[lead]);
        let mut weight = cw.iter().filter(|&&c| c != 0).count() as u32;
        if weight < best {
            best = weight;
            if best <= 1 {
                return best;
            }
        }
        let nfree = k - lead - 1;
        let mut digits = vec![0u32; nfree];
        let mut dirs = vec![1i64; nfree];
        'block: loop {
            // advance the first digit that can move; flip stuck ones
            let mut j = 0;
            loop {
                if j == nfree {
                    break 'block;
                }
                let next = digits[j] as i64 + dirs[j];
                if (0..q).contains(&next) {
                    break;
                }
                dirs[j] = -dirs[j];
                j += 1;
            }
            let old = digits[j];
            let new = (old as i64 + dirs[j]) as u32;
            digits[j] = new;
            let row_idx = lead + 1 + j;
            let s = field.sub_code(new, old);
            let row = rows[row_idx];
            for &c in &supports[row_idx] {
                let was = cw[c];
                let now = field.add_code(was, field.mul_code(s, row[c]));
                cw[c] = now;
                weight += u32::from(now != 0);
                weight -= u32::from(was != 0);
            }
            debug_assert!(weight > 0, "independent rows cannot produce a zero codeword");
            if weight < best {
                best = weight;
                if best <= 1 {
                    return best;
                }
            }
        }
    }
    best
}
