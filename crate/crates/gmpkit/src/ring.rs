//! Polynomials over F_q and the quotient rings R = F_q\[x\]/(x^m − λ).
//!
//! The isomorphism φ between F_q^m (column vectors) and R sends
//! `[c_0, …, c_{m−1}]ᵀ` to `c_0 + c_1·x + … + c_{m−1}·x^{m−1}`; under it the
//! constacyclic shift matrix acts as multiplication by x.

use std::fmt;
use std::sync::Arc;

use crate::field::{Field, FieldElem};
use crate::matrix::{split_top_level, Matrix};
use crate::{Error, Result};

/// A polynomial with coefficients stored in ascending degree order and no
/// trailing zeros; the zero polynomial has an empty coefficient vector.
#[derive(Clone)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u32>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.field.same_as(&other.field)
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl fmt::Display for Poly {
    /// Canonical term list, ascending: `4+2*x+x^3`; unit coefficients on
    /// positive-degree terms are suppressed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            let elem = FieldElem::from_code(&self.field, c);
            match (d, c) {
                (0, _) => write!(f, "{elem}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{elem}*x")?,
                (_, 1) => write!(f, "x^{d}")?,
                _ => write!(f, "{elem}*x^{d}")?,
            }
        }
        Ok(())
    }
}

impl Poly {
    pub fn zero(field: &Field) -> Self {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Self {
        Poly { field: field.clone(), coeffs: vec![1] }
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_elems(field: &Field, coeffs: &[FieldElem]) -> Result<Self> {
        let mut codes = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            if !c.field().same_as(field) {
                return Err(Error::FieldMismatch);
            }
            codes.push(c.code());
        }
        Ok(Self::from_codes(field, codes))
    }

    pub(crate) fn from_codes(field: &Field, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    /// Parses the polynomial grammar: terms joined by `+`, each term one of
    /// `C`, `C*x`, `C*x^E`, `x`, `x^E` with `C` a field-element literal.
    pub fn parse(field: &Field, text: &str) -> Result<Self> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut coeffs: Vec<u32> = Vec::new();
        for term in split_top_level(&t, '+') {
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in `{text}`")));
            }
            let (coeff_text, degree) = match term.find('x') {
                None => (term, 0usize),
                Some(pos) => {
                    let prefix = &term[..pos];
                    let suffix = &term[pos + 1..];
                    let degree = if suffix.is_empty() {
                        1
                    } else {
                        suffix
                            .strip_prefix('^')
                            .and_then(|e| e.parse::<usize>().ok())
                            .ok_or_else(|| Error::Parse(format!("bad exponent in `{term}`")))?
                    };
                    let coeff_text = match prefix.strip_suffix('*') {
                        Some(c) => c,
                        None if prefix.is_empty() => "1",
                        None => prefix,
                    };
                    (coeff_text, degree)
                }
            };
            let c = FieldElem::parse(field, coeff_text)?;
            if coeffs.len() <= degree {
                coeffs.resize(degree + 1, 0);
            }
            coeffs[degree] = field.add_code(coeffs[degree], c.code());
        }
        Ok(Self::from_codes(field, coeffs))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, d: usize) -> FieldElem {
        FieldElem::from_code(&self.field, self.coeffs.get(d).copied().unwrap_or(0))
    }

    pub(crate) fn codes(&self) -> &[u32] {
        &self.coeffs
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field.same_as(&other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u32; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *slot = self.field.add_code(a, b);
        }
        Ok(Self::from_codes(&self.field, out))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u32; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *slot = self.field.sub_code(a, b);
        }
        Ok(Self::from_codes(&self.field, out))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = self.field.add_code(out[i + j], self.field.mul_code(a, b));
            }
        }
        Ok(Self::from_codes(&self.field, out))
    }

    pub fn scale(&self, s: &FieldElem) -> Result<Self> {
        if !s.field().same_as(&self.field) {
            return Err(Error::FieldMismatch);
        }
        let out = self.coeffs.iter().map(|&c| self.field.mul_code(c, s.code())).collect();
        Ok(Self::from_codes(&self.field, out))
    }

    /// Multiplies by x^k (prepends k zero coefficients).
    pub fn mul_xk(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0u32; k];
        coeffs.extend_from_slice(&self.coeffs);
        Self::from_codes(&self.field, coeffs)
    }

    /// Euclidean division: returns (quotient, remainder) with
    /// deg r < deg divisor. Division by zero is an error.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.same_field(divisor)?;
        if divisor.is_zero() {
            return Err(Error::ZeroPolyDivision);
        }
        let f = &self.field;
        let dd = divisor.coeffs.len() - 1;
        let lead_inv = f.inv_code(*divisor.coeffs.last().unwrap())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u32; self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let d = rem.len() - 1;
            let c = f.mul_code(rem[d], lead_inv);
            if c != 0 {
                quot[d - dd] = c;
                for (i, &bc) in divisor.coeffs.iter().enumerate() {
                    rem[d - dd + i] = f.sub_code(rem[d - dd + i], f.mul_code(c, bc));
                }
            }
            while rem.last() == Some(&0) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        Ok((Self::from_codes(f, quot), Self::from_codes(f, rem)))
    }

    /// Scales so the leading coefficient is 1. The zero polynomial is
    /// returned unchanged.
    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None | Some(1) => self.clone(),
            Some(&lead) => {
                let inv = self.field.inv_code(lead).expect("leading coefficient is nonzero");
                let out = self.coeffs.iter().map(|&c| self.field.mul_code(c, inv)).collect();
                Self::from_codes(&self.field, out)
            }
        }
    }

    /// Monic greatest common divisor. `gcd(a, 0) = monic(a)`; both arguments
    /// zero is an error.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }
}

/// The quotient ring F_q\[x\]/(x^m − λ) with λ ≠ 0.
pub struct RingSpec {
    field: Field,
    m: usize,
    lambda: u32,
}

/// Shared handle to a ring.
pub type Ring = Arc<RingSpec>;

impl fmt::Debug for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F_{}[x]/(x^{} - {})",
            self.field.q(),
            self.m,
            FieldElem::from_code(&self.field, self.lambda)
        )
    }
}

impl RingSpec {
    pub fn new(field: &Field, m: usize, lambda: &FieldElem) -> Result<Ring> {
        if !lambda.field().same_as(field) {
            return Err(Error::FieldMismatch);
        }
        if lambda.is_zero() {
            return Err(Error::ZeroLambda);
        }
        if m == 0 {
            return Err(Error::Parse("ring co-index m must be positive".into()));
        }
        Ok(Arc::new(RingSpec { field: field.clone(), m, lambda: lambda.code() }))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn lambda(&self) -> FieldElem {
        FieldElem::from_code(&self.field, self.lambda)
    }

    pub fn same_as(&self, other: &RingSpec) -> bool {
        self.field.same_as(&other.field) && self.m == other.m && self.lambda == other.lambda
    }

    /// The defining modulus x^m − λ.
    pub fn modulus_poly(&self) -> Poly {
        let mut coeffs = vec![0u32; self.m + 1];
        coeffs[0] = self.field.neg_code(self.lambda);
        coeffs[self.m] = 1;
        Poly::from_codes(&self.field, coeffs)
    }

    /// True when x^m − λ has repeated roots over the algebraic closure,
    /// i.e. when the characteristic divides m. Constacyclic structure still
    /// works, but semisimplicity arguments do not.
    pub fn has_repeated_roots(&self) -> bool {
        (self.m as u64).is_multiple_of(self.field.p())
    }

    /// Reduces a polynomial modulo x^m − λ by folding x^m ← λ.
    pub fn reduce(&self, p: &Poly) -> Result<Poly> {
        if !p.field().same_as(&self.field) {
            return Err(Error::FieldMismatch);
        }
        let mut c = p.coeffs.clone();
        for d in (self.m..c.len()).rev() {
            let v = c[d];
            if v == 0 {
                continue;
            }
            c[d] = 0;
            let folded = self.field.mul_code(v, self.lambda);
            c[d - self.m] = self.field.add_code(c[d - self.m], folded);
        }
        c.truncate(self.m);
        Ok(Poly::from_codes(&self.field, c))
    }
}

/// An element of a quotient ring, stored as its degree-< m representative.
#[derive(Clone)]
pub struct RingElem {
    ring: Ring,
    rep: Poly,
}

impl PartialEq for RingElem {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep && self.ring.same_as(&other.ring)
    }
}

impl Eq for RingElem {}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElem({})", self.rep)
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

impl RingElem {
    pub fn zero(ring: &Ring) -> Self {
        RingElem { ring: ring.clone(), rep: Poly::zero(ring.field()) }
    }

    pub fn from_poly(ring: &Ring, p: &Poly) -> Result<Self> {
        Ok(RingElem { ring: ring.clone(), rep: ring.reduce(p)? })
    }

    pub fn parse(ring: &Ring, text: &str) -> Result<Self> {
        Self::from_poly(ring, &Poly::parse(ring.field(), text)?)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// The canonical representative of degree < m.
    pub fn rep(&self) -> &Poly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(RingElem { ring: self.ring.clone(), rep: self.rep.add(&other.rep)? })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Self::from_poly(&self.ring, &self.rep.mul(&other.rep)?)
    }

    pub fn scale(&self, s: &FieldElem) -> Result<Self> {
        Ok(RingElem { ring: self.ring.clone(), rep: self.rep.scale(s)? })
    }

    /// Multiplication by x: the ring-side image of the constacyclic shift.
    pub fn mul_x(&self) -> Self {
        Self::from_poly(&self.ring, &self.rep.mul_xk(1)).expect("same field")
    }

    /// Multiplication by x^k.
    pub fn mul_xk(&self, k: usize) -> Self {
        Self::from_poly(&self.ring, &self.rep.mul_xk(k)).expect("same field")
    }
}

impl RingSpec {
    /// φ: sends an m×1 column vector to the ring element with those
    /// coefficients.
    pub fn phi(self: &Ring, col: &Matrix) -> Result<RingElem> {
        if !col.field().same_as(&self.field) {
            return Err(Error::FieldMismatch);
        }
        if col.cols() != 1 || col.rows() != self.m {
            return Err(Error::ShapeMismatch(format!(
                "phi expects a {}x1 column, got {}x{}",
                self.m,
                col.rows(),
                col.cols()
            )));
        }
        let codes: Vec<u32> = (0..self.m).map(|r| col.code_at(r, 0)).collect();
        Ok(RingElem { ring: self.clone(), rep: Poly::from_codes(&self.field, codes) })
    }

    /// φ⁻¹: the m×1 column of coefficients of a ring element.
    pub fn phi_inv(self: &Ring, elem: &RingElem) -> Result<Matrix> {
        if !elem.ring.same_as(self) {
            return Err(Error::RingMismatch);
        }
        let mut col = Matrix::zero(&self.field, self.m, 1)?;
        for (d, &c) in elem.rep.codes().iter().enumerate() {
            col.set_code(d, 0, c);
        }
        Ok(col)
    }

    /// Applies φ to every column of an m×ℓ matrix.
    pub fn phi_mat(self: &Ring, mat: &Matrix) -> Result<Vec<RingElem>> {
        (1..=mat.cols()).map(|c| self.phi(&mat.take_cols(&[c])?)).collect()
    }

    /// Assembles ring elements as the columns of an m×ℓ matrix.
    pub fn phi_inv_mat(self: &Ring, elems: &[RingElem]) -> Result<Matrix> {
        if elems.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        let cols: Vec<Matrix> = elems
            .iter()
            .map(|e| self.phi_inv(e))
            .collect::<Result<_>>()?;
        Matrix::hstack(&cols)
    }
}
