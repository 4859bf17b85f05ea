//! Finite fields F_q, q = p^k, with user-supplied irreducible moduli.
//!
//! Elements are stored as packed codes: the element with coordinates
//! `(c_0, …, c_{k−1})` in the basis `{1, α, …, α^{k−1}}` has code
//! `Σ c_i · p^i`. For small fields (q ≤ 512) all four operation tables are
//! precomputed at construction; larger fields fall back to coefficient
//! arithmetic with Fermat inversion.

use std::fmt;
use std::sync::Arc;

use crate::{Error, Result};

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// Orders up to this get full operation tables.
const TABLE_LIMIT: u64 = 512;

/// Shared handle to a field; all elements and matrices hold one of these.
pub type Field = Arc<FieldSpec>;

/// A finite field F_{p^k}, defined for k > 1 by a monic irreducible modulus.
pub struct FieldSpec {
    p: u64,
    k: u32,
    q: u64,
    /// Modulus coefficients, ascending degree, length k+1, monic. Empty for prime fields.
    modulus: Vec<u64>,
    tables: Option<Tables>,
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "F_{}", self.p)
        } else {
            write!(f, "F_{}(p={}, modulus={:?})", self.q, self.p, self.modulus)
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Remainder of a ÷ b in F_p\[x\]; coefficient vectors ascending, b monic.
fn poly_rem_mod_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap() % p;
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &bc) in b.iter().enumerate() {
                let idx = shift + i;
                r[idx] = (r[idx] + p - (lead * bc) % p) % p;
            }
        }
        r.pop();
        while r.len() > db && (*r.last().unwrap()).is_multiple_of(p) {
            if r.len() == 1 {
                break;
            }
            r.pop();
        }
    }
    r
}

/// True iff the monic polynomial has no monic divisor of degree 1..=deg/2.
fn is_irreducible(modulus: &[u64], p: u64) -> bool {
    let deg = modulus.len() - 1;
    for d in 1..=deg / 2 {
        // enumerate all monic degree-d candidates by base-p counting
        let count = p.pow(d as u32);
        for c in 0..count {
            let mut cand = Vec::with_capacity(d + 1);
            let mut v = c;
            for _ in 0..d {
                cand.push(v % p);
                v /= p;
            }
            cand.push(1);
            let rem = poly_rem_mod_p(modulus, &cand, p);
            if rem.iter().all(|&x| x % p == 0) {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// The prime field F_p.
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > MAX_FIELD_ORDER {
            return Err(Error::FieldTooLarge(p as u128));
        }
        Ok(Arc::new(Self::build(p, 1, Vec::new())))
    }

    /// The extension field F_{p^k} defined by a monic irreducible modulus of
    /// degree k (coefficients ascending, so x² + 2x + 2 is `[2, 2, 1]`).
    pub fn extension(p: u64, k: u32, modulus: &[u64]) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k < 2 {
            return Err(Error::InvalidModulus(format!(
                "extension degree must be at least 2, got {k}; use a prime field instead"
            )));
        }
        let q = (p as u128).checked_pow(k).ok_or(Error::FieldTooLarge(u128::MAX))?;
        if q > MAX_FIELD_ORDER as u128 {
            return Err(Error::FieldTooLarge(q));
        }
        if modulus.len() != k as usize + 1 {
            return Err(Error::InvalidModulus(format!(
                "degree-{k} modulus needs {} coefficients, got {}",
                k + 1,
                modulus.len()
            )));
        }
        if modulus[k as usize] != 1 {
            return Err(Error::InvalidModulus("modulus must be monic".into()));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidModulus(format!("coefficients must lie in [0, {p})")));
        }
        if !is_irreducible(modulus, p) {
            return Err(Error::InvalidModulus(format!(
                "modulus {modulus:?} is reducible over F_{p}"
            )));
        }
        Ok(Arc::new(Self::build(p, k, modulus.to_vec())))
    }

    /// Named fields used throughout the bundled examples: `paper-F4` is
    /// F_4 with α² + α + 1 = 0, `paper-F9` is F_9 with α² + 2α + 2 = 0.
    pub fn preset(name: &str) -> Result<Field> {
        match name {
            "paper-F4" => Self::extension(2, 2, &[1, 1, 1]),
            "paper-F9" => Self::extension(3, 2, &[2, 2, 1]),
            other => Err(Error::UnknownPreset(other.to_string())),
        }
    }

    fn build(p: u64, k: u32, modulus: Vec<u64>) -> Self {
        let q = p.pow(k);
        let mut spec = FieldSpec { p, k, q, modulus, tables: None };
        if q <= TABLE_LIMIT {
            let n = q as usize;
            let mut add = vec![0u32; n * n];
            let mut mul = vec![0u32; n * n];
            let mut neg = vec![0u32; n];
            let mut inv = vec![0u32; n];
            for a in 0..q as u32 {
                neg[a as usize] = spec.neg_code_slow(a);
                for b in 0..q as u32 {
                    add[(a as usize) * n + b as usize] = spec.add_code_slow(a, b);
                    mul[(a as usize) * n + b as usize] = spec.mul_code_slow(a, b);
                }
            }
            for a in 1..q as u32 {
                let b = mul[a as usize * n..(a as usize + 1) * n]
                    .iter()
                    .position(|&x| x == 1)
                    .expect("every nonzero element has an inverse");
                inv[a as usize] = b as u32;
            }
            spec.tables = Some(Tables { add, mul, neg, inv });
        }
        spec
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Field order q = p^k.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// Modulus coefficients (ascending); empty for prime fields.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Two specs are interoperable iff (p, k, modulus) coincide.
    pub fn same_as(&self, other: &FieldSpec) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }

    fn digits(&self, code: u32) -> Vec<u64> {
        let mut c = code as u64;
        let mut out = Vec::with_capacity(self.k as usize);
        for _ in 0..self.k {
            out.push(c % self.p);
            c /= self.p;
        }
        out
    }

    fn pack(&self, digits: &[u64]) -> u32 {
        let mut code = 0u64;
        for &d in digits.iter().rev() {
            code = code * self.p + d % self.p;
        }
        code as u32
    }

    fn add_code_slow(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return ((a as u64 + b as u64) % self.p) as u32;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.pack(&sum)
    }

    fn neg_code_slow(&self, a: u32) -> u32 {
        if self.k == 1 {
            return ((self.p - a as u64) % self.p) as u32;
        }
        let da = self.digits(a);
        let neg: Vec<u64> = da.iter().map(|&x| (self.p - x) % self.p).collect();
        self.pack(&neg)
    }

    fn mul_code_slow(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return ((a as u64 * b as u64) % self.p) as u32;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let k = self.k as usize;
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // substitute x^k ← −(m_0 + m_1 x + … + m_{k−1} x^{k−1}) top-down
        for i in (k..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..k {
                let sub = (c * self.modulus[j]) % self.p;
                prod[i - k + j] = (prod[i - k + j] + self.p - sub) % self.p;
            }
        }
        self.pack(&prod[..k])
    }

    pub(crate) fn add_code(&self, a: u32, b: u32) -> u32 {
        match &self.tables {
            Some(t) => t.add[a as usize * self.q as usize + b as usize],
            None => self.add_code_slow(a, b),
        }
    }

    pub(crate) fn neg_code(&self, a: u32) -> u32 {
        match &self.tables {
            Some(t) => t.neg[a as usize],
            None => self.neg_code_slow(a),
        }
    }

    pub(crate) fn sub_code(&self, a: u32, b: u32) -> u32 {
        self.add_code(a, self.neg_code(b))
    }

    pub(crate) fn mul_code(&self, a: u32, b: u32) -> u32 {
        match &self.tables {
            Some(t) => t.mul[a as usize * self.q as usize + b as usize],
            None => self.mul_code_slow(a, b),
        }
    }

    pub(crate) fn inv_code(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        match &self.tables {
            Some(t) => Ok(t.inv[a as usize]),
            None => Ok(self.pow_code(a, self.q - 2)), // Fermat: a^(q−2) = a⁻¹
        }
    }

    pub(crate) fn pow_code(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_code(acc, base);
            }
            base = self.mul_code(base, base);
            e >>= 1;
        }
        acc
    }
}

/// An element of a specific field.
#[derive(Clone)]
pub struct FieldElem {
    field: Field,
    code: u32,
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code && self.field.same_as(&other.field)
    }
}

impl Eq for FieldElem {}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // prime-subfield constants print as integers, everything else as a tuple
        if (self.code as u64) < self.field.p() {
            return write!(f, "{}", self.code);
        }
        let digits = self.field.digits(self.code);
        let parts: Vec<String> = digits.iter().map(|d| d.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FieldElem {
    pub(crate) fn from_code(field: &Field, code: u32) -> Self {
        debug_assert!((code as u64) < field.q());
        FieldElem { field: field.clone(), code }
    }

    pub(crate) fn code(&self) -> u32 {
        self.code
    }

    /// The additive identity.
    pub fn zero(field: &Field) -> Self {
        Self::from_code(field, 0)
    }

    /// The multiplicative identity.
    pub fn one(field: &Field) -> Self {
        Self::from_code(field, 1)
    }

    /// Embeds an integer into the prime subfield (reduced mod p).
    pub fn from_int(field: &Field, v: i64) -> Self {
        let p = field.p() as i64;
        Self::from_code(field, v.rem_euclid(p) as u32)
    }

    /// Element with the given coordinates in the basis {1, α, …, α^{k−1}}.
    pub fn from_coeffs(field: &Field, coeffs: &[u64]) -> Result<Self> {
        if coeffs.len() != field.k() as usize {
            return Err(Error::Parse(format!(
                "coefficient tuple needs {} entries, got {}",
                field.k(),
                coeffs.len()
            )));
        }
        Ok(Self::from_code(field, field.pack(coeffs)))
    }

    /// Coordinates in the basis {1, α, …, α^{k−1}}.
    pub fn coeffs(&self) -> Vec<u64> {
        self.field.digits(self.code)
    }

    /// The residue class of x, defined for extension fields only.
    pub fn alpha(field: &Field) -> Result<Self> {
        if field.k() == 1 {
            return Err(Error::AlphaInPrimeField);
        }
        Ok(Self::from_code(field, field.p() as u32))
    }

    /// α^i by repeated multiplication; no primitivity assumption.
    pub fn alpha_pow(field: &Field, i: u64) -> Result<Self> {
        let a = Self::alpha(field)?;
        Ok(Self::from_code(field, field.pow_code(a.code, i)))
    }

    /// Parses the element grammar: a decimal integer, `a` / `a^I`, or a
    /// coefficient tuple `[c0,c1,…]`. Whitespace is ignored.
    pub fn parse(field: &Field, text: &str) -> Result<Self> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty field element".into()));
        }
        if let Some(inner) = t.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| Error::Parse(format!("unterminated tuple `{text}`")))?;
            let coeffs: Vec<u64> = inner
                .split(',')
                .map(|s| {
                    s.parse::<i64>()
                        .map(|v| v.rem_euclid(field.p() as i64) as u64)
                        .map_err(|_| Error::Parse(format!("bad tuple entry `{s}`")))
                })
                .collect::<Result<_>>()?;
            return Self::from_coeffs(field, &coeffs);
        }
        if t == "a" {
            return Self::alpha(field);
        }
        if let Some(exp) = t.strip_prefix("a^") {
            let i: u64 =
                exp.parse().map_err(|_| Error::Parse(format!("bad alpha power `{text}`")))?;
            return Self::alpha_pow(field, i);
        }
        let v: i64 = t.parse().map_err(|_| Error::Parse(format!("bad field element `{text}`")))?;
        Ok(Self::from_int(field, v))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.code == 0
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
        Ok(Self::from_code(&self.field, self.field.add_code(self.code, other.code)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self::from_code(&self.field, self.field.sub_code(self.code, other.code)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self::from_code(&self.field, self.field.mul_code(self.code, other.code)))
    }

    pub fn neg(&self) -> Self {
        Self::from_code(&self.field, self.field.neg_code(self.code))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(Self::from_code(&self.field, self.field.inv_code(self.code)?))
    }

    pub fn pow(&self, e: u64) -> Self {
        Self::from_code(&self.field, self.field.pow_code(self.code, e))
    }
}
