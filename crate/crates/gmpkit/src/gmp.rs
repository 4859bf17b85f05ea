//! Generalized matrix product (GMP) codes.
//!
//! Given an m×m matrix T, constituent codes C_1, …, C_M of length m, and
//! M×N coefficient matrices A_0, …, A_r, the GMP code is
//!
//! ```text
//!     Q = Σ_{k=0}^{r} T^k [C_1 ⋯ C_M] A_k,
//! ```
//!
//! the set of m×N matrices obtained by choosing one codeword per C_i as the
//! columns of [c_1 ⋯ c_M]. Codewords are flattened column-major to vectors
//! of length mN. With T = I (or r = 0, or T = 0) this collapses to a
//! classical matrix product code.

use std::collections::BTreeSet;

use crate::code::LinearCode;
use crate::field::Field;
use crate::matrix::Matrix;
use crate::{Error, Result};

/// A validated GMP code specification.
#[derive(Clone, Debug)]
pub struct GmpSpec {
    field: Field,
    m: usize,
    t: Matrix,
    codes: Vec<LinearCode>,
    /// A_0, …, A_r with all-zero trailing matrices already stripped.
    mats: Vec<Matrix>,
}

/// Everything the generator-matrix construction yields in one pass.
pub struct GmpAnalysis {
    /// σ = Σ_k A_k ⊗ (Tᵀ)^k, the mM×mN combination matrix.
    pub sigma: Matrix,
    pub sigma_rank: usize,
    /// Whether rank(σ) = mM, which forces dim Q = Σ dim C_i.
    pub rank_condition_met: bool,
    /// Σ dim C_i when the rank condition guarantees it, otherwise `None`.
    pub predicted_dim: Option<usize>,
    /// G = diag[G_1, …, G_M] · σ, the generator matrix of vec(Q).
    pub gen: Matrix,
    /// The flattened code itself (dimension = rank of G, always correct).
    pub code: LinearCode,
    /// Whether the spec is syntactically a plain matrix product code.
    pub is_mp: bool,
    /// The single coefficient matrix of the collapsed MP form, if `is_mp`.
    pub collapsed: Option<Matrix>,
}

impl GmpAnalysis {
    pub fn dim(&self) -> usize {
        self.code.dim()
    }
}

impl GmpSpec {
    /// Validates shapes and fields: T must be m×m, every constituent code
    /// must have length m over the same field, and all A_k must share one
    /// M×N shape with M = number of codes. Trailing all-zero A_k are
    /// dropped (A_0 always stays).
    pub fn new(t: Matrix, codes: Vec<LinearCode>, mut mats: Vec<Matrix>) -> Result<Self> {
        if codes.is_empty() {
            return Err(Error::SpecInvalid("at least one constituent code is required".into()));
        }
        if mats.is_empty() {
            return Err(Error::SpecInvalid(
                "at least one coefficient matrix A_0 is required".into(),
            ));
        }
        if !t.is_square() {
            return Err(Error::NonSquare);
        }
        let field = t.field().clone();
        let m = t.rows();
        for (i, c) in codes.iter().enumerate() {
            if !c.field().same_as(&field) {
                return Err(Error::FieldMismatch);
            }
            if c.length() != m {
                return Err(Error::LengthMismatch(format!(
                    "constituent code {} has length {}, expected m = {m}",
                    i + 1,
                    c.length()
                )));
            }
        }
        let big_m = codes.len();
        let n = mats[0].cols();
        for (k, a) in mats.iter().enumerate() {
            if !a.field().same_as(&field) {
                return Err(Error::FieldMismatch);
            }
            if a.rows() != big_m || a.cols() != n {
                return Err(Error::ShapeMismatch(format!(
                    "A_{k} is {}x{}, expected {big_m}x{n}",
                    a.rows(),
                    a.cols()
                )));
            }
        }
        while mats.len() > 1 && mats.last().is_some_and(Matrix::is_zero) {
            mats.pop();
        }
        Ok(GmpSpec { field, m, t, codes, mats })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Size of T and length of every constituent code.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn t(&self) -> &Matrix {
        &self.t
    }

    pub fn codes(&self) -> &[LinearCode] {
        &self.codes
    }

    /// A_0, …, A_r.
    pub fn mats(&self) -> &[Matrix] {
        &self.mats
    }

    /// Number of constituent codes M.
    pub fn num_codes(&self) -> usize {
        self.codes.len()
    }

    /// Number of output blocks N.
    pub fn num_blocks(&self) -> usize {
        self.mats[0].cols()
    }

    /// Highest power of T used.
    pub fn r(&self) -> usize {
        self.mats.len() - 1
    }

    /// Length of the flattened code, n = mN.
    pub fn length(&self) -> usize {
        self.m * self.num_blocks()
    }

    /// σ = Σ_k A_k ⊗ (Tᵀ)^k.
    pub fn sigma(&self) -> Result<Matrix> {
        let tt = self.t.transpose();
        let mut acc: Option<Matrix> = None;
        for (k, a) in self.mats.iter().enumerate() {
            let term = a.kron(&tt.pow(k as u64)?)?;
            acc = Some(match acc {
                None => term,
                Some(s) => s.add(&term)?,
            });
        }
        Ok(acc.expect("mats is nonempty"))
    }

    /// Builds the generator matrix G = diag[G_1, …, G_M]·σ and derives the
    /// code, its dimension, the rank condition, and the MP collapse.
    pub fn analyze(&self) -> Result<GmpAnalysis> {
        let sigma = self.sigma()?;
        let sigma_rank = sigma.rank();
        let rank_condition_met = sigma_rank == self.m * self.num_codes();
        let predicted_dim =
            rank_condition_met.then(|| self.codes.iter().map(LinearCode::dim).sum());
        let gens: Vec<Matrix> = self.codes.iter().map(|c| c.generator().clone()).collect();
        let gen = Matrix::block_diag(&gens)?.mul(&sigma)?;
        let code = LinearCode::from_gen(gen.clone());
        let (is_mp, collapsed) = self.mp_collapse();
        Ok(GmpAnalysis {
            sigma,
            sigma_rank,
            rank_condition_met,
            predicted_dim,
            gen,
            code,
            is_mp,
            collapsed,
        })
    }

    /// Reports whether rank(σ) = mM together with the dimension it would
    /// predict and the actual dimension.
    pub fn dim_check(&self) -> Result<(bool, Option<usize>, usize)> {
        let a = self.analyze()?;
        Ok((a.rank_condition_met, a.predicted_dim, a.dim()))
    }

    /// Syntactic matrix-product collapse: r = 0 or T = 0 reduce the sum to
    /// \[C\]A_0, and T = I reduces it to \[C\](ΣA_k). Returns the collapsed
    /// coefficient matrix when one of these holds.
    pub fn mp_collapse(&self) -> (bool, Option<Matrix>) {
        if self.r() == 0 || self.t.is_zero() {
            return (true, Some(self.mats[0].clone()));
        }
        if self.t.is_identity() {
            let mut sum = self.mats[0].clone();
            for a in &self.mats[1..] {
                sum = sum.add(a).expect("validated shapes");
            }
            return (true, Some(sum));
        }
        (false, None)
    }

    /// Evaluates Σ_k T^k [c_1 ⋯ c_M] A_k for one chosen codeword per
    /// constituent code (each a 1×m row vector) after verifying membership.
    /// Returns the flattened 1×mN codeword.
    pub fn codeword(&self, words: &[Matrix]) -> Result<Matrix> {
        if words.len() != self.num_codes() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} codewords, got {}",
                self.num_codes(),
                words.len()
            )));
        }
        for (i, (w, c)) in words.iter().zip(&self.codes).enumerate() {
            if !c.contains(w)? {
                return Err(Error::NotACodeword(w.to_string(), i + 1));
            }
        }
        let cols: Vec<Matrix> = words.iter().map(Matrix::transpose).collect();
        let cmat = Matrix::hstack(&cols)?;
        Ok(self.sum_of_shifts(&cmat)?.vec_row())
    }

    /// Σ_k T^k · cmat · A_k for an m×M matrix of chosen codeword columns.
    fn sum_of_shifts(&self, cmat: &Matrix) -> Result<Matrix> {
        let mut acc: Option<Matrix> = None;
        let mut tk = Matrix::identity(&self.field, self.m)?;
        for (k, a) in self.mats.iter().enumerate() {
            if k > 0 {
                tk = tk.mul(&self.t)?;
            }
            let term = tk.mul(cmat)?.mul(a)?;
            acc = Some(match acc {
                None => term,
                Some(s) => s.add(&term)?,
            });
        }
        Ok(acc.expect("mats is nonempty"))
    }

    /// The full codeword set by brute force over all constituent choices,
    /// flattened column-major. The number of combinations Π|C_i| must not
    /// exceed `cap`. Intended for cross-validation on small examples.
    pub fn bruteforce_code(&self, cap: u64) -> Result<BTreeSet<Vec<u32>>> {
        let mut combos: u128 = 1;
        for c in &self.codes {
            combos = combos.saturating_mul((self.field.q() as u128).pow(c.dim() as u32));
        }
        if combos > cap as u128 {
            return Err(Error::CapExceeded { needed: combos, cap });
        }
        let words_per_code: Vec<Vec<Vec<u32>>> =
            self.codes.iter().map(|c| c.all_codewords(cap)).collect::<Result<_>>()?;
        let mut out = BTreeSet::new();
        let mut choice = vec![0usize; self.codes.len()];
        loop {
            let cmat = Matrix::from_fn(&self.field, self.m, self.num_codes(), |r, c| {
                crate::field::FieldElem::from_code(&self.field, words_per_code[c][choice[c]][r])
            })?;
            out.insert(
                self.sum_of_shifts(&cmat)?
                    .vec_row()
                    .row_codes(0)
                    .to_vec(),
            );
            // odometer over the choice indices
            let mut i = 0;
            loop {
                if i == choice.len() {
                    return Ok(out);
                }
                choice[i] += 1;
                if choice[i] < words_per_code[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }
}
