//! Seifert-matrix invariants: the Alexander matrix `V − tVᵀ` and its
//! determinant, the knot determinant, the signature, the pretzel-family
//! constructor, and a trace that verifies the crossing-change obstruction
//! identities on a concrete matrix.
//!
//! The basis convention is positional: when a crossing arc is involved, the
//! class dual to the arc sits at index 1, so deleting the first row and
//! column of the Alexander matrix yields an Alexander matrix for the link
//! obtained by cutting the surface along the arc.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::laurent::{IntPoly, LaurentPoly};
use crate::linalg::{
    det_bareiss, poly_det, poly_kernel_vector, smith_normal_form, solve_integral, IntMatrix,
    LinAlgError, PolyMatrix,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeifertError {
    #[error("Seifert matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("Seifert matrix must have even size, got {0}")]
    OddSize(usize),
    #[error("Seifert matrix must have size at least 2, got {0}")]
    TooSmall(usize),
    #[error("V - V^T has determinant {0}, expected 1 (not an intersection form)")]
    NotUnimodular(BigInt),
    #[error("pretzel parameter {0} is even; all five parameters must be odd")]
    EvenPretzelParameter(i64),
    #[error("Alexander polynomial is identically zero")]
    ZeroAlexander,
    #[error("Alexander polynomial evaluates to {0} at t = 1, expected ±1")]
    UnitValueAtOne(BigInt),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

/// Integer Seifert matrix `V` of even size `2g`.
///
/// [`SeifertMatrix::new`] enforces `det(V − Vᵀ) = 1`, the unimodularity of
/// the intersection form, which holds for every matrix arising from a basis
/// of curves on a genus-g Seifert surface.  [`SeifertMatrix::new_relaxed`]
/// skips that check so presentation-style matrices can flow through the same
/// invariant computations; [`SeifertMatrix::is_unimodular`] records which
/// constructor succeeded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertMatrix {
    v: IntMatrix,
    unimodular: bool,
}

impl SeifertMatrix {
    pub fn new(v: IntMatrix) -> Result<Self, SeifertError> {
        let m = Self::new_relaxed(v)?;
        if !m.unimodular {
            let skew = sub_matrices(&m.v, &m.v.transpose());
            return Err(SeifertError::NotUnimodular(det_bareiss(&skew).unwrap()));
        }
        Ok(m)
    }

    pub fn new_relaxed(v: IntMatrix) -> Result<Self, SeifertError> {
        if !v.is_square() {
            return Err(SeifertError::NotSquare { rows: v.rows(), cols: v.cols() });
        }
        let n = v.rows();
        if !n.is_multiple_of(2) {
            return Err(SeifertError::OddSize(n));
        }
        if n < 2 {
            return Err(SeifertError::TooSmall(n));
        }
        let skew = sub_matrices(&v, &v.transpose());
        let unimodular = det_bareiss(&skew).unwrap().is_one();
        Ok(Self { v, unimodular })
    }

    pub fn parse(s: &str) -> Result<Self, SeifertError> {
        Self::new(IntMatrix::parse(s)?)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.v
    }

    pub fn size(&self) -> usize {
        self.v.rows()
    }

    pub fn genus(&self) -> usize {
        self.size() / 2
    }

    pub fn is_unimodular(&self) -> bool {
        self.unimodular
    }

    /// `V + Vᵀ`, the presentation matrix of the double-branched-cover
    /// homology.
    pub fn symmetrized(&self) -> IntMatrix {
        self.v.add(&self.v.transpose()).unwrap()
    }

    /// The Alexander matrix `A = V − tVᵀ`.
    pub fn alexander_matrix(&self) -> PolyMatrix {
        let n = self.size();
        let mut a = PolyMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                a[(i, j)] = LaurentPoly::from_terms([
                    (0i64, self.v[(i, j)].clone()),
                    (1i64, -self.v[(j, i)].clone()),
                ]);
            }
        }
        a
    }

    /// `Δ = det(V − tVᵀ)` in canonical symmetric form: exponents balanced
    /// around zero and the value at `t = 1` normalized to `+1`.  For a
    /// unimodular Seifert matrix `Δ(1) = ±1` always holds; a violation is
    /// reported as an error.
    pub fn alexander_polynomial(&self) -> Result<LaurentPoly, SeifertError> {
        let raw = poly_det(&self.alexander_matrix())?;
        if raw.is_zero() {
            return Err(SeifertError::ZeroAlexander);
        }
        let (_, _, rep) = raw.unit_parts().unwrap();
        let at_one = rep.eval(&BigInt::one());
        if self.unimodular && !at_one.abs().is_one() {
            return Err(SeifertError::UnitValueAtOne(at_one));
        }
        let d = rep.degree().unwrap();
        if d % 2 != 0 {
            // cannot balance an odd-degree representative (only possible for
            // relaxed matrices); return the representative itself
            return Ok(rep.to_laurent());
        }
        let mut canonical = rep.to_laurent().shift(-((d / 2) as i64));
        if at_one.is_negative() {
            canonical = -&canonical;
        }
        Ok(canonical)
    }

    /// `|Δ(−1)|`, cross-checked against `|det(V + Vᵀ)|`; the two routes
    /// evaluate the same integer matrix through different code paths.
    pub fn knot_determinant(&self) -> Result<BigInt, SeifertError> {
        let delta = self.alexander_polynomial()?;
        let via_delta = delta.eval_at_minus_one().abs();
        let via_sym = det_bareiss(&self.symmetrized()).unwrap().abs();
        assert_eq!(via_delta, via_sym, "determinant routes disagree");
        Ok(via_delta)
    }

    /// Signature of `V + Vᵀ`, computed exactly: the characteristic
    /// polynomial of a symmetric integer matrix has only real roots, so
    /// Descartes' rule counts them without error.
    pub fn signature(&self) -> i64 {
        let m = self.symmetrized();
        let n = m.rows();
        let mut xi = PolyMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut terms = vec![(0i64, -m[(i, j)].clone())];
                if i == j {
                    terms.push((1i64, BigInt::one()));
                }
                xi[(i, j)] = LaurentPoly::from_terms(terms);
            }
        }
        let char_poly = poly_det(&xi).unwrap();
        let coeffs: Vec<BigInt> = char_poly
            .as_int_poly()
            .expect("characteristic polynomial has no negative exponents")
            .coeffs()
            .to_vec();
        let positive = descartes_sign_changes(coeffs.iter());
        let negated: Vec<BigInt> = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        let negative = descartes_sign_changes(negated.iter());
        positive as i64 - negative as i64
    }

    /// Invariant factors of `V + Vᵀ`: the nontrivial Smith-normal-form
    /// diagonal entries, i.e. the cyclic decomposition of the presented
    /// group.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        smith_normal_form(&self.symmetrized())
            .invariant_factors()
            .into_iter()
            .filter(|d| !d.is_one())
            .collect()
    }

    /// Runs the singular-minor trace; see [`ProofTrace`].
    pub fn proof_trace(&self) -> Result<ProofTrace, SeifertError> {
        let a = self.alexander_matrix();
        let a_prime = a.minor(0, 0);
        let delta_l = poly_det(&a_prime)?;
        if !delta_l.is_zero() {
            return Ok(ProofTrace { a_prime, delta_l, kernel: None });
        }
        let v1 = poly_kernel_vector(&a_prime)?
            .expect("singular matrix has a kernel vector");
        let n = self.size();

        // v = [0, v1] and f is the head of A·v; the tail vanishes because
        // v1 kills A'
        let mut av = vec![LaurentPoly::zero(); n];
        for (i, item) in av.iter_mut().enumerate() {
            let mut acc = LaurentPoly::zero();
            for (k, vk) in v1.iter().enumerate() {
                acc = &acc + &(&a[(i, k + 1)] * &vk.to_laurent());
            }
            *item = acc;
        }
        for entry in av.iter().skip(1) {
            assert!(entry.is_zero(), "kernel vector must annihilate the minor");
        }
        let f = av[0].as_int_poly().expect("A has polynomial entries");

        let f_primitive = !f.is_zero() && f.content().is_one();
        let f_at_minus_one = f.eval(&BigInt::from(-1));

        // conjugate row identity: bar(v)^T · A = [-t · f(t^-1), 0, ..., 0]
        let mut identity_holds = true;
        for j in 0..n {
            let mut acc = LaurentPoly::zero();
            for (k, vk) in v1.iter().enumerate() {
                acc = &acc + &(&vk.to_laurent().bar() * &a[(k + 1, j)]);
            }
            let expected = if j == 0 {
                &LaurentPoly::monomial(1, -1) * &f.to_laurent().bar()
            } else {
                LaurentPoly::zero()
            };
            if acc != expected {
                identity_holds = false;
            }
        }

        // nullhomology test: is e1 in the image of V + V^T over Z?
        let mut e1 = vec![BigInt::zero(); n];
        e1[0] = BigInt::one();
        let nullhomologous = solve_integral(&self.symmetrized(), &e1)?.is_some();

        Ok(ProofTrace {
            a_prime,
            delta_l,
            kernel: Some(TraceKernel {
                v1,
                f,
                f_primitive,
                conjugate_identity_holds: identity_holds,
                f_at_minus_one,
                nullhomologous,
            }),
        })
    }
}

fn sub_matrices(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let mut out = a.clone();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            out[(i, j)] = &a[(i, j)] - &b[(i, j)];
        }
    }
    out
}

fn descartes_sign_changes<'a>(coeffs: impl Iterator<Item = &'a BigInt>) -> usize {
    let mut changes = 0;
    let mut last: Option<bool> = None;
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        let sign = c.is_positive();
        if let Some(prev) = last {
            if prev != sign {
                changes += 1;
            }
        }
        last = Some(sign);
    }
    changes
}

/// Outcome of the singular-minor trace on a Seifert matrix whose basis puts
/// the candidate crossing-arc class at index 1.
///
/// `delta_l` is the determinant of `A′` (the Alexander matrix with its first
/// row and column removed).  When it vanishes, `kernel` carries the
/// primitive kernel vector `v₁` of `A′`, the polynomial `f` defined by
/// `A·[0, v₁]ᵀ = [f, 0, …, 0]ᵀ`, whether `f` is primitive, whether the
/// conjugate row identity `[0, v₁]*·A = [−t·f(t⁻¹), 0, …, 0]` holds, the
/// value `f(−1)`, and whether the first standard basis vector lies in the
/// image of `V + Vᵀ` over ℤ.
#[derive(Debug, Clone)]
pub struct ProofTrace {
    pub a_prime: PolyMatrix,
    pub delta_l: LaurentPoly,
    pub kernel: Option<TraceKernel>,
}

#[derive(Debug, Clone)]
pub struct TraceKernel {
    pub v1: Vec<IntPoly>,
    pub f: IntPoly,
    pub f_primitive: bool,
    pub conjugate_identity_holds: bool,
    pub f_at_minus_one: BigInt,
    pub nullhomologous: bool,
}

/// Structured outcome of the pretzel constructor's parameter checks.
/// Neither condition is fatal; the matrix is well defined for any odd
/// parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PretzelConditions {
    /// `pᵢ ≥ 1` for all i and `q > min(p₁, …, p₄)`.
    pub positivity: bool,
    /// `pᵢ ≡ 1 (mod 4)` for all i and `q ≡ 3 (mod 4)`.
    pub congruence: bool,
    /// Whether `det(V − Vᵀ) = 1` for the constructed matrix (it equals
    /// `(p₂p₄)²`, so this holds exactly when `|p₂| = |p₄| = 1`).
    pub unimodular: bool,
}

/// The checkerboard-surface matrix of the pretzel `P(p₁, p₂, p₃, p₄, −q)`:
/// upper bidiagonal with diagonal `(p₁+p₂)/2, (p₂+p₃)/2, (p₃+p₄)/2,
/// (p₄−q)/2` and superdiagonal `−p₂, −p₃, −p₄`.  All five parameters must
/// be odd so the halves are integers.
pub fn pretzel_seifert_matrix(
    p1: i64,
    p2: i64,
    p3: i64,
    p4: i64,
    q: i64,
) -> Result<(SeifertMatrix, PretzelConditions), SeifertError> {
    for v in [p1, p2, p3, p4, q] {
        if v % 2 == 0 {
            return Err(SeifertError::EvenPretzelParameter(v));
        }
    }
    let m = IntMatrix::from_i64_rows(&[
        &[(p1 + p2) / 2, -p2, 0, 0],
        &[0, (p2 + p3) / 2, -p3, 0],
        &[0, 0, (p3 + p4) / 2, -p4],
        &[0, 0, 0, (p4 - q) / 2],
    ]);
    let seifert = SeifertMatrix::new_relaxed(m)?;
    let min_p = p1.min(p2).min(p3).min(p4);
    let conditions = PretzelConditions {
        positivity: [p1, p2, p3, p4].iter().all(|&p| p >= 1) && q > min_p,
        congruence: [p1, p2, p3, p4].iter().all(|&p| p.rem_euclid(4) == 1)
            && q.rem_euclid(4) == 3,
        unimodular: seifert.is_unimodular(),
    };
    Ok((seifert, conditions))
}
