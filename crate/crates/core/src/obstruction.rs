//! Decision procedures for the crossing-change obstructions.
//!
//! The central test asks whether the Alexander polynomial admits a divisor
//! of the form `f(t)·f(t⁻¹)` with `|f(−1)| ≠ 1`.  Because `|f(−1)|` is
//! multiplicative over the irreducible factors of `f`, such an `f` exists
//! exactly when a single irreducible factor works: one that is usable (its
//! reciprocal pairs up inside `Δ`) and has `|p(−1)| ≠ 1`.  The detector
//! therefore never searches products; the brute-force sub-multiset search
//! exists as an independent oracle for that reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::factor::{factor_int, FactorError};
use crate::laurent::{IntPoly, LaurentPoly};
use crate::seifert::SeifertMatrix;

/// How an irreducible factor of `Δ` can contribute to an `f(t)f(t⁻¹)`
/// divisor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReciprocalKind {
    /// `p* = ±p`; each copy of `p` in `f` consumes two copies in `Δ`.
    SelfReciprocal,
    /// `p*` is a distinct irreducible also dividing `Δ`; copies pair up
    /// one-for-one.
    PairedWithDistinctReciprocal,
}

/// An irreducible factor of `Δ` that can appear in an admissible `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsableFactor {
    pub poly: IntPoly,
    pub kind: ReciprocalKind,
    /// Maximum number of copies of `poly` placeable in `f`.
    pub pair_capacity: u32,
    pub value_at_minus_one: BigInt,
}

/// Outcome of the bad-factor search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionVerdict {
    /// A minimal-degree single-irreducible witness `f` with
    /// `divides(f(t)·f(t⁻¹), Δ)` and `|f(−1)| ≠ 1`, when one exists.
    pub witness: Option<IntPoly>,
    pub usable: Vec<UsableFactor>,
}

impl ObstructionVerdict {
    pub fn bad_factor_exists(&self) -> bool {
        self.witness.is_some()
    }
}

/// Decomposes `Δ` into the irreducible building blocks of any `f(t)f(t⁻¹)`
/// divisor.  Constant factors are excluded: a constant `f` with
/// `|f(−1)| ≠ 1` cannot arise for a polynomial with `Δ(1) = ±1`.  Each
/// reciprocal pair is listed once, through its canonically smaller member.
pub fn usable_factors(delta: &LaurentPoly) -> Result<Vec<UsableFactor>, FactorError> {
    let rep = delta.int_rep().ok_or(FactorError::ZeroPolynomial)?;
    let factorization = factor_int(&rep)?;
    let factors = &factorization.factors;
    let mut out = Vec::new();
    for (p, mult) in factors {
        let recip = normalized_reciprocal(p);
        let (kind, capacity) = if &recip == p {
            if *mult >= 2 {
                (ReciprocalKind::SelfReciprocal, mult / 2)
            } else {
                continue;
            }
        } else {
            if p.canonical_cmp(&recip) == std::cmp::Ordering::Greater {
                continue; // the pair is reported through its smaller member
            }
            match factors.iter().find(|(q, _)| *q == recip) {
                Some((_, rm)) => (
                    ReciprocalKind::PairedWithDistinctReciprocal,
                    (*mult).min(*rm),
                ),
                None => continue,
            }
        };
        out.push(UsableFactor {
            poly: p.clone(),
            kind,
            pair_capacity: capacity,
            value_at_minus_one: p.eval(&BigInt::from(-1)),
        });
    }
    Ok(out)
}

/// `p* = ±t^{deg p}·p(1/t)` normalized to a positive leading coefficient,
/// so reciprocal-associates compare equal.
fn normalized_reciprocal(p: &IntPoly) -> IntPoly {
    let r = p.reciprocal().expect("irreducible factors are nonzero");
    if r.leading().is_some_and(Signed::is_negative) {
        -&r
    } else {
        r
    }
}

/// The bad-factor detector: does `Δ` have a divisor `f(t)·f(t⁻¹)` with
/// `|f(−1)| ≠ 1`?
///
/// Soundness: a usable factor `p` with `|p(−1)| ≠ 1` gives `f = p`.
/// Completeness: any admissible `f` is, up to units, a product of usable
/// irreducibles, and `|f(−1)| = ∏|pᵢ(−1)|^{aᵢ}`, so some single usable
/// factor already has `|p(−1)| ≠ 1` (a vanishing value counts as ≠ 1).
/// The witness is a usable factor of minimal degree, ties broken by the
/// canonical coefficient order.
pub fn detect_bad_factor(delta: &LaurentPoly) -> Result<ObstructionVerdict, FactorError> {
    let usable = usable_factors(delta)?;
    let witness = usable
        .iter()
        .filter(|u| !u.value_at_minus_one.abs().is_one())
        .min_by(|a, b| a.poly.canonical_cmp(&b.poly))
        .map(|u| u.poly.clone());
    Ok(ObstructionVerdict { witness, usable })
}

/// Independent oracle for [`detect_bad_factor`]: enumerates every
/// sub-multiset `S` of the irreducible factorization of `Δ`, forms
/// `f = ∏S`, and tests `divides(f(t)·f(t⁻¹), Δ)` and `|f(−1)| ≠ 1`
/// directly.  Guarded to small degrees.
pub fn detect_bad_factor_bruteforce(
    delta: &LaurentPoly,
    degree_cap: usize,
) -> Result<bool, FactorError> {
    let rep = delta.int_rep().ok_or(FactorError::ZeroPolynomial)?;
    if rep.degree().is_some_and(|d| d > degree_cap) {
        return Err(FactorError::DegreeGuard {
            degree: rep.degree().unwrap(),
            cap: degree_cap,
        });
    }
    let factorization = factor_int(&rep)?;
    let factors = &factorization.factors;
    let mut exponents = vec![0u32; factors.len()];
    loop {
        // advance the multi-index
        let mut i = 0;
        loop {
            if i == factors.len() {
                return Ok(false);
            }
            if exponents[i] < factors[i].1 {
                exponents[i] += 1;
                break;
            }
            exponents[i] = 0;
            i += 1;
        }
        let mut f = LaurentPoly::one();
        for (e, (p, _)) in exponents.iter().zip(factors) {
            for _ in 0..*e {
                f = &f * &p.to_laurent();
            }
        }
        let value = f.eval_at_minus_one().abs();
        if value.is_one() {
            continue;
        }
        let product = &f * &f.bar();
        let divides = product
            .divides(delta)
            .expect("product of irreducible factors is nonzero");
        if divides.is_some() {
            return Ok(true);
        }
    }
}

/// Does some prime square divide `d`?  Trial division up to the cube root,
/// then the remaining cofactor is prime, a prime square, or a product of
/// two distinct primes; a perfect-square check settles it.
pub fn det_has_square_factor(d: &BigInt) -> bool {
    let mut n = d.abs();
    if n.is_zero() {
        return true;
    }
    let mut p = BigInt::from(2);
    while &p * &p * &p <= n {
        if n.mod_floor(&p).is_zero() {
            let mut count = 0;
            while n.mod_floor(&p).is_zero() {
                n /= &p;
                count += 1;
                if count >= 2 {
                    return true;
                }
            }
        }
        p += 1;
    }
    if n.is_one() {
        return false;
    }
    // n is now p, p^2, or p*q with p, q distinct primes
    let root = n.sqrt();
    &root * &root == n
}

/// The invariant factors of `V + Vᵀ` together with whether each is
/// square-free (the stronger homology obstruction).
pub fn invariant_factors_square_free(v: &SeifertMatrix) -> (bool, Vec<BigInt>) {
    let factors = v.invariant_factors();
    let all_square_free = factors.iter().all(|d| !det_has_square_factor(d));
    (all_square_free, factors)
}
