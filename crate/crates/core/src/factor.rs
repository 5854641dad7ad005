//! Complete factorization of integer polynomials into irreducibles, plus
//! factorization over prime fields.
//!
//! The integer route is Zassenhaus: square-free decomposition (Yun), a good
//! small prime, distinct-degree/equal-degree splitting over `𝔽_p`, Hensel
//! lifting to a Landau–Mignotte coefficient bound, and subset recombination
//! smallest-subsets-first.  Census-scale inputs have degree ≤ 12, so the
//! exponential recombination never bites and no lattice reduction is needed.
//!
//! [`factor_kronecker`] is an independent brute-force oracle (divisor
//! enumeration plus interpolation) with an identical result contract; the
//! two are checked against each other by the test suite.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::laurent::IntPoly;

/// Errors from the factorization routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FactorError {
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} exceeds the supported modulus range")]
    PrimeTooLarge(u64),
    #[error("leading coefficient vanishes modulo {0}")]
    LeadingCoefficientVanishes(u64),
    #[error("input factors are not pairwise coprime modulo the prime")]
    NonCoprimeFactors,
    #[error("product of input factors does not match the target modulo the prime")]
    ProductMismatch,
    #[error("degree {degree} exceeds the guard {cap}")]
    DegreeGuard { degree: usize, cap: usize },
}

/// Factorization of a nonzero integer polynomial:
/// `sign · content · ∏ factorᵢ^{multᵢ}` reconstructs the input exactly.
///
/// Factors are primitive irreducibles with positive leading coefficient,
/// pairwise non-associate, sorted by degree then coefficient order, so
/// equality of `Factorization` values is meaningful.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub sign: i8,
    pub content: BigInt,
    pub factors: Vec<(IntPoly, u32)>,
}

impl Factorization {
    fn new(sign: i8, content: BigInt, mut factors: Vec<(IntPoly, u32)>) -> Self {
        factors.sort_by(|(a, _), (b, _)| a.canonical_cmp(b));
        Self { sign, content, factors }
    }

    /// Multiplies the pieces back together.
    pub fn reconstruct(&self) -> IntPoly {
        let mut acc = IntPoly::constant(self.content.clone() * BigInt::from(self.sign));
        for (p, m) in &self.factors {
            for _ in 0..*m {
                acc = &acc * p;
            }
        }
        acc
    }

    pub fn is_irreducible(&self) -> bool {
        self.content.is_one()
            && self.factors.len() == 1
            && self.factors[0].1 == 1
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        let mut wrote = false;
        if !self.content.is_one() || self.factors.is_empty() {
            write!(f, "{}", self.content)?;
            wrote = true;
        }
        for (p, m) in &self.factors {
            if wrote {
                write!(f, " * ")?;
            }
            write!(f, "({p})")?;
            if *m > 1 {
                write!(f, "^{m}")?;
            }
            wrote = true;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// GF(2) polynomials as bitsets

/// Polynomial over `𝔽₂`, one bit per exponent, canonical (no bits above the
/// degree).  Supports degrees up to 127 for products of degree-63 inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Gf2Poly {
    bits: u128,
}

impl Gf2Poly {
    pub const ZERO: Self = Self { bits: 0 };
    pub const ONE: Self = Self { bits: 1 };
    pub const X: Self = Self { bits: 2 };

    pub fn from_bits(bits: u128) -> Self {
        Self { bits }
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// Reduction of an integer polynomial modulo 2.  Degrees above 127 are
    /// outside this compact representation.
    pub fn from_int_poly(p: &IntPoly) -> Option<Self> {
        if p.degree().is_some_and(|d| d > 127) {
            return None;
        }
        let mut bits = 0u128;
        for (i, c) in p.coeffs().iter().enumerate() {
            if c.is_odd() {
                bits |= 1 << i;
            }
        }
        Some(Self { bits })
    }

    pub fn to_int_poly(&self) -> IntPoly {
        let mut coeffs = Vec::new();
        for i in 0..128 {
            coeffs.push(BigInt::from((self.bits >> i) & 1));
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn degree(&self) -> Option<u32> {
        if self.bits == 0 {
            None
        } else {
            Some(127 - self.bits.leading_zeros())
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self { bits: self.bits ^ rhs.bits }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut acc = 0u128;
        let mut a = self.bits;
        let mut shift = 0;
        while a != 0 {
            if a & 1 == 1 {
                acc ^= rhs.bits << shift;
            }
            a >>= 1;
            shift += 1;
        }
        Self { bits: acc }
    }

    /// Remainder modulo a nonzero divisor.
    pub fn rem(&self, m: &Self) -> Self {
        let dm = m.degree().expect("nonzero modulus");
        let mut r = self.bits;
        while r != 0 {
            let dr = 127 - r.leading_zeros();
            if dr < dm {
                break;
            }
            r ^= m.bits << (dr - dm);
        }
        Self { bits: r }
    }

    pub fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (*self, *rhs);
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    pub fn square_mod(&self, m: &Self) -> Self {
        debug_assert!(self.degree().is_none_or(|d| d <= 63));
        // squaring over F_2 spreads the bits
        let mut sq = 0u128;
        for i in 0..64 {
            if (self.bits >> i) & 1 == 1 {
                sq |= 1 << (2 * i);
            }
        }
        Self { bits: sq }.rem(m)
    }

    pub fn derivative(&self) -> Self {
        // d/dt kills even-exponent terms and shifts odd ones down
        let mut out = 0u128;
        let mut i = 1;
        while i < 128 {
            if (self.bits >> i) & 1 == 1 {
                out |= 1 << (i - 1);
            }
            i += 2;
        }
        Self { bits: out }
    }

    /// Irreducibility over `𝔽₂` by iterated Frobenius: `x^{2^i} mod f` must
    /// first return to `x` at `i = deg f`, with the intermediate gcd checks.
    pub fn is_irreducible(&self) -> bool {
        let Some(n) = self.degree() else { return false };
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let mut h = Self::X;
        for _ in 0..n / 2 {
            h = h.square_mod(self);
            let g = self.gcd(&h.add(&Self::X));
            if g.degree() != Some(0) {
                return false;
            }
        }
        for _ in n / 2..n {
            h = h.square_mod(self);
        }
        h == Self::X
    }

    /// Complete factorization over `𝔽₂` with multiplicities.
    pub fn factor(&self) -> Vec<(Gf2Poly, u32)> {
        assert!(!self.is_zero(), "cannot factor the zero polynomial");
        let mf = ModPoly::from_gf2(self);
        let factors = mf.factor();
        let mut out: Vec<(Gf2Poly, u32)> = factors
            .into_iter()
            .map(|(p, m)| (p.to_gf2(), m))
            .collect();
        out.sort_by_key(|(p, _)| p.bits);
        out
    }
}

impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in 0..128 {
            if (self.bits >> i) & 1 == 1 {
                if !first {
                    write!(f, "+")?;
                }
                match i {
                    0 => write!(f, "1")?,
                    1 => write!(f, "t")?,
                    _ => write!(f, "t^{i}")?,
                }
                first = false;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// dense polynomials over F_p (p < 2^31)

#[derive(Debug, Clone, PartialEq, Eq)]
struct ModPoly {
    p: u64,
    c: Vec<u64>, // ascending exponents, reduced, no leading zeros
}

impl ModPoly {
    fn new(p: u64, mut c: Vec<u64>) -> Self {
        for x in &mut c {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        Self { p, c }
    }

    fn zero(p: u64) -> Self {
        Self { p, c: vec![] }
    }

    fn constant(p: u64, v: u64) -> Self {
        Self::new(p, vec![v])
    }

    fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    fn from_int_poly(p: u64, poly: &IntPoly) -> Self {
        let m = BigInt::from(p);
        Self::new(
            p,
            poly.coeffs()
                .iter()
                .map(|c| c.mod_floor(&m).to_u64().unwrap())
                .collect(),
        )
    }

    fn from_gf2(g: &Gf2Poly) -> Self {
        let mut c = Vec::new();
        for i in 0..128 {
            c.push(((g.bits >> i) & 1) as u64);
        }
        Self::new(2, c)
    }

    fn to_gf2(&self) -> Gf2Poly {
        let mut bits = 0u128;
        for (i, &x) in self.c.iter().enumerate() {
            if x & 1 == 1 {
                bits |= 1 << i;
            }
        }
        Gf2Poly::from_bits(bits)
    }

    fn to_int_poly(&self) -> IntPoly {
        IntPoly::from_coeffs(self.c.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    fn lead(&self) -> u64 {
        *self.c.last().unwrap_or(&0)
    }

    fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0] == 1
    }

    fn addm(&self, rhs: &Self) -> Self {
        let n = self.c.len().max(rhs.c.len());
        let mut out = vec![0u64; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.c.get(i).copied().unwrap_or(0);
            let b = rhs.c.get(i).copied().unwrap_or(0);
            *o = (a + b) % self.p;
        }
        Self::new(self.p, out)
    }

    fn subm(&self, rhs: &Self) -> Self {
        let n = self.c.len().max(rhs.c.len());
        let mut out = vec![0u64; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.c.get(i).copied().unwrap_or(0);
            let b = rhs.c.get(i).copied().unwrap_or(0);
            *o = (a + self.p - b) % self.p;
        }
        Self::new(self.p, out)
    }

    fn mulm(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(self.p);
        }
        let mut out = vec![0u64; self.c.len() + rhs.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            for (j, &b) in rhs.c.iter().enumerate() {
                let v = (a as u128 * b as u128 + out[i + j] as u128) % self.p as u128;
                out[i + j] = v as u64;
            }
        }
        Self::new(self.p, out)
    }

    fn scale(&self, k: u64) -> Self {
        Self::new(
            self.p,
            self.c
                .iter()
                .map(|&a| ((a as u128 * k as u128) % self.p as u128) as u64)
                .collect(),
        )
    }

    fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = mod_inv(d.lead(), self.p);
        let mut rem = self.c.clone();
        if rem.len() <= dd {
            return (Self::zero(self.p), self.clone());
        }
        let mut quo = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if c == 0 {
                continue;
            }
            let q = ((c as u128 * inv as u128) % self.p as u128) as u64;
            quo[i - dd] = q;
            for (j, &dc) in d.c.iter().enumerate() {
                let sub = (q as u128 * dc as u128) % self.p as u128;
                let idx = i - dd + j;
                rem[idx] = ((rem[idx] as u128 + self.p as u128 - sub) % self.p as u128) as u64;
            }
        }
        (Self::new(self.p, quo), Self::new(self.p, rem))
    }

    fn remm(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    fn gcdm(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.remm(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Extended gcd: returns `(g, s, t)` with `s·self + t·rhs = g`, `g` monic.
    fn xgcd(&self, rhs: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut s0, mut s1) = (Self::constant(p, 1), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::constant(p, 1));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.subm(&q.mulm(&s1));
            let t = t0.subm(&q.mulm(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = mod_inv(r0.lead(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(mod_inv(self.lead(), self.p))
    }

    fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return Self::zero(self.p);
        }
        Self::new(
            self.p,
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| ((c as u128 * (i as u128 % self.p as u128)) % self.p as u128) as u64)
                .collect(),
        )
    }

    fn pow_mod(&self, mut e: num_bigint::BigUint, m: &Self) -> Self {
        let mut base = self.remm(m);
        let mut acc = Self::constant(self.p, 1);
        while !e.is_zero() {
            if e.is_odd() {
                acc = acc.mulm(&base).remm(m);
            }
            base = base.mulm(&base).remm(m);
            e >>= 1;
        }
        acc
    }

    /// Frobenius power `self^p mod m`.
    fn frobenius(&self, m: &Self) -> Self {
        self.pow_mod(num_bigint::BigUint::from(self.p), m)
    }

    // -- factorization over F_p --------------------------------------------

    /// Square-free decomposition in characteristic p, monic input.
    fn squarefree_parts(&self) -> Vec<(Self, u32)> {
        let p = self.p;
        let mut out: Vec<(Self, u32)> = Vec::new();
        let f = self.monic();
        if f.degree() == Some(0) {
            return out;
        }
        let fp = f.derivative();
        if fp.is_zero() {
            // f is a p-th power: contract exponents and recurse
            let root = f.pth_root();
            for (g, m) in root.squarefree_parts() {
                out.push((g, m * p as u32));
            }
            return out;
        }
        let mut c = f.gcdm(&fp);
        let mut w = f.divrem(&c).0;
        let mut i = 1u32;
        while w.degree() != Some(0) {
            let y = w.gcdm(&c);
            let z = w.divrem(&y).0;
            if z.degree() != Some(0) {
                out.push((z.monic(), i));
            }
            w = y.clone();
            c = c.divrem(&y).0;
            i += 1;
        }
        if c.degree() != Some(0) {
            // leftover p-th power part
            let root = c.pth_root();
            for (g, m) in root.squarefree_parts() {
                out.push((g, m * p as u32));
            }
        }
        out
    }

    /// For f with zero derivative (all exponents divisible by p), the g with
    /// g(x)^p = f(x); over F_p this is exponent contraction.
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        let mut c = Vec::new();
        let mut i = 0;
        while i < self.c.len() {
            c.push(self.c[i]);
            i += p;
        }
        Self::new(self.p, c)
    }

    /// Distinct-degree factorization of a monic square-free polynomial:
    /// returns `(product-of-irreducibles-of-degree-d, d)` pairs.
    fn distinct_degree(&self) -> Vec<(Self, u32)> {
        let mut out = Vec::new();
        let mut f = self.monic();
        let mut h = Self::x(self.p);
        let mut d = 0u32;
        while f.degree().is_some_and(|n| n >= 1) {
            d += 1;
            if (f.degree().unwrap() as u32) < 2 * d {
                out.push((f.clone(), f.degree().unwrap() as u32));
                break;
            }
            h = h.frobenius(&f);
            let g = f.gcdm(&h.subm(&Self::x(self.p)));
            if g.degree().is_some_and(|n| n >= 1) {
                out.push((g.clone(), d));
                f = f.divrem(&g).0;
                h = h.remm(&f);
            }
        }
        out
    }

    /// Equal-degree splitting: `self` is monic, square-free, and a product
    /// of irreducibles all of degree `d`.
    fn equal_degree(&self, d: u32, rng: &mut Lcg) -> Vec<Self> {
        let n = self.degree().unwrap() as u32;
        if n == d {
            return vec![self.monic()];
        }
        let p = self.p;
        loop {
            let a = Self::new(p, (0..n).map(|_| rng.next_below(p)).collect());
            if a.degree().is_none() {
                continue;
            }
            let b = if p == 2 {
                // trace map over F_{2^d}
                let mut acc = a.clone();
                let mut t = a.clone();
                for _ in 1..d {
                    t = t.mulm(&t).remm(self);
                    acc = acc.addm(&t);
                }
                acc
            } else {
                // a^((p^d - 1)/2) - 1
                let e = (num_bigint::BigUint::from(p).pow(d) - 1u32) / 2u32;
                let t = a.pow_mod(e, self);
                t.subm(&Self::constant(p, 1))
            };
            let g = self.gcdm(&b);
            if let Some(dg) = g.degree() {
                if dg >= 1 && dg < self.degree().unwrap() {
                    let rest = self.divrem(&g).0;
                    let mut out = g.equal_degree(d, rng);
                    out.extend(rest.equal_degree(d, rng));
                    return out;
                }
            }
        }
    }

    /// Complete monic irreducible factorization with multiplicities.
    fn factor(&self) -> Vec<(Self, u32)> {
        let mut rng = Lcg::new(0x5eed_cafe);
        let mut out = Vec::new();
        for (part, mult) in self.monic().squarefree_parts() {
            for (prod, d) in part.distinct_degree() {
                for irr in prod.equal_degree(d, &mut rng) {
                    out.push((irr, mult));
                }
            }
        }
        out
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // extended Euclid on integers
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "element not invertible");
    ((t % p as i128 + p as i128) % p as i128) as u64
}

/// Small deterministic generator for equal-degree splitting.
struct Lcg {
    state: u64,
}

impl Lcg {
    fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    fn next(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.state >> 16
    }

    fn next_below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for d in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        if n == d {
            return true;
        }
        if n.is_multiple_of(d) {
            return false;
        }
    }
    let mut d = 37u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

// ---------------------------------------------------------------------------
// public operations

/// Factorization over `𝔽_p`: a scalar unit times monic irreducible factors
/// with multiplicities, coefficients reduced to `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModFactorization {
    pub prime: u64,
    pub unit: u64,
    pub factors: Vec<(IntPoly, u32)>,
}

impl ModFactorization {
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Complete irreducible factorization of `p` over `𝔽_prime` via
/// distinct-degree then equal-degree splitting.
pub fn factor_mod_p(p: &IntPoly, prime: u64) -> Result<ModFactorization, FactorError> {
    if p.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    if !is_prime_u64(prime) {
        return Err(FactorError::NotPrime(prime));
    }
    if prime >= 1 << 31 {
        return Err(FactorError::PrimeTooLarge(prime));
    }
    let mp = ModPoly::from_int_poly(prime, p);
    if mp.degree() != p.degree() {
        return Err(FactorError::LeadingCoefficientVanishes(prime));
    }
    let unit = mp.lead();
    let mut factors: Vec<(IntPoly, u32)> = mp
        .factor()
        .into_iter()
        .map(|(f, m)| (f.to_int_poly(), m))
        .collect();
    factors.sort_by(|(a, _), (b, _)| a.canonical_cmp(b));
    Ok(ModFactorization { prime, unit, factors })
}

/// Yun's square-free decomposition over ℤ: pairwise-coprime square-free
/// parts whose product with multiplicities reconstructs `p / content` up to
/// sign.
pub fn squarefree_decompose(p: &IntPoly) -> Result<Vec<(IntPoly, u32)>, FactorError> {
    if p.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    let (_, prim) = p.content_and_primitive().unwrap();
    if prim.degree() == Some(0) {
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    let deriv = prim.derivative();
    let g = prim.gcd(&deriv);
    if g.degree() == Some(0) {
        return Ok(vec![(prim, 1)]);
    }
    let mut b = prim.exact_div(&g).expect("gcd divides");
    let mut c = deriv.exact_div(&g).expect("gcd divides derivative");
    let mut d = &c - &b.derivative();
    let mut i = 1u32;
    loop {
        let a = b.gcd(&d);
        if a.degree().is_some_and(|x| x >= 1) {
            out.push((a.primitive_part(), i));
        }
        b = b.exact_div(&a).expect("factor divides");
        if b.degree() == Some(0) {
            break;
        }
        c = d.exact_div(&a).expect("factor divides");
        d = &c - &b.derivative();
        i += 1;
    }
    Ok(out)
}

/// Lifts a factorization of `p` modulo `prime` to modulo `prime^k`.
///
/// The inputs must be pairwise coprime mod `prime`; their product must agree
/// with `p` mod `prime` up to a scalar, which is absorbed into the first
/// factor.  Returned factors use symmetric representatives, are congruent to
/// the (scalar-normalized) inputs mod `prime`, and multiply to `p` mod
/// `prime^k`.
pub fn hensel_lift(
    p: &IntPoly,
    factors: &[IntPoly],
    prime: u64,
    k: u32,
) -> Result<Vec<IntPoly>, FactorError> {
    if p.is_zero() || factors.iter().any(IntPoly::is_zero) {
        return Err(FactorError::ZeroPolynomial);
    }
    if !is_prime_u64(prime) {
        return Err(FactorError::NotPrime(prime));
    }
    let mods: Vec<ModPoly> = factors
        .iter()
        .map(|f| ModPoly::from_int_poly(prime, f))
        .collect();
    for (m, f) in mods.iter().zip(factors) {
        if m.degree() != f.degree() {
            return Err(FactorError::LeadingCoefficientVanishes(prime));
        }
    }
    for i in 0..mods.len() {
        for j in i + 1..mods.len() {
            if mods[i].gcdm(&mods[j]).degree() != Some(0) {
                return Err(FactorError::NonCoprimeFactors);
            }
        }
    }
    let target = ModPoly::from_int_poly(prime, p);
    let mut prod = ModPoly::constant(prime, 1);
    for f in &mods {
        prod = prod.mulm(f);
    }
    if prod.degree() != target.degree() {
        return Err(FactorError::ProductMismatch);
    }
    let scalar = {
        // target = c * prod mod prime for a scalar c
        let c = ((target.lead() as u128 * mod_inv(prod.lead(), prime) as u128)
            % prime as u128) as u64;
        if prod.scale(c) != target {
            return Err(FactorError::ProductMismatch);
        }
        c
    };

    let pk = BigInt::from(prime).pow(k);
    // working copies over Z, first factor absorbs the scalar and the
    // leading-coefficient correction so that lc(prod) = lc(p) mod prime^k
    let mut lifted: Vec<Vec<BigInt>> = factors
        .iter()
        .map(|f| f.coeffs().to_vec())
        .collect();
    for c in &mut lifted[0] {
        *c *= BigInt::from(scalar);
    }
    {
        let mut lc_others = BigInt::one();
        for f in lifted.iter().skip(1) {
            lc_others *= f.last().unwrap();
        }
        let lc_target = p.leading().unwrap().mod_floor(&pk);
        let inv = mod_inv_big(&lc_others.mod_floor(&pk), &pk, prime);
        let u = (lc_target * inv).mod_floor(&pk);
        let lead = lifted[0].last_mut().unwrap();
        *lead = u;
        // reduce the rest of factor 0 mod p^k as well
        for c in &mut lifted[0] {
            *c = c.mod_floor(&pk);
        }
    }

    // Bezout data: b_i = (prod_{l != i} f_l)^{-1} mod (f_i, prime)
    let bezout: Vec<ModPoly> = (0..mods.len())
        .map(|i| {
            let mut others = ModPoly::constant(prime, 1);
            for (j, f) in mods.iter().enumerate() {
                if j != i {
                    others = others.mulm(f);
                }
            }
            let fi = &mods[i];
            let (g, _, t) = fi.xgcd(&others);
            debug_assert!(g.is_one());
            t.remm(fi)
        })
        .collect();

    let big_p = BigInt::from(prime);
    let mut modulus = big_p.clone();
    while modulus < pk {
        let next = (&modulus * &big_p).min(pk.clone());
        // e = (p - prod lifted) / modulus, reduced mod prime
        let mut prod_z = vec![BigInt::one()];
        for f in &lifted {
            prod_z = poly_mul_big(&prod_z, f);
        }
        let mut err = p.coeffs().to_vec();
        if err.len() < prod_z.len() {
            err.resize(prod_z.len(), BigInt::zero());
        }
        for (i, c) in prod_z.iter().enumerate() {
            err[i] -= c;
        }
        let e_over: Vec<BigInt> = err
            .iter()
            .map(|c| {
                let (q, r) = c.div_rem(&modulus);
                debug_assert!(r.is_zero(), "lift invariant broken");
                q
            })
            .collect();
        let e_bar = ModPoly::new(
            prime,
            e_over
                .iter()
                .map(|c| c.mod_floor(&big_p).to_u64().unwrap())
                .collect(),
        );
        for (i, f) in lifted.iter_mut().enumerate() {
            let delta = e_bar.mulm(&bezout[i]).remm(&mods[i]);
            for (j, &dc) in delta.c.iter().enumerate() {
                f[j] += &modulus * BigInt::from(dc);
            }
            for c in f.iter_mut() {
                *c = c.mod_floor(&next);
            }
        }
        modulus = next;
    }

    Ok(lifted
        .into_iter()
        .map(|c| IntPoly::from_coeffs(c.into_iter().map(|x| symmetric(&x, &pk)).collect()))
        .collect())
}

fn mod_inv_big(a: &BigInt, m: &BigInt, prime: u64) -> BigInt {
    // a is a unit mod m = prime^k; Newton iteration from the inverse mod prime
    let p = BigInt::from(prime);
    let a0 = a.mod_floor(&p).to_u64().unwrap();
    let mut inv = BigInt::from(mod_inv(a0, prime));
    let mut pk = p.clone();
    while &pk < m {
        pk = (&pk * &pk).min(m.clone());
        inv = (&inv * (BigInt::from(2) - a * &inv)).mod_floor(&pk);
    }
    inv.mod_floor(m)
}

fn poly_mul_big(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn symmetric(c: &BigInt, modulus: &BigInt) -> BigInt {
    let r = c.mod_floor(modulus);
    if &r * 2 > *modulus {
        r - modulus
    } else {
        r
    }
}

/// Complete factorization over ℤ into content, sign, and primitive
/// irreducibles with multiplicities (Zassenhaus).
pub fn factor_int(p: &IntPoly) -> Result<Factorization, FactorError> {
    if p.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    let sign = if p.leading().unwrap().is_negative() { -1 } else { 1 };
    let (content, prim) = p.content_and_primitive().unwrap();
    if prim.degree() == Some(0) {
        return Ok(Factorization::new(sign, content, vec![]));
    }
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decompose(&prim)? {
        for irr in factor_squarefree(&part) {
            factors.push((irr, mult));
        }
    }
    Ok(Factorization::new(sign, content, factors))
}

/// Factors a primitive square-free polynomial of degree ≥ 1.
fn factor_squarefree(q: &IntPoly) -> Vec<IntPoly> {
    let n = q.degree().unwrap();
    if n == 1 {
        return vec![q.clone()];
    }
    let lc = q.leading().unwrap().clone();
    if lc.is_one() {
        return zassenhaus_monic(q);
    }
    // monicize by substitution: F(x) = lc^(n-1) * q(x/lc) is monic with
    // integer coefficients; factor F, then map factors back by x -> lc*t
    // and take primitive parts
    let mut coeffs = Vec::with_capacity(n + 1);
    for (i, c) in q.coeffs().iter().enumerate() {
        if i == n {
            coeffs.push(BigInt::one());
        } else {
            coeffs.push(c * lc.pow((n - 1 - i) as u32));
        }
    }
    let f = IntPoly::from_coeffs(coeffs);
    let mut out = Vec::new();
    for g in zassenhaus_monic(&f) {
        // substitute x = lc * t
        let mapped = IntPoly::from_coeffs(
            g.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| c * lc.pow(i as u32))
                .collect(),
        );
        out.push(mapped.primitive_part());
    }
    out
}

/// Zassenhaus on a monic square-free polynomial of degree ≥ 2.
fn zassenhaus_monic(f: &IntPoly) -> Vec<IntPoly> {
    let n = f.degree().unwrap();
    // pick a good odd prime: f stays square-free mod p; among the first few
    // candidates keep the one with the fewest modular factors
    let mut best: Option<(u64, Vec<ModPoly>)> = None;
    let mut tried = 0;
    let mut prime = 3u64;
    while tried < 5 {
        if is_prime_u64(prime) {
            let mp = ModPoly::from_int_poly(prime, f);
            if mp.degree() == Some(n) {
                let g = mp.gcdm(&mp.derivative());
                if g.degree() == Some(0) {
                    let facs: Vec<ModPoly> = mp
                        .factor()
                        .into_iter()
                        .map(|(p, m)| {
                            debug_assert_eq!(m, 1);
                            p
                        })
                        .collect();
                    if facs.len() == 1 {
                        return vec![f.clone()]; // irreducible mod p
                    }
                    if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
                        best = Some((prime, facs));
                    }
                    tried += 1;
                }
            }
        }
        prime += 2;
    }
    let (prime, modular) = best.expect("a square-free prime always exists");

    // Landau-Mignotte style bound on factor coefficients, then lift
    let norm2: BigInt = f.coeffs().iter().map(|c| c * c).sum::<BigInt>().sqrt() + 1;
    let bound = norm2 << (n + 1);
    let mut k = 1u32;
    let mut pk = BigInt::from(prime);
    while pk <= &bound * 2 {
        pk *= prime;
        k += 1;
    }
    let lifted = hensel_lift(
        f,
        &modular.iter().map(ModPoly::to_int_poly).collect::<Vec<_>>(),
        prime,
        k,
    )
    .expect("lift preconditions hold by construction");

    // subset recombination, smallest subsets first
    let mut remaining: Vec<IntPoly> = lifted;
    let mut current = f.clone();
    let mut out = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= remaining.len() {
        let idxs: Vec<usize> = (0..remaining.len()).collect();
        for combo in combinations(&idxs, size) {
            let mut prod = vec![BigInt::one()];
            for &i in &combo {
                prod = poly_mul_big(&prod, remaining[i].coeffs());
                for c in &mut prod {
                    *c = c.mod_floor(&pk);
                }
            }
            let candidate =
                IntPoly::from_coeffs(prod.iter().map(|c| symmetric(c, &pk)).collect());
            if candidate.is_zero() {
                continue;
            }
            if let Some(quotient) = current.exact_div(&candidate) {
                out.push(candidate);
                current = quotient;
                let mut keep = Vec::new();
                for (i, g) in remaining.drain(..).enumerate() {
                    if !combo.contains(&i) {
                        keep.push(g);
                    }
                }
                remaining = keep;
                continue 'outer;
            }
        }
        size += 1;
    }
    if current.degree().is_some_and(|d| d >= 1) {
        out.push(current);
    }
    out
}

fn combinations(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut combo = Vec::with_capacity(size);
    fn rec(items: &[usize], size: usize, start: usize, combo: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if combo.len() == size {
            out.push(combo.clone());
            return;
        }
        for i in start..items.len() {
            combo.push(items[i]);
            rec(items, size, i + 1, combo, out);
            combo.pop();
        }
    }
    rec(items, size, 0, &mut combo, &mut out);
    out
}

/// Degree guard for the Kronecker oracle.
pub const KRONECKER_DEGREE_CAP: usize = 12;

/// Brute-force factorization by Kronecker's method: evaluate at integer
/// nodes, enumerate divisor tuples, interpolate trial divisors.  Same result
/// contract as [`factor_int`]; guarded to degree ≤ 12.
pub fn factor_kronecker(p: &IntPoly) -> Result<Factorization, FactorError> {
    if p.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    let deg = p.degree().unwrap();
    if deg > KRONECKER_DEGREE_CAP {
        return Err(FactorError::DegreeGuard { degree: deg, cap: KRONECKER_DEGREE_CAP });
    }
    let sign = if p.leading().unwrap().is_negative() { -1 } else { 1 };
    let (content, prim) = p.content_and_primitive().unwrap();
    let mut factors: Vec<(IntPoly, u32)> = Vec::new();
    let mut rest = prim;
    while rest.degree().is_some_and(|d| d >= 1) {
        let f = kronecker_find_irreducible(&rest);
        let mut mult = 0u32;
        while let Some(q) = rest.exact_div(&f) {
            rest = q;
            mult += 1;
        }
        factors.push((f, mult));
    }
    Ok(Factorization::new(sign, content, factors))
}

/// Finds an irreducible factor of a primitive polynomial of degree ≥ 1 by
/// searching candidate degrees from 1 upward; if no proper factor exists the
/// input itself is returned.
fn kronecker_find_irreducible(q: &IntPoly) -> IntPoly {
    let n = q.degree().unwrap();
    if n == 1 {
        return q.clone();
    }
    for d in 1..=n / 2 {
        if let Some(g) = kronecker_search_degree(q, d) {
            return g;
        }
    }
    q.clone()
}

fn kronecker_search_degree(q: &IntPoly, d: usize) -> Option<IntPoly> {
    // nodes 0, 1, -1, 2, -2, ...
    let nodes: Vec<BigInt> = (0..=d as i64)
        .map(|i| {
            let k = (i + 1) / 2;
            BigInt::from(if i % 2 == 1 { k } else { -k })
        })
        .collect();
    let mut values = Vec::with_capacity(nodes.len());
    for x in &nodes {
        let v = q.eval(x);
        if v.is_zero() {
            // x is an integer root, so (t - x) divides q
            let linear = IntPoly::from_coeffs(vec![-x, BigInt::one()]);
            return Some(linear);
        }
        values.push(v);
    }
    // divisor candidates per node; node 0 restricted to positive divisors
    let mut candidates: Vec<Vec<BigInt>> = Vec::with_capacity(nodes.len());
    for (i, v) in values.iter().enumerate() {
        let divs = positive_divisors(&v.abs());
        let mut c = Vec::with_capacity(divs.len() * 2);
        for dv in divs {
            c.push(dv.clone());
            if i > 0 {
                c.push(-dv);
            }
        }
        candidates.push(c);
    }
    let mut chosen: Vec<BigInt> = Vec::with_capacity(nodes.len());
    kronecker_rec(q, d, &nodes, &candidates, &mut chosen)
}

fn kronecker_rec(
    q: &IntPoly,
    d: usize,
    nodes: &[BigInt],
    candidates: &[Vec<BigInt>],
    chosen: &mut Vec<BigInt>,
) -> Option<IntPoly> {
    let i = chosen.len();
    if i == nodes.len() {
        let g = interpolate_integer(nodes, chosen)?;
        if g.degree() != Some(d) {
            return None;
        }
        let g = if g.leading().unwrap().is_negative() { -&g } else { g };
        return q.exact_div(&g).map(|_| g);
    }
    for c in &candidates[i] {
        // integer polynomials satisfy g(a) = g(b) mod (a - b)
        let ok = chosen.iter().enumerate().all(|(j, prev)| {
            let diff = &nodes[i] - &nodes[j];
            (c - prev).mod_floor(&diff.abs()).is_zero()
        });
        if !ok {
            continue;
        }
        chosen.push(c.clone());
        if let Some(g) = kronecker_rec(q, d, nodes, candidates, chosen) {
            return Some(g);
        }
        chosen.pop();
    }
    None
}

/// Exact Lagrange interpolation; `None` when the result is not integral.
fn interpolate_integer(nodes: &[BigInt], values: &[BigInt]) -> Option<IntPoly> {
    use num_rational::BigRational;
    let n = nodes.len();
    let mut acc = vec![BigRational::zero(); n];
    for i in 0..n {
        // basis polynomial prod_{j != i} (t - x_j) / (x_i - x_j)
        let mut num = vec![BigRational::one()];
        let mut den = BigRational::one();
        for (j, xj) in nodes.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut next = vec![BigRational::zero(); num.len() + 1];
            for (k, c) in num.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * BigRational::from_integer(xj.clone());
            }
            num = next;
            den *= BigRational::from_integer(&nodes[i] - xj);
        }
        let scale = BigRational::from_integer(values[i].clone()) / den;
        for (k, c) in num.iter().enumerate() {
            acc[k] += c * &scale;
        }
    }
    let mut coeffs = Vec::with_capacity(n);
    for c in acc {
        if !c.is_integer() {
            return None;
        }
        coeffs.push(c.to_integer());
    }
    Some(IntPoly::from_coeffs(coeffs))
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    debug_assert!(n.is_positive());
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if n.mod_floor(&d).is_zero() {
            small.push(d.clone());
            let q = n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn squarefree_cases() {
        // (1+t)^2 (1-t) = 1 + t - t^2 - t^3
        let p = ip(&[1, 1, -1, -1]);
        let parts = squarefree_decompose(&p).unwrap();
        assert_eq!(parts, vec![(ip(&[-1, 1]), 1), (ip(&[1, 1]), 2)]);
        let q = ip(&[1, -1, 1]);
        assert_eq!(squarefree_decompose(&q).unwrap(), vec![(q.clone(), 1)]);
        let q2 = &q * &q;
        assert_eq!(squarefree_decompose(&q2).unwrap(), vec![(q, 2)]);
    }

    #[test]
    fn factor_mod_2_cases() {
        // psi = 1 + t + t^2 + t^3 + t^4 irreducible over F_2
        let psi = ip(&[1, 1, 1, 1, 1]);
        let f = factor_mod_p(&psi, 2).unwrap();
        assert!(f.is_irreducible());
        // 1 + t^2 = (1 + t)^2 over F_2
        let f = factor_mod_p(&ip(&[1, 0, 1]), 2).unwrap();
        assert_eq!(f.factors, vec![(ip(&[1, 1]), 2)]);
        // 1 + t^2 + t^4 = (1 + t + t^2)^2 over F_2
        let f = factor_mod_p(&ip(&[1, 0, 1, 0, 1]), 2).unwrap();
        assert_eq!(f.factors, vec![(ip(&[1, 1, 1]), 2)]);
    }

    #[test]
    fn gf2_psi_argument() {
        let psi = Gf2Poly::from_bits(0b11111);
        assert!(psi.is_irreducible());
        // the only irreducible quadratic is 1 + t + t^2, and its square
        // is 1 + t^2 + t^4 != psi
        let quad = Gf2Poly::from_bits(0b111);
        assert!(quad.is_irreducible());
        assert!(!Gf2Poly::from_bits(0b101).is_irreducible());
        assert!(!Gf2Poly::from_bits(0b110).is_irreducible());
        assert_eq!(quad.mul(&quad).bits(), 0b10101);
        assert_ne!(quad.mul(&quad), psi);
    }

    #[test]
    fn factor_mod_odd_prime() {
        // 2t^2 - 5t + 2 = (2t - 1)(t - 2); over F_5: unit 2, roots 2 and 3
        let p = ip(&[2, -5, 2]);
        let f = factor_mod_p(&p, 5).unwrap();
        assert_eq!(f.unit, 2);
        assert_eq!(f.factors.len(), 2);
        let prod = f
            .factors
            .iter()
            .fold(IntPoly::constant(f.unit as i64), |acc, (g, _)| &acc * g);
        let reduced = ModPoly::from_int_poly(5, &prod);
        assert_eq!(reduced, ModPoly::from_int_poly(5, &p));
    }

    #[test]
    fn hensel_example() {
        // factorization of 2t^2 - 5t + 2 from mod 5 to mod 5^4; mod 3 is a
        // bad prime here (the discriminant is 9), so the lift starts at 5
        let p = ip(&[2, -5, 2]);
        let lifted = hensel_lift(&p, &[ip(&[-2, 1]), ip(&[-1, 2])], 5, 4).unwrap();
        assert_eq!(lifted, vec![ip(&[-2, 1]), ip(&[-1, 2])]);
        // irreducible input lifts to itself
        let q = ip(&[1, 1, 1, 1, 1]);
        let lifted = hensel_lift(&q, std::slice::from_ref(&q), 3, 3).unwrap();
        assert_eq!(lifted, vec![q.clone()]);
        // k = 1 is the identity on symmetric representatives
        let lifted = hensel_lift(&p, &[ip(&[-2, 1]), ip(&[-1, 2])], 5, 1).unwrap();
        assert_eq!(lifted, vec![ip(&[-2, 1]), ip(&[-1, 2])]);
        // non-coprime inputs are rejected
        assert_eq!(
            hensel_lift(&ip(&[1, 2, 1]), &[ip(&[1, 1]), ip(&[1, 1])], 5, 3),
            Err(FactorError::NonCoprimeFactors)
        );
    }

    #[test]
    fn factor_int_cases() {
        let f = factor_int(&ip(&[2, -5, 2])).unwrap();
        assert_eq!(f.sign, 1);
        assert!(f.content.is_one());
        assert_eq!(f.factors, vec![(ip(&[-2, 1]), 1), (ip(&[-1, 2]), 1)]);

        let f = factor_int(&ip(&[1, 1, 1, 1, 1])).unwrap();
        assert!(f.is_irreducible());

        let p = &ip(&[1, -1, 1]) * &ip(&[1, -3, 1]);
        let f = factor_int(&p).unwrap();
        assert_eq!(f.factors, vec![(ip(&[1, -3, 1]), 1), (ip(&[1, -1, 1]), 1)]);
        assert_eq!(f.reconstruct(), p);
    }

    #[test]
    fn kronecker_cases() {
        for p in [ip(&[2, -5, 2]), ip(&[1, 1, 1, 1, 1]), &ip(&[1, -1, 1]) * &ip(&[1, -3, 1])] {
            assert_eq!(factor_kronecker(&p).unwrap(), factor_int(&p).unwrap());
        }
        let c = factor_kronecker(&ip(&[7])).unwrap();
        assert_eq!(c.content, BigInt::from(7));
        assert!(c.factors.is_empty());
        let t = factor_kronecker(&ip(&[0, 1])).unwrap();
        assert_eq!(t.factors, vec![(IntPoly::var(), 1)]);
        let too_big = IntPoly::from_coeffs(
            (0..=13).map(BigInt::from).collect::<Vec<_>>(),
        );
        assert!(matches!(
            factor_kronecker(&too_big),
            Err(FactorError::DegreeGuard { .. })
        ));
    }

    #[test]
    fn reconstruction_holds() {
        let polys = [
            ip(&[-6, 0, 4, 10]),
            ip(&[9, -9]),
            ip(&[4]),
            ip(&[0, 0, 3]),
            ip(&[-1, 2, -2, 1]),
        ];
        for p in polys {
            let f = factor_int(&p).unwrap();
            assert_eq!(f.reconstruct(), p, "reconstruct failed for {p}");
        }
    }
}
