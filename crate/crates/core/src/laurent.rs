//! Integer Laurent polynomials in one variable `t`, plus their dense
//! non-negative-exponent counterpart [`IntPoly`].
//!
//! `LaurentPoly` is a sparse exponent-to-coefficient map and is the working
//! representation for Alexander polynomials; `IntPoly` is the dense
//! representative used by the factorization engine.  Conversion between the
//! two strips the unit `±t^k`, so "equal up to units of ℤ[t,t⁻¹]" is decided
//! by exact equality of canonical representatives.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::PolyError;

/// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
///
/// Invariants: no stored coefficient is zero; the zero polynomial is the
/// empty map; equality is exact coefficient-wise equality.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    /// `c · t^exp`.
    pub fn monomial(exp: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    /// Builds a polynomial from `(exponent, coefficient)` terms, summing
    /// repeated exponents and dropping zeros.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            let c = c.into();
            if c.is_zero() {
                continue;
            }
            let entry = coeffs.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(&e);
            }
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(0).is_one()
    }

    /// Coefficient of `t^exp` (zero when absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    /// The involution `t ↦ t⁻¹`: the coefficient at exponent `k` moves
    /// to `−k`.
    pub fn bar(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiplies by the unit `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Exact evaluation at a nonzero integer, as a rational number.  The
    /// result is integral whenever there are no negative exponents or
    /// `x = ±1`.
    pub fn eval_int(&self, x: &BigInt) -> Result<BigRational, PolyError> {
        if x.is_zero() {
            if self.min_exp().is_some_and(|m| m < 0) {
                return Err(PolyError::EvalAtZero);
            }
            return Ok(BigRational::from_integer(self.coeff(0)));
        }
        let mut acc = BigRational::zero();
        let rx = BigRational::from_integer(x.clone());
        for (e, c) in self.terms() {
            let p = power(&rx, e);
            acc += BigRational::from_integer(c.clone()) * p;
        }
        Ok(acc)
    }

    /// Evaluation at `1`: the coefficient sum.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Evaluation at `−1`, exact in ℤ since `(−1)⁻¹ = −1`.
    pub fn eval_at_minus_one(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for (e, c) in self.terms() {
            if e.rem_euclid(2) == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }

    /// Splits `p = sign · t^k · rep` with `rep` an [`IntPoly`] having nonzero
    /// constant term and positive leading coefficient.  Returns `None` for
    /// the zero polynomial.
    pub fn unit_parts(&self) -> Option<(i64, i8, IntPoly)> {
        let lo = self.min_exp()?;
        let hi = self.max_exp().unwrap();
        let mut coeffs = Vec::with_capacity((hi - lo + 1) as usize);
        for e in lo..=hi {
            coeffs.push(self.coeff(e));
        }
        let sign = if coeffs.last().unwrap().is_negative() { -1 } else { 1 };
        if sign < 0 {
            for c in &mut coeffs {
                *c = -std::mem::take(c);
            }
        }
        Some((lo, sign, IntPoly::from_coeffs(coeffs)))
    }

    /// The canonical [`IntPoly`] representative (unit stripped).
    pub fn int_rep(&self) -> Option<IntPoly> {
        self.unit_parts().map(|(_, _, rep)| rep)
    }

    /// Reads off an [`IntPoly`] verbatim; `None` when negative exponents
    /// are present.
    pub fn as_int_poly(&self) -> Option<IntPoly> {
        if self.min_exp().is_some_and(|m| m < 0) {
            return None;
        }
        let hi = self.max_exp().unwrap_or(0);
        Some(IntPoly::from_coeffs(
            (0..=hi).map(|e| self.coeff(e)).collect(),
        ))
    }

    /// True when `self` and `other` agree up to a unit `±t^k`.
    pub fn associates(&self, other: &LaurentPoly) -> bool {
        match (self.int_rep(), other.int_rep()) {
            (None, None) => true,
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }

    /// Exact division in ℤ[t,t⁻¹]: returns `q` with `self · q = p`, or
    /// `None` when no such `q` exists.  Division by zero is an error.
    pub fn divides(&self, p: &LaurentPoly) -> Result<Option<LaurentPoly>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if p.is_zero() {
            return Ok(Some(LaurentPoly::zero()));
        }
        let (kd, sd, rd) = self.unit_parts().unwrap();
        let (kp, sp, rp) = p.unit_parts().unwrap();
        let q0 = match rp.exact_div(&rd) {
            Some(q) => q,
            None => return Ok(None),
        };
        let mut q = q0.to_laurent().shift(kp - kd);
        if sd != sp {
            q = -&q;
        }
        Ok(Some(q))
    }

    /// Parses the textual grammar (see [`crate`] docs): signed sums of
    /// `c`, `t`, `c*t^e`, `t^{e}` terms, or the bracketed coefficient-vector
    /// form `[c0, c1, ...] @ min_exp`.
    pub fn parse(input: &str) -> Result<Self, PolyError> {
        parse_poly(input)
    }
}

fn power(x: &BigRational, e: i64) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    let mut base = if e < 0 { x.recip() } else { x.clone() };
    let mut n = e.unsigned_abs();
    let mut acc = BigRational::one();
    while n > 0 {
        if n & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        n >>= 1;
    }
    acc
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &rhs.coeffs {
            let entry = coeffs.entry(*e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(e);
            }
        }
        LaurentPoly { coeffs }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                let e = e1 + e2;
                let entry = coeffs.entry(e).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let unit_coeff = mag.is_one();
            if e == 0 {
                write!(f, "{mag}")?;
            } else {
                if !unit_coeff {
                    write!(f, "{mag}")?;
                }
                write!(f, "t")?;
                if e != 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Dense integer polynomial; `coeffs[i]` is the coefficient of `t^i`.
///
/// The leading coefficient is nonzero; the zero polynomial is the empty
/// vector.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `t` itself.
    pub fn var() -> Self {
        Self::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    /// Builds from ascending-exponent coefficients, trimming leading zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// The reciprocal `t^{deg p} · p(1/t)`: the coefficient vector reversed.
    /// An involution whenever the constant term is nonzero.
    pub fn reciprocal(&self) -> Result<IntPoly, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Ok(Self::from_coeffs(coeffs))
    }

    /// Content (gcd of coefficients, ≥ 1) and primitive part with positive
    /// leading coefficient.  `content · primitive = ±p`.
    pub fn content_and_primitive(&self) -> Result<(BigInt, IntPoly), PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        let neg = self.coeffs.last().unwrap().is_negative();
        let prim = Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| {
                    let q = c / &g;
                    if neg {
                        -q
                    } else {
                        q
                    }
                })
                .collect(),
        };
        Ok((g, prim))
    }

    pub fn content(&self) -> BigInt {
        self.content_and_primitive()
            .map(|(c, _)| c)
            .unwrap_or_else(|_| BigInt::zero())
    }

    pub fn primitive_part(&self) -> IntPoly {
        self.content_and_primitive()
            .map(|(_, p)| p)
            .unwrap_or_else(|_| IntPoly::zero())
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Euclidean division by a divisor whose leading coefficient divides
    /// every intermediate leading term; returns `None` when any step fails
    /// to divide exactly (used for exact divisibility tests over ℤ).
    pub fn exact_div(&self, d: &IntPoly) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let dd = d.degree().unwrap();
        let nd = self.degree().unwrap();
        if nd < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigInt::zero(); nd - dd + 1];
        let lead = d.coeffs.last().unwrap();
        for i in (dd..=nd).rev() {
            let c = std::mem::take(&mut rem[i]);
            if c.is_zero() {
                continue;
            }
            let (q, r) = c.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate().take(dd) {
                rem[i - dd + j] -= &q * dc;
            }
            quo[i - dd] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(quo))
    }

    /// Polynomial gcd over ℤ\[t\] via the primitive Euclidean algorithm,
    /// normalized primitive with positive leading coefficient (times the
    /// integer gcd of the contents).
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            if other.is_zero() {
                return IntPoly::zero();
            }
            let (c, p) = other.content_and_primitive().unwrap();
            return &p * &IntPoly::constant(c);
        }
        if other.is_zero() {
            let (c, p) = self.content_and_primitive().unwrap();
            return &p * &IntPoly::constant(c);
        }
        let (ca, mut a) = self.content_and_primitive().unwrap();
        let (cb, mut b) = other.content_and_primitive().unwrap();
        let content = ca.gcd(&cb);
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        &a * &IntPoly::constant(content)
    }

    /// Pseudo-remainder: `lc(d)^(deg a − deg d + 1) · a  mod  d`.
    fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("nonzero divisor");
        let mut rem = self.clone();
        let lead = d.coeffs.last().unwrap().clone();
        while let Some(nr) = rem.degree() {
            if nr < dd {
                break;
            }
            let c = rem.coeffs.last().unwrap().clone();
            let mut next = vec![BigInt::zero(); nr];
            for (i, rc) in rem.coeffs.iter().enumerate().take(nr) {
                next[i] = rc * &lead;
            }
            for (j, dc) in d.coeffs.iter().enumerate().take(dd) {
                next[nr - dd + j] -= &c * dc;
            }
            rem = IntPoly::from_coeffs(next);
        }
        rem
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64, c.clone())),
        )
    }

    /// Deterministic ordering: by degree, then coefficients from the
    /// constant term upward.
    pub fn canonical_cmp(&self, other: &IntPoly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPoly::from_coeffs(out)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        IntPoly::from_coeffs(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_laurent())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

// ---------------------------------------------------------------------------
// parsing

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Self { bytes: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn err(&self, msg: &str) -> PolyError {
        PolyError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.bytes.get(self.pos), Some(b'+') | Some(b'-')) {
            self.pos += 1;
        }
        let digits_from = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == digits_from {
            return Err(self.err("expected an integer"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        text.parse::<BigInt>().map_err(|e| self.err(&e.to_string()))
    }
}

fn parse_poly(input: &str) -> Result<LaurentPoly, PolyError> {
    let mut cur = Cursor::new(input);
    if cur.peek() == Some(b'[') {
        return parse_vector_form(&mut cur);
    }
    let mut terms: Vec<(i64, BigInt)> = Vec::new();
    let mut first = true;
    loop {
        let sign = match cur.peek() {
            None if first => return Err(cur.err("empty polynomial")),
            None => break,
            Some(b'+') => {
                cur.bump();
                1
            }
            Some(b'-') => {
                cur.bump();
                -1
            }
            Some(_) if first => 1,
            Some(_) => return Err(cur.err("expected '+' or '-' between terms")),
        };
        let (exp, coeff) = parse_term(&mut cur)?;
        terms.push((exp, coeff * BigInt::from(sign)));
        first = false;
        if cur.peek().is_none() {
            break;
        }
    }
    Ok(LaurentPoly::from_terms(terms))
}

fn parse_term(cur: &mut Cursor) -> Result<(i64, BigInt), PolyError> {
    let coeff = if cur.peek().is_some_and(|b| b.is_ascii_digit()) {
        let c = cur.integer()?;
        if cur.peek() == Some(b'*') {
            cur.bump();
        }
        Some(c)
    } else {
        None
    };
    if cur.peek() == Some(b't') {
        cur.bump();
        let exp = if cur.peek() == Some(b'^') {
            cur.bump();
            if cur.peek() == Some(b'{') {
                cur.bump();
                let e = cur.integer()?;
                if cur.bump() != Some(b'}') {
                    return Err(cur.err("expected '}'"));
                }
                e
            } else {
                cur.integer()?
            }
        } else {
            BigInt::one()
        };
        let exp = i64::try_from(&exp).map_err(|_| cur.err("exponent out of range"))?;
        Ok((exp, coeff.unwrap_or_else(BigInt::one)))
    } else {
        match coeff {
            Some(c) => Ok((0, c)),
            None => Err(cur.err("expected a term")),
        }
    }
}

/// `[c0, c1, ...] @ min_exp` — coefficients ascending from `min_exp`
/// (default 0 when the `@` clause is omitted).
fn parse_vector_form(cur: &mut Cursor) -> Result<LaurentPoly, PolyError> {
    if cur.bump() != Some(b'[') {
        return Err(cur.err("expected '['"));
    }
    let mut coeffs = Vec::new();
    if cur.peek() != Some(b']') {
        loop {
            coeffs.push(cur.integer()?);
            match cur.peek() {
                Some(b',') => {
                    cur.bump();
                }
                Some(b']') => break,
                _ => return Err(cur.err("expected ',' or ']'")),
            }
        }
    }
    cur.bump(); // ']'
    let min_exp = if cur.peek() == Some(b'@') {
        cur.bump();
        let e = cur.integer()?;
        i64::try_from(&e).map_err(|_| cur.err("exponent out of range"))?
    } else {
        0
    };
    if cur.peek().is_some() {
        return Err(cur.err("trailing input"));
    }
    Ok(LaurentPoly::from_terms(
        coeffs
            .into_iter()
            .enumerate()
            .map(|(i, c)| (min_exp + i as i64, c)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn add_cases() {
        assert_eq!(&lp("1+t") + &lp("-1-t"), LaurentPoly::zero());
        assert_eq!(&lp("t^-1-1+t") + &LaurentPoly::zero(), lp("t^-1-1+t"));
        assert_eq!(&lp("1+t") + &lp("1-t"), lp("2"));
    }

    #[test]
    fn mul_cases() {
        assert_eq!(&lp("1+t") * &lp("1-t"), lp("1-t^2"));
        assert_eq!(&lp("2t-1") * &lp("2-t"), lp("-2t^2+5t-2"));
        assert_eq!(&lp("1+t") * &LaurentPoly::zero(), LaurentPoly::zero());
    }

    #[test]
    fn bar_cases() {
        assert_eq!(lp("t-1+t^-1").bar(), lp("t^-1-1+t"));
        assert_eq!(lp("2t-1").bar(), lp("2t^-1-1"));
        assert_eq!(LaurentPoly::zero().bar(), LaurentPoly::zero());
    }

    #[test]
    fn reciprocal_cases() {
        let p = IntPoly::from_i64(&[-1, 2]); // 2t - 1
        assert_eq!(p.reciprocal().unwrap(), IntPoly::from_i64(&[2, -1]));
        let q = IntPoly::from_i64(&[1, 1, 1]);
        assert_eq!(q.reciprocal().unwrap(), q);
        let r = IntPoly::from_i64(&[1, -3, 1]);
        assert_eq!(r.reciprocal().unwrap(), r);
        assert!(IntPoly::zero().reciprocal().is_err());
    }

    #[test]
    fn eval_cases() {
        // trefoil Alexander polynomial at -1
        assert_eq!(lp("t-1+t^-1").eval_at_minus_one(), BigInt::from(-3));
        let p = lp("3t^2-t+4");
        assert_eq!(p.eval_at_one(), BigInt::from(6));
        assert_eq!(lp("2-5t+2t^2").eval_at_minus_one(), BigInt::from(9));
        let r = lp("t^-1+t").eval_int(&BigInt::from(2)).unwrap();
        assert_eq!(r, BigRational::new(BigInt::from(5), BigInt::from(2)));
        assert!(lp("t^-1").eval_int(&BigInt::zero()).is_err());
    }

    #[test]
    fn content_primitive_cases() {
        let (c, p) = IntPoly::from_i64(&[0, 4, 6]).content_and_primitive().unwrap();
        assert_eq!(c, BigInt::from(2));
        assert_eq!(p, IntPoly::from_i64(&[0, 2, 3]));
        let psi = IntPoly::from_i64(&[1, 1, 1, 1, 1]);
        let (c, p) = psi.content_and_primitive().unwrap();
        assert_eq!(c, BigInt::one());
        assert_eq!(p, psi);
        let (c, p) = IntPoly::from_i64(&[0, -3]).content_and_primitive().unwrap();
        assert_eq!(c, BigInt::from(3));
        assert_eq!(p, IntPoly::var());
    }

    #[test]
    fn divides_cases() {
        let q = lp("1-t").divides(&lp("1-t^2")).unwrap().unwrap();
        assert_eq!(q, lp("1+t"));
        assert!(lp("1+t^2").divides(&lp("1+t")).unwrap().is_none());
        // (2t-1)(2t^-1-1) = 5-2t-2t^-1 divides 2-5t+2t^2 with unit quotient -t
        let d = &lp("2t-1") * &lp("2t^-1-1");
        let q = d.divides(&lp("2-5t+2t^2")).unwrap().unwrap();
        assert_eq!(&d * &q, lp("2-5t+2t^2"));
        assert_eq!(q, lp("-t"));
    }

    #[test]
    fn parse_cases() {
        assert_eq!(lp("1-t+t^2"), LaurentPoly::from_terms([(0, 1), (1, -1), (2, 1)]));
        assert_eq!(lp("2-5t+2t^2"), LaurentPoly::from_terms([(0, 2), (1, -5), (2, 2)]));
        let sym = lp("t^{-2}-t^{-1}+1-t+t^2");
        assert_eq!(sym.min_exp(), Some(-2));
        assert_eq!(sym.max_exp(), Some(2));
        assert_eq!(sym, sym.bar());
        // KnotInfo style with '*' and spaces
        assert_eq!(lp("2-9*t+ 18*t^2"), LaurentPoly::from_terms([(0, 2), (1, -9), (2, 18)]));
        // vector form
        assert_eq!(lp("[1, -1, 1] @ -1"), lp("t^-1-1+t"));
        assert_eq!(lp("[2, -5, 2]"), lp("2-5t+2t^2"));
        assert!(LaurentPoly::parse("1 + + t").is_err());
        assert!(LaurentPoly::parse("").is_err());
    }

    #[test]
    fn display_roundtrip() {
        for s in ["0", "1", "-1", "t", "-t", "t^-1-1+t", "2t^2-5t+2", "3t^-4+7"] {
            let p = lp(s);
            assert_eq!(LaurentPoly::parse(&p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn unit_parts_roundtrip() {
        let p = lp("-2t^-3+4t^-2-2t^-1");
        let (k, sign, rep) = p.unit_parts().unwrap();
        assert_eq!(k, -3);
        assert_eq!(sign, -1);
        assert_eq!(rep, IntPoly::from_i64(&[2, -4, 2]));
        let rebuilt = rep.to_laurent().shift(k);
        assert_eq!(&-&rebuilt, &p);
    }

    #[test]
    fn gcd_and_exact_div() {
        let a = &IntPoly::from_i64(&[-1, 1]) * &IntPoly::from_i64(&[2, 3]);
        let b = &IntPoly::from_i64(&[-1, 1]) * &IntPoly::from_i64(&[5, 1]);
        assert_eq!(a.gcd(&b), IntPoly::from_i64(&[-1, 1]));
        let q = a.exact_div(&IntPoly::from_i64(&[-1, 1])).unwrap();
        assert_eq!(q, IntPoly::from_i64(&[2, 3]));
        assert!(a.exact_div(&IntPoly::from_i64(&[7, 1])).is_none());
    }
}
