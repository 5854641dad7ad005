//! Fraction-free exact linear algebra over ℤ and over ℤ\[t\]: Bareiss
//! determinants, Smith normal form with recorded unimodular transforms,
//! integral linear solving, and determinants/kernels of matrices of Laurent
//! polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::laurent::{IntPoly, LaurentPoly};
use crate::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Dense integer matrix with arbitrary-precision entries, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, LinAlgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinAlgError::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .expect("literal rows are rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, LinAlgError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinAlgError::DimensionMismatch("matrix addition".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, LinAlgError> {
        if self.cols != rhs.rows {
            return Err(LinAlgError::DimensionMismatch("matrix product".into()));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a * &rhs[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>, LinAlgError> {
        if self.cols != v.len() {
            return Err(LinAlgError::DimensionMismatch("matrix-vector product".into()));
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect())
    }

    /// Parses the nested-bracket row format `[[a,b,...],[...]]`.
    pub fn parse(s: &str) -> Result<Self, LinAlgError> {
        let err = |pos: usize, msg: &str| LinAlgError::Parse { pos, msg: msg.into() };
        let bytes = s.as_bytes();
        let mut pos = 0usize;
        let skip = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        skip(&mut pos);
        if bytes.get(pos) != Some(&b'[') {
            return Err(err(pos, "expected '['"));
        }
        pos += 1;
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        loop {
            skip(&mut pos);
            match bytes.get(pos) {
                Some(b'[') => {
                    pos += 1;
                    let mut row = Vec::new();
                    loop {
                        skip(&mut pos);
                        let start = pos;
                        if matches!(bytes.get(pos), Some(b'+') | Some(b'-')) {
                            pos += 1;
                        }
                        while bytes.get(pos).is_some_and(u8::is_ascii_digit) {
                            pos += 1;
                        }
                        if pos == start {
                            return Err(err(pos, "expected an integer"));
                        }
                        let text = std::str::from_utf8(&bytes[start..pos]).unwrap();
                        row.push(text.parse::<BigInt>().map_err(|e| err(start, &e.to_string()))?);
                        skip(&mut pos);
                        match bytes.get(pos) {
                            Some(b',') => pos += 1,
                            Some(b']') => {
                                pos += 1;
                                break;
                            }
                            _ => return Err(err(pos, "expected ',' or ']'")),
                        }
                    }
                    rows.push(row);
                    skip(&mut pos);
                    match bytes.get(pos) {
                        Some(b',') => pos += 1,
                        Some(b']') => {
                            pos += 1;
                            break;
                        }
                        _ => return Err(err(pos, "expected ',' or ']'")),
                    }
                }
                _ => return Err(err(pos, "expected '['")),
            }
        }
        skip(&mut pos);
        if pos != bytes.len() {
            return Err(err(pos, "trailing input"));
        }
        Self::from_rows(rows)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(src, j)] * k;
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, src)] * k;
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self[(r, j)].clone();
            self[(r, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Exact determinant by fraction-free Bareiss elimination.
pub fn det_bareiss(m: &IntMatrix) -> Result<BigInt, LinAlgError> {
    if !m.is_square() {
        return Err(LinAlgError::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(pivot) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap_rows(k, pivot);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[(k, k)] * &a[(i, j)] - &a[(i, k)] * &a[(k, j)];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss divisions are exact");
                a[(i, j)] = q;
            }
            a[(i, k)] = BigInt::zero();
        }
        prev = a[(k, k)].clone();
    }
    let mut det = a[(n - 1, n - 1)].clone();
    if sign < 0 {
        det = -det;
    }
    Ok(det)
}

/// Smith normal form `U · A · W = D` with unimodular `U`, `W` and
/// non-negative diagonal `d₁ | d₂ | …`.
#[derive(Debug, Clone)]
pub struct SnfResult {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub w: IntMatrix,
}

impl SnfResult {
    /// Nonzero diagonal entries (the invariant factors, 1s included).
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|i| self.d[(i, i)].clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Computes the Smith normal form by repeated pivoting on the smallest
/// nonzero entry (deterministic row-major tie-break), recording both
/// transforms.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let mut d = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    let mut w = IntMatrix::identity(m.cols());
    let steps = m.rows().min(m.cols());
    for k in 0..steps {
        loop {
            // smallest nonzero |entry| in the trailing block, row-major tie-break
            let mut pivot: Option<(usize, usize)> = None;
            for i in k..d.rows() {
                for j in k..d.cols() {
                    if d[(i, j)].is_zero() {
                        continue;
                    }
                    match pivot {
                        Some((pi, pj)) if d[(pi, pj)].abs() <= d[(i, j)].abs() => {}
                        _ => pivot = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return SnfResult { d, u, w };
            };
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            w.swap_cols(k, pj);
            if d[(k, k)].is_negative() {
                d.negate_row(k);
                u.negate_row(k);
            }
            // reduce column k and row k by the pivot
            let mut dirty = false;
            for i in k + 1..d.rows() {
                if d[(i, k)].is_zero() {
                    continue;
                }
                let q = -div_round(&d[(i, k)], &d[(k, k)]);
                d.add_row_multiple(i, k, &q);
                u.add_row_multiple(i, k, &q);
                if !d[(i, k)].is_zero() {
                    dirty = true;
                }
            }
            for j in k + 1..d.cols() {
                if d[(k, j)].is_zero() {
                    continue;
                }
                let q = -div_round(&d[(k, j)], &d[(k, k)]);
                d.add_col_multiple(j, k, &q);
                w.add_col_multiple(j, k, &q);
                if !d[(k, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue; // remainders became new smaller candidates
            }
            // pivot must divide the rest of the block
            let mut offender = None;
            'scan: for i in k + 1..d.rows() {
                for j in k + 1..d.cols() {
                    if !d[(i, j)].mod_floor(&d[(k, k)]).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    d.add_row_multiple(k, i, &BigInt::one());
                    u.add_row_multiple(k, i, &BigInt::one());
                }
                None => break,
            }
        }
    }
    SnfResult { d, u, w }
}

/// Rounded division used to shrink remainders toward zero.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if &r.abs() * 2 > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Solves `m · x = b` over ℤ, deciding solvability through the Smith normal
/// form transforms; returns `None` when no integral solution exists.
pub fn solve_integral(
    m: &IntMatrix,
    b: &[BigInt],
) -> Result<Option<Vec<BigInt>>, LinAlgError> {
    if b.len() != m.rows() {
        return Err(LinAlgError::DimensionMismatch(format!(
            "rhs has length {}, matrix has {} rows",
            b.len(),
            m.rows()
        )));
    }
    let snf = smith_normal_form(m);
    let ub = snf.u.mul_vec(b)?;
    let n = m.cols();
    let r = m.rows().min(n);
    let mut y = vec![BigInt::zero(); n];
    for i in 0..m.rows() {
        let di = if i < r { snf.d[(i, i)].clone() } else { BigInt::zero() };
        if di.is_zero() {
            if !ub[i].is_zero() {
                return Ok(None);
            }
        } else {
            let (q, rem) = ub[i].div_rem(&di);
            if !rem.is_zero() {
                return Ok(None);
            }
            y[i] = q;
        }
    }
    let x = snf.w.mul_vec(&y)?;
    debug_assert_eq!(m.mul_vec(&x)?, b.to_vec());
    Ok(Some(x))
}

// ---------------------------------------------------------------------------
// matrices over Z[t, t^-1]

/// Dense matrix of Laurent polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![LaurentPoly::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self, LinAlgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinAlgError::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Removes row `i` and column `j`.
    pub fn minor(&self, i: usize, j: usize) -> PolyMatrix {
        let mut rows = Vec::with_capacity(self.rows - 1);
        for r in 0..self.rows {
            if r == i {
                continue;
            }
            let mut row = Vec::with_capacity(self.cols - 1);
            for c in 0..self.cols {
                if c == j {
                    continue;
                }
                row.push(self[(r, c)].clone());
            }
            rows.push(row);
        }
        PolyMatrix::from_rows(rows).expect("minor is rectangular")
    }

    /// Evaluates every entry at the integer `x ≠ 0` (entries may have
    /// negative exponents); the result must clear denominators, which holds
    /// after [`poly_det`]'s row normalization.
    fn eval(&self, x: &BigInt) -> Result<IntMatrix, PolyError> {
        let mut out = IntMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self[(i, j)].eval_int(x)?;
                debug_assert!(v.is_integer());
                out[(i, j)] = v.to_integer();
            }
        }
        Ok(out)
    }

    /// Cofactor expansion along the first row; exponential, used as the
    /// cross-check route for small matrices.
    pub fn det_cofactor(&self) -> Result<LaurentPoly, LinAlgError> {
        if !self.is_square() {
            return Err(LinAlgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        if self.rows == 0 {
            return Ok(LaurentPoly::one());
        }
        if self.rows == 1 {
            return Ok(self[(0, 0)].clone());
        }
        let mut acc = LaurentPoly::zero();
        for j in 0..self.cols {
            let c = &self[(0, j)];
            if c.is_zero() {
                continue;
            }
            let sub = self.minor(0, j).det_cofactor()?;
            let term = c * &sub;
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        Ok(acc)
    }
}

impl std::ops::Index<(usize, usize)> for PolyMatrix {
    type Output = LaurentPoly;
    fn index(&self, (i, j): (usize, usize)) -> &LaurentPoly {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut LaurentPoly {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Exact determinant of a Laurent-polynomial matrix by evaluation at
/// integer points and interpolation, with Bareiss behind each evaluation.
pub fn poly_det(m: &PolyMatrix) -> Result<LaurentPoly, LinAlgError> {
    if !m.is_square() {
        return Err(LinAlgError::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    // normalize each row to polynomial entries, tracking the stripped unit
    let mut work = m.clone();
    let mut unit_exp = 0i64;
    let mut degree_bound = 0i64;
    for i in 0..n {
        let mut min_e: Option<i64> = None;
        let mut max_e = 0i64;
        for j in 0..n {
            if let Some(lo) = work[(i, j)].min_exp() {
                min_e = Some(min_e.map_or(lo, |m: i64| m.min(lo)));
                max_e = max_e.max(work[(i, j)].max_exp().unwrap());
            }
        }
        let Some(lo) = min_e else {
            return Ok(LaurentPoly::zero()); // all-zero row
        };
        if lo != 0 {
            for j in 0..n {
                let shifted = work[(i, j)].shift(-lo);
                work[(i, j)] = shifted;
            }
            unit_exp += lo;
            max_e -= lo;
        }
        degree_bound += max_e;
    }
    // evaluate at 0, 1, -1, 2, -2, ... and interpolate
    let points: Vec<BigInt> = (0..=degree_bound)
        .map(|i| {
            let k = (i + 1) / 2;
            BigInt::from(if i % 2 == 1 { k } else { -k })
        })
        .collect();
    let mut values = Vec::with_capacity(points.len());
    for x in &points {
        let ev = work.eval(x).expect("entries are polynomials after normalization");
        values.push(det_bareiss(&ev)?);
    }
    let interp = interpolate(&points, &values);
    Ok(interp.to_laurent().shift(unit_exp))
}

fn interpolate(points: &[BigInt], values: &[BigInt]) -> IntPoly {
    // Newton form with exact rational divided differences
    let n = points.len();
    let mut table: Vec<BigRational> = values
        .iter()
        .map(|v| BigRational::from_integer(v.clone()))
        .collect();
    let mut coeffs: Vec<BigRational> = vec![table[0].clone()];
    for level in 1..n {
        for i in 0..n - level {
            let num = &table[i + 1] - &table[i];
            let den = BigRational::from_integer(&points[i + level] - &points[i]);
            table[i] = num / den;
        }
        table.truncate(n - level);
        coeffs.push(table[0].clone());
    }
    // expand Newton form to monomial coefficients
    let mut acc = vec![BigRational::zero(); n];
    let mut basis = vec![BigRational::one()];
    for (k, c) in coeffs.iter().enumerate() {
        for (i, b) in basis.iter().enumerate() {
            acc[i] += c * b;
        }
        if k + 1 < n {
            // basis *= (t - points[k])
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (i, b) in basis.iter().enumerate() {
                next[i + 1] += b;
                next[i] -= b * BigRational::from_integer(points[k].clone());
            }
            basis = next;
        }
    }
    IntPoly::from_coeffs(
        acc.into_iter()
            .map(|c| {
                debug_assert!(c.is_integer(), "interpolation of an integer polynomial");
                c.to_integer()
            })
            .collect(),
    )
}

// -- kernel vectors over the rational function field ------------------------

/// Rational function in t, kept canonical: denominator with positive leading
/// coefficient, numerator/denominator with no common factor, and coprime
/// integer contents.
#[derive(Clone, PartialEq, Eq)]
struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    fn zero() -> Self {
        Self { num: IntPoly::zero(), den: IntPoly::one() }
    }

    fn one() -> Self {
        Self { num: IntPoly::one(), den: IntPoly::one() }
    }

    fn from_poly(p: IntPoly) -> Self {
        Self { num: p, den: IntPoly::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalize(num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let mut num = num.exact_div(&g).expect("gcd divides");
        let mut den = den.exact_div(&g).expect("gcd divides");
        if den.leading().unwrap().is_negative() {
            num = -&num;
            den = -&den;
        }
        Self { num, den }
    }

    fn sub(&self, rhs: &Self) -> Self {
        Self::normalize(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }

    fn mul(&self, rhs: &Self) -> Self {
        Self::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    fn div(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero");
        Self::normalize(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

/// A kernel vector of a singular square Laurent-polynomial matrix, cleared
/// of denominators and of any common polynomial or integer content; `None`
/// when the matrix is nonsingular.
#[allow(clippy::needless_range_loop)] // rows are read and written across indices
pub fn poly_kernel_vector(m: &PolyMatrix) -> Result<Option<Vec<IntPoly>>, LinAlgError> {
    if !m.is_square() {
        return Err(LinAlgError::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(None);
    }
    // clear Laurent units per row, then eliminate over Q(t)
    let mut a: Vec<Vec<RatFunc>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let e = &m[(i, j)];
                    match e.unit_parts() {
                        None => RatFunc::zero(),
                        Some((k, sign, rep)) => {
                            // sign * t^k * rep as a rational function
                            let mut p = rep;
                            if sign < 0 {
                                p = -&p;
                            }
                            if k >= 0 {
                                let shift =
                                    IntPoly::from_coeffs(shift_coeffs(k as usize));
                                RatFunc::from_poly(&p * &shift)
                            } else {
                                let shift =
                                    IntPoly::from_coeffs(shift_coeffs((-k) as usize));
                                RatFunc::normalize(p, shift)
                            }
                        }
                    }
                })
                .collect()
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut row = 0usize;
    for col in 0..n {
        let Some(p) = (row..n).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = RatFunc::one().div(&a[row][col].clone());
        for j in col..n {
            a[row][j] = a[row][j].mul(&inv);
        }
        for i in 0..n {
            if i != row && !a[i][col].is_zero() {
                let factor = a[i][col].clone();
                for j in col..n {
                    let sub = a[row][j].mul(&factor);
                    a[i][j] = a[i][j].sub(&sub);
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    if row == n {
        return Ok(None); // full rank
    }
    // first free column gives the kernel vector
    let free = (0..n).find(|c| !pivot_cols.contains(c)).unwrap();
    let mut x = vec![RatFunc::zero(); n];
    x[free] = RatFunc::one();
    for (r, &pc) in pivot_cols.iter().enumerate() {
        // row r: x[pc] + a[r][free] * x[free] = 0
        x[pc] = RatFunc::zero().sub(&a[r][free]);
    }
    // clear denominators: multiply by the lcm
    let mut lcm = IntPoly::one();
    for xi in &x {
        if xi.is_zero() {
            continue;
        }
        let g = lcm.gcd(&xi.den);
        lcm = &lcm * &xi.den.exact_div(&g).expect("gcd divides");
    }
    let mut ints: Vec<IntPoly> = x
        .iter()
        .map(|xi| {
            if xi.is_zero() {
                IntPoly::zero()
            } else {
                let scale = lcm.exact_div(&xi.den).expect("den divides lcm");
                &xi.num * &scale
            }
        })
        .collect();
    // joint content removal, polynomial and integer
    let mut g = IntPoly::zero();
    for p in &ints {
        g = g.gcd(p);
    }
    if !g.is_one() && !g.is_zero() {
        for p in &mut ints {
            *p = p.exact_div(&g).expect("joint gcd divides");
        }
    }
    // sign: first nonzero entry gets a positive leading coefficient
    if let Some(first) = ints.iter().find(|p| !p.is_zero()) {
        if first.leading().unwrap().is_negative() {
            for p in &mut ints {
                *p = -&*p;
            }
        }
    }
    Ok(Some(ints))
}

fn shift_coeffs(k: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); k + 1];
    v[k] = BigInt::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;

    #[test]
    fn bareiss_cases() {
        assert_eq!(det_bareiss(&IntMatrix::identity(4)).unwrap(), BigInt::one());
        let m = IntMatrix::from_i64_rows(&[&[-2, 1], &[1, -2]]);
        assert_eq!(det_bareiss(&m).unwrap(), BigInt::from(3));
        let r = IntMatrix::from_i64_rows(&[&[0, 1], &[-1, 0]]);
        assert_eq!(det_bareiss(&r).unwrap(), BigInt::one());
        let singular = IntMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(det_bareiss(&singular).unwrap(), BigInt::zero());
    }

    fn check_snf(m: &IntMatrix) {
        let snf = smith_normal_form(m);
        let uaw = snf.u.mul(m).unwrap().mul(&snf.w).unwrap();
        assert_eq!(uaw, snf.d);
        assert_eq!(det_bareiss(&snf.u).unwrap().abs(), BigInt::one());
        assert_eq!(det_bareiss(&snf.w).unwrap().abs(), BigInt::one());
        let inv = snf.invariant_factors();
        for pair in inv.windows(2) {
            assert!(pair[1].mod_floor(&pair[0]).is_zero(), "divisibility chain");
        }
    }

    #[test]
    fn snf_cases() {
        let m = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.invariant_factors(), vec![BigInt::one(), BigInt::from(6)]);
        check_snf(&m);

        let m = IntMatrix::from_i64_rows(&[&[-2, 1], &[1, -2]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.invariant_factors(), vec![BigInt::one(), BigInt::from(3)]);
        check_snf(&m);

        let id = IntMatrix::identity(3);
        let snf = smith_normal_form(&id);
        assert_eq!(snf.d, id);
        check_snf(&id);
    }

    #[test]
    fn solve_cases() {
        let m = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        let b = vec![BigInt::one(), BigInt::zero()];
        let x = solve_integral(&m, &b).unwrap().unwrap();
        assert_eq!(x, vec![BigInt::zero(), BigInt::one()]);

        let m = IntMatrix::from_i64_rows(&[&[-2, 1], &[1, -2]]);
        assert!(solve_integral(&m, &b).unwrap().is_none());

        let id = IntMatrix::identity(3);
        let b = vec![BigInt::from(5), BigInt::from(-7), BigInt::from(0)];
        assert_eq!(solve_integral(&id, &b).unwrap().unwrap(), b);
    }

    fn lp(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn poly_det_cases() {
        // V = [[-1,1],[0,-1]]: det(V - tV^T) = t^2 - t + 1
        let a = PolyMatrix::from_rows(vec![
            vec![lp("-1+t"), lp("1")],
            vec![lp("-t"), lp("-1+t")],
        ])
        .unwrap();
        assert_eq!(poly_det(&a).unwrap(), lp("t^2-t+1"));
        assert_eq!(a.det_cofactor().unwrap(), lp("t^2-t+1"));

        let b = PolyMatrix::from_rows(vec![
            vec![lp("1-t"), lp("1")],
            vec![lp("-t"), lp("-1+t")],
        ])
        .unwrap();
        assert_eq!(poly_det(&b).unwrap(), lp("-t^2+3t-1"));

        let c = PolyMatrix::from_rows(vec![vec![lp("3-3t")]]).unwrap();
        assert_eq!(poly_det(&c).unwrap(), lp("3-3t"));

        // entries with negative exponents
        let d = PolyMatrix::from_rows(vec![
            vec![lp("t^-1"), lp("1")],
            vec![lp("1"), lp("t")],
        ])
        .unwrap();
        assert_eq!(poly_det(&d).unwrap(), LaurentPoly::zero());
    }

    #[test]
    fn kernel_cases() {
        let z = PolyMatrix::from_rows(vec![vec![LaurentPoly::zero()]]).unwrap();
        assert_eq!(poly_kernel_vector(&z).unwrap().unwrap(), vec![IntPoly::one()]);

        let rank1 = PolyMatrix::from_rows(vec![
            vec![lp("1-t"), lp("1-t")],
            vec![lp("t-1"), lp("t-1")],
        ])
        .unwrap();
        let v = poly_kernel_vector(&rank1).unwrap().unwrap();
        assert_eq!(v, vec![IntPoly::one(), -&IntPoly::one()]);

        let nonsing = PolyMatrix::from_rows(vec![
            vec![lp("1"), lp("0")],
            vec![lp("0"), lp("1-t")],
        ])
        .unwrap();
        assert!(poly_kernel_vector(&nonsing).unwrap().is_none());
    }

    #[test]
    fn matrix_parse() {
        let m = IntMatrix::parse("[[ -1, 0], [ -1, -1]]").unwrap();
        assert_eq!(m, IntMatrix::from_i64_rows(&[&[-1, 0], &[-1, -1]]));
        assert!(IntMatrix::parse("[[1,2],[3]]").is_err());
        assert!(IntMatrix::parse("[1,2]").is_err());
    }
}
