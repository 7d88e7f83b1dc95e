//! Exact univariate polynomial arithmetic over arbitrary-precision rationals,
//! together with the coefficient-level transforms used throughout the crate:
//! the Möbius changes of variable between the disc and half-plane pictures,
//! even/odd splitting, binomial even/odd parts, and the conversions between
//! f-vectors, reduced f-vectors, H-polynomials, and J-polynomials.
//!
//! Coefficients are stored in ascending degree order. The zero polynomial is
//! the empty coefficient list; nonzero polynomials never carry trailing zero
//! coefficients, so `degree` is exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Arbitrary-precision rational scalar.
pub type Rat = BigRational;

/// Convenience constructor for an integer scalar.
pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Convenience constructor for a ratio of integers.
pub fn ratio(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Dense univariate polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactPoly {
    coeffs: Vec<Rat>,
}

impl ExactPoly {
    /// The zero polynomial (empty coefficient list).
    pub fn zero() -> Self {
        ExactPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ExactPoly::constant(Rat::one())
    }

    /// The variable itself.
    pub fn var() -> Self {
        ExactPoly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    pub fn constant(c: Rat) -> Self {
        ExactPoly::from_coeffs(vec![c])
    }

    /// Builds a polynomial from ascending coefficients, stripping trailing
    /// zeros so the normalization invariant holds.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ExactPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        ExactPoly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// `c * x^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return ExactPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        ExactPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero when `i` exceeds the degree.
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> ExactPoly {
        if self.coeffs.len() <= 1 {
            return ExactPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat(i as i64))
            .collect();
        ExactPoly::from_coeffs(coeffs)
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> ExactPoly {
        if self.is_zero() {
            return ExactPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ExactPoly { coeffs }
    }

    pub fn scale(&self, c: &Rat) -> ExactPoly {
        if c.is_zero() {
            return ExactPoly::zero();
        }
        ExactPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> ExactPoly {
        let mut base = self.clone();
        let mut acc = ExactPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Exact division, available only when the remainder vanishes.
    pub fn div_exact(&self, divisor: &ExactPoly) -> Result<ExactPoly> {
        if divisor.is_zero() {
            return Err(Error::domain("division by the zero polynomial"));
        }
        if self.is_zero() {
            return Ok(ExactPoly::zero());
        }
        let (q, r) = self.div_rem(divisor);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::domain("polynomial division leaves a remainder"))
        }
    }

    /// Euclidean division: returns `(q, r)` with `self = q*divisor + r`.
    pub fn div_rem(&self, divisor: &ExactPoly) -> (ExactPoly, ExactPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.coeffs.len();
        if self.coeffs.len() < dd {
            return (ExactPoly::zero(), self.clone());
        }
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len() - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd - 1] / &lead;
            if !c.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    let t = dc * &c;
                    rem[k + i] = &rem[k + i] - t;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd - 1);
        (ExactPoly::from_coeffs(quot), ExactPoly::from_coeffs(rem))
    }

    /// Parses the bracketed ascending coefficient list form, e.g. `[1, 3/2]`.
    pub fn parse(text: &str) -> Result<ExactPoly> {
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| {
                Error::parse(1, 1, "expected a bracketed coefficient list like [1, 3]")
            })?;
        if inner.trim().is_empty() {
            return Ok(ExactPoly::zero());
        }
        let mut coeffs = Vec::new();
        for (idx, item) in inner.split(',').enumerate() {
            let col = 1 + item.as_ptr() as usize - trimmed.as_ptr() as usize;
            coeffs.push(parse_rat(item.trim()).map_err(|msg| {
                Error::parse(1, col, format!("coefficient {}: {msg}", idx + 1))
            })?);
        }
        Ok(ExactPoly::from_coeffs(coeffs))
    }

    /// Approximate coefficients for numeric work.
    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }
}

/// Parses a rational written as `p/q` or as a plain integer.
pub fn parse_rat(text: &str) -> std::result::Result<Rat, String> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| format!("bad numerator {num:?}"))?;
        let d: BigInt = den.trim().parse().map_err(|_| format!("bad denominator {den:?}"))?;
        if d.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(BigRational::new(n, d))
    } else {
        let n: BigInt = text.parse().map_err(|_| format!("bad integer {text:?}"))?;
        Ok(BigRational::from_integer(n))
    }
}

/// Formats a rational as `p/q`, or as a bare integer when the denominator is 1.
pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rat(c))?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactPoly{self}")
    }
}

impl Add for &ExactPoly {
    type Output = ExactPoly;
    fn add(self, rhs: &ExactPoly) -> ExactPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        ExactPoly::from_coeffs(coeffs)
    }
}

impl Sub for &ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: &ExactPoly) -> ExactPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        ExactPoly::from_coeffs(coeffs)
    }
}

impl Mul for &ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: &ExactPoly) -> ExactPoly {
        if self.is_zero() || rhs.is_zero() {
            return ExactPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + a * b;
            }
        }
        ExactPoly::from_coeffs(coeffs)
    }
}

impl Neg for &ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        ExactPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Indicator that `c` is even: 1 for even `c`, 0 for odd `c`.
///
/// Selects which of the two even/odd components of a thick-tree or
/// thick-cycle J-polynomial is the live one.
pub fn epsilon(c: usize) -> usize {
    1 - (c & 1)
}

/// Complement of [`epsilon`]: 1 for odd `c`, 0 for even `c`.
pub fn delta(c: usize) -> usize {
    c & 1
}

/// The pair `(P0, P1)` with `P(u) = P0(u^2) + u*P1(u^2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenOddPair {
    pub even: ExactPoly,
    pub odd: ExactPoly,
}

impl EvenOddPair {
    /// Indexes the pair by parity tag: 0 selects the even part, 1 the odd.
    pub fn component(&self, tag: usize) -> &ExactPoly {
        if tag == 0 {
            &self.even
        } else {
            &self.odd
        }
    }

    /// Reassembles `P(u) = even(u^2) + u*odd(u^2)`.
    pub fn recombine(&self) -> ExactPoly {
        let n = self.even.coeffs.len().max(self.odd.coeffs.len());
        let mut coeffs = vec![Rat::zero(); 2 * n];
        for (i, c) in self.even.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.clone();
        }
        for (i, c) in self.odd.coeffs.iter().enumerate() {
            coeffs[2 * i + 1] = c.clone();
        }
        ExactPoly::from_coeffs(coeffs)
    }
}

/// Splits `p(u)` into even and odd parts as polynomials in `x = u^2`.
pub fn even_odd_split(p: &ExactPoly) -> EvenOddPair {
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for (i, c) in p.coeffs.iter().enumerate() {
        if i % 2 == 0 {
            even.push(c.clone());
        } else {
            odd.push(c.clone());
        }
    }
    EvenOddPair {
        even: ExactPoly::from_coeffs(even),
        odd: ExactPoly::from_coeffs(odd),
    }
}

/// Even/odd parts `(E_c, O_c)` of `(u+1)^c`.
pub fn eo_binomial(c: usize) -> EvenOddPair {
    let binom = ExactPoly::from_ints(&[1, 1]).pow(c as u32);
    even_odd_split(&binom)
}

/// `S_c`: the odd part `O_c` of `(u+1)^c` for even `c`, the even part `E_c`
/// for odd `c`. Defined for spindle sizes `c >= 1`.
pub fn s_poly(c: usize) -> Result<ExactPoly> {
    if c == 0 {
        return Err(Error::domain("S_c is defined for c >= 1"));
    }
    let pair = eo_binomial(c);
    Ok(if c.is_multiple_of(2) { pair.odd } else { pair.even })
}

/// `sum_i p_i * num^i * den^(bound-i)`: the polynomial obtained by evaluating
/// `p` at the rational function `num/den` and clearing by `den^bound`.
pub fn compose_rational(p: &ExactPoly, num: &ExactPoly, den: &ExactPoly, bound: usize) -> ExactPoly {
    let mut num_pows = Vec::with_capacity(bound + 1);
    let mut den_pows = Vec::with_capacity(bound + 1);
    let mut np = ExactPoly::one();
    let mut dp = ExactPoly::one();
    for _ in 0..=bound {
        num_pows.push(np.clone());
        den_pows.push(dp.clone());
        np = &np * num;
        dp = &dp * den;
    }
    let mut acc = ExactPoly::zero();
    for i in 0..=bound {
        let c = p.coeff(i);
        if c.is_zero() {
            continue;
        }
        acc = &acc + &(&num_pows[i] * &den_pows[bound - i]).scale(&c);
    }
    acc
}

/// Disc-to-half-plane change of variables: `J(u) = (u-1)^d * H((-1-u)/(1-u))`,
/// computed by homogenized composition so that everything stays polynomial.
pub fn mobius_q_to_u(h: &ExactPoly, d: usize) -> Result<ExactPoly> {
    if h.degree().is_some_and(|deg| deg > d) {
        return Err(Error::domain(format!(
            "degree bound {d} is below deg = {}",
            h.degree().unwrap()
        )));
    }
    // (u-1)^d = (-1)^d (1-u)^d clears the denominator exactly.
    let num = ExactPoly::from_ints(&[-1, -1]);
    let den = ExactPoly::from_ints(&[1, -1]);
    let composed = compose_rational(h, &num, &den, d);
    Ok(if d.is_multiple_of(2) { composed } else { -&composed })
}

/// Inverse of [`mobius_q_to_u`] at matched degree bound:
/// `H(q) = ((q-1)/2)^d * J((-1-q)/(1-q))`.
pub fn mobius_u_to_q(j: &ExactPoly, d: usize) -> Result<ExactPoly> {
    if j.degree().is_some_and(|deg| deg > d) {
        return Err(Error::domain(format!(
            "degree bound {d} is below deg = {}",
            j.degree().unwrap()
        )));
    }
    let num = ExactPoly::from_ints(&[-1, -1]);
    let den = ExactPoly::from_ints(&[1, -1]);
    let composed = compose_rational(j, &num, &den, d);
    let sign = if d.is_multiple_of(2) { 1 } else { -1 };
    let scale = Rat::new(BigInt::from(sign), BigInt::from(2).pow(d as u32));
    Ok(composed.scale(&scale))
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Binomial coefficient as a rational scalar.
pub fn binom_rat(n: usize, k: usize) -> Rat {
    Rat::from_integer(binomial(n, k))
}

/// Factors out every `(1+z)` divisor of the rank-generating polynomial:
/// returns the subdegree `t` and the reduced coefficient list with nonzero
/// value at `z = -1`.
pub fn ftilde_from_f(f: &[Rat]) -> Result<(usize, Vec<Rat>)> {
    let mut p = ExactPoly::from_coeffs(f.to_vec());
    if p.is_zero() {
        return Err(Error::domain("zero f-vector has no reduced form"));
    }
    let minus_one = -Rat::one();
    let one_plus_z = ExactPoly::from_ints(&[1, 1]);
    while p.eval(&minus_one).is_zero() {
        p = p.div_exact(&one_plus_z).expect("root at -1 divides exactly");
    }
    let t = p.degree().unwrap_or(0);
    Ok((t, p.coeffs().to_vec()))
}

/// Restores an f-vector from its reduced form by multiplying back
/// `(1+z)^(d-t)`. Inverse of [`ftilde_from_f`] at matched `d`.
pub fn f_from_ftilde(ftilde: &[Rat], d: usize) -> Result<Vec<Rat>> {
    let p = ExactPoly::from_coeffs(ftilde.to_vec());
    let t = p
        .degree()
        .ok_or_else(|| Error::domain("zero reduced f-vector"))?;
    if d < t {
        return Err(Error::domain(format!("target degree {d} below subdegree {t}")));
    }
    let expanded = &p * &ExactPoly::from_ints(&[1, 1]).pow((d - t) as u32);
    let mut coeffs = expanded.coeffs().to_vec();
    coeffs.resize(d + 1, Rat::zero());
    Ok(coeffs)
}

/// H-polynomial of an f-vector: `H(q) = (1-q)^d * F(q/(1-q))`
/// with `d` the length of the coefficient list minus one.
pub fn h_from_f(f: &[Rat]) -> Result<ExactPoly> {
    let p = ExactPoly::from_coeffs(f.to_vec());
    if p.is_zero() {
        return Err(Error::domain("zero f-vector"));
    }
    let d = f.len() - 1;
    let q = ExactPoly::var();
    let one_minus_q = ExactPoly::from_ints(&[1, -1]);
    Ok(compose_rational(
        &ExactPoly::from_coeffs(f.to_vec()),
        &q,
        &one_minus_q,
        d,
    ))
}

/// J-polynomial coefficients from a reduced f-vector:
/// `j_k = sum_{i>=k} C(i,k) (-2)^(t-i) ftilde_i`.
pub fn j_from_ftilde(ftilde: &[Rat]) -> Result<ExactPoly> {
    let p = ExactPoly::from_coeffs(ftilde.to_vec());
    let t = p
        .degree()
        .ok_or_else(|| Error::domain("zero reduced f-vector"))?;
    if p.coeffs().len() != ftilde.len() {
        return Err(Error::domain("reduced f-vector has a zero leading coefficient"));
    }
    let minus_two = BigInt::from(-2);
    let mut j = Vec::with_capacity(t + 1);
    for k in 0..=t {
        let mut acc = Rat::zero();
        for (i, fi) in ftilde.iter().enumerate().skip(k) {
            let w = Rat::from_integer(binomial(i, k) * minus_two.pow((t - i) as u32));
            acc += w * fi;
        }
        j.push(acc);
    }
    Ok(ExactPoly::from_coeffs(j))
}

/// Inverse of [`j_from_ftilde`]:
/// `ftilde_i = 2^(i-t) * sum_{k>=i} C(k,i) (-1)^(t-k) j_k`.
pub fn ftilde_from_j(j: &ExactPoly, t: usize) -> Result<Vec<Rat>> {
    if j.degree().is_some_and(|deg| deg > t) {
        return Err(Error::domain("J degree exceeds the stated subdegree"));
    }
    let mut out = Vec::with_capacity(t + 1);
    for i in 0..=t {
        let mut acc = Rat::zero();
        for k in i..=t {
            let sign = if (t - k).is_multiple_of(2) { 1 } else { -1 };
            acc += Rat::from_integer(binomial(k, i) * BigInt::from(sign)) * j.coeff(k);
        }
        let scale = Rat::new(BigInt::one(), BigInt::from(2).pow((t - i) as u32));
        out.push(acc * scale);
    }
    Ok(out)
}
