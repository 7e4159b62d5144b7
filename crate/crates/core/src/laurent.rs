//! Integer Laurent polynomials and exact evaluation at roots of unity.
//!
//! Coefficients are big integers throughout; dimensions of highest-weight
//! modules overflow machine words quickly. Evaluation at a primitive n-th
//! root of unity lands in `ℤ[x]/Φ_n(x)` with reduction by the cyclotomic
//! polynomial always applied.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LaurentError {
    #[error("polynomial division has nonzero remainder")]
    NotDivisible,
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("cyclotomic element is not a rational integer")]
    NotRational,
}

/// Integer Laurent polynomial, stored densely: `coeffs[k]` is the
/// coefficient of `z^(offset+k)`. Canonical form keeps the first and last
/// coefficients nonzero; the zero polynomial has empty `coeffs`.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPolynomial {
    offset: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial {
            offset: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        LaurentPolynomial::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: i64, c: BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial {
            offset: exp,
            coeffs: vec![c],
        }
    }

    /// `1 - z^k` (or `1 + z^k` with `sign = +1`), `k > 0`.
    pub fn one_minus_power(k: i64) -> Self {
        Self::binomial(k, -1)
    }

    pub fn binomial(k: i64, sign: i64) -> Self {
        assert!(k > 0);
        let mut coeffs = vec![BigInt::zero(); (k + 1) as usize];
        coeffs[0] = BigInt::one();
        coeffs[k as usize] = BigInt::from(sign);
        LaurentPolynomial { offset: 0, coeffs }
    }

    pub fn from_coeffs(offset: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPolynomial { offset, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        let first_nz = self.coeffs.iter().position(|c| !c.is_zero());
        match first_nz {
            None => {
                self.coeffs.clear();
                self.offset = 0;
            }
            Some(lo) => {
                let hi = self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
                self.coeffs.drain(hi + 1..);
                self.coeffs.drain(..lo);
                self.offset += lo as i64;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with nonzero coefficient.
    pub fn low(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.offset)
        }
    }

    /// Highest exponent with nonzero coefficient.
    pub fn high(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.offset + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        if self.is_zero() {
            return BigInt::zero();
        }
        let k = exp - self.offset;
        if k < 0 || k as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Iterate `(exponent, coefficient)` over nonzero terms, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.offset + k as i64, c))
    }

    pub fn shift(&self, by: i64) -> LaurentPolynomial {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPolynomial {
            offset: self.offset + by,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn add(&self, other: &LaurentPolynomial) -> LaurentPolynomial {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(other.offset);
        let hi = self.high().unwrap().max(other.high().unwrap());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in self.terms() {
            coeffs[(e - lo) as usize] += c;
        }
        for (e, c) in other.terms() {
            coeffs[(e - lo) as usize] += c;
        }
        LaurentPolynomial::from_coeffs(lo, coeffs)
    }

    pub fn neg(&self) -> LaurentPolynomial {
        LaurentPolynomial {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentPolynomial) -> LaurentPolynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentPolynomial) -> LaurentPolynomial {
        if self.is_zero() || other.is_zero() {
            return LaurentPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        LaurentPolynomial::from_coeffs(self.offset + other.offset, coeffs)
    }

    /// Exact division; errors when the remainder is nonzero.
    pub fn exact_div(&self, den: &LaurentPolynomial) -> Result<LaurentPolynomial, LaurentError> {
        if den.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPolynomial::zero());
        }
        let mut rem = self.coeffs.clone();
        let d = &den.coeffs;
        if rem.len() < d.len() {
            return Err(LaurentError::NotDivisible);
        }
        let qlen = rem.len() - d.len() + 1;
        let mut q = vec![BigInt::zero(); qlen];
        let lead = d.last().unwrap();
        for k in (0..qlen).rev() {
            let top = rem[k + d.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (quot, r) = num_integer::div_rem(top, lead.clone());
            if !r.is_zero() {
                return Err(LaurentError::NotDivisible);
            }
            for (j, dj) in d.iter().enumerate() {
                if !dj.is_zero() {
                    rem[k + j] -= &quot * dj;
                }
            }
            q[k] = quot;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(LaurentError::NotDivisible);
        }
        Ok(LaurentPolynomial::from_coeffs(self.offset - den.offset, q))
    }

    /// Image under `z ↦ ζ_n`, reduced modulo `Φ_n`.
    pub fn eval_at_root(&self, n: u32) -> CyclotomicInteger {
        assert!(n >= 1);
        let mut folded = vec![BigInt::zero(); n as usize];
        for (e, c) in self.terms() {
            let k = e.rem_euclid(n as i64) as usize;
            folded[k] += c;
        }
        CyclotomicInteger::reduce(n, folded)
    }

    pub fn is_palindromic(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        let n = self.coeffs.len();
        (0..n / 2 + 1).all(|k| self.coeffs[k] == self.coeffs[n - 1 - k])
            && self.offset == -(self.high().unwrap())
    }

    pub fn coeff_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Canonical text form with ascending exponents, e.g. `z^-2 + 1 + z^2`.
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
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || e == 0;
            if show_coeff {
                write!(f, "{}", mag)?;
            }
            if e != 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                write!(f, "z^{}", e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial({self})")
    }
}

/// Monic cyclotomic polynomial Φ_n as a dense coefficient vector
/// (constant term first), computed by iterated exact division of xⁿ−1 and
/// memoized.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let phi = if n == 1 {
        vec![BigInt::from(-1), BigInt::one()]
    } else {
        // (x^n - 1) / ∏_{d|n, d<n} Φ_d
        let mut num = vec![BigInt::zero(); (n + 1) as usize];
        num[0] = BigInt::from(-1);
        num[n as usize] = BigInt::one();
        let mut num = LaurentPolynomial::from_coeffs(0, num);
        for d in 1..n {
            if n % d == 0 {
                let phi_d = LaurentPolynomial::from_coeffs(0, cyclotomic_polynomial(d));
                num = num.exact_div(&phi_d).expect("cyclotomic division is exact");
            }
        }
        debug_assert_eq!(num.low(), Some(0));
        let mut v = vec![BigInt::zero(); (num.high().unwrap() + 1) as usize];
        for (e, c) in num.terms() {
            v[e as usize] = c.clone();
        }
        v
    };
    cache.lock().unwrap().insert(n, phi.clone());
    phi
}

/// Element of `ℤ[x]/Φ_n(x)` in the power basis `1, x, …, x^(φ(n)−1)`.
#[derive(Clone, PartialEq, Eq)]
pub struct CyclotomicInteger {
    order: u32,
    coeffs: Vec<BigInt>,
}

impl CyclotomicInteger {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn from_integer(n: u32, value: BigInt) -> Self {
        let mut v = vec![BigInt::zero(); degree(n)];
        v[0] = value;
        CyclotomicInteger {
            order: n,
            coeffs: v,
        }
    }

    /// Reduce a coefficient vector of arbitrary length modulo Φ_n.
    pub fn reduce(n: u32, mut v: Vec<BigInt>) -> Self {
        let phi = cyclotomic_polynomial(n);
        let deg = phi.len() - 1;
        // long division by monic phi
        let mut k = v.len();
        while k > deg {
            k -= 1;
            let top = std::mem::replace(&mut v[k], BigInt::zero());
            if top.is_zero() {
                continue;
            }
            // subtract top * x^(k-deg) * phi
            let base = k - deg;
            for (j, pj) in phi.iter().enumerate().take(deg) {
                v[base + j] -= &top * pj;
            }
        }
        v.resize(deg, BigInt::zero());
        CyclotomicInteger {
            order: n,
            coeffs: v,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn mul(&self, other: &CyclotomicInteger) -> CyclotomicInteger {
        assert_eq!(self.order, other.order);
        let mut v = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                v[i + j] += a * b;
            }
        }
        CyclotomicInteger::reduce(self.order, v)
    }

    pub fn add(&self, other: &CyclotomicInteger) -> CyclotomicInteger {
        assert_eq!(self.order, other.order);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CyclotomicInteger {
            order: self.order,
            coeffs,
        }
    }

    /// The rational integer this element represents, if it is one.
    pub fn as_integer(&self) -> Result<BigInt, LaurentError> {
        if self.coeffs.iter().skip(1).any(|c| !c.is_zero()) {
            return Err(LaurentError::NotRational);
        }
        Ok(self.coeffs.first().cloned().unwrap_or_else(BigInt::zero))
    }
}

impl fmt::Debug for CyclotomicInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicInteger(n={}, {:?})", self.order, self.coeffs)
    }
}

fn degree(n: u32) -> usize {
    cyclotomic_polynomial(n).len() - 1
}
