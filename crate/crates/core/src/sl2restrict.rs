//! Restriction of irreducible highest-weight representations to the
//! principal `SL(2)`.
//!
//! The character at the diagonal element `(z, z⁻¹)` is
//!
//! ```text
//! Θ_λ(z) = z^(−2⟨λ,ρ^∨⟩) · ∏_{α>0} (1 − z^(2⟨λ+ρ,α^∨⟩)) / ∏_{α>0} (1 − z^(2⟨ρ,α^∨⟩))
//! ```
//!
//! assembled as one exact division of binomial products. Both products are
//! polynomials in z²; the prefactor exponent ⟨λ, 2ρ^∨⟩ is an exact integer.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::laurent::LaurentPolynomial;
use crate::rootdata::{Family, RootDatum, Weight};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Sl2Error {
    #[error("weight is not dominant")]
    NotDominant,
    #[error("polynomial is not a nonnegative palindromic character")]
    NotACharacter,
}

/// Multiplicities of irreducible `SL(2)` constituents, keyed by dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Decomposition {
    pub multiplicities: BTreeMap<u64, BigInt>,
}

impl Sl2Decomposition {
    pub fn total_dimension(&self) -> BigInt {
        self.multiplicities
            .iter()
            .map(|(d, m)| BigInt::from(*d) * m)
            .sum()
    }
}

/// Character of the irreducible representation of highest weight `lambda`
/// restricted to the principal `SL(2)`, as a Laurent polynomial in z.
pub fn principal_character(
    datum: &RootDatum,
    lambda: &Weight,
) -> Result<LaurentPolynomial, Sl2Error> {
    if !lambda.is_dominant() {
        return Err(Sl2Error::NotDominant);
    }
    let rho = Weight::rho(datum.rank());
    let lam_rho = lambda.add(&rho);
    let mut num = LaurentPolynomial::one();
    let mut den = LaurentPolynomial::one();
    for k in 0..datum.positive_roots().len() {
        let p = datum.pairing(&lam_rho, k);
        num = num.mul(&LaurentPolynomial::one_minus_power(2 * p));
        den = den.mul(&LaurentPolynomial::one_minus_power(
            2 * datum.coheights()[k],
        ));
    }
    let shift = datum.pair_two_rho_check(lambda);
    let theta = num
        .exact_div(&den)
        .expect("character quotient is exact")
        .shift(-shift);
    debug_assert!(theta.is_palindromic());
    debug_assert!(theta.has_nonnegative_coeffs());
    Ok(theta)
}

/// Weyl dimension formula: `∏⟨λ+ρ, α^∨⟩ / ∏⟨ρ, α^∨⟩` over positive roots.
pub fn dimension(datum: &RootDatum, lambda: &Weight) -> Result<BigInt, Sl2Error> {
    if !lambda.is_dominant() {
        return Err(Sl2Error::NotDominant);
    }
    let rho = Weight::rho(datum.rank());
    let lam_rho = lambda.add(&rho);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for k in 0..datum.positive_roots().len() {
        num *= BigInt::from(datum.pairing(&lam_rho, k));
        den *= BigInt::from(datum.coheights()[k]);
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    Ok(q)
}

/// Decompose a palindromic character polynomial into `SL(2)` strings by
/// peeling from the top exponent down.
pub fn decompose_sl2(p: &LaurentPolynomial) -> Result<Sl2Decomposition, Sl2Error> {
    if !p.is_palindromic() || !p.has_nonnegative_coeffs() {
        return Err(Sl2Error::NotACharacter);
    }
    let mut rest = p.clone();
    let mut multiplicities = BTreeMap::new();
    while !rest.is_zero() {
        let e = rest.high().unwrap();
        let c = rest.coeff(e);
        if c.is_negative() || e < 0 {
            return Err(Sl2Error::NotACharacter);
        }
        // string z^-e + z^(-e+2) + … + z^e
        let mut string = LaurentPolynomial::zero();
        let mut k = -e;
        while k <= e {
            string = string.add(&LaurentPolynomial::monomial(k, c.clone()));
            k += 2;
        }
        rest = rest.sub(&string);
        if !rest.has_nonnegative_coeffs() {
            return Err(Sl2Error::NotACharacter);
        }
        multiplicities.insert((e + 1) as u64, c);
    }
    Ok(Sl2Decomposition { multiplicities })
}

/// Closed-form factorization of the adjoint character, expanded.
///
/// Each simple type has a three-term (two for rank ≤ 2 families) product
/// over exponents; the result equals
/// `principal_character(datum, highest root)`.
pub fn adjoint_factorized(datum: &RootDatum) -> LaurentPolynomial {
    let ct = datum.cartan_type();
    let n = ct.rank as i64;
    // (shift, numerator (exp, sign), denominator exps)
    let (shift, num, den): (i64, Vec<(i64, i64)>, Vec<i64>) = match ct.family {
        Family::A => (-2 * n, vec![(2 * n, -1), (2 * n + 4, -1)], vec![2, 2]),
        Family::B | Family::C => (-(4 * n - 2), vec![(4 * n, -1), (4 * n + 2, -1)], vec![2, 4]),
        Family::D => (
            -(4 * n - 6),
            vec![(2 * n, -1), (2 * n - 4, 1), (4 * n - 2, -1)],
            vec![2, 4],
        ),
        Family::E => match ct.rank {
            6 => (-22, vec![(16, -1), (18, -1), (26, -1)], vec![2, 6, 8]),
            7 => (-34, vec![(24, -1), (28, -1), (38, -1)], vec![2, 8, 12]),
            _ => (-58, vec![(40, -1), (48, -1), (62, -1)], vec![2, 12, 20]),
        },
        Family::F => (-22, vec![(16, -1), (24, -1), (26, -1)], vec![2, 8, 12]),
        Family::G => (-10, vec![(14, -1), (16, -1)], vec![2, 8]),
    };
    let mut p = LaurentPolynomial::one();
    for (k, s) in num {
        p = p.mul(&LaurentPolynomial::binomial(k, s));
    }
    let mut d = LaurentPolynomial::one();
    for k in den {
        d = d.mul(&LaurentPolynomial::one_minus_power(k));
    }
    p.exact_div(&d)
        .expect("adjoint factorization divides exactly")
        .shift(shift)
}

/// Highest root as a dominant weight.
pub fn highest_root_weight(datum: &RootDatum) -> Weight {
    datum.root_to_weight(datum.positive_roots().last().expect("nonempty"))
}

/// Canonical byte encoding of the principal restriction, for collision
/// detection between highest weights.
pub fn restriction_fingerprint(datum: &RootDatum, lambda: &Weight) -> Result<Vec<u8>, Sl2Error> {
    let p = principal_character(datum, lambda)?;
    let mut out = Vec::new();
    out.extend_from_slice(p.low().unwrap_or(0).to_string().as_bytes());
    out.push(b';');
    for (e, c) in p.terms() {
        out.extend_from_slice(e.to_string().as_bytes());
        out.push(b':');
        out.extend_from_slice(c.to_string().as_bytes());
        out.push(b',');
    }
    Ok(out)
}
