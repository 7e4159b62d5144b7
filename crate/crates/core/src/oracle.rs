//! Deliberately naive reference evaluators.
//!
//! These exist so tests can check the fast paths against an independent
//! route; nothing else in the library calls them.

use num_bigint::BigInt;
use thiserror::Error;

use crate::laurent::LaurentPolynomial;
use crate::rootdata::{RootDataError, RootDatum, Weight};
use crate::torsionchar;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error(transparent)]
    Orbit(#[from] RootDataError),
}

const WEYL_SUM_CAP: u128 = 100_000;

/// Character of the principal restriction computed as a quotient of
/// alternating Weyl sums: Σ_w det(w) z^⟨w(λ+ρ), 2ρ^∨⟩ over the same sum for
/// λ = 0, divided exactly.
pub fn weyl_sum_character(
    datum: &RootDatum,
    lambda: &Weight,
) -> Result<LaurentPolynomial, OracleError> {
    let rho = Weight::rho(datum.rank());
    let lam_rho = lambda.add(&rho);
    // One BFS over the orbit of the concatenated (ρ | λ+ρ) vector: the ρ part
    // is regular, so orbit points correspond to Weyl elements, and the path
    // parity gives det(w).
    let mut start = rho.0.clone();
    start.extend_from_slice(&lam_rho.0);
    let n = datum.rank();
    let reflect_pair = |v: &Vec<i64>, i: usize| -> Vec<i64> {
        let a = datum.reflect(&Weight(v[..n].to_vec()), i);
        let b = datum.reflect(&Weight(v[n..].to_vec()), i);
        let mut out = a.0;
        out.extend_from_slice(&b.0);
        out
    };
    if datum.cartan_type().weyl_order() > WEYL_SUM_CAP {
        return Err(OracleError::Orbit(RootDataError::WeylGroupTooLarge {
            order: datum.cartan_type().weyl_order(),
            cap: WEYL_SUM_CAP,
        }));
    }
    let mut seen = std::collections::HashMap::new();
    seen.insert(start.clone(), 1i64);
    let mut queue = std::collections::VecDeque::new();
    queue.push_back((start, 1i64));
    let mut num = LaurentPolynomial::zero();
    let mut den = LaurentPolynomial::zero();
    while let Some((v, sign)) = queue.pop_front() {
        let den_exp = datum.pair_two_rho_check(&Weight(v[..n].to_vec()));
        let num_exp = datum.pair_two_rho_check(&Weight(v[n..].to_vec()));
        den = den.add(&LaurentPolynomial::monomial(den_exp, BigInt::from(sign)));
        num = num.add(&LaurentPolynomial::monomial(num_exp, BigInt::from(sign)));
        for i in 0..n {
            let next = reflect_pair(&v, i);
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), -sign);
                queue.push_back((next, -sign));
            }
        }
    }
    Ok(num.exact_div(&den).expect("Weyl quotient is exact"))
}

/// Minimal dual-side centralizer dimension over all torus points of order
/// dividing `m`, by sweeping dominant weights with coordinates below `m`.
pub fn exhaustive_min_centralizer(datum: &RootDatum, m: i64) -> i64 {
    let n = datum.rank();
    let mut best = i64::MAX;
    let bound = m.max(1);
    let mut coords = vec![0i64; n];
    loop {
        let lam = Weight(coords.clone());
        let (dim_lambda, _) = torsionchar::centralizer_dims_dual(datum, &lam, m);
        best = best.min(dim_lambda);
        // odometer
        let mut i = 0;
        loop {
            if i == n {
                return best;
            }
            coords[i] += 1;
            if coords[i] < bound {
                break;
            }
            coords[i] = 0;
            i += 1;
        }
    }
}
