//! Character values at the principal torsion elements `C_m`.
//!
//! `C_m = ρ^∨(e^(2πi/m))` acts on every simple root by `e^(2πi/m)`. Two
//! routes evaluate `Θ_λ(C_m)`:
//!
//! * the direct route substitutes `z = ζ_{2m}` into the principal
//!   restriction and reduces in the cyclotomic ring;
//! * the structural route finds a Weyl element `w` with
//!   `w(λ+ρ) = ρ + mμ` mapping the positive part of `Φ_{λ,m}` onto that of
//!   `Φ_m`, and returns `det(w) · μ(c(G)) · d_λ / d_m` with both constants
//!   given by the Weyl dimension formula on the subsystems.
//!
//! When no witness exists the structural route defers to the direct value
//! (which is zero whenever the centralizer dimensions differ).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::laurent::LaurentError;
use crate::rootdata::{RootDataError, RootDatum, SubsystemDescriptor, Weight, WeylElement};
use crate::sl2restrict::{self, Sl2Error};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TorsionError {
    #[error("weight is not dominant")]
    NotDominant,
    #[error("m must be at least 1")]
    InvalidOrder,
    #[error(transparent)]
    Orbit(#[from] RootDataError),
    #[error("dimension-formula product is not integral")]
    NonIntegral,
    #[error("structural quotient d_λ/d_m is not integral")]
    NonIntegralQuotient,
    #[error("cyclotomic value is not a rational integer")]
    NotRational,
}

impl From<Sl2Error> for TorsionError {
    fn from(e: Sl2Error) -> Self {
        match e {
            Sl2Error::NotDominant => TorsionError::NotDominant,
            Sl2Error::NotACharacter => TorsionError::NonIntegral,
        }
    }
}

impl From<LaurentError> for TorsionError {
    fn from(_: LaurentError) -> Self {
        TorsionError::NotRational
    }
}

/// The subsystem `Φ_{λ,m} = {α > 0 : m | ⟨λ+ρ, α^∨⟩}` with its descriptor.
#[derive(Debug, Clone)]
pub struct SubsystemData {
    pub lambda: Weight,
    pub m: i64,
    pub roots: Vec<usize>,
    pub descriptor: SubsystemDescriptor,
}

/// Witness for the conjugacy of `(λ+ρ)(ζ_m)` and `ρ(ζ_m)`: a Weyl element
/// with `w(λ+ρ) = ρ + mμ` taking `Φ⁺_{λ,m}` onto `Φ⁺_m`.
#[derive(Debug, Clone)]
pub struct ConjugacyWitness {
    pub w: WeylElement,
    pub mu: Weight,
    /// Verified: the adjusted element maps `Φ⁺_{λ,m}` onto `Φ⁺_m`.
    pub adjusted: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Direct,
    Structural,
}

/// Structural detail of a nonzero value: `value = sign · central · d_λ/d_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralDetail {
    pub sign: i64,
    pub central_sign: i64,
    pub d_lambda: BigInt,
    pub d_m: BigInt,
    pub mu: Weight,
    pub witness_word: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct TorsionCharacterValue {
    pub m: i64,
    pub value: BigInt,
    pub route: Route,
    pub detail: Option<StructuralDetail>,
}

/// `Φ_{λ,m}` with descriptor; `λ = 0` gives `Φ_m`.
pub fn phi_subsystem(
    datum: &RootDatum,
    lambda: &Weight,
    m: i64,
) -> Result<SubsystemData, TorsionError> {
    if !lambda.is_dominant() {
        return Err(TorsionError::NotDominant);
    }
    if m < 1 {
        return Err(TorsionError::InvalidOrder);
    }
    let lam_rho = lambda.add(&Weight::rho(datum.rank()));
    let roots: Vec<usize> = (0..datum.positive_roots().len())
        .filter(|&k| datum.pairing(&lam_rho, k) % m == 0)
        .collect();
    let descriptor = datum.subsystem(&roots)?;
    Ok(SubsystemData {
        lambda: lambda.clone(),
        m,
        roots,
        descriptor,
    })
}

/// Weyl dimension formula over a subsystem for the weight `ν/m` where `ν`
/// pairs with every subsystem coroot in `m·ℤ`:
/// `∏ (⟨ν, α^∨⟩/m) / ∏ (⟨ρ_sub, α^∨⟩)`.
fn subsystem_dimension(
    datum: &RootDatum,
    sub: &SubsystemData,
    nu: &Weight,
) -> Result<BigInt, TorsionError> {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for &k in &sub.roots {
        let p = datum.pairing(nu, k);
        if p % sub.m != 0 {
            return Err(TorsionError::NonIntegral);
        }
        num *= BigInt::from(p / sub.m);
        // ⟨ρ_sub, α^∨⟩ = ⟨2ρ_sub, α^∨⟩ / 2
        let two = datum.pair_root_coroot(&sub.descriptor.two_rho_sub, &datum.positive_coroots()[k]);
        if two % 2 != 0 {
            return Err(TorsionError::NonIntegral);
        }
        den *= BigInt::from(two / 2);
    }
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(TorsionError::NonIntegral);
    }
    Ok(q)
}

/// The constant `d_m`: dimension attached to `Φ_m` and the weight `ρ/m − ρ_m`.
pub fn d_constant(datum: &RootDatum, m: i64) -> Result<BigInt, TorsionError> {
    let sub = phi_subsystem(datum, &Weight::zero(datum.rank()), m)?;
    subsystem_dimension(datum, &sub, &Weight::rho(datum.rank()))
}

/// The constant `d_λ`: dimension attached to `Φ_{λ,m}` and
/// `(λ+ρ)/m − ρ^λ_m`.
pub fn d_lambda(datum: &RootDatum, lambda: &Weight, m: i64) -> Result<BigInt, TorsionError> {
    let sub = phi_subsystem(datum, lambda, m)?;
    let lam_rho = lambda.add(&Weight::rho(datum.rank()));
    subsystem_dimension(datum, &sub, &lam_rho)
}

/// Find `w` with `w(λ+ρ) ≡ ρ (mod m)` (fundamental-weight coordinates), then
/// post-compose with reflections in `Φ_m` so that `w(Φ⁺_{λ,m}) = Φ⁺_m`.
/// Returns `None` when no Weyl element satisfies the congruence.
pub fn conjugacy_witness(
    datum: &RootDatum,
    lambda: &Weight,
    m: i64,
) -> Result<Option<ConjugacyWitness>, TorsionError> {
    if !lambda.is_dominant() {
        return Err(TorsionError::NotDominant);
    }
    if m < 1 {
        return Err(TorsionError::InvalidOrder);
    }
    let rank = datum.rank();
    let rho = Weight::rho(rank);
    let lam_rho = lambda.add(&rho);
    let Some(mut w) = datum.witness_to_mod(&lam_rho, &rho, m, None)? else {
        return Ok(None);
    };

    // Positivity adjustment inside W(Φ_m).
    let phi_lm = phi_subsystem(datum, lambda, m)?;
    let phi_m = phi_subsystem(datum, &Weight::zero(rank), m)?;
    debug_assert_eq!(phi_lm.roots.len(), phi_m.roots.len());
    let image_signs = |w: &WeylElement| -> Vec<(usize, bool)> {
        // signed ambient index of w(α) for α ∈ Φ⁺_{λ,m}
        phi_lm
            .roots
            .iter()
            .map(|&k| {
                let img = datum.apply(w, &datum.root_to_weight(&datum.positive_roots()[k]));
                // match against ±positive roots
                for (j, r) in datum.positive_roots().iter().enumerate() {
                    let wv = datum.root_to_weight(r);
                    if wv == img {
                        return (j, true);
                    }
                    let neg = Weight(wv.0.iter().map(|x| -x).collect());
                    if neg == img {
                        return (j, false);
                    }
                }
                unreachable!("Weyl image of a root is a root")
            })
            .collect()
    };
    let phi_m_simples = phi_m.descriptor.simple_indices.clone();
    loop {
        let images = image_signs(&w);
        debug_assert!(images.iter().all(|(j, _)| phi_m.roots.contains(j)));
        let negatives: Vec<usize> = images
            .iter()
            .filter(|(_, pos)| !pos)
            .map(|(j, _)| *j)
            .collect();
        if negatives.is_empty() {
            break;
        }
        // Some simple root of Φ⁺_m occurs negatively; reflect it back.
        let gamma = *phi_m_simples
            .iter()
            .find(|j| negatives.contains(j))
            .expect("a subsystem simple root is negative in a non-positive system");
        let s_gamma = datum.root_reflection(gamma);
        w = w.then(&s_gamma);
    }

    // Exact μ from the adjusted w.
    let image = datum.apply(&w, &lam_rho);
    let mu: Vec<i64> = image
        .0
        .iter()
        .zip(&rho.0)
        .map(|(a, b)| {
            debug_assert_eq!((a - b).rem_euclid(m), 0);
            (a - b) / m
        })
        .collect();
    Ok(Some(ConjugacyWitness {
        w,
        mu: Weight(mu),
        adjusted: true,
    }))
}

/// Structural value `det(w) · μ(c(G)) · d_λ/d_m`; defers to the direct route
/// when no witness exists.
pub fn character_at_cm_structural(
    datum: &RootDatum,
    lambda: &Weight,
    m: i64,
) -> Result<TorsionCharacterValue, TorsionError> {
    let Some(witness) = conjugacy_witness(datum, lambda, m)? else {
        let direct = character_at_cm_direct(datum, lambda, m)?;
        return Ok(TorsionCharacterValue {
            m,
            value: direct.value,
            route: Route::Structural,
            detail: None,
        });
    };
    let sign = witness.w.det();
    let central_sign = if datum.pair_two_rho_check(&witness.mu) % 2 == 0 {
        1
    } else {
        -1
    };
    let dl = d_lambda(datum, lambda, m)?;
    let dm = d_constant(datum, m)?;
    let (q, r) = dl.div_rem(&dm);
    if !r.is_zero() {
        return Err(TorsionError::NonIntegralQuotient);
    }
    let value = BigInt::from(sign * central_sign) * &q;
    Ok(TorsionCharacterValue {
        m,
        value,
        route: Route::Structural,
        detail: Some(StructuralDetail {
            sign,
            central_sign,
            d_lambda: dl,
            d_m: dm,
            mu: witness.mu,
            witness_word: witness.w.word,
        }),
    })
}

/// Direct route: evaluate the principal restriction at `z = ζ_{2m}`.
pub fn character_at_cm_direct(
    datum: &RootDatum,
    lambda: &Weight,
    m: i64,
) -> Result<TorsionCharacterValue, TorsionError> {
    if m < 1 {
        return Err(TorsionError::InvalidOrder);
    }
    let theta = sl2restrict::principal_character(datum, lambda)?;
    let value = theta.eval_at_root(2 * m as u32).as_integer()?;
    Ok(TorsionCharacterValue {
        m,
        value,
        route: Route::Direct,
        detail: None,
    })
}

/// Character at the Coxeter class `C_h`; always in {−1, 0, 1}, with the sign
/// given by the parity of the unique Weyl element conjugating `(λ+ρ)(ζ_h)`
/// to `ρ(ζ_h)` over the root lattice.
pub fn kostant_coxeter_value(
    datum: &RootDatum,
    lambda: &Weight,
) -> Result<(BigInt, Option<i64>), TorsionError> {
    let h = datum.coxeter_number();
    let out = character_at_cm_structural(datum, lambda, h)?;
    assert!(
        out.value.abs() <= BigInt::one(),
        "Coxeter value must be in -1..=1"
    );
    if out.value.is_zero() {
        return Ok((out.value, None));
    }
    // Refine: unique witness modulo h·(root lattice).
    let rho = Weight::rho(datum.rank());
    let lam_rho = lambda.add(&rho);
    let orbit = datum.weyl_orbit_mod(&lam_rho, 0, None)?;
    let mut parity = None;
    for (id, v) in orbit.elements().iter().enumerate() {
        let diff: Vec<i64> = v.iter().zip(&rho.0).map(|(a, b)| a - b).collect();
        if diff.iter().any(|&x| x % h != 0) {
            continue;
        }
        let scaled: Vec<i64> = diff.iter().map(|&x| x / h).collect();
        if in_root_lattice(datum, &scaled) {
            let w = orbit.witness(id);
            assert!(parity.is_none(), "Coxeter witness must be unique");
            parity = Some(w.det());
        }
    }
    let parity = parity.expect("nonzero Coxeter value admits a root-lattice witness");
    assert_eq!(
        BigInt::from(parity),
        out.value,
        "sign law at the Coxeter class"
    );
    Ok((out.value, Some(parity)))
}

/// Does a weight (fundamental-weight coordinates) lie in the root lattice?
fn in_root_lattice(datum: &RootDatum, v: &[i64]) -> bool {
    // Solve C·b = v over the rationals by Gaussian elimination with exact
    // big-integer arithmetic (Bareiss would be overkill at rank ≤ 8).
    let n = datum.rank();
    let mut a: Vec<Vec<num_bigint::BigInt>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| BigInt::from(datum.cartan()[j][i]))
                .chain(std::iter::once(BigInt::from(v[j])))
                .collect()
        })
        .collect();
    // fraction-free elimination to a diagonal system
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan is invertible");
        a.swap(col, piv);
        let pv = a[col][col].clone();
        for r in 0..n {
            if r == col {
                continue;
            }
            let factor = a[r][col].clone();
            for c in 0..=n {
                let t = &a[r][c] * &pv - &factor * &a[col][c];
                a[r][c] = t;
            }
        }
    }
    (0..n).all(|r| (&a[r][n] % &a[r][r]).is_zero())
}

/// Dual-side centralizer dimensions of `(λ+ρ)(ζ_m)` and `ρ(ζ_m)`:
/// `rank + 2·#{α > 0 : m | ⟨·, α^∨⟩}`.
pub fn centralizer_dims_dual(datum: &RootDatum, lambda: &Weight, m: i64) -> (i64, i64) {
    let rank = datum.rank() as i64;
    let rho = Weight::rho(datum.rank());
    let lam_rho = lambda.add(&rho);
    let count = |w: &Weight| -> i64 {
        (0..datum.positive_roots().len())
            .filter(|&k| datum.pairing(w, k) % m == 0)
            .count() as i64
    };
    (rank + 2 * count(&lam_rho), rank + 2 * count(&rho))
}
