//! Finite-order conjugacy classes via extended-diagram coordinates, and
//! classical-group centralizers via eigenvalue patterns.
//!
//! A tuple `(s_0, …, s_ℓ)` of nonnegative integers with `Σ a_i s_i = m` and
//! `gcd = 1` labels a conjugacy class of order-`m` elements in the adjoint
//! group; classes coincide exactly when the tuples lie in one orbit of the
//! extended-diagram symmetry group Ω. The centralizer root system is
//! generated by the vertices with `s_i = 0`.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use thiserror::Error;

use crate::rootdata::{apply_vertex_perm, CartanType, RootDatum, SubsystemDescriptor};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KacError {
    #[error("order {d} is not admissible for this family (expected divisor of {h})")]
    InvalidOrder { d: i64, h: i64 },
}

/// Kac coordinates `(s_0, …, s_ℓ)` of an order-`m` class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KacVector {
    pub s: Vec<i64>,
    pub m: i64,
}

/// Centralizer of a torsion element, described by its zero vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralizerDescriptor {
    /// Extended-diagram vertices with `s_i = 0`.
    pub zero_vertices: Vec<usize>,
    /// Component types of the generated subsystem.
    pub components: Vec<CartanType>,
    /// Number of roots `d(s)` of the centralizer.
    pub root_count: i64,
    /// `rank + d(s)`.
    pub dimension: i64,
}

impl CentralizerDescriptor {
    pub fn type_string(&self) -> String {
        crate::rootdata::type_string(self.components.iter().copied())
    }
}

/// All solutions of `Σ a_i s_i = m`, `gcd(s) = 1`, in lexicographic order.
pub fn enumerate_kac(datum: &RootDatum, m: i64) -> Vec<KacVector> {
    let marks = datum.marks();
    let mut out = Vec::new();
    let mut s = vec![0i64; marks.len()];
    fn rec(marks: &[i64], pos: usize, left: i64, s: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if pos == marks.len() {
            if left == 0 {
                out.push(s.clone());
            }
            return;
        }
        let a = marks[pos];
        for v in 0..=(left / a) {
            s[pos] = v;
            rec(marks, pos + 1, left - v * a, s, out);
        }
        s[pos] = 0;
    }
    let mut raw = Vec::new();
    rec(marks, 0, m, &mut s, &mut raw);
    raw.sort();
    for s in raw {
        let g = s.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        if g == 1 {
            out.push(KacVector { s, m });
        }
    }
    out
}

/// Ambient root coordinates of the generators attached to the extended
/// vertices in `zero_vertices` (vertex 0 carries the highest root).
fn vertex_roots(datum: &RootDatum, zero_vertices: &[usize]) -> Vec<Vec<i64>> {
    let n = datum.rank();
    zero_vertices
        .iter()
        .map(|&v| {
            if v == 0 {
                datum.positive_roots().last().unwrap().clone()
            } else {
                let mut r = vec![0i64; n];
                r[v - 1] = 1;
                r
            }
        })
        .collect()
}

/// Subsystem generated by a set of ambient roots: closure under addition
/// within the full (signed) root system.
fn generated_subsystem(datum: &RootDatum, generators: &[Vec<i64>]) -> Vec<usize> {
    use std::collections::HashSet;
    let is_root = |v: &Vec<i64>| -> bool {
        if datum.root_lookup(v).is_some() {
            return true;
        }
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        datum.root_lookup(&neg).is_some()
    };
    let mut set: HashSet<Vec<i64>> = HashSet::new();
    let mut all: Vec<Vec<i64>> = Vec::new();
    let mut work: Vec<Vec<i64>> = Vec::new();
    for g in generators {
        for v in [g.clone(), g.iter().map(|x| -x).collect()] {
            if set.insert(v.clone()) {
                all.push(v.clone());
                work.push(v);
            }
        }
    }
    while let Some(x) = work.pop() {
        let mut found = Vec::new();
        for y in &all {
            let sum: Vec<i64> = x.iter().zip(y).map(|(a, b)| a + b).collect();
            if sum.iter().all(|&v| v == 0) || set.contains(&sum) {
                continue;
            }
            if is_root(&sum) {
                found.push(sum);
            }
        }
        for v in found {
            if set.insert(v.clone()) {
                all.push(v.clone());
                work.push(v);
            }
        }
    }
    let mut positive: Vec<usize> = all.iter().filter_map(|v| datum.root_lookup(v)).collect();
    positive.sort_unstable();
    positive
}

/// Centralizer of the class `x(s)`: type of the subsystem generated by the
/// zero vertices, with `d(s)` computed by closure in the ambient system.
pub fn centralizer_of(datum: &RootDatum, s: &KacVector) -> CentralizerDescriptor {
    let zero_vertices: Vec<usize> = (0..s.s.len()).filter(|&i| s.s[i] == 0).collect();
    let gens = vertex_roots(datum, &zero_vertices);
    let positive = generated_subsystem(datum, &gens);
    let descriptor: SubsystemDescriptor = datum
        .subsystem(&positive)
        .expect("generated subsystems are closed");
    let root_count = 2 * positive.len() as i64;
    CentralizerDescriptor {
        zero_vertices,
        components: descriptor.type_multiset(),
        root_count,
        dimension: datum.rank() as i64 + root_count,
    }
}

/// Partition Kac vectors into Ω-orbits (deterministic order, lex-least
/// representative first).
pub fn omega_orbits(datum: &RootDatum, vectors: &[KacVector]) -> Vec<Vec<KacVector>> {
    let mut orbits: Vec<Vec<KacVector>> = Vec::new();
    let mut assigned: Vec<bool> = vec![false; vectors.len()];
    for (i, v) in vectors.iter().enumerate() {
        if assigned[i] {
            continue;
        }
        // closure of v under the generators
        let mut orbit = vec![v.s.clone()];
        let mut frontier = vec![v.s.clone()];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for s in &frontier {
                for gen in datum.omega_generators() {
                    let t = apply_vertex_perm(gen, s);
                    if !orbit.contains(&t) {
                        orbit.push(t.clone());
                        next.push(t);
                    }
                }
            }
            frontier = next;
        }
        orbit.sort();
        let members: Vec<KacVector> = orbit.into_iter().map(|s| KacVector { s, m: v.m }).collect();
        for (j, other) in vectors.iter().enumerate() {
            if members.contains(other) {
                assigned[j] = true;
            }
        }
        orbits.push(members);
    }
    orbits.sort_by(|a, b| a[0].cmp(&b[0]));
    orbits
}

/// One minimal-centralizer class: an Ω-orbit of Kac vectors achieving
/// `d(G, m)`, with its centralizer data.
#[derive(Debug, Clone)]
pub struct MinimalClass {
    pub representative: KacVector,
    pub orbit: Vec<KacVector>,
    pub centralizer: CentralizerDescriptor,
}

/// All Ω-orbit classes of order-`m` Kac vectors with minimal `d(s)`.
pub fn minimal_centralizers(datum: &RootDatum, m: i64) -> Vec<MinimalClass> {
    let all = enumerate_kac(datum, m);
    let mut with_d: Vec<(KacVector, CentralizerDescriptor)> = all
        .into_iter()
        .map(|s| {
            let c = centralizer_of(datum, &s);
            (s, c)
        })
        .collect();
    let Some(min_d) = with_d.iter().map(|(_, c)| c.root_count).min() else {
        return Vec::new();
    };
    with_d.retain(|(_, c)| c.root_count == min_d);
    let minimal: Vec<KacVector> = with_d.iter().map(|(s, _)| s.clone()).collect();
    omega_orbits(datum, &minimal)
        .into_iter()
        .map(|orbit| {
            let representative = orbit[0].clone();
            let centralizer = centralizer_of(datum, &representative);
            MinimalClass {
                representative,
                orbit,
                centralizer,
            }
        })
        .collect()
}

/// Verify there is exactly one regular class at `m = h`: the all-ones tuple.
pub fn kostant_regular_unique(datum: &RootDatum) -> bool {
    let h = datum.coxeter_number();
    let regular: Vec<KacVector> = enumerate_kac(datum, h)
        .into_iter()
        .filter(|s| s.s.iter().all(|&x| x > 0))
        .collect();
    regular.len() == 1 && regular[0].s.iter().all(|&x| x == 1)
}

// ---------------------------------------------------------------------------
// Classical groups via eigenvalue patterns.
// ---------------------------------------------------------------------------

/// Classical family of the ambient group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicalFamily {
    /// `GL_n`
    Gl,
    /// `Sp_{2n}`
    Sp,
    /// `SO_{2n+1}`
    SoOdd,
    /// `SO_{2n+2}` (parameter `n`, ambient dimension `2n+2`)
    SoEven,
}

impl ClassicalFamily {
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gl" => Some(ClassicalFamily::Gl),
            "sp" => Some(ClassicalFamily::Sp),
            "so-odd" | "soodd" => Some(ClassicalFamily::SoOdd),
            "so-even" | "soeven" => Some(ClassicalFamily::SoEven),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ClassicalFamily::Gl => "gl",
            ClassicalFamily::Sp => "sp",
            ClassicalFamily::SoOdd => "so-odd",
            ClassicalFamily::SoEven => "so-even",
        }
    }

    /// Ambient dimension of the standard representation.
    pub fn ambient(self, n: i64) -> i64 {
        match self {
            ClassicalFamily::Gl => n,
            ClassicalFamily::Sp => 2 * n,
            ClassicalFamily::SoOdd => 2 * n + 1,
            ClassicalFamily::SoEven => 2 * n + 2,
        }
    }

    /// Coxeter number.
    pub fn coxeter(self, n: i64) -> i64 {
        match self {
            ClassicalFamily::Gl => n,
            ClassicalFamily::Sp | ClassicalFamily::SoOdd | ClassicalFamily::SoEven => 2 * n,
        }
    }
}

/// One factor of a classical centralizer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Factor {
    Gl(i64),
    So(i64),
    Sp(i64),
}

impl Factor {
    pub fn dimension(self) -> i64 {
        match self {
            Factor::Gl(k) => k * k,
            Factor::So(k) => k * (k - 1) / 2,
            Factor::Sp(k) => k * (k + 1) / 2,
        }
    }

    /// Dual factor: `SO_{2k+1} ↔ Sp_{2k}`, `GL` and even `SO` self-dual.
    pub fn dual(self) -> Factor {
        match self {
            Factor::Gl(k) => Factor::Gl(k),
            Factor::So(k) if k % 2 == 1 => Factor::Sp(k - 1),
            Factor::So(k) => Factor::So(k),
            Factor::Sp(k) => Factor::So(k + 1),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Gl(k) => write!(f, "GL{k}"),
            Factor::So(k) => write!(f, "SO{k}"),
            Factor::Sp(k) => write!(f, "Sp{k}"),
        }
    }
}

/// Render a factor multiset as `GL2^3 x SO4`.
pub fn factors_string(factors: &[Factor]) -> String {
    let mut counts: BTreeMap<Factor, usize> = BTreeMap::new();
    for &f in factors {
        *counts.entry(f).or_insert(0) += 1;
    }
    if counts.is_empty() {
        return "1".to_string();
    }
    counts
        .iter()
        .rev()
        .map(|(f, c)| {
            if *c == 1 {
                f.to_string()
            } else {
                format!("{f}^{c}")
            }
        })
        .collect::<Vec<_>>()
        .join(" x ")
}

/// Conjugacy class of a torsion element of a classical group, recorded by
/// its eigenvalue multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalClass {
    pub family: ClassicalFamily,
    pub n: i64,
    /// Order in the adjoint group.
    pub d: i64,
    /// `(exponent, multiplicity)` for eigenvalues `ζ_D^exponent`, where `D`
    /// is `d` for untwisted classes and `2d` for classes with `x^d = −1`.
    pub eigenvalues: Vec<(i64, i64)>,
    /// Denominator `D` of the eigenvalue exponents.
    pub modulus: i64,
    pub factors: Vec<Factor>,
    pub centralizer_dim: i64,
}

fn sorted_factors(mut f: Vec<Factor>) -> Vec<Factor> {
    f.sort();
    f.reverse();
    f
}

/// Kind of classical group a pattern lives in, fixing how eigenvalues turn
/// into centralizer factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum AmbientKind {
    GeneralLinear,
    Orthogonal,
    Symplectic,
}

impl ClassicalFamily {
    fn kind(self) -> AmbientKind {
        match self {
            ClassicalFamily::Gl => AmbientKind::GeneralLinear,
            ClassicalFamily::Sp => AmbientKind::Symplectic,
            ClassicalFamily::SoOdd | ClassicalFamily::SoEven => AmbientKind::Orthogonal,
        }
    }
}

/// Centralizer factors from an eigenvalue multiplicity pattern.
///
/// In the isometry groups, self-inverse eigenvalues give SO/Sp factors and
/// pairs `λ ≠ λ⁻¹` one GL factor each; in the general linear group every
/// eigenvalue gives a GL factor.
fn factors_from_pattern(
    pattern: &BTreeMap<i64, i64>,
    modulus: i64,
    kind: AmbientKind,
) -> Vec<Factor> {
    let mut factors = Vec::new();
    for (&e, &mult) in pattern {
        if mult == 0 {
            continue;
        }
        if kind == AmbientKind::GeneralLinear {
            factors.push(Factor::Gl(mult));
            continue;
        }
        let neg = (-e).rem_euclid(modulus);
        if neg == e {
            factors.push(match kind {
                AmbientKind::Orthogonal => Factor::So(mult),
                _ => Factor::Sp(mult),
            });
        } else if e < neg {
            factors.push(Factor::Gl(mult));
        }
    }
    factors
        .into_iter()
        .filter(|f| f.dimension() > 0 || matches!(f, Factor::Gl(_)))
        .collect()
}

fn pattern_dim(pattern: &BTreeMap<i64, i64>, modulus: i64, kind: AmbientKind) -> i64 {
    factors_from_pattern(pattern, modulus, kind)
        .iter()
        .map(|f| f.dimension())
        .sum()
}

/// Adjoint order of an element with the given eigenvalue exponents
/// (mod `modulus`), where scalars available in the group are `center`:
/// 1 for `SoOdd`/`Gl`-projective handled separately, 2 for ±1.
fn adjoint_order(support: &[i64], modulus: i64, has_minus_one: bool) -> i64 {
    // order = least e ≥ 1 with all e·r equal mod modulus (up to allowed scalar)
    'outer: for e in 1..=modulus {
        let base = (support[0] * e).rem_euclid(modulus);
        let mut all_equal = true;
        for &r in support {
            if (r * e).rem_euclid(modulus) != base {
                all_equal = false;
                break;
            }
        }
        if all_equal {
            // x^e is the scalar ζ^base; allowed when base = 0, or ±1 available
            if base == 0 {
                return e;
            }
            if has_minus_one && 2 * base == modulus {
                return e;
            }
            continue 'outer;
        }
    }
    modulus
}

/// Exponent multiset of the principal element `C_d` in the standard
/// representation, as exponents of `ζ_{2d}`.
fn principal_exponents(family: ClassicalFamily, n: i64, d: i64) -> Vec<i64> {
    // weights of the standard representation under the principal torus ψ(z)
    let weights: Vec<i64> = match family {
        // Sym^{n-1}: n-1, n-3, …, -(n-1)
        ClassicalFamily::Gl => (0..n).map(|k| n - 1 - 2 * k).collect(),
        // Sym^{2n-1}
        ClassicalFamily::Sp => (0..2 * n).map(|k| 2 * n - 1 - 2 * k).collect(),
        // Sym^{2n}
        ClassicalFamily::SoOdd => (0..=2 * n).map(|k| 2 * n - 2 * k).collect(),
        // Sym^{2n} ⊕ trivial
        ClassicalFamily::SoEven => {
            let mut v: Vec<i64> = (0..=2 * n).map(|k| 2 * n - 2 * k).collect();
            v.push(0);
            v
        }
    };
    weights.into_iter().map(|w| w.rem_euclid(2 * d)).collect()
}

/// Centralizer of the principal order-`d` element on the dual side,
/// dualized back: the table `G(d)` of centralizer shapes.
pub fn centralizer_of_principal(
    family: ClassicalFamily,
    n: i64,
    d: i64,
) -> Result<ClassicalClass, KacError> {
    let h = family.coxeter(n);
    if d < 1 || h % d != 0 {
        return Err(KacError::InvalidOrder { d, h });
    }
    let dual_family = match family {
        ClassicalFamily::Gl => ClassicalFamily::Gl,
        ClassicalFamily::Sp => ClassicalFamily::SoOdd,
        ClassicalFamily::SoOdd => ClassicalFamily::Sp,
        ClassicalFamily::SoEven => ClassicalFamily::SoEven,
    };
    let exps = principal_exponents(dual_family, n, d);
    // reduce to modulus d when all exponents are even (element of order d)
    let all_even = exps.iter().all(|e| e % 2 == 0);
    let (modulus, exps): (i64, Vec<i64>) = if all_even {
        (d, exps.into_iter().map(|e| (e / 2).rem_euclid(d)).collect())
    } else {
        (2 * d, exps)
    };
    let mut pattern: BTreeMap<i64, i64> = BTreeMap::new();
    for e in exps {
        *pattern.entry(e).or_insert(0) += 1;
    }
    let dual_factors = factors_from_pattern(&pattern, modulus, dual_family.kind());
    let factors = sorted_factors(dual_factors.iter().map(|f| f.dual()).collect());
    let centralizer_dim = factors.iter().map(|f| f.dimension()).sum();
    Ok(ClassicalClass {
        family,
        n,
        d,
        eigenvalues: pattern.into_iter().collect(),
        modulus,
        factors,
        centralizer_dim,
    })
}

/// Eigenvalue pattern of the principal element itself (same side), used as
/// the expected minimum in the exhaustive searches. Exponents are
/// normalized the way the searches represent classes: rescaled to d-th
/// roots for GL, flipped to the untwisted form when the order is odd, and
/// kept as odd exponents mod 2d only for genuinely twisted even orders.
fn principal_pattern(family: ClassicalFamily, n: i64, d: i64) -> (i64, BTreeMap<i64, i64>) {
    let mut exps = principal_exponents(family, n, d);
    let all_even = exps.iter().all(|e| e % 2 == 0);
    if !all_even {
        match family {
            // rescaling by a 2d-th root of unity is allowed in GL
            ClassicalFamily::Gl => {
                for e in exps.iter_mut() {
                    *e = (*e - 1).rem_euclid(2 * d);
                }
            }
            // multiplying by -1 is allowed in the isometry groups; for odd
            // d this turns x^d = -1 into the untwisted form
            _ if d % 2 == 1 => {
                for e in exps.iter_mut() {
                    *e = (*e + d).rem_euclid(2 * d);
                }
            }
            _ => {}
        }
    }
    let all_even = exps.iter().all(|e| e % 2 == 0);
    let (modulus, exps): (i64, Vec<i64>) = if all_even {
        (d, exps.into_iter().map(|e| (e / 2).rem_euclid(d)).collect())
    } else {
        (2 * d, exps)
    };
    let mut pattern = BTreeMap::new();
    for e in exps {
        *pattern.entry(e).or_insert(0) += 1;
    }
    (modulus, pattern)
}

/// Canonical form of a pattern under the symmetries that do not change the
/// conjugacy class in the adjoint group: rotation (GL), global sign flip
/// where ±x coincide, with inversion λ ↦ λ⁻¹ NOT included (it is outer for
/// GL but inner for the isometry groups, where patterns are already
/// symmetric).
fn canonical_pattern(
    family: ClassicalFamily,
    modulus: i64,
    pattern: &BTreeMap<i64, i64>,
) -> Vec<(i64, i64)> {
    let normalize = |f: &BTreeMap<i64, i64>| -> Vec<(i64, i64)> {
        f.iter()
            .filter(|(_, &m)| m > 0)
            .map(|(&e, &m)| (e, m))
            .collect()
    };
    match family {
        ClassicalFamily::Gl => {
            // rotation by any amount
            let mut best: Option<Vec<(i64, i64)>> = None;
            for shift in 0..modulus {
                let mut rotated = BTreeMap::new();
                for (&e, &m) in pattern {
                    *rotated.entry((e + shift).rem_euclid(modulus)).or_insert(0) += m;
                }
                let v = normalize(&rotated);
                if best.as_ref().map_or(true, |b| v < *b) {
                    best = Some(v);
                }
            }
            best.unwrap()
        }
        ClassicalFamily::Sp | ClassicalFamily::SoEven => {
            // x ~ −x in the adjoint group: shift by modulus/2 when even
            let mut cands = vec![normalize(pattern)];
            if modulus % 2 == 0 {
                let mut shifted = BTreeMap::new();
                for (&e, &m) in pattern {
                    *shifted
                        .entry((e + modulus / 2).rem_euclid(modulus))
                        .or_insert(0) += m;
                }
                cands.push(normalize(&shifted));
            }
            cands.into_iter().min().unwrap()
        }
        ClassicalFamily::SoOdd => normalize(pattern),
    }
}

/// Exhaustive minimal-centralizer search over eigenvalue patterns of
/// elements of adjoint order exactly `d`. Returns every minimum (one per
/// conjugacy class, canonical order).
pub fn classical_minimal_centralizers(
    family: ClassicalFamily,
    n: i64,
    d: i64,
) -> Result<Vec<ClassicalClass>, KacError> {
    let h = family.coxeter(n);
    if d < 1 {
        return Err(KacError::InvalidOrder { d, h });
    }
    if family != ClassicalFamily::Gl && h % d != 0 {
        return Err(KacError::InvalidOrder { d, h });
    }
    if family == ClassicalFamily::Gl && d > n {
        return Err(KacError::InvalidOrder { d, h });
    }
    let ambient = family.ambient(n);
    let kind = family.kind();
    let mut found: Vec<(Vec<(i64, i64)>, i64, BTreeMap<i64, i64>, i64)> = Vec::new();

    let mut consider = |modulus: i64, pattern: &BTreeMap<i64, i64>| {
        let support: Vec<i64> = pattern
            .iter()
            .filter(|(_, &m)| m > 0)
            .map(|(&e, _)| e)
            .collect();
        if support.is_empty() {
            return;
        }
        let order = if family == ClassicalFamily::Gl {
            // ratios of eigenvalues: gcd of support differences
            let g = support
                .windows(2)
                .fold(0i64, |acc, w| acc.gcd(&(w[1] - w[0])));
            modulus / modulus.gcd(&g)
        } else {
            let has_minus_one = family != ClassicalFamily::SoOdd;
            adjoint_order(&support, modulus, has_minus_one)
        };
        if order != d {
            return;
        }
        let dim = pattern_dim(pattern, modulus, kind);
        let canon = canonical_pattern(family, modulus, pattern);
        if found
            .iter()
            .any(|(c, mo, _, _)| *c == canon && *mo == modulus)
        {
            return;
        }
        found.push((canon, modulus, pattern.clone(), dim));
    };

    match family {
        ClassicalFamily::Gl => {
            // Compositions of n into d parts, branch-and-bound. The balanced
            // multiplicity vector minimizes Σ nᵢ² unconditionally and always
            // admits an order-d arrangement, so it seeds the exact optimum;
            // partial sums are bounded below via Cauchy-Schwarz.
            let a = n / d;
            let b = n % d;
            let best = (d - b) * a * a + b * (a + 1) * (a + 1);
            let mut parts = vec![0i64; d as usize];
            fn dfs(
                left: i64,
                pos: usize,
                partial: i64,
                best: i64,
                parts: &mut Vec<i64>,
                f: &mut dyn FnMut(&Vec<i64>),
            ) {
                let slots = parts.len() - pos;
                let bound = partial + (left * left + slots as i64 - 1) / slots as i64;
                if bound > best {
                    return;
                }
                if pos == parts.len() - 1 {
                    parts[pos] = left;
                    f(parts);
                    return;
                }
                for v in 0..=left {
                    parts[pos] = v;
                    dfs(left - v, pos + 1, partial + v * v, best, parts, f);
                }
                parts[pos] = 0;
            }
            dfs(n, 0, 0, best, &mut parts, &mut |parts| {
                let pattern: BTreeMap<i64, i64> = parts
                    .iter()
                    .enumerate()
                    .map(|(i, &m)| (i as i64, m))
                    .collect();
                consider(d, &pattern);
            });
        }
        ClassicalFamily::Sp | ClassicalFamily::SoOdd | ClassicalFamily::SoEven => {
            // untwisted: eigenvalues are d-th roots, symmetric multiplicities
            for_symmetric_patterns(d, ambient, family, &mut |pattern| {
                consider(d, pattern);
            });
            // twisted: x^d = −1, eigenvalues among odd exponents mod 2d
            if d % 2 == 0 && family != ClassicalFamily::SoOdd {
                for_twisted_patterns(d, ambient, &mut |pattern| {
                    consider(2 * d, pattern);
                });
            }
        }
    }

    let Some(min_dim) = found.iter().map(|(_, _, _, dim)| *dim).min() else {
        return Ok(Vec::new());
    };
    let mut out: Vec<ClassicalClass> = found
        .into_iter()
        .filter(|(_, _, _, dim)| *dim == min_dim)
        .map(|(canon, modulus, pattern, dim)| {
            let factors = sorted_factors(factors_from_pattern(&pattern, modulus, kind));
            ClassicalClass {
                family,
                n,
                d,
                eigenvalues: canon,
                modulus,
                factors,
                centralizer_dim: dim,
            }
        })
        .collect();
    out.sort_by(|a, b| (a.modulus, &a.eigenvalues).cmp(&(b.modulus, &b.eigenvalues)));
    Ok(out)
}

/// Is the principal-element pattern among these classes?
pub fn contains_principal(
    classes: &[ClassicalClass],
    family: ClassicalFamily,
    n: i64,
    d: i64,
) -> bool {
    let (modulus, pattern) = principal_pattern(family, n, d);
    let canon = canonical_pattern(family, modulus, &pattern);
    classes
        .iter()
        .any(|c| c.modulus == modulus && c.eigenvalues == canon)
}

/// Symmetric multiplicity patterns on ℤ/d with total `ambient`,
/// `m(e) = m(−e)`, and the parity constraints of the family at ±1.
fn for_symmetric_patterns(
    d: i64,
    ambient: i64,
    family: ClassicalFamily,
    f: &mut dyn FnMut(&BTreeMap<i64, i64>),
) {
    // free slots: e = 0, e = d/2 (if d even), pairs {e, d−e}; a unit in a
    // pair slot stands for one eigenvector on each side.
    let mut slots: Vec<(i64, i64)> = vec![(0, 1)];
    if d % 2 == 0 {
        slots.push((d / 2, 1));
    }
    for e in 1..=(d - 1) / 2 {
        slots.push((e, 2));
    }
    let fixed_count = if d % 2 == 0 { 2 } else { 1 };
    let mut mults = vec![0i64; slots.len()];
    fn rec(
        slots: &[(i64, i64)],
        fixed_count: usize,
        pos: usize,
        left: i64,
        mults: &mut Vec<i64>,
        family: ClassicalFamily,
        f: &mut dyn FnMut(&[(i64, i64)], &[i64]),
    ) {
        if pos == slots.len() {
            if left != 0 {
                return;
            }
            let m1 = mults[0];
            let mneg = if fixed_count == 2 { mults[1] } else { 0 };
            let ok = match family {
                ClassicalFamily::Sp | ClassicalFamily::SoEven => m1 % 2 == 0 && mneg % 2 == 0,
                ClassicalFamily::SoOdd => m1 % 2 == 1 && mneg % 2 == 0,
                ClassicalFamily::Gl => true,
            };
            if ok {
                f(slots, mults);
            }
            return;
        }
        let (_, w) = slots[pos];
        let mut v = 0;
        while v * w <= left {
            mults[pos] = v;
            rec(slots, fixed_count, pos + 1, left - v * w, mults, family, f);
            v += 1;
        }
        mults[pos] = 0;
    }
    rec(
        &slots,
        fixed_count,
        0,
        ambient,
        &mut mults,
        family,
        &mut |slots, mults| {
            let mut full = BTreeMap::new();
            for (i, &(e, _)) in slots.iter().enumerate() {
                if mults[i] > 0 {
                    full.insert(e, mults[i]);
                    let neg = (-e).rem_euclid(d);
                    if neg != e {
                        full.insert(neg, mults[i]);
                    }
                }
            }
            f(&full);
        },
    );
}

/// Patterns for `x^d = −1`: eigenvalue exponents odd mod 2d, symmetric under
/// negation, no fixed points.
fn for_twisted_patterns(d: i64, ambient: i64, f: &mut dyn FnMut(&BTreeMap<i64, i64>)) {
    let modulus = 2 * d;
    let pairs: Vec<i64> = (1..modulus)
        .step_by(2)
        .filter(|&e| e < (-e).rem_euclid(modulus))
        .collect();
    let mut mults = vec![0i64; pairs.len()];
    fn rec(
        pairs: &[i64],
        modulus: i64,
        pos: usize,
        left: i64,
        mults: &mut Vec<i64>,
        f: &mut dyn FnMut(&BTreeMap<i64, i64>),
    ) {
        if pos == pairs.len() {
            if left != 0 {
                return;
            }
            let mut pattern = BTreeMap::new();
            for (i, &e) in pairs.iter().enumerate() {
                if mults[i] > 0 {
                    pattern.insert(e, mults[i]);
                    pattern.insert((-e).rem_euclid(modulus), mults[i]);
                }
            }
            f(&pattern);
            return;
        }
        let mut v = 0;
        while 2 * v <= left {
            mults[pos] = v;
            rec(pairs, modulus, pos + 1, left - 2 * v, mults, f);
            v += 1;
        }
        mults[pos] = 0;
    }
    rec(&pairs, modulus, 0, ambient, &mut mults, f);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::CartanType;

    fn datum(s: &str) -> RootDatum {
        RootDatum::build(CartanType::parse(s).unwrap())
    }

    fn kv(s: &[i64], m: i64) -> KacVector {
        KacVector { s: s.to_vec(), m }
    }

    #[test]
    fn enumerate_g2() {
        let d = datum("G2");
        let got = enumerate_kac(&d, 3);
        assert_eq!(got, vec![kv(&[0, 1, 0], 3), kv(&[1, 0, 1], 3)]);
        // m = 1: one unit vector per mark-1 vertex, all in a single
        // Ω-orbit (the identity element); lex-first is (1, 0, …, 0)
        for name in ["A2", "B3", "G2", "F4", "E6"] {
            let d = datum(name);
            let got = enumerate_kac(&d, 1);
            let ones = d.marks().iter().filter(|&&a| a == 1).count();
            assert_eq!(got.len(), ones, "{name}");
            let orbits = omega_orbits(&d, &got);
            assert_eq!(orbits.len(), 1, "{name}");
            let mut unit = vec![0i64; d.rank() + 1];
            unit[0] = 1;
            assert!(orbits[0].iter().any(|v| v.s == unit), "{name}");
        }
    }

    #[test]
    fn enumerate_f4_m4() {
        let d = datum("F4");
        let got = enumerate_kac(&d, 4);
        let expect: Vec<KacVector> = vec![
            kv(&[0, 0, 0, 1, 0], 4),
            kv(&[0, 1, 0, 0, 1], 4),
            kv(&[1, 0, 1, 0, 0], 4),
            kv(&[2, 0, 0, 0, 1], 4),
            kv(&[2, 1, 0, 0, 0], 4),
        ];
        assert_eq!(got, expect);
    }

    #[test]
    fn centralizer_examples() {
        let d = datum("E8");
        let c = centralizer_of(&d, &kv(&[1, 1, 0, 0, 1, 0, 1, 0, 1], 15));
        assert_eq!(c.type_string(), "4A1");
        assert_eq!(c.root_count, 8);
        assert_eq!(c.dimension, 16);
        // all coordinates positive: torus
        let c = centralizer_of(&d, &kv(&[1, 1, 1, 1, 1, 1, 1, 1, 1], 30));
        assert_eq!(c.root_count, 0);
        assert_eq!(c.type_string(), "0");
        let d = datum("E7");
        let c = centralizer_of(&d, &kv(&[1, 0, 1, 1, 0, 0, 1, 1], 9));
        assert_eq!(c.type_string(), "A2+A1");
    }

    #[test]
    fn omega_orbit_examples() {
        let d = datum("G2");
        let all = enumerate_kac(&d, 3);
        let orbits = omega_orbits(&d, &all);
        assert_eq!(orbits.len(), 2); // Ω trivial: singletons
        assert!(orbits.iter().all(|o| o.len() == 1));

        let d = datum("E7");
        let nine: Vec<KacVector> = vec![
            kv(&[1, 0, 1, 1, 0, 0, 1, 1], 9),
            kv(&[0, 1, 0, 0, 1, 0, 1, 1], 9),
        ];
        let orbits = omega_orbits(&d, &nine);
        assert_eq!(orbits.len(), 2); // distinct classes
    }

    #[test]
    fn minimal_f4() {
        let d = datum("F4");
        let m6 = minimal_centralizers(&d, 6);
        assert_eq!(m6.len(), 1);
        assert_eq!(m6[0].representative, kv(&[1, 0, 1, 0, 1], 6));
        assert_eq!(m6[0].centralizer.type_string(), "2A1");
        let m4 = minimal_centralizers(&d, 4);
        assert_eq!(m4.len(), 1);
        assert_eq!(m4[0].representative, kv(&[1, 0, 1, 0, 0], 4));
        assert_eq!(m4[0].centralizer.type_string(), "A2+A1");
    }

    #[test]
    fn kostant_regular_class() {
        for name in ["A1", "A3", "B3", "C3", "D4", "F4", "G2", "E6"] {
            assert!(kostant_regular_unique(&datum(name)), "{name}");
        }
    }

    #[test]
    fn gl_minimal_unique() {
        let classes = classical_minimal_centralizers(ClassicalFamily::Gl, 6, 3).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].centralizer_dim, 12);
        assert_eq!(
            classes[0].factors,
            vec![Factor::Gl(2), Factor::Gl(2), Factor::Gl(2)]
        );
        assert!(contains_principal(&classes, ClassicalFamily::Gl, 6, 3));
    }

    #[test]
    fn gl_nonunique_when_remainder_is_middle() {
        // n = 7, d = 5: b = 2 extra ones can sit in inequivalent positions
        let classes = classical_minimal_centralizers(ClassicalFamily::Gl, 7, 5).unwrap();
        assert!(classes.len() > 1);
    }

    #[test]
    fn gl_uniqueness_iff_remainder_is_extreme() {
        for n in 2..=9i64 {
            for d in 2..=n {
                let classes = classical_minimal_centralizers(ClassicalFamily::Gl, n, d).unwrap();
                let r = n % d;
                let expect_unique = r == 0 || r == 1 || r == d - 1;
                assert_eq!(
                    classes.len() == 1,
                    expect_unique,
                    "GL n={n} d={d}: {} classes",
                    classes.len()
                );
            }
        }
    }

    #[test]
    fn so_even_odd_order_pair() {
        // SO10 (n = 4), d = 4: d' = 2 even: exactly two minima (Lemma even)
        let classes = classical_minimal_centralizers(ClassicalFamily::SoEven, 4, 4).unwrap();
        assert_eq!(classes.len(), 2, "{classes:?}");
        assert_eq!(classes[0].centralizer_dim, classes[1].centralizer_dim);
        assert!(contains_principal(&classes, ClassicalFamily::SoEven, 4, 4));
        // SO8 (n = 3), d = 3 odd: exactly two minima (Lemma odd)
        let classes = classical_minimal_centralizers(ClassicalFamily::SoEven, 3, 3).unwrap();
        assert_eq!(classes.len(), 2, "{classes:?}");
        assert_eq!(classes[0].centralizer_dim, classes[1].centralizer_dim);
        // d even with d' odd: unique
        let classes = classical_minimal_centralizers(ClassicalFamily::SoEven, 3, 6).unwrap();
        assert_eq!(classes.len(), 1, "{classes:?}");
    }

    #[test]
    fn sp_and_so_odd_unique() {
        for n in 2..=4i64 {
            for d in 1..=2 * n {
                if (2 * n) % d != 0 {
                    continue;
                }
                let classes = classical_minimal_centralizers(ClassicalFamily::Sp, n, d).unwrap();
                assert_eq!(classes.len(), 1, "Sp n={n} d={d}: {classes:?}");
                assert!(contains_principal(&classes, ClassicalFamily::Sp, n, d));
                let classes = classical_minimal_centralizers(ClassicalFamily::SoOdd, n, d).unwrap();
                assert_eq!(classes.len(), 1, "SoOdd n={n} d={d}: {classes:?}");
                assert!(contains_principal(&classes, ClassicalFamily::SoOdd, n, d));
            }
        }
    }

    #[test]
    fn principal_centralizer_table_rows() {
        // GL_n: GL_{n/d}^d
        let c = centralizer_of_principal(ClassicalFamily::Gl, 6, 3).unwrap();
        assert_eq!(factors_string(&c.factors), "GL2^3");
        // Sp_{2n}, d even, a = 2n/d even
        let c = centralizer_of_principal(ClassicalFamily::Sp, 4, 2).unwrap();
        assert_eq!(c.factors, vec![Factor::Sp(4), Factor::So(4)]);
        // Sp, d even, a odd
        let c = centralizer_of_principal(ClassicalFamily::Sp, 3, 2).unwrap();
        assert_eq!(c.factors, vec![Factor::Sp(2), Factor::So(4)]);
        // SO_{2n+1}, d odd: GL_{2a}^{(d-1)/2} × SO_{2a+1} with 2a = 2n/d,
        // i.e. dual of GL2 × Sp2 inside Sp6
        let c = centralizer_of_principal(ClassicalFamily::SoOdd, 3, 3).unwrap();
        assert_eq!(c.factors, vec![Factor::So(3), Factor::Gl(2)]);
        // SO_{2n+1}, d even: GL_a^{d/2}
        let c = centralizer_of_principal(ClassicalFamily::SoOdd, 4, 4).unwrap();
        assert_eq!(c.factors, vec![Factor::Gl(2), Factor::Gl(2)]);
        // SO_{2n+2}, d odd
        let c = centralizer_of_principal(ClassicalFamily::SoEven, 3, 3).unwrap();
        assert_eq!(c.factors, vec![Factor::So(4), Factor::Gl(2)]);
        // invalid order
        assert!(centralizer_of_principal(ClassicalFamily::Sp, 3, 4).is_err());
    }

    #[test]
    fn phi_m_type_matches_kac_centralizer_of_principal_class() {
        // For each exceptional type and m | h: the subsystem of roots with
        // coheight divisible by m (the root system of the dual-side
        // centralizer of the principal element) has the Dynkin type of the
        // group-side centralizer of C_m, with B and C swapped: the two sets
        // are exchanged by the root <-> coroot bijection of a self-dual
        // ambient type.
        use crate::torsionchar;
        let swap = |t: CartanType| -> CartanType {
            match t.family {
                crate::rootdata::Family::B if t.rank >= 3 => CartanType {
                    family: crate::rootdata::Family::C,
                    rank: t.rank,
                },
                crate::rootdata::Family::C if t.rank >= 3 => CartanType {
                    family: crate::rootdata::Family::B,
                    rank: t.rank,
                },
                _ => t,
            }
        };
        for name in ["G2", "F4", "E6", "E7", "E8"] {
            let d = datum(name);
            let h = d.coxeter_number();
            for m in (2..=h).filter(|m| h % m == 0) {
                let phi_m =
                    torsionchar::phi_subsystem(&d, &crate::rootdata::Weight::zero(d.rank()), m)
                        .unwrap();
                let height_based: Vec<usize> = (0..d.positive_roots().len())
                    .filter(|&k| d.heights()[k] % m == 0)
                    .collect();
                let kac_side = d.subsystem(&height_based).unwrap();
                let mut expect: Vec<CartanType> =
                    kac_side.type_multiset().into_iter().map(swap).collect();
                crate::rootdata::sort_types(&mut expect);
                assert_eq!(phi_m.descriptor.type_multiset(), expect, "{name} m={m}");
            }
        }
    }

    #[test]
    fn maximal_levi_minima_sweep() {
        // symplectic/odd-orthogonal: argmin_k of k² + (N−k)(2(N−k)+1)
        for cap_n in 3..=40i64 {
            let dims: Vec<i64> = (1..=cap_n)
                .map(|k| k * k + (cap_n - k) * (2 * (cap_n - k) + 1))
                .collect();
            let min = dims.iter().min().unwrap();
            let argmin: Vec<i64> = (1..=cap_n)
                .filter(|&k| dims[(k - 1) as usize] == *min)
                .collect();
            match cap_n % 3 {
                0 => assert_eq!(argmin, vec![2 * cap_n / 3]),
                1 => assert_eq!(argmin, vec![(2 * cap_n + 1) / 3]),
                _ => {
                    // N = 3t+2: tie between 2t+1 and 2t+2
                    let t = cap_n / 3;
                    assert_eq!(argmin, vec![2 * t + 1, 2 * t + 2], "N={cap_n}");
                }
            }
        }
        // even-orthogonal: k² + (N−k)(2(N−k)−1); ties at N ≡ 1 mod 3
        for cap_n in 3..=40i64 {
            let dims: Vec<i64> = (1..=cap_n)
                .map(|k| k * k + (cap_n - k) * (2 * (cap_n - k) - 1))
                .collect();
            let min = dims.iter().min().unwrap();
            let argmin: Vec<i64> = (1..=cap_n)
                .filter(|&k| dims[(k - 1) as usize] == *min)
                .collect();
            match cap_n % 3 {
                0 => assert_eq!(argmin, vec![2 * cap_n / 3]),
                1 => {
                    let t = cap_n / 3;
                    assert_eq!(argmin, vec![2 * t, 2 * t + 1], "N={cap_n}");
                }
                _ => {
                    let t = cap_n / 3;
                    assert_eq!(argmin, vec![2 * t + 1], "N={cap_n}");
                }
            }
        }
        // SO_a × SO_{n−a} ⊂ SO_n: minimal iff |a−(n−a)| ≤ 1
        for n in 2..=40i64 {
            let dims: Vec<i64> = (0..=n)
                .map(|a| a * (a - 1) / 2 + (n - a) * (n - a - 1) / 2)
                .collect();
            let min = dims.iter().min().unwrap();
            let argmin: Vec<i64> = (0..=n).filter(|&a| dims[a as usize] == *min).collect();
            let expect: Vec<i64> = (0..=n).filter(|&a| (2 * a - n).abs() <= 1).collect();
            assert_eq!(argmin, expect, "n={n}");
        }
    }
}
