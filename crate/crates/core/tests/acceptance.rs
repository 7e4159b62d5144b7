//! Acceptance suite: one test per criterion, each printing a pass line with
//! its runtime and asserting the stated time budget.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use liechar::diffset;
use liechar::kacsearch::{self, ClassicalFamily, Factor, KacVector};
use liechar::oracle;
use liechar::rootdata::{CartanType, Family, RootDatum, Weight};
use liechar::sl2restrict;
use liechar::torsionchar;

fn datum(name: &str) -> RootDatum {
    RootDatum::build(CartanType::parse(name).unwrap())
}

fn report(criterion: u32, desc: &str, start: Instant, limit_ms: u128) {
    let elapsed = start.elapsed().as_millis();
    println!("criterion {criterion}: PASS ({desc}) [{elapsed} ms, limit {limit_ms} ms]");
    assert!(
        elapsed <= limit_ms,
        "criterion {criterion} exceeded its time budget: {elapsed} ms > {limit_ms} ms"
    );
}

/// Dominant weights with coordinates in `0..=bound`.
fn weight_box(rank: usize, bound: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut coords = vec![0i64; rank];
    loop {
        out.push(Weight(coords.clone()));
        let mut i = 0;
        loop {
            if i == rank {
                return out;
            }
            coords[i] += 1;
            if coords[i] <= bound {
                break;
            }
            coords[i] = 0;
            i += 1;
        }
    }
}

fn divisors(h: i64) -> Vec<i64> {
    (1..=h).filter(|m| h % m == 0).collect()
}

const RANK_LE_4: [&str; 14] = [
    "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "F4", "G2",
];

#[test]
fn criterion_01_g2_closed_form_at_c2() {
    let start = Instant::now();
    let d = datum("G2");
    let formula = |k: i64, l: i64| -> BigInt {
        BigInt::from(match (k % 2, l % 2) {
            (1, 1) => 0,
            (0, 0) => (k + l + 2) * (3 * l + k + 4) / 8,
            (1, 0) => -(k + 1) * (k + 2 * l + 3) / 8,
            _ => -(l + 1) * (3 * l + 2 * k + 5) / 8,
        })
    };
    for k in 0..=10 {
        for l in 0..=10 {
            let lam = Weight(vec![k, l]);
            let expect = formula(k, l);
            let direct = torsionchar::character_at_cm_direct(&d, &lam, 2).unwrap();
            assert_eq!(direct.value, expect, "direct route at ({k},{l})");
            let structural = torsionchar::character_at_cm_structural(&d, &lam, 2).unwrap();
            assert_eq!(structural.value, expect, "structural route at ({k},{l})");
        }
    }
    report(
        1,
        "G2 character at C2 matches the closed form on 121 weights",
        start,
        5_000,
    );
}

#[test]
fn criterion_02_adjoint_factorizations() {
    let start = Instant::now();
    let mut types: Vec<String> = Vec::new();
    for n in 1..=8 {
        types.push(format!("A{n}"));
    }
    for n in 2..=8 {
        types.push(format!("B{n}"));
        types.push(format!("C{n}"));
    }
    for n in 4..=8 {
        types.push(format!("D{n}"));
    }
    types.extend(["E6", "E7", "E8", "F4", "G2"].map(String::from));
    for name in &types {
        let d = datum(name);
        let lhs = sl2restrict::adjoint_factorized(&d);
        let rhs =
            sl2restrict::principal_character(&d, &sl2restrict::highest_root_weight(&d)).unwrap();
        assert_eq!(lhs, rhs, "{name}");
    }
    report(
        2,
        "adjoint characters match their factorized forms on 32 types",
        start,
        30_000,
    );
}

#[test]
fn criterion_03_kostant_coxeter_values() {
    let start = Instant::now();
    let mut cases = 0u64;
    for name in RANK_LE_4 {
        let d = datum(name);
        let h = d.coxeter_number();
        for lam in weight_box(d.rank(), 4) {
            let (value, parity) = torsionchar::kostant_coxeter_value(&d, &lam).unwrap();
            assert!(value.abs() <= BigInt::one(), "{name} {lam:?}");
            let direct = torsionchar::character_at_cm_direct(&d, &lam, h).unwrap();
            assert_eq!(value, direct.value, "{name} {lam:?}");
            match parity {
                Some(p) => assert_eq!(BigInt::from(p), value, "{name} {lam:?}"),
                None => assert!(value.is_zero(), "{name} {lam:?}"),
            }
            cases += 1;
        }
    }
    report(
        3,
        &format!("Coxeter-class values in -1..=1 with the sign law, {cases} cases"),
        start,
        60_000,
    );
}

/// Is the zero ⇔ witness-absent equivalence asserted for this type and m?
/// Outside these cases only the one-sided implications are guaranteed.
fn nonvanishing_iff_applies(ct: CartanType, m: i64) -> bool {
    match ct.family {
        Family::D => {
            let n = (ct.rank - 1) as i64;
            m % 2 == 0 && ((2 * n / m) % 2 == 1)
        }
        Family::E => !(ct.rank == 6 && m == 4) && !(ct.rank == 7 && m == 9),
        _ => true,
    }
}

#[test]
fn criterion_04_route_agreement() {
    let start = Instant::now();
    let mut cases = 0u64;
    for name in RANK_LE_4 {
        let d = datum(name);
        let h = d.coxeter_number();
        for lam in weight_box(d.rank(), 3) {
            let theta = sl2restrict::principal_character(&d, &lam).unwrap();
            for &m in &divisors(h) {
                let direct = theta.eval_at_root(2 * m as u32).as_integer().unwrap();
                let structural = torsionchar::character_at_cm_structural(&d, &lam, m).unwrap();
                assert_eq!(structural.value, direct, "{name} {lam:?} m={m}");
                let witness = torsionchar::conjugacy_witness(&d, &lam, m).unwrap();
                let (dim_lambda, dim_rho) = torsionchar::centralizer_dims_dual(&d, &lam, m);
                // unconditional: zero ⇔ centralizer-dimension gap
                assert_eq!(
                    direct.is_zero(),
                    dim_lambda > dim_rho,
                    "{name} {lam:?} m={m}"
                );
                // unconditional: witness ⇒ nonzero
                if witness.is_some() {
                    assert!(!direct.is_zero(), "{name} {lam:?} m={m}");
                }
                // under the stated conditions: witness-absent ⇒ zero
                if nonvanishing_iff_applies(d.cartan_type(), m) && witness.is_none() {
                    assert!(direct.is_zero(), "{name} {lam:?} m={m}");
                }
                cases += 1;
            }
        }
    }
    report(
        4,
        &format!("structural = direct with the zero criterion, {cases} cases"),
        start,
        120_000,
    );
}

struct GoldenRow {
    ty: &'static str,
    m: i64,
    kac: &'static [i64],
    centralizer: &'static str,
}

/// Minimal-centralizer table for the exceptional types, per order m | h.
/// The G2 m=2 entry is written in the same Bourbaki vertex order as the
/// G2 m=3 entries (marks 1,3,2).
const GOLDEN_EXCEPTIONAL: &[GoldenRow] = &[
    GoldenRow {
        ty: "G2",
        m: 2,
        kac: &[0, 0, 1],
        centralizer: "2A1",
    },
    GoldenRow {
        ty: "G2",
        m: 3,
        kac: &[1, 0, 1],
        centralizer: "A1",
    },
    GoldenRow {
        ty: "F4",
        m: 2,
        kac: &[0, 1, 0, 0, 0],
        centralizer: "C3+A1",
    },
    GoldenRow {
        ty: "F4",
        m: 3,
        kac: &[0, 0, 1, 0, 0],
        centralizer: "2A2",
    },
    GoldenRow {
        ty: "F4",
        m: 4,
        kac: &[1, 0, 1, 0, 0],
        centralizer: "A2+A1",
    },
    GoldenRow {
        ty: "F4",
        m: 6,
        kac: &[1, 0, 1, 0, 1],
        centralizer: "2A1",
    },
    GoldenRow {
        ty: "E6",
        m: 2,
        kac: &[0, 0, 1, 0, 0, 0, 0],
        centralizer: "A5+A1",
    },
    GoldenRow {
        ty: "E6",
        m: 3,
        kac: &[0, 0, 0, 0, 1, 0, 0],
        centralizer: "3A2",
    },
    GoldenRow {
        ty: "E6",
        m: 4,
        kac: &[0, 1, 0, 0, 1, 0, 0],
        centralizer: "2A2+A1",
    },
    GoldenRow {
        ty: "E6",
        m: 4,
        kac: &[1, 1, 0, 0, 0, 1, 0],
        centralizer: "A3+A1",
    },
    GoldenRow {
        ty: "E6",
        m: 4,
        kac: &[1, 0, 0, 1, 0, 0, 1],
        centralizer: "A3+A1",
    },
    GoldenRow {
        ty: "E6",
        m: 6,
        kac: &[1, 1, 0, 0, 1, 0, 1],
        centralizer: "3A1",
    },
    GoldenRow {
        ty: "E7",
        m: 2,
        kac: &[0, 0, 1, 0, 0, 0, 0, 0],
        centralizer: "A7",
    },
    GoldenRow {
        ty: "E7",
        m: 3,
        kac: &[0, 0, 0, 1, 0, 0, 0, 0],
        centralizer: "A5+A2",
    },
    GoldenRow {
        ty: "E7",
        m: 6,
        kac: &[1, 0, 0, 0, 1, 0, 0, 1],
        centralizer: "2A2+A1",
    },
    GoldenRow {
        ty: "E7",
        m: 9,
        kac: &[1, 0, 1, 1, 0, 0, 1, 1],
        centralizer: "A2+A1",
    },
    GoldenRow {
        ty: "E7",
        m: 9,
        kac: &[0, 1, 0, 0, 1, 0, 1, 1],
        centralizer: "4A1",
    },
    GoldenRow {
        ty: "E8",
        m: 2,
        kac: &[0, 1, 0, 0, 0, 0, 0, 0, 0],
        centralizer: "D8",
    },
    GoldenRow {
        ty: "E8",
        m: 3,
        kac: &[0, 0, 1, 0, 0, 0, 0, 0, 0],
        centralizer: "A8",
    },
    GoldenRow {
        ty: "E8",
        m: 5,
        kac: &[0, 0, 0, 0, 0, 1, 0, 0, 0],
        centralizer: "2A4",
    },
    GoldenRow {
        ty: "E8",
        m: 6,
        kac: &[1, 0, 0, 0, 0, 1, 0, 0, 0],
        centralizer: "A4+A3",
    },
    GoldenRow {
        ty: "E8",
        m: 10,
        kac: &[1, 0, 0, 0, 1, 0, 0, 1, 0],
        centralizer: "2A2+2A1",
    },
    GoldenRow {
        ty: "E8",
        m: 15,
        kac: &[1, 1, 0, 0, 1, 0, 1, 0, 1],
        centralizer: "4A1",
    },
];

#[test]
fn criterion_05_exceptional_kac_table() {
    let start = Instant::now();
    let mut problems: Vec<String> = Vec::new();
    let pairs: Vec<(&str, i64)> = {
        let mut v: Vec<(&str, i64)> = GOLDEN_EXCEPTIONAL.iter().map(|r| (r.ty, r.m)).collect();
        v.dedup();
        v
    };
    for (ty, m) in pairs {
        let d = datum(ty);
        let classes = kacsearch::minimal_centralizers(&d, m);
        let rows: Vec<&GoldenRow> = GOLDEN_EXCEPTIONAL
            .iter()
            .filter(|r| r.ty == ty && r.m == m)
            .collect();
        // every golden row appears among the classes, up to Ω
        for row in &rows {
            let target = KacVector {
                s: row.kac.to_vec(),
                m,
            };
            let hit = classes.iter().find(|c| c.orbit.contains(&target));
            match hit {
                None => problems.push(format!("{ty} m={m}: row {:?} not minimal", row.kac)),
                Some(c) => {
                    if c.centralizer.type_string() != row.centralizer {
                        problems.push(format!(
                            "{ty} m={m}: row {:?} has type {} (expected {})",
                            row.kac,
                            c.centralizer.type_string(),
                            row.centralizer
                        ));
                    }
                }
            }
        }
        if classes.len() != rows.len() {
            problems.push(format!(
                "{ty} m={m}: {} minimal classes, table lists {} rows ({:?})",
                classes.len(),
                rows.len(),
                classes
                    .iter()
                    .map(|c| c.representative.s.clone())
                    .collect::<Vec<_>>()
            ));
        }
    }
    assert!(
        problems.is_empty(),
        "exceptional table mismatches:\n{}",
        problems.join("\n")
    );
    report(
        5,
        "exceptional minimal-centralizer table reproduced",
        start,
        10_000,
    );
}

#[test]
fn criterion_06_classical_classification() {
    let start = Instant::now();
    // GL: unique minimum = principal class when n ≡ -1, 0, 1 mod d
    for n in 2..=12i64 {
        for d in 2..=n {
            let r = n % d;
            if !(r == 0 || r == 1 || r == d - 1) {
                continue;
            }
            let classes =
                kacsearch::classical_minimal_centralizers(ClassicalFamily::Gl, n, d).unwrap();
            assert_eq!(classes.len(), 1, "GL n={n} d={d}: {classes:?}");
            assert!(
                kacsearch::contains_principal(&classes, ClassicalFamily::Gl, n, d),
                "GL n={n} d={d}"
            );
        }
    }
    // Sp and SO-odd: unique for every divisor of the Coxeter number
    for n in 2..=8i64 {
        for &d in &divisors(2 * n) {
            for family in [ClassicalFamily::Sp, ClassicalFamily::SoOdd] {
                let classes = kacsearch::classical_minimal_centralizers(family, n, d).unwrap();
                assert_eq!(
                    classes.len(),
                    1,
                    "{} n={n} d={d}: {classes:?}",
                    family.name()
                );
                assert!(
                    kacsearch::contains_principal(&classes, family, n, d),
                    "{} n={n} d={d}",
                    family.name()
                );
            }
        }
    }
    // SO-even: the principal class is always among the minima, the
    // companion classes of the two exceptional cases appear with equal
    // centralizer dimension, and outside those cases the minimum is unique.
    // (For d odd >= 5, and d even >= 8 with 2n/d even, the companion
    // centralizer shape is realized by more than one class: the oversized
    // eigenvalue pair can sit at inequivalent positions.)
    for n in 2..=8i64 {
        for &d in &divisors(2 * n) {
            let classes =
                kacsearch::classical_minimal_centralizers(ClassicalFamily::SoEven, n, d).unwrap();
            let dprime = 2 * n / d;
            assert!(
                kacsearch::contains_principal(&classes, ClassicalFamily::SoEven, n, d),
                "so-even n={n} d={d}: {classes:?}"
            );
            let principal_dim = classes.iter().map(|c| c.centralizer_dim).next().unwrap();
            assert!(
                classes.iter().all(|c| c.centralizer_dim == principal_dim),
                "so-even n={n} d={d}: unequal minimal dimensions"
            );
            let companion: Option<Vec<Factor>> = if d % 2 == 1 && d >= 3 {
                // Lemma `odd`: SO_{2m} x GL_{2m}^{(d-3)/2} x GL_{2m+1}, 2m = 2n/d
                let mut expect = vec![Factor::So(dprime), Factor::Gl(dprime + 1)];
                expect.extend((0..(d - 3) / 2).map(|_| Factor::Gl(dprime)));
                Some(expect)
            } else if d % 2 == 0 && d >= 4 && dprime % 2 == 0 {
                // Lemma `even`: SO_{d'} x SO_{d'} x GL_{d'}^{d/2-2} x GL_{d'+1}
                let mut expect = vec![
                    Factor::So(dprime),
                    Factor::So(dprime),
                    Factor::Gl(dprime + 1),
                ];
                expect.extend((0..(d / 2 - 2)).map(|_| Factor::Gl(dprime)));
                Some(expect)
            } else {
                None
            };
            match companion {
                Some(mut expect) => {
                    expect.sort();
                    expect.reverse();
                    expect.retain(|f| f.dimension() > 0 || matches!(f, Factor::Gl(_)));
                    assert!(
                        classes.len() >= 2,
                        "so-even n={n} d={d}: expected a companion class: {classes:?}"
                    );
                    assert!(
                        classes.iter().any(|c| c.factors == expect),
                        "so-even n={n} d={d}: no class with {expect:?} in {classes:?}"
                    );
                }
                None => {
                    assert_eq!(classes.len(), 1, "so-even n={n} d={d}: {classes:?}");
                }
            }
        }
    }
    report(
        6,
        "classical minimal classes and the even-orthogonal pairs",
        start,
        60_000,
    );
}

/// Expected table of principal centralizers on the dual side.
fn expected_principal_factors(family: ClassicalFamily, n: i64, d: i64) -> Vec<Factor> {
    let a = 2 * n / d;
    let mut f: Vec<Factor> = match family {
        ClassicalFamily::Gl => {
            let a = n / d;
            (0..d).map(|_| Factor::Gl(a)).collect()
        }
        ClassicalFamily::SoOdd => {
            if d % 2 == 0 {
                (0..d / 2).map(|_| Factor::Gl(a)).collect()
            } else {
                let mut v = vec![Factor::So(a + 1)];
                v.extend((0..(d - 1) / 2).map(|_| Factor::Gl(a)));
                v
            }
        }
        ClassicalFamily::Sp => {
            if d % 2 == 0 {
                let mut v: Vec<Factor> = (0..(d - 2) / 2).map(|_| Factor::Gl(a)).collect();
                if a % 2 == 0 {
                    v.push(Factor::So(a));
                    v.push(Factor::Sp(a));
                } else {
                    v.push(Factor::So(a + 1));
                    v.push(Factor::Sp(a - 1));
                }
                v
            } else {
                let mut v: Vec<Factor> = (0..(d - 1) / 2).map(|_| Factor::Gl(a)).collect();
                v.push(Factor::Sp(a));
                v
            }
        }
        ClassicalFamily::SoEven => {
            if d % 2 == 1 {
                let mut v = vec![Factor::So(a + 2)];
                v.extend((0..(d - 1) / 2).map(|_| Factor::Gl(a)));
                v
            } else if a % 2 == 0 {
                let mut v = vec![Factor::So(a), Factor::So(a + 2)];
                v.extend((0..(d - 2) / 2).map(|_| Factor::Gl(a)));
                v
            } else {
                let mut v = vec![Factor::So(a + 1), Factor::So(a + 1)];
                v.extend((0..(d - 2) / 2).map(|_| Factor::Gl(a)));
                v
            }
        }
    };
    f.sort();
    f.reverse();
    f.retain(|x| x.dimension() > 0 || matches!(x, Factor::Gl(_)));
    f
}

#[test]
fn criterion_07_principal_centralizer_table() {
    let start = Instant::now();
    for n in 2..=8i64 {
        for family in [
            ClassicalFamily::Gl,
            ClassicalFamily::Sp,
            ClassicalFamily::SoOdd,
            ClassicalFamily::SoEven,
        ] {
            let h = family.coxeter(n);
            for &d in &divisors(h) {
                let got = kacsearch::centralizer_of_principal(family, n, d).unwrap();
                let expect = expected_principal_factors(family, n, d);
                assert_eq!(got.factors, expect, "{} n={n} d={d}", family.name());
            }
        }
    }
    report(
        7,
        "principal centralizer shapes match the table for n=2..=8",
        start,
        5_000,
    );
}

#[test]
fn criterion_08_dm_is_one_for_a_b_and_odd_c() {
    let start = Instant::now();
    for n in 1..=8 {
        let d = datum(&format!("A{n}"));
        for &m in &divisors(d.coxeter_number()) {
            assert_eq!(
                torsionchar::d_constant(&d, m).unwrap(),
                BigInt::one(),
                "A{n} m={m}"
            );
        }
    }
    for n in 2..=8 {
        let d = datum(&format!("B{n}"));
        for &m in &divisors(d.coxeter_number()) {
            assert_eq!(
                torsionchar::d_constant(&d, m).unwrap(),
                BigInt::one(),
                "B{n} m={m}"
            );
        }
        let d = datum(&format!("C{n}"));
        for &m in &divisors(d.coxeter_number()) {
            if m % 2 == 1 {
                assert_eq!(
                    torsionchar::d_constant(&d, m).unwrap(),
                    BigInt::one(),
                    "C{n} m={m}"
                );
            }
        }
    }
    report(
        8,
        "d_m = 1 for A and B types and odd orders in type C",
        start,
        5_000,
    );
}

#[test]
fn criterion_09_oracle_equivalence() {
    let start = Instant::now();
    let mut cases = 0u64;
    for name in ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D3", "G2"] {
        let d = datum(name);
        for lam in weight_box(d.rank(), 3) {
            let fast = sl2restrict::principal_character(&d, &lam).unwrap();
            let slow = oracle::weyl_sum_character(&d, &lam).unwrap();
            assert_eq!(fast, slow, "{name} {lam:?}");
            cases += 1;
        }
    }
    report(
        9,
        &format!("Weyl-sum oracle agrees with the product formula, {cases} cases"),
        start,
        60_000,
    );
}

#[test]
fn criterion_10_minimal_centralizer_sweep() {
    let start = Instant::now();
    for name in RANK_LE_4 {
        let d = datum(name);
        for m in 1..=d.coxeter_number() {
            let best = oracle::exhaustive_min_centralizer(&d, m);
            let (_, dim_rho) = torsionchar::centralizer_dims_dual(&d, &Weight::zero(d.rank()), m);
            assert_eq!(best, dim_rho, "{name} m={m}");
        }
    }
    report(
        10,
        "principal torsion points have minimal centralizers, rank <= 4",
        start,
        60_000,
    );
}

#[test]
fn criterion_11_diffset_and_a5_fingerprints() {
    let start = Instant::now();
    let pairs = diffset::search_collisions(6, 11);
    let x = diffset::IntegerSet::new(vec![11, 10, 9, 5, 3, 0]);
    let y = diffset::IntegerSet::new(vec![11, 10, 5, 4, 2, 0]);
    let found = pairs.iter().find(|p| {
        (diffset::equivalent(&p.x, &x) && diffset::equivalent(&p.y, &y))
            || (diffset::equivalent(&p.x, &y) && diffset::equivalent(&p.y, &x))
    });
    assert!(found.is_some(), "degree-6 pair not found: {pairs:?}");
    for n in 2..=5 {
        assert!(diffset::search_collisions(n, 12).is_empty(), "n = {n}");
    }
    // reconstruct the A5 highest weights: gaps of λ+ρ minus one
    let to_weight = |s: &diffset::IntegerSet| -> Weight {
        let e = s.elements();
        Weight(e.windows(2).map(|w| w[0] - w[1] - 1).collect())
    };
    let d = datum("A5");
    let lam = to_weight(&x);
    let mu = to_weight(&y);
    assert_eq!(lam, Weight(vec![0, 0, 3, 1, 2]));
    assert_eq!(mu, Weight(vec![0, 4, 0, 1, 1]));
    let f1 = sl2restrict::restriction_fingerprint(&d, &lam).unwrap();
    let f2 = sl2restrict::restriction_fingerprint(&d, &mu).unwrap();
    assert_eq!(f1, f2);
    let flip = Weight(mu.0.iter().rev().copied().collect());
    assert_ne!(lam, mu);
    assert_ne!(lam, flip);
    report(
        11,
        "difference-set collision search and the A5 fingerprint pair",
        start,
        120_000,
    );
}
