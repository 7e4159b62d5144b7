//! `reproduce`: recompute an embedded table and diff against golden data.
//!
//! Output is deterministic (fixed iteration orders everywhere), so repeated
//! runs are bit-identical.

use clap::ValueEnum;
use serde_json::{json, Value};

use liechar::diffset;
use liechar::kacsearch::{self, ClassicalFamily, KacVector};
use liechar::rootdata::{CartanType, RootDatum, Weight};
use liechar::sl2restrict;
use liechar::torsionchar;

use crate::output::{poly_json, weight_json, Format};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Table {
    /// Character values of G2 at the involution C2, 0 <= k,l <= 10.
    #[value(name = "g2-c2")]
    G2C2,
    /// Factorized adjoint characters for all supported types.
    Adjoint,
    /// Minimal-centralizer classes of the exceptional types for m | h.
    ExceptionalKac,
    /// Dual-side centralizers of principal elements of classical groups.
    ClassicalCentralizers,
    /// The rank-5 pair of weights with identical principal restrictions.
    Sl6Pair,
}

const GOLDEN_G2_C2: &str = include_str!("../golden/g2_c2.json");
const GOLDEN_ADJOINT: &str = include_str!("../golden/adjoint.json");
const GOLDEN_EXCEPTIONAL: &str = include_str!("../golden/exceptional_kac.json");
const GOLDEN_CLASSICAL: &str = include_str!("../golden/classical_centralizers.json");
const GOLDEN_SL6: &str = include_str!("../golden/sl6_pair.json");

pub fn reproduce(table: Table, format: Format) -> Result<(), String> {
    let (name, computed, diffs) = match table {
        Table::G2C2 => ("g2-c2", g2_c2()?, diff_g2(GOLDEN_G2_C2)?),
        Table::Adjoint => (
            "adjoint",
            adjoint()?,
            diff_generic(adjoint()?, GOLDEN_ADJOINT)?,
        ),
        Table::ExceptionalKac => (
            "exceptional-kac",
            exceptional()?,
            diff_exceptional(GOLDEN_EXCEPTIONAL)?,
        ),
        Table::ClassicalCentralizers => (
            "classical-centralizers",
            classical()?,
            diff_generic(classical()?, GOLDEN_CLASSICAL)?,
        ),
        Table::Sl6Pair => (
            "sl6-pair",
            sl6_pair()?,
            diff_generic(sl6_pair()?, GOLDEN_SL6)?,
        ),
    };
    let obj = json!({
        "table": name,
        "rows": computed["rows"],
        "golden_match": diffs.is_empty(),
        "diffs": diffs,
    });
    match format {
        Format::Json => println!("{obj}"),
        Format::Text => {
            let rows = obj["rows"].as_array().map(|a| a.len()).unwrap_or(0);
            println!("table {name}: {rows} rows");
            if obj["golden_match"].as_bool() == Some(true) {
                println!("golden data: MATCH");
            } else {
                println!("golden data: DIFFERS");
                for d in obj["diffs"].as_array().unwrap() {
                    println!("  {}", d.as_str().unwrap());
                }
            }
        }
        Format::Tsv => {
            println!("table\t{name}");
            println!("golden_match\t{}", obj["golden_match"]);
            for d in obj["diffs"].as_array().unwrap() {
                println!("diff\t{}", d.as_str().unwrap());
            }
        }
    }
    Ok(())
}

fn g2_c2() -> Result<Value, String> {
    let datum = RootDatum::build(CartanType::parse("G2").unwrap());
    let mut rows = Vec::new();
    for k in 0..=10i64 {
        for l in 0..=10i64 {
            let lam = Weight(vec![k, l]);
            let direct =
                torsionchar::character_at_cm_direct(&datum, &lam, 2).map_err(|e| e.to_string())?;
            let structural = torsionchar::character_at_cm_structural(&datum, &lam, 2)
                .map_err(|e| e.to_string())?;
            if direct.value != structural.value {
                return Err(format!("route disagreement at ({k},{l})"));
            }
            rows.push(json!([
                k.to_string(),
                l.to_string(),
                direct.value.to_string()
            ]));
        }
    }
    Ok(json!({ "rows": rows }))
}

fn diff_g2(golden: &str) -> Result<Vec<String>, String> {
    diff_generic(g2_c2()?, golden)
}

const ADJOINT_TYPES: [&str; 32] = [
    "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "C2",
    "C3", "C4", "C5", "C6", "C7", "C8", "D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8", "F4", "G2",
];

fn adjoint() -> Result<Value, String> {
    let mut rows = Vec::new();
    for name in ADJOINT_TYPES {
        let datum = RootDatum::build(CartanType::parse(name).unwrap());
        let factorized = sl2restrict::adjoint_factorized(&datum);
        let product =
            sl2restrict::principal_character(&datum, &sl2restrict::highest_root_weight(&datum))
                .map_err(|e| e.to_string())?;
        rows.push(json!({
            "type": name,
            "product_formula_matches": factorized == product,
            "character": poly_json(&factorized),
        }));
    }
    Ok(json!({ "rows": rows }))
}

/// Exceptional table scope: every m | h with 2 <= m < h.
const EXCEPTIONAL_SCOPE: [(&str, &[i64]); 5] = [
    ("G2", &[2, 3]),
    ("F4", &[2, 3, 4, 6]),
    ("E6", &[2, 3, 4, 6]),
    ("E7", &[2, 3, 6, 9]),
    ("E8", &[2, 3, 5, 6, 10, 15]),
];

fn exceptional() -> Result<Value, String> {
    let mut rows = Vec::new();
    for (name, orders) in EXCEPTIONAL_SCOPE {
        let datum = RootDatum::build(CartanType::parse(name).unwrap());
        for &m in orders {
            let classes = kacsearch::minimal_centralizers(&datum, m);
            for c in &classes {
                rows.push(json!({
                    "type": name,
                    "m": m.to_string(),
                    "kac": c.representative.s.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "orbit": c.orbit.iter()
                        .map(|v| v.s.iter().map(|x| x.to_string()).collect::<Vec<_>>())
                        .collect::<Vec<_>>(),
                    "centralizer": c.centralizer.type_string(),
                }));
            }
        }
    }
    Ok(json!({ "rows": rows }))
}

/// The golden table lists one row per conjugacy class as printed in the
/// source table; rows are matched up to diagram symmetry. A count mismatch
/// for some (type, m) is reported as a diff.
fn diff_exceptional(golden: &str) -> Result<Vec<String>, String> {
    let computed = exceptional()?;
    let golden: Value = serde_json::from_str(golden).map_err(|e| e.to_string())?;
    let mut diffs = Vec::new();
    for (name, orders) in EXCEPTIONAL_SCOPE {
        let datum = RootDatum::build(CartanType::parse(name).unwrap());
        for &m in orders {
            let classes = kacsearch::minimal_centralizers(&datum, m);
            let golden_rows: Vec<&Value> = golden["rows"]
                .as_array()
                .unwrap()
                .iter()
                .filter(|r| r["type"] == name && r["m"] == m.to_string())
                .collect();
            for row in &golden_rows {
                let kac: Vec<i64> = row["kac"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|v| v.as_str().unwrap().parse::<i64>().unwrap())
                    .collect();
                let target = KacVector { s: kac.clone(), m };
                match classes.iter().find(|c| c.orbit.contains(&target)) {
                    None => diffs.push(format!("{name} m={m}: golden row {kac:?} not minimal")),
                    Some(c) => {
                        let expect = row["centralizer"].as_str().unwrap();
                        if c.centralizer.type_string() != expect {
                            diffs.push(format!(
                                "{name} m={m}: row {kac:?} type {} != {expect}",
                                c.centralizer.type_string()
                            ));
                        }
                    }
                }
            }
            if classes.len() != golden_rows.len() {
                diffs.push(format!(
                    "{name} m={m}: computed {} classes, golden lists {}",
                    classes.len(),
                    golden_rows.len()
                ));
            }
        }
    }
    let _ = computed;
    Ok(diffs)
}

fn classical() -> Result<Value, String> {
    let mut rows = Vec::new();
    for family in [
        ClassicalFamily::Gl,
        ClassicalFamily::Sp,
        ClassicalFamily::SoOdd,
        ClassicalFamily::SoEven,
    ] {
        for n in 2..=8i64 {
            let h = family.coxeter(n);
            for d in (1..=h).filter(|d| h % d == 0) {
                let class =
                    kacsearch::centralizer_of_principal(family, n, d).map_err(|e| e.to_string())?;
                rows.push(json!({
                    "family": family.name(),
                    "n": n.to_string(),
                    "d": d.to_string(),
                    "centralizer": kacsearch::factors_string(&class.factors),
                    "dimension": class.centralizer_dim.to_string(),
                }));
            }
        }
    }
    Ok(json!({ "rows": rows }))
}

fn sl6_pair() -> Result<Value, String> {
    let pairs = diffset::search_collisions(6, 11);
    let x = diffset::IntegerSet::new(vec![11, 10, 9, 5, 3, 0]);
    let y = diffset::IntegerSet::new(vec![11, 10, 5, 4, 2, 0]);
    let found = pairs
        .iter()
        .find(|p| {
            (diffset::equivalent(&p.x, &x) && diffset::equivalent(&p.y, &y))
                || (diffset::equivalent(&p.x, &y) && diffset::equivalent(&p.y, &x))
        })
        .ok_or("degree-6 pair not found by the search")?;
    let datum = RootDatum::build(CartanType::parse("A5").unwrap());
    let to_weight = |s: &diffset::IntegerSet| -> Weight {
        Weight(s.elements().windows(2).map(|w| w[0] - w[1] - 1).collect())
    };
    let lam = to_weight(&x);
    let mu = to_weight(&y);
    let f_equal = sl2restrict::restriction_fingerprint(&datum, &lam)
        == sl2restrict::restriction_fingerprint(&datum, &mu);
    let dim = sl2restrict::dimension(&datum, &lam).map_err(|e| e.to_string())?;
    let set_json = |s: &diffset::IntegerSet| {
        json!(s
            .elements()
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>())
    };
    Ok(json!({
        "rows": [{
            "x": set_json(&x),
            "y": set_json(&y),
            "found_by_search": json!([set_json(&found.x), set_json(&found.y)]),
            "lambda": weight_json(&lam),
            "mu": weight_json(&mu),
            "fingerprints_equal": f_equal,
            "dimension": dim.to_string(),
            "inequivalent_weights": lam != mu
                && lam != Weight(mu.0.iter().rev().copied().collect()),
        }]
    }))
}

fn diff_generic(computed: Value, golden: &str) -> Result<Vec<String>, String> {
    let golden: Value = serde_json::from_str(golden).map_err(|e| e.to_string())?;
    let a = computed["rows"].as_array().unwrap();
    let b = golden["rows"].as_array().unwrap();
    let mut diffs = Vec::new();
    if a.len() != b.len() {
        diffs.push(format!("row count {} != golden {}", a.len(), b.len()));
    }
    for (i, (x, y)) in a.iter().zip(b.iter()).enumerate() {
        if x != y {
            diffs.push(format!("row {i}: computed {x} != golden {y}"));
        }
    }
    Ok(diffs)
}
