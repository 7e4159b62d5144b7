//! `liechar` — exact character values of simple complex Lie groups at
//! torsion elements, root-system utilities, and conjugacy-class searches.
//!
//! Every subcommand supports `--format {text,json,tsv}`. JSON output renders
//! all integers as decimal strings so consumers never truncate. Exit codes:
//! 0 success, 1 domain error (machine-readable error object on stdout),
//! 2 usage error.

mod output;
mod tables;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use liechar::diffset;
use liechar::kacsearch::{self, ClassicalFamily};
use liechar::rootdata::{CartanType, RootDatum, Weight};
use liechar::sl2restrict;
use liechar::torsionchar::{self, Route};

use output::{fail, poly_json, poly_text, weight_json, Format};

#[derive(Parser)]
#[command(
    name = "liechar",
    version,
    about = "Exact character theory at torsion elements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    /// Fundamental-weight coordinates (default).
    Omega,
    /// Simple-root coordinates, converted through the Cartan matrix.
    Root,
}

#[derive(Args)]
struct WeightArgs {
    /// Cartan type, e.g. A3, D5, G2.
    #[arg(long = "type")]
    cartan_type: String,
    /// Comma-separated weight coordinates, e.g. 1,0,2.
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
    /// Coordinate basis of --weight.
    #[arg(long, value_enum, default_value = "omega")]
    basis: Basis,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Direct,
    Structural,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Character of the principal SL(2) restriction as a Laurent polynomial.
    CharSl2 {
        #[command(flatten)]
        weight: WeightArgs,
        /// Also decompose into SL(2) strings.
        #[arg(long)]
        decompose: bool,
        /// Also print the dimension.
        #[arg(long)]
        dimension: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Character value at the principal torsion element C_m.
    CharAt {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        m: i64,
        #[arg(long, value_enum, default_value = "both")]
        route: RouteArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Verify the closed-form adjoint factorization for one type.
    AdjointCheck {
        #[arg(long = "type")]
        cartan_type: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Character value at the Coxeter class, with the witness length parity.
    Kostant {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Torsion classes via extended-diagram coordinates.
    Kac {
        #[command(subcommand)]
        action: KacAction,
    },
    /// Classical-group torsion classes via eigenvalue patterns.
    Classical {
        #[command(subcommand)]
        action: ClassicalAction,
    },
    /// Difference multisets of integer sets.
    Diffset {
        #[command(subcommand)]
        action: DiffsetAction,
    },
    /// Recompute an embedded table and diff against the golden data.
    Reproduce {
        #[arg(long)]
        table: tables::Table,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum KacAction {
    /// All coordinate tuples of order-m classes, lexicographic.
    Enumerate {
        #[arg(long = "type")]
        cartan_type: String,
        #[arg(long)]
        m: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Classes of minimal centralizer dimension, up to diagram symmetry.
    Minimal {
        #[arg(long = "type")]
        cartan_type: String,
        #[arg(long)]
        m: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Diagram-symmetry orbits of all order-m tuples.
    Orbits {
        #[arg(long = "type")]
        cartan_type: String,
        #[arg(long)]
        m: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum ClassicalAction {
    /// All minimal-centralizer classes of adjoint order d.
    Minimal {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        d: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The dual-side centralizer shape of the principal order-d element.
    Principal {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        d: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum DiffsetAction {
    /// Exhaustive collision search over canonical n-element sets.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bound: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compare the difference multisets of two explicit sets.
    Check {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn parse_type(s: &str) -> Result<RootDatum, String> {
    CartanType::parse(s)
        .map(RootDatum::build)
        .map_err(|e| e.to_string())
}

fn parse_csv(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| format!("bad integer `{t}`"))
        })
        .collect()
}

fn parse_weight(datum: &RootDatum, args: &WeightArgs) -> Result<Weight, String> {
    let coords = parse_csv(&args.weight)?;
    if coords.len() != datum.rank() {
        return Err(format!(
            "expected {} coordinates for {}, got {}",
            datum.rank(),
            datum.cartan_type(),
            coords.len()
        ));
    }
    Ok(match args.basis {
        Basis::Omega => Weight(coords),
        Basis::Root => datum.root_to_weight(&coords),
    })
}

fn parse_family(s: &str) -> Result<ClassicalFamily, String> {
    ClassicalFamily::parse(s)
        .ok_or_else(|| format!("unknown family `{s}` (expected gl, sp, so-odd, so-even)"))
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(()) => 0,
        Err(msg) => {
            fail(&msg);
            1
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<(), String> {
    match cli.command {
        Command::CharSl2 {
            weight,
            decompose,
            dimension,
            format,
        } => {
            let datum = parse_type(&weight.cartan_type)?;
            let lam = parse_weight(&datum, &weight)?;
            let theta =
                sl2restrict::principal_character(&datum, &lam).map_err(|e| e.to_string())?;
            let mut obj = json!({
                "type": datum.cartan_type().to_string(),
                "weight": weight_json(&lam),
                "character": poly_json(&theta),
            });
            if dimension {
                obj["dimension"] = json!(sl2restrict::dimension(&datum, &lam)
                    .map_err(|e| e.to_string())?
                    .to_string());
            }
            if decompose {
                let dec = sl2restrict::decompose_sl2(&theta).map_err(|e| e.to_string())?;
                let strings: Vec<_> = dec
                    .multiplicities
                    .iter()
                    .map(|(d, m)| json!([d.to_string(), m.to_string()]))
                    .collect();
                obj["decomposition"] = json!(strings);
            }
            match format {
                Format::Json => println!("{obj}"),
                Format::Text => {
                    println!("theta({}) = {}", args_weight_text(&lam), poly_text(&theta));
                    if let Some(d) = obj.get("dimension") {
                        println!("dimension = {}", d.as_str().unwrap());
                    }
                    if let Some(dec) = obj.get("decomposition") {
                        let parts: Vec<String> = dec
                            .as_array()
                            .unwrap()
                            .iter()
                            .map(|p| {
                                let d = p[0].as_str().unwrap();
                                let m = p[1].as_str().unwrap();
                                if m == "1" {
                                    format!("[{d}]")
                                } else {
                                    format!("{m}x[{d}]")
                                }
                            })
                            .collect();
                        println!("strings: {}", parts.join(" + "));
                    }
                }
                Format::Tsv => {
                    for (e, c) in theta.terms() {
                        println!("{e}\t{c}");
                    }
                }
            }
            Ok(())
        }
        Command::CharAt {
            weight,
            m,
            route,
            format,
        } => {
            let datum = parse_type(&weight.cartan_type)?;
            let lam = parse_weight(&datum, &weight)?;
            let mut obj = json!({
                "type": datum.cartan_type().to_string(),
                "weight": weight_json(&lam),
                "m": m.to_string(),
            });
            let direct = if route != RouteArg::Structural {
                let v = torsionchar::character_at_cm_direct(&datum, &lam, m)
                    .map_err(|e| e.to_string())?;
                obj["direct"] = json!(v.value.to_string());
                Some(v.value)
            } else {
                None
            };
            let structural = if route != RouteArg::Direct {
                match torsionchar::character_at_cm_structural(&datum, &lam, m) {
                    Ok(v) => {
                        let mut s = json!({ "value": v.value.to_string() });
                        if let Some(det) = &v.detail {
                            s["sign"] = json!(det.sign.to_string());
                            s["central_sign"] = json!(det.central_sign.to_string());
                            s["d_lambda"] = json!(det.d_lambda.to_string());
                            s["d_m"] = json!(det.d_m.to_string());
                            s["mu"] = weight_json(&det.mu);
                            s["witness_word"] = json!(det
                                .witness_word
                                .iter()
                                .map(|i| (i + 1).to_string())
                                .collect::<Vec<_>>());
                        } else {
                            s["witness"] = json!("none");
                        }
                        debug_assert_eq!(v.route, Route::Structural);
                        obj["structural"] = s;
                        Some(v.value)
                    }
                    Err(e) => {
                        if route == RouteArg::Structural {
                            return Err(e.to_string());
                        }
                        obj["structural"] = json!({ "error": e.to_string() });
                        None
                    }
                }
            } else {
                None
            };
            if let (Some(a), Some(b)) = (&direct, &structural) {
                obj["agree"] = json!(a == b);
            }
            match format {
                Format::Json => println!("{obj}"),
                Format::Text => {
                    if let Some(v) = &direct {
                        println!("direct     = {v}");
                    }
                    match (&obj["structural"], &structural) {
                        (s, Some(v)) if s.get("sign").is_some() => println!(
                            "structural = {v}  (sign {} central {} d_lambda {} d_m {})",
                            s["sign"].as_str().unwrap(),
                            s["central_sign"].as_str().unwrap(),
                            s["d_lambda"].as_str().unwrap(),
                            s["d_m"].as_str().unwrap()
                        ),
                        (_, Some(v)) => println!("structural = {v}  (no witness)"),
                        (s, None) if s.is_object() => {
                            println!("structural unavailable: {}", s["error"].as_str().unwrap())
                        }
                        _ => {}
                    }
                    if let Some(a) = obj.get("agree") {
                        println!("agree = {a}");
                    }
                }
                Format::Tsv => {
                    let d = direct.map(|v| v.to_string()).unwrap_or_default();
                    let s = structural.map(|v| v.to_string()).unwrap_or_default();
                    println!("{m}\t{d}\t{s}");
                }
            }
            Ok(())
        }
        Command::AdjointCheck {
            cartan_type,
            format,
        } => {
            let datum = parse_type(&cartan_type)?;
            let factorized = sl2restrict::adjoint_factorized(&datum);
            let product =
                sl2restrict::principal_character(&datum, &sl2restrict::highest_root_weight(&datum))
                    .map_err(|e| e.to_string())?;
            let ok = factorized == product;
            let obj = json!({
                "type": datum.cartan_type().to_string(),
                "match": ok,
                "character": poly_json(&factorized),
            });
            match format {
                Format::Json => println!("{obj}"),
                Format::Text => println!(
                    "{}: {}",
                    datum.cartan_type(),
                    if ok {
                        "product formula matches the factorized form"
                    } else {
                        "MISMATCH"
                    }
                ),
                Format::Tsv => println!("{}\t{}", datum.cartan_type(), ok),
            }
            if ok {
                Ok(())
            } else {
                Err(format!(
                    "adjoint factorization mismatch for {}",
                    datum.cartan_type()
                ))
            }
        }
        Command::Kostant { weight, format } => {
            let datum = parse_type(&weight.cartan_type)?;
            let lam = parse_weight(&datum, &weight)?;
            let (value, parity) =
                torsionchar::kostant_coxeter_value(&datum, &lam).map_err(|e| e.to_string())?;
            let parity_str = match parity {
                None => json!(null),
                Some(1) => json!("even"),
                Some(_) => json!("odd"),
            };
            let obj = json!({
                "type": datum.cartan_type().to_string(),
                "weight": weight_json(&lam),
                "h": datum.coxeter_number().to_string(),
                "value": value.to_string(),
                "witness_length_parity": parity_str,
            });
            match format {
                Format::Json => println!("{obj}"),
                Format::Text => match parity {
                    Some(p) => println!(
                        "value at the Coxeter class = {value} (witness length {})",
                        if p == 1 { "even" } else { "odd" }
                    ),
                    None => println!("value at the Coxeter class = 0"),
                },
                Format::Tsv => println!(
                    "{value}\t{}",
                    parity.map(|p| p.to_string()).unwrap_or_default()
                ),
            }
            Ok(())
        }
        Command::Kac { action } => kac_command(action),
        Command::Classical { action } => classical_command(action),
        Command::Diffset { action } => diffset_command(action),
        Command::Reproduce { table, format } => tables::reproduce(table, format),
    }
}

fn args_weight_text(w: &Weight) -> String {
    let parts: Vec<String> = w.0.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(","))
}

fn kac_vectors_json(vectors: &[kacsearch::KacVector]) -> serde_json::Value {
    json!(vectors
        .iter()
        .map(|v| v.s.iter().map(|x| x.to_string()).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn kac_command(action: KacAction) -> Result<(), String> {
    match action {
        KacAction::Enumerate {
            cartan_type,
            m,
            format,
        } => {
            let datum = parse_type(&cartan_type)?;
            if m < 1 {
                return Err("m must be at least 1".into());
            }
            let vectors = kacsearch::enumerate_kac(&datum, m);
            let obj = json!({
                "type": datum.cartan_type().to_string(),
                "m": m.to_string(),
                "vectors": kac_vectors_json(&vectors),
            });
            match format {
                Format::Json => println!("{obj}"),
                Format::Text => {
                    println!("{} tuples of order {m}:", vectors.len());
                    for v in &vectors {
                        println!("  {:?}", v.s);
                    }
                }
                Format::Tsv => {
                    for v in &vectors {
                        let coords: Vec<String> = v.s.iter().map(|x| x.to_string()).collect();
                        println!("{}", coords.join("\t"));
                    }
                }
            }
            Ok(())
        }
        KacAction::Minimal {
            cartan_type,
            m,
            format,
        } => {
            let datum = parse_type(&cartan_type)?;
            if m < 1 {
                return Err("m must be at least 1".into());
            }
            let classes = kacsearch::minimal_centralizers(&datum, m);
            let obj = json!({
                "type": datum.cartan_type().to_string(),
                "m": m.to_string(),
                "classes": classes.iter().map(|c| json!({
                    "representative": c.representative.s.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "orbit": kac_vectors_json(&c.orbit),
                    "centralizer_type": c.centralizer.type_string(),
                    "root_count": c.centralizer.root_count.to_string(),
                    "dimension": c.centralizer.dimension.to_string(),
                })).collect::<Vec<_>>(),
            });
            match format {
                Format::Json => println!("{obj}"),
                Format::Text => {
                    println!("{} minimal class(es) of order {m}:", classes.len());
                    for c in &classes {
                        println!(
                            "  {:?}  centralizer {}  (d(s) = {}, dim = {})",
                            c.representative.s,
                            c.centralizer.type_string(),
                            c.centralizer.root_count,
                            c.centralizer.dimension
                        );
                    }
                }
                Format::Tsv => {
                    for c in &classes {
                        let coords: Vec<String> =
                            c.representative.s.iter().map(|x| x.to_string()).collect();
                        println!(
                            "{}\t{}\t{}",
                            coords.join(","),
                            c.centralizer.type_string(),
                            c.centralizer.dimension
                        );
                    }
                }
            }
            Ok(())
        }
        KacAction::Orbits {
            cartan_type,
            m,
            format,
        } => {
            let datum = parse_type(&cartan_type)?;
            if m < 1 {
                return Err("m must be at least 1".into());
            }
            let vectors = kacsearch::enumerate_kac(&datum, m);
            let orbits = kacsearch::omega_orbits(&datum, &vectors);
            let obj = json!({
                "type": datum.cartan_type().to_string(),
                "m": m.to_string(),
                "orbits": orbits.iter().map(|o| kac_vectors_json(o)).collect::<Vec<_>>(),
            });
            match format {
                Format::Json => println!("{obj}"),
                Format::Text => {
                    println!("{} orbit(s):", orbits.len());
                    for o in &orbits {
                        let parts: Vec<String> = o.iter().map(|v| format!("{:?}", v.s)).collect();
                        println!("  {}", parts.join(" ~ "));
                    }
                }
                Format::Tsv => {
                    for (i, o) in orbits.iter().enumerate() {
                        for v in o {
                            let coords: Vec<String> = v.s.iter().map(|x| x.to_string()).collect();
                            println!("{i}\t{}", coords.join(","));
                        }
                    }
                }
            }
            Ok(())
        }
    }
}

fn classical_class_json(c: &kacsearch::ClassicalClass) -> serde_json::Value {
    json!({
        "eigenvalues": c.eigenvalues.iter()
            .map(|(e, m)| json!([e.to_string(), m.to_string()]))
            .collect::<Vec<_>>(),
        "modulus": c.modulus.to_string(),
        "factors": c.factors.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "centralizer": kacsearch::factors_string(&c.factors),
        "dimension": c.centralizer_dim.to_string(),
    })
}

fn classical_command(action: ClassicalAction) -> Result<(), String> {
    match action {
        ClassicalAction::Minimal {
            family,
            n,
            d,
            format,
        } => {
            let fam = parse_family(&family)?;
            let classes =
                kacsearch::classical_minimal_centralizers(fam, n, d).map_err(|e| e.to_string())?;
            let obj = json!({
                "family": fam.name(),
                "n": n.to_string(),
                "d": d.to_string(),
                "classes": classes.iter().map(classical_class_json).collect::<Vec<_>>(),
            });
            match format {
                Format::Json => println!("{obj}"),
                Format::Text => {
                    println!("{} minimal class(es):", classes.len());
                    for c in &classes {
                        println!(
                            "  {}  dim {}  eigenvalue pattern {:?} (mod {})",
                            kacsearch::factors_string(&c.factors),
                            c.centralizer_dim,
                            c.eigenvalues,
                            c.modulus
                        );
                    }
                }
                Format::Tsv => {
                    for c in &classes {
                        println!(
                            "{}\t{}",
                            kacsearch::factors_string(&c.factors),
                            c.centralizer_dim
                        );
                    }
                }
            }
            Ok(())
        }
        ClassicalAction::Principal {
            family,
            n,
            d,
            format,
        } => {
            let fam = parse_family(&family)?;
            let class =
                kacsearch::centralizer_of_principal(fam, n, d).map_err(|e| e.to_string())?;
            let obj = json!({
                "family": fam.name(),
                "n": n.to_string(),
                "d": d.to_string(),
                "class": classical_class_json(&class),
            });
            match format {
                Format::Json => println!("{obj}"),
                Format::Text => println!(
                    "dual-side centralizer of the principal element: {} (dim {})",
                    kacsearch::factors_string(&class.factors),
                    class.centralizer_dim
                ),
                Format::Tsv => println!(
                    "{}\t{}",
                    kacsearch::factors_string(&class.factors),
                    class.centralizer_dim
                ),
            }
            Ok(())
        }
    }
}

fn diffset_command(action: DiffsetAction) -> Result<(), String> {
    match action {
        DiffsetAction::Search { n, bound, format } => {
            if n < 2 {
                return Err("n must be at least 2".into());
            }
            let pairs = diffset::search_collisions(n, bound);
            let set_json = |s: &diffset::IntegerSet| {
                json!(s
                    .elements()
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>())
            };
            let obj = json!({
                "n": n.to_string(),
                "bound": bound.to_string(),
                "pairs": pairs.iter().map(|p| json!({
                    "x": set_json(&p.x),
                    "y": set_json(&p.y),
                })).collect::<Vec<_>>(),
            });
            match format {
                Format::Json => println!("{obj}"),
                Format::Text => {
                    println!(
                        "{} inequivalent pair(s) with equal difference multisets:",
                        pairs.len()
                    );
                    for p in &pairs {
                        println!("  {:?}  ~  {:?}", p.x.elements(), p.y.elements());
                    }
                }
                Format::Tsv => {
                    for p in &pairs {
                        let xs: Vec<String> =
                            p.x.elements().iter().map(|v| v.to_string()).collect();
                        let ys: Vec<String> =
                            p.y.elements().iter().map(|v| v.to_string()).collect();
                        println!("{}\t{}", xs.join(","), ys.join(","));
                    }
                }
            }
            Ok(())
        }
        DiffsetAction::Check { x, y, format } => {
            let xs = parse_csv(&x)?;
            let ys = parse_csv(&y)?;
            let xset = diffset::IntegerSet::try_new(xs).ok_or("x has repeated elements")?;
            let yset = diffset::IntegerSet::try_new(ys).ok_or("y has repeated elements")?;
            let equal = diffset::difference_multiset(&xset) == diffset::difference_multiset(&yset);
            let equiv = diffset::equivalent(&xset, &yset);
            let obj = json!({
                "equal_difference_multisets": equal,
                "equivalent": equiv,
            });
            match format {
                Format::Json => println!("{obj}"),
                Format::Text => println!(
                    "difference multisets {}; sets are {}",
                    if equal { "equal" } else { "different" },
                    if equiv {
                        "equivalent (translation/reflection)"
                    } else {
                        "inequivalent"
                    }
                ),
                Format::Tsv => println!("{equal}\t{equiv}"),
            }
            Ok(())
        }
    }
}
