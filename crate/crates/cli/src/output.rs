//! Output helpers shared by the subcommands.

use clap::ValueEnum;
use serde_json::json;

use liechar::laurent::LaurentPolynomial;
use liechar::rootdata::Weight;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

/// Laurent polynomial as ascending `[exponent, coefficient]` string pairs.
pub fn poly_json(p: &LaurentPolynomial) -> serde_json::Value {
    json!({
        "terms": p.terms()
            .map(|(e, c)| json!([e.to_string(), c.to_string()]))
            .collect::<Vec<_>>(),
    })
}

pub fn poly_text(p: &LaurentPolynomial) -> String {
    p.to_string()
}

pub fn weight_json(w: &Weight) -> serde_json::Value {
    json!(w.0.iter().map(|c| c.to_string()).collect::<Vec<_>>())
}

/// Print a machine-readable error object and let the caller exit 1.
pub fn fail(message: &str) {
    println!("{}", json!({ "error": { "message": message } }));
}
