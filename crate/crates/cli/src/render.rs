//! JSON and text rendering shared by the subcommands.

use serde_json::{json, Value};
use wonderful_core::apartment::AffineFunctional;
use wonderful_core::rational::format_q;
use wonderful_core::{Coweight, ParahoricLattice, RootSystem, Q};

pub const SCHEMA: u32 = 1;

pub fn q(x: Q) -> Value {
    Value::String(format_q(x))
}

pub fn coweight(theta: &Coweight) -> Value {
    Value::Array(theta.coords().iter().map(|&x| q(x)).collect())
}

pub fn functional(f: &AffineFunctional) -> Value {
    json!({ "root": f.linear.coeffs(), "constant": q(f.constant) })
}

/// `[{"root": [...], "m": m_r}]` in root order.
pub fn lattice(rs: &RootSystem, lattice: &ParahoricLattice) -> Value {
    Value::Array(rs.roots().iter().zip(lattice.shifts()).map(|(r, m)| json!({ "root": r.coeffs(), "m": m })).collect())
}

pub fn with_schema(mut body: Value) -> Value {
    if let Value::Object(map) = &mut body {
        map.insert("schema".into(), json!(SCHEMA));
    }
    body
}

pub fn print_json(body: Value) {
    println!("{}", serde_json::to_string_pretty(&with_schema(body)).expect("serializable"));
}

/// One `root  m` line per root.
pub fn lattice_text(rs: &RootSystem, lattice: &ParahoricLattice) -> String {
    rs.roots().iter().zip(lattice.shifts()).map(|(r, m)| format!("  {:<16} m = {m}\n", r.to_string())).collect()
}

pub fn join_q(xs: &[Q]) -> String {
    xs.iter().map(|&x| format_q(x)).collect::<Vec<_>>().join(", ")
}
