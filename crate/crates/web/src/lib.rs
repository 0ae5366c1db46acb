//! Browser bindings. Each exported function takes plain values and returns a
//! JSON string; the `*_report` functions do the work and are usable natively.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use starpres::family::{self, FamilyParams};
use starpres::lowindex::{self, SubgroupMode};
use starpres::stargraph::{self, StarGraph};
use starpres::{registry, Presentation, Word};

/// Largest `n` accepted by [`family_report`].
pub const MAX_N: usize = 24;
/// Largest subgroup index accepted by [`invariants_report`].
pub const MAX_INDEX: usize = 5;

fn parse_relators(text: &str, rank: usize) -> Result<Vec<Word>, String> {
    text.split([',', '\n', ';'])
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Word::parse(s, rank).map_err(|e| format!("{s}: {e}")))
        .collect()
}

pub fn star_graph_report(relators: &str, rank: usize) -> Result<Value, String> {
    if !(1..=8).contains(&rank) {
        return Err(format!("rank {rank} is outside 1..8"));
    }
    let words = parse_relators(relators, rank)?;
    let p = stargraph::concise_refine_relators(rank, &words);
    let g = StarGraph::build(&p);
    let certificate = stargraph::check_special(&p);
    Ok(json!({
        "presentation": p.to_string(),
        "graph": g.export(),
        "analysis": g.simple_graph().analyze(),
        "certificate": certificate,
        "hyperbolic": certificate.map(|c| stargraph::hyperbolic_flag(c.m, c.k)),
        "k33": rank == 3 && g.is_knn(3),
    }))
}

pub fn family_report(n: usize, alpha: usize) -> Result<Value, String> {
    if n > MAX_N {
        return Err(format!("n = {n} exceeds {MAX_N}"));
    }
    let params = FamilyParams::new(n, alpha).map_err(|e| e.to_string())?;
    let p = family::presentation(params);
    let verdict = family::verify_knn(n, alpha).map_err(|e| e.to_string())?;
    let len = p.relators()[0].len();
    Ok(json!({
        "relator": family::w(n).to_indexed(),
        "length": len,
        "knn": verdict,
        "certificate": stargraph::check_special(&p),
        "hyperbolic": verdict.ok && n >= 2 && stargraph::hyperbolic_flag(2, len),
        "pair_counts": family::pair_count_table(n),
    }))
}

/// `source` is either a builtin group `G1`..`G12` or a relator list.
pub fn invariants_report(source: &str, rank: usize, max_index: usize) -> Result<Value, String> {
    if max_index == 0 || max_index > MAX_INDEX {
        return Err(format!("index must be in 1..{MAX_INDEX}"));
    }
    let trimmed = source.trim();
    let builtin = trimmed.strip_prefix(['G', 'g']).and_then(|d| d.parse::<usize>().ok());
    let p = match builtin {
        Some(i) if (1..=12).contains(&i) => registry::group(i - 1),
        Some(i) => return Err(format!("G{i} is not one of G1..G12")),
        None => Presentation::new(rank, parse_relators(trimmed, rank)?).map_err(|e| e.to_string())?,
    };
    let prof = lowindex::invariant_profile(&p, max_index, SubgroupMode::All).map_err(|e| e.to_string())?;
    let indices: Vec<Value> = (1..=max_index)
        .map(|k| {
            let invariants: Vec<Value> = prof
                .at(k)
                .iter()
                .map(|(g, &n)| json!({ "group": g.to_string(), "subgroups": n, "classes": prof.class_count(k, g) }))
                .collect();
            json!({ "index": k, "subgroups": prof.subgroup_count(k), "invariants": invariants })
        })
        .collect();
    Ok(json!({ "presentation": p.to_string(), "indices": indices }))
}

fn finish(r: Result<Value, String>) -> Result<String, JsError> {
    r.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = starGraph)]
pub fn star_graph(relators: &str, rank: usize) -> Result<String, JsError> {
    finish(star_graph_report(relators, rank))
}

#[wasm_bindgen]
pub fn family(n: usize, alpha: usize) -> Result<String, JsError> {
    finish(family_report(n, alpha))
}

#[wasm_bindgen]
pub fn invariants(source: &str, rank: usize, max_index: usize) -> Result<String, JsError> {
    finish(invariants_report(source, rank, max_index))
}
