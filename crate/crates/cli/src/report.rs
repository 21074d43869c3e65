//! Text and JSON renderings of computed results.
//!
//! JSON output is deterministic: maps are ordered by key and all values
//! come from exact integer data, so identical inputs give byte-identical
//! reports.

use num_traits::ToPrimitive;
use perverse_core::config::{ConfigHodge, ConsistencyReport};
use perverse_core::faces::FaceInvariants;
use perverse_core::mirror::{HodgeDiamond, MirrorReport, PerverseCurveInvariants, SideReport};
use perverse_core::{Face, LatticePolytope};
use serde_json::{json, Value};

/// A coordinate as a JSON number when it fits, else a decimal string.
fn coord(x: &num_bigint::BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn vertices_json(p: &LatticePolytope) -> Value {
    Value::Array(
        p.vertices()
            .iter()
            .map(|v| Value::Array(v.iter().map(coord).collect()))
            .collect(),
    )
}

pub fn diamond_line(d: &HodgeDiamond) -> String {
    format!("h00={} h10={} h01={} h11={}", d.h00, d.h10, d.h01, d.h11)
}

pub fn diamond_json(d: &HodgeDiamond) -> Value {
    json!({ "h00": d.h00, "h10": d.h10, "h01": d.h01, "h11": d.h11 })
}

pub fn invariants_line(i: &PerverseCurveInvariants) -> String {
    format!(
        "v={} e={} n={} g={} d={} e_tilde={} b1_gamma={}",
        i.v, i.e, i.n, i.g, i.d, i.e_tilde, i.b1_gamma
    )
}

pub fn invariants_json(i: &PerverseCurveInvariants) -> Value {
    json!({
        "v": i.v,
        "e": i.e,
        "n": i.n,
        "g": i.g,
        "d": i.d,
        "e_tilde": i.e_tilde,
        "b1_gamma": i.b1_gamma,
    })
}

pub fn face_line(f: &Face) -> String {
    let ids: Vec<String> = f.vertex_ids.iter().map(|v| v.to_string()).collect();
    format!("face {} (dim {}): vertices {{{}}}", f.id, f.dim, ids.join(" "))
}

pub fn face_json(f: &Face) -> Value {
    json!({
        "id": f.id,
        "dim": f.dim,
        "vertex_ids": f.vertex_ids,
        "containing_facet_ids": f.containing_facet_ids,
    })
}

pub fn face_invariants_line(inv: &FaceInvariants) -> String {
    match inv {
        FaceInvariants::Edge { face_id, len } => {
            format!("face {face_id} (dim 1): len={len}")
        }
        FaceInvariants::TwoFace { face_id, counts } => format!(
            "face {face_id} (dim 2): s0={} s1={} s2={} b={} vol2={}",
            counts.s0,
            counts.s1,
            counts.s2,
            counts.b,
            counts.vol2()
        ),
    }
}

pub fn face_invariants_json(inv: &FaceInvariants) -> Value {
    match inv {
        FaceInvariants::Edge { face_id, len } => {
            json!({ "face_id": face_id, "dim": 1, "len": len })
        }
        FaceInvariants::TwoFace { face_id, counts } => json!({
            "face_id": face_id,
            "dim": 2,
            "s0": counts.s0,
            "s1": counts.s1,
            "s2": counts.s2,
            "b": counts.b,
            "vol2": counts.vol2().to_string(),
        }),
    }
}

fn side_json(s: &SideReport) -> Value {
    json!({
        "diamond": diamond_json(&s.diamond),
        "invariants": invariants_json(&s.invariants),
        "euler_perverse": s.euler_perverse,
        "euler_batyrev": s.euler_batyrev,
        "vertex_count": s.vertex_count,
        "two_face_count": s.two_face_count,
        "h10_uncorrected": s.h10_uncorrected,
        "boundary_sum": s.boundary_sum,
        "edge_pair_sum": s.edge_pair_sum,
    })
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

/// Full text report for one mirror verification.
pub fn mirror_text(r: &MirrorReport) -> String {
    let mut s = String::new();
    s.push_str(&format!("primal diamond: {}\n", diamond_line(&r.primal.diamond)));
    s.push_str(&format!("dual diamond:   {}\n", diamond_line(&r.dual.diamond)));
    s.push_str(&format!(
        "primal euler:   perverse={} batyrev={}\n",
        r.primal.euler_perverse, r.primal.euler_batyrev
    ));
    s.push_str(&format!(
        "dual euler:     perverse={} batyrev={}\n",
        r.dual.euler_perverse, r.dual.euler_batyrev
    ));
    s.push_str("checks:\n");
    for c in &r.checks {
        s.push_str(&format!(
            "  {}: {} ({} = {})\n",
            c.key,
            pass_fail(c.passed),
            c.lhs,
            c.rhs
        ));
    }
    s.push_str(&format!("note: {}\n", r.correction_note));
    s.push_str(&format!("result: {}\n", pass_fail(r.passed())));
    s
}

/// Full JSON report for one mirror verification. The four duality
/// checks are also folded into a single `thm3_duality` entry.
pub fn mirror_json(r: &MirrorReport) -> Value {
    let mut checks = serde_json::Map::new();
    let mut duality = true;
    for c in &r.checks {
        checks.insert(c.key.to_string(), json!(pass_fail(c.passed)));
        if c.key.starts_with("thm3_duality_") {
            duality &= c.passed;
        }
    }
    checks.insert("thm3_duality".to_string(), json!(pass_fail(duality)));
    json!({
        "primal": side_json(&r.primal),
        "dual": side_json(&r.dual),
        "checks": Value::Object(checks),
        "correction_note": r.correction_note,
        "result": pass_fail(r.passed()),
    })
}

/// Text report for a curve configuration, diamond tuple first.
pub fn config_text(d: &ConfigHodge, euler: i64) -> String {
    let mut s = String::new();
    s.push_str(&format!(
        "({},{},{},{})\n",
        d.diamond.h00, d.diamond.h10, d.diamond.h01, d.diamond.h11
    ));
    s.push_str(&format!("{}\n", diamond_line(&d.diamond)));
    s.push_str(&format!("euler={euler}\n"));
    s.push_str(&format!(
        "components={} triple_points={} total_genus={}\n",
        d.component_count, d.triple_point_count, d.total_genus
    ));
    s.push_str(&format!(
        "delta_rank={} h1_from_genera={} h1_from_cycles={}\n",
        d.delta_rank, d.h1_from_genera, d.h1_from_cycles
    ));
    s
}

pub fn config_json(d: &ConfigHodge, euler: i64) -> Value {
    json!({
        "diamond": diamond_json(&d.diamond),
        "euler": euler,
        "component_count": d.component_count,
        "triple_point_count": d.triple_point_count,
        "total_genus": d.total_genus,
        "delta_rank": d.delta_rank,
        "h1_from_genera": d.h1_from_genera,
        "h1_from_cycles": d.h1_from_cycles,
    })
}

pub fn consistency_text(name: &str, c: &ConsistencyReport) -> String {
    let mut s = String::new();
    s.push_str(&format!("against {name}:\n"));
    s.push_str(&format!(
        "  delta_rank={} b1_gamma={} rank_matches_b1={}\n",
        c.delta_rank,
        c.b1_gamma,
        if c.rank_matches_b1 { "yes" } else { "no" }
    ));
    s.push_str(&format!("  config diamond:   {}\n", diamond_line(&c.config_diamond)));
    s.push_str(&format!("  polytope diamond: {}\n", diamond_line(&c.polytope_diamond)));
    s.push_str(&format!(
        "  diamonds_match={}\n",
        if c.diamonds_match { "yes" } else { "no" }
    ));
    s
}

pub fn consistency_json(c: &ConsistencyReport) -> Value {
    json!({
        "delta_rank": c.delta_rank,
        "b1_gamma": c.b1_gamma,
        "rank_matches_b1": c.rank_matches_b1,
        "config_diamond": diamond_json(&c.config_diamond),
        "polytope_diamond": diamond_json(&c.polytope_diamond),
        "diamonds_match": c.diamonds_match,
    })
}
