//! Output rendering. Rationals print as "p/q" ("p" when integral); no
//! output path ever prints a floating-point number.

use abstrata_core::{
    profile_superharmonic, ABPair, AbOrder, CorootFunction, GroupContext, Move, MovePlan,
    MuPoset, PiecewiseProfile, RootLength, SpecialCondition, SpecialRootReport, Vertex,
};
use serde_json::{json, Value};

pub fn order(verdict: AbOrder) -> &'static str {
    match verdict {
        AbOrder::Greater => ">",
        AbOrder::Less => "<",
        AbOrder::Equal => "=",
        AbOrder::Incomparable => "incomparable",
    }
}

pub fn point(f: &CorootFunction) -> Value {
    json!({
        "coords": f.values().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "basis": "fundamental-coweight",
    })
}

pub fn pair(p: &ABPair) -> Value {
    let mut value = point(p.f());
    value["support"] = Value::Array(
        p.support()
            .iter()
            .map(|v| Value::from(v.to_string()))
            .collect(),
    );
    value
}

fn mv(m: &Move) -> Value {
    match m {
        Move::Type1 { vertex, value } => json!({
            "type": 1,
            "vertex": vertex.to_string(),
            "value": value.to_string(),
        }),
        Move::Type2 { support } => json!({
            "type": 2,
            "support": support.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        }),
        Move::Type3 { vertex, value } => json!({
            "type": 3,
            "vertex": vertex.to_string(),
            "value": value.to_string(),
        }),
    }
}

pub fn plan(plan: &MovePlan) -> Value {
    json!({
        "start": pair(&plan.start),
        "end": pair(&plan.end),
        "moves": plan.moves.iter().map(mv).collect::<Vec<_>>(),
    })
}

fn condition(c: &SpecialCondition) -> &'static str {
    match c {
        SpecialCondition::ComponentNotTypeA => "component-not-type-a",
        SpecialCondition::MeetsComponentOffEnd => "meets-component-off-end",
        SpecialCondition::NotLong => "not-long",
    }
}

pub fn special(report: &SpecialRootReport) -> Value {
    json!({
        "special": report.special.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "failures": report
            .failures
            .iter()
            .map(|(v, conditions)| json!({
                "vertex": v.to_string(),
                "conditions": conditions.iter().map(condition).collect::<Vec<_>>(),
            }))
            .collect::<Vec<_>>(),
    })
}

fn node_vertex(poset: &MuPoset, index: usize) -> Vertex {
    poset.nodes[index]
        .support()
        .iter()
        .next()
        .expect("poset nodes have singleton support")
}

/// Relations and Hasse edges are emitted as [lower, upper] vertex pairs.
pub fn poset(poset: &MuPoset) -> Value {
    let edge = |&(lower, upper): &(usize, usize)| {
        json!([
            node_vertex(poset, lower).to_string(),
            node_vertex(poset, upper).to_string(),
        ])
    };
    json!({
        "nodes": poset
            .nodes
            .iter()
            .enumerate()
            .map(|(k, p)| json!({
                "vertex": node_vertex(poset, k).to_string(),
                "point": pair(p),
            }))
            .collect::<Vec<_>>(),
        "relations": poset.relations.iter().map(edge).collect::<Vec<_>>(),
        "hasse": poset.hasse.iter().map(edge).collect::<Vec<_>>(),
        "minimal": poset
            .minimal
            .iter()
            .map(|&k| node_vertex(poset, k).to_string())
            .collect::<Vec<_>>(),
    })
}

/// Hasse diagram as DOT, minimal elements at the bottom; each node is
/// labeled by its defining value.
pub fn poset_dot(poset: &MuPoset) -> String {
    let mut out = String::from("digraph mu_poset {\n  rankdir=BT;\n");
    for (k, node) in poset.nodes.iter().enumerate() {
        let v = node_vertex(poset, k);
        out.push_str(&format!("  {v} [label=\"mu({v})={}\"];\n", node.f().value(v)));
    }
    for &(lower, upper) in &poset.hasse {
        out.push_str(&format!(
            "  {} -> {};\n",
            node_vertex(poset, lower),
            node_vertex(poset, upper),
        ));
    }
    out.push('}');
    out
}

/// One node/value list per segment; virtual zero-boundary nodes are null.
pub fn profile_of(p: &PiecewiseProfile) -> Value {
    let nodes: Vec<Value> = p
        .segments
        .iter()
        .map(|s| {
            Value::Array(
                s.vertices
                    .iter()
                    .map(|v| match v {
                        Some(v) => Value::from(v.to_string()),
                        None => Value::Null,
                    })
                    .collect(),
            )
        })
        .collect();
    let values: Vec<Value> = p
        .segments
        .iter()
        .map(|s| Value::Array(s.values.iter().map(|x| Value::from(x.to_string())).collect()))
        .collect();
    let slopes: Vec<Value> = p
        .segments
        .iter()
        .map(|s| {
            Value::Array(
                s.slopes()
                    .iter()
                    .map(|x| Value::from(x.to_string()))
                    .collect(),
            )
        })
        .collect();
    json!({
        "nodes": nodes,
        "values": values,
        "slopes": slopes,
        "verdict": profile_superharmonic(p),
    })
}

pub fn info(context: &GroupContext) -> Value {
    let data = context.data();
    let spec = data.spec();
    json!({
        "group": context.label(),
        "family": spec.family().to_string(),
        "rank": spec.rank(),
        "vertices": data.vertices().map(|v| v.to_string()).collect::<Vec<_>>(),
        "numbering": "Bourbaki: a1..a8 as in the plates; rationals print as \"p/q\"",
        "cartan": data.cartan(),
        "bonds": data
            .bonds()
            .iter()
            .map(|b| json!({
                "between": [b.a.to_string(), b.b.to_string()],
                "multiplicity": b.multiplicity,
            }))
            .collect::<Vec<_>>(),
        "short_roots": data
            .vertices()
            .filter(|v| data.length(*v) == RootLength::Short)
            .map(|v| v.to_string())
            .collect::<Vec<_>>(),
        "center_order": data.center_order(),
        "class": {
            "order": context.class().order(),
            "residues": context
                .class()
                .residues()
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>(),
        },
    })
}
