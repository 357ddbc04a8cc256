//! Request parsing: group and class names, rationals, vertices, points,
//! and pairs. Every rejection carries the offending text.

use abstrata_core::{
    build_root_system, qi, ABPair, CentralElement, CorootFunction, Family, GroupContext, Q,
    RootSystemData, RootSystemSpec, Vertex, VertexSet,
};
use serde_json::Value;

use crate::Failure;

fn reject(message: impl Into<String>) -> Failure {
    Failure::Parse(message.into())
}

/// Parse "B3", "B3/z1", "A5/z1^2", "D4/z1z2", or "E6/ad" into a context.
pub fn group(text: &str) -> Result<GroupContext, Failure> {
    let (name, class_text) = match text.split_once('/') {
        Some((name, class)) => (name, Some(class)),
        None => (text, None),
    };
    let mut chars = name.chars();
    let family = chars
        .next()
        .ok_or_else(|| reject("empty group name"))?
        .to_string()
        .parse::<Family>()
        .map_err(|e| reject(format!("bad group {text:?}: {e}")))?;
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| reject(format!("bad rank in group {text:?}")))?;
    let spec = RootSystemSpec::new(family, rank)
        .map_err(|e| reject(format!("bad group {text:?}: {e}")))?;
    let data = build_root_system(spec);
    let class = match class_text {
        None => CentralElement::trivial(rank),
        Some(c) => central_class(c, &data)?,
    };
    GroupContext::new(data, class)
        .map(|context| context.with_label(text))
        .map_err(|e| reject(format!("bad class in {text:?}: {e}")))
}

/// Parse a central-class name: "ad", or a product of generator powers
/// like "z1", "z1^2", "z1z2".
fn central_class(text: &str, data: &RootSystemData) -> Result<CentralElement, Failure> {
    let generators = data.center_generators();
    if text == "ad" {
        return match generators.len() {
            0 => Ok(CentralElement::trivial(data.rank())),
            1 => Ok(generators[0].clone()),
            _ => Err(reject(
                "this center is not cyclic, so \"ad\" is ambiguous; name the class: \
                 z1 or z2 (half-spin kernels) or z1z2 (vector kernel)",
            )),
        };
    }
    if text.is_empty() {
        return Err(reject("empty class name after '/'"));
    }
    let mut class = CentralElement::trivial(data.rank());
    let mut rest = text;
    while !rest.is_empty() {
        rest = rest.strip_prefix('z').ok_or_else(|| {
            reject(format!(
                "bad class {text:?}: expected \"ad\" or z<k> factors like z1^2"
            ))
        })?;
        let end = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        let (digits, tail) = rest.split_at(end);
        let index: usize = digits
            .parse()
            .map_err(|_| reject(format!("bad generator index in class {text:?}")))?;
        if index == 0 || index > generators.len() {
            return Err(reject(format!(
                "no central generator z{index}: this center has {} generator(s)",
                generators.len()
            )));
        }
        rest = tail;
        let mut exponent = 1u64;
        if let Some(after) = rest.strip_prefix('^') {
            let end = after
                .find(|c: char| !c.is_ascii_digit())
                .unwrap_or(after.len());
            let (digits, tail) = after.split_at(end);
            exponent = digits
                .parse()
                .map_err(|_| reject(format!("bad exponent in class {text:?}")))?;
            rest = tail;
        }
        class = class.add(&generators[index - 1].power(exponent, data), data);
    }
    Ok(class)
}

/// Parse "p/q" or "p"; a zero denominator is rejected, never reduced away.
pub fn rational(text: &str) -> Result<Q, Failure> {
    text.trim()
        .parse::<Q>()
        .map_err(|e| reject(format!("bad rational {text:?}: {e}")))
}

fn coordinate(value: &Value) -> Result<Q, Failure> {
    match value {
        Value::String(text) => rational(text),
        Value::Number(n) if n.is_i64() => Ok(qi(n.as_i64().expect("checked"))),
        Value::Number(n) => Err(reject(format!(
            "write {n} as a rational string like \"3/2\", not a float"
        ))),
        other => Err(reject(format!("bad coordinate {other}"))),
    }
}

/// Pull the coordinate list out of either a bare array or an object with
/// a "coords" field (whose "basis", if present, must be the one basis we
/// speak).
fn coords(value: &Value, rank: usize) -> Result<Vec<Q>, Failure> {
    let raw = match value {
        Value::Array(entries) => entries,
        Value::Object(fields) => {
            if let Some(basis) = fields.get("basis") {
                if basis != "fundamental-coweight" {
                    return Err(reject(format!(
                        "unknown basis {basis}: points are written in the \
                         fundamental-coweight basis"
                    )));
                }
            }
            fields
                .get("coords")
                .and_then(Value::as_array)
                .ok_or_else(|| reject("a point object needs a \"coords\" array"))?
        }
        _ => return Err(reject("a point is an array or {\"coords\": [...]}")),
    };
    if raw.len() != rank {
        return Err(reject(format!(
            "expected {rank} coordinates, got {}",
            raw.len()
        )));
    }
    raw.iter().map(coordinate).collect()
}

pub fn point(text: &str, context: &GroupContext) -> Result<CorootFunction, Failure> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| reject(format!("bad point JSON: {e}")))?;
    Ok(CorootFunction::new(coords(&value, context.rank())?))
}

fn vertex(name: &str, rank: usize) -> Result<Vertex, Failure> {
    Vertex::parse(name, rank)
        .ok_or_else(|| reject(format!("unknown vertex {name:?} for rank {rank}")))
}

/// Parse a pair: the point plus its "support" list. Shape problems are
/// parse failures; a well-formed pair the class rejects is a precondition
/// failure.
pub fn pair(text: &str, context: &GroupContext) -> Result<ABPair, Failure> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| reject(format!("bad pair JSON: {e}")))?;
    let fields = value
        .as_object()
        .ok_or_else(|| reject("a pair is {\"coords\": [...], \"support\": [...]}"))?;
    let f = CorootFunction::new(coords(&value, context.rank())?);
    let raw_support = fields
        .get("support")
        .and_then(Value::as_array)
        .ok_or_else(|| reject("a pair needs a \"support\" array of vertex names"))?;
    let mut support = VertexSet::empty();
    for name in raw_support {
        let name = name
            .as_str()
            .ok_or_else(|| reject(format!("bad vertex name {name}")))?;
        support.insert(vertex(name, context.rank())?);
    }
    ABPair::new(context.clone(), f, support)
        .map_err(|e| Failure::Precondition(format!("not a valid pair: {e}")))
}
