//! JSON input and output for groups, Lie algebras, extensions, linear
//! combinations, action tables and cocycles.
//!
//! Every loader accepts either a full description or
//! `{"type": "builtin", "name": ...}`; the `load_*` helpers also accept the
//! shorthand `builtin:NAME` in place of a file path.

use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::group::{builtin_group, builtin_group_extension, FiniteGroup, GroupExtension};
use crate::lie::{builtin_lie, builtin_lie_extension, LieAlgebra, LieExtension};
use crate::linear::{parse_scalar, LinComb};

fn parse_error(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { path: path.into(), message: message.into() }
}

fn join(prefix: &str, rest: &str) -> String {
    match (prefix.is_empty(), rest == "." || rest.is_empty()) {
        (_, true) => if prefix.is_empty() { ".".into() } else { prefix.into() },
        (true, false) => rest.into(),
        (false, false) if rest.starts_with('[') => format!("{prefix}{rest}"),
        (false, false) => format!("{prefix}.{rest}"),
    }
}

fn typed<T: DeserializeOwned>(value: &Value, prefix: &str) -> Result<T> {
    serde_path_to_error::deserialize(value.clone())
        .map_err(|e| parse_error(join(prefix, &e.path().to_string()), e.inner().to_string()))
}

fn from_text(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| parse_error(".", e.to_string()))
}

/// `Some(name)` for `{"type": "builtin", "name": name}`.
fn builtin_name(value: &Value, prefix: &str) -> Result<Option<String>> {
    match value.get("type") {
        None => Ok(None),
        Some(Value::String(t)) if t == "builtin" => match value.get("name") {
            Some(Value::String(n)) => Ok(Some(n.clone())),
            _ => Err(parse_error(join(prefix, "name"), "builtin reference needs a string name")),
        },
        Some(other) => Err(parse_error(join(prefix, "type"), format!("unknown type {other}"))),
    }
}

fn scalar_at(s: &str, path: String) -> Result<crate::linear::Scalar> {
    parse_scalar(s).map_err(|e| match e {
        Error::Parse { message, .. } => parse_error(path, message),
        other => other,
    })
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct GroupTable {
    name: String,
    elements: Vec<String>,
    mul: Vec<Vec<String>>,
}

fn group_at(value: &Value, prefix: &str) -> Result<FiniteGroup> {
    if let Some(name) = builtin_name(value, prefix)? {
        return builtin_group(&name);
    }
    let t: GroupTable = typed(value, prefix)?;
    let index: BTreeMap<&str, usize> = t.elements.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
    if t.mul.len() != t.elements.len() {
        return Err(parse_error(join(prefix, "mul"), "table needs one row per element"));
    }
    let mut table = Vec::with_capacity(t.mul.len());
    for (i, row) in t.mul.iter().enumerate() {
        if row.len() != t.elements.len() {
            return Err(parse_error(join(prefix, &format!("mul[{i}]")), "row needs one entry per element"));
        }
        let row = row
            .iter()
            .enumerate()
            .map(|(j, s)| {
                index.get(s.as_str()).copied().ok_or_else(|| {
                    parse_error(join(prefix, &format!("mul[{i}][{j}]")), format!("unknown element {s:?}"))
                })
            })
            .collect::<Result<_>>()?;
        table.push(row);
    }
    FiniteGroup::new(t.name, t.elements, table)
}

pub fn parse_group(text: &str) -> Result<FiniteGroup> {
    group_at(&from_text(text)?, "")
}

pub fn group_to_json(g: &FiniteGroup) -> Value {
    let mul = g.elements().map(|x| g.elements().map(|y| g.label(g.mul(x, y)).to_string()).collect()).collect();
    serde_json::to_value(GroupTable { name: g.name().to_string(), elements: g.labels().to_vec(), mul }).expect("plain data")
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupExtensionJson {
    kernel: Value,
    total: Value,
    quotient: Value,
    iota: BTreeMap<String, String>,
    pi: BTreeMap<String, String>,
    section: BTreeMap<String, String>,
}

fn label_map(
    map: &BTreeMap<String, String>,
    source: &FiniteGroup,
    target: &FiniteGroup,
    path: &str,
) -> Result<Vec<usize>> {
    let mut out = vec![usize::MAX; source.order()];
    for (s, t) in map {
        let i = source.index_of(s).ok_or_else(|| parse_error(path, format!("unknown element {s:?}")))?;
        let j = target.index_of(t).ok_or_else(|| parse_error(format!("{path}.{s}"), format!("unknown element {t:?}")))?;
        out[i] = j;
    }
    if let Some(missing) = out.iter().position(|&j| j == usize::MAX) {
        return Err(parse_error(path, format!("no image for {:?}", source.label(missing))));
    }
    Ok(out)
}

fn group_extension_at(value: &Value) -> Result<GroupExtension> {
    if let Some(name) = builtin_name(value, "")? {
        return builtin_group_extension(&name);
    }
    let j: GroupExtensionJson = typed(value, "")?;
    let (a, e, q) = (group_at(&j.kernel, "kernel")?, group_at(&j.total, "total")?, group_at(&j.quotient, "quotient")?);
    let iota = label_map(&j.iota, &a, &e, "iota")?;
    let pi = label_map(&j.pi, &e, &q, "pi")?;
    let section = label_map(&j.section, &q, &e, "section")?;
    GroupExtension::new(a, e, q, iota, pi, section)
}

pub fn parse_group_extension(text: &str) -> Result<GroupExtension> {
    group_extension_at(&from_text(text)?)
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct BracketJson {
    i: String,
    j: String,
    value: BTreeMap<String, String>,
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct LieJson {
    #[serde(default)]
    name: Option<String>,
    basis: Vec<String>,
    #[serde(default)]
    brackets: Vec<BracketJson>,
}

fn lie_at(value: &Value, prefix: &str) -> Result<LieAlgebra> {
    if let Some(name) = builtin_name(value, prefix)? {
        return builtin_lie(&name);
    }
    let l: LieJson = typed(value, prefix)?;
    let find = |s: &str, path: String| {
        l.basis.iter().position(|b| b == s).ok_or_else(|| parse_error(path, format!("unknown basis element {s:?}")))
    };
    let mut entries = Vec::with_capacity(l.brackets.len());
    for (k, br) in l.brackets.iter().enumerate() {
        let at = |field: &str| join(prefix, &format!("brackets[{k}].{field}"));
        let i = find(&br.i, at("i"))?;
        let j = find(&br.j, at("j"))?;
        let mut v = LinComb::zero();
        for (name, c) in &br.value {
            let path = join(prefix, &format!("brackets[{k}].value.{name}"));
            v.add_term(find(name, path.clone())?, scalar_at(c, path)?);
        }
        entries.push((i, j, v));
    }
    LieAlgebra::from_brackets(l.name.unwrap_or_else(|| "lie".into()), l.basis, &entries)
}

pub fn parse_lie(text: &str) -> Result<LieAlgebra> {
    lie_at(&from_text(text)?, "")
}

pub fn lie_to_json(lie: &LieAlgebra) -> Value {
    let mut brackets = Vec::new();
    for i in 0..lie.dim() {
        for j in i + 1..lie.dim() {
            let v = lie.bracket_basis(i, j);
            if !v.is_zero() {
                brackets.push(BracketJson {
                    i: lie.basis_name(i).to_string(),
                    j: lie.basis_name(j).to_string(),
                    value: v.iter().map(|(k, c)| (lie.basis_name(*k).to_string(), c.to_string())).collect(),
                });
            }
        }
    }
    let l = LieJson { name: Some(lie.name().to_string()), basis: lie.basis_names().to_vec(), brackets };
    serde_json::to_value(l).expect("plain data")
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LieExtensionJson {
    kernel: Value,
    total: Value,
    quotient: Value,
    iota: Vec<Vec<String>>,
    pi: Vec<Vec<String>>,
    section: Vec<Vec<String>>,
}

/// Rows are images of source basis vectors, columns index the target basis.
fn matrix(rows: &[Vec<String>], source: usize, target: usize, path: &str) -> Result<Vec<LinComb<usize>>> {
    if rows.len() != source {
        return Err(parse_error(path, format!("expected {source} rows, found {}", rows.len())));
    }
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            if row.len() != target {
                return Err(parse_error(format!("{path}[{i}]"), format!("expected {target} entries, found {}", row.len())));
            }
            let mut v = LinComb::zero();
            for (j, c) in row.iter().enumerate() {
                v.add_term(j, scalar_at(c, format!("{path}[{i}][{j}]"))?);
            }
            Ok(v)
        })
        .collect()
}

fn lie_extension_at(value: &Value) -> Result<LieExtension> {
    if let Some(name) = builtin_name(value, "")? {
        return builtin_lie_extension(&name);
    }
    let j: LieExtensionJson = typed(value, "")?;
    let (a, e, q) = (lie_at(&j.kernel, "kernel")?, lie_at(&j.total, "total")?, lie_at(&j.quotient, "quotient")?);
    let iota = matrix(&j.iota, a.dim(), e.dim(), "iota")?;
    let pi = matrix(&j.pi, e.dim(), q.dim(), "pi")?;
    let section = matrix(&j.section, q.dim(), e.dim(), "section")?;
    LieExtension::new(a, e, q, iota, pi, section)
}

pub fn parse_lie_extension(text: &str) -> Result<LieExtension> {
    lie_extension_at(&from_text(text)?)
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    basis: String,
    coeff: String,
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct LinCombJson {
    terms: Vec<TermJson>,
}

fn lincomb_at(value: &Value, prefix: &str) -> Result<LinComb<String>> {
    let l: LinCombJson = typed(value, prefix)?;
    let mut out = LinComb::zero();
    for (k, t) in l.terms.iter().enumerate() {
        out.add_term(t.basis.clone(), scalar_at(&t.coeff, join(prefix, &format!("terms[{k}].coeff")))?);
    }
    Ok(out)
}

/// A combination of symbols given by label.
pub fn parse_lincomb(text: &str) -> Result<LinComb<String>> {
    lincomb_at(&from_text(text)?, "")
}

pub fn lincomb_to_json(x: &LinComb<String>) -> Value {
    let terms = x.iter().map(|(b, c)| TermJson { basis: b.clone(), coeff: c.to_string() }).collect();
    serde_json::to_value(LinCombJson { terms }).expect("plain data")
}

/// Resolve labels of a combination against a group.
fn group_lincomb(x: &LinComb<String>, g: &FiniteGroup, path: &str) -> Result<LinComb<usize>> {
    x.try_flat_map(|s| {
        g.index_of(s).map(LinComb::basis).ok_or_else(|| parse_error(path, format!("unknown element {s:?}")))
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StarEntry {
    q: String,
    h: String,
    value: Value,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StarJson {
    star: Vec<StarEntry>,
}

/// An action table `{"star": [{"q", "h", "value"}]}` of `𝕜Q` on `𝕜H`, by
/// group labels. Omitted pairs act trivially.
pub fn parse_action_table(
    text: &str,
    q: &FiniteGroup,
    h: &FiniteGroup,
) -> Result<BTreeMap<(usize, usize), LinComb<usize>>> {
    let value = from_text(text)?;
    let s: StarJson = typed(&value, "")?;
    let mut out = BTreeMap::new();
    for (k, entry) in s.star.iter().enumerate() {
        let at = |f: &str| format!("star[{k}].{f}");
        let a = q.index_of(&entry.q).ok_or_else(|| parse_error(at("q"), format!("unknown element {:?}", entry.q)))?;
        let b = h.index_of(&entry.h).ok_or_else(|| parse_error(at("h"), format!("unknown element {:?}", entry.h)))?;
        let v = lincomb_at(&entry.value, &at("value"))?;
        out.insert((a, b), group_lincomb(&v, h, &at("value"))?);
    }
    Ok(out)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SigmaEntry {
    q: String,
    r: String,
    value: Value,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SigmaJson {
    sigma: Vec<SigmaEntry>,
}

/// A cocycle `{"sigma": [{"q", "r", "value"}]}` on `𝕜Q ⊗ 𝕜Q` with values in
/// `𝕜H`. Omitted pairs take the value `1`.
pub fn parse_cocycle(text: &str, q: &FiniteGroup, h: &FiniteGroup) -> Result<BTreeMap<(usize, usize), LinComb<usize>>> {
    let value = from_text(text)?;
    let s: SigmaJson = typed(&value, "")?;
    let mut out = BTreeMap::new();
    for a in q.elements() {
        for b in q.elements() {
            out.insert((a, b), LinComb::basis(h.identity()));
        }
    }
    for (k, entry) in s.sigma.iter().enumerate() {
        let at = |f: &str| format!("sigma[{k}].{f}");
        let a = q.index_of(&entry.q).ok_or_else(|| parse_error(at("q"), format!("unknown element {:?}", entry.q)))?;
        let b = q.index_of(&entry.r).ok_or_else(|| parse_error(at("r"), format!("unknown element {:?}", entry.r)))?;
        let v = lincomb_at(&entry.value, &at("value"))?;
        out.insert((a, b), group_lincomb(&v, h, &at("value"))?);
    }
    Ok(out)
}

fn read(source: &str) -> Result<String> {
    std::fs::read_to_string(source).map_err(|e| parse_error(source, e.to_string()))
}

/// `builtin:NAME` or a path to a JSON file.
pub fn load_group(source: &str) -> Result<FiniteGroup> {
    match source.strip_prefix("builtin:") {
        Some(name) => builtin_group(name),
        None => parse_group(&read(source)?).map_err(|e| prefix_file(source, e)),
    }
}

pub fn load_group_extension(source: &str) -> Result<GroupExtension> {
    match source.strip_prefix("builtin:") {
        Some(name) => builtin_group_extension(name),
        None => parse_group_extension(&read(source)?).map_err(|e| prefix_file(source, e)),
    }
}

pub fn load_lie(source: &str) -> Result<LieAlgebra> {
    match source.strip_prefix("builtin:") {
        Some(name) => builtin_lie(name),
        None => parse_lie(&read(source)?).map_err(|e| prefix_file(source, e)),
    }
}

pub fn load_lie_extension(source: &str) -> Result<LieExtension> {
    match source.strip_prefix("builtin:") {
        Some(name) => builtin_lie_extension(name),
        None => parse_lie_extension(&read(source)?).map_err(|e| prefix_file(source, e)),
    }
}

/// Read a file for the table/cocycle parsers.
pub fn load_text(source: &str) -> Result<String> {
    read(source)
}

fn prefix_file(file: &str, e: Error) -> Error {
    match e {
        Error::Parse { path, message } => parse_error(format!("{file}:{path}"), message),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, find_isomorphism};
    use crate::lie::heisenberg;

    #[test]
    fn group_round_trips() {
        let g = cyclic(3);
        let back = parse_group(&group_to_json(&g).to_string()).unwrap();
        assert_eq!(back.table(), g.table());
        let q8 = parse_group(r#"{"type": "builtin", "name": "Q8"}"#).unwrap();
        assert_eq!(q8.order(), 8);
    }

    #[test]
    fn bad_group_label_has_path() {
        let err = parse_group(r#"{"name": "g", "elements": ["1", "a"], "mul": [["1", "a"], ["a", "b"]]}"#).unwrap_err();
        match err {
            Error::Parse { path, .. } => assert_eq!(path, "mul[1][1]"),
            other => panic!("{other:?}"),
        }
        let err = parse_group(r#"{"name": "g", "elements": 3, "mul": []}"#).unwrap_err();
        assert!(matches!(err, Error::Parse { ref path, .. } if path == "elements"), "{err:?}");
    }

    #[test]
    fn lie_round_trips() {
        let h = heisenberg();
        let back = parse_lie(&lie_to_json(&h).to_string()).unwrap();
        assert_eq!(back.basis_names(), h.basis_names());
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(back.bracket_basis(i, j), h.bracket_basis(i, j));
            }
        }
        let err = parse_lie(r#"{"basis": ["x", "y"], "brackets": [{"i": "x", "j": "y", "value": {"y": "1/0"}}]}"#);
        assert!(matches!(err, Err(Error::Parse { ref path, .. }) if path == "brackets[0].value.y"));
    }

    #[test]
    fn extensions_parse() {
        let text = r#"{
            "kernel": {"type": "builtin", "name": "C2"},
            "total": {"type": "builtin", "name": "C4"},
            "quotient": {"type": "builtin", "name": "C2"},
            "iota": {"e": "e", "g": "g2"},
            "pi": {"e": "e", "g": "g", "g2": "e", "g3": "g"},
            "section": {"e": "e", "g": "g"}
        }"#;
        let ext = parse_group_extension(text).unwrap();
        assert!(find_isomorphism(&ext.total, &cyclic(4)).is_some());
        let text = r#"{
            "kernel": {"basis": ["y"]},
            "total": {"type": "builtin", "name": "affine-2dim"},
            "quotient": {"basis": ["x"]},
            "iota": [["0", "1"]],
            "pi": [["1"], ["0"]],
            "section": [["1", "0"]]
        }"#;
        let ext = parse_lie_extension(text).unwrap();
        assert_eq!(ext.total.dim(), 2);
    }

    #[test]
    fn lincomb_and_tables() {
        let x = parse_lincomb(r#"{"terms": [{"basis": "g", "coeff": "-1/2"}, {"basis": "1", "coeff": "3"}]}"#).unwrap();
        assert_eq!(parse_lincomb(&lincomb_to_json(&x).to_string()).unwrap(), x);
        let c2 = cyclic(2);
        let sigma = parse_cocycle(r#"{"sigma": [{"q": "g", "r": "g", "value": {"terms": [{"basis": "g", "coeff": "1"}]}}]}"#, &c2, &c2)
            .unwrap();
        assert_eq!(sigma[&(1, 1)], LinComb::basis(1));
        assert_eq!(sigma[&(0, 1)], LinComb::basis(0));
        let star = parse_action_table(r#"{"star": []}"#, &c2, &c2).unwrap();
        assert!(star.is_empty());
    }
}
