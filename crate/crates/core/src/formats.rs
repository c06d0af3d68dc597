//! JSON documents for algebras, tensors, operators and automorphisms.
//!
//! Scalars are strings in the scalar grammar. Any parameter a document uses
//! must be listed in its `"params"` header; documents loaded together share
//! one ring built from the union of their headers.

use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::autos::{make_inner, make_psi, AutoMap, InnerAuto};
use crate::catalog::Constraint;
use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;
use crate::linalg::Matrix;
use crate::rbop::LinOp;
use crate::scalar::{parse_gauss, parse_poly, ParamSet, Poly};
use crate::tensor::{Tensor2, Tensor3};

#[derive(Clone, Debug, PartialEq)]
pub struct ParamDecl {
    pub name: String,
    pub constraint: Constraint,
}

/// A parsed JSON file plus its parameter header.
#[derive(Clone, Debug)]
pub struct Document {
    pub value: Value,
    pub params: Vec<ParamDecl>,
}

fn fmt_err(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| fmt_err(format!("missing field `{key}`")))
}

fn as_str<'a>(v: &'a Value, what: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| fmt_err(format!("{what} must be a string")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| fmt_err(format!("{what} must be an array")))
}

fn as_object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| fmt_err(format!("{what} must be an object")))
}

fn parse_decl(v: &Value) -> Result<ParamDecl> {
    let name = as_str(field(v, "name")?, "parameter name")?.to_string();
    let constraint = match v.get("constraint") {
        None => Constraint::Free,
        Some(Value::String(s)) if s == "free" => Constraint::Free,
        Some(Value::String(s)) if s == "nonzero" => Constraint::Nonzero,
        Some(Value::Array(vs)) => Constraint::OneOf(
            vs.iter().map(|x| parse_gauss(as_str(x, "constraint value")?)).collect::<Result<_>>()?,
        ),
        Some(other) => return Err(fmt_err(format!("bad constraint for `{name}`: {other}"))),
    };
    Ok(ParamDecl { name, constraint })
}

pub fn read_document(text: &str) -> Result<Document> {
    let value: Value = serde_json::from_str(text).map_err(|e| fmt_err(format!("invalid JSON: {e}")))?;
    let mut params: Vec<ParamDecl> = Vec::new();
    if let Some(p) = value.get("params") {
        for d in as_array(p, "params")? {
            let d = parse_decl(d)?;
            if params.iter().any(|q| q.name == d.name) {
                return Err(Error::DuplicateParam(d.name));
            }
            params.push(d);
        }
    }
    Ok(Document { value, params })
}

/// One ring over every parameter declared by any of `docs`, in first-seen order.
pub fn union_ring<'a>(docs: impl IntoIterator<Item = &'a Document>) -> Result<Arc<ParamSet>> {
    let mut names: Vec<String> = Vec::new();
    for d in docs {
        for p in &d.params {
            if !names.contains(&p.name) {
                names.push(p.name.clone());
            }
        }
    }
    ParamSet::new(names)
}

fn scalar(doc: &Document, ring: &Arc<ParamSet>, v: &Value) -> Result<Poly> {
    let text = as_str(v, "scalar")?;
    let p = parse_poly(ring, text)?;
    if let Some(undeclared) = p.params().into_iter().find(|n| !doc.params.iter().any(|d| &d.name == n)) {
        return Err(Error::UnknownParam(format!("`{undeclared}` is not declared in the params header")));
    }
    Ok(p)
}

pub fn algebra_from_doc(doc: &Document, ring: &Arc<ParamSet>) -> Result<LieAlgebra<Poly>> {
    let v = &doc.value;
    let name = as_str(field(v, "name")?, "name")?.to_string();
    let basis: Vec<String> = as_array(field(v, "basis")?, "basis")?
        .iter()
        .map(|b| as_str(b, "basis label").map(str::to_string))
        .collect::<Result<_>>()?;
    let n = basis.len();
    let index = |l: &str| basis.iter().position(|b| b == l).ok_or_else(|| Error::UnknownLabel(l.to_string()));
    let mut c = vec![Poly::from_int(0); n * n * n];
    let mut seen = vec![false; n * n];
    if let Some(brackets) = v.get("brackets") {
        for entry in as_array(brackets, "brackets")? {
            let e = as_array(entry, "bracket entry")?;
            let [i, j, out] = e.as_slice() else {
                return Err(fmt_err("bracket entries are [i, j, {k: scalar}]"));
            };
            let (i, j) = (index(as_str(i, "label")?)?, index(as_str(j, "label")?)?);
            if i == j {
                return Err(fmt_err(format!("bracket of `{}` with itself must be omitted", basis[i])));
            }
            if seen[i * n + j] || seen[j * n + i] {
                return Err(fmt_err(format!("bracket [{}, {}] given twice", basis[i], basis[j])));
            }
            seen[i * n + j] = true;
            for (k, s) in as_object(out, "bracket value")? {
                let k = index(k)?;
                let s = scalar(doc, ring, s)?;
                c[(i * n + j) * n + k] = s.clone();
                c[(j * n + i) * n + k] = -s;
            }
        }
    }
    let gram = match v.get("gram") {
        None | Some(Value::Null) => None,
        Some(g) => {
            let rows = as_array(g, "gram")?
                .iter()
                .map(|r| as_array(r, "gram row")?.iter().map(|s| scalar(doc, ring, s)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            Some(Matrix::from_rows(rows)?)
        }
    };
    LieAlgebra::new(name, basis, c, gram)
}

fn check_algebra(doc: &Document, alg: &LieAlgebra<Poly>) -> Result<()> {
    let name = as_str(field(&doc.value, "algebra")?, "algebra")?;
    if name != alg.name() {
        return Err(Error::AlgebraMismatch { left: name.into(), right: alg.name().into() });
    }
    Ok(())
}

pub fn tensor_from_doc(doc: &Document, alg: &Arc<LieAlgebra<Poly>>, ring: &Arc<ParamSet>) -> Result<Tensor2<Poly>> {
    check_algebra(doc, alg)?;
    let mut t = Tensor2::zeros(alg);
    for entry in as_array(field(&doc.value, "entries")?, "entries")? {
        let e = as_array(entry, "tensor entry")?;
        let [i, j, s] = e.as_slice() else {
            return Err(fmt_err("tensor entries are [i, j, scalar]"));
        };
        let (i, j) = (alg.index_of(as_str(i, "label")?)?, alg.index_of(as_str(j, "label")?)?);
        let s = scalar(doc, ring, s)?;
        let v = t.get(i, j).clone() + s;
        t.set(i, j, v);
    }
    Ok(t)
}

pub fn op_from_doc(doc: &Document, alg: &Arc<LieAlgebra<Poly>>, ring: &Arc<ParamSet>) -> Result<LinOp<Poly>> {
    check_algebra(doc, alg)?;
    let n = alg.dim();
    let mut cols = vec![vec![Poly::from_int(0); n]; n];
    for (src, img) in as_object(field(&doc.value, "images")?, "images")? {
        let k = alg.index_of(src)?;
        for (dst, s) in as_object(img, "image")? {
            cols[k][alg.index_of(dst)?] = scalar(doc, ring, s)?;
        }
    }
    LinOp::from_images(alg, cols)
}

fn auto_from_value(doc: &Document, v: &Value, alg: &Arc<LieAlgebra<Poly>>, ring: &Arc<ParamSet>) -> Result<AutoMap<Poly>> {
    let matrix = |v: &Value| -> Result<Vec<Vec<Poly>>> {
        as_array(v, "matrix")?
            .iter()
            .map(|r| as_array(r, "matrix row")?.iter().map(|s| scalar(doc, ring, s)).collect())
            .collect()
    };
    match as_str(field(v, "kind")?, "kind")? {
        "inner" => {
            let a = matrix(field(v, "A")?)?;
            if a.len() != 2 || a.iter().any(|r| r.len() != 2) {
                return Err(Error::Shape { expected: 2, got: a.len() });
            }
            let a = InnerAuto::new([[a[0][0].clone(), a[0][1].clone()], [a[1][0].clone(), a[1][1].clone()]])?;
            make_inner(alg, &a)
        }
        "psi" => make_psi(alg, &scalar(doc, ring, field(v, "theta")?)?),
        "matrix" => AutoMap::new(alg, Matrix::from_rows(matrix(field(v, "matrix")?)?)?),
        "compose" => {
            let mut out = AutoMap::identity(alg);
            for f in as_array(field(v, "factors")?, "factors")? {
                out = out.compose(&auto_from_value(doc, f, alg, ring)?)?;
            }
            Ok(out)
        }
        other => Err(fmt_err(format!("unknown automorphism kind `{other}`"))),
    }
}

/// `{"kind": "inner", "A": [[..],[..]]}`, `{"kind": "psi", "theta": s}`,
/// `{"kind": "matrix", "matrix": rows}` or `{"kind": "compose", "factors": [..]}`
/// (leftmost factor applied last).
pub fn auto_from_doc(doc: &Document, alg: &Arc<LieAlgebra<Poly>>, ring: &Arc<ParamSet>) -> Result<AutoMap<Poly>> {
    check_algebra(doc, alg)?;
    auto_from_value(doc, &doc.value, alg, ring)
}

fn constraint_json(c: &Constraint) -> Value {
    match c {
        Constraint::Free => json!("free"),
        Constraint::Nonzero => json!("nonzero"),
        Constraint::OneOf(vs) => Value::Array(vs.iter().map(|v| json!(v.to_string())).collect()),
    }
}

/// Header for the parameters `used`, taking constraints from `decls`.
fn params_header(decls: &[ParamDecl], used: &[String]) -> Option<Value> {
    if used.is_empty() {
        return None;
    }
    let mut out = Vec::new();
    for d in decls.iter().filter(|d| used.contains(&d.name)) {
        out.push(json!({"name": d.name, "constraint": constraint_json(&d.constraint)}));
    }
    for u in used.iter().filter(|u| !decls.iter().any(|d| &d.name == *u)) {
        out.push(json!({"name": u, "constraint": "free"}));
    }
    Some(Value::Array(out))
}

fn with_params(obj: Map<String, Value>, decls: &[ParamDecl], used: &[String]) -> Value {
    let mut out = Map::new();
    if let Some(h) = params_header(decls, used) {
        out.insert("params".into(), h);
    }
    out.extend(obj);
    Value::Object(out)
}

pub fn algebra_to_json(alg: &LieAlgebra<Poly>, decls: &[ParamDecl]) -> Value {
    let n = alg.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut out = Map::new();
            for k in 0..n {
                let c = alg.c(i, j, k);
                if !num_traits::Zero::is_zero(c) {
                    out.insert(alg.label(k).into(), json!(c.to_string()));
                }
            }
            if !out.is_empty() {
                brackets.push(json!([alg.label(i), alg.label(j), out]));
            }
        }
    }
    let mut obj = Map::new();
    obj.insert("name".into(), json!(alg.name()));
    obj.insert("basis".into(), json!(alg.basis_labels()));
    obj.insert("brackets".into(), Value::Array(brackets));
    let mut used: Vec<String> = crate::scalar::params_of(alg.structure_constants().iter());
    if let Some(g) = alg.gram() {
        let rows: Vec<Value> = (0..n).map(|i| json!((0..n).map(|j| g.get(i, j).to_string()).collect::<Vec<_>>())).collect();
        obj.insert("gram".into(), Value::Array(rows));
        used.extend(g.params());
        used.sort();
        used.dedup();
    }
    with_params(obj, decls, &used)
}

pub fn tensor_to_json(t: &Tensor2<Poly>, decls: &[ParamDecl]) -> Value {
    let alg = t.algebra();
    let n = alg.dim();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let c = t.get(i, j);
            if !num_traits::Zero::is_zero(c) {
                entries.push(json!([alg.label(i), alg.label(j), c.to_string()]));
            }
        }
    }
    let mut obj = Map::new();
    obj.insert("algebra".into(), json!(alg.name()));
    obj.insert("entries".into(), Value::Array(entries));
    with_params(obj, decls, &t.params())
}

pub fn tensor3_to_json(t: &Tensor3<Poly>) -> Value {
    let alg = t.algebra();
    let n = alg.dim();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = t.get(i, j, k);
                if !num_traits::Zero::is_zero(c) {
                    entries.push(json!([alg.label(i), alg.label(j), alg.label(k), c.to_string()]));
                }
            }
        }
    }
    json!({"algebra": alg.name(), "entries": entries})
}

pub fn op_to_json(r: &LinOp<Poly>, decls: &[ParamDecl]) -> Value {
    let alg = r.algebra();
    let n = alg.dim();
    let mut images = Map::new();
    for k in 0..n {
        let mut img = Map::new();
        for (j, c) in r.matrix().column(k).iter().enumerate() {
            if !num_traits::Zero::is_zero(c) {
                img.insert(alg.label(j).into(), json!(c.to_string()));
            }
        }
        if !img.is_empty() {
            images.insert(alg.label(k).into(), Value::Object(img));
        }
    }
    let mut obj = Map::new();
    obj.insert("algebra".into(), json!(alg.name()));
    obj.insert("images".into(), Value::Object(images));
    with_params(obj, decls, &r.params())
}

/// Pretty JSON with a trailing newline.
pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{make_gl, make_sl2};

    fn ring_of(doc: &Document) -> Arc<ParamSet> {
        union_ring([doc]).unwrap()
    }

    #[test]
    fn algebra_round_trip() {
        for alg in [make_gl::<Poly>(2), make_sl2(), make_gl(3)] {
            let text = to_text(&algebra_to_json(&alg, &[]));
            let doc = read_document(&text).unwrap();
            let back = algebra_from_doc(&doc, &ring_of(&doc)).unwrap();
            assert_eq!(back, alg);
            assert_eq!(to_text(&algebra_to_json(&back, &[])), text);
        }
    }

    #[test]
    fn undeclared_parameter_rejected() {
        let gl2 = Arc::new(make_gl::<Poly>(2));
        let text = r#"{"algebra": "gl2", "params": [{"name": "lambda"}], "entries": [["E", "E", "lambda"]]}"#;
        let doc = read_document(text).unwrap();
        let other = read_document(r#"{"params": [{"name": "theta", "constraint": "nonzero"}]}"#).unwrap();
        let ring = union_ring([&doc, &other]).unwrap();
        let t = tensor_from_doc(&doc, &gl2, &ring).unwrap();
        assert_eq!(t.to_string(), "lambda*E⊗E");
        let bad = read_document(r#"{"algebra": "gl2", "params": [{"name": "lambda"}], "entries": [["E", "E", "theta"]]}"#).unwrap();
        assert!(matches!(tensor_from_doc(&bad, &gl2, &ring), Err(Error::UnknownParam(_))));
        let dup = read_document(r#"{"params": [{"name": "t"}, {"name": "t"}]}"#);
        assert!(matches!(dup, Err(Error::DuplicateParam(_))));
    }

    #[test]
    fn operator_and_auto_documents() {
        let gl2 = Arc::new(make_gl::<Poly>(2));
        let doc = read_document(
            r#"{"algebra": "gl2", "params": [{"name": "lambda"}],
                "images": {"E": {"E": "lambda", "e12": "1"}}}"#,
        )
        .unwrap();
        let ring = ring_of(&doc);
        let r = op_from_doc(&doc, &gl2, &ring).unwrap();
        assert_eq!(r.image(0).to_string(), "lambda*E+e12");
        let text = to_text(&op_to_json(&r, &doc.params));
        let again = read_document(&text).unwrap();
        assert_eq!(op_from_doc(&again, &gl2, &ring).unwrap(), r);

        let auto = read_document(
            r#"{"algebra": "gl2", "kind": "compose", "factors": [
                {"kind": "psi", "theta": "2"}, {"kind": "inner", "A": [["3", "0"], ["0", "1"]]}]}"#,
        )
        .unwrap();
        let phi = auto_from_doc(&auto, &gl2, &ring).unwrap();
        let (th, a) = crate::autos::decompose(&phi).unwrap();
        assert_eq!(th, Poly::from_int(2));
        assert_eq!(a.matrix()[1][1], Poly::ratio(1, 3));
        let bad = read_document(r#"{"algebra": "gl2", "kind": "matrix", "matrix": [["1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","2"]]}"#).unwrap();
        assert!(matches!(auto_from_doc(&bad, &gl2, &ring), Err(Error::NotAutomorphism(_))));
    }

    #[test]
    fn malformed_inputs() {
        let gl2 = Arc::new(make_gl::<Poly>(2));
        let ring = ParamSet::empty();
        assert!(read_document("{").is_err());
        let doc = read_document(r#"{"algebra": "sl2", "entries": []}"#).unwrap();
        assert!(matches!(tensor_from_doc(&doc, &gl2, &ring), Err(Error::AlgebraMismatch { .. })));
        let doc = read_document(r#"{"algebra": "gl2", "entries": [["E", "x", "1"]]}"#).unwrap();
        assert!(matches!(tensor_from_doc(&doc, &gl2, &ring), Err(Error::UnknownLabel(_))));
        let doc = read_document(r#"{"algebra": "gl2", "entries": [["E", "E", "1/0"]]}"#).unwrap();
        assert!(tensor_from_doc(&doc, &gl2, &ring).is_err());
    }
}
