//! Shipped data files equal their generated form byte for byte, and every
//! document round-trips. Set `YBX_UPDATE_DATA=1` to regenerate.

use std::path::PathBuf;
use std::sync::Arc;

use serde_json::Value;
use ybx::catalog::{Constraint, Catalog};
use ybx::formats::{self, ParamDecl};
use ybx::liealg::{make_gl, make_sl2};
use ybx::{GaussRat, LinOp, Poly, Tensor2};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn lambda01() -> Vec<ParamDecl> {
    vec![ParamDecl { name: "lambda".into(), constraint: Constraint::OneOf(vec![GaussRat::from_int(0), GaussRat::from_int(1)]) }]
}

fn generated() -> Vec<(&'static str, Value)> {
    let cat = Catalog::get();
    let gl2: Arc<ybx::SymbolicAlgebra> = cat.gl2.clone();
    let l = cat.var("lambda");
    let t52 = |c: Poly| {
        Tensor2::from_entries(&gl2, &[("E", "E", l.clone()), ("h", "h", c), ("e21", "e12", Poly::from_int(-1))]).unwrap()
    };
    let t31: &LinOp<Poly> = cat.family("T3.1").unwrap().object.as_operator().unwrap();
    vec![
        ("gl2.json", formats::algebra_to_json(&make_gl::<Poly>(2), &[])),
        ("sl2.json", formats::algebra_to_json(&make_sl2::<Poly>(), &[])),
        ("t52proof.json", formats::tensor_to_json(&t52(Poly::ratio(-1, 4)), &lambda01())),
        ("t52statement.json", formats::tensor_to_json(&t52(Poly::ratio(-1, 2)), &lambda01())),
        ("t3line1.json", formats::op_to_json(t31, &[])),
    ]
}

#[test]
fn shipped_files_match_generators() {
    let update = std::env::var_os("YBX_UPDATE_DATA").is_some();
    for (name, doc) in generated() {
        let text = formats::to_text(&doc);
        if update {
            std::fs::write(data(name), &text).unwrap();
        }
        let shipped = std::fs::read_to_string(data(name)).unwrap();
        assert_eq!(shipped, text, "{name} differs from its generator");
        assert_eq!(formats::to_text(&generated().into_iter().find(|(n, _)| *n == name).unwrap().1), text);
    }
}

#[test]
fn shipped_files_round_trip() {
    let alg_doc = formats::read_document(&std::fs::read_to_string(data("gl2.json")).unwrap()).unwrap();
    for name in ["t52proof.json", "t52statement.json", "t3line1.json", "psi2.json", "swap.json"] {
        let text = std::fs::read_to_string(data(name)).unwrap();
        let doc = formats::read_document(&text).unwrap();
        let ring = formats::union_ring([&alg_doc, &doc]).unwrap();
        let alg = Arc::new(formats::algebra_from_doc(&alg_doc, &ring).unwrap());
        if doc.value.get("entries").is_some() {
            let t = formats::tensor_from_doc(&doc, &alg, &ring).unwrap();
            let again = formats::read_document(&formats::to_text(&formats::tensor_to_json(&t, &doc.params))).unwrap();
            assert_eq!(formats::tensor_from_doc(&again, &alg, &ring).unwrap(), t, "{name}");
        } else if doc.value.get("images").is_some() {
            let r = formats::op_from_doc(&doc, &alg, &ring).unwrap();
            let again = formats::read_document(&formats::to_text(&formats::op_to_json(&r, &doc.params))).unwrap();
            assert_eq!(formats::op_from_doc(&again, &alg, &ring).unwrap(), r, "{name}");
        } else {
            let phi = formats::auto_from_doc(&doc, &alg, &ring).unwrap();
            let again = formats::read_document(&text).unwrap();
            assert_eq!(formats::auto_from_doc(&again, &alg, &ring).unwrap(), phi, "{name}");
        }
    }
    for name in ["gl2.json", "sl2.json"] {
        let text = std::fs::read_to_string(data(name)).unwrap();
        let doc = formats::read_document(&text).unwrap();
        let alg = formats::algebra_from_doc(&doc, &formats::union_ring([&doc]).unwrap()).unwrap();
        assert_eq!(formats::to_text(&formats::algebra_to_json(&alg, &[])), text);
    }
}
