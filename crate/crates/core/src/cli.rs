//! The `ybx` command line. [`run`] is the whole program; `main` only prints.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::autos::{act_on_tensor, conjugate_op, AutoMap};
use crate::catalog::{self, Catalog, Which};
use crate::error::Error;
use crate::formats::{self, Document, ParamDecl};
use crate::liealg::{make_gl, make_sl2, validate, LieAlgebra};
use crate::rbop::{adjoint, check_rb, check_rb1, check_rb3, check_us_e, infer_weight, op_to_tensor, tensor_to_op, LinOp, Residuals, Weight};
use crate::scalar::{parse_poly, ParamSet, Poly};
use crate::tensor::{cobracket, cocycle_defects, cojacobi_defects, coskew_defects, cybe_defect, Tensor2};

#[derive(Parser, Debug)]
#[command(name = "ybx", version, about = "Exact checks for Yang-Baxter and Rota-Baxter structures")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct Common {
    /// Algebra file (or the built-in `gl2` / `sl2`).
    #[arg(long, global = true)]
    algebra: Option<PathBuf>,
    #[arg(long, global = true)]
    tensor: Option<PathBuf>,
    #[arg(long, global = true)]
    op: Option<PathBuf>,
    /// Write the result document here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum On {
    Op,
    Tensor,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// C(r) = 0 for --tensor.
    CheckCybe,
    /// Rota-Baxter identity of the given weight for --op.
    CheckRb {
        #[arg(long, default_value = "1")]
        weight: String,
    },
    /// R([a,b]) + R*([a,b]) = [R(a) + R*(a), b].
    CheckRb3,
    /// R([R(a),b] + [R*(a),b] + [a,b]) = 0.
    CheckRb1,
    /// R(E) + R*(E) is a multiple of E.
    #[command(name = "check-usE")]
    CheckUsE,
    InferWeight,
    Adjoint,
    ToTensor,
    ToOperator,
    Cobracket {
        /// Emit δ(e_k) for every basis element as JSON.
        #[arg(long)]
        emit_images: bool,
    },
    /// Cocycle, co-skew and co-Jacobi checks on δ_r.
    CheckBialgebra,
    /// Act by an automorphism (`φ⁻¹∘R∘φ` on operators, `φ⊗φ` on tensors).
    Act {
        #[arg(long)]
        auto: PathBuf,
        #[arg(long, value_enum)]
        on: On,
    },
    Catalog {
        #[command(subcommand)]
        sub: CatalogCmd,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCmd {
    List {
        #[arg(long)]
        which: Option<String>,
    },
    Verify {
        /// Family id, id prefix or group.
        #[arg(long)]
        only: Option<String>,
    },
}

/// Exit code and what to print.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub text: String,
}

impl Output {
    fn input_error(msg: impl std::fmt::Display) -> Self {
        Output { code: 2, text: format!("error: {msg}\n") }
    }
}

pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Output { code, text: e.render().to_string() };
        }
    };
    match execute(cli) {
        Ok(o) => o,
        Err(e) => Output::input_error(e),
    }
}

struct Inputs {
    ring: Arc<ParamSet>,
    decls: Vec<ParamDecl>,
    alg: Option<Arc<LieAlgebra<Poly>>>,
    docs: BTreeMap<&'static str, Document>,
}

fn read(path: &Path) -> Result<Document, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    formats::read_document(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn builtin(path: &Path) -> Option<LieAlgebra<Poly>> {
    if path.exists() {
        return None;
    }
    match path.to_str()? {
        "gl2" => Some(make_gl(2)),
        "sl2" => Some(make_sl2()),
        _ => None,
    }
}

impl Inputs {
    fn load(common: &Common, auto: Option<&Path>) -> Result<Self, String> {
        let mut docs = BTreeMap::new();
        let mut alg_builtin = None;
        if let Some(p) = &common.algebra {
            match builtin(p) {
                Some(a) => alg_builtin = Some(a),
                None => {
                    docs.insert("algebra", read(p)?);
                }
            }
        }
        for (key, path) in [("tensor", common.tensor.as_deref()), ("op", common.op.as_deref()), ("auto", auto)] {
            if let Some(p) = path {
                docs.insert(key, read(p)?);
            }
        }
        let ring = formats::union_ring(docs.values()).map_err(|e| e.to_string())?;
        let mut decls: Vec<ParamDecl> = Vec::new();
        for d in docs.values().flat_map(|d| &d.params) {
            if !decls.iter().any(|x| x.name == d.name) {
                decls.push(d.clone());
            }
        }
        let alg = match (alg_builtin, docs.get("algebra")) {
            (Some(a), _) => Some(a),
            (None, Some(d)) => Some(formats::algebra_from_doc(d, &ring).map_err(|e| format!("algebra: {e}"))?),
            (None, None) => None,
        };
        if let Some(a) = &alg {
            let v = validate(a);
            if !v.is_empty() {
                let v: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                return Err(format!("invalid algebra {}: {}", a.name(), v.join("; ")));
            }
        }
        Ok(Inputs { ring, decls, alg: alg.map(Arc::new), docs })
    }

    fn alg(&self) -> Result<&Arc<LieAlgebra<Poly>>, String> {
        self.alg.as_ref().ok_or_else(|| "--algebra is required".to_string())
    }

    fn doc(&self, key: &str, flag: &str) -> Result<&Document, String> {
        self.docs.get(key).ok_or_else(|| format!("{flag} is required"))
    }

    fn tensor(&self) -> Result<Tensor2<Poly>, String> {
        formats::tensor_from_doc(self.doc("tensor", "--tensor")?, self.alg()?, &self.ring).map_err(|e| format!("tensor: {e}"))
    }

    fn op(&self) -> Result<LinOp<Poly>, String> {
        formats::op_from_doc(self.doc("op", "--op")?, self.alg()?, &self.ring).map_err(|e| format!("operator: {e}"))
    }

    fn auto(&self) -> Result<AutoMap<Poly>, String> {
        formats::auto_from_doc(self.doc("auto", "--auto")?, self.alg()?, &self.ring).map_err(|e| format!("automorphism: {e}"))
    }
}

/// A check verdict in both renderings.
struct Verdict {
    name: String,
    holds: bool,
    lines: Vec<String>,
    extra: Vec<(String, Value)>,
}

impl Verdict {
    fn residuals(name: impl Into<String>, r: &Residuals<Poly>) -> Self {
        Verdict { name: name.into(), holds: r.holds(), lines: r.lines(), extra: vec![] }
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut s = format!("{}: {}\n", self.name, if self.holds { "holds" } else { "fails" });
                for l in &self.lines {
                    s.push_str(&format!("  {l}\n"));
                }
                s
            }
            Format::Json => {
                let mut m = serde_json::Map::new();
                m.insert("check".into(), json!(self.name));
                m.insert("holds".into(), json!(self.holds));
                m.insert("defects".into(), json!(self.lines));
                for (k, v) in &self.extra {
                    m.insert(k.clone(), v.clone());
                }
                formats::to_text(&Value::Object(m))
            }
        }
    }
}

fn verdicts(vs: &[Verdict], format: Format) -> Output {
    let code = if vs.iter().all(|v| v.holds) { 0 } else { 1 };
    let text = match format {
        Format::Text => vs.iter().map(|v| v.render(format)).collect(),
        Format::Json if vs.len() == 1 => vs[0].render(format),
        Format::Json => {
            let items: Vec<Value> =
                vs.iter().map(|v| serde_json::from_str(&v.render(format)).expect("own JSON")).collect();
            formats::to_text(&json!({"holds": code == 0, "checks": items}))
        }
    };
    Output { code, text }
}

/// Result documents go to `--out` when given, otherwise to stdout.
fn emit(common: &Common, doc: Value, text: String) -> Result<Output, String> {
    match &common.out {
        Some(p) => {
            std::fs::write(p, formats::to_text(&doc)).map_err(|e| format!("cannot write {}: {e}", p.display()))?;
            Ok(Output { code: 0, text: format!("wrote {}\n", p.display()) })
        }
        None => Ok(Output {
            code: 0,
            text: match common.format {
                Format::Json => formats::to_text(&doc),
                Format::Text => text,
            },
        }),
    }
}

fn op_text(r: &LinOp<Poly>) -> String {
    format!("{}\n", r.to_string().trim_end())
}

fn execute(cli: Cli) -> Result<Output, Error> {
    let common = &cli.common;
    let auto = match &cli.cmd {
        Cmd::Act { auto, .. } => Some(auto.as_path()),
        _ => None,
    };
    if let Cmd::Catalog { sub } = &cli.cmd {
        return Ok(catalog_cmd(common, sub));
    }
    let inputs = match Inputs::load(common, auto) {
        Ok(i) => i,
        Err(e) => return Ok(Output::input_error(e)),
    };
    match command(&cli.cmd, common, &inputs) {
        Ok(o) => Ok(o),
        Err(e) => Ok(Output::input_error(e)),
    }
}

fn command(cmd: &Cmd, common: &Common, inp: &Inputs) -> Result<Output, String> {
    let f = common.format;
    let e = |e: Error| e.to_string();
    Ok(match cmd {
        Cmd::CheckCybe => {
            let t = inp.tensor()?;
            let d = cybe_defect(&t);
            let entries: Vec<String> = d.nonzero_entries().into_iter().map(|(k, v)| format!("{k}: {v}")).collect();
            let holds = entries.is_empty();
            match f {
                Format::Text if holds => Output { code: 0, text: "CYBE defect: 0\n".into() },
                Format::Text => Output { code: 1, text: format!("CYBE defect:\n  {}\n", entries.join("\n  ")) },
                _ => verdicts(
                    &[Verdict {
                        name: "CYBE defect".into(),
                        holds,
                        lines: entries,
                        extra: vec![("defect".into(), formats::tensor3_to_json(&d))],
                    }],
                    f,
                ),
            }
        }
        Cmd::CheckRb { weight } => {
            let w = parse_poly(&inp.ring, weight).map_err(|err| format!("--weight: {err}"))?;
            let r = inp.op()?;
            let name = format!("Rota-Baxter identity of weight {w}");
            verdicts(&[Verdict::residuals(name, &check_rb(&r, &Weight(w)))], f)
        }
        Cmd::CheckRb3 => verdicts(&[Verdict::residuals("rb3", &check_rb3(&inp.op()?).map_err(e)?)], f),
        Cmd::CheckRb1 => verdicts(&[Verdict::residuals("rb1", &check_rb1(&inp.op()?).map_err(e)?)], f),
        Cmd::CheckUsE => {
            let c = check_us_e(&inp.op()?).map_err(e)?;
            let mut lines = vec![format!("R(E)+R*(E) = {}", c.sum)];
            let mut extra = vec![("sum".into(), json!(c.sum.to_string()))];
            if let Some(g) = &c.gamma {
                lines.push(format!("gamma = {g}"));
                extra.push(("gamma".into(), json!(g.to_string())));
            }
            verdicts(&[Verdict { name: "usE".into(), holds: c.holds, lines, extra }], f)
        }
        Cmd::InferWeight => match infer_weight(&inp.op()?) {
            Ok(w) => match f {
                Format::Text => Output { code: 0, text: format!("weight: {w}\n") },
                Format::Json => Output { code: 0, text: formats::to_text(&json!({"weight": w.to_string()})) },
            },
            Err(Error::NoInvariantWeight) => Output { code: 1, text: "no invariant weight\n".into() },
            Err(err) => return Err(err.to_string()),
        },
        Cmd::Adjoint => {
            let s = adjoint(&inp.op()?).map_err(e)?;
            emit(common, formats::op_to_json(&s, &inp.decls), op_text(&s))?
        }
        Cmd::ToTensor => {
            let t = op_to_tensor(&inp.op()?).map_err(e)?;
            emit(common, formats::tensor_to_json(&t, &inp.decls), format!("{t}\n"))?
        }
        Cmd::ToOperator => {
            let r = tensor_to_op(&inp.tensor()?).map_err(e)?;
            emit(common, formats::op_to_json(&r, &inp.decls), op_text(&r))?
        }
        Cmd::Cobracket { emit_images } => {
            let t = inp.tensor()?;
            let d = cobracket(&t);
            let alg = t.algebra();
            let mut text = String::new();
            let mut images = serde_json::Map::new();
            for (k, img) in d.images().iter().enumerate() {
                text.push_str(&format!("δ({}) = {img}\n", alg.label(k)));
                images.insert(alg.label(k).into(), formats::tensor_to_json(img, &inp.decls)["entries"].clone());
            }
            let doc = json!({"algebra": alg.name(), "images": images});
            if *emit_images && common.out.is_none() {
                Output { code: 0, text: formats::to_text(&doc) }
            } else {
                emit(common, doc, text)?
            }
        }
        Cmd::CheckBialgebra => {
            let t = inp.tensor()?;
            let d = cobracket(&t);
            let alg = t.algebra();
            let cocycle: Vec<String> = cocycle_defects(&d)
                .into_iter()
                .filter(|(_, _, x)| !x.is_zero())
                .map(|(a, b, x)| format!("({}, {}): {x}", alg.label(a), alg.label(b)))
                .collect();
            let coskew: Vec<String> = coskew_defects(&d)
                .into_iter()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| format!("{}: {x}", alg.label(k)))
                .collect();
            let cojacobi: Vec<String> = cojacobi_defects(&d)
                .into_iter()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| format!("{}: {x}", alg.label(k)))
                .collect();
            let v = |name: &str, lines: Vec<String>| Verdict { name: name.into(), holds: lines.is_empty(), lines, extra: vec![] };
            verdicts(&[v("cocycle", cocycle), v("co-skew", coskew), v("co-Jacobi", cojacobi)], f)
        }
        Cmd::Act { on, .. } => {
            let phi = inp.auto()?;
            match on {
                On::Op => {
                    let r = conjugate_op(&phi, &inp.op()?).map_err(e)?;
                    emit(common, formats::op_to_json(&r, &inp.decls), op_text(&r))?
                }
                On::Tensor => {
                    let t = act_on_tensor(&phi, &inp.tensor()?).map_err(e)?;
                    emit(common, formats::tensor_to_json(&t, &inp.decls), format!("{t}\n"))?
                }
            }
        }
        Cmd::Catalog { .. } => unreachable!("handled before loading inputs"),
    })
}

fn catalog_cmd(common: &Common, sub: &CatalogCmd) -> Output {
    let cat = Catalog::get();
    match sub {
        CatalogCmd::List { which } => {
            let groups: Vec<Which> = match which.as_deref().map(str::parse::<Which>) {
                None => Which::ALL.to_vec(),
                Some(Ok(w)) => vec![w],
                Some(Err(e)) => return Output::input_error(e),
            };
            let fams: Vec<&catalog::Family> = groups.iter().flat_map(|&w| cat.list(w)).collect();
            let text = match common.format {
                Format::Text => fams
                    .iter()
                    .map(|f| {
                        let params: Vec<String> = f.params.iter().map(|p| p.to_string()).collect();
                        format!("{:<8} {:<8} [{}] {}\n", f.id, f.object.kind(), params.join(", "), f.object.describe())
                    })
                    .collect(),
                Format::Json => formats::to_text(&Value::Array(
                    fams.iter()
                        .map(|f| {
                            json!({
                                "id": f.id,
                                "which": f.which.name(),
                                "kind": f.object.kind(),
                                "params": f.params.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                                "object": f.object.describe(),
                            })
                        })
                        .collect(),
                )),
            };
            Output { code: 0, text }
        }
        CatalogCmd::Verify { only } => {
            if let Some(s) = only {
                if !cat.families.iter().any(|f| f.id == *s || f.id.starts_with(&format!("{s}.")) || f.which.name() == s) {
                    return Output::input_error(Error::UnknownFamily(s.clone()));
                }
            }
            let report = catalog::verify_selected(only.as_deref());
            let code = if report.ok { 0 } else { 1 };
            let json = formats::to_text(&report.to_json());
            let mut text = match common.format {
                Format::Text => report.summary_table(),
                Format::Json => json.clone(),
            };
            if let Some(p) = &common.out {
                if let Err(e) = std::fs::write(p, &json) {
                    return Output::input_error(format!("cannot write {}: {e}", p.display()));
                }
                if common.format == Format::Text {
                    text.push_str(&format!("report written to {}\n", p.display()));
                }
            }
            Output { code, text }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Output {
        run(std::iter::once("ybx").chain(args.iter().copied()))
    }

    #[test]
    fn flags_and_errors() {
        assert_eq!(run_args(&["check-cybe", "--bogus"]).code, 2);
        assert_eq!(run_args(&["check-cybe", "--algebra", "gl2"]).code, 2);
        assert_eq!(run_args(&["check-cybe", "--algebra", "/nonexistent.json", "--tensor", "x"]).code, 2);
        assert_eq!(run_args(&["--help"]).code, 0);
    }

    #[test]
    fn catalog_list_counts() {
        let o = run_args(&["catalog", "list", "--which", "theorem5"]);
        assert_eq!(o.code, 0);
        assert_eq!(o.text.lines().count(), 3);
        assert_eq!(run_args(&["catalog", "list"]).text.lines().count(), 34);
        assert_eq!(run_args(&["catalog", "list", "--which", "nope"]).code, 2);
        assert_eq!(run_args(&["catalog", "verify", "--only", "T9"]).code, 2);
    }
}
