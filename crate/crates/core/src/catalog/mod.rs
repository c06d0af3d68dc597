//! The classified families of weight-1 Rota-Baxter operators on gl₂ and of
//! CYBE solutions with invariant symmetric part, with their expected
//! verification outcomes.
//!
//! Every family lives over one shared parameter ring so that families can be
//! compared and substituted into one another.

mod verify;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::liealg::{make_gl, make_sl2, LieAlgebra};
use crate::rbop::LinOp;
use crate::scalar::{GaussRat, ParamSet, Poly};
use crate::tensor::Tensor2;

pub use verify::{
    verify_all, verify_family, verify_selected, CatalogReport, CheckRow, FamilyReport, Section, SectionItem,
};

/// Parameter names of the shared catalog ring, in declaration order.
pub const PARAMS: [&str; 8] = ["lambda", "theta", "t", "alpha", "alpha1", "alpha2", "beta", "c"];

/// Which table a family comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Which {
    Theorem3,
    Theorem4,
    Reduced,
    Theorem5,
    Sl2,
}

impl Which {
    pub const ALL: [Which; 5] = [Which::Theorem3, Which::Theorem4, Which::Reduced, Which::Theorem5, Which::Sl2];

    pub fn name(self) -> &'static str {
        match self {
            Which::Theorem3 => "theorem3",
            Which::Theorem4 => "theorem4",
            Which::Reduced => "reduced",
            Which::Theorem5 => "theorem5",
            Which::Sl2 => "sl2",
        }
    }
}

impl FromStr for Which {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Which::ALL
            .into_iter()
            .find(|w| w.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Constraint {
    Free,
    Nonzero,
    OneOf(Vec<GaussRat>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ParamSpec {
    pub name: String,
    pub constraint: Constraint,
}

impl fmt::Display for ParamSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.constraint {
            Constraint::Free => write!(f, "{}", self.name),
            Constraint::Nonzero => write!(f, "{}≠0", self.name),
            Constraint::OneOf(vs) => {
                let vs: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
                write!(f, "{}∈{{{}}}", self.name, vs.join(","))
            }
        }
    }
}

/// The kinds of verification run on families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// Rota-Baxter identity of weight 1.
    Rb,
    /// `R(E) + R*(E) = γE`.
    UsE,
    Rb3,
    Rb1,
    /// `R*` is Rota-Baxter of weight 1.
    AdjointRb,
    /// `C_L(r) = 0` (for operators: of the associated tensor).
    Cybe,
    SymInvariant,
    SymNonzero,
    Cocycle,
    Coskew,
    Cojacobi,
}

impl Check {
    pub const OPERATOR: [Check; 6] = [Check::Rb, Check::UsE, Check::Rb3, Check::Rb1, Check::AdjointRb, Check::Cybe];
    pub const TENSOR: [Check; 6] =
        [Check::Cybe, Check::SymInvariant, Check::SymNonzero, Check::Cocycle, Check::Coskew, Check::Cojacobi];
    pub const COLUMNS: [Check; 11] = [
        Check::Rb,
        Check::UsE,
        Check::Rb3,
        Check::Rb1,
        Check::AdjointRb,
        Check::Cybe,
        Check::SymInvariant,
        Check::SymNonzero,
        Check::Cocycle,
        Check::Coskew,
        Check::Cojacobi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Rb => "rb",
            Check::UsE => "usE",
            Check::Rb3 => "rb3",
            Check::Rb1 => "rb1",
            Check::AdjointRb => "adjoint-rb",
            Check::Cybe => "cybe",
            Check::SymInvariant => "sym-invariant",
            Check::SymNonzero => "sym-nonzero",
            Check::Cocycle => "cocycle",
            Check::Coskew => "coskew",
            Check::Cojacobi => "cojacobi",
        }
    }
}

/// An expected verdict.
#[derive(Clone, Debug, PartialEq)]
pub enum Expect {
    /// Holds identically on every instance.
    Holds,
    /// Fails (residual not identically zero) on every instance.
    Fails,
    /// Holds exactly when `param = value`: identically zero after the
    /// substitution, nonzero symbolically and at shifted sample points.
    Iff { param: String, value: Poly },
    /// Holds after substituting `param = value`; nothing claimed elsewhere.
    HoldsAt { param: String, value: Poly },
    /// For a finite-set parameter: holds at `holds`, fails at the others.
    When { param: String, holds: Vec<GaussRat> },
}

impl fmt::Display for Expect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expect::Holds => write!(f, "holds"),
            Expect::Fails => write!(f, "fails"),
            Expect::Iff { param, value } => write!(f, "holds iff {param}={value}"),
            Expect::HoldsAt { param, value } => write!(f, "holds at {param}={value}"),
            Expect::When { param, holds } => {
                let vs: Vec<String> = holds.iter().map(|v| v.to_string()).collect();
                write!(f, "holds iff {param}∈{{{}}}", vs.join(","))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Expectation {
    pub check: Check,
    pub expect: Expect,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum FamilyObject {
    Operator(LinOp<Poly>),
    Tensor(Tensor2<Poly>),
}

impl FamilyObject {
    pub fn kind(&self) -> &'static str {
        match self {
            FamilyObject::Operator(_) => "operator",
            FamilyObject::Tensor(_) => "tensor",
        }
    }

    pub fn as_operator(&self) -> Option<&LinOp<Poly>> {
        match self {
            FamilyObject::Operator(r) => Some(r),
            FamilyObject::Tensor(_) => None,
        }
    }

    pub fn as_tensor(&self) -> Option<&Tensor2<Poly>> {
        match self {
            FamilyObject::Tensor(t) => Some(t),
            FamilyObject::Operator(_) => None,
        }
    }

    pub fn substitute(&self, assignment: &BTreeMap<String, Poly>) -> Result<Self> {
        Ok(match self {
            FamilyObject::Operator(r) => FamilyObject::Operator(r.try_map(|p| p.substitute(assignment))?),
            FamilyObject::Tensor(t) => FamilyObject::Tensor(t.try_map(|p| p.substitute(assignment))?),
        })
    }

    pub fn describe(&self) -> String {
        match self {
            FamilyObject::Operator(r) => {
                let alg = r.algebra();
                (0..alg.dim())
                    .map(|k| format!("R({})={}", alg.label(k), r.image(k)))
                    .collect::<Vec<_>>()
                    .join(", ")
            }
            FamilyObject::Tensor(t) => format!("r={t}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Family {
    pub id: String,
    pub which: Which,
    pub params: Vec<ParamSpec>,
    pub object: FamilyObject,
    pub expected: Vec<Expectation>,
}

impl Family {
    pub fn expectation(&self, check: Check) -> Option<&Expectation> {
        self.expected.iter().find(|e| e.check == check)
    }

    pub fn param(&self, name: &str) -> Option<&ParamSpec> {
        self.params.iter().find(|p| p.name == name)
    }

    /// Assignments of every finite-set parameter, in declaration order.
    pub fn expansions(&self) -> Vec<BTreeMap<String, GaussRat>> {
        let mut out = vec![BTreeMap::new()];
        for p in &self.params {
            if let Constraint::OneOf(vs) = &p.constraint {
                out = out
                    .into_iter()
                    .flat_map(|m| {
                        vs.iter().map(move |v| {
                            let mut m = m.clone();
                            m.insert(p.name.clone(), v.clone());
                            m
                        })
                    })
                    .collect();
            }
        }
        out
    }

    /// Substitutes the assigned parameters, checking their constraints; the
    /// rest stay symbolic.
    pub fn specialize(&self, assignment: &BTreeMap<String, GaussRat>) -> Result<FamilyObject> {
        for (name, v) in assignment {
            let spec = self.param(name).ok_or_else(|| Error::UnknownParam(format!("{name} in {}", self.id)))?;
            match &spec.constraint {
                Constraint::Free => {}
                Constraint::Nonzero if v.is_zero() => {
                    return Err(Error::Constraint(format!("{name} must be nonzero in {}", self.id)));
                }
                Constraint::Nonzero => {}
                Constraint::OneOf(vs) if !vs.contains(v) => {
                    return Err(Error::Constraint(format!("{spec} required in {}", self.id)));
                }
                Constraint::OneOf(_) => {}
            }
        }
        let subs = assignment.iter().map(|(k, v)| (k.clone(), Poly::constant(v.clone()))).collect();
        self.object.substitute(&subs)
    }
}

/// All families with the shared ring and algebras.
pub struct Catalog {
    pub ring: Arc<ParamSet>,
    pub gl2: Arc<LieAlgebra<Poly>>,
    pub sl2: Arc<LieAlgebra<Poly>>,
    pub families: Vec<Family>,
}

impl Catalog {
    /// The process-wide catalog (built once).
    pub fn get() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(Catalog::build)
    }

    pub fn var(&self, name: &str) -> Poly {
        self.ring.var(name).expect("catalog parameter")
    }

    pub fn family(&self, id: &str) -> Result<&Family> {
        self.families.iter().find(|f| f.id == id).ok_or_else(|| Error::UnknownFamily(id.to_string()))
    }

    pub fn list(&self, which: Which) -> Vec<&Family> {
        self.families.iter().filter(|f| f.which == which).collect()
    }

    fn build() -> Catalog {
        let ring = ParamSet::new(PARAMS).expect("valid names");
        let gl2: Arc<LieAlgebra<Poly>> = Arc::new(make_gl(2));
        let sl2: Arc<LieAlgebra<Poly>> = Arc::new(make_sl2());
        let b = Builder { ring: ring.clone(), gl2: gl2.clone(), sl2: sl2.clone() };
        let mut families = Vec::new();
        families.extend(b.theorem3());
        families.extend(b.theorem4());
        families.extend(b.reduced());
        families.extend(b.theorem5());
        families.push(b.sl2_corollary());
        Catalog { ring, gl2, sl2, families }
    }
}

pub fn list_families(which: Which) -> Vec<&'static Family> {
    Catalog::get().list(which)
}

/// Fully specialised operator or tensor; every parameter must be assigned.
pub fn instantiate(f: &Family, assignment: &BTreeMap<String, GaussRat>) -> Result<FamilyObject> {
    if let Some(missing) = f.params.iter().find(|p| !assignment.contains_key(&p.name)) {
        return Err(Error::MissingParam(format!("{} in {}", missing.name, f.id)));
    }
    f.specialize(assignment)
}

struct Builder {
    ring: Arc<ParamSet>,
    gl2: Arc<LieAlgebra<Poly>>,
    sl2: Arc<LieAlgebra<Poly>>,
}

type Images<'a> = Vec<(&'a str, Vec<(&'a str, Poly)>)>;

fn int(n: i64) -> Poly {
    Poly::from_int(n)
}

fn expect(check: Check, expect: Expect) -> Expectation {
    Expectation { check, expect, note: None }
}

fn noted(check: Check, e: Expect, note: &str) -> Expectation {
    Expectation { check, expect: e, note: Some(note.to_string()) }
}

fn free(name: &str) -> ParamSpec {
    ParamSpec { name: name.into(), constraint: Constraint::Free }
}

fn nonzero(name: &str) -> ParamSpec {
    ParamSpec { name: name.into(), constraint: Constraint::Nonzero }
}

fn one_of(name: &str, vs: &[i64]) -> ParamSpec {
    ParamSpec { name: name.into(), constraint: Constraint::OneOf(vs.iter().map(|&v| GaussRat::from_int(v)).collect()) }
}

impl Builder {
    fn v(&self, name: &str) -> Poly {
        self.ring.var(name).expect("catalog parameter")
    }

    fn op(&self, images: Images<'_>) -> FamilyObject {
        FamilyObject::Operator(LinOp::from_labels(&self.gl2, &images).expect("gl2 labels"))
    }

    fn family(&self, id: String, which: Which, params: Vec<ParamSpec>, object: FamilyObject, expected: Vec<Expectation>) -> Family {
        Family { id, which, params, object, expected }
    }

    /// Minus the identity on sl₂.
    fn minus_sl2(&self) -> Images<'_> {
        vec![("h", vec![("h", int(-1))]), ("e12", vec![("e12", int(-1))]), ("e21", vec![("e21", int(-1))])]
    }

    /// Image lists for the 13 lines; `th` is the T4 scaling θ
    /// (pass 1 for T3).
    fn lines(&self, th: &Poly) -> Vec<(Images<'_>, Vec<ParamSpec>)> {
        let (l, t, a, a1, a2) = (self.v("lambda"), self.v("t"), self.v("alpha"), self.v("alpha1"), self.v("alpha2"));
        let e_plus = |x: &'static str| ("E", vec![("E", l.clone()), (x, th.clone())]);
        let le = ("E", vec![("E", l.clone())]);
        let m12 = ("e12", vec![("e12", int(-1))]);
        let with_minus = |first| {
            let mut v = vec![first];
            v.extend(self.minus_sl2());
            v
        };
        vec![
            (vec![e_plus("e12")], vec![free("lambda")]),
            (with_minus(e_plus("e12")), vec![free("lambda")]),
            (vec![e_plus("h")], vec![free("lambda")]),
            (with_minus(e_plus("h")), vec![free("lambda")]),
            (
                vec![e_plus("h"), ("h", vec![("E", a1.clone()), ("h", a2.clone())]), m12.clone()],
                vec![free("lambda"), free("alpha1"), free("alpha2")],
            ),
            (
                vec![le.clone(), ("e12", vec![("e12", int(-1)), ("h", t.clone())])],
                vec![free("lambda"), one_of("t", &[0, 1])],
            ),
            (
                vec![le.clone(), ("e12", vec![("e12", int(-1)), ("h", t.clone()), ("E", th.clone())])],
                vec![free("lambda"), one_of("t", &[0, 1])],
            ),
            (
                vec![le.clone(), ("h", vec![("E", th.clone())]), ("e12", vec![("e12", int(-1)), ("h", int(1)), ("E", a.clone())])],
                vec![free("lambda"), free("alpha")],
            ),
            (
                vec![le.clone(), ("h", vec![("E", th.clone())]), ("e12", vec![("e12", int(-1)), ("E", th.clone())])],
                vec![free("lambda")],
            ),
            (vec![le.clone(), ("h", vec![("h", t.clone())]), m12.clone()], vec![free("lambda"), nonzero("t")]),
            (
                vec![le.clone(), ("h", vec![("h", t.clone()), ("E", th.clone())]), m12.clone()],
                vec![free("lambda"), nonzero("t")],
            ),
            (
                vec![le.clone(), ("h", vec![("h", int(-1)), ("E", a.clone())]), ("e21", vec![("E", th.clone())]), m12.clone()],
                vec![free("lambda"), free("alpha")],
            ),
            (
                vec![le, ("h", vec![("h", t.clone())]), ("e12", vec![("e12", t.clone())]), ("e21", vec![("e21", t)])],
                vec![free("lambda"), one_of("t", &[0, -1])],
            ),
        ]
    }

    fn theorem3(&self) -> Vec<Family> {
        self.lines(&int(1))
            .into_iter()
            .enumerate()
            .map(|(i, (images, params))| {
                self.family(format!("T3.{}", i + 1), Which::Theorem3, params, self.op(images), vec![expect(Check::Rb, Expect::Holds)])
            })
            .collect()
    }

    fn theorem4(&self) -> Vec<Family> {
        let th = self.v("theta");
        // Lines whose θ-dependence is only through ψ_θ carry no θ at all.
        let theta_lines = [1, 2, 3, 4, 5, 7, 8, 9, 11, 12];
        self.lines(&th)
            .into_iter()
            .enumerate()
            .map(|(i, (images, mut params))| {
                let line = i + 1;
                if theta_lines.contains(&line) {
                    params.insert(1, nonzero("theta"));
                }
                let use_e = match line {
                    5 => Expect::Iff { param: "alpha1".into(), value: -th.clone() },
                    6 | 10 | 13 => Expect::Holds,
                    _ => Expect::Fails,
                };
                self.family(
                    format!("T4.{line}"),
                    Which::Theorem4,
                    params,
                    self.op(images),
                    vec![expect(Check::Rb, Expect::Holds), expect(Check::UsE, use_e)],
                )
            })
            .collect()
    }

    fn reduced(&self) -> Vec<Family> {
        let (l, th, t, a2) = (self.v("lambda"), self.v("theta"), self.v("t"), self.v("alpha2"));
        let half = Poly::ratio(-1, 2);
        let le = ("E", vec![("E", l.clone())]);
        let m12 = ("e12", vec![("e12", int(-1))]);
        let base = |extra: Vec<Expectation>| {
            let mut v = vec![expect(Check::Rb, Expect::Holds), expect(Check::UsE, Expect::Holds)];
            v.extend(extra);
            v
        };
        vec![
            self.family(
                "RED.1".into(),
                Which::Reduced,
                vec![free("lambda"), nonzero("theta"), free("alpha2")],
                self.op(vec![
                    ("E", vec![("E", l.clone()), ("h", th.clone())]),
                    ("h", vec![("E", -th.clone()), ("h", a2)]),
                    m12.clone(),
                ]),
                base(vec![
                    expect(Check::Rb3, Expect::Iff { param: "alpha2".into(), value: half.clone() }),
                    expect(Check::Rb1, Expect::HoldsAt { param: "alpha2".into(), value: half.clone() }),
                ]),
            ),
            self.family(
                "RED.2".into(),
                Which::Reduced,
                vec![free("lambda"), one_of("t", &[0, 1])],
                self.op(vec![le.clone(), ("e12", vec![("e12", int(-1)), ("h", t.clone())])]),
                base(vec![expect(Check::Rb3, Expect::Fails)]),
            ),
            self.family(
                "RED.3".into(),
                Which::Reduced,
                vec![free("lambda"), nonzero("t")],
                self.op(vec![le.clone(), ("h", vec![("h", t.clone())]), m12]),
                base(vec![
                    expect(Check::Rb3, Expect::Iff { param: "t".into(), value: half.clone() }),
                    expect(Check::Rb1, Expect::HoldsAt { param: "t".into(), value: half }),
                ]),
            ),
            self.family(
                "RED.4".into(),
                Which::Reduced,
                vec![free("lambda"), one_of("t", &[0, -1])],
                self.op(vec![le, ("h", vec![("h", t.clone())]), ("e12", vec![("e12", t.clone())]), ("e21", vec![("e21", t)])]),
                base(vec![
                    expect(Check::Rb3, Expect::Holds),
                    expect(Check::Rb1, Expect::When { param: "t".into(), holds: vec![GaussRat::zero()] }),
                ]),
            ),
        ]
    }

    fn tensor(&self, alg: &Arc<LieAlgebra<Poly>>, entries: &[(&str, &str, Poly)]) -> FamilyObject {
        FamilyObject::Tensor(Tensor2::from_entries(alg, entries).expect("labels"))
    }

    fn bialgebra(sym_nonzero: Expectation) -> Vec<Expectation> {
        vec![
            expect(Check::Cybe, Expect::Holds),
            expect(Check::SymInvariant, Expect::Holds),
            sym_nonzero,
            expect(Check::Cocycle, Expect::Holds),
            expect(Check::Coskew, Expect::Holds),
            expect(Check::Cojacobi, Expect::Holds),
        ]
    }

    pub(crate) fn t5_statement1(&self, l: Poly, th: Poly) -> Vec<(&'static str, &'static str, Poly)> {
        vec![
            ("E", "E", l),
            ("E", "h", th.clone()),
            ("h", "E", -th),
            ("h", "h", Poly::ratio(-1, 4)),
            ("e21", "e12", int(-1)),
        ]
    }

    fn theorem5(&self) -> Vec<Family> {
        let (l, th) = (self.v("lambda"), self.v("theta"));
        let lam01 = || one_of("lambda", &[0, 1]);
        vec![
            self.family(
                "T5.1".into(),
                Which::Theorem5,
                vec![lam01(), nonzero("theta")],
                self.tensor(&self.gl2, &self.t5_statement1(l.clone(), th)),
                Self::bialgebra(expect(Check::SymNonzero, Expect::Holds)),
            ),
            self.family(
                "T5.2".into(),
                Which::Theorem5,
                vec![lam01()],
                self.tensor(&self.gl2, &[("E", "E", l.clone()), ("h", "h", Poly::ratio(-1, 4)), ("e21", "e12", int(-1))]),
                {
                    let mut v = Self::bialgebra(expect(Check::SymNonzero, Expect::Holds));
                    v[0].note = Some("stored with h⊗h coefficient -1/4; the stated -1/2 fails the CYBE (see coefficient sweep)".into());
                    v
                },
            ),
            self.family(
                "T5.3".into(),
                Which::Theorem5,
                vec![lam01()],
                self.tensor(&self.gl2, &[("E", "E", l)]),
                Self::bialgebra(noted(
                    Check::SymNonzero,
                    Expect::When { param: "lambda".into(), holds: vec![GaussRat::one()] },
                    "lambda=0 gives r=0, whose symmetric part vanishes",
                )),
            ),
        ]
    }

    fn sl2_corollary(&self) -> Family {
        self.family(
            "SL2.COR".into(),
            Which::Sl2,
            vec![],
            self.tensor(&self.sl2, &[("h", "h", Poly::ratio(1, 4)), ("e12", "e21", int(1))]),
            Self::bialgebra(expect(Check::SymNonzero, Expect::Holds)),
        )
    }
}

/// `Σ` of a T5.1-shaped tensor at arbitrary `(λ, θ)` polynomials.
pub fn t5_statement1(cat: &Catalog, l: Poly, th: Poly) -> Tensor2<Poly> {
    let b = Builder { ring: cat.ring.clone(), gl2: cat.gl2.clone(), sl2: cat.sl2.clone() };
    Tensor2::from_entries(&cat.gl2, &b.t5_statement1(l, th)).expect("labels")
}

/// `λE⊗E + c·h⊗h − e21⊗e12`.
pub fn t5_sweep(cat: &Catalog, l: Poly, c: Poly) -> Tensor2<Poly> {
    Tensor2::from_entries(&cat.gl2, &[("E", "E", l), ("h", "h", c), ("e21", "e12", int(-1))]).expect("labels")
}
