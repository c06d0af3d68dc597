//! Lie algebras given by structure constants, with an optional invariant form.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

/// A finite-dimensional Lie algebra `[e_i, e_j] = Σ_k c[i][j][k] e_k`,
/// optionally with a Gram matrix `g[i][j] = ω(e_i, e_j)`.
#[derive(Clone, PartialEq, Debug)]
pub struct LieAlgebra<S> {
    name: String,
    basis: Vec<String>,
    structure: Vec<S>,
    gram: Option<Matrix<S>>,
    central: Option<usize>,
}

/// One failed axiom, as reported by [`validate`].
#[derive(Clone, PartialEq, Debug)]
pub enum Violation<S> {
    /// `c[i][j][k] != -c[j][i][k]`
    Antisymmetry { i: String, j: String, k: String },
    /// Nonzero Jacobiator `[[a,b],c] + [[b,c],a] + [[c,a],b]`.
    Jacobi { triple: [String; 3], jacobiator: Vec<S> },
    FormNotSymmetric { i: String, j: String },
    /// `ω([a,b],c) != ω(a,[b,c])`
    FormNotInvariant { triple: [String; 3] },
    FormDegenerate,
}

impl<S: Scalar> fmt::Display for Violation<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Antisymmetry { i, j, k } => {
                write!(f, "antisymmetry fails: c[{i}][{j}][{k}] != -c[{j}][{i}][{k}]")
            }
            Violation::Jacobi { triple: [a, b, c], jacobiator } => {
                let parts: Vec<String> = jacobiator.iter().map(|x| x.to_string()).collect();
                write!(f, "Jacobi identity fails at ({a}, {b}, {c}): [{}]", parts.join(", "))
            }
            Violation::FormNotSymmetric { i, j } => write!(f, "form not symmetric at ({i}, {j})"),
            Violation::FormNotInvariant { triple: [a, b, c] } => {
                write!(f, "form not invariant at ({a}, {b}, {c})")
            }
            Violation::FormDegenerate => write!(f, "form is degenerate (det of Gram is 0)"),
        }
    }
}

impl<S: Scalar> LieAlgebra<S> {
    /// `structure` is indexed `(i * dim + j) * dim + k`.
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        structure: Vec<S>,
        gram: Option<Matrix<S>>,
    ) -> Result<Self> {
        let dim = basis.len();
        if dim == 0 {
            return Err(Error::Format("empty basis".into()));
        }
        for (k, label) in basis.iter().enumerate() {
            if basis[..k].contains(label) {
                return Err(Error::Format(format!("duplicate basis label `{label}`")));
            }
        }
        if structure.len() != dim * dim * dim {
            return Err(Error::Shape { expected: dim * dim * dim, got: structure.len() });
        }
        if let Some(g) = &gram {
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::Shape { expected: dim, got: g.rows() });
            }
        }
        let mut alg = Self { name: name.into(), basis, structure, gram, central: None };
        alg.central = alg.basis.iter().position(|l| l == "E").filter(|&e| alg.is_central(e));
        Ok(alg)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis
    }

    pub fn label(&self, k: usize) -> &str {
        &self.basis[k]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.basis
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &S {
        let n = self.dim();
        &self.structure[(i * n + j) * n + k]
    }

    pub fn structure_constants(&self) -> &[S] {
        &self.structure
    }

    pub fn gram(&self) -> Option<&Matrix<S>> {
        self.gram.as_ref()
    }

    pub fn form(&self) -> Result<&Matrix<S>> {
        self.gram.as_ref().ok_or_else(|| Error::NoForm(self.name.clone()))
    }

    /// Index of the designated central element `E`, if the basis has one.
    pub fn central_index(&self) -> Option<usize> {
        self.central
    }

    pub fn with_gram(mut self, gram: Option<Matrix<S>>) -> Self {
        self.gram = gram;
        self
    }

    pub fn with_structure_constant(mut self, i: usize, j: usize, k: usize, v: S) -> Self {
        let n = self.dim();
        self.structure[(i * n + j) * n + k] = v;
        self
    }

    fn is_central(&self, e: usize) -> bool {
        let n = self.dim();
        (0..n).all(|j| (0..n).all(|k| self.c(e, j, k).is_zero() && self.c(j, e, k).is_zero()))
    }

    /// Coordinates of `[x, y]`.
    pub fn bracket_coords(&self, x: &[S], y: &[S]) -> Vec<S> {
        let n = self.dim();
        let mut out = vec![S::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi.clone() * yj.clone();
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        *o = o.clone() + w.clone() * c.clone();
                    }
                }
            }
        }
        out
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<S> {
        let n = self.dim();
        (0..n).map(|k| self.c(i, j, k).clone()).collect()
    }

    pub fn form_coords(&self, x: &[S], y: &[S]) -> Result<S> {
        let g = self.form()?;
        let gy = g.mul_vec(y);
        Ok(x.iter().zip(gy).fold(S::zero(), |acc, (a, b)| acc + a.clone() * b))
    }

    /// `G⁻¹`, or `DegenerateForm`.
    pub fn gram_inverse(&self) -> Result<Matrix<S>> {
        let g = self.form()?;
        match g.inverse() {
            Err(Error::Singular) => Err(Error::DegenerateForm(self.name.clone())),
            other => other,
        }
    }

    /// `[L, L]` as a subspace in reduced echelon form.
    pub fn derived_subalgebra(&self) -> Result<Subspace<S>> {
        let n = self.dim();
        let mut vecs = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let b = self.bracket_basis(i, j);
                if b.iter().any(|x| !x.is_zero()) {
                    vecs.push(b);
                }
            }
        }
        Subspace::span(n, &vecs)
    }

    pub fn basis_element(self: &Arc<Self>, k: usize) -> Element<S> {
        let mut coords = vec![S::zero(); self.dim()];
        coords[k] = S::one();
        Element { algebra: self.clone(), coords }
    }

    pub fn basis_by_label(self: &Arc<Self>, label: &str) -> Result<Element<S>> {
        Ok(self.basis_element(self.index_of(label)?))
    }

    pub fn element(self: &Arc<Self>, coords: Vec<S>) -> Result<Element<S>> {
        if coords.len() != self.dim() {
            return Err(Error::Shape { expected: self.dim(), got: coords.len() });
        }
        Ok(Element { algebra: self.clone(), coords })
    }

    pub fn zero_element(self: &Arc<Self>) -> Element<S> {
        Element { algebra: self.clone(), coords: vec![S::zero(); self.dim()] }
    }

    pub(crate) fn fmt_coords(&self, coords: &[S]) -> String {
        fmt_combination(coords.iter().zip(self.basis.iter().map(String::as_str)))
    }
}

/// Formats `Σ c_k · label_k`, e.g. `2*e12-h` or `(lambda+1)*E`.
pub(crate) fn fmt_combination<'a, S: Scalar + 'a>(
    terms: impl IntoIterator<Item = (&'a S, &'a str)>,
) -> String {
    let mut out = String::new();
    for (c, label) in terms {
        if c.is_zero() {
            continue;
        }
        let s = c.to_string();
        let piece = if s == "1" {
            label.to_string()
        } else if s == "-1" {
            format!("-{label}")
        } else if s[1..].contains(['+', '-']) {
            format!("({s})*{label}")
        } else {
            format!("{s}*{label}")
        };
        if !out.is_empty() && !piece.starts_with('-') {
            out.push('+');
        }
        out.push_str(&piece);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub(crate) fn same_algebra<S: PartialEq>(a: &Arc<LieAlgebra<S>>, b: &Arc<LieAlgebra<S>>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch { left: a.name.clone(), right: b.name.clone() })
    }
}

/// An element of a Lie algebra in basis coordinates.
#[derive(Clone, PartialEq, Debug)]
pub struct Element<S> {
    algebra: Arc<LieAlgebra<S>>,
    coords: Vec<S>,
}

impl<S: Scalar> Element<S> {
    pub fn algebra(&self) -> &Arc<LieAlgebra<S>> {
        &self.algebra
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<S> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(S::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_algebra(&self.algebra, &other.algebra)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(Self { algebra: self.algebra.clone(), coords })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self { algebra: self.algebra.clone(), coords: self.coords.iter().map(|a| -a.clone()).collect() }
    }

    pub fn scale(&self, c: &S) -> Self {
        Self {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn bracket(&self, other: &Self) -> Result<Self> {
        bracket(self, other)
    }
}

impl<S: Scalar> fmt::Display for Element<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.algebra.fmt_coords(&self.coords))
    }
}

pub fn bracket<S: Scalar>(x: &Element<S>, y: &Element<S>) -> Result<Element<S>> {
    same_algebra(&x.algebra, &y.algebra)?;
    let coords = x.algebra.bracket_coords(&x.coords, &y.coords);
    Ok(Element { algebra: x.algebra.clone(), coords })
}

pub fn form_eval<S: Scalar>(x: &Element<S>, y: &Element<S>) -> Result<S> {
    same_algebra(&x.algebra, &y.algebra)?;
    x.algebra.form_coords(&x.coords, &y.coords)
}

/// Every violated axiom instance. An empty report means the algebra (and its
/// form, if any) is a valid quadratic Lie algebra.
pub fn validate<S: Scalar>(alg: &LieAlgebra<S>) -> Vec<Violation<S>> {
    let n = alg.dim();
    let lab = |k: usize| alg.basis[k].clone();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                let s = alg.c(i, j, k).clone() + alg.c(j, i, k).clone();
                if !s.is_zero() {
                    out.push(Violation::Antisymmetry { i: lab(i), j: lab(j), k: lab(k) });
                }
            }
        }
    }
    let unit = |k: usize| {
        let mut v = vec![S::zero(); n];
        v[k] = S::one();
        v
    };
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                let (ea, eb, ec) = (unit(a), unit(b), unit(c));
                let t1 = alg.bracket_coords(&alg.bracket_basis(a, b), &ec);
                let t2 = alg.bracket_coords(&alg.bracket_basis(b, c), &ea);
                let t3 = alg.bracket_coords(&alg.bracket_basis(c, a), &eb);
                let jac: Vec<S> = (0..n).map(|k| t1[k].clone() + t2[k].clone() + t3[k].clone()).collect();
                if jac.iter().any(|x| !x.is_zero()) {
                    out.push(Violation::Jacobi { triple: [lab(a), lab(b), lab(c)], jacobiator: jac });
                }
            }
        }
    }
    if let Some(g) = &alg.gram {
        for i in 0..n {
            for j in (i + 1)..n {
                if g.get(i, j) != g.get(j, i) {
                    out.push(Violation::FormNotSymmetric { i: lab(i), j: lab(j) });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = alg.bracket_basis(a, b);
                for c in 0..n {
                    let bc = alg.bracket_basis(b, c);
                    let lhs = alg.form_coords(&ab, &unit(c)).expect("form present");
                    let rhs = alg.form_coords(&unit(a), &bc).expect("form present");
                    if lhs != rhs {
                        out.push(Violation::FormNotInvariant { triple: [lab(a), lab(b), lab(c)] });
                    }
                }
            }
        }
        if g.determinant().is_zero() {
            out.push(Violation::FormDegenerate);
        }
    }
    out
}

/// Dual basis `f^k` with `ω(f^k, e_j) = δ_kj`.
pub fn dual_basis<S: Scalar>(alg: &Arc<LieAlgebra<S>>) -> Result<Vec<Element<S>>> {
    let ginv = alg.gram_inverse()?;
    (0..alg.dim()).map(|k| alg.element(ginv.row(k))).collect()
}

/// 2×2 matrix of a gl₂ element with coordinates in the basis (E, h, e12, e21).
pub fn gl2_matrix<S: Scalar>(coords: &[S]) -> [[S; 2]; 2] {
    let (e, h, x, y) = (&coords[0], &coords[1], &coords[2], &coords[3]);
    [[e.clone() + h.clone(), x.clone()], [y.clone(), e.clone() - h.clone()]]
}

/// Inverse of [`gl2_matrix`].
pub fn gl2_coords<S: Scalar>(m: &[[S; 2]; 2]) -> Vec<S> {
    let half = S::from_ratio(1, 2);
    vec![
        (m[0][0].clone() + m[1][1].clone()) * half.clone(),
        (m[0][0].clone() - m[1][1].clone()) * half,
        m[0][1].clone(),
        m[1][0].clone(),
    ]
}

pub(crate) fn mat2_mul<S: Scalar>(a: &[[S; 2]; 2], b: &[[S; 2]; 2]) -> [[S; 2]; 2] {
    let e = |i: usize, j: usize| a[i][0].clone() * b[0][j].clone() + a[i][1].clone() * b[1][j].clone();
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn mat2_sub<S: Scalar>(a: &[[S; 2]; 2], b: &[[S; 2]; 2]) -> [[S; 2]; 2] {
    let e = |i: usize, j: usize| a[i][j].clone() - b[i][j].clone();
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// gl_n with the trace form. For n = 2 the basis is (E, h, e12, e21) with
/// E the identity and h = e11 - e22; otherwise the matrix units e_ij.
pub fn make_gl<S: Scalar>(n: usize) -> LieAlgebra<S> {
    assert!(n >= 1, "gl_n needs n >= 1");
    if n == 2 {
        return make_gl2();
    }
    let label = |i: usize, j: usize| {
        if n > 9 {
            format!("e{}_{}", i + 1, j + 1)
        } else {
            format!("e{}{}", i + 1, j + 1)
        }
    };
    let units: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let d = units.len();
    let idx = |i: usize, j: usize| i * n + j;
    let mut structure = vec![S::zero(); d * d * d];
    // [e_ij, e_kl] = δ_jk e_il − δ_li e_kj
    for (a, &(i, j)) in units.iter().enumerate() {
        for (b, &(k, l)) in units.iter().enumerate() {
            if j == k {
                let t = &mut structure[(a * d + b) * d + idx(i, l)];
                *t = t.clone() + S::one();
            }
            if l == i {
                let t = &mut structure[(a * d + b) * d + idx(k, j)];
                *t = t.clone() - S::one();
            }
        }
    }
    let gram = Matrix::from_fn(d, d, |a, b| {
        let ((i, j), (k, l)) = (units[a], units[b]);
        if j == k && i == l {
            S::one()
        } else {
            S::zero()
        }
    });
    let basis = units.iter().map(|&(i, j)| label(i, j)).collect();
    LieAlgebra::new(format!("gl{n}"), basis, structure, Some(gram)).expect("well-formed gl_n")
}

fn gl2_basis_matrices<S: Scalar>() -> Vec<[[S; 2]; 2]> {
    (0..4)
        .map(|k| {
            let mut c = vec![S::zero(); 4];
            c[k] = S::one();
            gl2_matrix(&c)
        })
        .collect()
}

fn from_matrices<S: Scalar>(name: &str, labels: &[&str], mats: &[[[S; 2]; 2]], project: impl Fn(Vec<S>) -> Vec<S>) -> LieAlgebra<S> {
    let d = mats.len();
    let mut structure = Vec::with_capacity(d * d * d);
    for a in mats {
        for b in mats {
            let comm = mat2_sub(&mat2_mul(a, b), &mat2_mul(b, a));
            structure.extend(project(gl2_coords(&comm)));
        }
    }
    let gram = Matrix::from_fn(d, d, |i, j| {
        let p = mat2_mul(&mats[i], &mats[j]);
        p[0][0].clone() + p[1][1].clone()
    });
    LieAlgebra::new(name, labels.iter().map(|s| s.to_string()).collect(), structure, Some(gram))
        .expect("well-formed algebra")
}

fn make_gl2<S: Scalar>() -> LieAlgebra<S> {
    from_matrices("gl2", &["E", "h", "e12", "e21"], &gl2_basis_matrices(), |c| c)
}

/// sl₂ ⊂ gl₂ with basis (h, e12, e21) and the restricted trace form.
pub fn make_sl2<S: Scalar>() -> LieAlgebra<S> {
    let mats = gl2_basis_matrices::<S>();
    from_matrices("sl2", &["h", "e12", "e21"], &mats[1..], |c| c[1..].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussRat;
    use num_traits::Zero;

    type Q = GaussRat;

    fn gl2() -> Arc<LieAlgebra<Q>> {
        Arc::new(make_gl(2))
    }

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    #[test]
    fn gl2_brackets() {
        let g = gl2();
        let (e, h, x, y) = (g.basis_element(0), g.basis_element(1), g.basis_element(2), g.basis_element(3));
        assert_eq!(bracket(&h, &x).unwrap(), x.scale(&q(2)));
        assert_eq!(bracket(&x, &y).unwrap(), h);
        assert!(bracket(&e, &h).unwrap().is_zero());
        assert_eq!(bracket(&h, &y).unwrap(), y.scale(&q(-2)));
        assert_eq!(g.central_index(), Some(0));
    }

    #[test]
    fn gl2_gram() {
        let g = gl2();
        let gram = g.gram().unwrap();
        let expect = [[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]];
        for (i, row) in expect.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(gram.get(i, j), &q(v), "({i},{j})");
            }
        }
    }

    #[test]
    fn gl2_center_is_span_of_identity() {
        let g = gl2();
        let n = g.dim();
        // Solve [z, e_j] = 0 for all j.
        let rows: Vec<Vec<Q>> = (0..n)
            .flat_map(|j| (0..n).map(move |k| (j, k)))
            .map(|(j, k)| (0..n).map(|i| g.c(i, j, k).clone()).collect())
            .collect();
        let center = Matrix::from_rows(rows).unwrap().nullspace().unwrap();
        assert_eq!(center, vec![vec![q(1), q(0), q(0), q(0)]]);
    }

    #[test]
    fn sl2_is_three_dimensional() {
        let s: Arc<LieAlgebra<Q>> = Arc::new(make_sl2());
        assert_eq!(s.dim(), 3);
        assert_eq!(s.basis_labels(), &["h", "e12", "e21"]);
        let (h, x, y) = (s.basis_element(0), s.basis_element(1), s.basis_element(2));
        assert_eq!(bracket(&x, &y).unwrap(), h);
        assert_eq!(form_eval(&h, &h).unwrap(), q(2));
        assert_eq!(form_eval(&x, &y).unwrap(), q(1));
        assert_eq!(s.central_index(), None);
    }

    #[test]
    fn gl_small_n_are_valid() {
        for n in 1..=3 {
            let g: LieAlgebra<Q> = make_gl(n);
            assert!(validate(&g).is_empty(), "gl{n}: {:?}", validate(&g));
        }
        assert!(validate(&make_sl2::<Q>()).is_empty());
    }

    #[test]
    fn corrupted_bracket_breaks_jacobi() {
        let g: LieAlgebra<Q> = make_gl(2);
        let g = g.with_structure_constant(1, 2, 2, q(-2)).with_structure_constant(2, 1, 2, q(2));
        let report = validate(&g);
        assert!(report.iter().any(|v| matches!(
            v,
            Violation::Jacobi { triple, .. } if triple == &["h".to_string(), "e12".into(), "e21".into()]
        )), "{report:?}");
        assert!(!report.iter().any(|v| matches!(v, Violation::Antisymmetry { .. })));
    }

    #[test]
    fn zeroed_identity_norm_is_degenerate() {
        let g: LieAlgebra<Q> = make_gl(2);
        let mut gram = g.gram().unwrap().clone();
        gram.set(0, 0, q(0));
        let g = g.with_gram(Some(gram));
        assert_eq!(validate(&g), vec![Violation::FormDegenerate]);
        let g = Arc::new(g);
        assert!(matches!(dual_basis(&g), Err(Error::DegenerateForm(_))));
    }

    #[test]
    fn dual_basis_values() {
        let g = gl2();
        let f = dual_basis(&g).unwrap();
        assert_eq!(f[0], g.basis_element(0).scale(&Q::ratio(1, 2)));
        assert_eq!(f[1], g.basis_element(1).scale(&Q::ratio(1, 2)));
        assert_eq!(f[2], g.basis_element(3));
        assert_eq!(f[3], g.basis_element(2));
        for (k, fk) in f.iter().enumerate() {
            for j in 0..4 {
                let d = form_eval(fk, &g.basis_element(j)).unwrap();
                assert_eq!(d, if k == j { q(1) } else { q(0) });
            }
        }
    }

    #[test]
    fn trace_form_values() {
        let g = gl2();
        let (e, h, x, y) = (g.basis_element(0), g.basis_element(1), g.basis_element(2), g.basis_element(3));
        assert_eq!(form_eval(&h, &h).unwrap(), q(2));
        assert!(form_eval(&e, &x).unwrap().is_zero());
        let s = x.add(&y).unwrap();
        assert_eq!(form_eval(&s, &s).unwrap(), q(2));
    }

    #[test]
    fn mismatched_algebras() {
        let g = gl2();
        let s: Arc<LieAlgebra<Q>> = Arc::new(make_sl2());
        let r = bracket(&g.basis_element(0), &s.basis_element(0));
        assert!(matches!(r, Err(Error::AlgebraMismatch { .. })));
        let bare = Arc::new(make_gl::<Q>(2).with_gram(None));
        assert!(matches!(form_eval(&bare.basis_element(0), &bare.basis_element(0)), Err(Error::NoForm(_))));
    }

    #[test]
    fn derived_subalgebra_of_gl2_is_sl2() {
        let d = gl2().derived_subalgebra().unwrap();
        assert_eq!(d.dim(), 3);
        assert!(!d.contains(&[q(1), q(0), q(0), q(0)]).unwrap());
    }

    #[test]
    fn element_display() {
        let g = gl2();
        let v = g.element(vec![q(0), q(-1), q(2), q(0)]).unwrap();
        assert_eq!(v.to_string(), "-h+2*e12");
        assert_eq!(g.zero_element().to_string(), "0");
    }
}
