//! Linear operators on a Lie algebra, form adjoints, the tensor↔operator
//! correspondence and the Rota-Baxter family of identities.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::liealg::{same_algebra, Element, LieAlgebra};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;
use crate::tensor::Tensor2;

/// A linear map `L → L`; column `k` of the matrix holds `R(e_k)`.
#[derive(Clone, PartialEq, Debug)]
pub struct LinOp<S> {
    algebra: Arc<LieAlgebra<S>>,
    mat: Matrix<S>,
}

/// The `λ` of `[R(x),R(y)] = R([R(x),y] + [x,R(y)] + λ[x,y])`.
#[derive(Clone, PartialEq, Debug)]
pub struct Weight<S>(pub S);

impl<S: Scalar> Weight<S> {
    pub fn one() -> Self {
        Weight(S::one())
    }

    pub fn value(&self) -> &S {
        &self.0
    }
}

impl<S: Scalar> fmt::Display for Weight<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<S: Scalar> LinOp<S> {
    pub fn new(algebra: &Arc<LieAlgebra<S>>, mat: Matrix<S>) -> Result<Self> {
        let n = algebra.dim();
        if mat.rows() != n || mat.cols() != n {
            return Err(Error::Shape { expected: n, got: if mat.rows() != n { mat.rows() } else { mat.cols() } });
        }
        Ok(Self { algebra: algebra.clone(), mat })
    }

    /// From the coordinate vectors of `R(e_0), R(e_1), …`.
    pub fn from_images(algebra: &Arc<LieAlgebra<S>>, images: Vec<Vec<S>>) -> Result<Self> {
        let n = algebra.dim();
        if images.len() != n {
            return Err(Error::Shape { expected: n, got: images.len() });
        }
        if let Some(bad) = images.iter().find(|v| v.len() != n) {
            return Err(Error::Shape { expected: n, got: bad.len() });
        }
        Ok(Self { algebra: algebra.clone(), mat: Matrix::from_columns(&images) })
    }

    /// From labelled images, e.g. `[("E", &[("E", λ), ("e12", 1)])]`;
    /// unlisted basis elements map to zero.
    pub fn from_labels(algebra: &Arc<LieAlgebra<S>>, images: &[(&str, Vec<(&str, S)>)]) -> Result<Self> {
        let mut mat: Matrix<S> = Matrix::zeros(algebra.dim(), algebra.dim());
        for (src, img) in images {
            let k = algebra.index_of(src)?;
            for (dst, c) in img {
                let j = algebra.index_of(dst)?;
                let v = mat.get(j, k).clone() + c.clone();
                mat.set(j, k, v);
            }
        }
        Ok(Self { algebra: algebra.clone(), mat })
    }

    pub fn identity(algebra: &Arc<LieAlgebra<S>>) -> Self {
        Self { algebra: algebra.clone(), mat: Matrix::identity(algebra.dim()) }
    }

    pub fn zero(algebra: &Arc<LieAlgebra<S>>) -> Self {
        Self { algebra: algebra.clone(), mat: Matrix::zeros(algebra.dim(), algebra.dim()) }
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra<S>> {
        &self.algebra
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.mat
    }

    pub fn image(&self, k: usize) -> Element<S> {
        self.algebra.element(self.mat.column(k)).expect("square")
    }

    pub fn image_coords(&self, x: &[S]) -> Vec<S> {
        self.mat.mul_vec(x)
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    pub fn params(&self) -> Vec<String> {
        self.mat.params()
    }

    pub fn try_map(&self, f: impl FnMut(&S) -> Result<S>) -> Result<Self> {
        Ok(Self { algebra: self.algebra.clone(), mat: self.mat.try_map(f)? })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        same_algebra(&self.algebra, &other.algebra)?;
        Ok(Self { algebra: self.algebra.clone(), mat: self.mat.mul(&other.mat) })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_algebra(&self.algebra, &other.algebra)?;
        Ok(Self { algebra: self.algebra.clone(), mat: self.mat.add(&other.mat) })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        same_algebra(&self.algebra, &other.algebra)?;
        Ok(Self { algebra: self.algebra.clone(), mat: self.mat.sub(&other.mat) })
    }

    pub fn scale(&self, c: &S) -> Self {
        Self { algebra: self.algebra.clone(), mat: self.mat.scale(c) }
    }

    pub(crate) fn with_matrix(&self, mat: Matrix<S>) -> Self {
        Self { algebra: self.algebra.clone(), mat }
    }
}

impl<S: Scalar> fmt::Display for LinOp<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 0..self.algebra.dim() {
            writeln!(f, "R({}) = {}", self.algebra.label(k), self.image(k))?;
        }
        Ok(())
    }
}

pub fn apply<S: Scalar>(r: &LinOp<S>, a: &Element<S>) -> Result<Element<S>> {
    same_algebra(&r.algebra, a.algebra())?;
    r.algebra.element(r.mat.mul_vec(a.coords()))
}

/// `R*` with `ω(R(a), b) = ω(a, R*(b))`: the matrix `G⁻¹RᵀG`.
pub fn adjoint<S: Scalar>(r: &LinOp<S>) -> Result<LinOp<S>> {
    let g = r.algebra.form()?;
    let ginv = r.algebra.gram_inverse()?;
    Ok(r.with_matrix(ginv.mul(&r.mat.transpose()).mul(g)))
}

/// `R(a) = Σ ω(a_i, a) b_i` for `r = Σ a_i⊗b_i`: the matrix `cᵀG`.
pub fn tensor_to_op<S: Scalar>(r: &Tensor2<S>) -> Result<LinOp<S>> {
    let alg = r.algebra();
    let g = alg.form()?;
    alg.gram_inverse()?;
    Ok(LinOp { algebra: alg.clone(), mat: r.to_matrix().transpose().mul(g) })
}

/// `Σ_k f^k⊗R(e_k)`: coefficients `G⁻¹Rᵀ`.
pub fn op_to_tensor<S: Scalar>(r: &LinOp<S>) -> Result<Tensor2<S>> {
    let ginv = r.algebra.gram_inverse()?;
    Tensor2::from_matrix(&r.algebra, &ginv.mul(&r.mat.transpose()))
}

pub fn scale_tensor<S: Scalar>(r: &Tensor2<S>, c: &S) -> Tensor2<S> {
    r.scale(c)
}

/// One basis pair on which an identity fails, with `lhs − rhs`.
#[derive(Clone, PartialEq, Debug)]
pub struct PairDefect<S> {
    pub a: usize,
    pub b: usize,
    pub defect: Element<S>,
}

/// Outcome of checking an identity over basis pairs.
#[derive(Clone, PartialEq, Debug)]
pub struct Residuals<S> {
    pub failures: Vec<PairDefect<S>>,
}

impl<S: Scalar> Residuals<S> {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    /// Every coordinate of every defect, for "is it a nonzero polynomial" tests.
    pub fn residual_entries(&self) -> Vec<S> {
        self.failures.iter().flat_map(|d| d.defect.coords().iter().cloned()).collect()
    }

    /// Report lines `(a, b): defect`.
    pub fn lines(&self) -> Vec<String> {
        self.failures
            .iter()
            .map(|d| {
                let alg = d.defect.algebra();
                format!("({}, {}): {}", alg.label(d.a), alg.label(d.b), d.defect)
            })
            .collect()
    }
}

fn collect_pairs<S: Scalar>(
    alg: &Arc<LieAlgebra<S>>,
    ordered: bool,
    mut defect: impl FnMut(&[S], &[S]) -> Vec<S>,
) -> Residuals<S> {
    let n = alg.dim();
    let unit = |k: usize| {
        let mut v = vec![S::zero(); n];
        v[k] = S::one();
        v
    };
    let mut failures = Vec::new();
    for a in 0..n {
        let start = if ordered { 0 } else { a + 1 };
        for b in start..n {
            let d = defect(&unit(a), &unit(b));
            if d.iter().any(|x| !x.is_zero()) {
                failures.push(PairDefect { a, b, defect: alg.element(d).expect("dim") });
            }
        }
    }
    Residuals { failures }
}

fn vsum<S: Scalar>(vs: &[&[S]]) -> Vec<S> {
    let mut out = vs[0].to_vec();
    for v in &vs[1..] {
        for (o, x) in out.iter_mut().zip(v.iter()) {
            *o = o.clone() + x.clone();
        }
    }
    out
}

fn vsub<S: Scalar>(x: &[S], y: &[S]) -> Vec<S> {
    x.iter().zip(y).map(|(a, b)| a.clone() - b.clone()).collect()
}

/// `[R(x),R(y)] − R([R(x),y] + [x,R(y)] + w[x,y])` on every basis pair.
pub fn check_rb<S: Scalar>(r: &LinOp<S>, w: &Weight<S>) -> Residuals<S> {
    let alg = r.algebra.clone();
    collect_pairs(&alg, false, |x, y| {
        let (rx, ry) = (r.image_coords(x), r.image_coords(y));
        let lhs = alg.bracket_coords(&rx, &ry);
        let xy: Vec<S> = alg.bracket_coords(x, y).into_iter().map(|c| c * w.0.clone()).collect();
        let inner = vsum(&[&alg.bracket_coords(&rx, y), &alg.bracket_coords(x, &ry), &xy]);
        vsub(&lhs, &r.image_coords(&inner))
    })
}

/// `R([a,b]) + R*([a,b]) − [R(a) + R*(a), b]` on every ordered basis pair.
pub fn check_rb3<S: Scalar>(r: &LinOp<S>) -> Result<Residuals<S>> {
    let rs = adjoint(r)?;
    let alg = r.algebra.clone();
    Ok(collect_pairs(&alg, true, |a, b| {
        let ab = alg.bracket_coords(a, b);
        let lhs = vsum(&[&r.image_coords(&ab), &rs.image_coords(&ab)]);
        let s = vsum(&[&r.image_coords(a), &rs.image_coords(a)]);
        vsub(&lhs, &alg.bracket_coords(&s, b))
    }))
}

/// `R([R(a),b] + [R*(a),b] + [a,b])` on every ordered basis pair.
pub fn check_rb1<S: Scalar>(r: &LinOp<S>) -> Result<Residuals<S>> {
    let rs = adjoint(r)?;
    let alg = r.algebra.clone();
    Ok(collect_pairs(&alg, true, |a, b| {
        let inner = vsum(&[
            &alg.bracket_coords(&r.image_coords(a), b),
            &alg.bracket_coords(&rs.image_coords(a), b),
            &alg.bracket_coords(a, b),
        ]);
        r.image_coords(&inner)
    }))
}

/// `R(E) + R*(E)` and whether it is a multiple `γE` of the central element.
#[derive(Clone, PartialEq, Debug)]
pub struct CentralCheck<S> {
    pub holds: bool,
    pub gamma: Option<S>,
    pub sum: Element<S>,
}

pub fn check_us_e<S: Scalar>(r: &LinOp<S>) -> Result<CentralCheck<S>> {
    let e = r.algebra.central_index().ok_or_else(|| Error::NoCentralE(r.algebra.name().to_string()))?;
    let rs = adjoint(r)?;
    let ee = r.algebra.basis_element(e);
    let sum = apply(r, &ee)?.add(&apply(&rs, &ee)?)?;
    let holds = sum.coords().iter().enumerate().all(|(k, c)| k == e || c.is_zero());
    let gamma = holds.then(|| sum.coords()[e].clone());
    Ok(CentralCheck { holds, gamma, sum })
}

/// `R + R* + w·id`.
pub fn theta_map<S: Scalar>(r: &LinOp<S>, w: &Weight<S>) -> Result<LinOp<S>> {
    let rs = adjoint(r)?;
    r.add(&rs)?.add(&LinOp::identity(&r.algebra).scale(&w.0))
}

/// `θ_w([L, L])`. Needs parameter-free entries.
pub fn ideal_i<S: Scalar>(r: &LinOp<S>, w: &Weight<S>) -> Result<Subspace<S>> {
    let mut params = r.params();
    params.extend(w.0.params());
    params.sort();
    params.dedup();
    if !params.is_empty() {
        return Err(Error::NotSpecialized { params });
    }
    let th = theta_map(r, w)?;
    let derived = r.algebra.derived_subalgebra()?;
    let images: Vec<Vec<S>> = derived.basis().iter().map(|v| th.image_coords(v)).collect();
    Subspace::span(r.algebra.dim(), &images)
}

/// The `w` with `(R + R*)|_{[L,L]} = −w·id`, or `NoInvariantWeight`.
pub fn infer_weight<S: Scalar>(r: &LinOp<S>) -> Result<Weight<S>> {
    let m = r.add(&adjoint(r)?)?;
    let derived = r.algebra.derived_subalgebra()?;
    let basis = derived.basis();
    let Some(first) = basis.first() else {
        // Abelian algebra: every weight works; report 0.
        return Ok(Weight(S::zero()));
    };
    // Echelon vectors carry a leading 1; read −w off that coordinate.
    let p = first.iter().position(|c| !c.is_zero()).expect("nonzero basis vector");
    let mv = m.image_coords(first);
    let w = -mv[p].clone().try_div(&first[p]).ok_or(Error::Singular)?;
    for v in basis {
        let mv = m.image_coords(v);
        if mv.iter().zip(v).any(|(a, b)| !(a.clone() + w.clone() * b.clone()).is_zero()) {
            return Err(Error::NoInvariantWeight);
        }
    }
    Ok(Weight(w))
}
