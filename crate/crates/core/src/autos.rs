//! Automorphisms of gl₂: inner ones `x ↦ AxA⁻¹`, the centre scaling `ψ_θ`,
//! and their (different) actions on operators and on tensors.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::liealg::{gl2_coords, gl2_matrix, mat2_mul, same_algebra, Element, LieAlgebra};
use crate::linalg::Matrix;
use crate::rbop::{adjoint, op_to_tensor, LinOp};
use crate::scalar::Scalar;
use crate::tensor::{Tensor2, Tensor3};

/// An invertible, bracket-preserving map; column `k` holds `φ(e_k)`.
#[derive(Clone, PartialEq, Debug)]
pub struct AutoMap<S> {
    algebra: Arc<LieAlgebra<S>>,
    mat: Matrix<S>,
}

/// The 2×2 matrix `A` of `x ↦ AxA⁻¹`.
#[derive(Clone, PartialEq, Debug)]
pub struct InnerAuto<S> {
    a: [[S; 2]; 2],
}

impl<S: Scalar> InnerAuto<S> {
    pub fn new(a: [[S; 2]; 2]) -> Result<Self> {
        let inner = Self { a };
        if inner.det().is_zero() {
            return Err(Error::Singular);
        }
        Ok(inner)
    }

    pub fn diag(x: S, y: S) -> Result<Self> {
        Self::new([[x, S::zero()], [S::zero(), y]])
    }

    pub fn matrix(&self) -> &[[S; 2]; 2] {
        &self.a
    }

    pub fn det(&self) -> S {
        self.a[0][0].clone() * self.a[1][1].clone() - self.a[0][1].clone() * self.a[1][0].clone()
    }

    fn adj(&self) -> [[S; 2]; 2] {
        let a = &self.a;
        [[a[1][1].clone(), -a[0][1].clone()], [-a[1][0].clone(), a[0][0].clone()]]
    }
}

fn is_gl2<S: Scalar>(alg: &LieAlgebra<S>) -> bool {
    alg.basis_labels() == ["E", "h", "e12", "e21"]
}

fn is_sl2<S: Scalar>(alg: &LieAlgebra<S>) -> bool {
    alg.basis_labels() == ["h", "e12", "e21"]
}

impl<S: Scalar> AutoMap<S> {
    /// Validates invertibility and `φ([a,b]) = [φ(a),φ(b)]` on basis pairs.
    pub fn new(algebra: &Arc<LieAlgebra<S>>, mat: Matrix<S>) -> Result<Self> {
        let n = algebra.dim();
        if mat.rows() != n || mat.cols() != n {
            return Err(Error::Shape { expected: n, got: mat.rows() });
        }
        if mat.determinant().is_zero() {
            return Err(Error::NotAutomorphism("matrix is singular".into()));
        }
        for a in 0..n {
            for b in (a + 1)..n {
                let lhs = mat.mul_vec(&algebra.bracket_basis(a, b));
                let rhs = algebra.bracket_coords(&mat.column(a), &mat.column(b));
                if lhs != rhs {
                    return Err(Error::NotAutomorphism(format!(
                        "bracket not preserved at ({}, {})",
                        algebra.label(a),
                        algebra.label(b)
                    )));
                }
            }
        }
        Ok(Self { algebra: algebra.clone(), mat })
    }

    pub fn identity(algebra: &Arc<LieAlgebra<S>>) -> Self {
        Self { algebra: algebra.clone(), mat: Matrix::identity(algebra.dim()) }
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra<S>> {
        &self.algebra
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.mat
    }

    pub fn apply(&self, x: &Element<S>) -> Result<Element<S>> {
        same_algebra(&self.algebra, x.algebra())?;
        self.algebra.element(self.mat.mul_vec(x.coords()))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        same_algebra(&self.algebra, &other.algebra)?;
        Ok(Self { algebra: self.algebra.clone(), mat: self.mat.mul(&other.mat) })
    }

    /// `φ⁻¹` as `adj(φ)/det(φ)`; fails when the quotient leaves the scalar ring.
    pub fn inverse(&self) -> Result<Self> {
        Ok(Self { algebra: self.algebra.clone(), mat: self.inverse_matrix()? })
    }

    fn inverse_matrix(&self) -> Result<Matrix<S>> {
        let det = self.mat.determinant();
        self.mat.adjugate().try_map(|x| x.try_div(&det).ok_or(Error::InexactDivision))
    }

    pub fn as_op(&self) -> LinOp<S> {
        LinOp::new(&self.algebra, self.mat.clone()).expect("square")
    }
}

/// `x ↦ AxA⁻¹` on gl₂ in the basis (E, h, e12, e21), or on sl₂.
pub fn make_inner<S: Scalar>(algebra: &Arc<LieAlgebra<S>>, a: &InnerAuto<S>) -> Result<AutoMap<S>> {
    let offset = if is_gl2(algebra) {
        0
    } else if is_sl2(algebra) {
        1
    } else {
        return Err(Error::AlgebraMismatch { left: algebra.name().into(), right: "gl2".into() });
    };
    let det = a.det();
    let adj = a.adj();
    let n = algebra.dim();
    let mut cols = Vec::with_capacity(n);
    for k in 0..n {
        let mut c = vec![S::zero(); 4];
        c[k + offset] = S::one();
        let conj = mat2_mul(&mat2_mul(&a.a, &gl2_matrix(&c)), &adj);
        let coords = gl2_coords(&conj)
            .into_iter()
            .map(|x| x.try_div(&det).ok_or(Error::InexactDivision))
            .collect::<Result<Vec<S>>>()?;
        cols.push(coords[offset..].to_vec());
    }
    Ok(AutoMap { algebra: algebra.clone(), mat: Matrix::from_columns(&cols) })
}

/// `ψ_θ`: `E ↦ θE`, identity on the trace-free part.
pub fn make_psi<S: Scalar>(algebra: &Arc<LieAlgebra<S>>, theta: &S) -> Result<AutoMap<S>> {
    if theta.is_zero() {
        return Err(Error::ZeroTheta);
    }
    let e = algebra.central_index().ok_or_else(|| Error::NoCentralE(algebra.name().into()))?;
    let mut mat = Matrix::identity(algebra.dim());
    mat.set(e, e, theta.clone());
    Ok(AutoMap { algebra: algebra.clone(), mat })
}

/// `ω(φ(x), φ(y)) = ω(x, y)` on all basis pairs, i.e. `φᵀGφ = G`.
pub fn is_orthogonal<S: Scalar>(phi: &AutoMap<S>) -> Result<bool> {
    let g = phi.algebra.form()?;
    Ok(&phi.mat.transpose().mul(g).mul(&phi.mat) == g)
}

/// `(φ⊗φ)r`.
pub fn act_on_tensor<S: Scalar>(phi: &AutoMap<S>, r: &Tensor2<S>) -> Result<Tensor2<S>> {
    same_algebra(&phi.algebra, r.algebra())?;
    Ok(r.transform(&phi.mat, &phi.mat))
}

/// `(φ⊗φ⊗φ)t`.
pub fn act_on_tensor3<S: Scalar>(phi: &AutoMap<S>, t: &Tensor3<S>) -> Result<Tensor3<S>> {
    same_algebra(&phi.algebra, t.algebra())?;
    Ok(t.transform(&phi.mat))
}

/// `φ⁻¹∘R∘φ`, computed as `adj(φ)·R·φ / det(φ)` so symbolic `ψ_θ` stays polynomial.
pub fn conjugate_op<S: Scalar>(phi: &AutoMap<S>, r: &LinOp<S>) -> Result<LinOp<S>> {
    same_algebra(&phi.algebra, r.algebra())?;
    let det = phi.mat.determinant();
    let m = phi.mat.adjugate().mul(r.matrix()).mul(&phi.mat);
    let m = m.try_map(|x| x.try_div(&det).ok_or(Error::InexactDivision))?;
    LinOp::new(&phi.algebra, m)
}

/// The tensor of `φ⁻¹∘R∘φ`, next to the two candidate actions on the tensor of `R`.
#[derive(Clone, PartialEq, Debug)]
pub struct ConjugateTensor<S> {
    /// `op_to_tensor(φ⁻¹∘R∘φ)`.
    pub tensor: Tensor2<S>,
    /// `(φ*⊗φ⁻¹) op_to_tensor(R)`.
    pub via_adjoint: Tensor2<S>,
    /// `(φ⁻¹⊗φ⁻¹) op_to_tensor(R)`.
    pub via_inverse: Tensor2<S>,
}

impl<S: Scalar> ConjugateTensor<S> {
    /// The `φ*⊗φ⁻¹` formula reproduces the conjugated operator's tensor.
    pub fn formula_agrees(&self) -> bool {
        self.tensor == self.via_adjoint
    }

    /// The conjugated tensor lies in the `Aut`-orbit action `φ⁻¹⊗φ⁻¹`.
    pub fn is_tensor_conjugate(&self) -> bool {
        self.tensor == self.via_inverse
    }
}

pub fn tensor_of_conjugate<S: Scalar>(phi: &AutoMap<S>, r: &LinOp<S>) -> Result<ConjugateTensor<S>> {
    let tensor = op_to_tensor(&conjugate_op(phi, r)?)?;
    let base = op_to_tensor(r)?;
    let star = adjoint(&phi.as_op())?;
    let inv = phi.inverse_matrix()?;
    Ok(ConjugateTensor {
        tensor,
        via_adjoint: base.transform(star.matrix(), &inv),
        via_inverse: base.transform(&inv, &inv),
    })
}

/// Splits an automorphism of gl₂ as `ψ_θ ∘ (x ↦ AxA⁻¹)`, with `A` scaled so
/// its first nonzero entry (row-major) is 1.
pub fn decompose<S: Scalar>(phi: &AutoMap<S>) -> Result<(S, InnerAuto<S>)> {
    let alg = &phi.algebra;
    if !is_gl2(alg) {
        return Err(Error::AlgebraMismatch { left: alg.name().into(), right: "gl2".into() });
    }
    let params = phi.mat.params();
    if !params.is_empty() {
        return Err(Error::NotSpecialized { params });
    }
    let img_e = phi.mat.column(0);
    if img_e[1..].iter().any(|c| !c.is_zero()) {
        return Err(Error::NotAutomorphism("φ(E) is not a multiple of E".into()));
    }
    let theta = img_e[0].clone();
    let theta_inv = theta.try_inv().ok_or(Error::ZeroTheta)?;
    // ϕ = ψ_{1/θ}∘φ fixes E; solve A·x = ϕ(x)·A for x ∈ {h, e12, e21}.
    let mut rows: Vec<Vec<S>> = Vec::new();
    for k in 1..4 {
        let mut c = vec![S::zero(); 4];
        c[k] = S::one();
        let x = gl2_matrix(&c);
        let mut img = phi.mat.column(k);
        img[0] = img[0].clone() * theta_inv.clone();
        let y = gl2_matrix(&img);
        let units: Vec<[[S; 2]; 2]> = (0..4)
            .map(|u| {
                let mut m = [[S::zero(), S::zero()], [S::zero(), S::zero()]];
                m[u / 2][u % 2] = S::one();
                let ax = mat2_mul(&m, &x);
                let ya = mat2_mul(&y, &m);
                [[ax[0][0].clone() - ya[0][0].clone(), ax[0][1].clone() - ya[0][1].clone()],
                 [ax[1][0].clone() - ya[1][0].clone(), ax[1][1].clone() - ya[1][1].clone()]]
            })
            .collect();
        for e in 0..4 {
            rows.push(units.iter().map(|m| m[e / 2][e % 2].clone()).collect());
        }
    }
    let null = Matrix::from_rows(rows)?.nullspace()?;
    let sol = null.first().ok_or(Error::InnerNotRational)?;
    let lead = sol.iter().find(|c| !c.is_zero()).ok_or(Error::InnerNotRational)?.clone();
    let v: Vec<S> = sol
        .iter()
        .map(|c| c.try_div(&lead).ok_or(Error::InnerNotRational))
        .collect::<Result<_>>()?;
    let a = InnerAuto::new([[v[0].clone(), v[1].clone()], [v[2].clone(), v[3].clone()]])
        .map_err(|_| Error::InnerNotRational)?;
    Ok((theta, a))
}
