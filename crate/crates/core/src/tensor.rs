//! `L⊗L` and `L⊗L⊗L` as dense coefficient arrays; the ad-action, the CYBE
//! defect and the bialgebra axioms for an induced cobracket.
//!
//! The action of `L` on tensors is the right action `[x₁⊗…⊗x_n, y] =
//! Σ_i x₁⊗…⊗[x_i, y]⊗…⊗x_n`. With this orientation
//! `ad_act(t, [x, y]) = ad_act(ad_act(t, x), y) − ad_act(ad_act(t, y), x)`;
//! a basis-exhaustive test below pins that sign.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::liealg::{fmt_combination, same_algebra, Element, LieAlgebra};
use crate::linalg::Matrix;
use crate::scalar::{params_of, Scalar};

/// `Σ coeff[i][j] e_i⊗e_j`, stored row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct Tensor2<S> {
    algebra: Arc<LieAlgebra<S>>,
    coeff: Vec<S>,
}

/// `Σ coeff[i][j][k] e_i⊗e_j⊗e_k`.
#[derive(Clone, PartialEq, Debug)]
pub struct Tensor3<S> {
    algebra: Arc<LieAlgebra<S>>,
    coeff: Vec<S>,
}

impl<S: Scalar> Tensor2<S> {
    pub fn zeros(algebra: &Arc<LieAlgebra<S>>) -> Self {
        let n = algebra.dim();
        Self { algebra: algebra.clone(), coeff: vec![S::zero(); n * n] }
    }

    pub fn from_fn(algebra: &Arc<LieAlgebra<S>>, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let n = algebra.dim();
        let coeff = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self { algebra: algebra.clone(), coeff }
    }

    pub fn from_matrix(algebra: &Arc<LieAlgebra<S>>, m: &Matrix<S>) -> Result<Self> {
        let n = algebra.dim();
        if m.rows() != n || m.cols() != n {
            return Err(Error::Shape { expected: n, got: m.rows() });
        }
        Ok(Self::from_fn(algebra, |i, j| m.get(i, j).clone()))
    }

    /// Sum of `c·e_i⊗e_j` over labelled entries; repeated pairs accumulate.
    pub fn from_entries(algebra: &Arc<LieAlgebra<S>>, entries: &[(&str, &str, S)]) -> Result<Self> {
        let mut t = Self::zeros(algebra);
        for (a, b, c) in entries {
            let (i, j) = (algebra.index_of(a)?, algebra.index_of(b)?);
            let v = t.get(i, j).clone() + c.clone();
            t.set(i, j, v);
        }
        Ok(t)
    }

    /// `a⊗b`.
    pub fn simple(a: &Element<S>, b: &Element<S>) -> Result<Self> {
        same_algebra(a.algebra(), b.algebra())?;
        let (x, y) = (a.coords(), b.coords());
        Ok(Self::from_fn(a.algebra(), |i, j| x[i].clone() * y[j].clone()))
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra<S>> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.coeff[i * self.dim() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        let n = self.dim();
        self.coeff[i * n + j] = v;
    }

    pub fn coefficients(&self) -> &[S] {
        &self.coeff
    }

    pub fn to_matrix(&self) -> Matrix<S> {
        let n = self.dim();
        Matrix::from_fn(n, n, |i, j| self.get(i, j).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.iter().all(S::is_zero)
    }

    pub fn params(&self) -> Vec<String> {
        params_of(&self.coeff)
    }

    pub fn map(&self, f: impl FnMut(&S) -> S) -> Self {
        Self { algebra: self.algebra.clone(), coeff: self.coeff.iter().map(f).collect() }
    }

    pub fn try_map(&self, f: impl FnMut(&S) -> Result<S>) -> Result<Self> {
        Ok(Self { algebra: self.algebra.clone(), coeff: self.coeff.iter().map(f).collect::<Result<_>>()? })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_algebra(&self.algebra, &other.algebra)?;
        let coeff = self.coeff.iter().zip(&other.coeff).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(Self { algebra: self.algebra.clone(), coeff })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|a| -a.clone())
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    /// `(A⊗B)t`, i.e. coefficients `A·c·Bᵀ`.
    pub fn transform(&self, a: &Matrix<S>, b: &Matrix<S>) -> Self {
        let c = self.to_matrix();
        let out = a.mul(&c).mul(&b.transpose());
        Self::from_fn(&self.algebra, |i, j| out.get(i, j).clone())
    }

    /// Nonzero entries as `(label_i⊗label_j, coefficient)`.
    pub fn nonzero_entries(&self) -> Vec<(String, S)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let c = self.get(i, j);
                if !c.is_zero() {
                    out.push((format!("{}⊗{}", self.algebra.label(i), self.algebra.label(j)), c.clone()));
                }
            }
        }
        out
    }
}

impl<S: Scalar> Tensor3<S> {
    pub fn zeros(algebra: &Arc<LieAlgebra<S>>) -> Self {
        let n = algebra.dim();
        Self { algebra: algebra.clone(), coeff: vec![S::zero(); n * n * n] }
    }

    pub fn from_fn(algebra: &Arc<LieAlgebra<S>>, mut f: impl FnMut(usize, usize, usize) -> S) -> Self {
        let n = algebra.dim();
        let coeff = (0..n * n * n).map(|k| f(k / (n * n), (k / n) % n, k % n)).collect();
        Self { algebra: algebra.clone(), coeff }
    }

    pub fn from_entries(algebra: &Arc<LieAlgebra<S>>, entries: &[(&str, &str, &str, S)]) -> Result<Self> {
        let mut t = Self::zeros(algebra);
        for (a, b, c, v) in entries {
            let (i, j, k) = (algebra.index_of(a)?, algebra.index_of(b)?, algebra.index_of(c)?);
            let idx = t.index(i, j, k);
            t.coeff[idx] = t.coeff[idx].clone() + v.clone();
        }
        Ok(t)
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        let n = self.dim();
        (i * n + j) * n + k
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra<S>> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &S {
        &self.coeff[self.index(i, j, k)]
    }

    fn add_at(&mut self, i: usize, j: usize, k: usize, v: S) {
        let idx = self.index(i, j, k);
        self.coeff[idx] = self.coeff[idx].clone() + v;
    }

    pub fn coefficients(&self) -> &[S] {
        &self.coeff
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.iter().all(S::is_zero)
    }

    pub fn params(&self) -> Vec<String> {
        params_of(&self.coeff)
    }

    pub fn map(&self, f: impl FnMut(&S) -> S) -> Self {
        Self { algebra: self.algebra.clone(), coeff: self.coeff.iter().map(f).collect() }
    }

    pub fn try_map(&self, f: impl FnMut(&S) -> Result<S>) -> Result<Self> {
        Ok(Self { algebra: self.algebra.clone(), coeff: self.coeff.iter().map(f).collect::<Result<_>>()? })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_algebra(&self.algebra, &other.algebra)?;
        let coeff = self.coeff.iter().zip(&other.coeff).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(Self { algebra: self.algebra.clone(), coeff })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.map(|a| -a.clone()))
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    /// `(M⊗M⊗M)t`.
    pub fn transform(&self, m: &Matrix<S>) -> Self {
        let n = self.dim();
        let mut step = self.coeff.clone();
        // Apply M to one slot at a time.
        for slot in 0..3 {
            let mut next = vec![S::zero(); n * n * n];
            for (idx, c) in step.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut ijk = [idx / (n * n), (idx / n) % n, idx % n];
                let src = ijk[slot];
                for a in 0..n {
                    let w = m.get(a, src);
                    if w.is_zero() {
                        continue;
                    }
                    ijk[slot] = a;
                    let t = (ijk[0] * n + ijk[1]) * n + ijk[2];
                    next[t] = next[t].clone() + w.clone() * c.clone();
                }
            }
            step = next;
        }
        Self { algebra: self.algebra.clone(), coeff: step }
    }

    pub fn nonzero_entries(&self) -> Vec<(String, S)> {
        let n = self.dim();
        let lab = |k: usize| self.algebra.label(k);
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        out.push((format!("{}⊗{}⊗{}", lab(i), lab(j), lab(k)), c.clone()));
                    }
                }
            }
        }
        out
    }
}

fn fmt_entries<S: Scalar>(f: &mut fmt::Formatter<'_>, entries: Vec<(String, S)>) -> fmt::Result {
    let s = fmt_combination(entries.iter().map(|(l, c)| (c, l.as_str())));
    write!(f, "{s}")
}

impl<S: Scalar> fmt::Display for Tensor2<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_entries(f, self.nonzero_entries())
    }
}

impl<S: Scalar> fmt::Display for Tensor3<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_entries(f, self.nonzero_entries())
    }
}

/// Matrix of `x ↦ [x, y]`: entry `(a, i)` is the `e_a` coefficient of `[e_i, y]`.
fn right_ad<S: Scalar>(alg: &LieAlgebra<S>, y: &[S]) -> Matrix<S> {
    let n = alg.dim();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        let mut unit = vec![S::zero(); n];
        unit[i] = S::one();
        for (a, v) in alg.bracket_coords(&unit, y).into_iter().enumerate() {
            m.set(a, i, v);
        }
    }
    m
}

/// Tensors carrying the slot-wise right action of their algebra.
pub trait AdAction<S: Scalar>: Sized {
    fn algebra_ref(&self) -> &Arc<LieAlgebra<S>>;
    fn is_zero_tensor(&self) -> bool;
    fn ad_act(&self, y: &Element<S>) -> Result<Self>;
}

impl<S: Scalar> AdAction<S> for Tensor2<S> {
    fn algebra_ref(&self) -> &Arc<LieAlgebra<S>> {
        &self.algebra
    }

    fn is_zero_tensor(&self) -> bool {
        self.is_zero()
    }

    fn ad_act(&self, y: &Element<S>) -> Result<Self> {
        same_algebra(&self.algebra, y.algebra())?;
        let m = right_ad(&self.algebra, y.coords());
        let id = Matrix::identity(self.dim());
        self.transform(&m, &id).add(&self.transform(&id, &m))
    }
}

impl<S: Scalar> AdAction<S> for Tensor3<S> {
    fn algebra_ref(&self) -> &Arc<LieAlgebra<S>> {
        &self.algebra
    }

    fn is_zero_tensor(&self) -> bool {
        self.is_zero()
    }

    fn ad_act(&self, y: &Element<S>) -> Result<Self> {
        same_algebra(&self.algebra, y.algebra())?;
        let n = self.dim();
        let m = right_ad(&self.algebra, y.coords());
        let mut out = Self::zeros(&self.algebra);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.get(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    for a in 0..n {
                        if !m.get(a, i).is_zero() {
                            out.add_at(a, j, k, m.get(a, i).clone() * c.clone());
                        }
                        if !m.get(a, j).is_zero() {
                            out.add_at(i, a, k, m.get(a, j).clone() * c.clone());
                        }
                        if !m.get(a, k).is_zero() {
                            out.add_at(i, j, a, m.get(a, k).clone() * c.clone());
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

pub fn ad_act<S: Scalar, T: AdAction<S>>(t: &T, y: &Element<S>) -> Result<T> {
    t.ad_act(y)
}

/// Basis elements `e_k` with `ad_act(t, e_k) != 0`.
pub fn non_invariant_directions<S: Scalar, T: AdAction<S>>(t: &T) -> Vec<usize> {
    let alg = t.algebra_ref().clone();
    (0..alg.dim())
        .filter(|&k| !t.ad_act(&alg.basis_element(k)).expect("same algebra").is_zero_tensor())
        .collect()
}

pub fn is_ad_invariant<S: Scalar, T: AdAction<S>>(t: &T) -> bool {
    non_invariant_directions(t).is_empty()
}

pub fn tau<S: Scalar>(r: &Tensor2<S>) -> Tensor2<S> {
    Tensor2::from_fn(&r.algebra, |i, j| r.get(j, i).clone())
}

pub fn symmetric_part<S: Scalar>(r: &Tensor2<S>) -> Tensor2<S> {
    r.add(&tau(r)).expect("same algebra")
}

/// `Σ_k e_k⊗f^k` over the form-dual basis.
pub fn casimir<S: Scalar>(algebra: &Arc<LieAlgebra<S>>) -> Result<Tensor2<S>> {
    let ginv = algebra.gram_inverse()?;
    Ok(Tensor2::from_fn(algebra, |k, j| ginv.get(k, j).clone()))
}

/// `C_L(r)`: with `r = Σ c_pq e_p⊗e_q`, the sum over both index pairs of
/// `[e_p,e_s]⊗e_q⊗e_u − e_p⊗[e_s,e_q]⊗e_u + e_p⊗e_s⊗[e_q,e_u]`, weighted `c_pq·c_su`.
pub fn cybe_defect<S: Scalar>(r: &Tensor2<S>) -> Tensor3<S> {
    let alg = &r.algebra;
    let n = alg.dim();
    let nz: Vec<(usize, usize, &S)> = (0..n)
        .flat_map(|p| (0..n).map(move |q| (p, q)))
        .map(|(p, q)| (p, q, r.get(p, q)))
        .filter(|(_, _, c)| !c.is_zero())
        .collect();
    let mut out = Tensor3::zeros(alg);
    for &(p, q, c1) in &nz {
        for &(s, u, c2) in &nz {
            let w = c1.clone() * c2.clone();
            for k in 0..n {
                let a = alg.c(p, s, k);
                if !a.is_zero() {
                    out.add_at(k, q, u, w.clone() * a.clone());
                }
                let b = alg.c(s, q, k);
                if !b.is_zero() {
                    out.add_at(p, k, u, -(w.clone() * b.clone()));
                }
                let d = alg.c(q, u, k);
                if !d.is_zero() {
                    out.add_at(p, s, k, w.clone() * d.clone());
                }
            }
        }
    }
    out
}

/// A linear map `L → L⊗L` given by basis images.
#[derive(Clone, PartialEq, Debug)]
pub struct Cobracket<S> {
    algebra: Arc<LieAlgebra<S>>,
    images: Vec<Tensor2<S>>,
}

impl<S: Scalar> Cobracket<S> {
    pub fn new(algebra: &Arc<LieAlgebra<S>>, images: Vec<Tensor2<S>>) -> Result<Self> {
        if images.len() != algebra.dim() {
            return Err(Error::Shape { expected: algebra.dim(), got: images.len() });
        }
        for t in &images {
            same_algebra(algebra, t.algebra())?;
        }
        Ok(Self { algebra: algebra.clone(), images })
    }

    pub fn zero(algebra: &Arc<LieAlgebra<S>>) -> Self {
        Self { algebra: algebra.clone(), images: vec![Tensor2::zeros(algebra); algebra.dim()] }
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra<S>> {
        &self.algebra
    }

    pub fn images(&self) -> &[Tensor2<S>] {
        &self.images
    }

    pub fn image(&self, k: usize) -> &Tensor2<S> {
        &self.images[k]
    }

    pub fn with_image(mut self, k: usize, t: Tensor2<S>) -> Self {
        self.images[k] = t;
        self
    }

    /// Linear extension to an arbitrary element.
    pub fn apply(&self, x: &Element<S>) -> Result<Tensor2<S>> {
        same_algebra(&self.algebra, x.algebra())?;
        let mut out = Tensor2::zeros(&self.algebra);
        for (c, img) in x.coords().iter().zip(&self.images) {
            if !c.is_zero() {
                out = out.add(&img.scale(c))?;
            }
        }
        Ok(out)
    }
}

/// `δ_r(a) = [r, a]` on every basis element.
pub fn cobracket<S: Scalar>(r: &Tensor2<S>) -> Cobracket<S> {
    let alg = r.algebra.clone();
    let images = (0..alg.dim()).map(|k| r.ad_act(&alg.basis_element(k)).expect("same algebra")).collect();
    Cobracket { algebra: alg, images }
}

/// Basis pairs `(a, b)` where `δ([a,b]) != [δ(a),b] + [a,δ(b)]`, with
/// `[a, t] = −[t, a]`, together with the difference.
pub fn cocycle_defects<S: Scalar>(d: &Cobracket<S>) -> Vec<(usize, usize, Tensor2<S>)> {
    let alg = &d.algebra;
    let n = alg.dim();
    let mut out = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            let (ea, eb) = (alg.basis_element(a), alg.basis_element(b));
            let lhs = d.apply(&ea.bracket(&eb).expect("same algebra")).expect("same algebra");
            let rhs = d.images[a]
                .ad_act(&eb)
                .and_then(|t| t.sub(&d.images[b].ad_act(&ea)?))
                .expect("same algebra");
            let diff = lhs.sub(&rhs).expect("same algebra");
            if !diff.is_zero() {
                out.push((a, b, diff));
            }
        }
    }
    out
}

pub fn check_cocycle<S: Scalar>(d: &Cobracket<S>) -> bool {
    cocycle_defects(d).is_empty()
}

/// `(δ⊗id)δ(e_k)`.
fn double_cobracket<S: Scalar>(d: &Cobracket<S>, k: usize) -> Tensor3<S> {
    let n = d.algebra.dim();
    let img = &d.images[k];
    let mut out = Tensor3::zeros(&d.algebra);
    for i in 0..n {
        for j in 0..n {
            let c = img.get(i, j);
            if c.is_zero() {
                continue;
            }
            let inner = &d.images[i];
            for a in 0..n {
                for b in 0..n {
                    let v = inner.get(a, b);
                    if !v.is_zero() {
                        out.add_at(a, b, j, c.clone() * v.clone());
                    }
                }
            }
        }
    }
    out
}

/// Basis elements where the cyclic sum of `(δ⊗id)δ` is nonzero, with that sum.
pub fn cojacobi_defects<S: Scalar>(d: &Cobracket<S>) -> Vec<(usize, Tensor3<S>)> {
    let n = d.algebra.dim();
    let mut out = Vec::new();
    for k in 0..n {
        let t = double_cobracket(d, k);
        let s = Tensor3::from_fn(&d.algebra, |a, b, c| {
            t.get(a, b, c).clone() + t.get(b, c, a).clone() + t.get(c, a, b).clone()
        });
        if !s.is_zero() {
            out.push((k, s));
        }
    }
    out
}

pub fn check_cojacobi<S: Scalar>(d: &Cobracket<S>) -> bool {
    cojacobi_defects(d).is_empty()
}

/// Basis elements whose image is not skew, with `δ(e_k) + τδ(e_k)`.
pub fn coskew_defects<S: Scalar>(d: &Cobracket<S>) -> Vec<(usize, Tensor2<S>)> {
    d.images
        .iter()
        .enumerate()
        .map(|(k, t)| (k, symmetric_part(t)))
        .filter(|(_, s)| !s.is_zero())
        .collect()
}

pub fn check_coskew<S: Scalar>(d: &Cobracket<S>) -> bool {
    coskew_defects(d).is_empty()
}
