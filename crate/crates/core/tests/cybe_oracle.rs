//! Independent CYBE oracle: expands the three commutator terms with explicit
//! 2×2 matrices instead of structure constants.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ybx::liealg::make_gl;
use ybx::tensor::cybe_defect;
use ybx::{GaussRat as Q, Tensor2};

type M = [[Q; 2]; 2];

fn basis() -> [M; 4] {
    let (o, z) = (Q::one(), Q::zero());
    [
        [[o.clone(), z.clone()], [z.clone(), o.clone()]],
        [[o.clone(), z.clone()], [z.clone(), -o.clone()]],
        [[z.clone(), o.clone()], [z.clone(), z.clone()]],
        [[z.clone(), z.clone()], [o, z]],
    ]
}

fn mul(a: &M, b: &M) -> M {
    let f = |i: usize, j: usize| a[i][0].clone() * b[0][j].clone() + a[i][1].clone() * b[1][j].clone();
    [[f(0, 0), f(0, 1)], [f(1, 0), f(1, 1)]]
}

fn comm(a: &M, b: &M) -> M {
    let (p, q) = (mul(a, b), mul(b, a));
    let f = |i: usize, j: usize| p[i][j].clone() - q[i][j].clone();
    [[f(0, 0), f(0, 1)], [f(1, 0), f(1, 1)]]
}

fn coords(m: &M) -> [Q; 4] {
    let half = Q::ratio(1, 2);
    [
        (m[0][0].clone() + m[1][1].clone()) * half.clone(),
        (m[0][0].clone() - m[1][1].clone()) * half,
        m[0][1].clone(),
        m[1][0].clone(),
    ]
}

/// Coefficient array indexed `[a][b][c]` of `[r12,r13] + [r12,r23] + [r13,r23]`.
fn oracle(r: &[[Q; 4]; 4]) -> Vec<Q> {
    let x = basis();
    let mut out = vec![Q::zero(); 64];
    let mut put = |a: usize, b: usize, c: usize, v: Q| out[a * 16 + b * 4 + c] = out[a * 16 + b * 4 + c].clone() + v;
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    let w = r[i][j].clone() * r[k][l].clone();
                    if w.is_zero() {
                        continue;
                    }
                    // [r12,r13]: [x_i,x_k] ⊗ x_j ⊗ x_l
                    for (a, v) in coords(&comm(&x[i], &x[k])).iter().enumerate() {
                        put(a, j, l, w.clone() * v.clone());
                    }
                    // [r12,r23]: x_i ⊗ [x_j,x_k] ⊗ x_l
                    for (b, v) in coords(&comm(&x[j], &x[k])).iter().enumerate() {
                        put(i, b, l, w.clone() * v.clone());
                    }
                    // [r13,r23]: x_i ⊗ x_k ⊗ [x_j,x_l]
                    for (c, v) in coords(&comm(&x[j], &x[l])).iter().enumerate() {
                        put(i, k, c, w.clone() * v.clone());
                    }
                }
            }
        }
    }
    out
}

fn compare(r: [[Q; 4]; 4]) {
    let g = std::sync::Arc::new(make_gl::<Q>(2));
    let t = Tensor2::from_fn(&g, |i, j| r[i][j].clone());
    let d = cybe_defect(&t);
    let want = oracle(&r);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                assert_eq!(d.get(a, b, c), &want[a * 16 + b * 4 + c], "r={r:?} at ({a},{b},{c})");
            }
        }
    }
}

#[test]
fn random_tensors_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x05ee_dcbe);
    for _ in 0..100 {
        let r: [[Q; 4]; 4] = std::array::from_fn(|_| {
            std::array::from_fn(|_| {
                if rng.gen_bool(0.3) {
                    Q::zero()
                } else {
                    Q::ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3)) + Q::i() * Q::from_int(rng.gen_range(-1..=1))
                }
            })
        });
        compare(r);
    }
}

#[test]
fn sweep_family_matches_oracle() {
    // 2E⊗E + c·h⊗h − e21⊗e12 solves the CYBE only at c = −¼.
    let z = Q::zero;
    for (n, d) in [(-1, 1), (-1, 2), (-1, 4), (0, 1), (1, 1), (3, 7)] {
        let c = Q::ratio(n, d);
        let mut r: [[Q; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| z()));
        r[0][0] = Q::from_int(2);
        r[1][1] = c.clone();
        r[3][2] = -Q::one();
        compare(r.clone());
        let zero = oracle(&r).iter().all(|v| v.is_zero());
        assert_eq!(zero, c == Q::ratio(-1, 4), "c={c}");
    }
}

#[test]
fn statement_tensor_defect() {
    // −¼h⊗h − ½e21⊗e12 is not a solution.
    let z = Q::zero;
    let mut r: [[Q; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| z()));
    r[1][1] = Q::ratio(-1, 4);
    r[3][2] = Q::ratio(-1, 2);
    compare(r.clone());
    let d = oracle(&r);
    assert!(d.iter().any(|v| !v.is_zero()));
}
