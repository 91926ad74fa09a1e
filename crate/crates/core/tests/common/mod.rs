#![allow(dead_code)]

use num_complex::Complex64;
use polsar_gd::algebra::Mat4;
use polsar_gd::{CoherencyMatrix, ScatteringMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn complex(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

pub fn scattering(rng: &mut impl Rng) -> ScatteringMatrix {
    ScatteringMatrix::new(complex(rng), complex(rng), complex(rng)).unwrap()
}

/// `A Aᴴ` with a random rank between 1 and 3.
pub fn coherency(rng: &mut impl Rng) -> CoherencyMatrix {
    let rank = rng.random_range(1..=3);
    let a: Vec<[Complex64; 3]> = (0..rank)
        .map(|_| [complex(rng), complex(rng), complex(rng)])
        .collect();
    let mut m = [[Complex64::new(0.0, 0.0); 3]; 3];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = a.iter().map(|col| col[i] * col[j].conj()).sum();
        }
    }
    CoherencyMatrix::new(m).unwrap()
}

/// Random 4×4 orthogonal matrix by Gram-Schmidt.
pub fn orthogonal(rng: &mut impl Rng) -> Mat4 {
    let mut q = [[0.0; 4]; 4];
    for i in 0..4 {
        let mut v: [f64; 4] = std::array::from_fn(|_| rng.sample(StandardNormal));
        for _ in 0..2 {
            for prev in q.iter().take(i) {
                let dot: f64 = v.iter().zip(prev).map(|(a, b)| a * b).sum();
                for (x, p) in v.iter_mut().zip(prev) {
                    *x -= dot * p;
                }
            }
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        q[i] = v.map(|x| x / norm);
    }
    q
}
