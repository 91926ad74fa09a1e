//! Polarimetric matrix representations and the conversions between them.
//!
//! The Kennaugh matrix is the internal lingua franca: every other
//! representation converts into it, and the similarity machinery in
//! [`crate::geodesic`] is defined on it. Conversions follow the usual
//! HV-basis conventions:
//!
//! * `K = ½ A* (S ⊗ S*) Aᴴ` for a coherent scattering matrix,
//! * the Pauli-basis element mapping for a multilook coherency matrix,
//! * `T = U₃ C U₃ᴴ` between the lexicographic and Pauli bases.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Mat3 = [[Complex64; 3]; 3];
pub type Mat4 = [[f64; 4]; 4];

/// Relative (to the trace) Hermitian tolerance applied when validating 3×3 inputs.
pub const HERMITIAN_TOLERANCE: f64 = 1e-9;
/// Diagonal entries may dip below zero by this fraction of the trace.
pub const DIAGONAL_TOLERANCE: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Monostatic 2×2 scattering matrix; reciprocity (`S_HV = S_VH`) is assumed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringMatrix {
    pub s_hh: Complex64,
    pub s_hv: Complex64,
    pub s_vv: Complex64,
}

impl ScatteringMatrix {
    pub fn new(s_hh: Complex64, s_hv: Complex64, s_vv: Complex64) -> Result<Self> {
        if !(s_hh.is_finite() && s_hv.is_finite() && s_vv.is_finite()) {
            return Err(Error::domain("scattering matrix has non-finite entries"));
        }
        Ok(Self { s_hh, s_hv, s_vv })
    }

    /// Convenience constructor for purely real amplitudes.
    pub fn real(s_hh: f64, s_hv: f64, s_vv: f64) -> Result<Self> {
        Self::new(s_hh.into(), s_hv.into(), s_vv.into())
    }

    /// Builds a scattering matrix from a bistatic measurement, rejecting it
    /// unless `S_HV` and `S_VH` agree to `tolerance` relative to the span.
    pub fn from_bistatic(
        s_hh: Complex64,
        s_hv: Complex64,
        s_vh: Complex64,
        s_vv: Complex64,
        tolerance: f64,
    ) -> Result<Self> {
        let scale = s_hh.norm_sqr() + s_hv.norm_sqr() + s_vh.norm_sqr() + s_vv.norm_sqr();
        if (s_hv - s_vh).norm_sqr() > tolerance * tolerance * scale.max(f64::MIN_POSITIVE) {
            return Err(Error::domain(
                "S_HV and S_VH differ: only monostatic (reciprocal) data is supported",
            ));
        }
        Self::new(s_hh, (s_hv + s_vh) * 0.5, s_vv)
    }

    pub fn as_matrix(&self) -> [[Complex64; 2]; 2] {
        [[self.s_hh, self.s_hv], [self.s_hv, self.s_vv]]
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        Self {
            s_hh: self.s_hh * factor,
            s_hv: self.s_hv * factor,
            s_vv: self.s_vv * factor,
        }
    }

    /// `|S_HH|² + 2|S_HV|² + |S_VV|²`
    pub fn span(&self) -> f64 {
        self.s_hh.norm_sqr() + 2.0 * self.s_hv.norm_sqr() + self.s_vv.norm_sqr()
    }

    pub fn is_zero(&self) -> bool {
        self.span() == 0.0
    }

    /// Pauli scattering vector `(S_HH + S_VV, S_HH − S_VV, 2 S_HV) / √2`.
    pub fn pauli_vector(&self) -> [Complex64; 3] {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        [
            (self.s_hh + self.s_vv) * r,
            (self.s_hh - self.s_vv) * r,
            self.s_hv * (2.0 * r),
        ]
    }

    /// Lexicographic scattering vector `(S_HH, √2 S_HV, S_VV)`.
    pub fn lexicographic_vector(&self) -> [Complex64; 3] {
        [self.s_hh, self.s_hv * std::f64::consts::SQRT_2, self.s_vv]
    }
}

fn outer(v: &[Complex64; 3]) -> Mat3 {
    let mut m = [[ZERO; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = v[i] * v[j].conj();
        }
    }
    m
}

fn mat3_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut c = [[ZERO; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
        }
    }
    c
}

fn mat3_adjoint(a: &Mat3) -> Mat3 {
    let mut c = [[ZERO; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            c[i][j] = a[j][i].conj();
        }
    }
    c
}

pub(crate) fn mat3_trace(a: &Mat3) -> f64 {
    a[0][0].re + a[1][1].re + a[2][2].re
}

/// Validates finiteness, Hermitian symmetry and non-negative diagonal, and
/// returns the exactly symmetrized matrix `(M + Mᴴ)/2`.
fn validate_hermitian(m: &Mat3) -> Result<Mat3> {
    if m.iter().flatten().any(|z| !z.is_finite()) {
        return Err(Error::InvalidPixel("matrix has non-finite entries".into()));
    }
    let trace = mat3_trace(m);
    let scale = trace.abs().max(f64::MIN_POSITIVE);
    let tolerance = HERMITIAN_TOLERANCE * scale;
    let mut deviation = 0.0_f64;
    for i in 0..3 {
        for j in 0..3 {
            deviation = deviation.max((m[i][j] - m[j][i].conj()).norm());
        }
    }
    if deviation > tolerance {
        return Err(Error::NonHermitian {
            deviation,
            tolerance,
        });
    }
    let mut h = [[ZERO; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            h[i][j] = (m[i][j] + m[j][i].conj()) * 0.5;
        }
    }
    for (i, row) in h.iter().enumerate() {
        if row[i].re < -DIAGONAL_TOLERANCE * scale {
            return Err(Error::InvalidPixel(format!(
                "negative diagonal element {} at ({i},{i})",
                row[i].re
            )));
        }
    }
    Ok(h)
}

/// The special unitary `U₃` taking lexicographic to Pauli basis.
fn lexicographic_to_pauli() -> Mat3 {
    let r = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let one = Complex64::new(1.0, 0.0);
    [[r, ZERO, r], [r, ZERO, -r], [ZERO, one, ZERO]]
}

macro_rules! hermitian_matrix {
    ($name:ident, $field:ident) => {
        impl $name {
            /// Validates the input (finite, Hermitian to `1e-9·trace`,
            /// diagonal non-negative) and stores its symmetrized form.
            pub fn new($field: Mat3) -> Result<Self> {
                Ok(Self {
                    $field: validate_hermitian(&$field)?,
                })
            }

            /// Rank-one matrix `v vᴴ`.
            pub fn from_outer(v: &[Complex64; 3]) -> Self {
                Self { $field: outer(v) }
            }

            pub fn from_diagonal(d: [f64; 3]) -> Result<Self> {
                let mut m = [[ZERO; 3]; 3];
                for i in 0..3 {
                    m[i][i] = d[i].into();
                }
                Self::new(m)
            }

            pub fn identity() -> Self {
                Self::from_diagonal([1.0; 3]).expect("identity is valid")
            }

            pub fn matrix(&self) -> &Mat3 {
                &self.$field
            }

            pub fn get(&self, row: usize, col: usize) -> Complex64 {
                self.$field[row][col]
            }

            pub fn trace(&self) -> f64 {
                mat3_trace(&self.$field)
            }

            pub fn scaled(&self, factor: f64) -> Self {
                let mut m = self.$field;
                m.iter_mut().flatten().for_each(|z| *z *= factor);
                Self { $field: m }
            }

            /// `√Tr(MᴴM)`
            pub fn frobenius_norm(&self) -> f64 {
                self.$field
                    .iter()
                    .flatten()
                    .map(|z| z.norm_sqr())
                    .sum::<f64>()
                    .sqrt()
            }

            /// Row-major interleaved `(re, im)` components, the real vector
            /// whose dot product equals `Re Tr(M₁ᴴ M₂)`.
            pub fn components(&self) -> [f64; 18] {
                let mut out = [0.0; 18];
                for (n, z) in self.$field.iter().flatten().enumerate() {
                    out[2 * n] = z.re;
                    out[2 * n + 1] = z.im;
                }
                out
            }
        }
    };
}

/// 3×3 Hermitian positive semi-definite coherency matrix (Pauli basis).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherencyMatrix {
    t: Mat3,
}

/// 3×3 Hermitian positive semi-definite covariance matrix (lexicographic basis).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CovarianceMatrix {
    c: Mat3,
}

hermitian_matrix!(CoherencyMatrix, t);
hermitian_matrix!(CovarianceMatrix, c);

impl CoherencyMatrix {
    /// Single-look coherency matrix of a scattering matrix, `k kᴴ`.
    pub fn from_scattering(s: &ScatteringMatrix) -> Self {
        Self::from_outer(&s.pauli_vector())
    }
}

impl CovarianceMatrix {
    pub fn from_scattering(s: &ScatteringMatrix) -> Self {
        Self::from_outer(&s.lexicographic_vector())
    }
}

fn hermitize(m: &Mat3) -> Mat3 {
    let mut h = [[ZERO; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            h[i][j] = (m[i][j] + m[j][i].conj()) * 0.5;
        }
    }
    h
}

/// `T = U₃ C U₃ᴴ`
pub fn coherency_from_covariance(c: &CovarianceMatrix) -> CoherencyMatrix {
    let u = lexicographic_to_pauli();
    let t = mat3_mul(&mat3_mul(&u, c.matrix()), &mat3_adjoint(&u));
    CoherencyMatrix { t: hermitize(&t) }
}

/// `C = U₃ᴴ T U₃`
pub fn covariance_from_coherency(t: &CoherencyMatrix) -> CovarianceMatrix {
    let u = lexicographic_to_pauli();
    let c = mat3_mul(&mat3_mul(&mat3_adjoint(&u), t.matrix()), &u);
    CovarianceMatrix { c: hermitize(&c) }
}

/// 4×4 real Kennaugh matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KennaughMatrix {
    k: Mat4,
}

impl KennaughMatrix {
    /// Only finiteness is checked here; power positivity is a per-pixel
    /// concern (see [`KennaughMatrix::is_valid_pixel`]).
    pub fn new(k: Mat4) -> Result<Self> {
        if k.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::domain("Kennaugh matrix has non-finite entries"));
        }
        Ok(Self { k })
    }

    pub fn from_diagonal(d: [f64; 4]) -> Result<Self> {
        let mut k = [[0.0; 4]; 4];
        for i in 0..4 {
            k[i][i] = d[i];
        }
        Self::new(k)
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.k
    }

    /// Zero-based indexing: `get(0, 0)` is `K₁₁`.
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.k[row][col]
    }

    pub fn k11(&self) -> f64 {
        self.k[0][0]
    }

    pub fn is_valid_pixel(&self) -> bool {
        self.k11() > 0.0 && self.frobenius_norm() > 0.0
    }

    /// Total power, `2·K₁₁`.
    pub fn span(&self) -> f64 {
        2.0 * self.k[0][0]
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.k.iter().flatten().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn scaled(&self, factor: f64) -> Self {
        let mut k = self.k;
        k.iter_mut().flatten().for_each(|v| *v *= factor);
        Self { k }
    }

    pub fn components(&self) -> [f64; 16] {
        let mut out = [0.0; 16];
        for (n, v) in self.k.iter().flatten().enumerate() {
            out[n] = *v;
        }
        out
    }

    /// `Pᵀ K P`
    pub fn congruence(&self, p: &Mat4) -> Self {
        let mut tmp = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                tmp[i][j] = (0..4).map(|m| self.k[i][m] * p[m][j]).sum();
            }
        }
        let mut out = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                out[i][j] = (0..4).map(|m| p[m][i] * tmp[m][j]).sum();
            }
        }
        Self { k: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut k = self.k;
        for i in 0..4 {
            for j in 0..4 {
                k[i][j] += other.k[i][j];
            }
        }
        Self { k }
    }
}

/// `K = ½ A* (S ⊗ S*) Aᴴ`, evaluated literally in complex arithmetic; the
/// imaginary part vanishes identically and is discarded.
pub fn kennaugh_from_scattering(s: &ScatteringMatrix) -> KennaughMatrix {
    let j = Complex64::new(0.0, 1.0);
    let one = Complex64::new(1.0, 0.0);
    let a: [[Complex64; 4]; 4] = [
        [one, ZERO, ZERO, one],
        [one, ZERO, ZERO, -one],
        [ZERO, one, one, ZERO],
        [ZERO, j, -j, ZERO],
    ];
    let x = kronecker_self_conjugate(s);

    // A* X
    let mut ax = [[ZERO; 4]; 4];
    for r in 0..4 {
        for c in 0..4 {
            ax[r][c] = (0..4).map(|m| a[r][m].conj() * x[m][c]).sum();
        }
    }
    // (A* X) Aᴴ, with (Aᴴ)[m][c] = conj(A[c][m])
    let mut k = [[0.0; 4]; 4];
    for r in 0..4 {
        for c in 0..4 {
            let v: Complex64 = (0..4).map(|m| ax[r][m] * a[c][m].conj()).sum();
            k[r][c] = 0.5 * v.re;
        }
    }
    KennaughMatrix { k }
}

/// `S ⊗ S*` with row index `2i + k` and column index `2j + l`.
pub(crate) fn kronecker_self_conjugate(s: &ScatteringMatrix) -> [[Complex64; 4]; 4] {
    let m = s.as_matrix();
    let mut x = [[ZERO; 4]; 4];
    for i in 0..2 {
        for jj in 0..2 {
            for kk in 0..2 {
                for l in 0..2 {
                    x[2 * i + kk][2 * jj + l] = m[i][jj] * m[kk][l].conj();
                }
            }
        }
    }
    x
}

pub fn kennaugh_from_coherency(t: &CoherencyMatrix) -> KennaughMatrix {
    let m = t.matrix();
    let (t11, t22, t33) = (m[0][0].re, m[1][1].re, m[2][2].re);
    let (t12, t13, t23) = (m[0][1], m[0][2], m[1][2]);
    let k = [
        [(t11 + t22 + t33) / 2.0, t12.re, t13.re, t23.im],
        [t12.re, (t11 + t22 - t33) / 2.0, t23.re, t13.im],
        [t13.re, t23.re, (t11 - t22 + t33) / 2.0, -t12.im],
        [t23.im, t13.im, -t12.im, (-t11 + t22 + t33) / 2.0],
    ];
    KennaughMatrix { k }
}

/// Inverse of [`kennaugh_from_coherency`]; uses the symmetric part of `K`.
pub fn coherency_from_kennaugh(k: &KennaughMatrix) -> Result<CoherencyMatrix> {
    let sym = |i: usize, j: usize| 0.5 * (k.k[i][j] + k.k[j][i]);
    let (k11, k22, k33, k44) = (k.k[0][0], k.k[1][1], k.k[2][2], k.k[3][3]);
    let t11 = (k11 + k22 + k33 - k44) / 2.0;
    let t22 = (k11 + k22 - k33 + k44) / 2.0;
    let t33 = (k11 - k22 + k33 + k44) / 2.0;
    let t12 = Complex64::new(sym(0, 1), -sym(2, 3));
    let t13 = Complex64::new(sym(0, 2), sym(1, 3));
    let t23 = Complex64::new(sym(1, 2), sym(0, 3));
    CoherencyMatrix::new([
        [t11.into(), t12, t13],
        [t12.conj(), t22.into(), t23],
        [t13.conj(), t23.conj(), t33.into()],
    ])
}

pub fn kennaugh_from_covariance(c: &CovarianceMatrix) -> KennaughMatrix {
    kennaugh_from_coherency(&coherency_from_covariance(c))
}

/// Rotation about the line of sight acting on a Kennaugh matrix; the
/// argument of the trigonometric terms is `2θ`.
pub fn roll_rotation(theta: f64) -> Mat4 {
    let (s, c) = (2.0 * theta).sin_cos();
    [
        [1.0, 0.0, 0.0, 0.0],
        [0.0, c, -s, 0.0],
        [0.0, s, c, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ]
}

/// `K(θ) = R(θ) K R(θ)ᵀ`, θ in radians.
pub fn rotate_kennaugh(k: &KennaughMatrix, theta: f64) -> KennaughMatrix {
    let r = roll_rotation(theta);
    // Rᵀ K R with P = Rᵀ.
    let mut rt = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            rt[i][j] = r[j][i];
        }
    }
    let mut out = k.congruence(&rt);
    // Entries outside rows/columns 1-2 are untouched by R; keep them bit-exact.
    for i in [0, 3] {
        for j in [0, 3] {
            out.k[i][j] = k.k[i][j];
        }
    }
    out
}

/// Canonical scatterers with fixed Kennaugh matrices, plus the ideal
/// depolarizer (which has no coherent counterpart).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ElementaryTarget {
    Trihedral,
    Cylinder,
    Dipole,
    Dihedral,
    NarrowDihedral,
    QuarterWavePlus,
    QuarterWaveMinus,
    LeftHelix,
    RightHelix,
    IdealDepolarizer,
}

impl ElementaryTarget {
    pub const ALL: [ElementaryTarget; 10] = [
        ElementaryTarget::Trihedral,
        ElementaryTarget::Cylinder,
        ElementaryTarget::Dipole,
        ElementaryTarget::Dihedral,
        ElementaryTarget::NarrowDihedral,
        ElementaryTarget::QuarterWavePlus,
        ElementaryTarget::QuarterWaveMinus,
        ElementaryTarget::LeftHelix,
        ElementaryTarget::RightHelix,
        ElementaryTarget::IdealDepolarizer,
    ];

    pub const COHERENT: [ElementaryTarget; 9] = [
        ElementaryTarget::Trihedral,
        ElementaryTarget::Cylinder,
        ElementaryTarget::Dipole,
        ElementaryTarget::Dihedral,
        ElementaryTarget::NarrowDihedral,
        ElementaryTarget::QuarterWavePlus,
        ElementaryTarget::QuarterWaveMinus,
        ElementaryTarget::LeftHelix,
        ElementaryTarget::RightHelix,
    ];

    pub fn is_coherent(self) -> bool {
        self != ElementaryTarget::IdealDepolarizer
    }

    /// Roll-invariant targets keep their signature under any line-of-sight rotation.
    pub fn is_roll_invariant(self) -> bool {
        matches!(
            self,
            ElementaryTarget::Trihedral
                | ElementaryTarget::LeftHelix
                | ElementaryTarget::RightHelix
                | ElementaryTarget::IdealDepolarizer
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            ElementaryTarget::Trihedral => "trihedral",
            ElementaryTarget::Cylinder => "cylinder",
            ElementaryTarget::Dipole => "dipole",
            ElementaryTarget::Dihedral => "dihedral",
            ElementaryTarget::NarrowDihedral => "narrow_dihedral",
            ElementaryTarget::QuarterWavePlus => "quarter_wave_plus",
            ElementaryTarget::QuarterWaveMinus => "quarter_wave_minus",
            ElementaryTarget::LeftHelix => "left_helix",
            ElementaryTarget::RightHelix => "right_helix",
            ElementaryTarget::IdealDepolarizer => "ideal_depolarizer",
        }
    }

    /// Short subscript used in band names (`P_t`, `P_nd`, ...).
    pub fn short_name(self) -> &'static str {
        match self {
            ElementaryTarget::Trihedral => "t",
            ElementaryTarget::Cylinder => "c",
            ElementaryTarget::Dipole => "dp",
            ElementaryTarget::Dihedral => "d",
            ElementaryTarget::NarrowDihedral => "nd",
            ElementaryTarget::QuarterWavePlus => "qwp",
            ElementaryTarget::QuarterWaveMinus => "qwm",
            ElementaryTarget::LeftHelix => "lh",
            ElementaryTarget::RightHelix => "rh",
            ElementaryTarget::IdealDepolarizer => "dep",
        }
    }

    pub fn kennaugh(self) -> KennaughMatrix {
        const H: f64 = 1.0 / 2.0;
        const A: f64 = 5.0 / 8.0;
        const B: f64 = 3.0 / 8.0;
        let k: Mat4 = match self {
            ElementaryTarget::Dihedral => [
                [1.0, 0.0, 0.0, 0.0],
                [0.0, 1.0, 0.0, 0.0],
                [0.0, 0.0, -1.0, 0.0],
                [0.0, 0.0, 0.0, 1.0],
            ],
            ElementaryTarget::NarrowDihedral => [
                [A, B, 0.0, 0.0],
                [B, A, 0.0, 0.0],
                [0.0, 0.0, -H, 0.0],
                [0.0, 0.0, 0.0, H],
            ],
            ElementaryTarget::Trihedral => [
                [1.0, 0.0, 0.0, 0.0],
                [0.0, 1.0, 0.0, 0.0],
                [0.0, 0.0, 1.0, 0.0],
                [0.0, 0.0, 0.0, -1.0],
            ],
            ElementaryTarget::Cylinder => [
                [A, B, 0.0, 0.0],
                [B, A, 0.0, 0.0],
                [0.0, 0.0, H, 0.0],
                [0.0, 0.0, 0.0, -H],
            ],
            ElementaryTarget::Dipole => [
                [1.0, -1.0, 0.0, 0.0],
                [-1.0, 1.0, 0.0, 0.0],
                [0.0, 0.0, 0.0, 0.0],
                [0.0, 0.0, 0.0, 0.0],
            ],
            ElementaryTarget::QuarterWavePlus => [
                [1.0, 0.0, 0.0, 0.0],
                [0.0, 1.0, 0.0, 0.0],
                [0.0, 0.0, 0.0, 1.0],
                [0.0, 0.0, 1.0, 0.0],
            ],
            ElementaryTarget::QuarterWaveMinus => [
                [1.0, 0.0, 0.0, 0.0],
                [0.0, 1.0, 0.0, 0.0],
                [0.0, 0.0, 0.0, -1.0],
                [0.0, 0.0, -1.0, 0.0],
            ],
            ElementaryTarget::LeftHelix => [
                [1.0, 0.0, 0.0, -1.0],
                [0.0, 0.0, 0.0, 0.0],
                [0.0, 0.0, 0.0, 0.0],
                [-1.0, 0.0, 0.0, 1.0],
            ],
            ElementaryTarget::RightHelix => [
                [1.0, 0.0, 0.0, 1.0],
                [0.0, 0.0, 0.0, 0.0],
                [0.0, 0.0, 0.0, 0.0],
                [1.0, 0.0, 0.0, 1.0],
            ],
            ElementaryTarget::IdealDepolarizer => [
                [1.0, 0.0, 0.0, 0.0],
                [0.0, 0.0, 0.0, 0.0],
                [0.0, 0.0, 0.0, 0.0],
                [0.0, 0.0, 0.0, 0.0],
            ],
        };
        KennaughMatrix { k }
    }
}

impl fmt::Display for ElementaryTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ElementaryTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase().replace('-', "_");
        ElementaryTarget::ALL
            .into_iter()
            .find(|t| t.name() == s || t.short_name() == s)
            .ok_or_else(|| Error::Config(format!("unknown elementary target '{s}'")))
    }
}

/// Shorthand for [`ElementaryTarget::kennaugh`].
pub fn elementary_target(id: ElementaryTarget) -> KennaughMatrix {
    id.kennaugh()
}

/// Generalized random-volume Kennaugh model for co-polarized power ratio
/// `γ = ⟨|S_HH|²⟩/⟨|S_VV|²⟩`. The normalization fixes `K₁₁ = 2`.
pub fn grvm_kennaugh(gamma: f64) -> Result<KennaughMatrix> {
    if !(gamma.is_finite() && gamma > 0.0) {
        return Err(Error::domain(format!(
            "co-pol ratio must be positive and finite, got {gamma}"
        )));
    }
    let root = gamma.sqrt();
    let norm = 3.0 * (1.0 + gamma) / 4.0 - root / 6.0;
    let diag_mid = 0.5 * (1.0 + gamma) + root / 3.0;
    let k = [
        [1.5 * (1.0 + gamma) - root / 3.0, gamma - 1.0, 0.0, 0.0],
        [gamma - 1.0, diag_mid, 0.0, 0.0],
        [0.0, 0.0, diag_mid, 0.0],
        [0.0, 0.0, 0.0, 0.5 * (1.0 + gamma) - root],
    ];
    Ok(KennaughMatrix { k }.scaled(1.0 / norm))
}

pub fn span(k: &KennaughMatrix) -> f64 {
    k.span()
}

/// `4K₁₁² − Σᵢⱼ Kᵢⱼ²`: zero for a coherent (single scatterer) Kennaugh
/// matrix, positive for a depolarizing one.
pub fn fry_kattawar_residual(k: &KennaughMatrix) -> f64 {
    let k11 = k.k11();
    4.0 * k11 * k11 - k.k.iter().flatten().map(|v| v * v).sum::<f64>()
}
