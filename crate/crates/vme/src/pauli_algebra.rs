//! Pauli-string operators, dense Hermitian matrices and the conversions
//! between them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::linalg::Mat;

const HERMITIAN_TOL: f64 = 1e-12;
const PRUNE_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

    pub fn matrix(self) -> [[Complex64; 2]; 2] {
        let (o, l, i) = (c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0));
        match self {
            Pauli::I => [[l, o], [o, l]],
            Pauli::X => [[o, l], [l, o]],
            Pauli::Y => [[o, -i], [i, o]],
            Pauli::Z => [[l, o], [o, -l]],
        }
    }

    fn label(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// Tensor product of single-qubit Paulis; the leftmost axis acts on the most
/// significant qubit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PauliString {
    axes: Vec<Pauli>,
}

impl PauliString {
    pub fn new(axes: Vec<Pauli>) -> Result<Self, Error> {
        if axes.is_empty() {
            return Err(Error::InvalidPauli(String::new()));
        }
        Ok(PauliString { axes })
    }

    pub fn n_qubits(&self) -> usize {
        self.axes.len()
    }

    pub fn axes(&self) -> &[Pauli] {
        &self.axes
    }

    /// Matrix element `⟨row|P|col⟩`.
    pub fn element(&self, row: usize, col: usize) -> Complex64 {
        let n = self.axes.len();
        let mut v = c(1.0, 0.0);
        for (k, p) in self.axes.iter().enumerate() {
            let shift = n - 1 - k;
            let m = p.matrix();
            v *= m[(row >> shift) & 1][(col >> shift) & 1];
            if v == c(0.0, 0.0) {
                break;
            }
        }
        v
    }

    pub fn to_dense(&self) -> DenseHermitian {
        let dim = 1usize << self.n_qubits();
        DenseHermitian::from_fn(dim, |r, k| self.element(r, k))
    }

    /// All `4^n` strings on `n` qubits in lexicographic I < X < Y < Z order.
    pub fn all(n_qubits: usize) -> Vec<PauliString> {
        let mut out = vec![Vec::new()];
        for _ in 0..n_qubits {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<Pauli>| {
                    Pauli::ALL.iter().map(move |p| {
                        let mut v = prefix.clone();
                        v.push(*p);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(|axes| PauliString { axes }).collect()
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.axes {
            write!(f, "{}", p.label())?;
        }
        Ok(())
    }
}

impl FromStr for PauliString {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let axes = s
            .chars()
            .map(|ch| match ch {
                'I' => Ok(Pauli::I),
                'X' => Ok(Pauli::X),
                'Y' => Ok(Pauli::Y),
                'Z' => Ok(Pauli::Z),
                _ => Err(Error::InvalidPauli(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        PauliString::new(axes).map_err(|_| Error::InvalidPauli(s.to_string()))
    }
}

/// Weighted sum of Pauli strings on a fixed number of qubits. Duplicate strings
/// are merged on construction and terms are kept in string order.
#[derive(Clone, Debug, PartialEq)]
pub struct PauliSum {
    n_qubits: usize,
    terms: Vec<(Complex64, PauliString)>,
}

impl PauliSum {
    pub fn new(n_qubits: usize, terms: Vec<(Complex64, PauliString)>) -> Result<Self, Error> {
        let mut merged: BTreeMap<PauliString, Complex64> = BTreeMap::new();
        for (coeff, s) in terms {
            if s.n_qubits() != n_qubits {
                return Err(Error::DimensionMismatch { expected: n_qubits, found: s.n_qubits() });
            }
            *merged.entry(s).or_insert(c(0.0, 0.0)) += coeff;
        }
        Ok(PauliSum { n_qubits, terms: merged.into_iter().map(|(s, k)| (k, s)).collect() })
    }

    /// Builds a sum from `(real coefficient, label)` pairs, e.g. `(2.0, "ZX")`.
    pub fn from_labels(terms: &[(f64, &str)]) -> Result<Self, Error> {
        let parsed = terms
            .iter()
            .map(|(k, s)| Ok((c(*k, 0.0), s.parse::<PauliString>()?)))
            .collect::<Result<Vec<_>, Error>>()?;
        let n = parsed.first().map(|t| t.1.n_qubits()).unwrap_or(1);
        PauliSum::new(n, parsed)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn terms(&self) -> &[(Complex64, PauliString)] {
        &self.terms
    }

    pub fn is_hermitian(&self) -> bool {
        self.terms.iter().all(|(k, _)| k.im == 0.0)
    }

    /// Trivial spectral bound `Σ|c_k|`.
    pub fn coefficient_bound(&self) -> f64 {
        self.terms.iter().map(|(k, _)| k.norm()).sum()
    }

    pub fn coefficient(&self, s: &PauliString) -> Complex64 {
        self.terms.iter().find(|(_, t)| t == s).map(|(k, _)| *k).unwrap_or(c(0.0, 0.0))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    coeff_re: f64,
    coeff_im: f64,
    axes: String,
}

impl Serialize for PauliSum {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let v: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(k, s)| TermJson { coeff_re: k.re, coeff_im: k.im, axes: s.to_string() })
            .collect();
        v.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for PauliSum {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = Vec::<TermJson>::deserialize(de)?;
        let terms = raw
            .into_iter()
            .map(|t| Ok((c(t.coeff_re, t.coeff_im), t.axes.parse::<PauliString>()?)))
            .collect::<Result<Vec<_>, Error>>()
            .map_err(D::Error::custom)?;
        let n = terms.first().map(|t| t.1.n_qubits()).unwrap_or(1);
        PauliSum::new(n, terms).map_err(D::Error::custom)
    }
}

/// Square complex matrix of power-of-two dimension, row-major.
///
/// Hermiticity is checked by the operations that need it rather than at
/// construction, so that malformed inputs can be reported with a useful
/// error.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseHermitian {
    dim: usize,
    entries: Vec<Complex64>,
}

impl DenseHermitian {
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Self, Error> {
        if dim == 0 || !dim.is_power_of_two() {
            return Err(Error::UnsupportedDimension(dim));
        }
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim, found: entries.len() });
        }
        Ok(DenseHermitian { dim, entries })
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for k in 0..dim {
                entries.push(f(r, k));
            }
        }
        DenseHermitian { dim, entries }
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self, Error> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: rows.iter().map(|r| r.len()).max().unwrap_or(0) });
        }
        DenseHermitian::new(dim, rows.iter().flatten().copied().collect())
    }

    pub fn from_real(m: &Mat) -> Self {
        DenseHermitian::from_fn(m.dim(), |r, k| c(m[(r, k)], 0.0))
    }

    pub fn zeros(dim: usize) -> Self {
        DenseHermitian::from_fn(dim, |_, _| c(0.0, 0.0))
    }

    pub fn identity(dim: usize) -> Self {
        DenseHermitian::from_fn(dim, |r, k| if r == k { c(1.0, 0.0) } else { c(0.0, 0.0) })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n_qubits(&self) -> usize {
        self.dim.trailing_zeros() as usize
    }

    pub fn get(&self, r: usize, k: usize) -> Complex64 {
        self.entries[r * self.dim + k]
    }

    pub fn hermitian_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for r in 0..self.dim {
            for k in r..self.dim {
                worst = worst.max((self.get(r, k) - self.get(k, r).conj()).norm());
            }
        }
        worst
    }

    pub fn check_hermitian(&self) -> Result<(), Error> {
        let d = self.hermitian_defect();
        if d > HERMITIAN_TOL {
            return Err(Error::NonHermitianInput(d));
        }
        Ok(())
    }

    pub fn real_part(&self) -> Mat {
        Mat::from_fn(self.dim, |r, k| self.get(r, k).re)
    }

    pub fn imag_part(&self) -> Mat {
        Mat::from_fn(self.dim, |r, k| self.get(r, k).im)
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(|z| z.im == 0.0)
    }

    pub fn is_imaginary(&self) -> bool {
        self.entries.iter().all(|z| z.re == 0.0)
    }

    pub fn matmul(&self, other: &DenseHermitian) -> DenseHermitian {
        let n = self.dim;
        DenseHermitian::from_fn(n, |r, k| (0..n).map(|m| self.get(r, m) * other.get(m, k)).sum())
    }

    pub fn adjoint(&self) -> DenseHermitian {
        DenseHermitian::from_fn(self.dim, |r, k| self.get(k, r).conj())
    }

    pub fn max_abs_diff(&self, other: &DenseHermitian) -> f64 {
        self.entries.iter().zip(&other.entries).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// `⟨u|self|v⟩` for complex vectors.
    pub fn sandwich(&self, u: &[Complex64], v: &[Complex64]) -> Complex64 {
        let n = self.dim;
        (0..n).map(|r| u[r].conj() * (0..n).map(|k| self.get(r, k) * v[k]).sum::<Complex64>()).sum()
    }

    pub fn column(&self, k: usize) -> Vec<Complex64> {
        (0..self.dim).map(|r| self.get(r, k)).collect()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DenseJson {
    dim: usize,
    re: Vec<Vec<f64>>,
    im: Vec<Vec<f64>>,
}

impl Serialize for DenseHermitian {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        DenseJson { dim: self.dim, re: self.real_part().rows(), im: self.imag_part().rows() }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for DenseHermitian {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = DenseJson::deserialize(de)?;
        let ok = j.re.len() == j.dim
            && j.im.len() == j.dim
            && j.re.iter().chain(&j.im).all(|r| r.len() == j.dim);
        if !ok {
            return Err(D::Error::custom(format!("matrix rows do not match dim {}", j.dim)));
        }
        let entries = j.re.iter().flatten().zip(j.im.iter().flatten()).map(|(a, b)| c(*a, *b)).collect();
        DenseHermitian::new(j.dim, entries).map_err(D::Error::custom)
    }
}

pub fn to_dense(p: &PauliSum) -> DenseHermitian {
    let dim = 1usize << p.n_qubits();
    let mut out = DenseHermitian::zeros(dim);
    for (k, s) in p.terms() {
        for r in 0..dim {
            for col in 0..dim {
                out.entries[r * dim + col] += k * s.element(r, col);
            }
        }
    }
    out
}

/// Pauli coefficients `tr(P·m)/2^n`, dropping those below 1e-12.
pub fn decompose_hermitian(m: &DenseHermitian) -> Result<PauliSum, Error> {
    m.check_hermitian()?;
    let n = m.n_qubits();
    let dim = m.dim();
    let mut terms = Vec::new();
    for s in PauliString::all(n) {
        let mut tr = c(0.0, 0.0);
        for r in 0..dim {
            for k in 0..dim {
                tr += s.element(r, k) * m.get(k, r);
            }
        }
        // tr(P·m) is real for Hermitian m; the imaginary remainder is rounding.
        let coeff = tr.re / dim as f64;
        if coeff.abs() > PRUNE_TOL {
            terms.push((c(coeff, 0.0), s));
        }
    }
    PauliSum::new(n, terms)
}

/// `W_R = (W + Wᵀ)/2` and `W_I = (W − Wᵀ)/2`.
pub fn hermitian_split(m: &DenseHermitian) -> Result<(DenseHermitian, DenseHermitian), Error> {
    m.check_hermitian()?;
    let n = m.dim();
    let re = DenseHermitian::from_fn(n, |r, k| c(m.get(r, k).re, 0.0));
    let im = DenseHermitian::from_fn(n, |r, k| c(0.0, m.get(r, k).im));
    Ok((re, im))
}

/// Eigen-decomposition by cyclic complex Jacobi rotations.
///
/// Eigenvalues come back ascending. Column `k` of the returned matrix is the
/// eigenvector for eigenvalue `k`, with its first component of modulus above
/// 1e-9 made real and positive.
pub fn eig_hermitian(m: &DenseHermitian) -> Result<(Vec<f64>, DenseHermitian), Error> {
    m.check_hermitian()?;
    let n = m.dim();
    if n > 16 {
        return Err(Error::UnsupportedDimension(n));
    }
    let mut a = m.clone();
    let mut v = DenseHermitian::identity(n);
    let total: f64 = a.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|r| (0..n).filter(move |k| *k != r).map(move |k| (r, k)))
            .map(|(r, k)| a.get(r, k).norm_sqr())
            .sum::<f64>()
            .sqrt();
        if off <= 1e-15 * total.max(1e-300) {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged {
        return Err(Error::ConvergenceFailure(MAX_SWEEPS));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|x, y| a.get(*x, *x).re.total_cmp(&a.get(*y, *y).re));
    let values = order.iter().map(|k| a.get(*k, *k).re).collect();
    let mut vecs = DenseHermitian::zeros(n);
    for (col, k) in order.iter().enumerate() {
        let mut u = v.column(*k);
        if let Some(first) = u.iter().find(|z| z.norm() > 1e-9).copied() {
            let phase = first.conj() / first.norm();
            u.iter_mut().for_each(|z| *z *= phase);
        }
        for r in 0..n {
            vecs.entries[r * n + col] = u[r];
        }
    }
    Ok((values, vecs))
}

/// One Jacobi rotation annihilating `a[p][q]`, accumulated into `v`.
fn rotate(a: &mut DenseHermitian, v: &mut DenseHermitian, p: usize, q: usize) {
    let n = a.dim;
    let apq = a.get(p, q);
    let r = apq.norm();
    if r < 1e-300 {
        return;
    }
    let e = apq / r;
    let tau = (a.get(q, q).re - a.get(p, p).re) / (2.0 * r);
    let t = if tau >= 0.0 { 1.0 / (tau + (1.0 + tau * tau).sqrt()) } else { -1.0 / (-tau + (1.0 + tau * tau).sqrt()) };
    let cs = 1.0 / (1.0 + t * t).sqrt();
    let sn = t * cs;
    // Unitary acting on coordinates (p, q): a phase on q making a[p][q] real,
    // followed by the real symmetric rotation.
    let u_pp = c(cs, 0.0);
    let u_pq = c(sn, 0.0);
    let u_qp = -e.conj() * sn;
    let u_qq = e.conj() * cs;
    for k in 0..n {
        let (x, y) = (a.get(k, p), a.get(k, q));
        a.entries[k * n + p] = x * u_pp + y * u_qp;
        a.entries[k * n + q] = x * u_pq + y * u_qq;
    }
    for k in 0..n {
        let (x, y) = (a.get(p, k), a.get(q, k));
        a.entries[p * n + k] = u_pp.conj() * x + u_qp.conj() * y;
        a.entries[q * n + k] = u_pq.conj() * x + u_qq.conj() * y;
    }
    a.entries[p * n + q] = c(0.0, 0.0);
    a.entries[q * n + p] = c(0.0, 0.0);
    a.entries[p * n + p].im = 0.0;
    a.entries[q * n + q].im = 0.0;
    for k in 0..n {
        let (x, y) = (v.get(k, p), v.get(k, q));
        v.entries[k * n + p] = x * u_pp + y * u_qp;
        v.entries[k * n + q] = x * u_pq + y * u_qq;
    }
}

/// `U · w_diag · U†`, with `U`'s columns the eigenvectors.
pub fn conjugate_to_computational(w_diag: &DenseHermitian, eigvecs: &DenseHermitian) -> Result<DenseHermitian, Error> {
    if w_diag.dim() != eigvecs.dim() {
        return Err(Error::DimensionMismatch { expected: w_diag.dim(), found: eigvecs.dim() });
    }
    let uu = eigvecs.adjoint().matmul(eigvecs);
    let defect = uu.max_abs_diff(&DenseHermitian::identity(eigvecs.dim()));
    if defect > 1e-10 {
        return Err(Error::InvalidConfig(format!("eigenvector matrix is not unitary (defect {defect:.2e})")));
    }
    let out = eigvecs.matmul(w_diag).matmul(&eigvecs.adjoint());
    // Remove rounding asymmetry so the result is Hermitian to machine precision.
    let n = out.dim();
    Ok(DenseHermitian::from_fn(n, |r, k| (out.get(r, k) + out.get(k, r).conj()) * 0.5))
}

/// The single-qubit Hadamard matrix.
pub fn hadamard() -> DenseHermitian {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    DenseHermitian::from_fn(2, |r, k| c(if r == 1 && k == 1 { -s } else { s }, 0.0))
}
