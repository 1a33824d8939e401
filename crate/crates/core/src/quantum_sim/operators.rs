//! Labeled bases, states, and the operators of the padded algorithm.
//!
//! Index labels are 0-based in code and printed 1-based.

use std::fmt;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::padding::PaddingParams;
use crate::error::{Error, Result};

/// Basis labels of the `n + 2` dimensional query space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SmallLabel {
    Index(u32),
    L,
    R,
}

/// Basis labels of the `C(n,2) + 3n + 3` dimensional space reached by `U(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BigLabel {
    Index(u32),
    L,
    R,
    /// `|i, j>` with `i < j`.
    Pair(u32, u32),
    IndexL(u32),
    IndexR(u32),
    LR,
}

impl BigLabel {
    /// Single labels `|k>, |L>, |R>`; everything else is a pair label.
    pub fn is_single(&self) -> bool {
        matches!(self, BigLabel::Index(_) | BigLabel::L | BigLabel::R)
    }
}

impl fmt::Display for SmallLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SmallLabel::Index(i) => write!(f, "|{}>", i + 1),
            SmallLabel::L => write!(f, "|L>"),
            SmallLabel::R => write!(f, "|R>"),
        }
    }
}

impl fmt::Display for BigLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BigLabel::Index(i) => write!(f, "|{}>", i + 1),
            BigLabel::L => write!(f, "|L>"),
            BigLabel::R => write!(f, "|R>"),
            BigLabel::Pair(i, j) => write!(f, "|{},{}>", i + 1, j + 1),
            BigLabel::IndexL(i) => write!(f, "|{},L>", i + 1),
            BigLabel::IndexR(i) => write!(f, "|{},R>", i + 1),
            BigLabel::LR => write!(f, "|L,R>"),
        }
    }
}

/// Which of the two Hilbert spaces a state lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Space {
    Small { n: u32 },
    Big { n: u32 },
}

fn pairs_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl Space {
    pub fn dim(&self) -> usize {
        match *self {
            Space::Small { n } => n as usize + 2,
            Space::Big { n } => {
                let n = n as usize;
                pairs_count(n) + 3 * n + 3
            }
        }
    }
}

pub fn small_index(n: u32, label: SmallLabel) -> usize {
    let n = n as usize;
    match label {
        SmallLabel::Index(i) => i as usize,
        SmallLabel::L => n,
        SmallLabel::R => n + 1,
    }
}

pub fn small_label(n: u32, idx: usize) -> SmallLabel {
    let nu = n as usize;
    match idx {
        i if i < nu => SmallLabel::Index(i as u32),
        i if i == nu => SmallLabel::L,
        _ => SmallLabel::R,
    }
}

/// Layout: `|k>` (n), `|L>`, `|R>`, `|i,j>` (lexicographic), `|k,L>` (n), `|k,R>` (n), `|L,R>`.
pub fn big_index(n: u32, label: BigLabel) -> usize {
    let n = n as usize;
    let pair_base = n + 2;
    let kl_base = pair_base + pairs_count(n);
    let kr_base = kl_base + n;
    match label {
        BigLabel::Index(i) => i as usize,
        BigLabel::L => n,
        BigLabel::R => n + 1,
        BigLabel::Pair(i, j) => {
            let (i, j) = (i as usize, j as usize);
            debug_assert!(i < j && j < n);
            pair_base + i * n - i * (i + 1) / 2 + (j - i - 1)
        }
        BigLabel::IndexL(i) => kl_base + i as usize,
        BigLabel::IndexR(i) => kr_base + i as usize,
        BigLabel::LR => kr_base + n,
    }
}

/// All labels of the big space in index order.
pub fn big_labels(n: u32) -> Vec<BigLabel> {
    let mut labels: Vec<BigLabel> = (0..n).map(BigLabel::Index).collect();
    labels.push(BigLabel::L);
    labels.push(BigLabel::R);
    for i in 0..n {
        for j in i + 1..n {
            labels.push(BigLabel::Pair(i, j));
        }
    }
    labels.extend((0..n).map(BigLabel::IndexL));
    labels.extend((0..n).map(BigLabel::IndexR));
    labels.push(BigLabel::LR);
    labels
}

/// An amplitude vector over one of the labeled bases.
#[derive(Debug, Clone, PartialEq)]
pub struct FullState {
    pub space: Space,
    pub amplitudes: DVector<Complex64>,
}

impl FullState {
    pub fn new(space: Space, amplitudes: DVector<Complex64>) -> Result<Self> {
        if amplitudes.len() != space.dim() {
            return Err(Error::Argument(format!(
                "state of length {} does not fit a space of dimension {}",
                amplitudes.len(),
                space.dim()
            )));
        }
        Ok(Self { space, amplitudes })
    }

    /// `(sum_i |i> + a|L> - b|R>) / sqrt(n_eff)`.
    pub fn initial(n: u32, params: &PaddingParams) -> Self {
        Self {
            space: Space::Small { n },
            amplitudes: axis_vector(n, params),
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// The reflection axis `|u> = (sum_i |i> + a|L> - b|R>) / sqrt(n_eff)`.
pub fn axis_vector(n: u32, params: &PaddingParams) -> DVector<Complex64> {
    let norm = params.n_eff.sqrt();
    let mut u = DVector::from_element(n as usize + 2, re(1.0 / norm));
    u[small_index(n, SmallLabel::L)] = re(params.a() / norm);
    u[small_index(n, SmallLabel::R)] = re(-params.b() / norm);
    u
}

/// Phase oracle `|i> -> (-1)^{x_i} |i>`, extended by `|L> -> |L>` and `|R> -> -|R>`.
pub fn build_oracle(x: &[bool]) -> DMatrix<Complex64> {
    let n = x.len();
    let mut diag: Vec<Complex64> = x.iter().map(|&b| re(if b { -1.0 } else { 1.0 })).collect();
    diag.push(re(1.0));
    diag.push(re(-1.0));
    debug_assert_eq!(diag.len(), n + 2);
    DMatrix::from_diagonal(&DVector::from_vec(diag))
}

/// `W(a, b) = 2|u><u| - I` on the small space, assembled column by column.
pub fn build_w(n: u32, params: &PaddingParams) -> DMatrix<Complex64> {
    let dim = n as usize + 2;
    // unnormalized axis v = sum_i |i> + a|L> - b|R>
    let mut v = vec![1.0; dim];
    v[small_index(n, SmallLabel::L)] = params.a();
    v[small_index(n, SmallLabel::R)] = -params.b();
    let scale = 2.0 / params.n_eff;
    DMatrix::from_fn(dim, dim, |row, col| {
        let reflect = scale * v[col] * v[row];
        re(if row == col { reflect - 1.0 } else { reflect })
    })
}

/// The specified columns of `U(a, b)`: an isometry from the small space into
/// the big space.
pub fn build_u(n: u32, params: &PaddingParams) -> DMatrix<Complex64> {
    let big_dim = Space::Big { n }.dim();
    let small_dim = n as usize + 2;
    let (a, b, n_eff) = (params.a(), params.b(), params.n_eff);
    let inv = 1.0 / n_eff;
    let inv_sqrt = 1.0 / n_eff.sqrt();
    let mut u = DMatrix::from_element(big_dim, small_dim, re(0.0));

    // shared single-label part: c * (sum_i |i> + a|L> - b|R>) / n_eff, so the
    // single block is |u><u|
    let put_single = |u: &mut DMatrix<Complex64>, col: usize, c: f64| {
        for i in 0..n {
            u[(big_index(n, BigLabel::Index(i)), col)] += re(c * inv);
        }
        u[(big_index(n, BigLabel::L), col)] += re(c * a * inv);
        u[(big_index(n, BigLabel::R), col)] += re(-c * b * inv);
    };

    for k in 0..n {
        let col = small_index(n, SmallLabel::Index(k));
        put_single(&mut u, col, 1.0);
        for i in 0..k {
            u[(big_index(n, BigLabel::Pair(i, k)), col)] += re(-inv_sqrt);
        }
        for i in k + 1..n {
            u[(big_index(n, BigLabel::Pair(k, i)), col)] += re(inv_sqrt);
        }
        u[(big_index(n, BigLabel::IndexL(k)), col)] += re(a * inv_sqrt);
        u[(big_index(n, BigLabel::IndexR(k)), col)] += re(b * inv_sqrt);
    }

    let col = small_index(n, SmallLabel::L);
    put_single(&mut u, col, a);
    for i in 0..n {
        u[(big_index(n, BigLabel::IndexL(i)), col)] += re(-inv_sqrt);
    }
    u[(big_index(n, BigLabel::LR), col)] += re(b * inv_sqrt);

    // signs on |R> follow the -b of the axis |u>; with +b, inputs padded
    // with b > 0 are no longer decided exactly
    let col = small_index(n, SmallLabel::R);
    put_single(&mut u, col, -b);
    for i in 0..n {
        u[(big_index(n, BigLabel::IndexR(i)), col)] += re(inv_sqrt);
    }
    u[(big_index(n, BigLabel::LR), col)] += re(a * inv_sqrt);

    u
}

/// Largest entry modulus of `m^dagger m - I`.
pub fn isometry_defect(m: &DMatrix<Complex64>) -> f64 {
    let gram = m.adjoint() * m;
    let id = DMatrix::<Complex64>::identity(gram.nrows(), gram.ncols());
    (gram - id).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cheb::BoundaryPair;
    use crate::instance::WeightInstance;
    use crate::quantum_sim::padding::padding_params;
    use approx::assert_abs_diff_eq;

    fn params(n: u32, k: u32, l: u32, d: u32, delta: u32, gamma: u32) -> PaddingParams {
        let inst = WeightInstance::new(n, k, l).unwrap();
        padding_params(inst, BoundaryPair::new(d, delta, gamma).unwrap()).unwrap()
    }

    #[test]
    fn labels_round_trip() {
        for n in 1..7 {
            let labels = big_labels(n);
            assert_eq!(labels.len(), Space::Big { n }.dim());
            for (idx, label) in labels.iter().enumerate() {
                assert_eq!(big_index(n, *label), idx);
            }
            for idx in 0..n as usize + 2 {
                assert_eq!(small_index(n, small_label(n, idx)), idx);
            }
        }
    }

    #[test]
    fn oracle_phases() {
        let o = build_oracle(&[false, false, false]);
        let diag: Vec<f64> = o.diagonal().iter().map(|z| z.re).collect();
        assert_eq!(diag, vec![1.0, 1.0, 1.0, 1.0, -1.0]);
        let o = build_oracle(&[true, false]);
        assert_eq!(o[(0, 0)].re, -1.0);
        let id = DMatrix::<Complex64>::identity(4, 4);
        assert_eq!(&o * &o, id);
    }

    #[test]
    fn w_reduces_to_grover_diffusion() {
        let p = params(2, 1, 2, 1, 0, 1);
        let w = build_w(2, &p);
        // 2/n J - I on the index block, identity-like reflection on the zero-amplitude pads
        assert_abs_diff_eq!(w[(0, 0)].re, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(w[(0, 1)].re, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(w[(2, 2)].re, -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(w[(3, 3)].re, -1.0, epsilon = 1e-12);
    }

    #[test]
    fn w_matches_column_rules_and_is_reflection() {
        let p = params(4, 0, 1, 2, 0, 0);
        let w = build_w(4, &p);
        let (a, b, ne) = (p.a(), p.b(), p.n_eff);
        // W|L> = 2a/ne (sum + aL - bR) - |L>
        let col = small_index(4, SmallLabel::L);
        assert_abs_diff_eq!(w[(0, col)].re, 2.0 * a / ne, epsilon = 1e-12);
        assert_abs_diff_eq!(w[(col, col)].re, 2.0 * a * a / ne - 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(w[(5, col)].re, -2.0 * a * b / ne, epsilon = 1e-12);
        assert!(isometry_defect(&w) < 1e-10);
        let id = DMatrix::<Complex64>::identity(6, 6);
        assert!((&w * &w - id).iter().all(|z| z.norm() < 1e-10));
        let u = axis_vector(4, &p);
        assert!((&w * &u - &u).iter().all(|z| z.norm() < 1e-10));
    }

    #[test]
    fn u_columns_orthonormal() {
        let p = params(10, 3, 7, 3, 1, 2);
        assert!(isometry_defect(&build_u(10, &p)) < 1e-10);
        let p = params(4, 0, 1, 2, 0, 0);
        assert!(isometry_defect(&build_u(4, &p)) < 1e-10);
    }

    #[test]
    fn u_deutsch_column() {
        // a = b = 0, n = 2: U|1> = (|1> + |2>)/2 + |1,2>/sqrt 2
        let p = params(2, 1, 2, 1, 0, 1);
        let u = build_u(2, &p);
        let col = small_index(2, SmallLabel::Index(0));
        assert_abs_diff_eq!(
            u[(big_index(2, BigLabel::Pair(0, 1)), col)].re,
            0.5f64.sqrt(),
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            u[(big_index(2, BigLabel::Index(1)), col)].re,
            0.5,
            epsilon = 1e-12
        );
    }
}
