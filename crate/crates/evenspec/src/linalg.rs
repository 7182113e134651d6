//! Dense symmetric matrices with optional exact rational entries,
//! eigenvalues via cyclic Jacobi, exact characteristic polynomials, and
//! square-spectrum certificates.
//!
//! Matrices are tiny (the pipeline never goes past a few dozen rows), so
//! everything is row-major `Vec<f64>` with no blocking. A matrix can carry
//! a parallel vector of `BigRational` entries; constructions propagate it
//! when they stay inside rational arithmetic, and certificates switch to
//! exact mode whenever it is present.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::graphs::Graph;
use crate::{Error, Result};

/// Default relative tolerance for numeric certificates.
pub const DEFAULT_TOL: f64 = 1e-8;
/// Off-diagonal entries at or below this magnitude do not count as edges.
pub const PATTERN_TOL: f64 = 1e-10;

const JACOBI_MAX_SWEEPS: usize = 100;
const JACOBI_REL_TOL: f64 = 1e-13;

// ============================================================
// SymMatrix
// ============================================================

#[derive(Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    a: Vec<f64>,
    exact: Option<Vec<BigRational>>,
}

impl std::fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "SymMatrix(n={}, exact={})", self.n, self.exact.is_some())?;
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| format!("{:>9.5}", self.get(i, j))).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("matrix order must be positive".into()));
        }
        Ok(SymMatrix { n, a: vec![0.0; n * n], exact: None })
    }

    /// Build from the row-major upper triangle including the diagonal:
    /// (0,0), (0,1), ..., (0,n-1), (1,1), ...
    pub fn from_upper(n: usize, upper: &[f64]) -> Result<Self> {
        let t = n * (n + 1) / 2;
        if upper.len() != t {
            return Err(Error::Invalid(format!(
                "upper triangle for order {n} needs {t} entries, got {}",
                upper.len()
            )));
        }
        let mut m = SymMatrix::zeros(n)?;
        let mut k = 0;
        for i in 0..n {
            for j in i..n {
                m.set(i, j, upper[k]);
                k += 1;
            }
        }
        Ok(m)
    }

    /// Same as [`from_upper`](Self::from_upper) but with exact entries;
    /// the float view is the rounded image.
    pub fn from_upper_exact(n: usize, upper: &[BigRational]) -> Result<Self> {
        let t = n * (n + 1) / 2;
        if upper.len() != t {
            return Err(Error::Invalid(format!(
                "upper triangle for order {n} needs {t} entries, got {}",
                upper.len()
            )));
        }
        let mut m = SymMatrix::zeros(n)?;
        let mut ex = vec![BigRational::zero(); n * n];
        let mut k = 0;
        for i in 0..n {
            for j in i..n {
                let v = upper[k]
                    .to_f64()
                    .ok_or_else(|| Error::Invalid("exact entry overflows f64".into()))?;
                m.set(i, j, v);
                ex[i * n + j] = upper[k].clone();
                ex[j * n + i] = upper[k].clone();
                k += 1;
            }
        }
        m.exact = Some(ex);
        Ok(m)
    }

    pub fn from_upper_i64(n: usize, upper: &[i64]) -> Result<Self> {
        let rats: Vec<BigRational> =
            upper.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect();
        SymMatrix::from_upper_exact(n, &rats)
    }

    /// Build from full rows, which must be exactly symmetric.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let mut m = SymMatrix::zeros(n)?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Invalid("ragged rows".into()));
            }
            for j in 0..n {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::Invalid(format!(
                        "not symmetric at ({i},{j}): {} vs {}",
                        rows[i][j], rows[j][i]
                    )));
                }
            }
            for (j, &v) in row.iter().enumerate() {
                m.a[i * n + j] = v;
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.n + j]
    }

    /// Set both (i,j) and (j,i). Drops exact entries (use
    /// [`set_exact`](Self::set_exact) to keep them in sync).
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.a[i * self.n + j] = v;
        self.a[j * self.n + i] = v;
        self.exact = None;
    }

    pub fn set_exact(&mut self, i: usize, j: usize, v: BigRational) -> Result<()> {
        let f = v.to_f64().ok_or_else(|| Error::Invalid("exact entry overflows f64".into()))?;
        let n = self.n;
        let ex = self.exact.as_mut().ok_or(Error::NoExactEntries)?;
        ex[i * n + j] = v.clone();
        ex[j * n + i] = v;
        self.a[i * n + j] = f;
        self.a[j * n + i] = f;
        Ok(())
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    pub fn exact_entry(&self, i: usize, j: usize) -> Option<&BigRational> {
        self.exact.as_ref().map(|ex| &ex[i * self.n + j])
    }

    /// Reinterpret every float entry as the dyadic rational it exactly is.
    /// Useful when a construction with irrational-looking but exactly
    /// representable entries should still get an exact certificate.
    pub fn promote_to_exact(&mut self) {
        if self.exact.is_none() {
            self.exact = Some(
                self.a
                    .iter()
                    .map(|&v| BigRational::from_float(v).expect("finite entries"))
                    .collect(),
            );
        }
    }

    pub fn upper_triangle(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.n * (self.n + 1) / 2);
        for i in 0..self.n {
            for j in i..self.n {
                out.push(self.get(i, j));
            }
        }
        out
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.a.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn mat_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n, "dimension mismatch");
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * x[j]).sum())
            .collect()
    }

    /// New matrix B with B[i][j] = A[perm[i]][perm[j]]; `perm` maps new
    /// positions to old ones. Exact entries are carried along.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::Invalid("permutation length mismatch".into()));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::Invalid("not a permutation".into()));
            }
            seen[p] = true;
        }
        let n = self.n;
        let mut out = SymMatrix::zeros(n)?;
        for i in 0..n {
            for j in 0..n {
                out.a[i * n + j] = self.a[perm[i] * n + perm[j]];
            }
        }
        if let Some(ex) = &self.exact {
            out.exact = Some(
                (0..n * n)
                    .map(|k| ex[perm[k / n] * n + perm[k % n]].clone())
                    .collect(),
            );
        }
        Ok(out)
    }

    /// A + alpha I. Exact entries survive when alpha is given exactly.
    pub fn shifted(&self, alpha: f64) -> Self {
        let mut out = self.clone();
        out.exact = None;
        for i in 0..self.n {
            out.a[i * self.n + i] += alpha;
        }
        out
    }

    pub fn shifted_exact(&self, alpha: &BigRational) -> Result<Self> {
        let ex = self.exact.as_ref().ok_or(Error::NoExactEntries)?;
        let n = self.n;
        let mut new_ex = ex.clone();
        let mut out = self.clone();
        for i in 0..n {
            new_ex[i * n + i] += alpha;
            out.a[i * n + i] = new_ex[i * n + i]
                .to_f64()
                .ok_or_else(|| Error::Invalid("exact entry overflows f64".into()))?;
        }
        out.exact = Some(new_ex);
        Ok(out)
    }
}

/// Off-diagonal support of `m` at tolerance `tol`: the graph with an edge
/// wherever |m[i][j]| > tol.
pub fn pattern_of(m: &SymMatrix, tol: f64) -> Result<Graph> {
    let mut g = Graph::empty(m.n())?;
    for i in 0..m.n() {
        for j in (i + 1)..m.n() {
            if m.get(i, j).abs() > tol {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

fn parse_entry_rational(t: &str) -> Option<BigRational> {
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q == BigInt::zero() {
            return None;
        }
        Some(BigRational::new(p, q))
    } else {
        t.trim().parse::<BigInt>().ok().map(BigRational::from_integer)
    }
}

/// Parse the plain-text matrix format: `n; row-major upper triangle
/// including the diagonal, whitespace separated`. When every entry is an
/// integer or a p/q ratio the matrix carries exact entries; otherwise
/// entries are read as floats.
pub fn parse_matrix_text(s: &str) -> Result<SymMatrix> {
    let (head, tail) = s
        .split_once(';')
        .ok_or_else(|| Error::Invalid("matrix text needs the form \"n; entries\"".into()))?;
    let n: usize = head
        .trim()
        .parse()
        .map_err(|_| Error::Invalid(format!("bad matrix order {:?}", head.trim())))?;
    let tokens: Vec<&str> = tail.split_whitespace().collect();
    let want = n * (n + 1) / 2;
    if tokens.len() != want {
        return Err(Error::Invalid(format!(
            "order {n} needs {want} upper-triangle entries, got {}",
            tokens.len()
        )));
    }
    let rats: Option<Vec<BigRational>> = tokens.iter().map(|t| parse_entry_rational(t)).collect();
    if let Some(rats) = rats {
        return SymMatrix::from_upper_exact(n, &rats);
    }
    let mut vals = Vec::with_capacity(want);
    for t in &tokens {
        let v: f64 =
            t.parse().map_err(|_| Error::Invalid(format!("bad matrix entry {t:?}")))?;
        if !v.is_finite() {
            return Err(Error::Invalid(format!("nonfinite matrix entry {t:?}")));
        }
        vals.push(v);
    }
    SymMatrix::from_upper(n, &vals)
}

// ============================================================
// eigenvalues (cyclic Jacobi)
// ============================================================

/// Scratch buffers for repeated eigensolves; the numeric search calls this
/// tens of millions of times.
pub(crate) struct EigenScratch {
    a: Vec<f64>,
    d: Vec<f64>,
    b: Vec<f64>,
    z: Vec<f64>,
}

impl EigenScratch {
    pub fn new(n: usize) -> Self {
        EigenScratch {
            a: vec![0.0; n * n],
            d: vec![0.0; n],
            b: vec![0.0; n],
            z: vec![0.0; n],
        }
    }

    /// Eigenvalues of the symmetric matrix stored row-major in `src`,
    /// ascending, written into the returned slice.
    pub fn eigenvalues(&mut self, src: &[f64], n: usize) -> &[f64] {
        debug_assert_eq!(src.len(), n * n);
        self.a[..n * n].copy_from_slice(src);
        jacobi(&mut self.a, n, &mut self.d, &mut self.b, &mut self.z);
        let d = &mut self.d[..n];
        d.sort_by(|x, y| x.partial_cmp(y).expect("eigenvalues are finite"));
        d
    }
}

/// Eigenvalues of `m`, ascending.
pub fn eigenvalues(m: &SymMatrix) -> Vec<f64> {
    let mut ws = EigenScratch::new(m.n());
    ws.eigenvalues(&m.a, m.n()).to_vec()
}

/// Cyclic Jacobi with the classic rotation scheme. Runs sweeps until the
/// off-diagonal Frobenius norm drops below 1e-13 of the initial Frobenius
/// norm (or to exact zero), capped at 100 sweeps.
fn jacobi(a: &mut [f64], n: usize, d: &mut [f64], b: &mut [f64], z: &mut [f64]) {
    let stop = JACOBI_REL_TOL * a.iter().map(|v| v * v).sum::<f64>().sqrt();
    for i in 0..n {
        b[i] = a[i * n + i];
        d[i] = b[i];
        z[i] = 0.0;
    }
    if n <= 1 {
        return;
    }
    for sweep in 0..JACOBI_MAX_SWEEPS {
        let mut sm = 0.0;
        let mut off2 = 0.0;
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                sm += a[p * n + q].abs();
                off2 += 2.0 * a[p * n + q] * a[p * n + q];
            }
        }
        if off2.sqrt() <= stop {
            return;
        }
        let tresh = if sweep < 4 { 0.2 * sm / (n * n) as f64 } else { 0.0 };
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                let g = 100.0 * apq.abs();
                // after enough sweeps, flush entries that no longer move d
                if sweep > 4 && d[p].abs() + g == d[p].abs() && d[q].abs() + g == d[q].abs() {
                    a[p * n + q] = 0.0;
                } else if apq.abs() > tresh {
                    let mut h = d[q] - d[p];
                    let t = if h.abs() + g == h.abs() {
                        apq / h
                    } else {
                        let theta = 0.5 * h / apq;
                        let t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                        if theta < 0.0 {
                            -t
                        } else {
                            t
                        }
                    };
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;
                    let tau = s / (1.0 + c);
                    h = t * apq;
                    z[p] -= h;
                    z[q] += h;
                    d[p] -= h;
                    d[q] += h;
                    a[p * n + q] = 0.0;
                    let rot = |a: &mut [f64], x: usize, y: usize| {
                        let gx = a[x];
                        let hy = a[y];
                        a[x] = gx - s * (hy + gx * tau);
                        a[y] = hy + s * (gx - hy * tau);
                    };
                    for j in 0..p {
                        rot(a, j * n + p, j * n + q);
                    }
                    for j in (p + 1)..q {
                        rot(a, p * n + j, j * n + q);
                    }
                    for j in (q + 1)..n {
                        rot(a, p * n + j, q * n + j);
                    }
                }
            }
        }
        for i in 0..n {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
    }
    debug_assert!(false, "jacobi failed to converge in {JACOBI_MAX_SWEEPS} sweeps");
}

/// Solve (m - shift I) x = b by Gaussian elimination with partial
/// pivoting. None when a pivot vanishes outright.
pub(crate) fn solve_shifted(m: &SymMatrix, shift: f64, b: &[f64]) -> Option<Vec<f64>> {
    let n = m.n();
    debug_assert_eq!(b.len(), n);
    let mut a = vec![0.0; n * (n + 1)];
    for i in 0..n {
        for j in 0..n {
            a[i * (n + 1) + j] = m.get(i, j) - if i == j { shift } else { 0.0 };
        }
        a[i * (n + 1) + n] = b[i];
    }
    let w = n + 1;
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&r, &s| {
                a[r * w + col]
                    .abs()
                    .partial_cmp(&a[s * w + col].abs())
                    .expect("finite")
            })
            .expect("nonempty");
        if a[piv * w + col] == 0.0 {
            return None;
        }
        if piv != col {
            for j in 0..w {
                a.swap(col * w + j, piv * w + j);
            }
        }
        for row in (col + 1)..n {
            let f = a[row * w + col] / a[col * w + col];
            for j in col..w {
                a[row * w + j] -= f * a[col * w + j];
            }
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut s = a[i * w + n];
        for j in (i + 1)..n {
            s -= a[i * w + j] * x[j];
        }
        x[i] = s / a[i * w + i];
        if !x[i].is_finite() {
            return None;
        }
    }
    Some(x)
}

/// Sharpen an approximate eigenvector of a *simple* eigenvalue by a few
/// rounds of inverse iteration. Returns a unit vector aligned with the
/// input direction.
pub(crate) fn polish_eigenvector(m: &SymMatrix, lambda: f64, v: &[f64], rounds: usize) -> Vec<f64> {
    let mut x = v.to_vec();
    let norm = |y: &[f64]| y.iter().map(|t| t * t).sum::<f64>().sqrt();
    let nx = norm(&x);
    if nx > 0.0 {
        x.iter_mut().for_each(|t| *t /= nx);
    }
    for _ in 0..rounds {
        match solve_shifted(m, lambda, &x) {
            Some(mut y) => {
                let ny = norm(&y);
                if !ny.is_finite() || ny == 0.0 {
                    break;
                }
                y.iter_mut().for_each(|t| *t /= ny);
                if y.iter().zip(&x).map(|(a, b)| a * b).sum::<f64>() < 0.0 {
                    y.iter_mut().for_each(|t| *t = -*t);
                }
                x = y;
            }
            None => break,
        }
    }
    x
}

// ============================================================
// exact polynomials
// ============================================================

/// Polynomial with rational coefficients, stored ascending by power with
/// no trailing zeros (the zero polynomial has no coefficients).
#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        RatPoly::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl std::fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for RatPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            if k > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                write!(f, "x")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

/// Exact characteristic polynomial det(xI - A) via Faddeev-LeVerrier.
/// Requires exact entries.
pub fn charpoly_exact(m: &SymMatrix) -> Result<RatPoly> {
    let ex = m.exact.as_ref().ok_or(Error::NoExactEntries)?;
    let n = m.n;
    // N starts as I; each round: M = A*N, c_k = -tr(M)/k, N = M + c_k I
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut nmat: Vec<BigRational> = (0..n * n)
        .map(|k| {
            if k / n == k % n {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
        .collect();
    for k in 1..=n {
        let mut prod = vec![BigRational::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigRational::zero();
                for l in 0..n {
                    s += &ex[i * n + l] * &nmat[l * n + j];
                }
                prod[i * n + j] = s;
            }
        }
        let mut tr = BigRational::zero();
        for i in 0..n {
            tr += &prod[i * n + i];
        }
        let ck = -tr / BigRational::from_integer(BigInt::from(k as i64));
        coeffs[n - k] = ck.clone();
        for i in 0..n {
            prod[i * n + i] += &ck;
        }
        nmat = prod;
    }
    Ok(RatPoly::new(coeffs))
}

/// Exact square root of a polynomial: returns g with g*g = p (normalized
/// to positive leading coefficient), or None when p is not a perfect
/// square. The candidate is forced coefficient by coefficient from the
/// top, then verified by one exact multiplication.
pub fn poly_square_root(p: &RatPoly) -> Option<RatPoly> {
    if p.is_zero() {
        return Some(RatPoly::zero());
    }
    let deg = p.degree().expect("nonzero");
    if deg % 2 != 0 {
        return None;
    }
    let m = deg / 2;
    let lead = p.coeff(deg);
    let s = sqrt_rational(&lead)?;
    let mut g = vec![BigRational::zero(); m + 1];
    g[m] = s.clone();
    let two_s = BigRational::from_integer(BigInt::from(2)) * &s;
    for k in ((deg - m)..deg).rev() {
        // coefficient of x^k in g*g: 2 g_m g_{k-m} + sum over interior pairs
        let lo = k - m;
        let mut interior = BigRational::zero();
        for i in (lo + 1)..m {
            let j = k - i;
            if j < i {
                break;
            }
            let term = &g[i] * &g[j];
            if i == j {
                interior += term;
            } else {
                interior += BigRational::from_integer(BigInt::from(2)) * term;
            }
        }
        g[lo] = (p.coeff(k) - interior) / &two_s;
    }
    let cand = RatPoly::new(g);
    if &cand.mul(&cand) == p {
        Some(cand)
    } else {
        None
    }
}

/// Rational square root, if the value is a perfect square.
fn sqrt_rational(v: &BigRational) -> Option<BigRational> {
    if v.is_negative() {
        return None;
    }
    let num = sqrt_bigint(v.numer())?;
    let den = sqrt_bigint(v.denom())?;
    Some(BigRational::new(num, den))
}

fn sqrt_bigint(v: &BigInt) -> Option<BigInt> {
    if v.is_negative() {
        return None;
    }
    let r = v.sqrt();
    if &(&r * &r) == v {
        Some(r)
    } else {
        None
    }
}

// ============================================================
// certificates
// ============================================================

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertMode {
    Exact,
    Numeric,
}

/// Evidence that a matrix does or does not have a square characteristic
/// polynomial (equivalently: all eigenvalue multiplicities even).
#[derive(Clone, Debug)]
pub struct SpectrumCertificate {
    /// Eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
    /// Max over consecutive sorted pairs of the in-pair gap; 0 for odd
    /// orders (where parity alone already decides).
    pub max_gap: f64,
    pub is_square: bool,
    /// Odd matrix order: the polynomial cannot be a square for parity
    /// reasons, regardless of gaps.
    pub odd_order: bool,
    pub mode: CertMode,
    /// In exact mode, the monic square root of the characteristic
    /// polynomial when it exists.
    pub sqrt_poly: Option<RatPoly>,
}

/// Decide, at tolerance `tol`, whether the characteristic polynomial of
/// `m` is a perfect square. Uses exact arithmetic whenever the matrix
/// carries exact entries, numeric eigenvalue pairing otherwise. Odd order
/// is reported via `odd_order` with `is_square` false, never an error.
pub fn certify_square(m: &SymMatrix, tol: f64) -> SpectrumCertificate {
    let eig = eigenvalues(m);
    let n = m.n();
    let odd = n % 2 != 0;
    let (max_gap, paired) = if odd {
        (0.0, false)
    } else {
        let mut max_gap = 0.0f64;
        for i in (0..n).step_by(2) {
            max_gap = max_gap.max(eig[i + 1] - eig[i]);
        }
        let spread = eig[n - 1] - eig[0];
        (max_gap, max_gap <= tol * spread.max(1.0))
    };
    if m.is_exact() {
        let p = charpoly_exact(m).expect("exact entries checked");
        let root = poly_square_root(&p);
        SpectrumCertificate {
            eigenvalues: eig,
            max_gap,
            is_square: root.is_some(),
            odd_order: odd,
            mode: CertMode::Exact,
            sqrt_poly: root,
        }
    } else {
        SpectrumCertificate {
            eigenvalues: eig,
            max_gap,
            is_square: !odd && paired,
            odd_order: odd,
            mode: CertMode::Numeric,
            sqrt_poly: None,
        }
    }
}

// ============================================================
// tests
// ============================================================
