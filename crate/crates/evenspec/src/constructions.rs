//! Certified "yes" constructions.
//!
//! Every builder in this module assembles a concrete matrix, recomputes
//! its off-diagonal pattern, certifies the square-spectrum property and
//! only then hands out a [`CertifiedMatrix`]. The constructions cover
//! skew pairs (even cycles), tensor products, eigenvalue-sharing joins,
//! clique blowups, arbitrary spectra on complete patterns, and rank-two
//! Gram realizations of graphs whose complement decomposes into complete
//! bipartite parts joined with a clique.

use crate::graphs::Graph;
use crate::linalg::{
    certify_square, eigenvalues, pattern_of, polish_eigenvector, SpectrumCertificate, SymMatrix,
    DEFAULT_TOL, PATTERN_TOL,
};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// ============================================================
// certified matrices
// ============================================================

/// A matrix whose pattern and spectrum evidence have been re-verified
/// after construction.
#[derive(Clone)]
pub struct CertifiedMatrix {
    pub matrix: SymMatrix,
    pub graph: Graph,
    pub certificate: SpectrumCertificate,
    /// Construction name and parameters, for records and logs.
    pub provenance: String,
}

impl CertifiedMatrix {
    /// Re-derive the pattern, require it to equal `expected`, and require
    /// a positive square certificate.
    pub fn certified(
        matrix: SymMatrix,
        expected: &Graph,
        provenance: impl Into<String>,
    ) -> Result<Self> {
        let got = pattern_of(&matrix, PATTERN_TOL)?;
        if &got != expected {
            return Err(Error::Pattern(format!(
                "built {} edges on {} vertices, expected {} on {}",
                got.edge_count(),
                got.n(),
                expected.edge_count(),
                expected.n()
            )));
        }
        let certificate = certify_square(&matrix, DEFAULT_TOL);
        if !certificate.is_square {
            return Err(Error::Certificate(format!(
                "characteristic polynomial is not a square (max pair gap {:.3e})",
                certificate.max_gap
            )));
        }
        Ok(CertifiedMatrix { matrix, graph: got, certificate, provenance: provenance.into() })
    }

    /// Pattern check only; the certificate is attached as computed and
    /// may be negative. Odd-order Gram realizations are valid
    /// constructions whose polynomial x^(n-2)(x-a)^2 cannot be a square
    /// for parity reasons.
    pub fn pattern_only(
        matrix: SymMatrix,
        expected: &Graph,
        provenance: impl Into<String>,
    ) -> Result<Self> {
        let got = pattern_of(&matrix, PATTERN_TOL)?;
        if &got != expected {
            return Err(Error::Pattern(format!(
                "built {} edges on {} vertices, expected {} on {}",
                got.edge_count(),
                got.n(),
                expected.edge_count(),
                expected.n()
            )));
        }
        let certificate = certify_square(&matrix, DEFAULT_TOL);
        Ok(CertifiedMatrix { matrix, graph: got, certificate, provenance: provenance.into() })
    }

    pub fn order(&self) -> usize {
        self.matrix.n()
    }
}

fn perfect_sqrt(x: usize) -> Option<usize> {
    let s = (x as f64).sqrt().round() as usize;
    (s.saturating_sub(1)..=s + 1).find(|&c| c * c == x)
}

// ============================================================
// skew pairs
// ============================================================

/// Double `a` through a skew coupling: M = [[A, S], [-S, A]] up to
/// symmetry, concretely M[i][n+j] = S[i][j] with S antisymmetric, so the
/// symmetric matrix pairs every eigenvalue of A' = A + iS with its
/// conjugate and every eigenvalue of M has even multiplicity.
///
/// `s_upper` holds the strict upper triangle of S row-major:
/// (0,1), (0,2), ..., (n-2,n-1).
pub fn skew_pair(a: &SymMatrix, s_upper: &[f64]) -> Result<SymMatrix> {
    let n = a.n();
    let want = n * (n - 1) / 2;
    if s_upper.len() != want {
        return Err(Error::Invalid(format!(
            "skew data for order {n} needs {want} entries, got {}",
            s_upper.len()
        )));
    }
    if !s_upper.iter().all(|v| v.is_finite()) {
        return Err(Error::Invalid("skew entries must be finite".into()));
    }
    let s_at = |i: usize, j: usize| -> f64 {
        // S[i][j], antisymmetric off the diagonal
        if i == j {
            0.0
        } else if i < j {
            s_upper[i * (2 * n - i - 1) / 2 + j - i - 1]
        } else {
            -s_upper[j * (2 * n - j - 1) / 2 + i - j - 1]
        }
    };
    let nn = 2 * n;
    let mut up = Vec::with_capacity(nn * (nn + 1) / 2);
    for i in 0..nn {
        for j in i..nn {
            let v = match (i < n, j < n) {
                (true, true) => a.get(i, j),
                (true, false) => s_at(i, j - n),
                (false, false) => a.get(i - n, j - n),
                (false, true) => unreachable!(),
            };
            up.push(v);
        }
    }
    if a.is_exact() {
        // adopt the skew entries at their exact binary values so the
        // doubled matrix stays certifiable in exact mode
        let exact: Option<Vec<BigRational>> = (0..nn)
            .flat_map(|i| (i..nn).map(move |j| (i, j)))
            .map(|(i, j)| match (i < n, j < n) {
                (true, true) => a.exact_entry(i, j).cloned(),
                (true, false) => BigRational::from_float(s_at(i, j - n)),
                (false, false) => a.exact_entry(i - n, j - n).cloned(),
                (false, true) => unreachable!(),
            })
            .collect();
        if let Some(ex) = exact {
            return SymMatrix::from_upper_exact(nn, &ex);
        }
    }
    SymMatrix::from_upper(nn, &up)
}

/// The even cycle C_{2m} as a skew pair over the path on m vertices,
/// coupling the path ends: A = path adjacency, S = E_{1m} - E_{m1}.
/// Exact integer entries, so the certificate is exact.
pub fn cycle_matrix(order: usize) -> Result<CertifiedMatrix> {
    if order < 4 || order % 2 != 0 {
        return Err(Error::Invalid(format!(
            "cycle construction needs an even order >= 4, got {order}"
        )));
    }
    let m = order / 2;
    let mut up = vec![0i64; m * (m + 1) / 2];
    let mut pos = 0;
    for i in 0..m {
        for j in i..m {
            if j == i + 1 {
                up[pos] = 1;
            }
            pos += 1;
        }
    }
    let a = SymMatrix::from_upper_i64(m, &up)?;
    let mut s = vec![0.0; m * (m - 1) / 2];
    s[m - 2] = -1.0; // S[0][m-1]; the antisymmetric mate closes the cycle
    let doubled = skew_pair(&a, &s)?;
    CertifiedMatrix::certified(doubled, &Graph::cycle(order)?, format!("cycle_matrix({order})"))
}

// ============================================================
// tensor products
// ============================================================

/// Kronecker product. Entry ((i,k),(j,l)) = a[i][j] * b[k][l] at row
/// index i*nb + k; the spectrum is all pairwise eigenvalue products and
/// the pattern is the tensor product of the patterns with loops at
/// nonzero diagonal entries.
pub fn kron(a: &SymMatrix, b: &SymMatrix) -> Result<SymMatrix> {
    let (na, nb) = (a.n(), b.n());
    let n = na
        .checked_mul(nb)
        .ok_or_else(|| Error::Capacity("tensor order overflows".into()))?;
    let exact = a.is_exact() && b.is_exact();
    let mut up = Vec::with_capacity(n * (n + 1) / 2);
    let mut upx = if exact { Vec::with_capacity(n * (n + 1) / 2) } else { Vec::new() };
    for p in 0..n {
        for q in p..n {
            let (i, k) = (p / nb, p % nb);
            let (j, l) = (q / nb, q % nb);
            up.push(a.get(i, j) * b.get(k, l));
            if exact {
                upx.push(a.exact_entry(i, j).unwrap() * b.exact_entry(k, l).unwrap());
            }
        }
    }
    if exact {
        SymMatrix::from_upper_exact(n, &upx)
    } else {
        SymMatrix::from_upper(n, &up)
    }
}

// ============================================================
// joins through a shared eigenvalue
// ============================================================

/// Result of gluing two blocks through a shared eigenvalue; keeps the
/// data needed to lift eigenvectors of the blocks to the join.
#[derive(Clone)]
pub struct HsJoin {
    pub matrix: SymMatrix,
    split: usize,
    u: Vec<f64>,
}

impl HsJoin {
    /// Start of the b block.
    pub fn split(&self) -> usize {
        self.split
    }

    /// An eigenpair (v, alpha) of a, with v the first split entries and
    /// alpha the last, lifts to (v, alpha * u) for the same eigenvalue.
    pub fn lift_a(&self, v: &[f64], alpha: f64) -> Vec<f64> {
        debug_assert_eq!(v.len(), self.split);
        let mut out = Vec::with_capacity(self.split + self.u.len());
        out.extend_from_slice(v);
        out.extend(self.u.iter().map(|t| alpha * t));
        out
    }

    /// An eigenvector w of b orthogonal to u lifts to (0, ..., 0, w) for
    /// the same eigenvalue.
    pub fn lift_b(&self, w: &[f64]) -> Vec<f64> {
        debug_assert_eq!(w.len(), self.u.len());
        let mut out = vec![0.0; self.split];
        out.extend_from_slice(w);
        out
    }
}

/// Join a = [[A1, c], [c^T, mu1]] with b through the eigenvalue mu1 of
/// b, whose unit eigenvector is u:
///
///   C = [[A1, c u^T], [u c^T, B]]
///
/// spec(C) = spec(a) together with spec(b) minus one copy of mu1. The
/// output is always numeric: the couplings c_i * u_j are generically
/// irrational even for exact inputs.
pub fn hs_join(a: &SymMatrix, b: &SymMatrix, u: &[f64], mu1: f64) -> Result<HsJoin> {
    let (na, nb) = (a.n(), b.n());
    if u.len() != nb {
        return Err(Error::Invalid(format!(
            "eigenvector length {} does not match block order {nb}",
            u.len()
        )));
    }
    let corner = a.get(na - 1, na - 1);
    if (corner - mu1).abs() > 1e-10 * mu1.abs().max(1.0) {
        return Err(Error::Invalid(format!(
            "last diagonal of a must equal mu1 = {mu1}, found {corner}"
        )));
    }
    let norm = u.iter().map(|t| t * t).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(Error::Invalid(format!("u must be a unit vector, |u| = {norm}")));
    }
    let bu = b.mat_vec(u);
    let res =
        bu.iter().zip(u).map(|(x, t)| (x - mu1 * t) * (x - mu1 * t)).sum::<f64>().sqrt();
    if res > 1e-10 {
        return Err(Error::Invalid(format!(
            "u is not an eigenvector of b for {mu1}: residual {res:.3e}"
        )));
    }
    let split = na - 1;
    let n = split + nb;
    let mut up = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            let v = if j < split {
                a.get(i, j)
            } else if i < split {
                a.get(i, split) * u[j - split]
            } else {
                b.get(i - split, j - split)
            };
            up.push(v);
        }
    }
    Ok(HsJoin { matrix: SymMatrix::from_upper(n, &up)?, split, u: u.to_vec() })
}

/// Glue a clique of order 2m+1 onto vertex v of a certified matrix: the
/// diagonal at v is shifted to t = 2m+1, v is moved last, and the all-one
/// matrix J_t is joined through its eigenvalue t with eigenvector
/// e/sqrt(t). The pattern replaces v by a t-clique sharing v's
/// neighborhood; the spectrum gains 2m zeros and shifts by t - a_vv.
///
/// When the input is exact and t is a perfect square the couplings stay
/// rational and the certificate is exact.
pub fn clique_blowup(c: &CertifiedMatrix, v: usize, m: usize) -> Result<CertifiedMatrix> {
    let n = c.order();
    if v >= n {
        return Err(Error::Invalid(format!("vertex {v} out of range for order {n}")));
    }
    let t = 2 * m + 1;
    let mut perm: Vec<usize> = (0..n).filter(|&x| x != v).collect();
    perm.push(v);

    let nn = n - 1 + t;
    let mut expected = Graph::empty(nn)?;
    for (i2, &i) in perm[..n - 1].iter().enumerate() {
        for (j2, &j) in perm[..n - 1].iter().enumerate().skip(i2 + 1) {
            if c.graph.has_edge(i, j) {
                expected.add_edge(i2, j2)?;
            }
        }
    }
    for (i2, &i) in perm[..n - 1].iter().enumerate() {
        if c.graph.has_edge(i, v) {
            for k in 0..t {
                expected.add_edge(i2, n - 1 + k)?;
            }
        }
    }
    for k in 0..t {
        for l in k + 1..t {
            expected.add_edge(n - 1 + k, n - 1 + l)?;
        }
    }

    let prov = format!("clique_blowup(v={v}, m={m}) of [{}]", c.provenance);
    if let (true, Some(s)) = (c.matrix.is_exact(), perfect_sqrt(t)) {
        let tq = BigRational::from_integer(BigInt::from(t as i64));
        let alpha = &tq - c.matrix.exact_entry(v, v).unwrap();
        let ap = c.matrix.shifted_exact(&alpha)?.permuted(&perm)?;
        let sq = BigRational::from_integer(BigInt::from(s as i64));
        let mut upx = Vec::with_capacity(nn * (nn + 1) / 2);
        for i in 0..nn {
            for j in i..nn {
                let val = if j < n - 1 {
                    ap.exact_entry(i, j).unwrap().clone()
                } else if i < n - 1 {
                    ap.exact_entry(i, n - 1).unwrap() / &sq
                } else {
                    BigRational::one()
                };
                upx.push(val);
            }
        }
        let out = SymMatrix::from_upper_exact(nn, &upx)?;
        return CertifiedMatrix::certified(out, &expected, prov);
    }

    let alpha = t as f64 - c.matrix.get(v, v);
    let ap = c.matrix.shifted(alpha).permuted(&perm)?;
    let ones = vec![1.0; t * (t + 1) / 2];
    let j = SymMatrix::from_upper(t, &ones)?;
    let h = 1.0 / (t as f64).sqrt();
    let join = hs_join(&ap, &j, &vec![h; t], t as f64)?;
    CertifiedMatrix::certified(join.matrix, &expected, prov)
}

/// Spectrum-preserving join of two matrices: requires the last diagonal
/// of a to be 2 and of b to be 0. Internally a is joined with
/// [[1,1],[1,1]] through its eigenvalue 2 (eigenvector (1,1)/sqrt 2),
/// which leaves a 0-eigenvector supported on the two new vertices only;
/// joining b through that vector glues the blocks without consuming any
/// eigenvalue: spec(C) = spec(a) together with spec(b).
///
/// Layout: [b-rest, a-rest, c1, c2] where c1, c2 are the two carriers.
pub fn pq_join(a: &SymMatrix, b: &SymMatrix) -> Result<SymMatrix> {
    let (na, nb) = (a.n(), b.n());
    let ca = a.get(na - 1, na - 1);
    if (ca - 2.0).abs() > 1e-12 {
        return Err(Error::Invalid(format!("last diagonal of a must be 2, found {ca}")));
    }
    let cb = b.get(nb - 1, nb - 1);
    if cb.abs() > 1e-12 {
        return Err(Error::Invalid(format!("last diagonal of b must be 0, found {cb}")));
    }
    let h = 0.5f64.sqrt();
    let ones = SymMatrix::from_upper(2, &[1.0, 1.0, 1.0])?;
    let d = hs_join(a, &ones, &[h, h], 2.0)?;
    // (0,...,0,h,-h) is an exact 0-eigenvector of d: the identical
    // products against the coupling column and the ones rows cancel
    let mut w = vec![0.0; na + 1];
    w[na - 1] = h;
    w[na] = -h;
    Ok(hs_join(b, &d.matrix, &w, 0.0)?.matrix)
}

/// Graph-level wrapper for [`pq_join`]: shift the chosen corners of two
/// certified matrices to 2 and 0, join, and certify against the glued
/// pattern, where both carrier vertices inherit the neighborhoods of
/// v_a and v_b and are joined to each other.
pub fn graph_pq_join(
    ca: &CertifiedMatrix,
    va: usize,
    cb: &CertifiedMatrix,
    vb: usize,
) -> Result<CertifiedMatrix> {
    let (na, nb) = (ca.order(), cb.order());
    if va >= na || vb >= nb {
        return Err(Error::Invalid("corner vertex out of range".into()));
    }
    if is_scalar(&ca.matrix) {
        return Err(Error::Invalid(
            "left input is scalar: its corner has no couplings to spread".into(),
        ));
    }
    let mut pa: Vec<usize> = (0..na).filter(|&x| x != va).collect();
    pa.push(va);
    let mut pb: Vec<usize> = (0..nb).filter(|&x| x != vb).collect();
    pb.push(vb);
    let a2 = ca.matrix.shifted(2.0 - ca.matrix.get(va, va)).permuted(&pa)?;
    let b2 = cb.matrix.shifted(-cb.matrix.get(vb, vb)).permuted(&pb)?;
    let joined = pq_join(&a2, &b2)?;

    let n = na + nb;
    let mapb = |y: usize| if y < vb { y } else { y - 1 };
    let mapa = |x: usize| nb - 1 + if x < va { x } else { x - 1 };
    let (c1, c2) = (n - 2, n - 1);
    let mut expected = Graph::empty(n)?;
    for (x, y) in cb.graph.edges() {
        if x != vb && y != vb {
            expected.add_edge(mapb(x), mapb(y))?;
        }
    }
    for (x, y) in ca.graph.edges() {
        if x != va && y != va {
            expected.add_edge(mapa(x), mapa(y))?;
        }
    }
    for x in ca.graph.neighbors(va) {
        expected.add_edge(c1, mapa(x))?;
        expected.add_edge(c2, mapa(x))?;
    }
    for y in cb.graph.neighbors(vb) {
        expected.add_edge(c1, mapb(y))?;
        expected.add_edge(c2, mapb(y))?;
    }
    expected.add_edge(c1, c2)?;
    CertifiedMatrix::certified(
        joined,
        &expected,
        format!("graph_pq_join(va={va}, vb={vb}) of [{}] and [{}]", ca.provenance, cb.provenance),
    )
}

fn is_scalar(m: &SymMatrix) -> bool {
    let n = m.n();
    let mut dmin = f64::INFINITY;
    let mut dmax = f64::NEG_INFINITY;
    for i in 0..n {
        dmin = dmin.min(m.get(i, i));
        dmax = dmax.max(m.get(i, i));
        for j in i + 1..n {
            if m.get(i, j).abs() > PATTERN_TOL {
                return false;
            }
        }
    }
    dmax - dmin <= PATTERN_TOL * dmax.abs().max(1.0)
}

// ============================================================
// complete patterns with prescribed spectra
// ============================================================

/// A target spectrum plus an optional zero-nonzero request for the
/// eigenvector tracked for the first listed value.
#[derive(Clone)]
pub struct SpectrumTarget {
    values: Vec<f64>,
    support: Option<Vec<bool>>,
}

impl SpectrumTarget {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Invalid("empty spectrum".into()));
        }
        if !values.iter().all(|v| v.is_finite()) {
            return Err(Error::Invalid("target values must be finite".into()));
        }
        Ok(SpectrumTarget { values, support: None })
    }

    /// `support[i]` requests a nonzero (true) or zero (false) entry at
    /// position i of the tracked eigenvector; at least two nonzeros.
    pub fn with_support(values: Vec<f64>, support: Vec<bool>) -> Result<Self> {
        let mut t = Self::new(values)?;
        if support.len() != t.values.len() {
            return Err(Error::Invalid("support length must match the value count".into()));
        }
        if support.iter().filter(|&&b| b).count() < 2 {
            return Err(Error::Invalid("eigenvector support needs at least two nonzeros".into()));
        }
        t.support = Some(support);
        Ok(t)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn support(&self) -> Option<&[bool]> {
        self.support.as_deref()
    }
}

/// A realization on the complete pattern: the matrix, its graph and the
/// unit eigenvector tracked for the first target value.
#[derive(Clone)]
pub struct RealizedComplete {
    pub matrix: SymMatrix,
    pub graph: Graph,
    pub eigenvector: Vec<f64>,
}

/// Pick a point strictly inside the interval spanned by x and y, at
/// least `guard` away from every listed value. Candidates halve toward x
/// starting from the midpoint.
fn interior_point(x: f64, y: f64, avoid: &[f64], guard: f64) -> Result<f64> {
    let (lo, hi) = if x < y { (x, y) } else { (y, x) };
    if hi - lo <= 2.0 * guard {
        return Err(Error::Unrealizable(format!(
            "interval ({lo}, {hi}) too narrow to place a diagonal entry"
        )));
    }
    let mut frac = 0.5;
    for _ in 0..12 {
        let c = x + (y - x) * frac;
        if avoid.iter().all(|a| (c - a).abs() > guard) {
            return Ok(c);
        }
        frac *= 0.5;
    }
    Err(Error::Unrealizable("no admissible interior diagonal entry".into()))
}

/// A 2x2 block with spectrum {mu, lam}: B = [[mu+lam-d, s], [s, d]] with
/// d strictly between the two values and s = sqrt(-(mu-d)(lam-d)) > 0.
/// Returns (B, d, unit eigenvector for mu, unit eigenvector for lam).
fn bridge_block(
    mu: f64,
    lam: f64,
    avoid: &[f64],
    guard: f64,
) -> Result<(SymMatrix, f64, [f64; 2], [f64; 2])> {
    let d = interior_point(mu, lam, avoid, guard)?;
    let s = (-(mu - d) * (lam - d)).sqrt();
    let b = SymMatrix::from_upper(2, &[mu + lam - d, s, d])?;
    let unit = |v: [f64; 2]| {
        let n = (v[0] * v[0] + v[1] * v[1]).sqrt();
        [v[0] / n, v[1] / n]
    };
    Ok((b, d, unit([s, d - lam]), unit([s, d - mu])))
}

/// Realize an arbitrary multiset on the complete pattern, tracking
/// nothing. Returns the matrix and its last diagonal entry, which dodges
/// every value in `avoid`.
fn plain_complete(vals: &[f64], avoid: &[f64], guard: f64) -> Result<(SymMatrix, f64)> {
    if vals.len() == 1 {
        return Ok((SymMatrix::from_upper(1, &[vals[0]])?, vals[0]));
    }
    let mut v = vals.to_vec();
    let imax = (0..v.len()).max_by(|&i, &j| v[i].total_cmp(&v[j])).unwrap();
    v.swap(0, imax);
    let imin = (1..v.len()).min_by(|&i, &j| v[i].total_cmp(&v[j])).unwrap();
    v.swap(1, imin);
    if v[0] == v[1] {
        return Err(Error::Unrealizable(
            "a complete pattern needs at least two distinct eigenvalues".into(),
        ));
    }
    let mut av = avoid.to_vec();
    if v.len() > 2 {
        av.push(v[2]);
    }
    let (mut mat, mut dlast, _, _) = bridge_block(v[0], v[1], &av, guard)?;
    for j in 2..v.len() {
        let mut av = avoid.to_vec();
        if j + 1 < v.len() {
            av.push(v[j + 1]);
        }
        let (bj, d2, u_mu, _) = bridge_block(dlast, v[j], &av, guard)?;
        mat = hs_join(&mat, &bj, &u_mu, dlast)?.matrix;
        dlast = d2;
    }
    Ok((mat, dlast))
}

/// Realize a target spectrum on the complete pattern, tracking a unit
/// eigenvector for the first value whose zero-nonzero pattern matches the
/// requested support (default: all nonzero).
///
/// The first two values must be distinct; n = 1 targets are rejected.
/// When values[0] < values[1] the whole problem is negated, realized, and
/// negated back, so the tracked value stays values[0].
pub fn realize_complete(target: &SpectrumTarget) -> Result<RealizedComplete> {
    let vals = target.values();
    let n = vals.len();
    if n < 2 {
        return Err(Error::Invalid("need at least two target values".into()));
    }
    if vals[0] == vals[1] {
        return Err(Error::Invalid("the first two target values must be distinct".into()));
    }
    let support = match target.support() {
        Some(s) => s.to_vec(),
        None => vec![true; n],
    };
    if vals[0] < vals[1] {
        let neg: Vec<f64> = vals.iter().map(|v| -v).collect();
        let flipped = SpectrumTarget { values: neg, support: Some(support) };
        let r = realize_complete(&flipped)?;
        let nn = r.matrix.n();
        let mut up = r.matrix.upper_triangle();
        up.iter_mut().for_each(|v| *v = -*v);
        return Ok(RealizedComplete {
            matrix: SymMatrix::from_upper(nn, &up)?,
            graph: r.graph,
            eigenvector: r.eigenvector,
        });
    }
    let k = support.iter().filter(|&&b| b).count();
    let scale = vals.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let guard = 1e-9 * scale;

    // core: realize values 1..j* on n-k+1 vertices, then append the
    // tracked value through a bridge; its eigenvector lives on the two
    // bridge vertices. Each growth step appends one more value and
    // widens the support by one through the a-side lift.
    let jstar = n - k + 2;
    let (mat0, d0) = plain_complete(&vals[1..jstar], &[vals[0]], guard)?;
    let mut av = Vec::new();
    if jstar < n {
        av.push(vals[jstar]);
    }
    let (bcore, d1, u_mu, w_lam) = bridge_block(d0, vals[0], &av, guard)?;
    let core = hs_join(&mat0, &bcore, &u_mu, d0)?;
    let mut vecv = core.lift_b(&w_lam);
    let mut mat = core.matrix;
    let mut dlast = d1;
    for j in jstar..n {
        let mut av = Vec::new();
        if j + 1 < n {
            av.push(vals[j + 1]);
        }
        let (bj, d2, u2, _) = bridge_block(dlast, vals[j], &av, guard)?;
        let join = hs_join(&mat, &bj, &u2, dlast)?;
        let alpha = *vecv.last().unwrap();
        let head = &vecv[..vecv.len() - 1];
        vecv = join.lift_a(head, alpha);
        mat = join.matrix;
        dlast = d2;
    }

    // the construction has its k nonzeros in the trailing slots; permute
    // them to the requested positions
    let mut perm = vec![0usize; n];
    let mut z = 0;
    let mut p = n - k;
    for (i, &s) in support.iter().enumerate() {
        if s {
            perm[i] = p;
            p += 1;
        } else {
            perm[i] = z;
            z += 1;
        }
    }
    let mat = mat.permuted(&perm)?;
    let vecv: Vec<f64> = perm.iter().map(|&q| vecv[q]).collect();

    let graph = pattern_of(&mat, PATTERN_TOL)?;
    if !graph.is_complete() {
        return Err(Error::Unrealizable(
            "a coupling collapsed below the pattern tolerance".into(),
        ));
    }
    let got = eigenvalues(&mat);
    let mut want = vals.to_vec();
    want.sort_by(f64::total_cmp);
    let drift =
        got.iter().zip(&want).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    if drift > 1e-8 * scale {
        return Err(Error::Certificate(format!("spectrum drifted by {drift:.3e}")));
    }
    let mv = mat.mat_vec(&vecv);
    let res = mv
        .iter()
        .zip(&vecv)
        .map(|(x, t)| (x - vals[0] * t) * (x - vals[0] * t))
        .sum::<f64>()
        .sqrt();
    if res > 1e-8 * scale {
        return Err(Error::Certificate(format!("tracked eigenvector residual {res:.3e}")));
    }
    Ok(RealizedComplete { matrix: mat, graph, eigenvector: vecv })
}

/// A certified matrix on the complete graph K_{2m} whose spectrum is the
/// given pair values each doubled; defaults to 1, 2, ..., m. The first
/// two pair values must be distinct, which is why order 2 is impossible:
/// a 2x2 matrix with two equal eigenvalues is scalar.
pub fn even_complete(order: usize, pair_values: Option<&[f64]>) -> Result<CertifiedMatrix> {
    if order % 2 != 0 || order < 4 {
        return Err(Error::Invalid(format!(
            "complete squares need an even order >= 4, got {order}"
        )));
    }
    let m = order / 2;
    let defaults: Vec<f64> = (1..=m).map(|i| i as f64).collect();
    let p = pair_values.unwrap_or(&defaults);
    if p.len() != m {
        return Err(Error::Invalid(format!("need {m} pair values, got {}", p.len())));
    }
    if !p.iter().all(|v| v.is_finite()) {
        return Err(Error::Invalid("pair values must be finite".into()));
    }
    if p[0] == p[1] {
        return Err(Error::Invalid("the first two pair values must be distinct".into()));
    }
    let mut vals = vec![p[0], p[1], p[0], p[1]];
    for &x in &p[2..] {
        vals.push(x);
        vals.push(x);
    }
    let r = realize_complete(&SpectrumTarget::new(vals)?)?;
    CertifiedMatrix::certified(
        r.matrix,
        &Graph::complete(order)?,
        format!("even_complete({order})"),
    )
}

/// Join g with the complete graph on n+1 vertices (n = |g|) so that every
/// eigenvalue doubles: pick a generic A in S(g) bordered by a full
/// coupling column, pin its corner strictly above the rest of the
/// spectrum, realize the corner value plus spec(A) on K_{n+1}, and glue
/// through the corner eigenvalue. Layout: g first, clique last.
pub fn join_with_clique(g: &Graph, seed: u64) -> Result<CertifiedMatrix> {
    let side = g.n();
    let n = side + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    fn draw_edge(rng: &mut ChaCha8Rng) -> f64 {
        loop {
            let x: f64 = rng.gen_range(-2.0..2.0);
            if x.abs() >= 0.1 {
                return x;
            }
        }
    }
    let expected = g.join(&Graph::complete(n + 1)?)?;
    for _ in 0..50 {
        let mut a = SymMatrix::zeros(n)?;
        for i in 0..side {
            a.set(i, i, rng.gen_range(-1.0..1.0));
            for j in i + 1..side {
                if g.has_edge(i, j) {
                    a.set(i, j, draw_edge(&mut rng));
                }
            }
            a.set(i, n - 1, draw_edge(&mut rng));
        }
        // probe with corner 0: pinning the corner one above the probe
        // top keeps it strictly between lambda_2(A) and lambda_max(A),
        // so the corner value is simple in B below
        let probe_top = *eigenvalues(&a).last().unwrap();
        let mu = probe_top + 1.0;
        a.set(n - 1, n - 1, mu);
        let mut vals = vec![mu];
        let mut spec_a = eigenvalues(&a);
        spec_a.reverse();
        vals.extend_from_slice(&spec_a);
        let b = match realize_complete(&SpectrumTarget::new(vals)?) {
            Ok(b) => b,
            Err(_) => continue,
        };
        let u = polish_eigenvector(&b.matrix, mu, &b.eigenvector, 3);
        if u.iter().any(|t| t.abs() < 1e-6) {
            continue;
        }
        let join = match hs_join(&a, &b.matrix, &u, mu) {
            Ok(j) => j,
            Err(_) => continue,
        };
        if let Ok(c) = CertifiedMatrix::certified(
            join.matrix,
            &expected,
            format!("join_with_clique(seed={seed})"),
        ) {
            return Ok(c);
        }
    }
    Err(Error::Unrealizable("random draws kept degenerating".into()))
}

// ============================================================
// rank-two Gram realizations
// ============================================================

/// Shape of complement(g) as a union of complete bipartite parts joined
/// with a clique, when it has one.
#[derive(Clone, Debug)]
pub struct Rank2Decomposition {
    /// Bipartition sizes per part, p >= q, sorted descending. Isolated
    /// complement vertices outside the clique show up as (1, 0).
    pub parts: Vec<(usize, usize)>,
    /// Order of the joined clique.
    pub r: usize,
    pub all_q_positive: bool,
    /// Vertex classes in g's labeling, aligned with `parts`.
    pub classes: Vec<(Vec<usize>, Vec<usize>)>,
    /// The clique vertices in g's labeling.
    pub r_vertices: Vec<usize>,
}

/// Decompose complement(g) as (union of K_{p_i,q_i}) joined with K_r, if
/// possible: the clique is the set of universal complement vertices and
/// each remaining component must be complete bipartite.
pub fn recognize_rank2(g: &Graph) -> Option<Rank2Decomposition> {
    let n = g.n();
    let h = g.complement();
    let mut in_r = vec![false; n];
    let mut r_vertices = Vec::new();
    for v in 0..n {
        if h.degree(v) == n - 1 {
            in_r[v] = true;
            r_vertices.push(v);
        }
    }
    let mut seen = in_r.clone();
    let mut parts: Vec<((usize, usize), (Vec<usize>, Vec<usize>))> = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut color = vec![2u8; n];
        color[start] = 0;
        seen[start] = true;
        let mut queue = vec![start];
        let mut sides: [Vec<usize>; 2] = [vec![start], Vec::new()];
        let mut half_edges = 0usize;
        while let Some(x) = queue.pop() {
            for y in h.neighbors(x) {
                if in_r[y] {
                    continue;
                }
                half_edges += 1;
                if color[y] == 2 {
                    color[y] = 1 - color[x];
                    sides[color[y] as usize].push(y);
                    seen[y] = true;
                    queue.push(y);
                } else if color[y] == color[x] {
                    return None; // odd cycle in the complement component
                }
            }
        }
        let (mut p, mut q) = (sides[0].len(), sides[1].len());
        let (mut cp, mut cq) = (sides[0].clone(), sides[1].clone());
        if half_edges / 2 != p * q {
            return None; // bipartite but not complete bipartite
        }
        if q > p {
            std::mem::swap(&mut p, &mut q);
            std::mem::swap(&mut cp, &mut cq);
        }
        parts.push(((p, q), (cp, cq)));
    }
    parts.sort_by(|a, b| b.0.cmp(&a.0));
    let all_q_positive = !parts.is_empty() && parts.iter().all(|&((_, q), _)| q >= 1);
    let (parts, classes) = parts.into_iter().unzip();
    Some(Rank2Decomposition { parts, r: r_vertices.len(), all_q_positive, classes, r_vertices })
}

/// Rank-two Gram realization for a decomposition with all classes
/// nonempty: class S_i gets the plane vector (i,1)/sqrt(p_i), class T_i
/// gets (1,-i)/sqrt(q_i), clique vertices get 0, and A = U^T U. Same-part
/// cross entries vanish, classes are internally complete, and the two
/// nonzero eigenvalues are both a = sum of (i^2 + 1): the polynomial is
/// x^(n-2) (x-a)^2.
///
/// Layout: S_1, T_1, S_2, T_2, ..., clique last. The certificate is
/// exact when every cross-part product p_i p_j, p_i q_j, q_i q_j is a
/// perfect square, numeric otherwise; odd total order gets a pattern
/// check and an honest negative certificate.
pub fn rank2_realize(parts: &[(usize, usize)], r: usize) -> Result<CertifiedMatrix> {
    if parts.is_empty() {
        return Err(Error::Invalid("need at least one bipartite part".into()));
    }
    for &(p, q) in parts {
        if p < 1 || q < 1 {
            return Err(Error::Unrealizable(
                "a part with an empty class breaks the Gram identity; use frame_realize".into(),
            ));
        }
    }
    let n: usize = parts.iter().map(|&(p, q)| p + q).sum::<usize>() + r;
    // per-vertex plane vectors as (x, y, squared denominator)
    let mut vecs: Vec<(i64, i64, usize)> = Vec::with_capacity(n);
    for (idx, &(p, q)) in parts.iter().enumerate() {
        let i = (idx + 1) as i64;
        for _ in 0..p {
            vecs.push((i, 1, p));
        }
        for _ in 0..q {
            vecs.push((1, -i, q));
        }
    }
    for _ in 0..r {
        vecs.push((0, 0, 1));
    }

    let exact = {
        let k = parts.len();
        let mut ok = true;
        'outer: for i in 0..k {
            for j in i + 1..k {
                let (pi, qi) = parts[i];
                let (pj, qj) = parts[j];
                for prod in [pi * pj, qi * qj, pi * qj, qi * pj] {
                    if perfect_sqrt(prod).is_none() {
                        ok = false;
                        break 'outer;
                    }
                }
            }
        }
        ok
    };

    let mut up = Vec::with_capacity(n * (n + 1) / 2);
    let mut upx = if exact { Vec::with_capacity(n * (n + 1) / 2) } else { Vec::new() };
    for i in 0..n {
        for j in i..n {
            let (xi, yi, di) = vecs[i];
            let (xj, yj, dj) = vecs[j];
            let num = xi * xj + yi * yj;
            up.push(num as f64 / ((di * dj) as f64).sqrt());
            if exact {
                // zero entries need no root; same-part S-T products
                // always cancel even when p q is not a square
                let val = if num == 0 {
                    BigRational::zero()
                } else {
                    let den = perfect_sqrt(di * dj).expect("checked cross products");
                    BigRational::new(BigInt::from(num), BigInt::from(den as i64))
                };
                upx.push(val);
            }
        }
    }
    let mat = if exact {
        SymMatrix::from_upper_exact(n, &upx)?
    } else {
        SymMatrix::from_upper(n, &up)?
    };

    // expected pattern: complement of the bipartite parts joined with
    // the clique
    let mut h = Graph::empty(n)?;
    let mut offset = 0;
    for &(p, q) in parts {
        for x in offset..offset + p {
            for y in offset + p..offset + p + q {
                h.add_edge(x, y)?;
            }
        }
        offset += p + q;
    }
    for x in offset..n {
        for y in 0..x {
            h.add_edge(y, x)?;
        }
    }
    let expected = h.complement();
    let prov = format!("rank2_realize(parts={parts:?}, r={r})");
    if n % 2 == 0 {
        CertifiedMatrix::certified(mat, &expected, prov)
    } else {
        CertifiedMatrix::pattern_only(mat, &expected, prov)
    }
}

/// Coordinate-descent search for a rank-two tight frame realizing g in
/// its own labeling: isolated vertices are pinned to the zero vector,
/// non-edge inner products are driven to zero and the frame operator to
/// a multiple of the identity. The total norm is pinned near 2 to keep
/// the search away from the collapse at U = 0.
pub(crate) fn search_tight_frame(g: &Graph, seed: u64) -> Option<Vec<[f64; 2]>> {
    let n = g.n();
    let free: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 0).collect();
    let mut nonedges = Vec::new();
    let mut edges = Vec::new();
    for (a, &x) in free.iter().enumerate() {
        for &y in &free[a + 1..] {
            if g.has_edge(x, y) {
                edges.push((x, y));
            } else {
                nonedges.push((x, y));
            }
        }
    }
    let dot = |u: &[[f64; 2]], x: usize, y: usize| u[x][0] * u[y][0] + u[x][1] * u[y][1];
    let objective = |u: &[[f64; 2]]| {
        let mut f = 0.0;
        for &(x, y) in &nonedges {
            let d = dot(u, x, y);
            f += d * d;
        }
        let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
        for &v in &free {
            sxx += u[v][0] * u[v][0];
            sxy += u[v][0] * u[v][1];
            syy += u[v][1] * u[v][1];
        }
        f += (sxx - syy) * (sxx - syy) / 2.0 + 2.0 * sxy * sxy;
        let tr = sxx + syy;
        f + (tr - 2.0) * (tr - 2.0)
    };
    for restart in 0..50u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(restart));
        let mut u = vec![[0.0f64; 2]; n];
        for &v in &free {
            u[v] = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)];
        }
        let mut best = objective(&u);
        let mut step = 0.5f64;
        let mut budget = 5000usize;
        while budget > 0 && step > 1e-13 && best > 1e-26 {
            let mut improved = false;
            'sweep: for &v in &free {
                for c in 0..2 {
                    if budget == 0 {
                        break 'sweep;
                    }
                    budget -= 1;
                    let old = u[v][c];
                    for cand in [old + step, old - step] {
                        u[v][c] = cand;
                        let f = objective(&u);
                        if f < best {
                            best = f;
                            improved = true;
                            break;
                        }
                        u[v][c] = old;
                    }
                }
            }
            if !improved {
                step *= 0.5;
            }
        }
        let edges_ok = edges.iter().all(|&(x, y)| dot(&u, x, y).abs() > 1e-6);
        let nonedges_ok = nonedges.iter().all(|&(x, y)| dot(&u, x, y).abs() < 1e-11);
        if best <= 1e-22 && edges_ok && nonedges_ok {
            return Some(u);
        }
    }
    None
}

/// Numeric rank-two realization through a tight-frame search, for
/// decomposable complements that the exact Gram identity cannot reach
/// (some class empty). Returns None when the shape is wrong or the
/// search exhausts its restarts. Even orders come back fully certified;
/// odd orders carry an honest negative certificate.
pub fn frame_realize(g: &Graph, seed: u64) -> Option<CertifiedMatrix> {
    recognize_rank2(g)?;
    let u = search_tight_frame(g, seed)?;
    let n = g.n();
    let mut up = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            up.push(u[i][0] * u[j][0] + u[i][1] * u[j][1]);
        }
    }
    let mat = SymMatrix::from_upper(n, &up).ok()?;
    let prov = format!("frame_realize(seed={seed})");
    if n % 2 == 0 {
        CertifiedMatrix::certified(mat, g, prov).ok()
    } else {
        CertifiedMatrix::pattern_only(mat, g, prov).ok()
    }
}

// ============================================================
// tests
// ============================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{CertMode, RatPoly};

    const H: f64 = std::f64::consts::FRAC_1_SQRT_2;

    fn sym(rows: &[&[f64]]) -> SymMatrix {
        let rows: Vec<Vec<f64>> = rows.iter().map(|r| r.to_vec()).collect();
        SymMatrix::from_rows(&rows).unwrap()
    }

    fn assert_close(m: &SymMatrix, rows: &[&[f64]], tol: f64) {
        assert_eq!(m.n(), rows.len());
        for i in 0..m.n() {
            for j in 0..m.n() {
                let d = (m.get(i, j) - rows[i][j]).abs();
                assert!(d <= tol, "entry ({i},{j}): {} vs {} (d={d:.3e})", m.get(i, j), rows[i][j]);
            }
        }
    }

    fn assert_spectrum(m: &SymMatrix, want: &[f64], tol: f64) {
        let got = eigenvalues(m);
        let mut w = want.to_vec();
        w.sort_by(f64::total_cmp);
        assert_eq!(got.len(), w.len());
        for (a, b) in got.iter().zip(&w) {
            assert!((a - b).abs() <= tol, "eigenvalues {got:?} vs {w:?}");
        }
    }

    fn rand_sym(rng: &mut ChaCha8Rng, n: usize) -> SymMatrix {
        let mut up = Vec::new();
        for i in 0..n {
            for _ in i..n {
                up.push(rng.gen_range(-2.0..2.0));
            }
        }
        SymMatrix::from_upper(n, &up).unwrap()
    }

    #[test]
    fn skew_pair_hand_cases() {
        // K2 with zero diagonal, skew weight -1: spectrum (+-sqrt 2) doubled
        let a = sym(&[&[0.0, 1.0], &[1.0, 0.0]]);
        let m = skew_pair(&a, &[-1.0]).unwrap();
        let r2 = 2.0f64.sqrt();
        assert_spectrum(&m, &[-r2, -r2, r2, r2], 1e-12);
        // zero skew block doubles the diagonal blocks verbatim
        let m0 = skew_pair(&a, &[0.0]).unwrap();
        assert_spectrum(&m0, &[-1.0, -1.0, 1.0, 1.0], 1e-12);
        assert_eq!(m0.get(0, 2), 0.0);
        assert_eq!(m0.get(0, 1), 1.0);
        assert_eq!(m0.get(2, 3), 1.0);
        // wrong skew length
        assert!(skew_pair(&a, &[1.0, 2.0]).is_err());
    }

    #[test]
    fn skew_pair_doubles_spectra() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for trial in 0..200 {
            let n = 1 + (trial % 5);
            let a = rand_sym(&mut rng, n);
            let mut s = Vec::new();
            for _ in 0..n * (n - 1) / 2 {
                s.push(rng.gen_range(-2.0..2.0));
            }
            let m = skew_pair(&a, &s).unwrap();
            let eig = eigenvalues(&m);
            for i in (0..2 * n).step_by(2) {
                assert!(
                    (eig[i + 1] - eig[i]).abs() <= 1e-9,
                    "trial {trial}: unpaired spectrum {eig:?}"
                );
            }
        }
        // integer inputs stay exact and certify in exact mode
        for trial in 0..40 {
            let n = 1 + (trial % 3);
            let mut up = Vec::new();
            for i in 0..n {
                for _ in i..n {
                    up.push(rng.gen_range(-3i64..=3));
                }
            }
            let a = SymMatrix::from_upper_i64(n, &up).unwrap();
            let s: Vec<f64> =
                (0..n * (n - 1) / 2).map(|_| rng.gen_range(-3i64..=3) as f64).collect();
            let m = skew_pair(&a, &s).unwrap();
            assert!(m.is_exact());
            let cert = certify_square(&m, DEFAULT_TOL);
            assert_eq!(cert.mode, CertMode::Exact);
            assert!(cert.is_square, "trial {trial}");
        }
    }

    #[test]
    fn cycle_matrix_golden() {
        let c6 = cycle_matrix(6).unwrap();
        assert_eq!(c6.graph, Graph::cycle(6).unwrap());
        assert_eq!(c6.certificate.mode, CertMode::Exact);
        assert!(c6.certificate.is_square);
        // sqrt of the characteristic polynomial of C6's doubled path: x^3 - 3x
        assert_eq!(c6.certificate.sqrt_poly.as_ref().unwrap(), &RatPoly::from_i64(&[0, -3, 0, 1]));

        let c4 = cycle_matrix(4).unwrap();
        assert_eq!(c4.graph, Graph::cycle(4).unwrap());
        let r2 = 2.0f64.sqrt();
        assert_spectrum(&c4.matrix, &[-r2, -r2, r2, r2], 1e-12);

        assert!(cycle_matrix(5).is_err());
        assert!(cycle_matrix(2).is_err());
    }

    #[test]
    fn kron_products() {
        // identity (x) b replicates b's blocks
        let i2 = SymMatrix::from_upper_i64(2, &[1, 0, 1]).unwrap();
        let b = sym(&[&[1.0, 2.0], &[2.0, -1.0]]);
        let m = kron(&i2, &b).unwrap();
        assert_close(
            &m,
            &[
                &[1.0, 2.0, 0.0, 0.0],
                &[2.0, -1.0, 0.0, 0.0],
                &[0.0, 0.0, 1.0, 2.0],
                &[0.0, 0.0, 2.0, -1.0],
            ],
            0.0,
        );
        // pattern matches the tensor product of the patterns
        let c4 = Graph::cycle(4).unwrap();
        let mut up = Vec::new();
        for i in 0..4 {
            for j in i..4 {
                up.push(if c4.has_edge(i, j) { 1.0 } else { 0.0 });
            }
        }
        let ac4 = SymMatrix::from_upper(4, &up).unwrap();
        let p2 = sym(&[&[0.0, 1.0], &[1.0, 0.0]]);
        let t = kron(&ac4, &p2).unwrap();
        let expected =
            crate::graphs::tensor_graph(&c4, &[], &Graph::path(2).unwrap()).unwrap();
        assert_eq!(pattern_of(&t, PATTERN_TOL).unwrap(), expected);

        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for trial in 0..200 {
            let na = 1 + (trial % 3);
            let nb = 1 + ((trial / 3) % 3);
            let a = rand_sym(&mut rng, na);
            let b = rand_sym(&mut rng, nb);
            let m = kron(&a, &b).unwrap();
            let ea = eigenvalues(&a);
            let eb = eigenvalues(&b);
            let mut want = Vec::new();
            for &x in &ea {
                for &y in &eb {
                    want.push(x * y);
                }
            }
            assert_spectrum(&m, &want, 1e-8);
        }
    }

    #[test]
    fn hs_join_rejects_bad_inputs() {
        let a = sym(&[&[0.0, 1.0], &[1.0, 0.5]]);
        let b = sym(&[&[0.5, 0.0], &[0.0, 2.0]]);
        // u not unit
        assert!(hs_join(&a, &b, &[1.0, 1.0], 0.5).is_err());
        // u not an eigenvector for mu1
        assert!(hs_join(&a, &b, &[H, H], 0.5).is_err());
        // corner of a disagrees with mu1
        assert!(hs_join(&a, &b, &[1.0, 0.0], 2.0).is_err());
        // valid: e1 is the 0.5-eigenvector of diag(0.5, 2)
        let j = hs_join(&a, &b, &[1.0, 0.0], 0.5).unwrap();
        let mut want = eigenvalues(&a);
        want.push(2.0);
        assert_spectrum(&j.matrix, &want, 1e-10);
    }

    #[test]
    fn hs_join_worked_example_a() {
        // glue a triangle-with-tail block to a 2x2 through eigenvalue 1,
        // then the result to a path block through eigenvalue 0
        let a3 = sym(&[&[1.0, 1.0, 0.0], &[1.0, 0.5, 1.0], &[0.0, 1.0, 0.0]]);
        let a3p = a3.permuted(&[1, 2, 0]).unwrap(); // diagonal 1 moved last
        let a4 = sym(&[&[0.75, 0.25], &[0.25, 0.75]]);
        let j1 = hs_join(&a3p, &a4, &[H, H], 1.0).unwrap();
        let a2 = j1.matrix.permuted(&[2, 3, 0, 1]).unwrap();
        assert_close(
            &a2,
            &[
                &[0.75, 0.25, H, 0.0],
                &[0.25, 0.75, H, 0.0],
                &[H, H, 0.5, 1.0],
                &[0.0, 0.0, 1.0, 0.0],
            ],
            1e-12,
        );
        assert_spectrum(&a2, &[2.0, -1.0, 0.5, 0.5], 1e-10);

        let a1 = sym(&[&[0.0, 1.0, 0.0], &[1.0, 1.0, -1.0], &[0.0, -1.0, 0.0]]);
        let j2 = hs_join(&a2, &a1, &[H, 0.0, H], 0.0).unwrap();
        assert_close(
            &j2.matrix,
            &[
                &[0.75, 0.25, H, 0.0, 0.0, 0.0],
                &[0.25, 0.75, H, 0.0, 0.0, 0.0],
                &[H, H, 0.5, H, 0.0, H],
                &[0.0, 0.0, H, 0.0, 1.0, 0.0],
                &[0.0, 0.0, 0.0, 1.0, 1.0, -1.0],
                &[0.0, 0.0, H, 0.0, -1.0, 0.0],
            ],
            1e-12,
        );
        assert_spectrum(&j2.matrix, &[2.0, 2.0, -1.0, -1.0, 0.5, 0.5], 1e-10);
        let cert = certify_square(&j2.matrix, DEFAULT_TOL);
        assert!(cert.is_square);
    }

    #[test]
    fn hs_join_worked_example_b() {
        let a3 = sym(&[&[0.0, 1.0, 0.0], &[1.0, 0.0, 2.0f64.sqrt()], &[0.0, 2.0f64.sqrt(), 0.0]]);
        let a3p = a3.permuted(&[1, 2, 0]).unwrap();
        let a4 = SymMatrix::zeros(2).unwrap();
        let j1 = hs_join(&a3p, &a4, &[H, H], 0.0).unwrap();
        let a2 = j1.matrix.permuted(&[2, 3, 0, 1]).unwrap();
        let r2 = 2.0f64.sqrt();
        assert_close(
            &a2,
            &[
                &[0.0, 0.0, H, 0.0],
                &[0.0, 0.0, H, 0.0],
                &[H, H, 0.0, r2],
                &[0.0, 0.0, r2, 0.0],
            ],
            1e-12,
        );
        let r3 = 3.0f64.sqrt();
        assert_spectrum(&a2, &[r3, -r3, 0.0, 0.0], 1e-10);

        let a1 = sym(&[&[-1.0, 1.0, 0.0], &[1.0, 0.0, -1.0], &[0.0, -1.0, 1.0]]);
        let s3 = 1.0 / r3;
        let j2 = hs_join(&a2, &a1, &[s3, s3, s3], 0.0).unwrap();
        let g23 = (2.0f64 / 3.0).sqrt();
        assert_close(
            &j2.matrix,
            &[
                &[0.0, 0.0, H, 0.0, 0.0, 0.0],
                &[0.0, 0.0, H, 0.0, 0.0, 0.0],
                &[H, H, 0.0, g23, g23, g23],
                &[0.0, 0.0, g23, -1.0, 1.0, 0.0],
                &[0.0, 0.0, g23, 1.0, 0.0, -1.0],
                &[0.0, 0.0, g23, 0.0, -1.0, 1.0],
            ],
            1e-12,
        );
        assert_spectrum(&j2.matrix, &[r3, r3, -r3, -r3, 0.0, 0.0], 1e-10);
        assert!(certify_square(&j2.matrix, DEFAULT_TOL).is_square);
    }

    #[test]
    fn hs_join_worked_example_c() {
        let a3 = sym(&[&[0.0, 1.0, 0.0], &[1.0, 1.0, -1.0], &[0.0, -1.0, 0.0]]);
        let a3p = a3.permuted(&[1, 2, 0]).unwrap();
        let a4 = SymMatrix::zeros(2).unwrap();
        let j1 = hs_join(&a3p, &a4, &[H, H], 0.0).unwrap();
        let a2 = j1.matrix.permuted(&[2, 3, 0, 1]).unwrap();
        assert_close(
            &a2,
            &[
                &[0.0, 0.0, H, 0.0],
                &[0.0, 0.0, H, 0.0],
                &[H, H, 1.0, -1.0],
                &[0.0, 0.0, -1.0, 0.0],
            ],
            1e-12,
        );
        assert_spectrum(&a2, &[2.0, -1.0, 0.0, 0.0], 1e-10);

        let a1 = a3.clone();
        let j2 = hs_join(&a2, &a1, &[H, 0.0, H], 0.0).unwrap();
        assert_close(
            &j2.matrix,
            &[
                &[0.0, 0.0, H, 0.0, 0.0, 0.0],
                &[0.0, 0.0, H, 0.0, 0.0, 0.0],
                &[H, H, 1.0, -H, 0.0, -H],
                &[0.0, 0.0, -H, 0.0, 1.0, 0.0],
                &[0.0, 0.0, 0.0, 1.0, 1.0, -1.0],
                &[0.0, 0.0, -H, 0.0, -1.0, 0.0],
            ],
            1e-12,
        );
        assert_spectrum(&j2.matrix, &[2.0, 2.0, -1.0, -1.0, 0.0, 0.0], 1e-10);
        assert!(certify_square(&j2.matrix, DEFAULT_TOL).is_square);
    }

    #[test]
    fn hs_join_takes_spectral_unions() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let mut done = 0;
        while done < 100 {
            let nb = 2 + (done % 3);
            let b = rand_sym(&mut rng, nb);
            let eb = eigenvalues(&b);
            // need a simple, well separated target eigenvalue
            let pick = done % nb;
            let mu = eb[pick];
            if eb.iter().enumerate().any(|(i, &x)| i != pick && (x - mu).abs() < 1e-3) {
                continue;
            }
            let start: Vec<f64> = (0..nb).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let u = polish_eigenvector(&b, mu, &start, 8);
            let bu = b.mat_vec(&u);
            let res: f64 =
                bu.iter().zip(&u).map(|(x, t)| (x - mu * t) * (x - mu * t)).sum::<f64>().sqrt();
            if res > 1e-11 {
                continue;
            }
            let na = 2 + (done % 2);
            let mut a = rand_sym(&mut rng, na);
            a.set(na - 1, na - 1, mu);
            let j = hs_join(&a, &b, &u, mu).unwrap();
            let mut want = eigenvalues(&a);
            for (i, &x) in eb.iter().enumerate() {
                if i != pick {
                    want.push(x);
                }
            }
            assert_spectrum(&j.matrix, &want, 1e-8);
            done += 1;
        }
    }

    #[test]
    fn clique_blowup_cases() {
        let c4 = cycle_matrix(4).unwrap();
        // m = 0 relabels the graph and shifts the chosen diagonal
        let b0 = clique_blowup(&c4, 0, 0).unwrap();
        assert_eq!(b0.order(), 4);
        assert_eq!(b0.graph.edge_count(), 4);
        assert!(b0.certificate.is_square);
        assert_eq!(b0.certificate.mode, CertMode::Exact); // t = 1 is a square
        let r2 = 2.0f64.sqrt();
        // diagonal shift by 1 - 0 = 1
        assert_spectrum(&b0.matrix, &[1.0 - r2, 1.0 - r2, 1.0 + r2, 1.0 + r2], 1e-10);

        // m = 1 replaces vertex 0 of C4 by a triangle: P3 + two ends
        // joined to a K3, 11 edges, spectrum gains two zeros
        let b1 = clique_blowup(&c4, 0, 1).unwrap();
        assert_eq!(b1.order(), 6);
        assert_eq!(b1.graph.edge_count(), 11);
        assert!(b1.graph.is_connected());
        assert!(b1.certificate.is_square);
        assert_eq!(b1.certificate.mode, CertMode::Numeric); // t = 3 is not a square
        assert_spectrum(
            &b1.matrix,
            &[3.0 - r2, 3.0 - r2, 0.0, 0.0, 3.0 + r2, 3.0 + r2],
            1e-8,
        );

        // t = 9 keeps everything rational: exact certificate on 12 vertices
        let b4 = clique_blowup(&c4, 1, 4).unwrap();
        assert_eq!(b4.order(), 12);
        assert_eq!(b4.certificate.mode, CertMode::Exact);
        assert!(b4.certificate.is_square);

        // blowing up K4 gives K6
        let k4 = even_complete(4, None).unwrap();
        let b = clique_blowup(&k4, 2, 1).unwrap();
        assert_eq!(b.graph, Graph::complete(6).unwrap());
        assert!(b.certificate.is_square);

        assert!(clique_blowup(&c4, 4, 1).is_err());
    }

    #[test]
    fn clique_blowup_shifts_and_pads_spectra() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let pool =
            [cycle_matrix(4).unwrap(), cycle_matrix(6).unwrap(), even_complete(4, None).unwrap()];
        for trial in 0..200 {
            let c = &pool[trial % pool.len()];
            let v = rng.gen_range(0..c.order());
            let m = rng.gen_range(0..=2);
            let t = (2 * m + 1) as f64;
            let b = clique_blowup(c, v, m).unwrap();
            let mut want: Vec<f64> = eigenvalues(&c.matrix)
                .iter()
                .map(|x| x + t - c.matrix.get(v, v))
                .collect();
            want.extend(std::iter::repeat(0.0).take(2 * m));
            assert_spectrum(&b.matrix, &want, 1e-8);
            assert!(b.certificate.is_square, "trial {trial}");
        }
    }

    #[test]
    fn pq_join_degenerate_case() {
        let a = sym(&[&[2.0]]);
        let b = sym(&[&[0.0]]);
        let m = pq_join(&a, &b).unwrap();
        assert_close(&m, &[&[1.0, 1.0], &[1.0, 1.0]], 1e-15);
        assert_spectrum(&m, &[0.0, 2.0], 1e-12);

        assert!(pq_join(&sym(&[&[1.0]]), &b).is_err());
        assert!(pq_join(&a, &sym(&[&[0.5]])).is_err());
    }

    #[test]
    fn pq_join_concatenates_spectra() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        for trial in 0..100 {
            let na = 1 + (trial % 4);
            let nb = 1 + ((trial / 4) % 4);
            let mut a = rand_sym(&mut rng, na);
            a.set(na - 1, na - 1, 2.0);
            let mut b = rand_sym(&mut rng, nb);
            b.set(nb - 1, nb - 1, 0.0);
            let m = pq_join(&a, &b).unwrap();
            assert_eq!(m.n(), na + nb);
            let mut want = eigenvalues(&a);
            want.extend(eigenvalues(&b));
            assert_spectrum(&m, &want, 1e-8);
        }
    }

    #[test]
    fn graph_pq_join_two_cycles() {
        let ca = cycle_matrix(4).unwrap();
        let cb = cycle_matrix(4).unwrap();
        let j = graph_pq_join(&ca, 3, &cb, 3).unwrap();
        assert_eq!(j.order(), 8);
        assert_eq!(j.graph.edge_count(), 13);
        // layout [b-rest, a-rest, c1, c2]: both carriers see both
        // neighborhoods and each other
        let mut expected = Graph::empty(8).unwrap();
        for (x, y) in [(0, 1), (1, 2), (3, 4), (4, 5)] {
            expected.add_edge(x, y).unwrap();
        }
        for c in [6, 7] {
            for x in [3, 5, 0, 2] {
                expected.add_edge(c, x).unwrap();
            }
        }
        expected.add_edge(6, 7).unwrap();
        assert_eq!(j.graph, expected);
        assert!(j.certificate.is_square);
        let r2 = 2.0f64.sqrt();
        assert_spectrum(
            &j.matrix,
            &[-r2, -r2, r2, r2, 2.0 - r2, 2.0 - r2, 2.0 + r2, 2.0 + r2],
            1e-8,
        );

        // scalar left inputs have no couplings to spread over the carriers
        let scalar = CertifiedMatrix::certified(
            SymMatrix::from_upper_i64(2, &[1, 0, 1]).unwrap(),
            &Graph::empty(2).unwrap(),
            "unit test",
        )
        .unwrap();
        assert!(graph_pq_join(&scalar, 0, &cb, 0).is_err());
    }

    #[test]
    fn realize_complete_base_case() {
        let t = SpectrumTarget::new(vec![3.0, 1.0]).unwrap();
        let r = realize_complete(&t).unwrap();
        assert_close(&r.matrix, &[&[2.0, 1.0], &[1.0, 2.0]], 1e-12);
        assert!(r.graph.is_complete());
        // negated ordering realizes the same spectrum
        let t2 = SpectrumTarget::new(vec![1.0, 3.0]).unwrap();
        let r2 = realize_complete(&t2).unwrap();
        assert_spectrum(&r2.matrix, &[1.0, 3.0], 1e-10);
        let mv = r2.matrix.mat_vec(&r2.eigenvector);
        for (x, t) in mv.iter().zip(&r2.eigenvector) {
            assert!((x - 1.0 * t).abs() <= 1e-9);
        }

        assert!(realize_complete(&SpectrumTarget::new(vec![1.0]).unwrap()).is_err());
        assert!(realize_complete(&SpectrumTarget::new(vec![1.0, 1.0, 3.0]).unwrap()).is_err());
        assert!(SpectrumTarget::with_support(vec![3.0, 1.0], vec![true, false]).is_err());
    }

    #[test]
    fn realize_complete_respects_support() {
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        for trial in 0..100 {
            let n = 2 + (trial % 5);
            let mut vals: Vec<f64> = (0..n).map(|_| rng.gen_range(-3.0..3.0)).collect();
            while (vals[0] - vals[1]).abs() < 0.05 {
                vals[1] = rng.gen_range(-3.0..3.0);
            }
            let k = rng.gen_range(2..=n);
            let mut support = vec![false; n];
            let mut left = k;
            while left > 0 {
                let i = rng.gen_range(0..n);
                if !support[i] {
                    support[i] = true;
                    left -= 1;
                }
            }
            let t = SpectrumTarget::with_support(vals.clone(), support.clone()).unwrap();
            let r = realize_complete(&t).unwrap();
            assert!(r.graph.is_complete(), "trial {trial}");
            assert_spectrum(&r.matrix, &vals, 1e-8);
            let mv = r.matrix.mat_vec(&r.eigenvector);
            let res: f64 = mv
                .iter()
                .zip(&r.eigenvector)
                .map(|(x, t)| (x - vals[0] * t) * (x - vals[0] * t))
                .sum::<f64>()
                .sqrt();
            assert!(res <= 1e-8, "trial {trial}: residual {res:.3e}");
            for (i, &s) in support.iter().enumerate() {
                if s {
                    assert!(
                        r.eigenvector[i].abs() > 1e-8,
                        "trial {trial}: entry {i} collapsed: {:?}",
                        r.eigenvector
                    );
                } else {
                    assert_eq!(r.eigenvector[i], 0.0, "trial {trial}");
                }
            }
        }
    }

    #[test]
    fn even_complete_cases() {
        let k4 = even_complete(4, None).unwrap();
        assert_eq!(k4.graph, Graph::complete(4).unwrap());
        assert!(k4.certificate.is_square);
        assert_spectrum(&k4.matrix, &[1.0, 1.0, 2.0, 2.0], 1e-8);

        let k6 = even_complete(6, Some(&[0.0, 1.0, 3.0])).unwrap();
        assert_spectrum(&k6.matrix, &[0.0, 0.0, 1.0, 1.0, 3.0, 3.0], 1e-8);

        assert!(even_complete(2, None).is_err());
        assert!(even_complete(5, None).is_err());
        assert!(even_complete(6, Some(&[2.0, 2.0, 5.0])).is_err());
        assert!(even_complete(6, Some(&[1.0, 2.0])).is_err());
    }

    #[test]
    fn join_with_clique_doubles() {
        let k1 = Graph::empty(1).unwrap();
        let j = join_with_clique(&k1, 0).unwrap();
        assert_eq!(j.graph, Graph::complete(4).unwrap());
        assert!(j.certificate.is_square);

        let p3 = Graph::path(3).unwrap();
        let j = join_with_clique(&p3, 1).unwrap();
        assert_eq!(j.graph, p3.join(&Graph::complete(5).unwrap()).unwrap());
        assert!(j.certificate.is_square);

        let c4 = Graph::cycle(4).unwrap();
        let j = join_with_clique(&c4, 7).unwrap();
        assert_eq!(j.order(), 10);
        assert!(j.certificate.is_square);
        assert!(j.certificate.max_gap <= 1e-8);
        // determinism
        let j2 = join_with_clique(&c4, 7).unwrap();
        assert_eq!(j.matrix.upper_triangle(), j2.matrix.upper_triangle());
    }

    #[test]
    fn bordered_cycle_join_doubles() {
        // C4 plus a dominating-ish corner: border the cycle adjacency by
        // an all-ones column with corner 0, whose spectrum is
        // {1 +- sqrt 5, -2, 0, 0}, then glue a K6 realization through the
        // corner value 0
        let a = sym(&[
            &[0.0, 1.0, 0.0, 1.0, 1.0],
            &[1.0, 0.0, 1.0, 0.0, 1.0],
            &[0.0, 1.0, 0.0, 1.0, 1.0],
            &[1.0, 0.0, 1.0, 0.0, 1.0],
            &[1.0, 1.0, 1.0, 1.0, 0.0],
        ]);
        let r5 = 5.0f64.sqrt();
        assert_spectrum(&a, &[1.0 + r5, 1.0 - r5, -2.0, 0.0, 0.0], 1e-10);
        let vals = vec![0.0, 1.0 + r5, 1.0 - r5, -2.0, 0.0, 0.0];
        let b = realize_complete(&SpectrumTarget::new(vals).unwrap()).unwrap();
        let u = polish_eigenvector(&b.matrix, 0.0, &b.eigenvector, 3);
        let j = hs_join(&a, &b.matrix, &u, 0.0).unwrap();
        let expected =
            Graph::cycle(4).unwrap().join(&Graph::complete(6).unwrap()).unwrap();
        let c = CertifiedMatrix::certified(j.matrix, &expected, "unit test").unwrap();
        assert!(c.certificate.is_square);
        assert_spectrum(
            &c.matrix,
            &[
                1.0 + r5,
                1.0 + r5,
                1.0 - r5,
                1.0 - r5,
                -2.0,
                -2.0,
                0.0,
                0.0,
                0.0,
                0.0,
            ],
            1e-8,
        );
    }

    #[test]
    fn recognize_rank2_shapes() {
        // C4: complement is 2K2
        let d = recognize_rank2(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(d.parts, vec![(1, 1), (1, 1)]);
        assert_eq!(d.r, 0);
        assert!(d.all_q_positive);

        // K6: complement is 6 isolated vertices
        let d = recognize_rank2(&Graph::complete(6).unwrap()).unwrap();
        assert_eq!(d.parts, vec![(1, 0); 6]);
        assert!(!d.all_q_positive);

        // octahedron: complement is 3K2
        let oct = Graph::from_edges(
            6,
            &[
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 4),
                (2, 5),
                (3, 4),
                (3, 5),
            ],
        )
        .unwrap();
        let d = recognize_rank2(&oct).unwrap();
        assert_eq!(d.parts, vec![(1, 1), (1, 1), (1, 1)]);

        // P4: complement is P4, not a disjoint union of complete
        // bipartite graphs
        assert!(recognize_rank2(&Graph::path(4).unwrap()).is_none());

        // diamond: complement is K2 + 2 isolated
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let d = recognize_rank2(&diamond).unwrap();
        assert_eq!(d.parts, vec![(1, 1), (1, 0), (1, 0)]);
        assert!(!d.all_q_positive);
        assert_eq!(d.r, 0);

        // K4 plus an isolated vertex: the complement is a star whose
        // center is universal, so it lands in the joined clique
        let g = Graph::star(5).unwrap().complement();
        let d = recognize_rank2(&g).unwrap();
        assert_eq!(d.r, 1);
        assert_eq!(d.r_vertices, vec![0]);
        assert_eq!(d.parts, vec![(1, 0); 4]);
        assert!(!d.all_q_positive);
    }

    #[test]
    fn rank2_realize_hand_cases() {
        // two crossed pairs: C4 with a = 7
        let c = rank2_realize(&[(1, 1), (1, 1)], 0).unwrap();
        assert_eq!(c.order(), 4);
        let expected = Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(c.graph, expected);
        assert_eq!(c.certificate.mode, CertMode::Exact);
        assert!(c.certificate.is_square);
        assert_spectrum(&c.matrix, &[0.0, 0.0, 7.0, 7.0], 1e-10);
        // x^2 (x - 7)^2 has square root x^2 - 7x
        assert_eq!(c.certificate.sqrt_poly.as_ref().unwrap(), &RatPoly::from_i64(&[0, -7, 1]));

        // one pair plus a joined K1: diag(2, 2, 0) on the empty pattern
        let c = rank2_realize(&[(1, 1)], 1).unwrap();
        assert_close(&c.matrix, &[&[2.0, 0.0, 0.0], &[0.0, 2.0, 0.0], &[0.0, 0.0, 0.0]], 1e-15);
        assert!(!c.certificate.is_square); // odd order
        assert!(c.certificate.odd_order);
        assert_eq!(c.graph.edge_count(), 0);

        // unbalanced part (2,1): S-class is internally complete
        let c = rank2_realize(&[(2, 1)], 0).unwrap();
        assert_close(
            &c.matrix,
            &[&[1.0, 1.0, 0.0], &[1.0, 1.0, 0.0], &[0.0, 0.0, 2.0]],
            1e-15,
        );
        assert_spectrum(&c.matrix, &[0.0, 2.0, 2.0], 1e-10);

        // octahedron: three crossed pairs, a = 17
        let c = rank2_realize(&[(1, 1), (1, 1), (1, 1)], 0).unwrap();
        assert_eq!(c.certificate.mode, CertMode::Exact);
        assert!(c.certificate.is_square);
        assert_spectrum(&c.matrix, &[0.0, 0.0, 0.0, 0.0, 17.0, 17.0], 1e-10);
        assert_eq!(
            c.certificate.sqrt_poly.as_ref().unwrap(),
            &RatPoly::from_i64(&[0, 0, -17, 1])
        );

        // irrational cross products drop to numeric mode
        let c = rank2_realize(&[(2, 2), (1, 1)], 0).unwrap();
        assert_eq!(c.certificate.mode, CertMode::Numeric);
        assert!(c.certificate.is_square);

        // perfect-square cross products stay exact
        let c = rank2_realize(&[(4, 4), (1, 1)], 0).unwrap();
        assert_eq!(c.certificate.mode, CertMode::Exact);
        assert!(c.certificate.is_square);

        assert!(rank2_realize(&[], 2).is_err());
        assert!(rank2_realize(&[(1, 0), (1, 1)], 0).is_err());
    }

    #[test]
    fn frame_realize_searches() {
        // K4: complement is 4 isolated vertices, all classes empty on one
        // side; the tight-frame search must find 4 pairwise non-orthogonal
        // plane vectors forming a tight frame
        let k4 = frame_realize(&Graph::complete(4).unwrap(), 0).unwrap();
        assert_eq!(k4.graph, Graph::complete(4).unwrap());
        assert!(k4.certificate.is_square);
        assert!(k4.certificate.max_gap <= 1e-8);

        // diamond
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let d = frame_realize(&diamond, 0).unwrap();
        assert_eq!(d.graph, diamond);
        assert!(d.certificate.is_square);

        // K6 and K6 minus one edge
        let k6 = frame_realize(&Graph::complete(6).unwrap(), 0).unwrap();
        assert!(k6.certificate.is_square);
        let mut k6e = Graph::complete(6).unwrap().complement();
        k6e.add_edge(0, 1).unwrap();
        let k6e = k6e.complement();
        let f = frame_realize(&k6e, 0).unwrap();
        assert_eq!(f.graph, k6e);
        assert!(f.certificate.is_square);

        // K3: feasible pattern, odd order, honest negative certificate
        let k3 = frame_realize(&Graph::complete(3).unwrap(), 0).unwrap();
        assert!(!k3.certificate.is_square);
        assert!(k3.certificate.odd_order);

        // P3 is not decomposable and has no rank-two realization
        assert!(frame_realize(&Graph::path(3).unwrap(), 0).is_none());

        // determinism
        let a = frame_realize(&diamond, 5).unwrap();
        let b = frame_realize(&diamond, 5).unwrap();
        assert_eq!(a.matrix.upper_triangle(), b.matrix.upper_triangle());
    }
}
