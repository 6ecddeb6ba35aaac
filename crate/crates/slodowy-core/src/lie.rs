//! Partitions, nilpotent normal forms, sl2-completions and Slodowy slices
//! in `sl(N, C)`.

use crate::linalg::{
    ad_matrix, commutator, eigenvalues, frob_inner, frob_norm, nullspace, unvectorize,
};
use crate::{tol, C64, CMat, CVec, Error, Result};

/// Integer partition, stored weakly decreasing.
///
/// Labels a nilpotent adjoint orbit by its Jordan type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition; parts are sorted decreasing. Empty or zero parts
    /// are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts: the dimension of the defining representation.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Concatenation followed by re-sorting; a partition of the summed n.
    pub fn concat(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts).expect("concatenation of valid partitions")
    }

    /// `k` copies of this partition concatenated.
    pub fn repeated(&self, k: usize) -> Partition {
        assert!(k >= 1);
        let mut parts = Vec::with_capacity(self.parts.len() * k);
        for _ in 0..k {
            parts.extend_from_slice(&self.parts);
        }
        Partition::new(parts).expect("repetition of a valid partition")
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Dominance order: `pi <= rho` iff all partial sums of `pi` are bounded by
/// those of `rho` (padding with zeros). Requires equal sums.
pub fn dominance_leq(pi: &Partition, rho: &Partition) -> Result<bool> {
    if pi.n() != rho.n() {
        return Err(Error::MismatchedN(pi.n(), rho.n()));
    }
    let len = pi.parts.len().max(rho.parts.len());
    let mut sum_pi = 0usize;
    let mut sum_rho = 0usize;
    for k in 0..len {
        sum_pi += pi.parts.get(k).copied().unwrap_or(0);
        sum_rho += rho.parts.get(k).copied().unwrap_or(0);
        if sum_pi > sum_rho {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All partitions of `n`, parts decreasing, in deterministic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(prefix.clone()).unwrap());
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Chevalley basis of `sl(N, C)` in the standard matrix realisation:
/// `H_i = E_ii - E_(i+1)(i+1)`, `E_i^+ = E_(i)(i+1)`, `E_i^- = E_(i+1)(i)`.
#[derive(Debug, Clone)]
pub struct ChevalleyBasis {
    pub rank: usize,
    pub cartan: Vec<CMat>,
    pub raising: Vec<CMat>,
    pub lowering: Vec<CMat>,
    pub cartan_matrix: Vec<Vec<i64>>,
}

impl ChevalleyBasis {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::DimensionMismatch(format!(
                "sl({n}) has no Chevalley basis"
            )));
        }
        let rank = n - 1;
        let one = C64::new(1.0, 0.0);
        let mut cartan = Vec::with_capacity(rank);
        let mut raising = Vec::with_capacity(rank);
        let mut lowering = Vec::with_capacity(rank);
        for i in 0..rank {
            let mut h = CMat::zeros(n, n);
            h[(i, i)] = one;
            h[(i + 1, i + 1)] = -one;
            cartan.push(h);
            let mut e = CMat::zeros(n, n);
            e[(i, i + 1)] = one;
            raising.push(e);
            let mut f = CMat::zeros(n, n);
            f[(i + 1, i)] = one;
            lowering.push(f);
        }
        let cartan_matrix = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        if i == j {
                            2
                        } else if i.abs_diff(j) == 1 {
                            -1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(Self {
            rank,
            cartan,
            raising,
            lowering,
            cartan_matrix,
        })
    }

    /// Largest violation of the bracket relations, for validation.
    pub fn bracket_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                worst = worst.max(frob_norm(&commutator(&self.cartan[i], &self.cartan[j])));
                let a_ji = C64::new(self.cartan_matrix[j][i] as f64, 0.0);
                worst = worst.max(frob_norm(
                    &(commutator(&self.cartan[i], &self.raising[j]) - &self.raising[j] * a_ji),
                ));
                worst = worst.max(frob_norm(
                    &(commutator(&self.cartan[i], &self.lowering[j]) + &self.lowering[j] * a_ji),
                ));
                let delta = if i == j {
                    self.cartan[i].clone()
                } else {
                    CMat::zeros(self.cartan[i].nrows(), self.cartan[i].ncols())
                };
                worst = worst.max(frob_norm(
                    &(commutator(&self.raising[i], &self.lowering[j]) - delta),
                ));
            }
        }
        worst
    }
}

/// True iff all eigenvalue magnitudes stay below `tol::NILPOTENT` times the
/// Frobenius norm. Eigenvalues are used instead of matrix powers because
/// `x^n` under/overflows for moderate dimension.
pub fn is_nilpotent(x: &CMat) -> bool {
    let scale = frob_norm(x);
    if scale == 0.0 {
        return true;
    }
    match eigenvalues(x) {
        Ok(evs) => evs.iter().all(|z| z.norm() < tol::NILPOTENT * scale),
        Err(_) => false,
    }
}

fn largest_eigenvalue_magnitude(x: &CMat) -> f64 {
    eigenvalues(x)
        .map(|evs| evs.iter().map(|z| z.norm()).fold(0.0, f64::max))
        .unwrap_or(f64::INFINITY)
}

/// Block-diagonal nilpotent Jordan matrix for a partition: one block per
/// part, ones on each block's superdiagonal.
pub fn jordan_nilpotent(pi: &Partition) -> CMat {
    let n = pi.n();
    let mut m = CMat::zeros(n, n);
    let mut offset = 0;
    for &p in pi.parts() {
        for i in 0..p.saturating_sub(1) {
            m[(offset + i, offset + i + 1)] = C64::new(1.0, 0.0);
        }
        offset += p;
    }
    m
}

/// An sl2-triple `(e, h, f)` with `[h,e] = 2e`, `[e,f] = h`, `[h,f] = -2f`.
#[derive(Debug, Clone)]
pub struct Sl2Triple {
    pub e: CMat,
    pub h: CMat,
    pub f: CMat,
}

impl Sl2Triple {
    /// Zero triple in dimension `n`; used for the slice at the zero orbit.
    pub fn zero(n: usize) -> Self {
        Self {
            e: CMat::zeros(n, n),
            h: CMat::zeros(n, n),
            f: CMat::zeros(n, n),
        }
    }

    /// Frobenius norms of the three commutator defects.
    pub fn commutator_errors(&self) -> [f64; 3] {
        [
            frob_norm(&(commutator(&self.h, &self.e) - &self.e * C64::new(2.0, 0.0))),
            frob_norm(&(commutator(&self.e, &self.f) - &self.h)),
            frob_norm(&(commutator(&self.h, &self.f) + &self.f * C64::new(2.0, 0.0))),
        ]
    }

    /// Scale used to make the commutator tolerance relative.
    pub fn scale(&self) -> f64 {
        frob_norm(&self.e)
            .max(frob_norm(&self.h))
            .max(frob_norm(&self.f))
            .max(1.0)
    }

    pub fn max_commutator_error(&self) -> f64 {
        self.commutator_errors().into_iter().fold(0.0, f64::max)
    }
}

/// Exact integral triple for a partition in Jordan normal form: per block of
/// size `m`, `h = diag(m-1, m-3, ..., -(m-1))` and `f_(i+1,i) = i(m-i)`.
fn triple_for_partition(pi: &Partition) -> Sl2Triple {
    let n = pi.n();
    let e = jordan_nilpotent(pi);
    let mut h = CMat::zeros(n, n);
    let mut f = CMat::zeros(n, n);
    let mut offset = 0;
    for &p in pi.parts() {
        let m = p as f64;
        for i in 0..p {
            h[(offset + i, offset + i)] = C64::new(m - 1.0 - 2.0 * i as f64, 0.0);
        }
        for i in 1..p {
            f[(offset + i, offset + i - 1)] = C64::new(i as f64 * (m - i as f64), 0.0);
        }
        offset += p;
    }
    Sl2Triple { e, h, f }
}

/// Detects an exact nilpotent Jordan normal form with blocks in decreasing
/// size order; returns its partition.
fn exact_jordan_partition(e: &CMat) -> Option<Partition> {
    let n = e.nrows();
    for i in 0..n {
        for j in 0..n {
            let v = e[(i, j)];
            let ok = if j == i + 1 {
                v == C64::new(0.0, 0.0) || v == C64::new(1.0, 0.0)
            } else {
                v == C64::new(0.0, 0.0)
            };
            if !ok {
                return None;
            }
        }
    }
    let mut parts = Vec::new();
    let mut run = 1usize;
    for i in 0..n.saturating_sub(1) {
        if e[(i, i + 1)] == C64::new(1.0, 0.0) {
            run += 1;
        } else {
            parts.push(run);
            run = 1;
        }
    }
    parts.push(run);
    // Blocks must already be sorted decreasing to match jordan_nilpotent.
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    Partition::new(parts).ok()
}

/// Jordan chain basis of a nilpotent matrix: returns the partition and a
/// similarity `t` with `a t = t jordan_nilpotent(partition)`.
fn nilpotent_jordan_basis(a: &CMat) -> Result<(Partition, CMat)> {
    let n = a.nrows();
    let scale = a
        .clone()
        .singular_values()
        .iter()
        .copied()
        .fold(0.0, f64::max);
    if scale == 0.0 {
        return Ok((
            Partition::new(vec![1; n])?,
            CMat::identity(n, n),
        ));
    }
    let ahat = a / C64::new(scale, 0.0);

    // Kernel filtration of powers of the normalized matrix.
    let mut powers = vec![CMat::identity(n, n)];
    let mut kernels: Vec<Vec<CVec>> = vec![Vec::new()]; // ker a^0 = {0}
    let mut m = 0usize;
    loop {
        let next = powers.last().unwrap() * &ahat;
        let smax = next
            .clone()
            .singular_values()
            .iter()
            .copied()
            .fold(0.0, f64::max);
        let tol_abs = (tol::RANK_SVD * smax).max(1e-13);
        let ker = nullspace(&next, tol_abs);
        let dim = ker.len();
        powers.push(next);
        kernels.push(ker);
        m += 1;
        if dim == n {
            break;
        }
        if m > n {
            return Err(Error::NotNilpotent(largest_eigenvalue_magnitude(a)));
        }
    }

    // Orthonormal clamp of the span of `cols`, as columns of a matrix.
    let orth = |cols: &[CVec]| -> Vec<CVec> {
        let mut basis: Vec<CVec> = Vec::new();
        for v in cols {
            let mut r = v.clone();
            for b in &basis {
                let c = b.dotc(&r);
                r -= b * c;
            }
            let norm = r.norm();
            if norm > 1e-10 {
                basis.push(r / C64::new(norm, 0.0));
            }
        }
        basis
    };

    // Choose chain tops level by level, longest chains first.
    let mut chains: Vec<Vec<CVec>> = Vec::new();
    for j in (1..=m).rev() {
        let d = |idx: usize| kernels.get(idx).map_or(n, |k| k.len());
        let blocks_ge_j = d(j) - d(j - 1);
        let blocks_ge_j1 = if j + 1 <= m { d(j + 1) - d(j) } else { 0 };
        let need = blocks_ge_j - blocks_ge_j1;
        if need == 0 {
            continue;
        }
        // Span to avoid: ker a^(j-1) + a * ker a^(j+1), plus tops already
        // chosen at this level.
        let mut avoid: Vec<CVec> = kernels[j - 1].clone();
        if j + 1 <= m {
            for v in &kernels[j + 1] {
                avoid.push(&ahat * v);
            }
        }
        let mut avoid_basis = orth(&avoid);
        let mut picked = 0usize;
        while picked < need {
            // Greedy: candidate in ker a^j with the largest residual after
            // projecting out the avoid space.
            let mut best: Option<(f64, CVec)> = None;
            for v in &kernels[j] {
                let mut r = v.clone();
                for b in &avoid_basis {
                    let c = b.dotc(&r);
                    r -= b * c;
                }
                let norm = r.norm();
                if best.as_ref().map_or(true, |(bn, _)| norm > *bn) {
                    best = Some((norm, r));
                }
            }
            let (norm, r) = best.ok_or_else(|| {
                Error::LinearSolveFailed("Jordan chain selection exhausted".into())
            })?;
            if norm < 1e-8 {
                return Err(Error::LinearSolveFailed(
                    "Jordan chain candidate degenerated; input too ill-conditioned".into(),
                ));
            }
            let top = r / C64::new(norm, 0.0);
            let mut chain = Vec::with_capacity(j);
            let mut w = top.clone();
            chain.push(top.clone());
            for _ in 1..j {
                w = &ahat * w;
                chain.push(w.clone());
            }
            chain.reverse(); // bottom (a^(j-1) v) first
            avoid_basis = orth(
                &avoid_basis
                    .iter()
                    .cloned()
                    .chain(std::iter::once(top))
                    .collect::<Vec<_>>(),
            );
            chains.push(chain);
            picked += 1;
        }
    }

    chains.sort_by(|a, b| b.len().cmp(&a.len()));
    let parts: Vec<usize> = chains.iter().map(|c| c.len()).collect();
    let partition = Partition::new(parts)?;

    // Column scaling restores superdiagonal ones for the unnormalized input:
    // chain entry a^i v needs weight scale^i relative to the top.
    let mut t = CMat::zeros(n, n);
    let mut col = 0;
    for chain in &chains {
        let j = chain.len();
        for (depth_from_bottom, v) in chain.iter().enumerate() {
            let pow = (j - 1 - depth_from_bottom) as i32;
            let w = v * C64::new(scale.powi(pow), 0.0);
            t.set_column(col, &w);
            col += 1;
        }
    }
    Ok((partition, t))
}

/// Completes a nonzero nilpotent element to an sl2-triple.
///
/// The element is brought to Jordan normal form by a similarity, the exact
/// integral triple is written down there, and the similarity is undone.
/// The returned `e` is the input itself.
pub fn sl2_complete(e: &CMat) -> Result<Sl2Triple> {
    let n = e.nrows();
    if frob_norm(e) <= 1e-14 * n as f64 {
        return Err(Error::ZeroNilpotent);
    }
    if !is_nilpotent(e) {
        return Err(Error::NotNilpotent(largest_eigenvalue_magnitude(e)));
    }
    if let Some(pi) = exact_jordan_partition(e) {
        return Ok(triple_for_partition(&pi));
    }
    let (pi, t) = nilpotent_jordan_basis(e)?;
    let model = triple_for_partition(&pi);
    let t_inv = t
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::LinearSolveFailed("Jordan basis not invertible".into()))?;
    Ok(Sl2Triple {
        e: e.clone(),
        h: &t * model.h * &t_inv,
        f: &t * model.f * &t_inv,
    })
}

/// Jordan type of a nilpotent matrix from its rank sequence: the number of
/// blocks of size at least `k` is `rank(x^(k-1)) - rank(x^k)`. Invariant
/// under conjugation.
pub fn orbit_partition(x: &CMat) -> Result<Partition> {
    let n = x.nrows();
    if !is_nilpotent(x) {
        return Err(Error::NotNilpotent(largest_eigenvalue_magnitude(x)));
    }
    let scale = x
        .clone()
        .singular_values()
        .iter()
        .copied()
        .fold(0.0, f64::max);
    if scale == 0.0 {
        return Ok(Partition::new(vec![1; n])?);
    }
    let ahat = x / C64::new(scale, 0.0);
    let mut ranks = vec![n];
    let mut power = CMat::identity(n, n);
    while *ranks.last().unwrap() > 0 {
        power = &power * &ahat;
        let sv = power.clone().singular_values();
        let smax = sv.iter().copied().fold(0.0, f64::max);
        let tol_abs = (tol::RANK_SVD * smax).max(1e-13);
        ranks.push(sv.iter().filter(|&&s| s > tol_abs).count());
        if ranks.len() > n + 1 {
            return Err(Error::NotNilpotent(largest_eigenvalue_magnitude(x)));
        }
    }
    let mut parts = Vec::new();
    for k in 1..ranks.len() {
        let ge_k = ranks[k - 1] - ranks[k];
        let ge_k1 = if k + 1 < ranks.len() {
            ranks[k] - ranks[k + 1]
        } else {
            0
        };
        for _ in 0..ge_k.saturating_sub(ge_k1) {
            parts.push(k);
        }
    }
    let pi = Partition::new(parts)?;
    if pi.n() != n {
        return Err(Error::InvalidPartition(format!(
            "rank sequence {ranks:?} sums to {} instead of {n}",
            pi.n()
        )));
    }
    Ok(pi)
}

/// Partition of `N` read off a dominant weight of `sl(N)`: maximal runs of
/// zeros in the weight (including empty runs at the boundaries and between
/// nonzero entries), each shifted by one, sorted decreasing.
pub fn weight_to_partition(lambda: &[u64]) -> Partition {
    let mut parts = Vec::new();
    let mut run = 0usize;
    for &l in lambda {
        if l == 0 {
            run += 1;
        } else {
            parts.push(run + 1);
            run = 0;
        }
    }
    parts.push(run + 1);
    Partition::new(parts).expect("weight rule produces positive parts")
}

/// Slodowy slice `e + ker ad_f` through a nilpotent element.
#[derive(Debug, Clone)]
pub struct SlodowySlice {
    pub triple: Sl2Triple,
    /// Orthonormal (Frobenius) basis of `ker ad_f` intersected with the
    /// traceless subspace.
    pub kernel_basis: Vec<CMat>,
}

impl SlodowySlice {
    pub fn dim_slice(&self) -> usize {
        self.kernel_basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.triple.e.nrows()
    }

    /// Affine chart: `e + sum_i coords[i] * basis[i]`.
    pub fn embed(&self, coords: &[C64]) -> Result<CMat> {
        if coords.len() != self.kernel_basis.len() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} slice coordinates, got {}",
                self.kernel_basis.len(),
                coords.len()
            )));
        }
        let mut m = self.triple.e.clone();
        for (c, b) in coords.iter().zip(&self.kernel_basis) {
            m += b * *c;
        }
        Ok(m)
    }

    /// Orthonormal-basis coordinates of `x - e`.
    pub fn project(&self, x: &CMat) -> Vec<C64> {
        let diff = x - &self.triple.e;
        self.kernel_basis
            .iter()
            .map(|b| frob_inner(b, &diff))
            .collect()
    }
}

/// Canonical orthonormal basis of the traceless subspace of `n x n`
/// matrices: off-diagonal units plus diagonal ladder combinations.
fn traceless_basis(n: usize) -> Vec<CMat> {
    let one = C64::new(1.0, 0.0);
    let mut basis = Vec::with_capacity(n * n - 1);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut m = CMat::zeros(n, n);
                m[(i, j)] = one;
                basis.push(m);
            }
        }
    }
    for k in 1..n {
        let norm = (k * (k + 1)) as f64;
        let mut m = CMat::zeros(n, n);
        for i in 0..k {
            m[(i, i)] = C64::new(1.0 / norm.sqrt(), 0.0);
        }
        m[(k, k)] = C64::new(-(k as f64) / norm.sqrt(), 0.0);
        basis.push(m);
    }
    basis
}

/// Builds the Slodowy slice at a nilpotent element. For `e = 0` the slice is
/// the whole traceless algebra with the zero triple.
pub fn slodowy_slice(e: &CMat) -> Result<SlodowySlice> {
    let n = e.nrows();
    if frob_norm(e) <= 1e-14 * n as f64 {
        return Ok(SlodowySlice {
            triple: Sl2Triple::zero(n),
            kernel_basis: traceless_basis(n),
        });
    }
    let triple = sl2_complete(e)?;
    let ad_f = ad_matrix(&triple.f);
    let smax = ad_f
        .clone()
        .singular_values()
        .iter()
        .copied()
        .fold(0.0, f64::max);
    let kernel_vecs = nullspace(&ad_f, (tol::RANK_SVD * smax).max(1e-13));
    // Intersect with the traceless subspace and re-orthonormalize.
    let mut basis: Vec<CMat> = Vec::new();
    for v in kernel_vecs {
        let mut m = unvectorize(&v, n);
        let tr = m.trace() / C64::new(n as f64, 0.0);
        for i in 0..n {
            m[(i, i)] -= tr;
        }
        for b in &basis {
            let c = frob_inner(b, &m);
            m -= b * c;
        }
        let norm = frob_norm(&m);
        if norm > 1e-8 {
            basis.push(m / C64::new(norm, 0.0));
        }
    }
    Ok(SlodowySlice {
        triple,
        kernel_basis: basis,
    })
}
