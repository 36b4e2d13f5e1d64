//! Alternating matrix spaces over F_q and brute-force enumeration of their
//! totally-isotropic subspaces.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::SpaceError;
use crate::gfq::{grassmannian_size, pivot_patterns, EchelonForm, Elem, Field, FqMatrix, PivotCell};
use crate::graph::{Graph, VertexSet};
use crate::qpoly::{IntPoly, XqPoly};

/// Brute-force enumeration refuses to visit more candidates than this
/// unless the caller raises the limit.
pub const DEFAULT_GUARD_LIMIT: u128 = 100_000_000;

/// Span of a list of n x n alternating matrices over F_q, stored as a
/// linearly independent generating list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltSpace {
    n: usize,
    field: Field,
    gens: Vec<FqMatrix>,
}

/// Checks `u^T B u = 0` for all u: zero diagonal and `B_ij + B_ji = 0`.
/// On failure returns a witness vector and the value of `u^T B u`.
fn alternating_witness(b: &FqMatrix, field: &Field) -> Option<(Vec<Elem>, Elem)> {
    let n = b.rows();
    for j in 0..n {
        if !b.get(j, j).is_zero() {
            let mut u = vec![Elem::ZERO; n];
            u[j] = Elem::ONE;
            return Some((u, b.get(j, j)));
        }
    }
    for a in 0..n {
        for c in a + 1..n {
            let s = field.add(b.get(a, c), b.get(c, a));
            if !s.is_zero() {
                let mut u = vec![Elem::ZERO; n];
                u[a] = Elem::ONE;
                u[c] = Elem::ONE;
                return Some((u, s));
            }
        }
    }
    None
}

/// Keeps the generators that are independent of the ones kept before them.
fn independent_subset(gens: Vec<FqMatrix>, n: usize, field: &Field) -> Vec<FqMatrix> {
    let mut kept = Vec::new();
    let mut stack = FqMatrix::zeros(0, n * n);
    for g in gens {
        let row = FqMatrix::from_elems(1, n * n, g.entries().to_vec()).expect("n*n entries");
        let candidate = stack.vstack(&row).expect("same width");
        if candidate.rank(field) > kept.len() {
            stack = candidate;
            kept.push(g);
        }
    }
    kept
}

impl AltSpace {
    /// Validates that each matrix is n x n and alternating, then reduces the
    /// list to an independent spanning set.
    pub fn new(n: usize, field: &Field, matrices: Vec<FqMatrix>) -> Result<AltSpace, SpaceError> {
        for (index, b) in matrices.iter().enumerate() {
            if b.rows() != n || b.cols() != n {
                return Err(crate::error::MatrixError::ShapeMismatch {
                    left_rows: n,
                    left_cols: n,
                    right_rows: b.rows(),
                    right_cols: b.cols(),
                }
                .into());
            }
            if let Some((u, value)) = alternating_witness(b, field) {
                return Err(SpaceError::NotAlternating {
                    index,
                    witness: u.iter().map(|e| e.code()).collect(),
                    value: value.code(),
                });
            }
        }
        Ok(AltSpace {
            n,
            field: field.clone(),
            gens: independent_subset(matrices, n, field),
        })
    }

    pub fn zero(n: usize, field: &Field) -> AltSpace {
        AltSpace {
            n,
            field: field.clone(),
            gens: Vec::new(),
        }
    }

    /// `span{A_uv : {u, v} in E}` with `A_uv` having `1` at `(u, v)` and `-1`
    /// at `(v, u)`.
    pub fn graphical(g: &Graph, field: &Field) -> AltSpace {
        let n = g.n();
        let minus_one = field.neg(Elem::ONE);
        let gens = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                let mut m = FqMatrix::zeros(n, n);
                m.set(u - 1, v - 1, Elem::ONE);
                m.set(v - 1, u - 1, minus_one);
                m
            })
            .collect();
        AltSpace {
            n,
            field: field.clone(),
            gens,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn gens(&self) -> &[FqMatrix] {
        &self.gens
    }

    pub fn dim(&self) -> usize {
        self.gens.len()
    }

    /// Disjoint direct sum: generators of `self` padded below-right with
    /// zeros, followed by generators of `other` padded above-left.
    pub fn direct_sum(&self, other: &AltSpace) -> Result<AltSpace, SpaceError> {
        if self.field != other.field {
            return Err(SpaceError::FieldMismatch(self.field.q(), other.field.q()));
        }
        let (n1, n2) = (self.n, other.n);
        let n = n1 + n2;
        let embed = |b: &FqMatrix, off: usize| {
            let mut m = FqMatrix::zeros(n, n);
            for r in 0..b.rows() {
                for c in 0..b.cols() {
                    m.set(r + off, c + off, b.get(r, c));
                }
            }
            m
        };
        let gens = self
            .gens
            .iter()
            .map(|b| embed(b, 0))
            .chain(other.gens.iter().map(|c| embed(c, n1)))
            .collect();
        Ok(AltSpace {
            n,
            field: self.field.clone(),
            gens,
        })
    }

    /// Whether both generate the same subspace of n x n matrices.
    pub fn same_span(&self, other: &AltSpace) -> bool {
        if self.n != other.n || self.field != other.field || self.dim() != other.dim() {
            return false;
        }
        let flat = |gens: &[FqMatrix]| {
            let data: Vec<Elem> = gens.iter().flat_map(|g| g.entries().iter().copied()).collect();
            FqMatrix::from_elems(gens.len(), self.n * self.n, data).expect("n*n entries")
        };
        let a = flat(&self.gens);
        let b = flat(&other.gens);
        a.vstack(&b).expect("same width").rank(&self.field) == self.dim()
    }

    /// The space `{P^T B P}` for the permutation matrix P sending `e_j` to
    /// `e_{perm[j]}` (0-indexed): entry `(i, j)` of the image is `B[perm[i], perm[j]]`.
    pub fn permuted(&self, perm: &[usize]) -> AltSpace {
        assert_eq!(perm.len(), self.n);
        let gens = self
            .gens
            .iter()
            .map(|b| {
                let mut m = FqMatrix::zeros(self.n, self.n);
                for i in 0..self.n {
                    for j in 0..self.n {
                        m.set(i, j, b.get(perm[i], perm[j]));
                    }
                }
                m
            })
            .collect();
        AltSpace {
            n: self.n,
            field: self.field.clone(),
            gens,
        }
    }

    /// `T^T B T = 0` for every generator, T an n x i basis matrix.
    pub fn is_totally_isotropic(&self, u: &SubspaceBasis) -> Result<bool, SpaceError> {
        if u.n() != self.n {
            return Err(crate::error::MatrixError::ShapeMismatch {
                left_rows: self.n,
                left_cols: self.n,
                right_rows: u.n(),
                right_cols: u.dim(),
            }
            .into());
        }
        let t = u.matrix();
        let tt = t.transpose();
        for b in &self.gens {
            let prod = tt.mul(b, &self.field)?.mul(t, &self.field)?;
            if !prod.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn isotropy_checker(&self) -> IsotropyChecker {
        IsotropyChecker::new(self)
    }

    /// Refuses when the Grassmannian sweep would exceed `limit` subspaces.
    pub fn check_guard(&self, limit: u128) -> Result<u128, SpaceError> {
        let estimate = (0..=self.n)
            .map(|i| grassmannian_size(self.n, i, self.field.q()))
            .fold(0u128, |a, b| a.saturating_add(b));
        if estimate > limit {
            return Err(SpaceError::TooLarge { estimate, limit });
        }
        Ok(estimate)
    }

    /// Folds `fold` over the canonical basis of every dimension-`i`
    /// totally-isotropic subspace, one accumulator per pivot cell. Cells run
    /// in parallel; callers merge the partial results commutatively.
    fn collect_isotropic<T, F>(&self, i: usize, init: T, fold: F) -> Vec<T>
    where
        T: Send + Sync + Clone,
        F: Fn(&mut T, &EchelonForm) + Sync,
    {
        let checker = self.isotropy_checker();
        pivot_patterns(self.n, i)
            .into_par_iter()
            .map(|pivots| {
                let mut acc = init.clone();
                for e in PivotCell::new(self.n, pivots, &self.field) {
                    if checker.rows_isotropic(e.matrix()) {
                        fold(&mut acc, &e);
                    }
                }
                acc
            })
            .collect()
    }

    /// `c_0, ..., c_alpha`: numbers of totally-isotropic subspaces by dimension.
    pub fn ti_counts_brute(&self, limit: u128) -> Result<Vec<u64>, SpaceError> {
        self.check_guard(limit)?;
        let mut counts = Vec::with_capacity(self.n + 1);
        for i in 0..=self.n {
            let c: u64 = self
                .collect_isotropic(i, 0u64, |acc, _| *acc += 1)
                .into_iter()
                .sum();
            if c == 0 {
                // Subspaces of isotropic spaces are isotropic, so counts stop here.
                break;
            }
            counts.push(c);
        }
        Ok(counts)
    }

    /// `TI(B, x) = sum_i c_i x_q^i`.
    pub fn ti_polynomial_brute(&self, limit: u128) -> Result<XqPoly, SpaceError> {
        let counts = self.ti_counts_brute(limit)?;
        Ok(XqPoly::from_terms(
            counts
                .into_iter()
                .enumerate()
                .map(|(i, c)| (i, IntPoly::constant(BigInt::from(c)))),
        ))
    }

    /// Largest dimension of a totally-isotropic subspace.
    pub fn alpha(&self, limit: u128) -> Result<usize, SpaceError> {
        Ok(self.ti_counts_brute(limit)?.len() - 1)
    }

    /// Every totally-isotropic subspace, grouped by dimension and (P, Q) label.
    pub fn ti_strata_brute(&self, limit: u128) -> Result<BTreeMap<PQLabel, u64>, SpaceError> {
        self.check_guard(limit)?;
        let mut out = BTreeMap::new();
        for i in 0..=self.n {
            let parts = self.collect_isotropic(i, BTreeMap::new(), |acc: &mut BTreeMap<PQLabel, u64>, e| {
                *acc.entry(PQLabel::of_echelon(e)).or_insert(0) += 1;
            });
            let mut any = false;
            for part in parts {
                for (label, c) in part {
                    any = true;
                    *out.entry(label).or_insert(0) += c;
                }
            }
            if !any {
                break;
            }
        }
        Ok(out)
    }

    /// Canonical bases (as [`SubspaceBasis`]) of all dimension-`i`
    /// totally-isotropic subspaces, in enumeration order.
    pub fn ti_subspaces(&self, i: usize, limit: u128) -> Result<Vec<SubspaceBasis>, SpaceError> {
        self.check_guard(limit)?;
        let parts = self.collect_isotropic(i, Vec::new(), |acc: &mut Vec<SubspaceBasis>, e| {
            acc.push(SubspaceBasis::from_echelon(e));
        });
        Ok(parts.into_iter().flatten().collect())
    }

    /// For each `e`, the number of `v` in F_q^n with `dim span{Bv} = e`.
    pub fn rank_locus_counts(&self, limit: u128) -> Result<Vec<u64>, SpaceError> {
        let q = self.field.q() as u128;
        let total = q.checked_pow(self.n as u32).unwrap_or(u128::MAX);
        if total > limit {
            return Err(SpaceError::TooLarge {
                estimate: total,
                limit,
            });
        }
        let mut counts = vec![0u64; self.dim() + 1];
        let mut v = vec![Elem::ZERO; self.n];
        for code in 0..total as u64 {
            let mut c = code;
            for slot in v.iter_mut() {
                *slot = self.field.elem((c % q as u64) as u32).expect("digit below q");
                c /= q as u64;
            }
            let images: Vec<Elem> = self
                .gens
                .iter()
                .flat_map(|b| b.apply(&v, &self.field))
                .collect();
            let m = FqMatrix::from_elems(self.dim(), self.n, images).expect("dim x n");
            counts[m.rank(&self.field)] += 1;
        }
        Ok(counts)
    }
}

/// Sparse form of the generators for fast isotropy tests on row bases:
/// each generator is its list of `(a, b, B_ab)` with `a < b` and `B_ab != 0`.
struct IsotropyChecker {
    field: Field,
    forms: Vec<Vec<(usize, usize, Elem)>>,
}

impl IsotropyChecker {
    fn new(space: &AltSpace) -> Self {
        let n = space.n;
        let forms = space
            .gens
            .iter()
            .map(|b| {
                let mut entries = Vec::new();
                for a in 0..n {
                    for c in a + 1..n {
                        if !b.get(a, c).is_zero() {
                            entries.push((a, c, b.get(a, c)));
                        }
                    }
                }
                entries
            })
            .collect();
        IsotropyChecker {
            field: space.field.clone(),
            forms,
        }
    }

    /// Rows of `r` span a totally-isotropic subspace: for every pair of
    /// rows `k < l` and every generator, `r_k^T B r_l = 0`. The diagonal and
    /// the pairs `k > l` follow from the alternating property.
    fn rows_isotropic(&self, r: &FqMatrix) -> bool {
        let f = &self.field;
        let i = r.rows();
        for form in &self.forms {
            for k in 0..i {
                let rk = r.row(k);
                for l in k + 1..i {
                    let rl = r.row(l);
                    let mut acc = Elem::ZERO;
                    for &(a, b, w) in form {
                        let minor = f.sub(f.mul(rk[a], rl[b]), f.mul(rk[b], rl[a]));
                        acc = f.add(acc, f.mul(w, minor));
                    }
                    if !acc.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// An n x i matrix of full column rank whose columns span a subspace U.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    t: FqMatrix,
}

impl SubspaceBasis {
    pub fn new(t: FqMatrix, field: &Field) -> Result<SubspaceBasis, SpaceError> {
        let rank = t.rank(field);
        if rank != t.cols() {
            return Err(SpaceError::RankDeficient {
                rank,
                expected: t.cols(),
            });
        }
        Ok(SubspaceBasis { t })
    }

    /// Column basis from the rows of a reduced row echelon form.
    pub fn from_echelon(e: &EchelonForm) -> SubspaceBasis {
        SubspaceBasis {
            t: e.basis().transpose(),
        }
    }

    /// Span of the given column vectors (each of length n, as codes).
    pub fn from_columns(field: &Field, n: usize, cols: &[Vec<u32>]) -> Result<SubspaceBasis, SpaceError> {
        let rows: Vec<Vec<u32>> = (0..n).map(|r| cols.iter().map(|c| c[r]).collect()).collect();
        let t = if cols.is_empty() {
            FqMatrix::zeros(n, 0)
        } else {
            FqMatrix::from_codes(field, &rows)?
        };
        SubspaceBasis::new(t, field)
    }

    pub fn matrix(&self) -> &FqMatrix {
        &self.t
    }

    pub fn n(&self) -> usize {
        self.t.rows()
    }

    pub fn dim(&self) -> usize {
        self.t.cols()
    }

    /// Canonical row-reduced form of `T^T`.
    pub fn echelon(&self, field: &Field) -> EchelonForm {
        self.t.transpose().rref(field)
    }
}

/// Stratum label of a subspace: `p` is the lexicographically first i-subset
/// of rows with a nonzero minor, `q` the other nonzero rows. 1-indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PQLabel {
    pub p: VertexSet,
    pub q: VertexSet,
}

impl PQLabel {
    pub fn dim(&self) -> usize {
        self.p.len()
    }

    /// Reads the label off a canonical row basis: pivots give P and the
    /// remaining nonzero columns give Q.
    pub fn of_echelon(e: &EchelonForm) -> PQLabel {
        let m = e.matrix();
        let p: VertexSet = e.pivots().iter().map(|&c| c + 1).collect();
        let support: VertexSet = (0..m.cols())
            .filter(|&c| (0..e.rank()).any(|r| !m.get(r, c).is_zero()))
            .map(|c| c + 1)
            .collect();
        PQLabel {
            p,
            q: support.difference(p),
        }
    }
}

/// P and Q of the column span of `u`. Only column operations (a change of
/// basis of U) are used, so row indices keep their meaning.
pub fn classify_pq(u: &SubspaceBasis, field: &Field) -> PQLabel {
    PQLabel::of_echelon(&u.echelon(field))
}

/// All i-subsets of rows of T whose i x i minor is nonzero.
pub fn plucker_support(u: &SubspaceBasis, field: &Field) -> Vec<VertexSet> {
    pivot_patterns(u.n(), u.dim())
        .into_iter()
        .filter(|rows| u.matrix().select_rows(rows).rank(field) == u.dim())
        .map(|rows| rows.iter().map(|&r| r + 1).collect())
        .collect()
}
