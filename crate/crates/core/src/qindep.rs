//! The q-analogue independence polynomial I(G, x, q).
//!
//! Dimension-i totally-isotropic subspaces of the graphical space split into
//! strata labelled by an independent set P (the first nonzero Plücker
//! coordinate) and a set Q of further nonzero rows. A stratum is nonempty
//! exactly when every component of G[P ∪ Q]
//!
//! 1. holds at most one vertex of P,
//! 2. if it holds `u ∈ P`, has no vertex below `u`,
//! 3. if it holds no vertex of P, has its minimum above `min P`,
//!
//! and then has size `prod (q-1)^{|C|-1} * prod (q^{d_D} - 1)` where `d_D`
//! counts the vertices of P below `min D` for each P-free component D.
//! Summing over (P, Q) gives c_i(q) in Z[q] directly.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::altspace::{AltSpace, PQLabel};
use crate::error::{SpaceError, StratumError};
use crate::gfq::Field;
use crate::graph::{Graph, VertexSet};
use crate::qpoly::{IntPoly, XqPoly};

/// Factored stratum size: `(q-1)^unit_exp * prod_{d in higher} (q^d - 1)`,
/// `higher` sorted and free of 1s.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Shape {
    unit_exp: u32,
    higher: Vec<u32>,
}

impl Shape {
    fn poly(&self) -> IntPoly {
        let mut p = IntPoly::q_pow_minus_one(1).pow(self.unit_exp);
        for &d in &self.higher {
            p = &p * &IntPoly::q_pow_minus_one(d as usize);
        }
        p
    }
}

/// Bitmask core of the stratum test; `None` when the stratum is empty.
fn stratum_shape(g: &Graph, p: u64, q: u64) -> Option<Shape> {
    let mut shape = Shape::default();
    let min_p = if p == 0 { u32::MAX } else { p.trailing_zeros() };
    let mut left = p | q;
    while left != 0 {
        let start = left.trailing_zeros();
        let comp = g.component_bits(start as usize, left);
        left &= !comp;
        let size = comp.count_ones();
        let in_p = comp & p;
        match in_p.count_ones() {
            0 => {
                // `start` is min of this P-free component.
                if start < min_p {
                    return None;
                }
                let d = (p & ((1u64 << start) - 1)).count_ones();
                if d == 1 {
                    shape.unit_exp += 1;
                } else {
                    shape.higher.push(d);
                }
                shape.unit_exp += size - 1;
            }
            1 => {
                if comp & (in_p - 1) != 0 {
                    return None;
                }
                shape.unit_exp += size - 1;
            }
            _ => return None,
        }
    }
    shape.higher.sort_unstable();
    Some(shape)
}

fn check_pair(g: &Graph, p: VertexSet, q: VertexSet) -> Result<(), StratumError> {
    let all = g.vertices();
    if !p.is_subset(all) || !q.is_subset(all) {
        return Err(StratumError::BadArgs(format!(
            "P = {p:?}, Q = {q:?} not within 1..={}",
            g.n()
        )));
    }
    if !p.intersection(q).is_empty() {
        return Err(StratumError::BadArgs(format!("P = {p:?} and Q = {q:?} overlap")));
    }
    if !g.is_independent(p) {
        return Err(StratumError::BadArgs(format!("P = {p:?} is not independent")));
    }
    Ok(())
}

/// Whether the stratum labelled (P, Q) is nonempty.
pub fn q_valid(g: &Graph, p: VertexSet, q: VertexSet) -> Result<bool, StratumError> {
    check_pair(g, p, q)?;
    Ok(stratum_shape(g, p.bits(), q.bits()).is_some())
}

/// Number of totally-isotropic subspaces in stratum (P, Q), as a polynomial in q.
pub fn pq_weight(g: &Graph, p: VertexSet, q: VertexSet) -> Result<IntPoly, StratumError> {
    check_pair(g, p, q)?;
    stratum_shape(g, p.bits(), q.bits())
        .map(|s| s.poly())
        .ok_or_else(|| StratumError::InvalidStratum {
            p: p.to_vec(),
            q: q.to_vec(),
        })
}

/// A nonempty stratum with its size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumWeight {
    pub label: PQLabel,
    pub weight: IntPoly,
}

/// Visits each valid Q for a fixed P by sweeping all subsets of the
/// complement of P.
fn for_each_valid_q(g: &Graph, p: u64, mut visit: impl FnMut(u64, Shape)) {
    let rest = VertexSet::full(g.n()).bits() & !p;
    let mut q = rest;
    loop {
        if let Some(shape) = stratum_shape(g, p, q) {
            visit(q, shape);
        }
        if q == 0 {
            break;
        }
        q = (q - 1) & rest;
    }
}

/// All nonempty strata with a given P, ordered by Q.
pub fn strata_for(g: &Graph, p: VertexSet) -> Result<Vec<StratumWeight>, StratumError> {
    check_pair(g, p, VertexSet::EMPTY)?;
    let mut out = Vec::new();
    for_each_valid_q(g, p.bits(), |q, shape| {
        out.push(StratumWeight {
            label: PQLabel {
                p,
                q: VertexSet::from_bits(q),
            },
            weight: shape.poly(),
        })
    });
    out.sort_by_key(|s| s.label);
    Ok(out)
}

/// `sum_Q |stratum(P, Q)|`, the number of subspaces whose first nonzero
/// Plücker coordinate is P.
pub fn p_total(g: &Graph, p: VertexSet) -> Result<IntPoly, StratumError> {
    check_pair(g, p, VertexSet::EMPTY)?;
    let mut tally: HashMap<Shape, u64> = HashMap::new();
    for_each_valid_q(g, p.bits(), |_, s| *tally.entry(s).or_insert(0) += 1);
    Ok(fold_tally(tally))
}

fn fold_tally(tally: HashMap<Shape, u64>) -> IntPoly {
    let mut entries: Vec<_> = tally.into_iter().collect();
    entries.sort();
    entries
        .into_iter()
        .map(|(s, c)| s.poly().scale(&BigInt::from(c)))
        .sum()
}

/// c_i(q): the sum of stratum sizes over size-i independent P and valid Q.
pub fn symbolic_coefficient(g: &Graph, i: usize) -> IntPoly {
    let sets = g.independent_sets(i);
    let tally = sets
        .par_iter()
        .map(|p| {
            let mut t: HashMap<Shape, u64> = HashMap::new();
            for_each_valid_q(g, p.bits(), |_, s| *t.entry(s).or_insert(0) += 1);
            t
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    fold_tally(tally)
}

/// `I(G, x, q) = sum_i c_i(q) x_q^i` with `c_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QIndepPoly {
    coeffs: Vec<IntPoly>,
}

impl QIndepPoly {
    /// `c_0(q), ..., c_alpha(q)`.
    pub fn coeffs(&self) -> &[IntPoly] {
        &self.coeffs
    }

    pub fn alpha(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn to_xq(&self) -> XqPoly {
        XqPoly::from_terms(self.coeffs.iter().cloned().enumerate())
    }

    /// `c_i(q0)` for every i.
    pub fn eval_coeffs(&self, q0: &BigInt) -> Vec<BigInt> {
        self.coeffs.iter().map(|c| c.eval(q0)).collect()
    }
}

impl fmt::Display for QIndepPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_xq().fmt(f)
    }
}

pub fn q_independence_polynomial(g: &Graph) -> QIndepPoly {
    let alpha = g.alpha();
    let coeffs = (0..=alpha).map(|i| symbolic_coefficient(g, i)).collect();
    QIndepPoly { coeffs }
}

/// One disagreement found by [`cross_validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Discrepancy {
    Coefficient {
        i: usize,
        symbolic: BigInt,
        brute: BigInt,
    },
    Stratum {
        i: usize,
        p: Vec<usize>,
        q: Vec<usize>,
        expected: BigInt,
        actual: BigInt,
    },
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Discrepancy::Coefficient { i, symbolic, brute } => {
                write!(f, "c_{i}: symbolic {symbolic} != brute {brute}")
            }
            Discrepancy::Stratum {
                i,
                p,
                q,
                expected,
                actual,
            } => write!(
                f,
                "stratum i={i} P={p:?} Q={q:?}: expected {expected}, actual {actual}"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossReport {
    pub q0: u32,
    pub symbolic: Vec<BigInt>,
    pub brute: Vec<BigInt>,
    pub strata_checked: usize,
    pub discrepancies: Vec<Discrepancy>,
}

impl CrossReport {
    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

fn tuple(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(", "))
}

impl fmt::Display for CrossReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "c = {} symbolic == brute", tuple(&self.symbolic))?;
            write!(f, " ({} strata at q = {})", self.strata_checked, self.q0)
        } else {
            writeln!(
                f,
                "c = {} symbolic != brute {} at q = {}",
                tuple(&self.symbolic),
                tuple(&self.brute),
                self.q0
            )?;
            for d in &self.discrepancies {
                writeln!(f, "  {d}")?;
            }
            Ok(())
        }
    }
}

/// Compares the symbolic coefficients and every stratum size at `q = field.q()`
/// against brute-force enumeration over the graphical space.
pub fn cross_validate(g: &Graph, field: &Field, limit: u128) -> Result<CrossReport, SpaceError> {
    let space = AltSpace::graphical(g, field);
    space.check_guard(limit)?;
    let q0 = BigInt::from(field.q());

    let poly = q_independence_polynomial(g);
    let symbolic = poly.eval_coeffs(&q0);
    let actual_strata = space.ti_strata_brute(limit)?;
    let mut brute = vec![BigInt::from(0); g.n() + 1];
    for (label, &c) in &actual_strata {
        brute[label.dim()] += c;
    }
    while brute.len() > 1 && brute.last().is_some_and(|c| *c == BigInt::from(0)) {
        brute.pop();
    }

    let mut discrepancies = Vec::new();
    for i in 0..symbolic.len().max(brute.len()) {
        let s = symbolic.get(i).cloned().unwrap_or_default();
        let b = brute.get(i).cloned().unwrap_or_default();
        if s != b {
            discrepancies.push(Discrepancy::Coefficient {
                i,
                symbolic: s,
                brute: b,
            });
        }
    }

    let mut expected: BTreeMap<PQLabel, BigInt> = BTreeMap::new();
    for i in 0..=poly.alpha() {
        for p in g.independent_sets(i) {
            for_each_valid_q(g, p.bits(), |q, shape| {
                let label = PQLabel {
                    p,
                    q: VertexSet::from_bits(q),
                };
                expected.insert(label, shape.poly().eval(&q0));
            });
        }
    }
    let mut labels: Vec<PQLabel> = expected.keys().chain(actual_strata.keys()).copied().collect();
    labels.sort();
    labels.dedup();
    for label in &labels {
        let e = expected.get(label).cloned().unwrap_or_default();
        let a = actual_strata.get(label).map_or_else(BigInt::default, |&c| BigInt::from(c));
        if e != a {
            discrepancies.push(Discrepancy::Stratum {
                i: label.dim(),
                p: label.p.to_vec(),
                q: label.q.to_vec(),
                expected: e,
                actual: a,
            });
        }
    }

    Ok(CrossReport {
        q0: field.q(),
        symbolic,
        brute,
        strata_checked: labels.len(),
        discrepancies,
    })
}

/// `c_i(1)`, which should equal the ordinary independent-set counts.
pub fn at_q_one(poly: &QIndepPoly) -> Vec<BigInt> {
    poly.eval_coeffs(&BigInt::one())
}
