use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::gauss::structure_constant;
use super::intpoly::IntPoly;

/// Which basis of Z[q][x] the x-terms of a polynomial refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// `{x^d}`
    Monomial,
    /// `{x_q^d}` with `x_q^d = x (x - (q-1)) ... (x - (q^{d-1} - 1))`.
    Falling,
}

impl Basis {
    pub fn tag(self) -> &'static str {
        match self {
            Basis::Monomial => "monomial",
            Basis::Falling => "xq",
        }
    }
}

/// Sparse x-degree -> Z[q] coefficient map with no zero entries.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
struct Terms(BTreeMap<usize, IntPoly>);

impl Terms {
    fn add_term(&mut self, d: usize, c: &IntPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.0.entry(d).or_default();
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&d);
        }
    }

    fn add(&self, other: &Terms) -> Terms {
        let mut out = self.clone();
        for (&d, c) in &other.0 {
            out.add_term(d, c);
        }
        out
    }

    fn neg(&self) -> Terms {
        Terms(self.0.iter().map(|(&d, c)| (d, -c)).collect())
    }

    fn degree(&self) -> Option<usize> {
        self.0.keys().next_back().copied()
    }
}

macro_rules! bivar_common {
    ($ty:ident) => {
        impl $ty {
            pub fn zero() -> Self {
                $ty(Terms::default())
            }

            pub fn one() -> Self {
                Self::term(0, IntPoly::one())
            }

            /// `c * b_d`, `b_d` the degree-`d` basis element.
            pub fn term(d: usize, c: IntPoly) -> Self {
                let mut t = Terms::default();
                t.add_term(d, &c);
                $ty(t)
            }

            /// Builds from `(degree, coefficient)` pairs, summing repeats.
            pub fn from_terms<I: IntoIterator<Item = (usize, IntPoly)>>(terms: I) -> Self {
                let mut t = Terms::default();
                for (d, c) in terms {
                    t.add_term(d, &c);
                }
                $ty(t)
            }

            /// Nonzero terms in ascending x-degree.
            pub fn terms(&self) -> impl Iterator<Item = (usize, &IntPoly)> {
                self.0 .0.iter().map(|(&d, c)| (d, c))
            }

            pub fn coeff(&self, d: usize) -> IntPoly {
                self.0 .0.get(&d).cloned().unwrap_or_default()
            }

            pub fn is_zero(&self) -> bool {
                self.0 .0.is_empty()
            }

            /// x-degree, `None` for zero.
            pub fn degree(&self) -> Option<usize> {
                self.0.degree()
            }

            /// Largest q-degree over all coefficients.
            pub fn q_degree(&self) -> Option<usize> {
                self.0 .0.values().filter_map(|c| c.degree()).max()
            }

            pub fn add(&self, other: &Self) -> Self {
                $ty(self.0.add(&other.0))
            }

            pub fn sub(&self, other: &Self) -> Self {
                $ty(self.0.add(&other.0.neg()))
            }

            pub fn scale(&self, s: &IntPoly) -> Self {
                Self::from_terms(self.terms().map(|(d, c)| (d, c * s)))
            }
        }
    };
}

/// A polynomial in Z[q][x] written in the monomial basis `{x^d}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MonomialPoly(Terms);

/// A polynomial in Z[q][x] written in the q-falling basis `{x_q^d}`.
///
/// Totally-isotropic polynomials live here with constant coefficients; the
/// symbolic q-independence polynomial with genuine Z[q] coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct XqPoly(Terms);

bivar_common!(MonomialPoly);
bivar_common!(XqPoly);

/// `x_q^d` expanded in the monomial basis.
pub fn xq_expand(d: usize) -> MonomialPoly {
    let x = MonomialPoly::term(1, IntPoly::one());
    (0..d).fold(MonomialPoly::one(), |acc, j| {
        let shift = MonomialPoly::term(0, IntPoly::q_pow_minus_one(j));
        acc.mul(&x.sub(&shift))
    })
}

impl MonomialPoly {
    /// Plain product in Z[q][x].
    pub fn mul(&self, other: &Self) -> Self {
        let mut t = Terms::default();
        for (d, a) in self.terms() {
            for (e, b) in other.terms() {
                t.add_term(d + e, &(a * b));
            }
        }
        MonomialPoly(t)
    }

    /// Embeds an integer polynomial in x.
    pub fn from_int_coeffs(p: &IntPoly) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(d, c)| (d, IntPoly::constant(c.clone()))),
        )
    }

    /// Rewrites in the q-falling basis. The change of basis is unitriangular,
    /// so peel off the top term and descend.
    pub fn to_falling(&self) -> XqPoly {
        let mut rest = self.clone();
        let mut out = Terms::default();
        let mut cache: BTreeMap<usize, MonomialPoly> = BTreeMap::new();
        while let Some(d) = rest.degree() {
            let c = rest.coeff(d);
            out.add_term(d, &c);
            let basis = cache.entry(d).or_insert_with(|| xq_expand(d));
            rest = rest.sub(&basis.scale(&c));
        }
        XqPoly(out)
    }

    pub fn eval(&self, q0: &BigInt, x0: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (d, c) in self.terms() {
            acc += c.eval(q0) * x0.pow(d as u32);
        }
        acc
    }

    /// Substitutes `q = q0`, leaving an integer polynomial in x.
    pub fn specialize_q(&self, q0: &BigInt) -> IntPoly {
        let len = self.degree().map_or(0, |d| d + 1);
        let mut coeffs = vec![BigInt::zero(); len];
        for (d, c) in self.terms() {
            coeffs[d] = c.eval(q0);
        }
        IntPoly::new(coeffs)
    }
}

impl XqPoly {
    pub fn to_monomial(&self) -> MonomialPoly {
        let mut out = MonomialPoly::zero();
        for (d, c) in self.terms() {
            out = out.add(&xq_expand(d).scale(c));
        }
        out
    }

    /// Product via the falling-basis rule
    /// `x_q^d x_q^e = sum_{s=0}^{e} C(d, e, s) x_q^{d+e-s}` for `d >= e`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut t = Terms::default();
        let mut constants: BTreeMap<(usize, usize, usize), IntPoly> = BTreeMap::new();
        for (da, a) in self.terms() {
            for (db, b) in other.terms() {
                let (d, e) = if da >= db { (da, db) } else { (db, da) };
                let ab = a * b;
                for s in 0..=e {
                    let c = constants
                        .entry((d, e, s))
                        .or_insert_with(|| structure_constant(d, e, s).expect("s <= e <= d"));
                    t.add_term(d + e - s, &(&ab * c));
                }
            }
        }
        XqPoly(t)
    }

    pub fn eval(&self, q0: &BigInt, x0: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (d, c) in self.terms() {
            acc += c.eval(q0) * eval_falling(d, q0, x0);
        }
        acc
    }

    /// Substitutes `q = q0` in the coefficients, keeping the `x_{q0}^d` basis.
    pub fn specialize_q(&self, q0: &BigInt) -> SpecializedXq {
        let len = self.degree().map_or(0, |d| d + 1);
        let mut coeffs = vec![BigInt::zero(); len];
        for (d, c) in self.terms() {
            coeffs[d] = c.eval(q0);
        }
        SpecializedXq {
            q0: q0.clone(),
            coeffs: IntPoly::new(coeffs),
        }
    }

    /// Coefficients as integers if every coefficient is constant in q.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        let len = self.degree().map_or(0, |d| d + 1);
        let mut out = vec![BigInt::zero(); len];
        for (d, c) in self.terms() {
            if !c.is_constant() {
                return None;
            }
            out[d] = c.coeff(0);
        }
        Some(out)
    }
}

/// `x_{q0}^d` evaluated at `x0`.
fn eval_falling(d: usize, q0: &BigInt, x0: &BigInt) -> BigInt {
    let mut acc = BigInt::one();
    let mut qj = BigInt::one();
    for _ in 0..d {
        acc *= x0 - (&qj - 1);
        qj *= q0;
    }
    acc
}

/// A falling-basis polynomial after fixing `q = q0`: integer coefficients
/// against the basis `x_{q0}^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializedXq {
    pub q0: BigInt,
    /// `coeffs[d]` multiplies `x_{q0}^d`.
    pub coeffs: IntPoly,
}

impl SpecializedXq {
    /// Expands to an ordinary integer polynomial in x.
    pub fn to_monomial(&self) -> IntPoly {
        let q0 = self.q0.clone();
        self.coeffs
            .coeffs()
            .iter()
            .enumerate()
            .map(|(d, c)| xq_expand(d).specialize_q(&q0).scale(c))
            .sum()
    }
}

/// Either basis, as read from or written to a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BivarPoly {
    Monomial(MonomialPoly),
    Falling(XqPoly),
}

impl BivarPoly {
    pub fn basis(&self) -> Basis {
        match self {
            BivarPoly::Monomial(_) => Basis::Monomial,
            BivarPoly::Falling(_) => Basis::Falling,
        }
    }

    pub fn terms(&self) -> Vec<(usize, &IntPoly)> {
        match self {
            BivarPoly::Monomial(p) => p.terms().collect(),
            BivarPoly::Falling(p) => p.terms().collect(),
        }
    }

    pub fn to_monomial(&self) -> MonomialPoly {
        match self {
            BivarPoly::Monomial(p) => p.clone(),
            BivarPoly::Falling(p) => p.to_monomial(),
        }
    }

    pub fn to_falling(&self) -> XqPoly {
        match self {
            BivarPoly::Monomial(p) => p.to_falling(),
            BivarPoly::Falling(p) => p.clone(),
        }
    }

    pub fn eval(&self, q0: &BigInt, x0: &BigInt) -> BigInt {
        match self {
            BivarPoly::Monomial(p) => p.eval(q0, x0),
            BivarPoly::Falling(p) => p.eval(q0, x0),
        }
    }
}

impl From<MonomialPoly> for BivarPoly {
    fn from(p: MonomialPoly) -> Self {
        BivarPoly::Monomial(p)
    }
}

impl From<XqPoly> for BivarPoly {
    fn from(p: XqPoly) -> Self {
        BivarPoly::Falling(p)
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render::render_text(self))
    }
}

impl fmt::Display for XqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render::render_text(&BivarPoly::Falling(self.clone())))
    }
}

impl fmt::Display for MonomialPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render::render_text(&BivarPoly::Monomial(self.clone())))
    }
}
