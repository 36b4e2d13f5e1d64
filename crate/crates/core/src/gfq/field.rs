use std::fmt;
use std::sync::Arc;

use crate::error::FieldError;

/// Field orders this crate can build.
pub const SUPPORTED_ORDERS: [u32; 12] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27];

/// Irreducible moduli for the extension fields, little-endian coefficients
/// with the leading 1 included.
const MODULI: [(u32, &[u8]); 6] = [
    (4, &[1, 1, 1]),       // x^2 + x + 1
    (8, &[1, 1, 0, 1]),    // x^3 + x + 1
    (9, &[2, 2, 1]),       // x^2 + 2x + 2
    (16, &[1, 1, 0, 0, 1]), // x^4 + x + 1
    (25, &[2, 4, 1]),      // x^2 + 4x + 2
    (27, &[1, 2, 0, 1]),   // x^3 + 2x + 1
];

/// An element of F_q, stored as its canonical code in `[0, q)`.
///
/// For prime fields the code is the residue. For extension fields it is the
/// base-p digit encoding of the polynomial representative: digit j is the
/// coefficient of the generator symbol to the power j.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(u8);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn code(self) -> u32 {
        self.0 as u32
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub(crate) fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    q: u32,
    p: u32,
    k: u32,
    modulus: Vec<u8>,
    generator: u8,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    log: Vec<u32>,
    antilog: Vec<u8>,
}

/// A small finite field F_q with precomputed arithmetic tables.
///
/// Cloning is cheap; the tables are shared.
#[derive(Clone)]
pub struct Field {
    t: Arc<Tables>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.t.q == other.t.q
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("q", &self.t.q)
            .field("p", &self.t.p)
            .field("k", &self.t.k)
            .field("modulus", &self.t.modulus)
            .finish()
    }
}

/// Returns `(p, k)` with `q = p^k` and `p` prime, or `None`.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut k) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

// Polynomials over F_p as little-endian digit vectors.

fn poly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = poly_trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = (1..p).find(|x| x * m[dm] % p == 1).expect("nonzero lead");
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let c = r[r.len() - 1] * lead_inv % p;
        for (j, &mj) in m.iter().enumerate() {
            r[shift + j] = (r[shift + j] + p * p - c * mj % p) % p;
        }
        r = poly_trim(r);
    }
    r
}

fn poly_mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    poly_rem(&out, m, p)
}

/// Exhaustive irreducibility test: no monic factor of degree `1..=deg/2`.
fn is_irreducible(m: &[u32], p: u32) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for low in 0..count {
            let mut f = digits(low, p, d);
            f.push(1);
            if poly_rem(m, &f, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn digits(mut code: u32, p: u32, k: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        out.push(code % p);
        code /= p;
    }
    out
}

fn encode(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

impl Field {
    /// Builds F_q for a supported prime power `q`.
    pub fn new(q: u32) -> Result<Field, FieldError> {
        let (p, k) = prime_power(q).ok_or(FieldError::NotAPrimePower(q))?;
        if !SUPPORTED_ORDERS.contains(&q) {
            return Err(FieldError::Unsupported(q));
        }
        let modulus: Vec<u32> = if k == 1 {
            vec![0, 1]
        } else {
            MODULI
                .iter()
                .find(|(order, _)| *order == q)
                .map(|(_, m)| m.iter().map(|&c| c as u32).collect())
                .ok_or(FieldError::Unsupported(q))?
        };
        if k > 1 && !is_irreducible(&modulus, p) {
            return Err(FieldError::ReducibleModulus(q));
        }

        let qs = q as usize;
        let ku = k as usize;
        let mut add = vec![0u8; qs * qs];
        let mut neg = vec![0u8; qs];
        for a in 0..q {
            let da = digits(a, p, ku);
            for b in 0..q {
                let db = digits(b, p, ku);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = encode(&s, p) as u8;
            }
            let n: Vec<u32> = da.iter().map(|x| (p - x) % p).collect();
            neg[a as usize] = encode(&n, p) as u8;
        }

        // Direct polynomial multiplication, used only to find a generator and
        // build the log/antilog tables.
        let direct_mul = |a: u32, b: u32| -> u32 {
            if k == 1 {
                return a * b % p;
            }
            let r = poly_mul_mod(&poly_trim(digits(a, p, ku)), &poly_trim(digits(b, p, ku)), &modulus, p);
            encode(&r, p)
        };
        let order = q - 1;
        let generator = (1..q)
            .find(|&g| {
                let mut x = 1;
                for e in 1..=order {
                    x = direct_mul(x, g);
                    if x == 1 {
                        return e == order;
                    }
                }
                false
            })
            .expect("multiplicative group of a finite field is cyclic");
        let mut antilog = vec![0u8; order as usize];
        let mut log = vec![u32::MAX; qs];
        let mut x = 1;
        for e in 0..order {
            antilog[e as usize] = x as u8;
            log[x as usize] = e;
            x = direct_mul(x, generator);
        }

        let mut mul = vec![0u8; qs * qs];
        let mut inv = vec![0u8; qs];
        for a in 1..q {
            for b in 1..q {
                let e = (log[a as usize] + log[b as usize]) % order;
                mul[(a * q + b) as usize] = antilog[e as usize];
            }
            inv[a as usize] = antilog[((order - log[a as usize]) % order) as usize];
        }

        Ok(Field {
            t: Arc::new(Tables {
                q,
                p,
                k,
                modulus: modulus.iter().map(|&c| c as u8).collect(),
                generator: generator as u8,
                add,
                mul,
                neg,
                inv,
                log,
                antilog,
            }),
        })
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.t.q
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.t.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.t.k
    }

    /// Defining polynomial over F_p (little-endian, leading 1 included).
    /// For prime fields this is `x`.
    pub fn modulus(&self) -> &[u8] {
        &self.t.modulus
    }

    /// A fixed primitive element.
    pub fn generator(&self) -> Elem {
        Elem(self.t.generator)
    }

    /// Discrete log base [`Field::generator`]; `None` for zero.
    pub fn log(&self, a: Elem) -> Option<u32> {
        (!a.is_zero()).then(|| self.t.log[a.index()])
    }

    pub fn exp(&self, e: u32) -> Elem {
        Elem(self.t.antilog[(e % (self.t.q - 1)) as usize])
    }

    /// Element with the given code, if `code < q`.
    pub fn elem(&self, code: u32) -> Option<Elem> {
        (code < self.t.q).then_some(Elem(code as u8))
    }

    /// The image of an integer under Z -> F_p -> F_q.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.t.p as i64) as u8)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.t.q).map(|c| Elem(c as u8))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.t.add[a.index() * self.t.q as usize + b.index()])
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.t.neg[a.index()])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.t.mul[a.index() * self.t.q as usize + b.index()])
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        (!a.is_zero()).then(|| Elem(self.t.inv[a.index()]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field() {
        let f = Field::new(2).unwrap();
        assert_eq!((f.characteristic(), f.degree()), (2, 1));
    }

    #[test]
    fn f4_modulus() {
        let f = Field::new(4).unwrap();
        assert_eq!((f.characteristic(), f.degree()), (2, 2));
        assert_eq!(f.modulus(), &[1, 1, 1]);
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert_eq!(Field::new(6), Err(FieldError::NotAPrimePower(6)));
        assert_eq!(Field::new(1), Err(FieldError::NotAPrimePower(1)));
        assert_eq!(Field::new(12), Err(FieldError::NotAPrimePower(12)));
        assert_eq!(Field::new(32), Err(FieldError::Unsupported(32)));
        assert_eq!(Field::new(17), Err(FieldError::Unsupported(17)));
    }

    #[test]
    fn all_moduli_irreducible() {
        for (q, m) in MODULI {
            let (p, _) = prime_power(q).unwrap();
            let m: Vec<u32> = m.iter().map(|&c| c as u32).collect();
            assert!(is_irreducible(&m, p), "q = {q}");
        }
        // x^2 + 1 factors over F_5 as (x + 2)(x + 3).
        assert!(!is_irreducible(&[1, 0, 1], 5));
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2 over F_2 has no roots but is reducible.
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
    }

    // F_4 by hand: {0, 1, w, w+1} with w^2 = w + 1, codes 0, 1, 2, 3.
    #[test]
    fn f4_hand_tables() {
        let f = Field::new(4).unwrap();
        let e = |c| f.elem(c).unwrap();
        assert_eq!(f.add(e(2), e(3)), e(1));
        assert_eq!(f.mul(e(2), e(2)), e(3));
        assert_eq!(f.mul(e(2), e(3)), e(1));
        assert_eq!(f.mul(e(3), e(3)), e(2));
        assert_eq!(f.inv(e(2)), Some(e(3)));
        assert_eq!(f.neg(e(3)), e(3));
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in SUPPORTED_ORDERS {
            let f = Field::new(q).unwrap();
            let els: Vec<Elem> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, Elem::ZERO), a);
                assert_eq!(f.mul(a, Elem::ONE), a);
                assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE, "q={q} a={a}");
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
            // p * 1 = 0
            let mut s = Elem::ZERO;
            for _ in 0..f.characteristic() {
                s = f.add(s, Elem::ONE);
            }
            assert_eq!(s, Elem::ZERO);
        }
    }

    #[test]
    fn generator_is_primitive() {
        for q in SUPPORTED_ORDERS {
            let f = Field::new(q).unwrap();
            let mut seen: Vec<Elem> = (0..q - 1).map(|e| f.exp(e)).collect();
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len() as u32, q - 1);
            assert_eq!(f.log(f.generator()), Some(1 % (q - 1)));
        }
    }
}
