use super::intpoly::IntPoly;
use crate::error::PolyError;

/// The Gaussian binomial `[n choose k]_q`, built row by row from
/// `[n, k] = [n-1, k-1] + q^k [n-1, k]` so no division is needed.
pub fn gaussian_binomial(n: usize, k: usize) -> Result<IntPoly, PolyError> {
    if k > n {
        return Err(PolyError::BadArgs(format!("k = {k} exceeds n = {n}")));
    }
    let mut row = vec![IntPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let left = if j > 0 { row[j - 1].clone() } else { IntPoly::zero() };
            let right = if j < m {
                &IntPoly::monomial(j) * &row[j]
            } else {
                IntPoly::zero()
            };
            next.push(left + right);
        }
        row = next;
    }
    Ok(row.swap_remove(k))
}

/// `(q^s - 1)(q^s - q)...(q^s - q^{s-1})`, the number of invertible s x s
/// matrices over F_q.
pub fn general_linear_order(s: usize) -> IntPoly {
    (0..s)
        .map(|j| IntPoly::monomial(s) - IntPoly::monomial(j))
        .product()
}

/// The structure constant `[d, s]_q [e, s]_q |GL_s(q)|` appearing in the
/// product rule for the q-falling basis. Requires `s <= e <= d`.
pub fn structure_constant(d: usize, e: usize, s: usize) -> Result<IntPoly, PolyError> {
    if !(s <= e && e <= d) {
        return Err(PolyError::BadArgs(format!(
            "structure constant needs s <= e <= d, got d = {d}, e = {e}, s = {s}"
        )));
    }
    Ok(&(&gaussian_binomial(d, s)? * &gaussian_binomial(e, s)?) * &general_linear_order(s))
}
