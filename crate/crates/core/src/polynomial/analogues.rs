//! p,q-integers, factorials, q-binomials and plain integer counting helpers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::laurent::{LaurentPoly, VarSet};
use crate::error::{Error, Result};

/// `[n]_{p,q} = p^{n-1} + p^{n-2}q + ... + q^{n-1}`; zero for `n = 0`.
pub fn pq_integer(n: u32) -> LaurentPoly {
    pq_bracket(n as i64)
}

/// `[a]_{p,q} = (p^a - q^a)/(p - q)` for any integer `a`.
///
/// For negative `a` this is the Laurent polynomial `-[|a|]_{p,q} / (pq)^{|a|}`.
pub fn pq_bracket(a: i64) -> LaurentPoly {
    let vars = VarSet::pq();
    let mut out = LaurentPoly::zero(&vars);
    if a >= 0 {
        for i in 0..a as i32 {
            out = &out + &LaurentPoly::monomial(&vars, vec![a as i32 - 1 - i, i], 1);
        }
    } else {
        let n = (-a) as i32;
        for i in 0..n {
            out = &out + &LaurentPoly::monomial(&vars, vec![n - 1 - i - n, i - n], -1);
        }
    }
    out
}

/// `[1][2]...[n]` over `{p, q}`.
pub fn pq_factorial(n: u32) -> LaurentPoly {
    (1..=n).fold(LaurentPoly::one(&VarSet::pq()), |acc, i| &acc * &pq_integer(i))
}

/// `[x][x-m][x-2m]...[x-(n-1)m]` for a concrete integer `x`.
pub fn pq_falling(x: i64, n: u32, m: u32) -> LaurentPoly {
    (0..n as i64).fold(LaurentPoly::one(&VarSet::pq()), |acc, i| &acc * &pq_bracket(x - i * m as i64))
}

/// `[n]_q = 1 + q + ... + q^{n-1}` over `{q}`.
pub fn q_integer(n: u32) -> LaurentPoly {
    let vars = VarSet::q();
    (0..n as i32).fold(LaurentPoly::zero(&vars), |acc, i| &acc + &LaurentPoly::var_power(&vars, "q", i))
}

/// Gaussian binomial `[n choose k]_q` over `{q}`, tabulated with
/// `[n,k] = [n-1,k-1] + q^k [n-1,k]`. Zero when `k > n`.
pub fn q_binomial(n: u32, k: u32) -> LaurentPoly {
    let vars = VarSet::q();
    if k > n {
        return LaurentPoly::zero(&vars);
    }
    // row[j] holds [r choose j] for the current r, j <= k
    let mut row: Vec<LaurentPoly> = vec![LaurentPoly::zero(&vars); k as usize + 1];
    row[0] = LaurentPoly::one(&vars);
    for r in 1..=n {
        for j in (1..=k.min(r) as usize).rev() {
            let shifted = row[j].shift(&[j as i32]);
            row[j] = &row[j - 1] + &shifted;
        }
    }
    row.swap_remove(k as usize)
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `C(n, k)`; zero when `k > n`. `C(n, 0) = 1` for every `n`, including negative `n`.
pub fn binomial(n: i64, k: u64) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    if n < 0 || k as i64 > n {
        return BigInt::zero();
    }
    let k = k.min((n as u64) - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n as u64 - i) / (i + 1);
    }
    acc
}

/// `top! / (parts_1! parts_2! ...)`, requiring the parts to sum to `top`.
pub fn multinomial(top: u64, parts: &[u64]) -> Result<BigInt> {
    let sum: u64 = parts.iter().sum();
    if sum != top {
        return Err(Error::InvalidParameter(format!("multinomial parts sum to {sum}, expected {top}")));
    }
    let denom = parts.iter().fold(BigInt::one(), |acc, &p| acc * factorial(p));
    Ok(factorial(top) / denom)
}

/// `y↓_{n,m} = y(y-m)...(y-(n-1)m)` for an integer `y`.
pub fn int_falling(y: i64, n: u32, m: u32) -> BigInt {
    (0..n as i64).fold(BigInt::one(), |acc, i| acc * BigInt::from(y - i * m as i64))
}
