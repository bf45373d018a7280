use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Sparse univariate polynomial in `x` with arbitrary-precision integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: BTreeMap<u32, BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    pub fn x() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(degree: u32, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(degree, c.into());
        p
    }

    /// `x + a`.
    pub fn linear(a: impl Into<BigInt>) -> Self {
        let mut p = Self::x();
        p.add_term(0, a.into());
        p
    }

    /// Dense coefficients, lowest degree first.
    pub fn from_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (d, c) in coeffs.into_iter().enumerate() {
            p.add_term(d as u32, c.into());
        }
        p
    }

    fn add_term(&mut self, degree: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(degree).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, degree: u32) -> BigInt {
        self.coeffs.get(&degree).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.values().next_back()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        // Horner over the sparse support
        let mut acc = BigInt::zero();
        let mut last = match self.degree() {
            Some(d) => d,
            None => return acc,
        };
        for (&d, c) in self.coeffs.iter().rev() {
            acc *= x.pow(last - d);
            acc += c;
            last = d;
        }
        acc * x.pow(last)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        for _ in 0..e {
            result = &result * self;
        }
        result
    }

    /// Euclidean division by a divisor whose leading coefficient divides every
    /// intermediate leading term; errors if that exactness fails.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::InvalidInput("division by the zero polynomial".into()))?;
        let lead = divisor.leading_coeff().unwrap().clone();
        let mut quotient = Self::zero();
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let (q, r) = rem.coeff(rd).div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::InvalidInput("division is not exact over the integers".into()));
            }
            let step = Self::monomial(rd - dd, q);
            rem = &rem - &(&step * divisor);
            quotient = &quotient + &step;
        }
        Ok((quotient, rem))
    }

    /// `x(x-m)(x-2m)...(x-(n-1)m)`; the empty product for `n = 0`.
    pub fn falling_factorial(n: u32, m: u32) -> Self {
        (0..n).fold(Self::one(), |acc, i| &acc * &Self::linear(-(i as i64) * m as i64))
    }
}

fn combine(a: &IntPolynomial, b: &IntPolynomial, sign: i32) -> IntPolynomial {
    let mut out = a.clone();
    for (&d, c) in &b.coeffs {
        out.add_term(d, if sign < 0 { -c } else { c.clone() });
    }
    out
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: Self) -> IntPolynomial {
        combine(self, rhs, 1)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: Self) -> IntPolynomial {
        combine(self, rhs, -1)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: Self) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (&da, ca) in &self.coeffs {
            for (&db, cb) in &rhs.coeffs {
                out.add_term(da + db, ca * cb);
            }
        }
        out
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial { coeffs: self.coeffs.iter().map(|(&d, c)| (d, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: Self) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for IntPolynomial {
    /// Highest degree first, e.g. `x^3 - 3*x^2 + 2*x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&d, c)) in self.coeffs.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            match (d, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match d {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{d}")?,
            }
        }
        Ok(())
    }
}

/// Coefficients `c_k` with `P = sum_k c_k * x↓_{n-k,m}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FallingFactorialExpansion {
    pub m: u32,
    pub coefficients: Vec<BigInt>,
}

impl FallingFactorialExpansion {
    /// Basis depth `n`; there are `n + 1` coefficients.
    pub fn depth(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn to_polynomial(&self) -> IntPolynomial {
        let n = self.depth() as u32;
        self.coefficients.iter().enumerate().fold(IntPolynomial::zero(), |acc, (k, c)| {
            &acc + &(&IntPolynomial::constant(c.clone()) * &IntPolynomial::falling_factorial(n - k as u32, self.m))
        })
    }
}

/// Expands `p` in the basis `x↓_{n,m}, x↓_{n-1,m}, ..., x↓_{0,m}` by peeling off the top degree.
pub fn to_falling_basis(p: &IntPolynomial, m: u32, n: usize) -> Result<FallingFactorialExpansion> {
    if let Some(d) = p.degree() {
        if d as usize > n {
            return Err(Error::BasisTooShallow { degree: d, depth: n });
        }
    }
    let mut rest = p.clone();
    let mut coefficients = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let degree = (n - k) as u32;
        // basis elements are monic, so the top coefficient peels off exactly
        let c = rest.coeff(degree);
        if !c.is_zero() {
            rest = &rest - &(&IntPolynomial::constant(c.clone()) * &IntPolynomial::falling_factorial(degree, m));
        }
        coefficients.push(c);
    }
    debug_assert!(rest.is_zero());
    Ok(FallingFactorialExpansion { m, coefficients })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(IntPolynomial::falling_factorial(0, 5), IntPolynomial::one());
        assert_eq!(IntPolynomial::falling_factorial(2, 3), IntPolynomial::from_coeffs([0, -3, 1]));
        // x(x-1)(x-2) expanded by hand
        assert_eq!(IntPolynomial::falling_factorial(3, 1), IntPolynomial::from_coeffs([0, 2, -3, 1]));
        assert_eq!(IntPolynomial::falling_factorial(3, 1).to_string(), "x^3 - 3*x^2 + 2*x");
    }

    #[test]
    fn falling_basis_examples() {
        let e = to_falling_basis(&IntPolynomial::falling_factorial(3, 2), 2, 3).unwrap();
        assert_eq!(e.coefficients, ints(&[1, 0, 0, 0]));
        let e = to_falling_basis(&IntPolynomial::monomial(2, 1), 1, 2).unwrap();
        assert_eq!(e.coefficients, ints(&[1, 1, 0]));
        // both sides agree at x = 0, 1, 2
        for x in 0..3 {
            let x = BigInt::from(x);
            assert_eq!(e.to_polynomial().eval(&x), &x * &x);
        }
        assert!(matches!(
            to_falling_basis(&IntPolynomial::monomial(4, 1), 1, 3),
            Err(Error::BasisTooShallow { degree: 4, depth: 3 })
        ));
    }

    #[test]
    fn arithmetic_and_eval() {
        let a = IntPolynomial::from_coeffs([1, -2, 0, 3]);
        let b = IntPolynomial::from_coeffs([0, 5, 1]);
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!((&a * &b).degree(), Some(5));
        assert_eq!(a.eval(&BigInt::from(2)), BigInt::from(1 - 4 + 24));
        assert_eq!(IntPolynomial::zero().degree(), None);
        assert_eq!((&a - &a), IntPolynomial::zero());
        let (q, r) = (&a * &b).div_rem(&b).unwrap();
        assert_eq!(q, a);
        assert!(r.is_zero());
    }
}
