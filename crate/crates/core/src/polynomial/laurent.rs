use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An ordered, named set of variables. Laurent polynomials only combine with
/// others over the same set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarSet(Arc<[String]>);

impl VarSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Self(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    pub fn pq() -> Self {
        Self::new(&["p", "q"])
    }

    /// `p, q` together with formal `P = p^x` and `Q = q^x`.
    pub fn pq_formal() -> Self {
        Self::new(&["p", "q", "P", "Q"])
    }

    pub fn qt() -> Self {
        Self::new(&["q", "t"])
    }

    pub fn q() -> Self {
        Self::new(&["q"])
    }

    pub fn pqx() -> Self {
        Self::new(&["p", "q", "x"])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.join(","))
    }
}

pub type Exponents = Vec<i32>;

/// Sparse multivariate Laurent polynomial with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    vars: VarSet,
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPoly {
    pub fn zero(vars: &VarSet) -> Self {
        Self { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, 1)
    }

    pub fn constant(vars: &VarSet, c: impl Into<BigInt>) -> Self {
        Self::monomial(vars, vec![0; vars.len()], c)
    }

    pub fn monomial(vars: &VarSet, exponents: Exponents, c: impl Into<BigInt>) -> Self {
        assert_eq!(exponents.len(), vars.len(), "exponent vector does not match variable set");
        let mut p = Self::zero(vars);
        p.add_term(exponents, c.into());
        p
    }

    /// The single variable `name` raised to `power`.
    pub fn var_power(vars: &VarSet, name: &str, power: i32) -> Self {
        let idx = vars
            .index_of(name)
            .unwrap_or_else(|| panic!("variable {name} not in [{vars}]"));
        let mut e = vec![0; vars.len()];
        e[idx] = power;
        Self::monomial(vars, e, 1)
    }

    pub fn var(vars: &VarSet, name: &str) -> Self {
        Self::var_power(vars, name, 1)
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    fn add_term(&mut self, exponents: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exponents) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&exponents);
                }
            }
            None => {
                self.terms.insert(exponents, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order: exponent vectors ascending lexicographically.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponents: &[i32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch { left: self.vars.to_string(), right: other.vars.to_string() });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(&self.vars), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    /// Multiplies by the monomial with the given exponents.
    pub fn shift(&self, exponents: &[i32]) -> Self {
        assert_eq!(exponents.len(), self.vars.len());
        Self {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(exponents).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Value with every variable set to 1.
    pub fn eval_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Replaces each variable of `self` by a monomial over `target`:
    /// `images[i]` is the exponent vector (over `target`) substituted for variable `i`.
    pub fn substitute_monomials(&self, target: &VarSet, images: &[Exponents]) -> Self {
        assert_eq!(images.len(), self.vars.len(), "one image per variable");
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut img = vec![0i32; target.len()];
            for (power, image) in e.iter().zip(images) {
                for (slot, x) in img.iter_mut().zip(image) {
                    *slot += power * x;
                }
            }
            out.add_term(img, c.clone());
        }
        out
    }

    /// Sets the named variable to 1, dropping it from the variable set.
    pub fn specialize_to_one(&self, name: &str) -> Result<Self> {
        let idx = self
            .vars
            .index_of(name)
            .ok_or_else(|| Error::InvalidParameter(format!("variable {name} not in [{}]", self.vars)))?;
        let rest: Vec<&String> = self.vars.names().iter().filter(|v| *v != name).collect();
        let target = VarSet::new(&rest);
        let images = (0..self.vars.len())
            .map(|i| {
                let mut img = vec![0; target.len()];
                if i != idx {
                    img[if i < idx { i } else { i - 1 }] = 1;
                }
                img
            })
            .collect::<Vec<_>>();
        Ok(self.substitute_monomials(&target, &images))
    }

    /// Splits by powers of the named variable; each coefficient lives over the remaining variables.
    pub fn coefficients_in(&self, name: &str) -> Result<BTreeMap<i32, LaurentPoly>> {
        let idx = self
            .vars
            .index_of(name)
            .ok_or_else(|| Error::InvalidParameter(format!("variable {name} not in [{}]", self.vars)))?;
        let rest: Vec<&String> = self.vars.names().iter().filter(|v| *v != name).collect();
        let target = VarSet::new(&rest);
        let mut out: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut reduced = e.clone();
            let power = reduced.remove(idx);
            out.entry(power).or_insert_with(|| LaurentPoly::zero(&target)).add_term(reduced, c.clone());
        }
        Ok(out)
    }

    /// Re-expresses the polynomial over a superset of its variables.
    pub fn embed(&self, target: &VarSet) -> Result<Self> {
        let positions = self
            .vars
            .names()
            .iter()
            .map(|v| {
                target
                    .index_of(v)
                    .ok_or_else(|| Error::VariableMismatch { left: self.vars.to_string(), right: target.to_string() })
            })
            .collect::<Result<Vec<_>>>()?;
        let images = positions
            .iter()
            .map(|&p| {
                let mut img = vec![0; target.len()];
                img[p] = 1;
                img
            })
            .collect::<Vec<_>>();
        Ok(self.substitute_monomials(target, &images))
    }

    /// First term (canonical order) with a negative coefficient.
    pub fn first_negative_term(&self) -> Option<(&Exponents, &BigInt)> {
        self.terms.iter().find(|(_, c)| c.is_negative())
    }

    pub fn has_negative_coefficient(&self) -> bool {
        self.first_negative_term().is_some()
    }

    /// Renders one monomial (without coefficient), e.g. `p^-2*q`; `1` for the constant monomial.
    pub fn format_monomial(vars: &VarSet, exponents: &[i32]) -> String {
        let parts: Vec<String> = vars
            .names()
            .iter()
            .zip(exponents)
            .filter(|(_, &e)| e != 0)
            .map(|(v, &e)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

macro_rules! laurent_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for &LaurentPoly {
            type Output = LaurentPoly;
            /// Panics if the variable sets differ; use the `checked_*` form to get an error instead.
            fn $method(self, rhs: Self) -> LaurentPoly {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: Self) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
laurent_op!(Add, add, checked_add);
laurent_op!(Sub, sub, checked_sub);
laurent_op!(Mul, mul, checked_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&BigInt::from(-1))
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical text form: terms in ascending lexicographic exponent order,
    /// joined with explicit ` + ` / ` - ` signs.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            let mag = c.abs();
            let mono = Self::format_monomial(&self.vars, e);
            match (mono.as_str(), mag.is_one()) {
                ("1", _) => write!(f, "{mag}")?,
                (_, true) => f.write_str(&mono)?,
                _ => write!(f, "{mag}*{mono}")?,
            }
        }
        Ok(())
    }
}

struct TermList<'a>(&'a LaurentPoly);

impl Serialize for TermList<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for (e, c) in self.0.terms() {
            let exps: BTreeMap<&str, i32> =
                self.0.vars.names().iter().map(|s| s.as_str()).zip(e.iter().copied()).collect();
            seq.serialize_element(&serde_json::json!({ "coeff": c.to_string(), "exponents": exps }))?;
        }
        seq.end()
    }
}

impl Serialize for LaurentPoly {
    /// `{ "text": ..., "variables": [...], "terms": [{ "coeff": "3", "exponents": {...} }] }`
    /// with coefficients as decimal strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("LaurentPoly", 3)?;
        st.serialize_field("terms", &TermList(self))?;
        st.serialize_field("text", &self.to_string())?;
        st.serialize_field("variables", self.vars.names())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_exponents_and_rendering() {
        let v = VarSet::pq();
        let a = LaurentPoly::monomial(&v, vec![-26, 7], 1);
        assert_eq!(a.to_string(), "p^-26*q^7");
        let b = &LaurentPoly::var(&v, "p") - &LaurentPoly::constant(&v, 3);
        assert_eq!(b.to_string(), "-3 + p");
        let prod = &a * &LaurentPoly::var_power(&v, "p", 26);
        assert_eq!(prod, LaurentPoly::var_power(&v, "q", 7));
    }

    #[test]
    fn mixing_variable_sets_is_an_error() {
        let a = LaurentPoly::one(&VarSet::pq());
        let b = LaurentPoly::one(&VarSet::qt());
        assert!(matches!(a.checked_add(&b), Err(Error::VariableMismatch { .. })));
        assert!(matches!(a.checked_mul(&b), Err(Error::VariableMismatch { .. })));
    }

    #[test]
    fn coefficient_extraction_and_specialization() {
        let v = VarSet::pqx();
        let poly = &(&LaurentPoly::var(&v, "x") * &LaurentPoly::var(&v, "p"))
            + &LaurentPoly::var_power(&v, "q", 2);
        let split = poly.coefficients_in("x").unwrap();
        assert_eq!(split[&1].to_string(), "p");
        assert_eq!(split[&0].to_string(), "q^2");
        let at1 = poly.specialize_to_one("p").unwrap();
        assert_eq!(at1.vars().names(), &["q".to_string(), "x".to_string()]);
        assert_eq!(at1.to_string(), "x + q^2");
        assert_eq!(poly.eval_at_ones(), BigInt::from(2));
    }

    #[test]
    fn json_terms_are_sorted_and_exact() {
        let v = VarSet::qt();
        let poly = &LaurentPoly::monomial(&v, vec![2, 1], 5) - &LaurentPoly::one(&v);
        let json = serde_json::to_string(&poly).unwrap();
        assert_eq!(
            json,
            r#"{"terms":[{"coeff":"-1","exponents":{"q":0,"t":0}},{"coeff":"5","exponents":{"q":2,"t":1}}],"text":"-1 + 5*q^2*t","variables":["q","t"]}"#
        );
    }
}
