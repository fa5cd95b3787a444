//! Two-variable Laurent polynomials over arbitrary-precision integers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

/// Sparse polynomial in `v^{±1}, z^{±1}`, keyed by `(v_exp, z_exp)`.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<(i32, i32), BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(coeff: i64, v_exp: i32, z_exp: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(v_exp, z_exp, BigInt::from(coeff));
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, i32, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (v, z, c) in terms {
            p.add_term(v, z, BigInt::from(c));
        }
        p
    }

    fn add_term(&mut self, v: i32, z: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((v, z)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(v, z));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, v: i32, z: i32) -> BigInt {
        self.terms.get(&(v, z)).cloned().unwrap_or_default()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i32, &BigInt)> {
        self.terms.iter().map(|(&(v, z), c)| (v, z, c))
    }

    pub fn shift(&self, dv: i32, dz: i32) -> Self {
        Self { terms: self.terms.iter().map(|(&(v, z), c)| ((v + dv, z + dz), c.clone())).collect() }
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut p = Self::zero();
        let k = BigInt::from(k);
        for (&(v, z), c) in &self.terms {
            p.add_term(v, z, c * &k);
        }
        p
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn v_range(&self) -> Option<(i32, i32)> {
        let min = self.terms.keys().map(|k| k.0).min()?;
        let max = self.terms.keys().map(|k| k.0).max()?;
        Some((min, max))
    }

    pub fn z_range(&self) -> Option<(i32, i32)> {
        let min = self.terms.keys().map(|k| k.1).min()?;
        let max = self.terms.keys().map(|k| k.1).max()?;
        Some((min, max))
    }

    /// Sorted `[v_exp, z_exp, coeff]` triples. Coefficients beyond `i64`
    /// are written as decimal strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(v, z, c)| {
                    let c = match c.to_i64() {
                        Some(x) => Value::from(x),
                        None => Value::from(c.to_string()),
                    };
                    Value::Array(vec![Value::from(v), Value::from(z), c])
                })
                .collect(),
        )
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = || Error::parse(format!("bad polynomial JSON {value}"));
        let mut p = Self::zero();
        for t in value.as_array().ok_or_else(bad)? {
            let t = t.as_array().filter(|t| t.len() == 3).ok_or_else(bad)?;
            let exp = |x: &Value| x.as_i64().and_then(|e| i32::try_from(e).ok()).ok_or_else(bad);
            let c: BigInt = match &t[2] {
                Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(bad)?,
                Value::String(s) => s.parse().map_err(|_| bad())?,
                _ => return Err(bad()),
            };
            p.add_term(exp(&t[0])?, exp(&t[1])?, c);
        }
        Ok(p)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut p = self.clone();
        for (&(v, z), c) in &rhs.terms {
            p.add_term(v, z, c.clone());
        }
        p
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut p = self.clone();
        for (&(v, z), c) in &rhs.terms {
            p.add_term(v, z, -c);
        }
        p
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (&(v1, z1), c1) in &self.terms {
            for (&(v2, z2), c2) in &rhs.terms {
                p.add_term(v1 + v2, z1 + z2, c1 * c2);
            }
        }
        p
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect() }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (v, z, c)) in self.terms().enumerate() {
            let neg = c.sign() == num_bigint::Sign::Minus;
            let mag = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = mag.is_one();
            if !unit || (v == 0 && z == 0) {
                write!(f, "{mag}")?;
            }
            let mut sep = !unit;
            for (name, e) in [("v", v), ("z", z)] {
                if e == 0 {
                    continue;
                }
                if sep {
                    write!(f, "*")?;
                }
                if e == 1 {
                    write!(f, "{name}")?;
                } else {
                    write!(f, "{name}^{e}")?;
                }
                sep = true;
            }
        }
        Ok(())
    }
}
