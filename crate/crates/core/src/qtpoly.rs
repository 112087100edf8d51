//! Exact sparse polynomials in two variables `q`, `t` with arbitrary-precision
//! integer coefficients, plus the q-analogues used by every recursion.
//!
//! A [`QtPoly`] is kept in canonical form at all times: no stored coefficient
//! is zero, so structural equality is polynomial equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use parking_lot::Mutex;
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

/// Exponent pair `(q_exponent, t_exponent)`.
pub type Exponents = (u32, u32);

/// Sparse bivariate polynomial with big-integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QtPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl QtPoly {
    /// The zero polynomial (empty term map).
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(0, 1, 1)
    }

    /// `coeff · q^q_exp · t^t_exp`; zero coefficients give the zero polynomial.
    pub fn monomial(q_exp: u32, t_exp: u32, coeff: impl Into<BigInt>) -> Self {
        let mut out = Self::zero();
        out.add_term(q_exp, t_exp, coeff.into());
        out
    }

    /// Builds a polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (qe, te, c) in terms {
            out.add_term(qe, te, c.into());
        }
        out
    }

    /// Adds `coeff · q^q_exp t^t_exp` in place, keeping canonical form.
    pub fn add_term(&mut self, q_exp: u32, t_exp: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let key = (q_exp, t_exp);
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing += coeff;
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    /// Increments the coefficient of `q^q_exp t^t_exp` by one.
    pub fn add_monomial(&mut self, q_exp: u32, t_exp: u32) {
        self.add_term(q_exp, t_exp, BigInt::one());
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `q^q_exp t^t_exp` (zero when absent).
    pub fn coeff(&self, q_exp: u32, t_exp: u32) -> BigInt {
        self.terms
            .get(&(q_exp, t_exp))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Terms in lexicographic `(q_exp, t_exp)` order.
    pub fn terms(&self) -> impl Iterator<Item = (Exponents, &BigInt)> + '_ {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    /// Value at `q = t = 1`, i.e. the sum of all coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// True when no coefficient is negative.
    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Multiplies by the monomial `q^q_shift t^t_shift`.
    pub fn shifted(&self, q_shift: u32, t_shift: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(qe, te), c)| ((qe + q_shift, te + t_shift), c.clone()))
                .collect(),
        }
    }

    /// Exchanges the roles of `q` and `t`.
    pub fn swap_variables(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(qe, te), c)| ((te, qe), c.clone()))
                .collect(),
        }
    }

    /// Human-readable form, monomials sorted by decreasing exponents,
    /// e.g. `q^2*t + 3*q`.
    pub fn to_pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&(qe, te), c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let magnitude = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !magnitude.is_one() || (qe == 0 && te == 0) {
                factors.push(magnitude.to_string());
            }
            for (name, exp) in [("q", qe), ("t", te)] {
                match exp {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Canonical JSON text: `[[q_exp, t_exp, "coeff"], ...]`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization is infallible")
    }

    /// Parses the canonical JSON form.
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

impl fmt::Display for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pretty())
    }
}

impl Serialize for QtPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (&(qe, te), c) in &self.terms {
            seq.serialize_element(&(qe, te, c.to_string()))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for QtPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: Vec<(u32, u32, String)> = Vec::deserialize(deserializer)?;
        let mut out = QtPoly::zero();
        let mut previous: Option<Exponents> = None;
        for (qe, te, text) in raw {
            let coeff: BigInt = text
                .parse()
                .map_err(|_| de::Error::custom(format!("invalid coefficient {text:?}")))?;
            if coeff.is_zero() {
                return Err(de::Error::custom("zero coefficient in canonical form"));
            }
            if previous.is_some_and(|p| p >= (qe, te)) {
                return Err(de::Error::custom(
                    "terms must be strictly increasing in (q_exp, t_exp)",
                ));
            }
            previous = Some((qe, te));
            out.terms.insert((qe, te), coeff);
        }
        Ok(out)
    }
}

impl<'a> Add<&'a QtPoly> for &'a QtPoly {
    type Output = QtPoly;
    fn add(self, rhs: &'a QtPoly) -> QtPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QtPoly {
    type Output = QtPoly;
    fn add(mut self, rhs: QtPoly) -> QtPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&QtPoly> for QtPoly {
    fn add_assign(&mut self, rhs: &QtPoly) {
        for (&(qe, te), c) in &rhs.terms {
            self.add_term(qe, te, c.clone());
        }
    }
}

impl AddAssign for QtPoly {
    fn add_assign(&mut self, rhs: QtPoly) {
        for ((qe, te), c) in rhs.terms {
            self.add_term(qe, te, c);
        }
    }
}

impl Neg for QtPoly {
    type Output = QtPoly;
    fn neg(self) -> QtPoly {
        QtPoly {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl<'a> Sub<&'a QtPoly> for &'a QtPoly {
    type Output = QtPoly;
    fn sub(self, rhs: &'a QtPoly) -> QtPoly {
        let mut out = self.clone();
        for (&(qe, te), c) in &rhs.terms {
            out.add_term(qe, te, -c.clone());
        }
        out
    }
}

impl Sub for QtPoly {
    type Output = QtPoly;
    fn sub(self, rhs: QtPoly) -> QtPoly {
        &self - &rhs
    }
}

impl<'a> Mul<&'a QtPoly> for &'a QtPoly {
    type Output = QtPoly;
    fn mul(self, rhs: &'a QtPoly) -> QtPoly {
        let mut out = QtPoly::zero();
        for (&(aq, at), ac) in &self.terms {
            for (&(bq, bt), bc) in &rhs.terms {
                out.add_term(aq + bq, at + bt, ac * bc);
            }
        }
        out
    }
}

impl Mul for QtPoly {
    type Output = QtPoly;
    fn mul(self, rhs: QtPoly) -> QtPoly {
        &self * &rhs
    }
}

/// Coefficientwise sum.
pub fn poly_add(a: &QtPoly, b: &QtPoly) -> QtPoly {
    a + b
}

/// Convolution product.
pub fn poly_mul(a: &QtPoly, b: &QtPoly) -> QtPoly {
    a * b
}

/// `q^{s(s-1)/2}`.
pub fn q_power_binom2(s: u32) -> QtPoly {
    let exp = u64::from(s) * u64::from(s.saturating_sub(1)) / 2;
    QtPoly::monomial(
        u32::try_from(exp).expect("q exponent overflows u32"),
        0,
        1,
    )
}

/// Rows of the q-Pascal triangle computed so far; row `n` holds
/// `[n choose k]_q` for `k = 0..=n`. Rows are only ever appended, so a single
/// lock held while extending is enough for concurrent callers.
fn pascal_rows() -> &'static Mutex<Vec<Vec<QtPoly>>> {
    static ROWS: OnceLock<Mutex<Vec<Vec<QtPoly>>>> = OnceLock::new();
    ROWS.get_or_init(|| Mutex::new(vec![vec![QtPoly::one()]]))
}

/// Gaussian binomial `[n choose k]_q`, zero when `k < 0` or `n < k`
/// (in particular for every negative `n`).
pub fn qbinom(n: i64, k: i64) -> QtPoly {
    if k < 0 || n < k {
        return QtPoly::zero();
    }
    let (n, k) = (n as usize, k as usize);
    let mut rows = pascal_rows().lock();
    while rows.len() <= n {
        let prev = rows.last().expect("row 0 is always present");
        let size = prev.len();
        let mut next = Vec::with_capacity(size + 1);
        for j in 0..=size {
            // [size choose j] = [size-1 choose j-1] + q^j [size-1 choose j]
            let mut entry = if j == 0 {
                QtPoly::zero()
            } else {
                prev[j - 1].clone()
            };
            if j < size {
                entry += prev[j].shifted(j as u32, 0);
            }
            next.push(entry);
        }
        rows.push(next);
    }
    rows[n][k].clone()
}
