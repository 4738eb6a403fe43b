//! Laurent polynomials over arbitrary-precision integers.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::json;

/// A Laurent polynomial in one variable `t` with `BigInt` coefficients.
///
/// `coeffs[j]` is the coefficient of `t^(min_deg + j)`. The first and last
/// coefficients are nonzero unless the polynomial is zero (empty `coeffs`,
/// `min_deg == 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    min_deg: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { min_deg: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        LaurentPoly::from_coeffs(0, vec![BigInt::from(c)])
    }

    /// The monomial `c * t^deg`.
    pub fn monomial(c: i64, deg: i64) -> Self {
        LaurentPoly::from_coeffs(deg, vec![BigInt::from(c)])
    }

    pub fn variable() -> Self {
        LaurentPoly::monomial(1, 1)
    }

    /// `1 + t + ... + t^(n-1)`.
    pub fn geometric(n: usize) -> Self {
        LaurentPoly::from_coeffs(0, vec![BigInt::one(); n])
    }

    /// Builds a polynomial from a coefficient run starting at degree `min_deg`,
    /// trimming zeros at both ends.
    pub fn from_coeffs(min_deg: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { min_deg, coeffs };
        p.normalize();
        p
    }

    pub fn from_i64_coeffs(min_deg: i64, coeffs: &[i64]) -> Self {
        LaurentPoly::from_coeffs(min_deg, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        let leading_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if leading_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.min_deg = 0;
            return;
        }
        self.coeffs.drain(..leading_zeros);
        self.min_deg += leading_zeros as i64;
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `true` exactly for `±t^k`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].magnitude().is_one()
    }

    pub fn min_degree(&self) -> i64 {
        self.min_deg
    }

    pub fn max_degree(&self) -> i64 {
        debug_assert!(!self.is_zero());
        self.min_deg + self.coeffs.len() as i64 - 1
    }

    /// Difference between highest and lowest degree with nonzero coefficient.
    pub fn degree_span(&self) -> i64 {
        if self.is_zero() {
            0
        } else {
            self.coeffs.len() as i64 - 1
        }
    }

    pub fn coeff(&self, deg: i64) -> BigInt {
        let idx = deg - self.min_deg;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { min_deg: self.min_deg, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// Multiplies by `t^k`.
    pub fn shifted(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly { min_deg: self.min_deg + k, coeffs: self.coeffs.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.min_deg.min(other.min_deg);
        let hi = self.max_degree().max(other.max_degree());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.min_deg - lo) as usize + j] += c;
        }
        for (j, c) in other.coeffs.iter().enumerate() {
            coeffs[(other.min_deg - lo) as usize + j] += c;
        }
        LaurentPoly::from_coeffs(lo, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_coeffs(self.min_deg + other.min_deg, coeffs)
    }

    /// Exact division; `None` when `other` does not divide `self` in
    /// `Z[t, t^-1]`.
    pub fn divide_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        if self.coeffs.len() < other.coeffs.len() {
            return None;
        }
        // Both coefficient runs start and end with nonzero entries, so plain
        // polynomial long division from the top decides divisibility.
        let mut rem = self.coeffs.clone();
        let div = &other.coeffs;
        let qlen = rem.len() - div.len() + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        let dlead = div.last().unwrap();
        for qi in (0..qlen).rev() {
            let r = rem[qi + div.len() - 1].clone();
            if r.is_zero() {
                continue;
            }
            let (q, rr) = num_integer::Integer::div_rem(&r, dlead);
            if !rr.is_zero() {
                return None;
            }
            for (j, d) in div.iter().enumerate() {
                let sub = d * &q;
                rem[qi + j] -= sub;
            }
            quot[qi] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(LaurentPoly::from_coeffs(self.min_deg - other.min_deg, quot))
    }

    /// `true` iff `self == ±t^k * other` for some integer `k`.
    pub fn equal_up_to_unit(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        if self.coeffs.len() != other.coeffs.len() {
            return false;
        }
        self.coeffs == other.coeffs || self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| *a == -b)
    }

    /// Shifts to `min_degree == 0` and makes the leading coefficient positive.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut p = self.shifted(-self.min_deg);
        if p.leading_coeff().is_negative() {
            p = p.neg();
        }
        p
    }

    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|c| {
                let n: serde_json::Number =
                    c.to_string().parse().expect("integer literal is a valid JSON number");
                serde_json::Value::Number(n)
            })
            .collect();
        json!({ "min_degree": self.min_deg, "coeffs": coeffs })
    }
}

impl serde::Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical display, low degree to high, e.g. `1 - t + t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let deg = self.min_deg + j as i64;
            let mag = c.magnitude();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match deg {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}", mag)?;
                    }
                    if deg == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{}", deg)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Exact determinant of a square matrix of Laurent polynomials by
/// fraction-free (Bareiss) elimination.
pub fn poly_det(mat: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = mat.len();
    for row in mat {
        assert_eq!(row.len(), n, "poly_det requires a square matrix");
    }
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut a: Vec<Vec<LaurentPoly>> = mat.to_vec();
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return LaurentPoly::zero();
            };
            a.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num
                    .divide_exact(&prev)
                    .expect("Bareiss elimination divides exactly in an integral domain");
            }
            a[i][k] = LaurentPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}
