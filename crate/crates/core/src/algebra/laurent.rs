//! Sparse Laurent polynomials in one variable with `i128` coefficients.
//!
//! Exponents may be negative. The zero polynomial is the empty term map, and
//! every stored coefficient is nonzero — all constructors and operations
//! maintain that normalization, so `==` is semantic equality.
//!
//! Coefficient arithmetic is checked: an overflow panics instead of wrapping.
//! `i128` comfortably covers every state sum this crate performs (the worst
//! case is a 47-crossing bracket whose intermediate coefficients stay far
//! below 2^100), so an overflow always indicates a bug, not a data size
//! limitation.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i128>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i128) -> Self {
        Self::monomial(0, c)
    }

    /// `c * x^e` (the zero polynomial when `c == 0`).
    pub fn monomial(exp: i64, coeff: i128) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// Sum of `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms<I: IntoIterator<Item = (i64, i128)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i128 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Term list in ascending exponent order.
    pub fn terms(&self) -> Vec<(i64, i128)> {
        self.terms.iter().map(|(&e, &c)| (e, c)).collect()
    }

    /// `(lowest, highest)` exponent, or `None` for the zero polynomial.
    pub fn span(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().next()?;
        let hi = self.terms.keys().next_back()?;
        Some((*lo, *hi))
    }

    pub fn add_term(&mut self, exp: i64, coeff: i128) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry = entry
            .checked_add(coeff)
            .expect("laurent coefficient overflow");
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn scale(&self, c: i128) -> Self {
        if c == 0 {
            return Self::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(&e, &v)| (e, v.checked_mul(c).expect("laurent coefficient overflow")))
            .collect();
        Self { terms }
    }

    /// Multiply by the monomial `c * x^e` (shift-and-scale in one pass).
    pub fn mul_monomial(&self, exp: i64, coeff: i128) -> Self {
        if coeff == 0 {
            return Self::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(&e, &v)| {
                (
                    e.checked_add(exp).expect("laurent exponent overflow"),
                    v.checked_mul(coeff).expect("laurent coefficient overflow"),
                )
            })
            .collect();
        Self { terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Rewrite each term `c x^e` as `c x^{f(e)}`; colliding images add.
    ///
    /// `f(e) = -e` mirrors the polynomial, `f(e) = k*e` substitutes
    /// `x -> x^k`.
    pub fn map_exponents<F: Fn(i64) -> i64>(&self, f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, &c)| (f(e), c)))
    }

    /// Substitute `x -> x^-1`.
    pub fn invert_variable(&self) -> Self {
        self.map_exponents(|e| -e)
    }

    /// Value at `x = 1` (the coefficient sum).
    pub fn eval_at_one(&self) -> i128 {
        self.terms
            .values()
            .fold(0i128, |a, &c| a.checked_add(c).expect("overflow at x=1"))
    }

    /// Value at `x = -1`.
    pub fn eval_at_minus_one(&self) -> i128 {
        self.terms.iter().fold(0i128, |a, (&e, &c)| {
            let signed = if e.rem_euclid(2) == 0 { c } else { -c };
            a.checked_add(signed).expect("overflow at x=-1")
        })
    }

    pub fn exponents_all_even(&self) -> bool {
        self.terms.keys().all(|e| e.rem_euclid(2) == 0)
    }

    /// Render with an explicit variable name, lowest exponent first, e.g.
    /// `-t^-4 + t^-3 + t^-1`.
    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&e, &c)) in self.terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else if c < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_part = if mag == 1 && e != 0 {
                String::new()
            } else {
                mag.to_string()
            };
            let var_part = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            out.push_str(&coeff_part);
            out.push_str(&var_part);
        }
        out
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.add_term(e, c.checked_neg().expect("laurent coefficient overflow"));
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &rhs.terms {
                out.add_term(
                    e1.checked_add(e2).expect("laurent exponent overflow"),
                    c1.checked_mul(c2).expect("laurent coefficient overflow"),
                );
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("x"))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i128)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn normalization_drops_zeros() {
        let q = p(&[(3, 5), (3, -5), (0, 1)]);
        assert_eq!(q, LaurentPoly::one());
        assert!(p(&[]).is_zero());
        assert!(LaurentPoly::monomial(2, 0).is_zero());
    }

    #[test]
    fn product_of_binomials() {
        // (x - x^-1)(x + x^-1) = x^2 - x^-2
        let a = p(&[(1, 1), (-1, -1)]);
        let b = p(&[(1, 1), (-1, 1)]);
        assert_eq!(&a * &b, p(&[(2, 1), (-2, -1)]));
    }

    #[test]
    fn loop_value_squared() {
        // (-A^2 - A^-2)^2 = A^4 + 2 + A^-4
        let d = p(&[(2, -1), (-2, -1)]);
        assert_eq!(d.pow(2), p(&[(4, 1), (0, 2), (-4, 1)]));
        assert_eq!(d.eval_at_minus_one(), -2);
        assert_eq!(d.eval_at_one(), -2);
    }

    #[test]
    fn evaluation_points() {
        let q = p(&[(-3, 1), (0, -2), (2, 4)]);
        assert_eq!(q.eval_at_one(), 3);
        assert_eq!(q.eval_at_minus_one(), -1 - 2 + 4);
    }

    #[test]
    fn exponent_maps() {
        let q = p(&[(-1, 2), (3, 1)]);
        assert_eq!(q.map_exponents(|e| -e), p(&[(1, 2), (-3, 1)]));
        assert_eq!(q.map_exponents(|e| 2 * e), p(&[(-2, 2), (6, 1)]));
        // collapsing map adds coefficients
        assert_eq!(q.map_exponents(|_| 0), p(&[(0, 3)]));
    }

    #[test]
    fn display_style() {
        let q = p(&[(-4, -1), (-3, 1), (-1, 1)]);
        assert_eq!(q.to_string_var("t"), "-t^-4 + t^-3 + t^-1");
        assert_eq!(p(&[(0, -3), (1, 2), (2, 2)]).to_string_var("z"), "-3 + 2z + 2z^2");
        assert_eq!(LaurentPoly::zero().to_string_var("t"), "0");
    }
}
