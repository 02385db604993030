//! Sparse Laurent polynomials in the bracket variable `A` with exact integer coefficients.
//!
//! `A = t^(-1/4)`, so an `A`-exponent `k` is the `t`-exponent `-k/4`. Degree queries
//! report `4·d` integers directly, which keeps every reported degree integral.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LaurentError {
    #[error("degree of the zero polynomial is undefined")]
    ZeroDegree,
}

/// Exact Laurent polynomial `Σ c_k A^k`.
///
/// Terms are kept sorted by exponent with no zero coefficients, so structural
/// equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(i64, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        if coeff.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(exp, coeff)] }
        }
    }

    /// The loop value `δ = -A^2 - A^-2`.
    pub fn delta() -> Self {
        Self::from_terms([(-2, -1), (2, -1)])
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut raw: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        raw.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(i64, BigInt)> = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { terms: out }
    }

    pub fn terms(&self) -> &[(i64, BigInt)] {
        &self.terms
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

    pub fn coefficient(&self, exp: i64) -> BigInt {
        match self.terms.binary_search_by_key(&exp, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// `(4·d₋, 4·d₊)` in `t`: the negated maximal and minimal `A`-exponents.
    pub fn t_degrees(&self) -> Result<(i64, i64), LaurentError> {
        match (self.min_exponent(), self.max_exponent()) {
            (Some(lo), Some(hi)) => Ok((-hi, -lo)),
            _ => Err(LaurentError::ZeroDegree),
        }
    }

    /// Multiplies by `A^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn scale_i64(&self, k: i64) -> Self {
        self.scale(&BigInt::from(k))
    }

    /// Substitutes `A ↦ A^-1` (equivalently `t ↦ t^-1`).
    pub fn invert_variable(&self) -> Self {
        let mut terms: Vec<_> = self.terms.iter().map(|(e, c)| (-e, c.clone())).collect();
        terms.reverse();
        Self { terms }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Renders as a polynomial in `t` with reduced quarter exponents, highest power first.
    pub fn to_t_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        // A^k = t^(-k/4): the lowest A-exponent is the highest t-power.
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let (num, den) = reduce(-e, 4);
            let power = match (num, den) {
                (0, _) => String::new(),
                (1, 1) => "t".to_string(),
                (n, 1) => format!("t^{n}"),
                (n, d) => format!("t^({n}/{d})"),
            };
            write_term(&mut out, i == 0, c, &power);
        }
        out
    }

    fn merge_with(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some((ea, _)), Some((eb, _))) => ea.cmp(eb),
                (Some(_), None) => Ordering::Less,
                (None, _) => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let (e, c) = &b[j];
                    out.push((*e, if negate_other { -c } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Self { terms: out }
    }
}

fn reduce(num: i64, den: i64) -> (i64, i64) {
    let g = num.gcd(&den);
    if g == 0 {
        (0, 1)
    } else {
        (num / g, den / g)
    }
}

fn write_term(out: &mut String, first: bool, c: &BigInt, power: &str) {
    let negative = c.is_negative();
    let mag = c.abs();
    if first {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    if power.is_empty() {
        out.push_str(&mag.to_string());
    } else if mag.is_one() {
        out.push_str(power);
    } else {
        out.push_str(&format!("{mag}*{power}"));
    }
}

impl fmt::Display for LaurentPoly {
    /// Renders in the bracket variable `A`, lowest exponent first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let power = match e {
                0 => String::new(),
                1 => "A".to_string(),
                e => format!("A^{e}"),
            };
            write_term(&mut out, i == 0, c, &power);
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge_with(rhs, false)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.merge_with(rhs, false);
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge_with(rhs, true)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (lo, hi) = match (
            self.min_exponent().zip(rhs.min_exponent()),
            self.max_exponent().zip(rhs.max_exponent()),
        ) {
            (Some((a, b)), Some((c, d))) => (a + b, c + d),
            _ => return LaurentPoly::zero(),
        };
        // Dense accumulation over the product's exponent window.
        let mut dense = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                dense[(ea + eb - lo) as usize] += ca * cb;
            }
        }
        LaurentPoly {
            terms: dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i64, c))
                .collect(),
        }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| &acc + &p)
    }
}

impl Serialize for LaurentPoly {
    /// Sorted `[exponent, "coefficient"]` pairs; coefficients are decimal strings
    /// because they routinely exceed 64 bits.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<(i64, String)> = self.terms.iter().map(|(e, c)| (*e, c.to_string())).collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pairs: Vec<(i64, String)> = Vec::deserialize(d)?;
        let mut terms = Vec::with_capacity(pairs.len());
        for (e, c) in pairs {
            let c: BigInt = c.parse().map_err(D::Error::custom)?;
            terms.push((e, c));
        }
        Ok(Self::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn exponent_law() {
        assert_eq!(&p(&[(2, 1)]) * &p(&[(-2, 1)]), LaurentPoly::one());
    }

    #[test]
    fn additive_inverse() {
        let q = p(&[(-3, 4), (0, -1), (5, 7)]);
        assert!((&q + &q.scale_i64(-1)).is_zero());
    }

    #[test]
    fn delta_squared() {
        let d = LaurentPoly::delta();
        assert_eq!(&d * &d, p(&[(4, 1), (0, 2), (-4, 1)]));
    }

    #[test]
    fn degrees() {
        // -delta is the unknot's n = 2 colored Jones value: t^(1/2) + t^(-1/2)
        assert_eq!((-LaurentPoly::delta()).t_degrees(), Ok((-2, 2)));
        assert_eq!(LaurentPoly::one().t_degrees(), Ok((0, 0)));
        assert_eq!(LaurentPoly::zero().t_degrees(), Err(LaurentError::ZeroDegree));
    }

    #[test]
    fn from_terms_drops_cancellation() {
        let q = p(&[(1, 3), (1, -3), (2, 1)]);
        assert_eq!(q.terms().len(), 1);
        assert_eq!(q.min_exponent(), Some(2));
    }

    #[test]
    fn big_coefficients_stay_exact() {
        let q = p(&[(0, i64::MAX), (1, i64::MAX)]);
        let sq = &q * &q;
        let m = BigInt::from(i64::MAX);
        assert_eq!(sq.coefficient(1), &m * &m * 2);
    }

    #[test]
    fn t_rendering() {
        assert_eq!((-LaurentPoly::delta()).to_t_string(), "t^(1/2) + t^(-1/2)");
        assert_eq!(p(&[(-4, 1), (0, 1), (4, 1)]).to_t_string(), "t + 1 + t^-1");
        assert_eq!(p(&[(-16, -1), (-12, 1), (-4, 1)]).to_t_string(), "-t^4 + t^3 + t");
        assert_eq!(LaurentPoly::delta().to_string(), "-A^-2 - A^2");
    }

    #[test]
    fn json_pairs() {
        let q = p(&[(2, -1), (-2, -1)]);
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, r#"[[-2,"-1"],[2,"-1"]]"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn inversion_and_pow() {
        let d = LaurentPoly::delta();
        assert_eq!(d.invert_variable(), d);
        assert_eq!(d.pow(3), &(&d * &d) * &d);
        assert_eq!(p(&[(3, 2), (-1, 5)]).invert_variable(), p(&[(-3, 2), (1, 5)]));
    }

    fn small_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-6i64..6, -5i64..6), 0..5).prop_map(|t| LaurentPoly::from_terms(t))
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn degrees_add_for_monomial_leading(a in small_poly(), b in small_poly(),
                                            lo in -4i64..4, hi in 5i64..9) {
            // Pad with monomials whose extreme terms dominate, so leading terms cannot cancel.
            let a = &a + &LaurentPoly::from_terms([(lo - 10, 1), (hi + 10, 1)]);
            let b = &b + &LaurentPoly::from_terms([(lo - 10, 1), (hi + 10, 1)]);
            let (a0, a1) = a.t_degrees().unwrap();
            let (b0, b1) = b.t_degrees().unwrap();
            prop_assert_eq!((&a * &b).t_degrees().unwrap(), (a0 + b0, a1 + b1));
        }
    }
}
