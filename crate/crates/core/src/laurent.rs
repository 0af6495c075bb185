//! Exact arithmetic in `Z[v^(1/2), v^(-1/2)]` and its specializations.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// A half-integer, stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt {
    pub twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// Parses `"3"`, `"-1"`, `"3/2"`, `"-6/2"`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::Parse(String::from(s));
        match s.split_once('/') {
            None => s.parse::<i64>().map(HalfInt::from_int).map_err(|_| bad()),
            Some((num, den)) => {
                let num: i64 = num.trim().parse().map_err(|_| bad())?;
                match den.trim() {
                    "1" => Ok(HalfInt::from_int(num)),
                    "2" => Ok(HalfInt::from_twice(num)),
                    _ => Err(bad()),
                }
            }
        }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, o: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + o.twice)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, o: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - o.twice)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

/// Element of `Z[v^(1/2), v^(-1/2)]`: sorted `(e, c)` pairs meaning `c * v^(e/2)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(i64, i128)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i128) -> Self {
        Self::monomial(0, c)
    }

    /// `c * v^(twice/2)`.
    pub fn monomial(twice: i64, c: i128) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            LaurentPoly { terms: alloc::vec![(twice, c)] }
        }
    }

    /// `v^h`.
    pub fn nu_pow(h: HalfInt) -> Self {
        Self::monomial(h.twice, 1)
    }

    /// `v` itself.
    pub fn nu() -> Self {
        Self::monomial(2, 1)
    }

    /// Builds from arbitrary `(twice_exponent, coeff)` pairs, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (i64, i128)>>(it: I) -> Self {
        let mut v: Vec<(i64, i128)> = it.into_iter().collect();
        v.sort_by_key(|t| t.0);
        let mut out: Vec<(i64, i128)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        LaurentPoly { terms: out }
    }

    pub fn terms(&self) -> &[(i64, i128)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    pub fn scale(&self, c: i128) -> Self {
        if c == 0 {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|&(e, x)| (e, x * c)).collect() }
    }

    /// Multiplies by `v^(twice/2)`.
    pub fn shift(&self, twice: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|&(e, c)| (e + twice, c)).collect() }
    }

    fn merge(&self, other: &Self, sign: i128) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0, sign * b[j].1));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a[i].1 + sign * b[j].1;
                    if c != 0 {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        LaurentPoly { terms: out }
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Long division on the lowest terms; the Laurent ring is a localization
        // of Z[u], so normalize both to start at u^0.
        let d0 = d.terms[0].0;
        let dn: Vec<(i64, i128)> = d.terms.iter().map(|&(e, c)| (e - d0, c)).collect();
        let lead = dn[0].1;
        let span = dn.last().unwrap().0;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        let top = self.max_exp().unwrap();
        while let Some((e, c)) = rem.terms.first().copied() {
            if e + span > top || c % lead != 0 {
                return None;
            }
            let qc = c / lead;
            quot.push((e, qc));
            let sub = LaurentPoly { terms: dn.iter().map(|&(de, dc)| (de + e, dc * qc)).collect() };
            rem = rem.merge(&sub, -1);
        }
        Some(LaurentPoly::from_terms(quot).shift(-d0))
    }

    /// Value at `v = 1`.
    pub fn at_one(&self) -> i128 {
        self.terms.iter().map(|t| t.1).sum()
    }

    /// Exact value at `v = q`, with `v^(1/2) = sqrt(q)`.
    pub fn at_q(&self, q: u64) -> QuadExtValue {
        let mut acc = QuadExtValue::zero(q);
        for &(e, c) in &self.terms {
            let m = QuadExtValue::sqrt_pow(q, e).scale(&BigRational::from_integer(BigInt::from(c)));
            acc = acc.add(&m);
        }
        acc
    }

    /// Value at `v^(1/2) = u`.
    pub fn at_half_point(&self, u: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for &(e, c) in &self.terms {
            acc += rat_pow(u, e) * BigRational::from_integer(BigInt::from(c));
        }
        acc
    }
}

pub(crate) fn rat_pow(u: &BigRational, e: i64) -> BigRational {
    let p = num_traits::pow(u.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        self.merge(o, 1)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        self.merge(o, -1)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::zero();
        }
        if o.terms.len() == 1 {
            let (e, c) = o.terms[0];
            return self.scale(c).shift(e);
        }
        if self.terms.len() == 1 {
            return o * self;
        }
        let lo = self.terms[0].0 + o.terms[0].0;
        let hi = self.max_exp().unwrap() + o.max_exp().unwrap();
        let mut dense = alloc::vec![0i128; (hi - lo + 1) as usize];
        for &(e1, c1) in &self.terms {
            for &(e2, c2) in &o.terms {
                dense[(e1 + e2 - lo) as usize] += c1 * c2;
            }
        }
        LaurentPoly {
            terms: dense.into_iter().enumerate().filter(|t| t.1 != 0).map(|(i, c)| (lo + i as i64, c)).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, o: LaurentPoly) -> LaurentPoly {
                (&self).$f(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Human form, e.g. `2v^-1 + v^3/2 - 1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, &(e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            if e == 0 {
                write!(f, "{}", mag)?;
                continue;
            }
            if mag != 1 {
                write!(f, "{}", mag)?;
            }
            match HalfInt::from_twice(e) {
                h if h.twice == 2 => f.write_str("v")?,
                h => write!(f, "v^{}", h)?,
            }
        }
        Ok(())
    }
}

/// `rational + surd * sqrt(radicand)`, exact.
///
/// When the radicand is a perfect square the surd part is folded into the
/// rational part and kept at zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadExtValue {
    pub rational: BigRational,
    pub surd: BigRational,
    pub radicand: u64,
}

impl QuadExtValue {
    pub fn zero(q: u64) -> Self {
        QuadExtValue { rational: BigRational::zero(), surd: BigRational::zero(), radicand: q }
    }

    pub fn from_rational(q: u64, r: BigRational) -> Self {
        QuadExtValue { rational: r, surd: BigRational::zero(), radicand: q }
    }

    fn square_root(q: u64) -> Option<u64> {
        let r = q.sqrt();
        (r * r == q).then_some(r)
    }

    /// `sqrt(q)^e`.
    pub fn sqrt_pow(q: u64, e: i64) -> Self {
        let qr = BigRational::from_integer(BigInt::from(q));
        if let Some(r) = Self::square_root(q) {
            return Self::from_rational(q, rat_pow(&BigRational::from_integer(BigInt::from(r)), e));
        }
        let base = rat_pow(&qr, e.div_euclid(2));
        if e.rem_euclid(2) == 0 {
            Self::from_rational(q, base)
        } else {
            QuadExtValue { rational: BigRational::zero(), surd: base, radicand: q }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        QuadExtValue { rational: &self.rational * c, surd: &self.surd * c, radicand: self.radicand }
    }

    pub fn add(&self, o: &Self) -> Self {
        QuadExtValue { rational: &self.rational + &o.rational, surd: &self.surd + &o.surd, radicand: self.radicand }
    }

    pub fn sub(&self, o: &Self) -> Self {
        QuadExtValue { rational: &self.rational - &o.rational, surd: &self.surd - &o.surd, radicand: self.radicand }
    }

    pub fn neg(&self) -> Self {
        QuadExtValue { rational: -&self.rational, surd: -&self.surd, radicand: self.radicand }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let q = BigRational::from_integer(BigInt::from(self.radicand));
        QuadExtValue {
            rational: &self.rational * &o.rational + &self.surd * &o.surd * q,
            surd: &self.rational * &o.surd + &self.surd * &o.rational,
            radicand: self.radicand,
        }
    }
}

impl fmt::Display for QuadExtValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd.is_zero() {
            write!(f, "{}", self.rational)
        } else if self.surd.is_negative() {
            write!(f, "{} - {}*sqrt({})", self.rational, -&self.surd, self.radicand)
        } else {
            write!(f, "{} + {}*sqrt({})", self.rational, self.surd, self.radicand)
        }
    }
}

/// Builds a polynomial from `(exponent numerator, coefficient)` pairs with
/// string keys, as they appear in the JSON form.
pub fn from_string_map<'a, I: IntoIterator<Item = (&'a str, i128)>>(it: I) -> Result<LaurentPoly, Error> {
    let mut v = Vec::new();
    for (k, c) in it {
        let e: i64 = k.trim().parse().map_err(|_| Error::Parse(String::from(k)))?;
        v.push((e, c));
    }
    Ok(LaurentPoly::from_terms(v))
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn half_powers_multiply() {
        let h = LaurentPoly::monomial(1, 1);
        assert_eq!(&h * &h, LaurentPoly::nu());
    }

    #[test]
    fn difference_of_squares() {
        let a = &LaurentPoly::nu() - &LaurentPoly::one();
        let b = &LaurentPoly::nu() + &LaurentPoly::one();
        assert_eq!(&a * &b, LaurentPoly::from_terms([(4, 1), (0, -1)]));
    }

    #[test]
    fn add_back_the_one() {
        let mu = HalfInt::from_twice(3);
        let p = &(&LaurentPoly::nu_pow(mu) - &LaurentPoly::one()) + &LaurentPoly::one();
        assert_eq!(p, LaurentPoly::monomial(3, 1));
    }

    #[test]
    fn specializations() {
        let mu = HalfInt::from_twice(5);
        assert_eq!((&LaurentPoly::nu_pow(mu) - &LaurentPoly::one()).at_one(), 0);
        let v = LaurentPoly::monomial(3, 1).at_q(2);
        assert_eq!(v.rational, rat(0, 1));
        assert_eq!(v.surd, rat(2, 1));
        // 2/4 + 4 by hand.
        let p = LaurentPoly::from_terms([(-2, 2), (2, 1)]);
        let v = p.at_q(4);
        assert_eq!(v.rational, rat(9, 2));
        assert!(v.surd.is_zero());
    }

    #[test]
    fn q_four_folds_odd_powers() {
        let v = LaurentPoly::monomial(-3, 1).at_q(4);
        assert_eq!(v.rational, rat(1, 8));
        assert!(v.surd.is_zero());
    }

    #[test]
    fn half_int_roundtrip() {
        for s in ["3/2", "-1/2", "1", "0", "-4"] {
            assert_eq!(HalfInt::parse(s).unwrap().to_string(), s);
        }
        assert_eq!(HalfInt::parse("6/2").unwrap().to_string(), "3");
        assert!(HalfInt::parse("1/3").is_err());
    }

    #[test]
    fn exact_division() {
        let one_minus_nu = &LaurentPoly::one() - &LaurentPoly::nu();
        let d = one_minus_nu.shift(-4);
        let p = LaurentPoly::from_terms([(-3, 5), (1, 2), (6, -7)]);
        let prod = &p * &d;
        assert_eq!(prod.div_exact(&d), Some(p));
        assert_eq!(LaurentPoly::nu().div_exact(&one_minus_nu), None);
    }

    #[test]
    fn display_form() {
        let p = LaurentPoly::from_terms([(-2, 2), (3, 1), (0, -1)]);
        assert_eq!(p.to_string(), "v^3/2 - 1 + 2v^-1");
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-8i64..8, -5i128..5), 0..6).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn specialization_is_multiplicative(a in arb_poly(), b in arb_poly(), q in 2u64..6) {
            let ab = &a * &b;
            prop_assert_eq!(ab.at_one(), a.at_one() * b.at_one());
            prop_assert_eq!(ab.at_q(q), a.at_q(q).mul(&b.at_q(q)));
            prop_assert_eq!((&a + &b).at_q(q), a.at_q(q).add(&b.at_q(q)));
        }

        #[test]
        fn division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
        }
    }
}
