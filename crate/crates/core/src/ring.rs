//! Coefficient rings the generic machinery runs over.
//!
//! Everything downstream is generic in [`Ring`], so the same code builds
//! operators over the Laurent ring, at `v = 1`, at `v = q`, or at a rational
//! evaluation point for `v^(1/2)`.

use core::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::laurent::{rat_pow, LaurentPoly, QuadExtValue};

pub trait Ring: Clone + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn int(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// `v^(twice/2)`.
    fn nu_half(&self, twice: i64) -> Self::Elem;
    /// Image of a Laurent polynomial under the structure map.
    fn embed(&self, p: &LaurentPoly) -> Self::Elem;
    /// Exact quotient, `None` when it does not exist in the ring.
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    fn one(&self) -> Self::Elem {
        self.int(1)
    }

    /// `c * v^(twice/2)`.
    fn mono(&self, twice: i64, c: i64) -> Self::Elem {
        self.mul(&self.int(c), &self.nu_half(twice))
    }
}

/// The generic ring itself.
#[derive(Clone, Copy, Debug, Default)]
pub struct Laurent;

impl Ring for Laurent {
    type Elem = LaurentPoly;
    fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero()
    }
    fn int(&self, n: i64) -> LaurentPoly {
        LaurentPoly::constant(n as i128)
    }
    fn add(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a + b
    }
    fn sub(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a - b
    }
    fn mul(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a * b
    }
    fn neg(&self, a: &LaurentPoly) -> LaurentPoly {
        -a
    }
    fn is_zero(&self, a: &LaurentPoly) -> bool {
        a.is_zero()
    }
    fn nu_half(&self, twice: i64) -> LaurentPoly {
        LaurentPoly::monomial(twice, 1)
    }
    fn embed(&self, p: &LaurentPoly) -> LaurentPoly {
        p.clone()
    }
    fn div(&self, a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
        a.div_exact(b)
    }
    fn mono(&self, twice: i64, c: i64) -> LaurentPoly {
        LaurentPoly::monomial(twice, c as i128)
    }
}

/// Specialization `v = 1`.
#[derive(Clone, Copy, Debug, Default)]
pub struct AtOne;

impl Ring for AtOne {
    type Elem = i128;
    fn zero(&self) -> i128 {
        0
    }
    fn int(&self, n: i64) -> i128 {
        n as i128
    }
    fn add(&self, a: &i128, b: &i128) -> i128 {
        a + b
    }
    fn sub(&self, a: &i128, b: &i128) -> i128 {
        a - b
    }
    fn mul(&self, a: &i128, b: &i128) -> i128 {
        a * b
    }
    fn neg(&self, a: &i128) -> i128 {
        -a
    }
    fn is_zero(&self, a: &i128) -> bool {
        *a == 0
    }
    fn nu_half(&self, _twice: i64) -> i128 {
        1
    }
    fn embed(&self, p: &LaurentPoly) -> i128 {
        p.at_one()
    }
    fn div(&self, a: &i128, b: &i128) -> Option<i128> {
        (*b != 0 && a % b == 0).then(|| a / b)
    }
}

/// Specialization `v = q`, `v^(1/2) = sqrt(q)`.
#[derive(Clone, Copy, Debug)]
pub struct AtQ {
    pub q: u64,
}

impl Ring for AtQ {
    type Elem = QuadExtValue;
    fn zero(&self) -> QuadExtValue {
        QuadExtValue::zero(self.q)
    }
    fn int(&self, n: i64) -> QuadExtValue {
        QuadExtValue::from_rational(self.q, BigRational::from_integer(BigInt::from(n)))
    }
    fn add(&self, a: &QuadExtValue, b: &QuadExtValue) -> QuadExtValue {
        a.add(b)
    }
    fn sub(&self, a: &QuadExtValue, b: &QuadExtValue) -> QuadExtValue {
        a.sub(b)
    }
    fn mul(&self, a: &QuadExtValue, b: &QuadExtValue) -> QuadExtValue {
        a.mul(b)
    }
    fn neg(&self, a: &QuadExtValue) -> QuadExtValue {
        a.neg()
    }
    fn is_zero(&self, a: &QuadExtValue) -> bool {
        a.is_zero()
    }
    fn nu_half(&self, twice: i64) -> QuadExtValue {
        QuadExtValue::sqrt_pow(self.q, twice)
    }
    fn embed(&self, p: &LaurentPoly) -> QuadExtValue {
        p.at_q(self.q)
    }
    fn div(&self, a: &QuadExtValue, b: &QuadExtValue) -> Option<QuadExtValue> {
        // (x + y r)^(-1) = (x - y r) / (x^2 - q y^2); the norm is nonzero for
        // non-square q, and y = 0 otherwise.
        let q = BigRational::from_integer(BigInt::from(self.q));
        let norm = &b.rational * &b.rational - &b.surd * &b.surd * q;
        if norm.is_zero() {
            return None;
        }
        let conj = QuadExtValue { rational: &b.rational / &norm, surd: -&b.surd / &norm, radicand: self.q };
        Some(a.mul(&conj))
    }
}

/// Evaluation `v^(1/2) = u` for a nonzero rational `u`.
#[derive(Clone, Debug)]
pub struct AtPoint {
    pub u: BigRational,
}

impl AtPoint {
    pub fn integer(u: i64) -> Self {
        AtPoint { u: BigRational::from_integer(BigInt::from(u)) }
    }
}

impl Ring for AtPoint {
    type Elem = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn nu_half(&self, twice: i64) -> BigRational {
        rat_pow(&self.u, twice)
    }
    fn embed(&self, p: &LaurentPoly) -> BigRational {
        p.at_half_point(&self.u)
    }
    fn div(&self, a: &BigRational, b: &BigRational) -> Option<BigRational> {
        (!b.is_zero()).then(|| a / b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_hom<R: Ring>(r: &R) {
        let a = LaurentPoly::from_terms([(-3, 2), (0, -1), (4, 5)]);
        let b = LaurentPoly::from_terms([(1, 1), (2, -3)]);
        assert_eq!(r.embed(&(&a * &b)), r.mul(&r.embed(&a), &r.embed(&b)));
        assert_eq!(r.embed(&(&a - &b)), r.sub(&r.embed(&a), &r.embed(&b)));
        assert_eq!(r.mul(&r.nu_half(3), &r.nu_half(-3)), r.one());
        assert_eq!(r.mono(2, -4), r.embed(&LaurentPoly::monomial(2, -4)));
        let ab = r.mul(&r.embed(&a), &r.embed(&b));
        assert_eq!(r.div(&ab, &r.embed(&b)), Some(r.embed(&a)));
    }

    #[test]
    fn structure_maps_are_homomorphisms() {
        check_hom(&Laurent);
        check_hom(&AtOne);
        check_hom(&AtQ { q: 2 });
        check_hom(&AtQ { q: 4 });
        check_hom(&AtPoint::integer(3));
    }
}
