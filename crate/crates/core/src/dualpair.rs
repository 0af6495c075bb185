//! Dual-pair case bookkeeping: tower dimensions, the Hecke parameter,
//! first occurrence, conservation and the unipotent normalization.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use crate::bipartition::{eps_twist, r1, theta_lift, Bipartition, VirtualSum};
use crate::laurent::HalfInt;
use crate::partition::Partition;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseTag {
    /// Unitary.
    A,
    /// Odd orthogonal / symplectic.
    B,
    /// Symplectic / even orthogonal.
    C,
    /// Symplectic (metaplectic) / odd orthogonal.
    Ct,
    /// Even orthogonal / symplectic.
    D,
}

impl CaseTag {
    pub const ALL: [CaseTag; 5] = [CaseTag::A, CaseTag::B, CaseTag::C, CaseTag::Ct, CaseTag::D];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::A => "A",
            CaseTag::B => "B",
            CaseTag::C => "C",
            CaseTag::Ct => "Ct",
            CaseTag::D => "D",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        CaseTag::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown case tag {:?}", s)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualPairCase {
    pub tag: CaseTag,
    pub delta: i64,
    pub delta_prime: i64,
    /// `chi` is the quadratic character (metaplectic case only).
    pub chi_is_xi: bool,
}

impl DualPairCase {
    pub fn new(tag: CaseTag) -> Self {
        let delta = match tag {
            CaseTag::A => 1,
            CaseTag::B | CaseTag::D => 0,
            CaseTag::C | CaseTag::Ct => 2,
        };
        DualPairCase { tag, delta, delta_prime: 2 - delta, chi_is_xi: tag == CaseTag::Ct }
    }

    /// Required parity of `dim V` and `dim V'`, `None` when free.
    fn parities(&self) -> (Option<usize>, Option<usize>) {
        match self.tag {
            CaseTag::A => (None, None),
            CaseTag::B => (Some(1), Some(0)),
            CaseTag::C => (Some(0), Some(0)),
            CaseTag::Ct => (Some(0), Some(1)),
            CaseTag::D => (Some(0), Some(0)),
        }
    }
}

pub fn mu_range_check(case: CaseTag, mu: HalfInt) -> bool {
    match case {
        CaseTag::A => mu.twice.rem_euclid(2) == 1,
        CaseTag::B | CaseTag::C => mu.twice.rem_euclid(4) == 2,
        CaseTag::Ct | CaseTag::D => mu.twice.rem_euclid(4) == 0,
    }
}

/// `(n - n~) / 2`.
pub fn mu_sigma(n: usize, ntilde: usize) -> HalfInt {
    HalfInt::from_twice(n as i64 - ntilde as i64)
}

/// Dimensions of the anisotropic kernels of the two target towers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TowerConfig {
    pub case: DualPairCase,
    pub dim_v0: usize,
    pub dim_vp0: usize,
    pub dim_vt0: usize,
    /// `chi(-1)`; must be `1` outside the metaplectic case.
    pub chi_minus_one: i64,
}

impl TowerConfig {
    pub fn new(tag: CaseTag, dim_v0: usize, dim_vp0: usize) -> Result<Self, Error> {
        Self::with_chi(tag, dim_v0, dim_vp0, 1)
    }

    pub fn with_chi(tag: CaseTag, dim_v0: usize, dim_vp0: usize, chi_minus_one: i64) -> Result<Self, Error> {
        let case = DualPairCase::new(tag);
        let (pv, pvp) = case.parities();
        if pv.is_some_and(|p| dim_v0 % 2 != p) || pvp.is_some_and(|p| dim_vp0 % 2 != p) {
            return Err(Error::Invalid(format!(
                "parity violation for case {}: dimV0={}, dimVp0={}",
                tag, dim_v0, dim_vp0
            )));
        }
        let total = 2 * dim_v0 as i64 + case.delta;
        if dim_vp0 as i64 > total {
            return Err(Error::Invalid(format!(
                "companion tower would have negative dimension {}",
                total - dim_vp0 as i64
            )));
        }
        if chi_minus_one != 1 && chi_minus_one != -1 {
            return Err(Error::Invalid(format!("chi(-1) must be 1 or -1, got {}", chi_minus_one)));
        }
        if chi_minus_one == -1 && !case.chi_is_xi {
            return Err(Error::Invalid(format!("chi(-1) = -1 is inconsistent with case {}", tag)));
        }
        Ok(TowerConfig { case, dim_v0, dim_vp0, dim_vt0: (total - dim_vp0 as i64) as usize, chi_minus_one })
    }

    /// The configuration with the two towers exchanged.
    pub fn swapped(&self) -> Self {
        TowerConfig { dim_vp0: self.dim_vt0, dim_vt0: self.dim_vp0, ..*self }
    }

    /// `dim V' - dim V - delta / 2`.
    pub fn mu(&self) -> HalfInt {
        HalfInt::from_twice(2 * self.dim_vp0 as i64 - 2 * self.dim_v0 as i64 - self.case.delta)
    }

    /// `dim V_l`.
    pub fn dim_v(&self, l: usize) -> usize {
        self.dim_v0 + 2 * l
    }
}

pub fn mu_of(cfg: &TowerConfig) -> HalfInt {
    cfg.mu()
}

/// `sign * g * q^exponent` where `g` is the Weil-index symbol of the first
/// tower, known only through `g^2 = chi(-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GammaPower {
    pub sign: i64,
    pub exponent: HalfInt,
}

impl fmt::Display for GammaPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign < 0 { "-" } else { "" };
        write!(f, "{}g*q^{}", s, self.exponent)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaReport {
    pub lambda: GammaPower,
    pub lambda_tilde: GammaPower,
    /// `lambda~ / lambda = ratio_sign * q^ratio_exponent`.
    pub ratio_sign: i64,
    pub ratio_exponent: HalfInt,
    /// `lambda * lambda~ = product_sign * q^product_exponent`.
    pub product_sign: i64,
    pub product_exponent: HalfInt,
    /// Eigenvalues of `-lambda^{-1} T`: `-1` and `q^mu`.
    pub normalized_eigen_exponent: HalfInt,
}

pub fn lambda_exponents(cfg: &TowerConfig) -> Result<LambdaReport, Error> {
    let d = cfg.case.delta;
    let twice_v0 = 2 * cfg.dim_v0 as i64;
    // dim V0 - dim V'0 / 2 + delta / 2, in halves.
    let lambda = GammaPower { sign: 1, exponent: HalfInt::from_twice(twice_v0 - cfg.dim_vp0 as i64 + d) };
    let lambda_tilde = GammaPower { sign: -1, exponent: HalfInt::from_twice(twice_v0 - cfg.dim_vt0 as i64 + d) };
    let ratio_sign = lambda_tilde.sign * lambda.sign;
    let ratio_exponent = lambda_tilde.exponent - lambda.exponent;
    // g^2 = chi(-1).
    let product_sign = lambda.sign * lambda_tilde.sign * cfg.chi_minus_one;
    let product_exponent = lambda.exponent + lambda_tilde.exponent;
    let mu = cfg.mu();
    if ratio_sign != -1 || ratio_exponent != mu {
        return Err(Error::Invalid(format!("ratio {} q^{} differs from -q^{}", ratio_sign, ratio_exponent, mu)));
    }
    let expect = HalfInt::from_twice(twice_v0 + d);
    if product_sign != -cfg.chi_minus_one || product_exponent != expect {
        return Err(Error::Invalid(format!(
            "product {} q^{} differs from -chi(-1) q^{}",
            product_sign, product_exponent, expect
        )));
    }
    Ok(LambdaReport {
        lambda,
        lambda_tilde,
        ratio_sign,
        ratio_exponent,
        product_sign,
        product_exponent,
        normalized_eigen_exponent: ratio_exponent,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FirstOccurrence {
    pub n: usize,
    pub ntilde: usize,
    pub c: usize,
}

/// Least `l'` with a nonzero lift, by search.
fn least_target(alpha: &Partition, beta: &Partition, l: usize) -> Result<usize, Error> {
    for lp in 0..=l {
        if !theta_lift(alpha, beta, l, lp)?.is_empty() {
            return Ok(lp);
        }
    }
    Err(Error::Invalid(String::from("lift vanishes for every target rank up to l")))
}

/// First occurrence in both towers of the member of the series labelled
/// `alpha x beta`, cross-checked against the lift formula.
pub fn first_occurrence(
    alpha: &Partition,
    beta: &Partition,
    l: usize,
    cfg: &TowerConfig,
) -> Result<FirstOccurrence, Error> {
    if alpha.size() + beta.size() != l {
        return Err(Error::SizeMismatch { expected: l, got: alpha.size() + beta.size() });
    }
    let (ra, rb) = (r1(alpha), r1(beta));
    let n = cfg.dim_vp0 + 2 * l.saturating_sub(rb);
    let ntilde = cfg.dim_vt0 + 2 * l.saturating_sub(ra);
    let searched = cfg.dim_vp0 + 2 * least_target(alpha, beta, l)?;
    let searched_tilde = cfg.dim_vt0 + 2 * least_target(beta, alpha, l)?;
    if n != searched || ntilde != searched_tilde {
        return Err(Error::Invalid(format!(
            "closed form ({}, {}) disagrees with search ({}, {})",
            n, ntilde, searched, searched_tilde
        )));
    }
    Ok(FirstOccurrence { n, ntilde, c: ra + rb })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConservationReport {
    pub occurrence: FirstOccurrence,
    /// `n + n~ + c`.
    pub lhs_c1: i64,
    /// `n + n~ + 2c`.
    pub lhs_c2: i64,
    /// `2 dim V_l + delta`.
    pub rhs: i64,
    pub residual_c1: i64,
    pub residual_c2: i64,
}

impl ConservationReport {
    pub fn holds(&self) -> bool {
        self.residual_c2 == 0
    }
}

pub fn conservation_check(
    alpha: &Partition,
    beta: &Partition,
    l: usize,
    cfg: &TowerConfig,
) -> Result<ConservationReport, Error> {
    let occ = first_occurrence(alpha, beta, l, cfg)?;
    let base = (occ.n + occ.ntilde) as i64;
    let rhs = 2 * cfg.dim_v(l) as i64 + cfg.case.delta;
    let lhs_c1 = base + occ.c as i64;
    let lhs_c2 = base + 2 * occ.c as i64;
    Ok(ConservationReport {
        occurrence: occ,
        lhs_c1,
        lhs_c2,
        rhs,
        residual_c1: lhs_c1 - rhs,
        residual_c2: lhs_c2 - rhs,
    })
}

/// Smallest-dimensional configuration with the given parameter.
pub fn abundance_witness(mu: HalfInt, case: CaseTag) -> Result<TowerConfig, Error> {
    if !mu_range_check(case, mu) {
        return Err(Error::Invalid(format!("mu = {} is out of range for case {}", mu, case)));
    }
    let dc = DualPairCase::new(case);
    // dim V'0 = dim V0 + mu + delta/2 must lie in [0, 2 dim V0 + delta].
    let need = (mu.twice.abs() - dc.delta).max(0);
    let mut v0 = (need + 1) / 2;
    loop {
        let vp0 = v0 + (mu.twice + dc.delta) / 2;
        if vp0 >= 0 {
            if let Ok(cfg) = TowerConfig::new(case, v0 as usize, vp0 as usize) {
                return Ok(cfg);
            }
        }
        v0 += 1;
    }
}

/// The parameter realized by the smallest theta-cuspidal pair of the case.
pub fn base_witness(case: CaseTag) -> TowerConfig {
    let (v0, vp0) = match case {
        CaseTag::A => (0, 1),
        CaseTag::B => (1, 0),
        CaseTag::C => (0, 0),
        CaseTag::Ct => (0, 1),
        CaseTag::D => (0, 0),
    };
    TowerConfig::new(case, v0, vp0).expect("base witnesses are parity-valid")
}

/// Orbit of `mu` under `mu -> -mu` and `mu -> -mu - 2`, restricted to
/// `|mu| <= bound`.
pub fn relevance_closure(mu: HalfInt, case: CaseTag, bound: HalfInt) -> Result<BTreeSet<HalfInt>, Error> {
    if !mu_range_check(case, mu) {
        return Err(Error::Invalid(format!("mu = {} is out of range for case {}", mu, case)));
    }
    // Both maps move |mu| by at most 2, so exploring to bound + 2 suffices.
    let lim = bound.twice.abs() + 4;
    let mut seen = BTreeSet::from([mu]);
    let mut queue = VecDeque::from([mu]);
    while let Some(m) = queue.pop_front() {
        for next in [-m, -m - HalfInt::from_int(2)] {
            if next.twice.abs() <= lim && seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen.into_iter().filter(|m| m.twice.abs() <= bound.twice.abs()).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnipotentData {
    pub dim_v: usize,
    pub first_occ_low: usize,
    pub first_occ_high: usize,
    pub mu: HalfInt,
}

/// The cuspidal unipotent representation of the unitary group of rank
/// `m(m+1)/2`.
pub fn lusztig_unipotent(m: usize) -> UnipotentData {
    UnipotentData {
        dim_v: m * (m + 1) / 2,
        first_occ_low: m.saturating_sub(1) * m / 2,
        first_occ_high: (m + 1) * (m + 2) / 2,
        mu: HalfInt::from_twice(2 * m as i64 + 1),
    }
}

/// `sum_k X_{l'-k}(alpha) x X*_{l-k}(beta)` under the unipotent
/// normalization attached to `m`.
pub fn amr_lift(
    _m: usize,
    l: usize,
    lp: usize,
    alpha: &Partition,
    beta: &Partition,
) -> Result<VirtualSum<Bipartition>, Error> {
    Ok(eps_twist(&theta_lift(alpha, beta, l, lp)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipartition::bipartitions_of;
    use alloc::vec;
    use alloc::vec::Vec;

    fn h(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn valid_configs(case: CaseTag, max: usize) -> Vec<TowerConfig> {
        let mut out = Vec::new();
        for v0 in 0..=max {
            for vp0 in 0..=2 * max + 2 {
                if let Ok(c) = TowerConfig::new(case, v0, vp0) {
                    out.push(c);
                }
            }
        }
        out
    }

    #[test]
    fn mu_examples() {
        let c = TowerConfig::new(CaseTag::A, 0, 1).unwrap();
        assert_eq!(c.mu(), h(1));
        assert!(!mu_range_check(CaseTag::A, HalfInt::from_int(1)));
        let swapped = TowerConfig::new(CaseTag::A, 0, 0).unwrap();
        assert_eq!(mu_sigma(0, 1), h(-1));
        assert_eq!(mu_sigma(0, 1), swapped.mu());
        assert_eq!(c.swapped(), swapped);
    }

    #[test]
    fn configs_are_consistent() {
        for case in CaseTag::ALL {
            let configs = valid_configs(case, 6);
            assert!(!configs.is_empty());
            for c in configs {
                assert_eq!((c.dim_vp0 + c.dim_vt0) as i64, 2 * c.dim_v0 as i64 + c.case.delta);
                assert!(mu_range_check(case, c.mu()), "{:?}", c);
                assert_eq!(mu_sigma(c.dim_vp0, c.dim_vt0), c.mu());
                assert_eq!(c.case.delta + c.case.delta_prime, 2);
                lambda_exponents(&c).unwrap();
                assert!(TowerConfig::new(case, c.dim_v0, c.dim_vt0).is_ok());
            }
        }
        assert!(TowerConfig::new(CaseTag::B, 2, 0).is_err());
        assert!(TowerConfig::new(CaseTag::A, 0, 2).is_err());
        assert!(TowerConfig::with_chi(CaseTag::A, 0, 1, -1).is_err());
        assert!(TowerConfig::with_chi(CaseTag::Ct, 0, 1, -1).is_ok());
    }

    #[test]
    fn lambda_example() {
        let c = TowerConfig::new(CaseTag::A, 1, 3).unwrap();
        let r = lambda_exponents(&c).unwrap();
        assert_eq!(r.lambda.exponent, HalfInt::ZERO);
        assert_eq!(c.mu(), h(3));
        assert_eq!((r.ratio_sign, r.ratio_exponent), (-1, h(3)));
        assert_eq!(r.product_exponent, h(2 + 1));
        let ct = TowerConfig::with_chi(CaseTag::Ct, 2, 3, -1).unwrap();
        let r = lambda_exponents(&ct).unwrap();
        assert_eq!(r.product_sign, 1);
        assert_eq!(r.product_exponent, HalfInt::from_int(3));
    }

    #[test]
    fn first_occurrence_examples() {
        let c = TowerConfig::new(CaseTag::A, 0, 1).unwrap();
        let e = Partition::empty();
        let f = first_occurrence(&e, &e, 0, &c).unwrap();
        assert_eq!(f, FirstOccurrence { n: c.dim_vp0, ntilde: c.dim_vt0, c: 0 });
        let f = first_occurrence(&p(&[1]), &e, 1, &c).unwrap();
        assert_eq!(f, FirstOccurrence { n: 3, ntilde: 0, c: 1 });
        let f = first_occurrence(&e, &p(&[1]), 1, &c).unwrap();
        assert_eq!(f, FirstOccurrence { n: 1, ntilde: 2, c: 1 });
        assert!(first_occurrence(&e, &p(&[1]), 2, &c).is_err());
    }

    #[test]
    fn conservation_examples_and_scan() {
        let c = TowerConfig::new(CaseTag::A, 0, 1).unwrap();
        let e = Partition::empty();
        let r = conservation_check(&e, &e, 0, &c).unwrap();
        assert_eq!((r.residual_c1, r.residual_c2), (0, 0));
        let r = conservation_check(&p(&[1]), &e, 1, &c).unwrap();
        assert_eq!((r.lhs_c2, r.rhs, r.lhs_c1), (5, 5, 4));
        for case in CaseTag::ALL {
            for cfg in valid_configs(case, 3) {
                for l in 0..=5 {
                    for b in bipartitions_of(l) {
                        let r = conservation_check(&b.first, &b.second, l, &cfg).unwrap();
                        assert!(r.holds(), "{:?} {} {:?}", cfg, b, r);
                        assert_eq!(r.residual_c1, -(r.occurrence.c as i64));
                    }
                }
            }
        }
    }

    #[test]
    fn witnesses_and_closure() {
        let w = abundance_witness(h(1), CaseTag::A).unwrap();
        assert_eq!((w.dim_v0, w.dim_vp0), (0, 1));
        for case in CaseTag::ALL {
            let mut sampled = 0;
            for twice in -40..=40 {
                let mu = h(twice);
                if !mu_range_check(case, mu) {
                    assert!(abundance_witness(mu, case).is_err());
                    continue;
                }
                assert_eq!(abundance_witness(mu, case).unwrap().mu(), mu);
                sampled += 1;
            }
            assert!(sampled >= 20);
            let base = base_witness(case).mu();
            let bound = HalfInt::from_int(9);
            let orbit = relevance_closure(base, case, bound).unwrap();
            let expect: BTreeSet<HalfInt> = (-18..=18).map(h).filter(|&m| mu_range_check(case, m)).collect();
            assert_eq!(orbit, expect, "{}", case);
        }
        let a = relevance_closure(h(1), CaseTag::A, h(5)).unwrap();
        assert_eq!(a.into_iter().collect::<Vec<_>>(), vec![h(-5), h(-3), h(-1), h(1), h(3), h(5)]);
        assert!(relevance_closure(HalfInt::from_int(1), CaseTag::A, h(5)).is_err());
    }

    #[test]
    fn unipotent_data() {
        let u = lusztig_unipotent(1);
        assert_eq!((u.dim_v, u.first_occ_low, u.first_occ_high, u.mu), (1, 0, 3, h(3)));
        for m in 0..=6 {
            let u = lusztig_unipotent(m);
            assert_eq!(mu_sigma(u.first_occ_high, u.first_occ_low), u.mu);
            assert_eq!(u.first_occ_low + u.first_occ_high, 2 * u.dim_v + 1);
        }
        let e = Partition::empty();
        assert!(amr_lift(0, 1, 0, &p(&[1]), &e).unwrap().is_empty());
        let a = amr_lift(0, 1, 1, &e, &p(&[1])).unwrap();
        assert_eq!(a, theta_lift(&e, &p(&[1]), 1, 1).unwrap());
    }

    /// `F_4 = F_2[w] / (w^2 + w + 1)` as two-bit integers.
    fn f4_mul(a: u8, b: u8) -> u8 {
        let mut r = 0u8;
        for i in 0..2 {
            if b >> i & 1 == 1 {
                r ^= a << i;
            }
        }
        if r & 4 != 0 {
            r ^= 0b111;
        }
        r
    }

    #[test]
    fn unitary_rank_two_over_f2_oracle() {
        let conj = |a: u8| f4_mul(a, a);
        let mut count = 0;
        let mut total: i64 = 0;
        for code in 0u32..256 {
            let g = [[(code & 3) as u8, (code >> 2 & 3) as u8], [(code >> 4 & 3) as u8, (code >> 6 & 3) as u8]];
            // g* g = 1 for the form x1 y1^q + x2 y2^q.
            let mut unitary = true;
            for i in 0..2 {
                for j in 0..2 {
                    let s = g.iter().fold(0, |s, row| s ^ f4_mul(conj(row[i]), row[j]));
                    unitary &= s == (i == j) as u8;
                }
            }
            if !unitary {
                continue;
            }
            count += 1;
            let a = [[g[0][0] ^ 1, g[0][1]], [g[1][0], g[1][1] ^ 1]];
            let det = f4_mul(a[0][0], a[1][1]) ^ f4_mul(a[0][1], a[1][0]);
            let rank = if a.iter().flatten().all(|&x| x == 0) {
                0
            } else if det == 0 {
                1
            } else {
                2
            };
            total += (-2i64).pow(2 - rank);
        }
        assert_eq!(count, 18);
        assert_eq!(total, 0);
    }
}
