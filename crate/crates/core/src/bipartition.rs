//! Bipartitions, Pieri operators, characters of `S_n` and `W_l`, theta lifts.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::partition::{partitions_of, Partition};
use crate::weyl::{enum_classes, factorial, ClassType, SignedPerm};
use crate::Error;

/// `alpha x beta`, an irreducible of `W_{|alpha|+|beta|}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }

    pub fn swap(&self) -> Self {
        Bipartition { first: self.second.clone(), second: self.first.clone() }
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.first, self.second)
    }
}

/// All bipartitions of `l`, first slot largest first.
pub fn bipartitions_of(l: usize) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for a in (0..=l).rev() {
        for p in partitions_of(a) {
            for q in partitions_of(l - a) {
                out.push(Bipartition::new(p.clone(), q));
            }
        }
    }
    out
}

/// Integer-weighted formal sum.
pub type VirtualSum<K> = BTreeMap<K, i64>;

pub fn vs_add<K: Ord + Clone>(acc: &mut VirtualSum<K>, k: K, m: i64) {
    if m == 0 {
        return;
    }
    let e = acc.entry(k.clone()).or_insert(0);
    *e += m;
    if *e == 0 {
        acc.remove(&k);
    }
}

pub fn is_multiplicity_free<K>(v: &VirtualSum<K>) -> bool {
    v.values().all(|&m| m == 0 || m == 1)
}

/// Partitions `mu` containing `lam` with `mu / lam` a horizontal strip of size `i`.
pub fn pieri_add(lam: &Partition, i: usize) -> Vec<Partition> {
    // Interlacing: mu_1 >= lam_1 >= mu_2 >= lam_2 >= ...
    fn rec(lam: &Partition, row: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let lo = lam.part(row);
        if row > lam.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()));
            }
            return;
        }
        let hi = if row == 0 { lo + left } else { lam.part(row - 1).min(lo + left) };
        for v in lo..=hi {
            cur.push(v);
            rec(lam, row + 1, left - (v - lo), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lam, 0, i, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Partitions `mu` inside `lam` with `lam / mu` a horizontal strip of size `i`.
pub fn pieri_remove(lam: &Partition, i: usize) -> Vec<Partition> {
    // lam_{r+1} <= mu_r <= lam_r
    fn rec(lam: &Partition, row: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row == lam.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()));
            }
            return;
        }
        let hi = lam.part(row);
        let lo = lam.part(row + 1).max(hi.saturating_sub(left));
        for v in lo..=hi {
            cur.push(v);
            rec(lam, row + 1, left - (hi - v), cur, out);
            cur.pop();
        }
    }
    if i > lam.size() {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(lam, 0, i, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `X_i` extended linearly.
pub fn x_op(v: &VirtualSum<Partition>, i: usize) -> VirtualSum<Partition> {
    let mut out = VirtualSum::new();
    for (p, &m) in v {
        for q in pieri_add(p, i) {
            vs_add(&mut out, q, m);
        }
    }
    out
}

/// `X*_i` extended linearly.
pub fn x_star_op(v: &VirtualSum<Partition>, i: usize) -> VirtualSum<Partition> {
    let mut out = VirtualSum::new();
    for (p, &m) in v {
        for q in pieri_remove(p, i) {
            vs_add(&mut out, q, m);
        }
    }
    out
}

pub fn single<K: Ord>(k: K) -> VirtualSum<K> {
    let mut v = VirtualSum::new();
    v.insert(k, 1);
    v
}

/// Largest `i` with `X*_i(lam) != 0`, by search.
pub fn r1(lam: &Partition) -> usize {
    (0..=lam.size()).rev().find(|&i| !pieri_remove(lam, i).is_empty()).unwrap_or(0)
}

/// `s_a * s_b` via Jacobi-Trudi for `s_b` and repeated Pieri.
pub fn lr_product(a: &Partition, b: &Partition) -> VirtualSum<Partition> {
    let n = b.len();
    let mut out = VirtualSum::new();
    for perm in permutations(n) {
        // det(h_{b_i - i + j}) term for this permutation.
        let mut degrees = Vec::with_capacity(n);
        let mut ok = true;
        for (i, &j) in perm.iter().enumerate() {
            let d = b.part(i) as i64 - i as i64 + j as i64;
            if d < 0 {
                ok = false;
                break;
            }
            degrees.push(d as usize);
        }
        if !ok {
            continue;
        }
        let sign = if inversions(&perm).is_multiple_of(2) { 1 } else { -1 };
        let mut cur = single(a.clone());
        for d in degrees {
            cur = x_op(&cur, d);
        }
        for (p, m) in cur {
            vs_add(&mut out, p, sign * m);
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn inversions(p: &[usize]) -> usize {
    let mut c = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                c += 1;
            }
        }
    }
    c
}

/// Product in the bipartition ring, slotwise.
pub fn bip_product(a: &VirtualSum<Bipartition>, b: &VirtualSum<Bipartition>) -> VirtualSum<Bipartition> {
    let mut out = VirtualSum::new();
    for (x, &m) in a {
        for (y, &n) in b {
            let first = lr_product(&x.first, &y.first);
            let second = lr_product(&x.second, &y.second);
            for (p, i) in &first {
                for (q, j) in &second {
                    vs_add(&mut out, Bipartition::new(p.clone(), q.clone()), m * n * i * j);
                }
            }
        }
    }
    out
}

/// Tensoring with the sign-on-`t` character swaps the slots.
pub fn eps_twist(a: &VirtualSum<Bipartition>) -> VirtualSum<Bipartition> {
    a.iter().map(|(b, &m)| (b.swap(), m)).collect()
}

/// Theta lift: `sum_k X*_{l-k}(beta) x X_{l'-k}(alpha)`.
pub fn theta_lift(alpha: &Partition, beta: &Partition, l: usize, lp: usize) -> Result<VirtualSum<Bipartition>, Error> {
    if alpha.size() + beta.size() != l {
        return Err(Error::SizeMismatch { expected: l, got: alpha.size() + beta.size() });
    }
    let mut out = VirtualSum::new();
    for k in 0..=l.min(lp) {
        let left = pieri_remove(beta, l - k);
        let right = pieri_add(alpha, lp - k);
        for g in &left {
            for h in &right {
                vs_add(&mut out, Bipartition::new(g.clone(), h.clone()), 1);
            }
        }
    }
    Ok(out)
}

/// `chi_lam(rho)` by Murnaghan-Nakayama on beta-sets.
pub fn sn_char(lam: &Partition, rho: &Partition) -> Result<i64, Error> {
    if lam.size() != rho.size() {
        return Err(Error::SizeMismatch { expected: lam.size(), got: rho.size() });
    }
    let n = lam.len();
    let beta: Vec<usize> = (0..n).map(|i| lam.part(i) + n - 1 - i).collect();
    Ok(mn(&beta, rho.parts()))
}

fn mn(beta: &[usize], rho: &[usize]) -> i64 {
    let Some((&r, rest)) = rho.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&c| c > b - r && c < b).count();
        let mut nb = beta.to_vec();
        nb[idx] = b - r;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&nb, rest);
    }
    total
}

fn merge_partitions(a: &Partition, b: &Partition) -> Partition {
    let mut v = a.parts().to_vec();
    v.extend_from_slice(b.parts());
    Partition::new(v)
}

/// Conjugacy classes of `W_l` with sizes, plus character values of every
/// irreducible, realized as `Ind_{W_a x W_b}(alpha~ (x) (beta~ (x) eps_b))`.
#[derive(Clone, Debug)]
pub struct WlCharTable {
    pub l: usize,
    pub classes: Vec<(ClassType, usize)>,
    /// Smallest member of each class.
    pub reps: Vec<SignedPerm>,
    pub irreps: Vec<Bipartition>,
    /// `values[i][c]` for irrep `i`, class `c`.
    pub values: Vec<Vec<i64>>,
}

impl WlCharTable {
    pub fn new(l: usize) -> Self {
        let all = enum_classes(l);
        let reps = all.iter().map(|(_, w, _)| w.clone()).collect();
        let classes: Vec<(ClassType, usize)> = all.into_iter().map(|(c, _, n)| (c, n)).collect();
        let cindex: BTreeMap<ClassType, usize> = classes.iter().enumerate().map(|(i, c)| (c.0.clone(), i)).collect();
        let order = (1u128 << l) * factorial(l);
        let irreps = bipartitions_of(l);
        let small: Vec<_> = (0..=l).map(enum_classes).collect();
        let mut values = Vec::new();
        for bip in &irreps {
            let (a, b) = (bip.first.size(), bip.second.size());
            let (ca, cb) = (&small[a], &small[b]);
            let h_order = (1u128 << a) * factorial(a) * (1u128 << b) * factorial(b);
            // sum over h in H of psi(h), bucketed by the W_l class of h.
            let mut acc = vec![0i128; classes.len()];
            for (t1, _, n1) in ca {
                let chi_a = sn_char(&bip.first, &merge_partitions(&t1.positive, &t1.negative)).unwrap();
                for (t2, _, n2) in cb {
                    let chi_b = sn_char(&bip.second, &merge_partitions(&t2.positive, &t2.negative)).unwrap();
                    let eps = if t2.negative.len() % 2 == 0 { 1 } else { -1 };
                    let ct = ClassType {
                        positive: merge_partitions(&t1.positive, &t2.positive),
                        negative: merge_partitions(&t1.negative, &t2.negative),
                    };
                    acc[cindex[&ct]] += (*n1 as i128) * (*n2 as i128) * (chi_a * chi_b * eps) as i128;
                }
            }
            let row = acc
                .iter()
                .zip(&classes)
                .map(|(&s, (_, size))| {
                    let num = s * (order / h_order) as i128;
                    let den = *size as i128;
                    debug_assert_eq!(num % den, 0);
                    (num / den) as i64
                })
                .collect();
            values.push(row);
        }
        WlCharTable { l, classes, reps, irreps, values }
    }

    pub fn class_index(&self, c: &ClassType) -> Option<usize> {
        self.classes.iter().position(|x| &x.0 == c)
    }

    pub fn irrep_index(&self, b: &Bipartition) -> Option<usize> {
        self.irreps.iter().position(|x| x == b)
    }

    pub fn order(&self) -> i128 {
        ((1u128 << self.l) * factorial(self.l)) as i128
    }

    /// `<f, g>` for class functions given classwise.
    pub fn inner(&self, f: &[i64], g: &[i64]) -> (i128, i128) {
        let s: i128 = self.classes.iter().enumerate().map(|(c, (_, n))| *n as i128 * f[c] as i128 * g[c] as i128).sum();
        (s, self.order())
    }
}

pub fn wl_char(bip: &Bipartition, class: &ClassType) -> Result<i64, Error> {
    let l = bip.size();
    let cs = class.positive.size() + class.negative.size();
    if cs != l {
        return Err(Error::SizeMismatch { expected: l, got: cs });
    }
    let t = WlCharTable::new(l);
    let i = t.irrep_index(bip).ok_or(Error::IndexOutOfRange)?;
    let c = t.class_index(class).ok_or(Error::IndexOutOfRange)?;
    Ok(t.values[i][c])
}

/// Multiplicities of `A (x) B` in a class function on `W_l x W_{l'}` given on
/// class pairs `values[c][c']`.
pub fn decompose(
    left: &WlCharTable,
    right: &WlCharTable,
    values: &[Vec<i64>],
) -> Result<BTreeMap<(Bipartition, Bipartition), i64>, Error> {
    let order = left.order() * right.order();
    let mut out = BTreeMap::new();
    for (i, a) in left.irreps.iter().enumerate() {
        for (j, b) in right.irreps.iter().enumerate() {
            let mut s: i128 = 0;
            for (c, (_, n)) in left.classes.iter().enumerate() {
                for (d, (_, m)) in right.classes.iter().enumerate() {
                    s += (*n as i128)
                        * (*m as i128)
                        * (values[c][d] as i128)
                        * left.values[i][c] as i128
                        * right.values[j][d] as i128;
                }
            }
            if s % order != 0 || s < 0 {
                return Err(Error::Invalid(alloc::format!(
                    "non-character multiplicity {}/{} at {} (x) {}",
                    s,
                    order,
                    a,
                    b
                )));
            }
            if s != 0 {
                out.insert((a.clone(), b.clone()), (s / order) as i64);
            }
        }
    }
    // Reconstruction.
    for (c, _) in left.classes.iter().enumerate() {
        for (d, _) in right.classes.iter().enumerate() {
            let mut v = 0i64;
            for ((a, b), &m) in &out {
                v += m * left.values[left.irrep_index(a).unwrap()][c] * right.values[right.irrep_index(b).unwrap()][d];
            }
            if v != values[c][d] {
                return Err(Error::Invalid(alloc::format!("reconstruction fails on class pair ({}, {})", c, d)));
            }
        }
    }
    Ok(out)
}

/// The expected decomposition `sum_k sum_{g x h} (g x X_{l-k} h) (x) (h x X_{l'-k} g)`.
pub fn module_decomposition_formula(l: usize, lp: usize) -> BTreeMap<(Bipartition, Bipartition), i64> {
    let mut out = BTreeMap::new();
    for k in 0..=l.min(lp) {
        for gh in bipartitions_of(k) {
            for b in pieri_add(&gh.second, l - k) {
                for b2 in pieri_add(&gh.first, lp - k) {
                    let key = (Bipartition::new(gh.first.clone(), b.clone()), Bipartition::new(gh.second.clone(), b2));
                    *out.entry(key).or_insert(0) += 1;
                }
            }
        }
    }
    out
}
