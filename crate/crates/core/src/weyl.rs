//! The hyperoctahedral group `W_l` as signed permutations.
//!
//! `images[i] = w(i + 1)`, composition is `(uv)(i) = u(v(i))`. Simple
//! reflections are `s_i` (swap positions `i`, `i+1`) and `t` (negate
//! position `l`).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::partition::Partition;
use crate::Error;

/// A simple reflection. `S(i)` is `s_i` for `1 <= i < l`; `T` is `t_l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    S(usize),
    T,
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::S(i) => write!(f, "s{}", i),
            Gen::T => f.write_str("t"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    images: Vec<i32>,
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

impl SignedPerm {
    pub fn identity(l: usize) -> Self {
        SignedPerm { images: (1..=l as i32).collect() }
    }

    pub fn from_images(images: Vec<i32>) -> Result<Self, Error> {
        let l = images.len();
        let mut seen = vec![false; l + 1];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > l || seen[a] {
                return Err(Error::InvalidPerm);
            }
            seen[a] = true;
        }
        Ok(SignedPerm { images })
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i as i32 + 1)
    }

    /// `w(i)` for `i` in `±1..=±l`.
    pub fn apply(&self, i: i32) -> i32 {
        let v = self.images[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn mul(&self, o: &SignedPerm) -> Result<SignedPerm, Error> {
        if self.rank() != o.rank() {
            return Err(Error::RankMismatch(self.rank(), o.rank()));
        }
        Ok(self.compose(o))
    }

    pub(crate) fn compose(&self, o: &SignedPerm) -> SignedPerm {
        SignedPerm { images: o.images.iter().map(|&i| self.apply(i)).collect() }
    }

    pub fn inv(&self) -> SignedPerm {
        let mut images = vec![0; self.rank()];
        for (i, &x) in self.images.iter().enumerate() {
            let v = i as i32 + 1;
            images[x.unsigned_abs() as usize - 1] = if x < 0 { -v } else { v };
        }
        SignedPerm { images }
    }

    pub fn num_negative(&self) -> usize {
        self.images.iter().filter(|&&x| x < 0).count()
    }

    /// True if `w` lies in `S_l` (no sign changes).
    pub fn is_unsigned(&self) -> bool {
        self.images.iter().all(|&x| x > 0)
    }

    /// Coxeter length for `{s_1, .., s_{l-1}, t_l}`.
    pub fn length(&self) -> usize {
        // Mirror i -> l+1-i so the sign generator sits at position 1, then
        // use inv(v) - sum of negative values.
        let l = self.rank() as i32;
        let m = |x: i32| if x < 0 { -(l + 1 + x) } else { l + 1 - x };
        let v: Vec<i32> = (1..=l).map(|j| m(self.apply(m(j)))).collect();
        let mut len = 0i64;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    len += 1;
                }
            }
            if v[i] < 0 {
                len -= v[i] as i64;
            }
        }
        len as usize
    }

    /// `g * self`.
    pub fn left_gen(&self, g: Gen) -> SignedPerm {
        let mut images = self.images.clone();
        match g {
            Gen::S(i) => {
                let (a, b) = (i as i32, i as i32 + 1);
                for x in images.iter_mut() {
                    let s = x.signum();
                    if x.abs() == a {
                        *x = s * b;
                    } else if x.abs() == b {
                        *x = s * a;
                    }
                }
            }
            Gen::T => {
                let l = self.rank() as i32;
                for x in images.iter_mut() {
                    if x.abs() == l {
                        *x = -*x;
                    }
                }
            }
        }
        SignedPerm { images }
    }

    /// `self * g`.
    pub fn right_gen(&self, g: Gen) -> SignedPerm {
        let mut images = self.images.clone();
        match g {
            Gen::S(i) => images.swap(i - 1, i),
            Gen::T => {
                let l = self.rank();
                images[l - 1] = -images[l - 1];
            }
        }
        SignedPerm { images }
    }

    pub fn generator(l: usize, g: Gen) -> SignedPerm {
        SignedPerm::identity(l).right_gen(g)
    }

    pub fn from_word(l: usize, word: &[Gen]) -> SignedPerm {
        word.iter().fold(SignedPerm::identity(l), |w, &g| w.right_gen(g))
    }

    pub fn generators(l: usize) -> Vec<Gen> {
        let mut v: Vec<Gen> = (1..l).map(Gen::S).collect();
        if l > 0 {
            v.push(Gen::T);
        }
        v
    }

    /// Reduced word `g_1 .. g_r` with `w = g_1 * .. * g_r`, peeling left
    /// descents lowest generator first.
    pub fn reduced_word(&self) -> Vec<Gen> {
        let l = self.rank();
        let gens = Self::generators(l);
        let mut w = self.clone();
        let mut len = w.length();
        let mut word = Vec::with_capacity(len);
        while len > 0 {
            let (g, next) = gens
                .iter()
                .map(|&g| (g, w.left_gen(g)))
                .find(|(_, n)| n.length() < len)
                .expect("non-identity element has a left descent");
            word.push(g);
            w = next;
            len -= 1;
        }
        word
    }

    pub fn has_right_descent(&self, g: Gen) -> bool {
        self.right_gen(g).length() < self.length()
    }

    /// Signed cycle type.
    pub fn class_type(&self) -> ClassType {
        let l = self.rank();
        let mut seen = vec![false; l + 1];
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for start in 1..=l {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut sign = 1;
            let mut i = start as i32;
            while !seen[i as usize] {
                seen[i as usize] = true;
                let v = self.apply(i);
                sign *= v.signum();
                i = v.abs();
                len += 1;
            }
            if sign > 0 {
                pos.push(len);
            } else {
                neg.push(len);
            }
        }
        ClassType { positive: Partition::new(pos), negative: Partition::new(neg) }
    }

    /// Embeds a rank-`k` element acting on positions `offset+1 ..= offset+k`.
    pub fn embed(&self, l: usize, offset: usize) -> SignedPerm {
        let mut w = SignedPerm::identity(l);
        for (i, &x) in self.images.iter().enumerate() {
            w.images[offset + i] = x.signum() * (x.abs() + offset as i32);
        }
        w
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", x)?;
        }
        f.write_str("]")
    }
}

/// Length first, then images lexicographically.
impl Ord for SignedPerm {
    fn cmp(&self, o: &Self) -> Ordering {
        self.rank().cmp(&o.rank()).then_with(|| self.length().cmp(&o.length())).then_with(|| self.images.cmp(&o.images))
    }
}

impl PartialOrd for SignedPerm {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Conjugacy-class label: cycle lengths of positive and negative cycles.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassType {
    pub positive: Partition,
    pub negative: Partition,
}

fn permutations(n: usize) -> Vec<Vec<i32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n as i32);
            out.push(q);
        }
    }
    out
}

/// All of `S_l` inside `W_l`, sorted.
pub fn symmetric_group(l: usize) -> Vec<SignedPerm> {
    let mut v: Vec<SignedPerm> = permutations(l).into_iter().map(|images| SignedPerm { images }).collect();
    v.sort();
    v
}

/// All of `W_l`, sorted.
pub fn hyperoctahedral_group(l: usize) -> Vec<SignedPerm> {
    let mut v = Vec::with_capacity((1usize << l) * permutations(l).len());
    for p in permutations(l) {
        for mask in 0u32..(1 << l) {
            let images = p.iter().enumerate().map(|(i, &x)| if mask >> i & 1 == 1 { -x } else { x }).collect();
            v.push(SignedPerm { images });
        }
    }
    v.sort();
    v
}

/// Conjugacy classes of `W_l`: `(type, smallest member, size)` sorted by type.
pub fn enum_classes(l: usize) -> Vec<(ClassType, SignedPerm, usize)> {
    let mut map: BTreeMap<ClassType, (SignedPerm, usize)> = BTreeMap::new();
    for w in hyperoctahedral_group(l) {
        let e = map.entry(w.class_type()).or_insert((w, 0));
        e.1 += 1;
    }
    map.into_iter().map(|(c, (w, n))| (c, w, n)).collect()
}

/// `t_k`: the sign change at position `k`, `s_k .. s_{l-1} t s_{l-1} .. s_k`.
pub fn t_k(l: usize, k: usize) -> Result<SignedPerm, Error> {
    if k == 0 || k > l {
        return Err(Error::IndexOutOfRange);
    }
    let mut word: Vec<Gen> = (k..l).map(Gen::S).collect();
    word.push(Gen::T);
    word.extend((k..l).rev().map(Gen::S));
    Ok(SignedPerm::from_word(l, &word))
}

/// `s_{i,j} = s_{j-1} .. s_i`, identity when `i == j`.
pub fn s_range(l: usize, i: usize, j: usize) -> Result<SignedPerm, Error> {
    if i == 0 || i > j || j > l {
        return Err(Error::IndexOutOfRange);
    }
    let word: Vec<Gen> = (i..j).rev().map(Gen::S).collect();
    Ok(SignedPerm::from_word(l, &word))
}

/// `s_{l-1} .. s_{l-k}`.
pub fn w2(l: usize, k: usize) -> Result<SignedPerm, Error> {
    if k == 0 || k >= l {
        return Err(Error::IndexOutOfRange);
    }
    let word: Vec<Gen> = (l - k..l).rev().map(Gen::S).collect();
    Ok(SignedPerm::from_word(l, &word))
}

/// Parabolic subgroups whose left cosets index the module basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParabolicSpec {
    /// `S_{l-k} x S_k` inside `S_l`.
    AinA { l: usize, k: usize },
    /// `S_k x W_{l'-k}` inside `W_{l'}`.
    Mixed { lp: usize, k: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transfer {
    InCoset { elem: SignedPerm, ascending: bool },
    Transfer(Gen),
}

impl ParabolicSpec {
    pub fn rank(&self) -> usize {
        match *self {
            ParabolicSpec::AinA { l, .. } => l,
            ParabolicSpec::Mixed { lp, .. } => lp,
        }
    }

    pub fn grade(&self) -> usize {
        match *self {
            ParabolicSpec::AinA { k, .. } | ParabolicSpec::Mixed { k, .. } => k,
        }
    }

    /// Simple generators of the parabolic.
    pub fn parabolic_gens(&self) -> Vec<Gen> {
        match *self {
            ParabolicSpec::AinA { l, k } => (1..l).filter(|&j| j != l - k).map(Gen::S).collect(),
            ParabolicSpec::Mixed { lp, k } => {
                let mut v: Vec<Gen> = (1..lp).filter(|&j| j != k).map(Gen::S).collect();
                if k < lp {
                    v.push(Gen::T);
                }
                v
            }
        }
    }

    /// Generators of the ambient group.
    pub fn ambient_gens(&self) -> Vec<Gen> {
        match *self {
            ParabolicSpec::AinA { l, .. } => (1..l).map(Gen::S).collect(),
            ParabolicSpec::Mixed { lp, .. } => SignedPerm::generators(lp),
        }
    }

    fn valid(&self) -> bool {
        self.grade() <= self.rank()
    }

    pub fn is_distinguished(&self, d: &SignedPerm) -> bool {
        if d.rank() != self.rank() {
            return false;
        }
        if matches!(self, ParabolicSpec::AinA { .. }) && !d.is_unsigned() {
            return false;
        }
        let len = d.length();
        self.parabolic_gens().into_iter().all(|g| d.right_gen(g).length() > len)
    }

    /// Minimal-length left coset representatives, sorted.
    pub fn distinguished_reps(&self) -> Result<Vec<SignedPerm>, Error> {
        if !self.valid() {
            return Err(Error::IndexOutOfRange);
        }
        let group = match *self {
            ParabolicSpec::AinA { l, .. } => symmetric_group(l),
            ParabolicSpec::Mixed { lp, .. } => hyperoctahedral_group(lp),
        };
        Ok(group.into_iter().filter(|d| self.is_distinguished(d)).collect())
    }

    /// Deodhar's dichotomy for `g * d`.
    pub fn deodhar_transfer(&self, d: &SignedPerm, g: Gen) -> Result<Transfer, Error> {
        if !self.is_distinguished(d) {
            return Err(Error::NotDistinguished);
        }
        let gd = d.left_gen(g);
        if self.is_distinguished(&gd) {
            let ascending = gd.length() > d.length();
            return Ok(Transfer::InCoset { elem: gd, ascending });
        }
        let h = d.inv().compose(&gd);
        let l = self.rank();
        self.parabolic_gens()
            .into_iter()
            .find(|&j| SignedPerm::generator(l, j) == h)
            .map(Transfer::Transfer)
            .ok_or(Error::NotDistinguished)
    }
}

/// Which double coset `(S_{l-1} x S_1) w (S_{l-k} x S_k)` holds `d1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DoubleCoset {
    /// `d1` fixes position `l`.
    Fixed,
    /// `d1 = y * w2(k)` with lengths adding.
    Moved { y: SignedPerm },
}

pub fn double_coset_decompose(d1: &SignedPerm, l: usize, k: usize) -> Result<DoubleCoset, Error> {
    let spec = ParabolicSpec::AinA { l, k };
    if !spec.is_distinguished(d1) {
        return Err(Error::NotDistinguished);
    }
    if l == 0 || d1.apply(l as i32) == l as i32 {
        return Ok(DoubleCoset::Fixed);
    }
    let w = w2(l, k)?;
    let y = d1.compose(&w.inv());
    debug_assert_eq!(y.length() + w.length(), d1.length());
    Ok(DoubleCoset::Moved { y })
}

/// `C(n, k)` as an exact integer.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}
