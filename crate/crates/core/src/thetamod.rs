//! The generic bimodule over `H_{l,mu} (x) H_{l',-1-mu}`.
//!
//! Basis vectors are indexed by `(k, d1, d2, x)` with `d1` a minimal
//! representative of `S_l / (S_{l-k} x S_k)`, `d2` one of
//! `W_{l'} / (S_k x W_{l'-k})` and `x` in `S_k`. The vector `(k, d1, d2, x)`
//! is `T_{d1} T'_{d2} T'_x` applied to the grade-`k` generator.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bipartition::{decompose, Bipartition, WlCharTable};
use crate::hecke::add_term;
use crate::laurent::{HalfInt, LaurentPoly};
use crate::ring::{AtOne, Laurent, Ring};
use crate::weyl::{
    double_coset_decompose, s_range, symmetric_group, t_k, DoubleCoset, Gen, ParabolicSpec, SignedPerm, Transfer,
};
use crate::Error;

/// Sparse vector over basis positions.
pub type SVec<E> = BTreeMap<usize, E>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisIndex {
    pub k: usize,
    pub d1: SignedPerm,
    pub d2: SignedPerm,
    pub x: SignedPerm,
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I^{}[{}, {}, {}]", self.k, self.d1, self.d2, self.x)
    }
}

/// Module generators: `s_i`, `t_l` on the left factor, `s'_i`, `t'` on the right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    S(usize),
    T,
    Sp(usize),
    Tp,
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Op::S(i) => write!(f, "S{}", i),
            Op::T => f.write_str("T"),
            Op::Sp(i) => write!(f, "S'{}", i),
            Op::Tp => f.write_str("T'"),
        }
    }
}

impl Op {
    /// Twice the exponent of the quadratic parameter.
    pub fn param_twice(self, mu: HalfInt) -> i64 {
        match self {
            Op::S(_) | Op::Sp(_) => 2,
            Op::T => mu.twice,
            Op::Tp => -2 - mu.twice,
        }
    }

    pub fn is_left(self) -> bool {
        matches!(self, Op::S(_) | Op::T)
    }
}

/// Closed-form rank of grade `k`: `2^k l! l'! / ((l-k)! k! (l'-k)!)`.
pub fn grade_dim(l: usize, lp: usize, k: usize) -> u128 {
    use crate::weyl::factorial;
    if k > l.min(lp) {
        return 0;
    }
    (1u128 << k) * factorial(l) * factorial(lp) / (factorial(l - k) * factorial(k) * factorial(lp - k))
}

pub fn total_dim(l: usize, lp: usize) -> u128 {
    (0..=l.min(lp)).map(|k| grade_dim(l, lp, k)).sum()
}

#[derive(Clone, Debug)]
pub struct ThetaModule<R: Ring> {
    pub ring: R,
    pub l: usize,
    pub lp: usize,
    pub mu: HalfInt,
    basis: Vec<BasisIndex>,
    index: BTreeMap<BasisIndex, usize>,
    grade_dims: Vec<usize>,
    seed_fixed: Vec<Option<SVec<R::Elem>>>,
    seed_moved: Vec<Option<SVec<R::Elem>>>,
    seed_zero: Option<SVec<R::Elem>>,
}

impl<R: Ring> ThetaModule<R> {
    pub fn new(ring: R, l: usize, lp: usize, mu: HalfInt) -> Result<Self, Error> {
        let m = l.min(lp);
        let mut basis = Vec::new();
        let mut grade_dims = Vec::new();
        for k in 0..=m {
            let d1s = ParabolicSpec::AinA { l, k }.distinguished_reps()?;
            let d2s = ParabolicSpec::Mixed { lp, k }.distinguished_reps()?;
            let xs = symmetric_group(k);
            let before = basis.len();
            for d1 in &d1s {
                for d2 in &d2s {
                    for x in &xs {
                        basis.push(BasisIndex { k, d1: d1.clone(), d2: d2.clone(), x: x.clone() });
                    }
                }
            }
            grade_dims.push(basis.len() - before);
        }
        let index = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
        let mut me = ThetaModule {
            ring,
            l,
            lp,
            mu,
            basis,
            index,
            grade_dims,
            seed_fixed: vec![None; m + 1],
            seed_moved: vec![None; m + 1],
            seed_zero: None,
        };
        for k in 1..=m {
            me.seed_fixed[k] = Some(me.seed_t_on_generator(k)?);
            if k < l {
                me.seed_moved[k] = Some(me.seed_tk_on_generator(k)?);
            }
        }
        if l > 0 {
            me.seed_zero = Some(me.solve_grade_zero()?);
        }
        Ok(me)
    }

    pub fn basis(&self) -> &[BasisIndex] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn grade_dims(&self) -> &[usize] {
        &self.grade_dims
    }

    pub fn position(&self, b: &BasisIndex) -> Option<usize> {
        self.index.get(b).copied()
    }

    fn pos(&self, k: usize, d1: &SignedPerm, d2: &SignedPerm, x: &SignedPerm) -> usize {
        let b = BasisIndex { k, d1: d1.clone(), d2: d2.clone(), x: x.clone() };
        self.index[&b]
    }

    /// The grade-`k` generator `(k, e, e, e)`.
    pub fn generator_pos(&self, k: usize) -> usize {
        self.pos(k, &SignedPerm::identity(self.l), &SignedPerm::identity(self.lp), &SignedPerm::identity(k))
    }

    pub fn unit(&self, j: usize) -> SVec<R::Elem> {
        let mut v = SVec::new();
        v.insert(j, self.ring.one());
        v
    }

    pub fn ops(&self) -> Vec<Op> {
        let mut v: Vec<Op> = (1..self.l).map(Op::S).collect();
        if self.l > 0 {
            v.push(Op::T);
        }
        v.extend((1..self.lp).map(Op::Sp));
        if self.lp > 0 {
            v.push(Op::Tp);
        }
        v
    }

    fn nu_minus_one(&self, twice: i64) -> R::Elem {
        self.ring.sub(&self.ring.nu_half(twice), &self.ring.one())
    }

    fn push(&self, out: &mut SVec<R::Elem>, j: usize, c: R::Elem) {
        add_term(&self.ring, out, j, c);
    }

    /// `T_x T_s` (right) or `T_s T_x` (left) in the type A algebra of `S_k`.
    fn slot_mul(&self, x: &SignedPerm, j: usize, left: bool) -> Vec<(SignedPerm, R::Elem)> {
        let g = Gen::S(j);
        let xs = if left { x.left_gen(g) } else { x.right_gen(g) };
        if xs.length() > x.length() {
            vec![(xs, self.ring.one())]
        } else {
            vec![(xs, self.ring.nu_half(2)), (x.clone(), self.nu_minus_one(2))]
        }
    }

    /// `T_{s_i}` on basis vector `j`.
    fn left_s_column(&self, i: usize, j: usize) -> SVec<R::Elem> {
        let b = &self.basis[j];
        let r = &self.ring;
        let mut out = SVec::new();
        let spec = ParabolicSpec::AinA { l: self.l, k: b.k };
        match spec.deodhar_transfer(&b.d1, Gen::S(i)).expect("basis d1 is distinguished") {
            Transfer::InCoset { elem, ascending: true } => {
                self.push(&mut out, self.pos(b.k, &elem, &b.d2, &b.x), r.one())
            }
            Transfer::InCoset { elem, ascending: false } => {
                self.push(&mut out, self.pos(b.k, &elem, &b.d2, &b.x), r.nu_half(2));
                self.push(&mut out, j, self.nu_minus_one(2));
            }
            Transfer::Transfer(Gen::S(h)) if h < self.l - b.k => self.push(&mut out, j, r.nu_half(2)),
            Transfer::Transfer(Gen::S(h)) => {
                for (x, c) in self.slot_mul(&b.x, h - (self.l - b.k), false) {
                    self.push(&mut out, self.pos(b.k, &b.d1, &b.d2, &x), c);
                }
            }
            Transfer::Transfer(Gen::T) => unreachable!("no sign generator in S_l"),
        }
        out
    }

    /// `T'_{s'_i}` (`g = S(i)`) or `T'_{t'}` (`g = T`) on basis vector `j`.
    fn right_column(&self, g: Gen, j: usize) -> SVec<R::Elem> {
        let b = &self.basis[j];
        let r = &self.ring;
        let p = match g {
            Gen::S(_) => 2,
            Gen::T => -2 - self.mu.twice,
        };
        let mut out = SVec::new();
        let spec = ParabolicSpec::Mixed { lp: self.lp, k: b.k };
        match spec.deodhar_transfer(&b.d2, g).expect("basis d2 is distinguished") {
            Transfer::InCoset { elem, ascending: true } => {
                self.push(&mut out, self.pos(b.k, &b.d1, &elem, &b.x), r.one())
            }
            Transfer::InCoset { elem, ascending: false } => {
                self.push(&mut out, self.pos(b.k, &b.d1, &elem, &b.x), r.nu_half(p));
                self.push(&mut out, j, self.nu_minus_one(p));
            }
            Transfer::Transfer(Gen::S(h)) if h < b.k => {
                for (x, c) in self.slot_mul(&b.x, h, true) {
                    self.push(&mut out, self.pos(b.k, &b.d1, &b.d2, &x), c);
                }
            }
            Transfer::Transfer(Gen::S(_)) => self.push(&mut out, j, r.nu_half(2)),
            Transfer::Transfer(Gen::T) => self.push(&mut out, j, r.int(-1)),
        }
        out
    }

    /// Column `j` of an operator.
    pub fn column(&self, op: Op, j: usize) -> SVec<R::Elem> {
        match op {
            Op::S(i) => self.left_s_column(i, j),
            Op::T => self.t_column(j),
            Op::Sp(i) => self.right_column(Gen::S(i), j),
            Op::Tp => self.right_column(Gen::T, j),
        }
    }

    /// Applies an operator given by its column function.
    pub fn act(&self, op: Op, v: &SVec<R::Elem>) -> SVec<R::Elem> {
        let mut out = SVec::new();
        for (&j, c) in v {
            for (i, a) in self.column(op, j) {
                self.push(&mut out, i, self.ring.mul(&a, c));
            }
        }
        out
    }

    /// `T_g^(-1) = v_g^(-1) T_g + (v_g^(-1) - 1)`.
    pub fn act_inv(&self, op: Op, v: &SVec<R::Elem>) -> SVec<R::Elem> {
        let p = op.param_twice(self.mu);
        let r = &self.ring;
        let inv = r.nu_half(-p);
        let mut out = scale(r, &self.act(op, v), &inv);
        axpy(r, &mut out, &r.sub(&inv, &r.one()), v);
        out
    }

    /// `T_w` on the left factor, `w` in `S_l` (or `W_l` when `t_l` is available).
    pub fn act_left_elem(&self, w: &SignedPerm, v: &SVec<R::Elem>) -> SVec<R::Elem> {
        let mut v = v.clone();
        for g in w.reduced_word().into_iter().rev() {
            let op = match g {
                Gen::S(i) => Op::S(i),
                Gen::T => Op::T,
            };
            v = self.act(op, &v);
        }
        v
    }

    /// `T'_w` on the right factor, `w` in `W_{l'}`.
    pub fn act_right_elem(&self, w: &SignedPerm, v: &SVec<R::Elem>) -> SVec<R::Elem> {
        let mut v = v.clone();
        for g in w.reduced_word().into_iter().rev() {
            let op = match g {
                Gen::S(i) => Op::Sp(i),
                Gen::T => Op::Tp,
            };
            v = self.act(op, &v);
        }
        v
    }

    /// `T_{d1} T'_{d2} T'_x` on the grade-`k` generator, for any `d1` in
    /// `S_l`, `d2` in `W_{l'}`, `x` in `S_k`.
    pub fn standard(&self, k: usize, d1: &SignedPerm, d2: &SignedPerm, x: &SignedPerm) -> SVec<R::Elem> {
        let start = self.unit(self.pos(k, &SignedPerm::identity(self.l), &SignedPerm::identity(self.lp), x));
        let v = self.act_right_elem(d2, &start);
        self.act_left_elem(d1, &v)
    }

    /// `T_{t_l}` on the grade-`k` generator, `1 <= k <= min(l, l')`.
    fn seed_t_on_generator(&self, k: usize) -> Result<SVec<R::Elem>, Error> {
        let (l, lp, mu) = (self.l, self.lp, self.mu.twice);
        let r = &self.ring;
        let e_l = SignedPerm::identity(l);
        let e_lp = SignedPerm::identity(lp);
        let e_k = SignedPerm::identity(k);
        let base = 2 * (k as i64 - lp as i64);
        let mut out = SVec::new();
        // -v^(k-l'+mu) I^k[1, t'_k, 1]
        axpy(r, &mut out, &r.mono(base + mu, -1), &self.standard(k, &e_l, &t_k(lp, k)?, &e_k));
        // (1-v) v^(k-l') times the bracket, sign folded in.
        let one_minus_nu = r.sub(&r.one(), &r.nu_half(2));
        let pre = r.mul(&one_minus_nu, &r.nu_half(base));
        let c_tp = r.neg(&r.mul(&pre, &r.nu_half(mu)));
        let c_rest = r.mul(&pre, &r.nu_half(-2));
        for i in k + 1..=lp {
            let d2 = t_k(lp, i)?.compose(&s_range(lp, k, i)?);
            axpy(r, &mut out, &c_tp, &self.standard(k, &e_l, &d2, &e_k));
        }
        let d1 = s_range(l, l - k + 1, l)?;
        axpy(r, &mut out, &c_rest, &self.standard(k - 1, &d1, &e_lp, &SignedPerm::identity(k - 1)));
        for i in k..=lp {
            axpy(r, &mut out, &c_rest, &self.standard(k, &e_l, &s_range(lp, k, i)?, &e_k));
        }
        Ok(out)
    }

    /// `T_{t_{l-k}}` on the grade-`k` generator, `1 <= k < l`, `k <= l'`.
    fn seed_tk_on_generator(&self, k: usize) -> Result<SVec<R::Elem>, Error> {
        let (l, lp, mu) = (self.l, self.lp, self.mu.twice);
        let r = &self.ring;
        let e_l = SignedPerm::identity(l);
        let e_lp = SignedPerm::identity(lp);
        let base = 2 * (k as i64 - lp as i64);
        let mut out = SVec::new();
        axpy(r, &mut out, &r.mono(4 * k as i64 - 2 * lp as i64, -1), &self.unit(self.generator_pos(k)));
        if k < lp {
            let x = s_range(k + 1, 1, k)?;
            for i in k + 1..=lp {
                let s = s_range(lp, k, i)?;
                axpy(r, &mut out, &r.mono(base, -1), &self.standard(k + 1, &e_l, &s, &x));
                let d2 = t_k(lp, i)?.compose(&s);
                axpy(r, &mut out, &r.mono(base + mu + 2, 1), &self.standard(k + 1, &e_l, &d2, &x));
            }
        }
        // -v^(k-l') (v-1) sum_i v^(k-i) I^k[s_{l-k,l-k+i}, 1, s'_{1,i}]
        for i in 1..=k {
            let c = r.mul(&self.nu_minus_one(2), &r.mono(base + 2 * (k - i) as i64, -1));
            let d1 = s_range(l, l - k, l - k + i)?;
            axpy(r, &mut out, &c, &self.standard(k, &d1, &e_lp, &s_range(k, 1, i)?));
        }
        Ok(out)
    }

    /// `T_{t_l}` on the grade-0 vector, determined by the quadratic relation
    /// on the grade-1 generator `e1`. With `T e1 = c e0 + w`:
    /// `T e0 = ((v^mu - 1) T e1 + v^mu e1 - T w) / c`.
    fn solve_grade_zero(&self) -> Result<SVec<R::Elem>, Error> {
        let r = &self.ring;
        if self.lp == 0 {
            let mut v = SVec::new();
            v.insert(0, r.int(-1));
            return Ok(v);
        }
        let e1 = self.generator_pos(1);
        let te1 = self.t_column(e1);
        let c = te1.get(&0).cloned().unwrap_or_else(|| r.zero());
        let mut w = te1.clone();
        w.remove(&0);
        let tw = self.act(Op::T, &w);
        let p = r.nu_half(self.mu.twice);
        let mut num = scale(r, &te1, &r.sub(&p, &r.one()));
        self.push(&mut num, e1, p);
        axpy(r, &mut num, &r.int(-1), &tw);
        let mut out = SVec::new();
        for (j, a) in num {
            let q = r
                .div(&a, &c)
                .ok_or_else(|| Error::Invalid(String::from("grade-0 column is not defined over this ring")))?;
            self.push(&mut out, j, q);
        }
        Ok(out)
    }

    /// The printed seed vectors, for inspection.
    pub fn seed_fixed(&self, k: usize) -> Option<&SVec<R::Elem>> {
        self.seed_fixed.get(k).and_then(Option::as_ref)
    }

    pub fn seed_moved(&self, k: usize) -> Option<&SVec<R::Elem>> {
        self.seed_moved.get(k).and_then(Option::as_ref)
    }

    pub fn seed_zero(&self) -> Option<&SVec<R::Elem>> {
        self.seed_zero.as_ref()
    }

    /// `T_{t_l}` on basis vector `j`.
    fn t_column(&self, j: usize) -> SVec<R::Elem> {
        let b = &self.basis[j];
        let v = if b.k == 0 {
            self.seed_zero.clone().expect("grade-0 seed is solved at construction")
        } else {
            match double_coset_decompose(&b.d1, self.l, b.k).expect("basis d1 is distinguished") {
                DoubleCoset::Fixed => {
                    let s = self.seed_fixed[b.k].as_ref().expect("seed for grade");
                    self.act_left_elem(&b.d1, s)
                }
                DoubleCoset::Moved { y } => {
                    let mut v = self.seed_moved[b.k].clone().expect("seed for grade");
                    for i in self.l - b.k..self.l {
                        v = self.act_inv(Op::S(i), &v);
                    }
                    self.act_left_elem(&y, &v)
                }
            }
        };
        let x = b.x.embed(self.lp, 0);
        self.act_right_elem(&b.d2.compose(&x), &v)
    }

    /// Dense-by-column operator matrix.
    pub fn operator_matrix(&self, op: Op) -> Matrix<R::Elem> {
        Matrix { cols: (0..self.dim()).map(|j| self.column(op, j)).collect() }
    }

    pub fn operator_matrices(&self) -> BTreeMap<Op, Matrix<R::Elem>> {
        self.ops().into_iter().map(|op| (op, self.operator_matrix(op))).collect()
    }

    /// Defining relations of `H (x) H'` as linear combinations of words.
    pub fn relations(&self) -> Vec<Relation> {
        relations_for(self.l, self.lp, self.mu)
    }

    /// Checks every relation on every column, in order.
    pub fn verify_relations(&self) -> RelationReport {
        let mats = self.operator_matrices();
        let mut results = Vec::new();
        for rel in self.relations() {
            let mut failure = None;
            for j in 0..self.dim() {
                if let Some((row, res)) = relation_residual(&self.ring, &mats, &rel, j) {
                    failure = Some(Failure { column: j, row, residual: format!("{:?}", res) });
                    break;
                }
            }
            results.push(RelationResult { name: rel.name.clone(), failure });
        }
        RelationReport { results }
    }
}

impl ThetaModule<Laurent> {
    /// Entrywise specialization of an operator matrix.
    pub fn specialize_matrix<S: Ring>(m: &Matrix<LaurentPoly>, target: &S) -> Matrix<S::Elem> {
        Matrix {
            cols: m
                .cols
                .iter()
                .map(|c| {
                    let mut out = SVec::new();
                    for (&i, a) in c {
                        add_term(target, &mut out, i, target.embed(a));
                    }
                    out
                })
                .collect(),
        }
    }

    /// Integer generator matrices at `v = 1`.
    pub fn specialize_nu1(&self) -> BTreeMap<Op, Matrix<i128>> {
        self.operator_matrices().iter().map(|(&op, m)| (op, Self::specialize_matrix(m, &AtOne))).collect()
    }

    /// Character of the `W_l x W_{l'}` representation at `v = 1`, on the
    /// class pairs of the two tables.
    pub fn character_nu1(&self, left: &WlCharTable, right: &WlCharTable) -> Result<Vec<Vec<i64>>, Error> {
        if left.l != self.l || right.l != self.lp {
            return Err(Error::RankMismatch(left.l, right.l));
        }
        let mats = self.specialize_nu1();
        let word = |w: &SignedPerm, primed: bool| -> Vec<Op> {
            w.reduced_word()
                .into_iter()
                .map(|g| match (g, primed) {
                    (Gen::S(i), false) => Op::S(i),
                    (Gen::T, false) => Op::T,
                    (Gen::S(i), true) => Op::Sp(i),
                    (Gen::T, true) => Op::Tp,
                })
                .collect()
        };
        let mut out = Vec::with_capacity(left.reps.len());
        for w in &left.reps {
            let mut row = Vec::with_capacity(right.reps.len());
            for wp in &right.reps {
                let mut ops = word(w, false);
                ops.extend(word(wp, true));
                let mut tr: i128 = 0;
                for j in 0..self.dim() {
                    let mut v: SVec<i128> = SVec::from([(j, 1)]);
                    for op in ops.iter().rev() {
                        v = mats[op].apply(&AtOne, &v);
                    }
                    tr += v.get(&j).copied().unwrap_or(0);
                }
                row.push(tr as i64);
            }
            out.push(row);
        }
        Ok(out)
    }

    /// Multiplicities of the irreducibles of `W_l x W_{l'}` at `v = 1`.
    pub fn decompose_nu1(&self) -> Result<BTreeMap<(Bipartition, Bipartition), i64>, Error> {
        let (left, right) = (WlCharTable::new(self.l), WlCharTable::new(self.lp));
        let chi = self.character_nu1(&left, &right)?;
        decompose(&left, &right, &chi)
    }
}

/// Operator matrix stored as sparse columns.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<E> {
    pub cols: Vec<SVec<E>>,
}

impl<E: Clone> Matrix<E> {
    pub fn apply<R: Ring<Elem = E>>(&self, ring: &R, v: &SVec<E>) -> SVec<E> {
        let mut out = SVec::new();
        for (&j, c) in v {
            for (&i, a) in &self.cols[j] {
                add_term(ring, &mut out, i, ring.mul(a, c));
            }
        }
        out
    }
}

pub fn scale<R: Ring>(r: &R, v: &SVec<R::Elem>, c: &R::Elem) -> SVec<R::Elem> {
    let mut out = SVec::new();
    for (&j, a) in v {
        add_term(r, &mut out, j, r.mul(a, c));
    }
    out
}

/// `out += c * v`.
pub fn axpy<R: Ring>(r: &R, out: &mut SVec<R::Elem>, c: &R::Elem, v: &SVec<R::Elem>) {
    for (&j, a) in v {
        add_term(r, out, j, r.mul(a, c));
    }
}

/// `sum_i c_i * word_i = 0`; words act right to left.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub name: String,
    pub terms: Vec<(LaurentPoly, Vec<Op>)>,
}

pub fn relations_for(l: usize, lp: usize, mu: HalfInt) -> Vec<Relation> {
    let mut ops: Vec<Op> = (1..l).map(Op::S).collect();
    if l > 0 {
        ops.push(Op::T);
    }
    let left = ops.clone();
    let right: Vec<Op> = (1..lp).map(Op::Sp).chain((lp > 0).then_some(Op::Tp)).collect();
    let one = LaurentPoly::one();
    let mut out = Vec::new();
    for &g in left.iter().chain(right.iter()) {
        let p = LaurentPoly::monomial(g.param_twice(mu), 1);
        out.push(Relation {
            name: format!("quadratic {}", g),
            terms: vec![(one.clone(), vec![g, g]), (-(&p - &one), vec![g]), (-p, vec![])],
        });
    }
    for (side, gens) in [(0, &left), (1, &right)] {
        for (a_i, &a) in gens.iter().enumerate() {
            for &b in &gens[a_i + 1..] {
                let m = braid_order(a, b, if side == 0 { l } else { lp });
                let (wa, wb): (Vec<Op>, Vec<Op>) = (
                    (0..m).map(|i| if i % 2 == 0 { a } else { b }).collect(),
                    (0..m).map(|i| if i % 2 == 0 { b } else { a }).collect(),
                );
                let name = match m {
                    2 => format!("commute {} {}", a, b),
                    _ => format!("braid{} {} {}", m, a, b),
                };
                out.push(Relation { name, terms: vec![(one.clone(), wa), (-&one, wb)] });
            }
        }
    }
    for &a in &left {
        for &b in &right {
            out.push(Relation {
                name: format!("commute {} {}", a, b),
                terms: vec![(one.clone(), vec![a, b]), (-&one, vec![b, a])],
            });
        }
    }
    out
}

fn braid_order(a: Op, b: Op, rank: usize) -> usize {
    let idx = |o: Op| match o {
        Op::S(i) | Op::Sp(i) => i,
        Op::T | Op::Tp => rank,
    };
    let (i, j) = (idx(a), idx(b));
    let tee = matches!(a, Op::T | Op::Tp) || matches!(b, Op::T | Op::Tp);
    match i.abs_diff(j) {
        1 if tee => 4,
        1 => 3,
        _ => 2,
    }
}

/// First nonzero row of the relation applied to basis vector `j`.
pub fn relation_residual<R: Ring>(
    ring: &R,
    mats: &BTreeMap<Op, Matrix<R::Elem>>,
    rel: &Relation,
    j: usize,
) -> Option<(usize, R::Elem)> {
    let mut total = SVec::new();
    for (c, word) in &rel.terms {
        let mut v = SVec::new();
        v.insert(j, ring.one());
        for op in word.iter().rev() {
            v = mats[op].apply(ring, &v);
        }
        axpy(ring, &mut total, &ring.embed(c), &v);
    }
    total.into_iter().next()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub column: usize,
    pub row: usize,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationResult {
    pub name: String,
    pub failure: Option<Failure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RelationReport {
    pub results: Vec<RelationResult>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.failure.is_none())
    }
}
