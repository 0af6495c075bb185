//! Generic Iwahori-Hecke algebras of type BC and their type A subalgebra.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::laurent::HalfInt;
use crate::ring::Ring;
use crate::weyl::{Gen, SignedPerm};
use crate::Error;

/// Which parameter the sign generator carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// `t` has parameter `v^mu`.
    BC,
    /// Only `s_1 .. s_{l-1}`.
    A,
    /// `t` has parameter `v^(-1-mu)`.
    BCPrime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HeckeParams {
    pub rank: usize,
    pub mu: HalfInt,
    pub flavor: Flavor,
}

impl HeckeParams {
    pub fn bc(rank: usize, mu: HalfInt) -> Self {
        HeckeParams { rank, mu, flavor: Flavor::BC }
    }

    pub fn bc_prime(rank: usize, mu: HalfInt) -> Self {
        HeckeParams { rank, mu, flavor: Flavor::BCPrime }
    }

    pub fn type_a(rank: usize) -> Self {
        HeckeParams { rank, mu: HalfInt::ZERO, flavor: Flavor::A }
    }

    /// Twice the exponent of the parameter of `t`.
    pub fn t_twice(&self) -> Option<i64> {
        match self.flavor {
            Flavor::BC => Some(self.mu.twice),
            Flavor::BCPrime => Some(-2 - self.mu.twice),
            Flavor::A => None,
        }
    }

    /// Twice the exponent of the parameter of `g`.
    pub fn param_twice(&self, g: Gen) -> Result<i64, Error> {
        match g {
            Gen::S(i) if i >= 1 && i < self.rank => Ok(2),
            Gen::T if self.rank > 0 => self.t_twice().ok_or(Error::BadGenerator(g)),
            _ => Err(Error::BadGenerator(g)),
        }
    }

    pub fn generators(&self) -> Vec<Gen> {
        match self.flavor {
            Flavor::A => (1..self.rank).map(Gen::S).collect(),
            _ => SignedPerm::generators(self.rank),
        }
    }
}

/// Finitely supported `W_l -> coefficients`, keyed in the group order.
#[derive(Clone, Debug, PartialEq)]
pub struct HeckeElem<E> {
    pub terms: BTreeMap<SignedPerm, E>,
}

impl<E> Default for HeckeElem<E> {
    fn default() -> Self {
        HeckeElem { terms: BTreeMap::new() }
    }
}

impl<E> HeckeElem<E> {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `map[key] += c`, dropping zeros.
pub fn add_term<K: Ord, R: Ring>(ring: &R, map: &mut BTreeMap<K, R::Elem>, key: K, c: R::Elem) {
    if ring.is_zero(&c) {
        return;
    }
    use alloc::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = ring.add(o.get(), &c);
            if ring.is_zero(&s) {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// Algebra context: a coefficient ring plus parameters.
#[derive(Clone, Debug)]
pub struct HeckeAlgebra<R: Ring> {
    pub ring: R,
    pub params: HeckeParams,
}

impl<R: Ring> HeckeAlgebra<R> {
    pub fn new(ring: R, params: HeckeParams) -> Self {
        HeckeAlgebra { ring, params }
    }

    fn check(&self, w: &SignedPerm) -> Result<(), Error> {
        if w.rank() != self.params.rank {
            return Err(Error::RankMismatch(self.params.rank, w.rank()));
        }
        if self.params.flavor == Flavor::A && !w.is_unsigned() {
            return Err(Error::BadGenerator(Gen::T));
        }
        Ok(())
    }

    /// Checks the quadratic and braid relations on the left regular
    /// representation, one `(name, holds)` entry per relation.
    pub fn relation_report(&self) -> Result<Vec<(String, bool)>, Error> {
        let r = &self.ring;
        let l = self.params.rank;
        let group = match self.params.flavor {
            Flavor::A => crate::weyl::symmetric_group(l),
            _ => crate::weyl::hyperoctahedral_group(l),
        };
        let gens = self.params.generators();
        let apply = |word: &[Gen], a: &HeckeElem<R::Elem>| -> Result<HeckeElem<R::Elem>, Error> {
            let mut v = a.clone();
            for &g in word.iter().rev() {
                v = self.mul_gen(&v, g, true)?;
            }
            Ok(v)
        };
        let mut out = Vec::new();
        for &g in &gens {
            let p = r.nu_half(self.params.param_twice(g)?);
            let mut holds = true;
            for w in &group {
                let b = self.basis(w)?;
                let gg = apply(&[g, g], &b)?;
                let g1 = apply(&[g], &b)?;
                let rhs = self.add(&self.scale(&g1, &r.sub(&p, &r.one())), &self.scale(&b, &p));
                holds &= self.sub(&gg, &rhs).is_zero();
            }
            out.push((format!("quadratic {}", g), holds));
        }
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                let m = match (a, b) {
                    (Gen::S(x), Gen::S(y)) if x.abs_diff(y) == 1 => 3,
                    (Gen::S(x), Gen::T) | (Gen::T, Gen::S(x)) if x + 1 == l => 4,
                    _ => 2,
                };
                let left: Vec<Gen> = (0..m).map(|j| if j % 2 == 0 { a } else { b }).collect();
                let right: Vec<Gen> = (0..m).map(|j| if j % 2 == 0 { b } else { a }).collect();
                let mut holds = true;
                for w in &group {
                    let e = self.basis(w)?;
                    holds &= apply(&left, &e)? == apply(&right, &e)?;
                }
                out.push((format!("braid{} {} {}", m, a, b), holds));
            }
        }
        Ok(out)
    }

    pub fn zero(&self) -> HeckeElem<R::Elem> {
        HeckeElem::default()
    }

    pub fn basis(&self, w: &SignedPerm) -> Result<HeckeElem<R::Elem>, Error> {
        self.check(w)?;
        let mut e = HeckeElem::default();
        e.terms.insert(w.clone(), self.ring.one());
        Ok(e)
    }

    pub fn one(&self) -> HeckeElem<R::Elem> {
        self.basis(&SignedPerm::identity(self.params.rank)).expect("identity")
    }

    pub fn add(&self, a: &HeckeElem<R::Elem>, b: &HeckeElem<R::Elem>) -> HeckeElem<R::Elem> {
        let mut out = a.clone();
        for (w, c) in &b.terms {
            add_term(&self.ring, &mut out.terms, w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, a: &HeckeElem<R::Elem>, c: &R::Elem) -> HeckeElem<R::Elem> {
        let mut out = HeckeElem::default();
        for (w, x) in &a.terms {
            add_term(&self.ring, &mut out.terms, w.clone(), self.ring.mul(x, c));
        }
        out
    }

    pub fn sub(&self, a: &HeckeElem<R::Elem>, b: &HeckeElem<R::Elem>) -> HeckeElem<R::Elem> {
        self.add(a, &self.scale(b, &self.ring.int(-1)))
    }

    /// `a * T_g` (or `T_g * a` when `left`).
    pub fn mul_gen(&self, a: &HeckeElem<R::Elem>, g: Gen, left: bool) -> Result<HeckeElem<R::Elem>, Error> {
        let p = self.params.param_twice(g)?;
        let r = &self.ring;
        let nu_g = r.nu_half(p);
        let nu_g_minus_1 = r.sub(&nu_g, &r.one());
        let mut out = HeckeElem::default();
        for (x, c) in &a.terms {
            let xg = if left { x.left_gen(g) } else { x.right_gen(g) };
            if xg.length() > x.length() {
                add_term(r, &mut out.terms, xg, c.clone());
            } else {
                add_term(r, &mut out.terms, xg, r.mul(c, &nu_g));
                add_term(r, &mut out.terms, x.clone(), r.mul(c, &nu_g_minus_1));
            }
        }
        Ok(out)
    }

    /// `a * T_g^(-1)` with `T_g^(-1) = v_g^(-1) T_g + (v_g^(-1) - 1)`.
    pub fn mul_gen_inv(&self, a: &HeckeElem<R::Elem>, g: Gen) -> Result<HeckeElem<R::Elem>, Error> {
        let p = self.params.param_twice(g)?;
        let r = &self.ring;
        let inv = r.nu_half(-p);
        let t = self.scale(&self.mul_gen(a, g, false)?, &inv);
        Ok(self.add(&t, &self.scale(a, &r.sub(&inv, &r.one()))))
    }

    pub fn mul(&self, a: &HeckeElem<R::Elem>, b: &HeckeElem<R::Elem>) -> Result<HeckeElem<R::Elem>, Error> {
        let mut out = HeckeElem::default();
        for (y, c) in &b.terms {
            self.check(y)?;
            let mut acc = a.clone();
            for g in y.reduced_word() {
                acc = self.mul_gen(&acc, g, false)?;
            }
            out = self.add(&out, &self.scale(&acc, c));
        }
        Ok(out)
    }

    pub fn inv_basis(&self, w: &SignedPerm) -> Result<HeckeElem<R::Elem>, Error> {
        self.check(w)?;
        let mut acc = self.one();
        for g in w.reduced_word().into_iter().rev() {
            acc = self.mul_gen_inv(&acc, g)?;
        }
        Ok(acc)
    }

    /// Value of a one-dimensional character on `a`.
    pub fn character_eval(&self, a: &HeckeElem<R::Elem>, which: Character) -> Result<R::Elem, Error> {
        let r = &self.ring;
        let t_val = match which {
            Character::Signature => r.int(-1),
            Character::Index => r.nu_half(self.params.t_twice().unwrap_or(0)),
        };
        let mut acc = r.zero();
        for (w, c) in &a.terms {
            self.check(w)?;
            let nt = count_t(w) as i64;
            let ns = w.length() as i64 - nt;
            let mut v = r.mul(c, &r.nu_half(2 * ns));
            for _ in 0..nt {
                v = r.mul(&v, &t_val);
            }
            acc = r.add(&acc, &v);
        }
        Ok(acc)
    }

    /// The isomorphism from the algebra with parameter `-mu` onto this one:
    /// `T_w -> (-v^(-mu))^(n_t(w)) T_w`.
    pub fn kappa(&self, a: &HeckeElem<R::Elem>) -> HeckeElem<R::Elem> {
        let r = &self.ring;
        let t = self.params.t_twice().unwrap_or(0);
        let factor = r.neg(&r.nu_half(-t));
        let mut out = HeckeElem::default();
        for (w, c) in &a.terms {
            let mut v = c.clone();
            for _ in 0..count_t(w) {
                v = r.mul(&v, &factor);
            }
            add_term(r, &mut out.terms, w.clone(), v);
        }
        out
    }

    /// Coefficientwise image in another ring.
    pub fn specialize<S: Ring>(&self, a: &HeckeElem<R::Elem>, target: &S) -> HeckeElem<S::Elem>
    where
        R: Ring<Elem = crate::LaurentPoly>,
    {
        let mut out = HeckeElem::default();
        for (w, c) in &a.terms {
            add_term(target, &mut out.terms, w.clone(), target.embed(c));
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Character {
    /// `s_i -> v`, `t -> -1`.
    Signature,
    /// `s_i -> v`, `t -> v^mu`.
    Index,
}

/// Occurrences of `t` in a reduced word.
pub fn count_t(w: &SignedPerm) -> usize {
    w.reduced_word().iter().filter(|&&g| g == Gen::T).count()
}
