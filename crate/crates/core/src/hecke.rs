//! The Iwahori–Hecke algebra of a (parabolic subgroup of) `W_n` over
//! `Z[v, v⁻¹]` with unequal parameters `L(s_i) = a`, `L(t) = b`.
//!
//! Elements are sparse vectors over the element indices of a
//! [`CoxeterTables`]. Multiplication is only defined in the `T` basis; `C`
//! vectors are converted through a [`KLTable`](crate::kl::KLTable).

use std::collections::BTreeMap;
use std::fmt;

use crate::group::{CoxeterTables, WeightFunction};
use crate::laurent::LaurentPoly;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Basis {
    T,
    C,
}

/// A sparse linear combination of basis elements, with no zero terms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeckeElt {
    basis: Basis,
    terms: BTreeMap<u32, LaurentPoly>,
}

impl HeckeElt {
    pub fn zero(basis: Basis) -> Self {
        HeckeElt { basis, terms: BTreeMap::new() }
    }

    pub fn basis_element(basis: Basis, w: u32) -> Self {
        let mut h = HeckeElt::zero(basis);
        h.add_term(w, &LaurentPoly::one());
        h
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &LaurentPoly)> {
        self.terms.iter().map(|(&w, c)| (w, c))
    }

    pub fn coeff(&self, w: u32) -> LaurentPoly {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: u32, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add_scaled(&mut self, other: &HeckeElt, c: &LaurentPoly) {
        debug_assert_eq!(self.basis, other.basis);
        for (w, x) in other.terms() {
            self.add_term(w, &(x * c));
        }
    }

    pub fn sub(&self, other: &HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::monomial(-1, 0));
        out
    }
}

impl fmt::Display for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let tag = match self.basis {
            Basis::T => "T",
            Basis::C => "C",
        };
        let parts: Vec<String> = self.terms().map(|(w, c)| format!("({c}){tag}[{w}]")).collect();
        f.write_str(&parts.join(" + "))
    }
}

pub struct HeckeAlgebra<'a> {
    tables: &'a CoxeterTables,
    weight: WeightFunction,
}

impl<'a> HeckeAlgebra<'a> {
    pub fn new(tables: &'a CoxeterTables, weight: WeightFunction) -> Self {
        HeckeAlgebra { tables, weight }
    }

    pub fn tables(&self) -> &CoxeterTables {
        self.tables
    }

    /// `v^{L(s)}` for the `k`-th generator.
    pub fn v_s(&self, k: usize) -> LaurentPoly {
        LaurentPoly::monomial(1, self.weight.of(self.tables.gens()[k]) as i32)
    }

    /// `v^{L(s)} - v^{-L(s)}`.
    pub fn xi_s(&self, k: usize) -> LaurentPoly {
        let v = self.v_s(k);
        &v - &v.bar()
    }

    /// `C_s = T_s + v^{-L(s)} T_e`.
    pub fn c_gen(&self, k: usize) -> HeckeElt {
        let mut h = HeckeElt::basis_element(Basis::T, self.tables.lmul(k, 0));
        h.add_term(0, &self.v_s(k).bar());
        h
    }

    /// `T_s · h`.
    pub fn t_mul_gen(&self, k: usize, h: &HeckeElt) -> HeckeElt {
        assert_eq!(h.basis, Basis::T);
        let xi = self.xi_s(k);
        let mut out = HeckeElt::zero(Basis::T);
        for (w, c) in h.terms() {
            let sw = self.tables.lmul(k, w);
            out.add_term(sw, c);
            if self.tables.length(sw) < self.tables.length(w) {
                out.add_term(w, &(c * &xi));
            }
        }
        out
    }

    /// `h · T_s`.
    pub fn t_mul_gen_right(&self, h: &HeckeElt, k: usize) -> HeckeElt {
        assert_eq!(h.basis, Basis::T);
        let xi = self.xi_s(k);
        let mut out = HeckeElt::zero(Basis::T);
        for (w, c) in h.terms() {
            let ws = self.tables.rmul(k, w);
            out.add_term(ws, c);
            if self.tables.length(ws) < self.tables.length(w) {
                out.add_term(w, &(c * &xi));
            }
        }
        out
    }

    /// `T_s⁻¹ · h`, using `T_s⁻¹ = T_s - (v_s - v_s⁻¹)`.
    pub fn t_inv_mul_gen(&self, k: usize, h: &HeckeElt) -> HeckeElt {
        let mut out = self.t_mul_gen(k, h);
        out.add_scaled(h, &-self.xi_s(k));
        out
    }

    /// Generator indices `k_1, ..., k_m` with `w = s_{k_1} ⋯ s_{k_m}` reduced.
    pub fn reduced_word(&self, mut w: u32) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.tables.length(w) as usize);
        while w != 0 {
            let k = (0..self.tables.gens().len())
                .find(|&k| self.tables.is_left_descent(k, w))
                .expect("non-identity element has a left descent");
            out.push(k);
            w = self.tables.lmul(k, w);
        }
        out
    }

    /// Product of two `T`-basis elements.
    pub fn mul(&self, x: &HeckeElt, y: &HeckeElt) -> HeckeElt {
        assert_eq!(x.basis, Basis::T);
        assert_eq!(y.basis, Basis::T);
        let mut out = HeckeElt::zero(Basis::T);
        for (w, c) in x.terms() {
            let mut acc = y.clone();
            for &k in self.reduced_word(w).iter().rev() {
                acc = self.t_mul_gen(k, &acc);
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    /// The bar involution on the `T` basis: `bar(T_w) = T_{w⁻¹}⁻¹`.
    pub fn bar(&self, h: &HeckeElt) -> HeckeElt {
        assert_eq!(h.basis, Basis::T);
        let mut out = HeckeElt::zero(Basis::T);
        for (w, c) in h.terms() {
            let mut acc = HeckeElt::basis_element(Basis::T, 0);
            for &k in self.reduced_word(w).iter().rev() {
                acc = self.t_inv_mul_gen(k, &acc);
            }
            out.add_scaled(&acc, &c.bar());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Gen, SignedPerm};

    fn w2() -> CoxeterTables {
        CoxeterTables::full(2)
    }

    #[test]
    fn quadratic_relation() {
        let tables = w2();
        let h = HeckeAlgebra::new(&tables, WeightFunction::new(1, 2).unwrap());
        for k in 0..2 {
            let s = tables.lmul(k, 0);
            let ts = HeckeElt::basis_element(Basis::T, s);
            let sq = h.t_mul_gen(k, &ts);
            let mut expect = HeckeElt::basis_element(Basis::T, 0);
            expect.add_term(s, &h.xi_s(k));
            assert_eq!(sq, expect);
            assert_eq!(h.t_mul_gen(k, &HeckeElt::basis_element(Basis::T, 0)), ts);
        }
    }

    #[test]
    fn associativity_in_w2() {
        let tables = w2();
        let h = HeckeAlgebra::new(&tables, WeightFunction::new(1, 3).unwrap());
        let t = HeckeElt::basis_element(Basis::T, tables.index(&SignedPerm::identity(2).mul_gen_right(Gen::T)).unwrap());
        let s = HeckeElt::basis_element(Basis::T, tables.index(&SignedPerm::identity(2).mul_gen_right(Gen(1))).unwrap());
        let left = h.mul(&h.mul(&s, &t), &t);
        let right = h.mul(&s, &h.mul(&t, &t));
        assert_eq!(left, right);
        let all: Vec<HeckeElt> = (0..8).map(|i| HeckeElt::basis_element(Basis::T, i)).collect();
        for x in &all {
            for y in &all {
                for z in &all {
                    assert_eq!(h.mul(&h.mul(x, y), z), h.mul(x, &h.mul(y, z)));
                }
            }
        }
    }

    #[test]
    fn right_and_left_generator_actions_agree_with_products() {
        let tables = CoxeterTables::full(3);
        let h = HeckeAlgebra::new(&tables, WeightFunction::new(2, 3).unwrap());
        for w in 0..tables.len() as u32 {
            let tw = HeckeElt::basis_element(Basis::T, w);
            for k in 0..3 {
                let ts = HeckeElt::basis_element(Basis::T, tables.lmul(k, 0));
                assert_eq!(h.t_mul_gen_right(&tw, k), h.mul(&tw, &ts));
                assert_eq!(h.t_mul_gen(k, &tw), h.mul(&ts, &tw));
            }
        }
    }

    #[test]
    fn bar_of_generators_and_involution() {
        let tables = w2();
        let h = HeckeAlgebra::new(&tables, WeightFunction::new(1, 2).unwrap());
        for k in 0..2 {
            let cs = h.c_gen(k);
            assert_eq!(h.bar(&cs), cs);
        }
        for w in 0..8 {
            let tw = HeckeElt::basis_element(Basis::T, w);
            assert_eq!(h.bar(&h.bar(&tw)), tw);
        }
    }
}
