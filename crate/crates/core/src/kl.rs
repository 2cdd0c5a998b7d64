//! Kazhdan–Lusztig basis and cells with unequal parameters.
//!
//! `C_w = Σ_{y ≤ w} p_{y,w} T_y` with `p_{w,w} = 1` and `p_{y,w} ∈ v⁻¹Z[v⁻¹]`
//! otherwise. For `sw > w` the product is
//! `C_s C_w = C_{sw} + Σ_{sz<z<w} M^s_{z,w} C_z`, where the bar-invariant
//! `M^s_{z,w}` are pinned down, from the top of the interval downwards, by
//! `v_s p_{y,w} - Σ_{y≤z<w, sz<z} p_{y,z} M^s_{z,w} ∈ v⁻¹Z[v⁻¹]`.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::scc_labels;
use crate::group::{index_of, CoxeterTables, SignedPerm, WeightFunction};
use crate::hecke::{Basis, HeckeAlgebra, HeckeElt};
use crate::laurent::LaurentPoly;
use crate::partition::GroupPartition;

/// Largest rank accepted without opting in.
pub const DEFAULT_ORACLE_RANK: usize = 4;
/// Hard ceiling for the oracle.
pub const MAX_ORACLE_RANK: usize = 5;

/// Which left descent `s` drives the recursion `C_{sw'}` from `C_{w'}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum DescentPolicy {
    #[default]
    Smallest,
    Largest,
}

type Column = HashMap<u32, LaurentPoly>;

pub struct KLTable {
    tables: CoxeterTables,
    weight: WeightFunction,
    /// `p[w][y] = p_{y,w}`, only for `y ≤ w`.
    p: Vec<Column>,
    /// `mu[w][k]` lists the `z` with `M^s_{z,w} ≠ 0` (`s = gens[k]`, `sw > w`).
    mu: Vec<Vec<Vec<(u32, LaurentPoly)>>>,
}

/// Computes the KL basis of `W_n`, refusing ranks above [`DEFAULT_ORACLE_RANK`].
pub fn kl_basis(n: usize, weight: WeightFunction) -> Result<KLTable> {
    kl_basis_with_limit(n, weight, DEFAULT_ORACLE_RANK)
}

/// As [`kl_basis`] with an explicit rank budget (at most [`MAX_ORACLE_RANK`]).
pub fn kl_basis_with_limit(n: usize, weight: WeightFunction, max_rank: usize) -> Result<KLTable> {
    if n == 0 {
        return Err(Error::InvalidRank(n, "1..=5"));
    }
    let limit = max_rank.min(MAX_ORACLE_RANK);
    if n > limit {
        return Err(Error::Budget(format!("KL oracle is limited to rank {limit}, asked for {n}")));
    }
    KLTable::compute(CoxeterTables::full(n), weight, DescentPolicy::Smallest)
}

impl KLTable {
    /// Builds the table for any parabolic subgroup described by `tables`.
    pub fn compute(tables: CoxeterTables, weight: WeightFunction, policy: DescentPolicy) -> Result<Self> {
        let len = tables.len();
        let ngens = tables.gens().len();
        let mut p: Vec<Column> = vec![Column::new(); len];
        let mut mu: Vec<Vec<Vec<(u32, LaurentPoly)>>> = vec![Vec::new(); len];
        p[0].insert(0, LaurentPoly::one());

        // Elements are stored in length order, so each level is a contiguous range.
        let mut start = 0usize;
        while start < len {
            let lvl = tables.length(start as u32);
            let end = (start..len).find(|&i| tables.length(i as u32) != lvl).unwrap_or(len);
            if lvl > 0 {
                let cols: Vec<Result<Column>> = (start..end)
                    .into_par_iter()
                    .map(|w| column(&tables, weight, policy, &p, &mu, w as u32))
                    .collect();
                for (w, col) in (start..end).zip(cols) {
                    p[w] = col?;
                }
            }
            let mus: Vec<Vec<Vec<(u32, LaurentPoly)>>> = (start..end)
                .into_par_iter()
                .map(|w| {
                    (0..ngens)
                        .map(|k| {
                            if tables.is_left_descent(k, w as u32) {
                                Vec::new()
                            } else {
                                mu_list(&tables, weight, &p, k, w as u32)
                            }
                        })
                        .collect()
                })
                .collect();
            for (w, m) in (start..end).zip(mus) {
                mu[w] = m;
            }
            start = end;
        }
        Ok(KLTable { tables, weight, p, mu })
    }

    pub fn tables(&self) -> &CoxeterTables {
        &self.tables
    }

    pub fn weight(&self) -> WeightFunction {
        self.weight
    }

    /// `p_{y,w}` (zero unless `y ≤ w`).
    pub fn p(&self, y: u32, w: u32) -> LaurentPoly {
        self.p[w as usize].get(&y).cloned().unwrap_or_default()
    }

    /// Non-zero `M^s_{z,w}` for `s = gens[k]`; empty when `sw < w`.
    pub fn mu(&self, k: usize, w: u32) -> &[(u32, LaurentPoly)] {
        &self.mu[w as usize][k]
    }

    /// `C_w` expanded in the `T` basis.
    pub fn c_in_t(&self, w: u32) -> HeckeElt {
        let mut h = HeckeElt::zero(Basis::T);
        for (&y, c) in &self.p[w as usize] {
            h.add_term(y, c);
        }
        h
    }

    /// Rewrites a `T`-basis element in the `C` basis by peeling off leading terms.
    pub fn t_to_c(&self, h: &HeckeElt) -> HeckeElt {
        let mut rest = h.clone();
        let mut out = HeckeElt::zero(Basis::C);
        while let Some((top, c)) = rest.terms().last().map(|(w, c)| (w, c.clone())) {
            out.add_term(top, &c);
            rest.add_scaled(&self.c_in_t(top), &-c);
        }
        out
    }

    /// Re-derives the defining properties: unitriangularity, the degree
    /// bound on `p_{y,w}`, and bar invariance of every `M`.
    pub fn self_check(&self) -> Result<()> {
        for w in 0..self.tables.len() as u32 {
            if self.p(w, w) != LaurentPoly::one() {
                return Err(Error::InvariantViolation(format!("p_(w,w) ≠ 1 for w = {}", self.tables.element(w))));
            }
            for (&y, c) in &self.p[w as usize] {
                if y != w && !c.in_negative_part() {
                    return Err(Error::InvariantViolation(format!("p_(y,w) = {c} has a non-negative degree term")));
                }
            }
            for k in 0..self.tables.gens().len() {
                for (_, m) in self.mu(k, w) {
                    if !m.is_bar_invariant() {
                        return Err(Error::InvariantViolation(format!("M = {m} is not bar-invariant")));
                    }
                }
            }
        }
        Ok(())
    }

    /// `out[w]` lists every `y` with `C_y` occurring in some `C_s C_w`.
    pub fn left_edges(&self) -> Vec<Vec<u32>> {
        (0..self.tables.len() as u32)
            .into_par_iter()
            .map(|w| {
                let mut out = vec![w];
                for k in 0..self.tables.gens().len() {
                    if self.tables.is_left_descent(k, w) {
                        continue;
                    }
                    out.push(self.tables.lmul(k, w));
                    out.extend(self.mu(k, w).iter().map(|(z, _)| *z));
                }
                out.sort_unstable();
                out.dedup();
                out
            })
            .collect()
    }

    /// Left cell ids over the table's own indices.
    pub fn left_cell_labels(&self) -> Vec<u32> {
        scc_labels(&self.left_edges())
    }

    pub fn right_cell_labels(&self) -> Vec<u32> {
        let left = self.left_cell_labels();
        let raw: Vec<u32> = (0..self.tables.len() as u32).map(|w| left[self.tables.inverse(w) as usize]).collect();
        crate::graph::canonical_labels(&raw)
    }

    pub fn two_sided_cell_labels(&self) -> Vec<u32> {
        let left = self.left_edges();
        let mut adj = left.clone();
        for (w, ys) in left.iter().enumerate() {
            let wi = self.tables.inverse(w as u32) as usize;
            adj[wi].extend(ys.iter().map(|&y| self.tables.inverse(y)));
        }
        scc_labels(&adj)
    }

    /// Converts table-indexed labels into a partition over canonical indices.
    /// Only meaningful when the table covers all of `W_n`.
    pub fn to_canonical(&self, labels: &[u32]) -> GroupPartition {
        let n = self.tables.rank();
        let mut raw = vec![0u32; labels.len()];
        for (i, &c) in labels.iter().enumerate() {
            raw[index_of(self.tables.element(i as u32))] = c;
        }
        GroupPartition::from_labels(n, &raw)
    }

    pub fn left_cells(&self) -> GroupPartition {
        self.to_canonical(&self.left_cell_labels())
    }

    pub fn right_cells(&self) -> GroupPartition {
        self.to_canonical(&self.right_cell_labels())
    }

    pub fn two_sided_cells(&self) -> GroupPartition {
        self.to_canonical(&self.two_sided_cell_labels())
    }

    /// Line-oriented dump `y w : p_{y,w}` for every non-zero `p_{y,w}`.
    pub fn export(&self) -> String {
        let mut out = String::new();
        for w in 0..self.tables.len() as u32 {
            let mut ys: Vec<_> = self.p[w as usize].iter().collect();
            ys.sort_unstable_by_key(|(y, _)| **y);
            for (&y, c) in ys {
                let _ = writeln!(out, "{} {} : {}", self.tables.element(y), self.tables.element(w), c);
            }
        }
        out
    }
}

/// Parses the output of [`KLTable::export`].
pub fn parse_export(text: &str) -> Result<Vec<(SignedPerm, SignedPerm, LaurentPoly)>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let (head, poly) = line
                .split_once(" : ")
                .ok_or_else(|| Error::Parse(format!("missing ' : ' in {line:?}")))?;
            let mut it = head.split_whitespace();
            let (Some(y), Some(w), None) = (it.next(), it.next(), it.next()) else {
                return Err(Error::Parse(format!("expected two windows in {line:?}")));
            };
            Ok((y.parse()?, w.parse()?, poly.parse()?))
        })
        .collect()
}

fn choose_descent(tables: &CoxeterTables, policy: DescentPolicy, w: u32) -> usize {
    let mut ks = (0..tables.gens().len()).filter(|&k| tables.is_left_descent(k, w));
    match policy {
        DescentPolicy::Smallest => ks.next(),
        DescentPolicy::Largest => ks.next_back(),
    }
    .expect("non-identity element has a left descent")
}

/// Column of `C_w` from `C_w = C_s C_{sw} - Σ M^s_{z,sw} C_z`.
fn column(
    tables: &CoxeterTables,
    weight: WeightFunction,
    policy: DescentPolicy,
    p: &[Column],
    mu: &[Vec<Vec<(u32, LaurentPoly)>>],
    w: u32,
) -> Result<Column> {
    let k = choose_descent(tables, policy, w);
    let prev = tables.lmul(k, w);
    let v = LaurentPoly::monomial(1, weight.of(tables.gens()[k]) as i32);
    let vinv = v.bar();
    let mut col = Column::with_capacity(p[prev as usize].len() * 2);
    let add = |col: &mut Column, y: u32, c: LaurentPoly| {
        let slot = col.entry(y).or_default();
        *slot += &c;
    };
    // C_s T_x = T_{sx} + v_s T_x if sx < x, else T_{sx} + v_s⁻¹ T_x.
    for (&x, c) in &p[prev as usize] {
        let sx = tables.lmul(k, x);
        add(&mut col, sx, c.clone());
        let f = if tables.length(sx) < tables.length(x) { &v } else { &vinv };
        add(&mut col, x, c * f);
    }
    for (z, m) in &mu[prev as usize][k] {
        for (&y, c) in &p[*z as usize] {
            add(&mut col, y, -(c * m));
        }
    }
    col.retain(|_, c| !c.is_zero());
    if col.get(&w) != Some(&LaurentPoly::one()) {
        return Err(Error::InvariantViolation(format!("leading coefficient of C_w wrong for {}", tables.element(w))));
    }
    if let Some((y, c)) = col.iter().find(|(&y, c)| y != w && !c.in_negative_part()) {
        return Err(Error::InvariantViolation(format!(
            "p_(y,w) = {c} for y = {}, w = {} is not in v⁻¹Z[v⁻¹]",
            tables.element(*y),
            tables.element(w)
        )));
    }
    Ok(col)
}

/// Non-zero `M^s_{y,w}` over `sy < y < w`, for `sw > w`.
fn mu_list(tables: &CoxeterTables, weight: WeightFunction, p: &[Column], k: usize, w: u32) -> Vec<(u32, LaurentPoly)> {
    let v = LaurentPoly::monomial(1, weight.of(tables.gens()[k]) as i32);
    let col = &p[w as usize];
    let mut cands: Vec<u32> = col.keys().copied().filter(|&y| y != w && tables.is_left_descent(k, y)).collect();
    // Bruhat-larger elements have larger indices, so descending order handles z before y < z.
    cands.sort_unstable_by(|a, b| b.cmp(a));
    let mut found: Vec<(u32, LaurentPoly)> = Vec::new();
    for y in cands {
        let mut f = &v * &col[&y];
        for (z, m) in &found {
            if let Some(pyz) = p[*z as usize].get(&y) {
                f -= &(pyz * m);
            }
        }
        let m = f.bar_symmetrize_nonnegative();
        if !m.is_zero() {
            found.push((y, m));
        }
    }
    found.sort_unstable_by_key(|(z, _)| *z);
    found
}

/// `C_s C_w` computed directly in the `T` basis and rewritten in the `C` basis.
pub fn c_gen_times_c(table: &KLTable, k: usize, w: u32) -> HeckeElt {
    let h = HeckeAlgebra::new(&table.tables, table.weight);
    table.t_to_c(&h.mul(&h.c_gen(k), &table.c_in_t(w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Gen;

    fn table(n: usize, a: u32, b: u32) -> KLTable {
        KLTable::compute(CoxeterTables::full(n), WeightFunction::new(a, b).unwrap(), DescentPolicy::Smallest).unwrap()
    }

    #[test]
    fn generators_have_the_expected_c_basis() {
        for (a, b) in [(1, 1), (1, 2), (2, 1), (2, 3)] {
            let t = table(2, a, b);
            for k in 0..2 {
                let s = t.tables().lmul(k, 0);
                let l = if k == 0 { b } else { a } as i32;
                assert_eq!(t.p(0, s), LaurentPoly::monomial(1, -l));
                assert_eq!(t.p(s, s), LaurentPoly::one());
            }
            assert_eq!(t.c_in_t(0), HeckeElt::basis_element(Basis::T, 0));
        }
    }

    #[test]
    fn c_basis_is_bar_invariant() {
        for n in 1..=3 {
            for (a, b) in [(1, 1), (1, 2), (1, 3), (2, 1), (2, 5)] {
                let t = table(n, a, b);
                t.self_check().unwrap();
                let h = HeckeAlgebra::new(t.tables(), t.weight());
                for w in 0..t.tables().len() as u32 {
                    let c = t.c_in_t(w);
                    assert_eq!(h.bar(&c), c, "n={n} a={a} b={b} w={}", t.tables().element(w));
                }
            }
        }
    }

    #[test]
    fn multiplication_rule_matches_direct_expansion() {
        for n in 2..=3 {
            for (a, b) in [(1, 1), (1, 2), (1, 3), (3, 2)] {
                let t = table(n, a, b);
                let h = HeckeAlgebra::new(t.tables(), t.weight());
                for w in 0..t.tables().len() as u32 {
                    for k in 0..n {
                        let prod = c_gen_times_c(&t, k, w);
                        let mut expect = HeckeElt::zero(Basis::C);
                        if t.tables().is_left_descent(k, w) {
                            // Degenerate rule C_s C_w = (v_s + v_s⁻¹) C_w.
                            let v = h.v_s(k);
                            expect.add_term(w, &(&v + &v.bar()));
                        } else {
                            expect.add_term(t.tables().lmul(k, w), &LaurentPoly::one());
                            for (z, m) in t.mu(k, w) {
                                expect.add_term(*z, m);
                            }
                        }
                        assert_eq!(prod, expect, "n={n} a={a} b={b} k={k} w={}", t.tables().element(w));
                    }
                }
            }
        }
    }

    #[test]
    fn descent_choice_does_not_matter() {
        for n in 2..=3 {
            for (a, b) in [(1, 2), (1, 3), (2, 1)] {
                let wf = WeightFunction::new(a, b).unwrap();
                let s = KLTable::compute(CoxeterTables::full(n), wf, DescentPolicy::Smallest).unwrap();
                let l = KLTable::compute(CoxeterTables::full(n), wf, DescentPolicy::Largest).unwrap();
                assert_eq!(s.export(), l.export());
            }
        }
    }

    #[test]
    fn w2_cells() {
        let t = table(2, 1, 2);
        let left = t.left_cells();
        assert_eq!(left.num_classes(), 6);
        let sizes = left.sizes();
        let e = 0usize;
        let w0 = index_of(&SignedPerm::longest(2));
        assert_eq!(sizes[left.class_of(e) as usize], 1);
        assert_eq!(sizes[left.class_of(w0) as usize], 1);
        // Equal parameters: the usual four left cells of B_2.
        assert_eq!(table(2, 1, 1).left_cells().num_classes(), 4);
    }

    #[test]
    fn export_round_trips() {
        let t = table(2, 1, 3);
        let text = t.export();
        let parsed = parse_export(&text).unwrap();
        assert_eq!(parsed.len(), text.lines().count());
        for (y, w, c) in parsed {
            let (yi, wi) = (t.tables().index(&y).unwrap(), t.tables().index(&w).unwrap());
            assert_eq!(t.p(yi, wi), c);
        }
        assert!(parse_export("1,2 : 0").is_err());
    }

    #[test]
    fn budget() {
        assert!(matches!(kl_basis(5, WeightFunction::asymptotic(5)), Err(Error::Budget(_))));
        assert!(kl_basis_with_limit(6, WeightFunction::asymptotic(6), 9).is_err());
    }

    #[test]
    fn parabolic_type_a() {
        let tables = CoxeterTables::generated_by(3, &[Gen(1), Gen(2)]);
        let t = KLTable::compute(tables, WeightFunction::new(1, 3).unwrap(), DescentPolicy::Smallest).unwrap();
        // S_3 has four left cells.
        assert_eq!(crate::graph::canonical_labels(&t.left_cell_labels()).iter().max(), Some(&3));
    }
}
