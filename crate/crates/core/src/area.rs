//! The region `Area_n = ⊔_q Ω_{ζ_q}` of elements whose shape is a pair of
//! single columns, with the explicit words that parameterise its cells.
//!
//! Every displayed identity between words is checked when [`AreaWords`] or
//! [`Area`] is built; a failure is reported as an invariant violation.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::group::{ascending_run, descending_run, enumerate, index_of, suffixes, Gen, GenWord, SignedPerm};
use crate::tableau::{shape, Bipartition};

/// Row-form test: the negative entries decrease in absolute value and the
/// positive entries decrease.
pub fn in_area_by_window(w: &SignedPerm) -> bool {
    let win = w.window();
    let neg = win.iter().filter(|&&x| x < 0).map(|x| x.abs());
    let pos = win.iter().filter(|&&x| x > 0).copied();
    let dec = |v: Vec<i8>| v.windows(2).all(|p| p[0] > p[1]);
    dec(neg.collect()) && dec(pos.collect())
}

/// Shape test: `sh(w) = ζ_q` for some `q`.
pub fn in_area_by_shape(w: &SignedPerm) -> bool {
    let sh = shape(w);
    sh.plus.iter().chain(&sh.minus).all(|&r| r == 1)
}

/// Membership in `Area_n`; the window and shape tests must agree.
pub fn in_area(w: &SignedPerm) -> bool {
    let by_window = in_area_by_window(w);
    assert_eq!(by_window, in_area_by_shape(w), "membership tests disagree on {w}");
    by_window
}

/// `w_J = (n, ..., 1)`, the longest element of the symmetric group.
pub fn w_j(n: usize) -> SignedPerm {
    let win: Vec<i8> = (1..=n as i8).rev().collect();
    SignedPerm::from_window(&win).expect("valid window")
}

/// Membership in `rArea_n = Area_n ∖ {w_J, w_J w_0}`.
pub fn in_area_reduced(w: &SignedPerm) -> bool {
    let n = w.rank();
    let wj = w_j(n);
    in_area(w) && *w != wj && *w != wj.mul(&SignedPerm::longest(n))
}

fn concat(words: impl IntoIterator<Item = GenWord>) -> GenWord {
    words.into_iter().fold(GenWord::default(), |acc, w| acc.concat(&w))
}

/// `a_q = (t)(s_1 t)⋯(s_{q-1}⋯s_1 t)`.
pub fn a_word(q: usize) -> GenWord {
    concat((0..q).map(|j| descending_run(j, 0)))
}

/// `b_q = (s_{q+1})(s_{q+2} s_{q+1})⋯(s_{n-1}⋯s_{q+1})`, empty for `q ≥ n-1`.
pub fn b_word(n: usize, q: usize) -> GenWord {
    concat((q + 1..n).map(|m| descending_run(m, q + 1)))
}

/// `p_{n,q}` as `(s_{n-q}⋯s_1)(s_{n-q+1}⋯s_2)⋯(s_{n-1}⋯s_q)`.
pub fn p_word(n: usize, q: usize) -> GenWord {
    if q == 0 || q >= n {
        return GenWord::default();
    }
    concat((0..q).map(|j| descending_run(n - q + j, 1 + j)))
}

/// `p_{n,q}` as `(s_{n-q}⋯s_{n-1})(s_{n-q-1}⋯s_{n-2})⋯(s_1⋯s_q)`.
pub fn p_word_alt(n: usize, q: usize) -> GenWord {
    if q == 0 || q >= n {
        return GenWord::default();
    }
    concat((0..n - q).map(|i| ascending_run(n - q - i, n - 1 - i)))
}

/// `Π_{n,q} = s_{n-q-1}⋯s_1 · t · p_{n,q}` for `q ≤ n-1`.
pub fn pi_word(n: usize, q: usize) -> GenWord {
    concat([descending_run(n - q - 1, 1), GenWord(vec![Gen::T]), p_word(n, q)])
}

/// `Π_{n,q} = p_{n,q+1} · t · s_1⋯s_q`.
pub fn pi_word_alt(n: usize, q: usize) -> GenWord {
    concat([p_word(n, q + 1), GenWord(vec![Gen::T]), ascending_run(1, q)])
}

/// `χ_q = s_{n-1}⋯s_q` for `q ≥ 1`.
pub fn chi_word(n: usize, q: usize) -> GenWord {
    descending_run(n - 1, q.max(1))
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn violation(what: String) -> Error {
    Error::InvariantViolation(what)
}

/// Words attached to a single `q`.
#[derive(Clone, Debug)]
pub struct QWords {
    pub q: usize,
    pub a: GenWord,
    pub b: GenWord,
    pub sigma: SignedPerm,
    pub p: GenWord,
    pub p_elem: SignedPerm,
    /// `None` for `q = n`.
    pub pi: Option<GenWord>,
    pub chi: GenWord,
}

#[derive(Clone, Debug)]
pub struct AreaWords {
    n: usize,
    per_q: Vec<QWords>,
}

impl AreaWords {
    pub fn build(n: usize) -> Result<Self> {
        if n == 0 || n > crate::group::MAX_RANK {
            return Err(Error::InvalidRank(n, "1..=8"));
        }
        let eval = |w: &GenWord| w.evaluate(n);
        let mut per_q = Vec::with_capacity(n + 1);
        for q in 0..=n {
            let (a, b) = (a_word(q), b_word(n, q));
            let (ae, be) = (eval(&a)?, eval(&b)?);
            let sigma = ae.mul(&be);
            if ae.mul(&be) != be.mul(&ae) || sigma.length() != a.len() + b.len() {
                return Err(violation(format!("a_{q} and b_{q} do not commute reducedly in rank {n}")));
            }
            if sigma.length_t() != q || shape(&sigma) != Bipartition::zeta(n, q) {
                return Err(violation(format!("σ_{{{n},{q}}} = {sigma} has the wrong shape")));
            }
            let p = p_word(n, q);
            let p_elem = eval(&p)?;
            if p_elem != eval(&p_word_alt(n, q))? || !p.is_reduced(n)? || !p_word_alt(n, q).is_reduced(n)? {
                return Err(violation(format!("the two expressions for p_{{{n},{q}}} differ")));
            }
            if suffixes(&p_elem).len() != binomial(n, q) {
                return Err(violation(format!("p_{{{n},{q}}} does not have C({n},{q}) suffixes")));
            }
            if q >= 1 {
                let split = p_word(n - 1, q - 1).concat(&chi_word(n, q));
                if eval(&split)? != p_elem || !split.is_reduced(n)? {
                    return Err(violation(format!("p_{{{n},{q}}} ≠ p_{{{},{}}} χ_{q}", n - 1, q - 1)));
                }
            }
            let pi = if q < n {
                let (x, y) = (pi_word(n, q), pi_word_alt(n, q));
                if eval(&x)? != eval(&y)? || !x.is_reduced(n)? || !y.is_reduced(n)? {
                    return Err(violation(format!("the two expressions for Π_{{{n},{q}}} differ")));
                }
                Some(x)
            } else {
                None
            };
            per_q.push(QWords { q, a, b, sigma, p, p_elem, pi, chi: chi_word(n, q) });
        }
        Ok(AreaWords { n, per_q })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn get(&self, q: usize) -> &QWords {
        &self.per_q[q]
    }

    pub fn sigma(&self, q: usize) -> SignedPerm {
        self.per_q[q].sigma
    }
}

/// A cell or `Υ`-class, labelled by `(q, τ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AreaClass {
    pub q: usize,
    pub tau: SignedPerm,
    /// Sorted by canonical index.
    pub members: Vec<SignedPerm>,
}

impl AreaClass {
    fn new(q: usize, tau: SignedPerm, mut members: Vec<SignedPerm>) -> Self {
        members.sort_by_key(index_of);
        members.dedup();
        AreaClass { q, tau, members }
    }

    pub fn indices(&self) -> Vec<u32> {
        self.members.iter().map(|w| index_of(w) as u32).collect()
    }
}

/// `Area_n` together with its words and its elements.
#[derive(Clone, Debug)]
pub struct Area {
    words: AreaWords,
    elements: Vec<SignedPerm>,
}

impl Area {
    pub fn new(n: usize) -> Result<Self> {
        let words = AreaWords::build(n)?;
        let elements: Vec<SignedPerm> = enumerate(n)?.into_iter().filter(in_area).collect();
        let expected: usize = (0..=n).map(|q| binomial(n, q).pow(2)).sum();
        if elements.len() != expected {
            return Err(violation(format!("|Area_{n}| = {} but Σ C(n,q)² = {expected}", elements.len())));
        }
        Ok(Area { words, elements })
    }

    pub fn rank(&self) -> usize {
        self.words.n
    }

    pub fn words(&self) -> &AreaWords {
        &self.words
    }

    /// Elements in canonical order.
    pub fn elements(&self) -> &[SignedPerm] {
        &self.elements
    }

    pub fn indices(&self) -> Vec<u32> {
        self.elements.iter().map(|w| index_of(w) as u32).collect()
    }

    fn omega_size(&self, q: usize) -> usize {
        binomial(self.rank(), q).pow(2)
    }

    /// `Γ_q τ⁻¹ = {π σ_{n,q} τ⁻¹ : π ≤_e p_{n,q}}`, with every product checked reduced.
    pub fn asymptotic_cell(&self, q: usize, tau: &SignedPerm) -> Result<AreaClass> {
        let qw = self.words.get(q);
        if !crate::group::is_suffix(tau, &qw.p_elem) {
            return Err(Error::Domain(format!("{tau} is not a suffix of p_{{{},{q}}}", self.rank())));
        }
        self.translate(q, &suffixes(&qw.p_elem), &qw.sigma, tau)
    }

    /// `{π x τ⁻¹ : π ∈ pis}` with lengths checked additive.
    fn translate(&self, q: usize, pis: &[SignedPerm], x: &SignedPerm, tau: &SignedPerm) -> Result<AreaClass> {
        let tau_inv = tau.inverse();
        let mut members = Vec::with_capacity(pis.len());
        for pi in pis {
            let z = pi.mul(x).mul(&tau_inv);
            if z.length() != pi.length() + x.length() + tau.length() {
                return Err(violation(format!("{pi} · {x} · {tau_inv} is not reduced")));
            }
            members.push(z);
        }
        Ok(AreaClass::new(q, *tau, members))
    }

    /// All asymptotic left cells of `Area_n`, by `q` and then by suffix `τ` of `p_{n,q}`.
    pub fn decomposition(&self) -> Result<Vec<AreaClass>> {
        let n = self.rank();
        let mut out = Vec::new();
        let mut seen = BTreeSet::new();
        for q in 0..=n {
            let taus = suffixes(&self.words.get(q).p_elem);
            let mut omega = BTreeSet::new();
            for tau in &taus {
                let cell = self.asymptotic_cell(q, tau)?;
                if cell.members.len() != taus.len() {
                    return Err(violation(format!("cell ({q}, {tau}) has {} members", cell.members.len())));
                }
                omega.extend(cell.indices());
                out.push(cell);
            }
            if omega.len() != self.omega_size(q)
                || omega.iter().any(|&i| shape(&crate::group::element_at(n, i as usize)) != Bipartition::zeta(n, q))
            {
                return Err(violation(format!("the cells for q = {q} do not form Ω_ζ_{q}")));
            }
            if !seen.is_disjoint(&omega) {
                return Err(violation(format!("Ω_ζ_{q} overlaps an earlier shape")));
            }
            seen.extend(omega);
        }
        if seen.len() != self.elements.len() {
            return Err(violation("the asymptotic cells do not cover Area_n".into()));
        }
        Ok(out)
    }

    /// `Υ(w) = {z ∈ Area_n : R(z) = R(w)}`.
    pub fn upsilon(&self, w: &SignedPerm) -> Result<Vec<SignedPerm>> {
        if w.rank() != self.rank() || !in_area(w) {
            return Err(Error::Domain(format!("{w} is not in Area_{}", self.rank())));
        }
        let r = w.right_descents();
        Ok(self.elements.iter().filter(|z| z.right_descents() == r).copied().collect())
    }

    /// The `Υ`-classes `{π σ_{n,q} τ⁻¹ : π ≤_e Π_{n,q}}` for `q < n` and `τ ≤_e p_{n-1,q}`,
    /// each checked against the descent-set definition, its size, and its
    /// splitting into two asymptotic cells.
    /// Needs `n ≥ 2`: for `n = 1` the slope range `[1, n-1]` is empty.
    pub fn upsilon_decomposition(&self) -> Result<Vec<AreaClass>> {
        let n = self.rank();
        if n < 2 {
            return Err(Error::Domain("Υ-classes need rank at least 2".into()));
        }
        let mut out = Vec::new();
        let mut seen = BTreeSet::new();
        for q in 0..n {
            let qw = self.words.get(q);
            let pi = qw.pi.as_ref().expect("Π is defined below n").evaluate(n)?;
            let pis = suffixes(&pi);
            let p_small = p_word(n - 1, q).evaluate(n)?;
            let chi_next = self.words.get(q + 1).chi.evaluate(n)?;
            for tau in suffixes(&p_small) {
                let class = self.translate(q, &pis, &qw.sigma, &tau)?;
                let mut by_def = self.upsilon(&qw.sigma.mul(&tau.inverse()))?;
                by_def.sort_by_key(index_of);
                if by_def != class.members {
                    return Err(violation(format!("Υ(σ_{{{n},{q}}} {tau}⁻¹) disagrees with its suffix description")));
                }
                if class.members.len() != binomial(n, q) + binomial(n, q + 1) {
                    return Err(violation(format!("|Υ| is wrong for ({q}, {tau})")));
                }
                let g1 = self.asymptotic_cell(q, &tau)?;
                let g2 = self.asymptotic_cell(q + 1, &tau.mul(&chi_next))?;
                let mut union = g1.members.clone();
                union.extend(&g2.members);
                union.sort_by_key(index_of);
                union.dedup();
                if union != class.members || g1.members.len() + g2.members.len() != union.len() {
                    return Err(violation(format!("Υ for ({q}, {tau}) is not Γ ⊔ Γ'")));
                }
                for i in class.indices() {
                    if !seen.insert(i) {
                        return Err(violation("Υ-classes overlap".into()));
                    }
                }
                out.push(class);
            }
        }
        if seen.len() != self.elements.len() || out.len() != 1 << (n - 1) {
            return Err(violation(format!("{} Υ-classes do not partition Area_{n}", out.len())));
        }
        Ok(out)
    }

    /// Splits an asymptotic cell `Γ = {π σ : π ≤_e p_{n,q}}` into `γ1 ⊔ γ2`,
    /// according to whether `s_{n-1}` occurs in `π`. Both descriptions of each
    /// half are computed and compared.
    pub fn subcell_split(&self, cell: &[SignedPerm]) -> Result<(Vec<SignedPerm>, Vec<SignedPerm>)> {
        let n = self.rank();
        if let Some(w) = cell.iter().find(|w| w.rank() != n || !in_area(w)) {
            return Err(Error::Domain(format!("{w} is not in Area_{n}")));
        }
        let sigma = *cell
            .iter()
            .min_by_key(|w| (w.length(), index_of(w)))
            .ok_or_else(|| Error::Domain("empty cell".into()))?;
        let q = sigma.length_t();
        let p = &self.words.get(q).p_elem;
        let sorted = |mut v: Vec<SignedPerm>| {
            v.sort_by_key(index_of);
            v
        };
        let full = sorted(suffixes(p).iter().map(|pi| pi.mul(&sigma)).collect());
        if full != sorted(cell.to_vec()) {
            return Err(Error::Domain(format!("the given set is not of the form {{π σ : π ≤_e p_{{{n},{q}}}}}")));
        }
        let last = Gen::s(n - 1);
        let (mut g1, mut g2) = (Vec::new(), Vec::new());
        for pi in suffixes(p) {
            let z = pi.mul(&sigma);
            if n >= 2 && pi.support().contains(last) {
                g2.push(z);
            } else {
                g1.push(z);
            }
        }
        let (g1, g2) = (sorted(g1), sorted(g2));
        if (1..n).contains(&q) {
            let alt1 = sorted(suffixes(&p_word(n - 1, q).evaluate(n)?).iter().map(|pi| pi.mul(&sigma)).collect());
            let chi_sigma = chi_word(n, q).evaluate(n)?.mul(&sigma);
            let alt2 =
                sorted(suffixes(&p_word(n - 1, q - 1).evaluate(n)?).iter().map(|pi| pi.mul(&chi_sigma)).collect());
            if alt1 != g1 || alt2 != g2 {
                return Err(violation(format!("the two descriptions of γ1/γ2 differ for σ = {sigma}")));
            }
        } else if !g2.is_empty() {
            return Err(violation(format!("γ2 is non-empty for the singleton cell of {sigma}")));
        }
        if g2.is_empty() != (cell.len() == 1) {
            return Err(violation(format!("γ2 = ∅ does not match |Γ| = 1 for σ = {sigma}")));
        }
        Ok((g1, g2))
    }
}

/// Decomposition report: `q`, `τ` word, member count, member windows.
pub fn decomposition_tsv(classes: &[AreaClass]) -> String {
    let mut out = String::from("q\ttau\tcount\tmembers\n");
    for c in classes {
        let members: Vec<String> = c.members.iter().map(|w| format!("({w})")).collect();
        out.push_str(&format!("{}\t{}\t{}\t{}\n", c.q, c.tau.reduced_word(), c.members.len(), members.join(" ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_is_in_area() {
        let y: SignedPerm = "-7,-5,6,4,3,-2,1".parse().unwrap();
        assert!(in_area(&y));
        assert!(in_area_reduced(&y));
        for n in 2..=6 {
            assert!(!in_area(&SignedPerm::identity(n)));
            assert!(in_area(&w_j(n)) && !in_area_reduced(&w_j(n)));
        }
    }

    #[test]
    fn membership_tests_agree() {
        for n in 1..=6 {
            let count = enumerate(n).unwrap().iter().filter(|w| in_area(w)).count();
            assert_eq!(count, (0..=n).map(|q| binomial(n, q).pow(2)).sum::<usize>());
        }
    }

    #[test]
    fn words_build_up_to_rank_seven() {
        for n in 1..=7 {
            let words = AreaWords::build(n).unwrap();
            assert!(words.get(0).p.is_empty() && words.get(n).p.is_empty());
            assert_eq!(words.sigma(0).length_t(), 0);
            assert_eq!(words.sigma(0), w_j(n));
            assert_eq!(words.sigma(n), w_j(n).mul(&SignedPerm::longest(n)));
        }
    }

    #[test]
    fn sigma_matches_the_row_form() {
        // σ_{n,q} = (-q, ..., -1, n, ..., q+1).
        let words = AreaWords::build(5).unwrap();
        assert_eq!(words.sigma(2).to_string(), "-2,-1,5,4,3");
    }

    #[test]
    fn decompositions_small() {
        for n in 1..=5 {
            let area = Area::new(n).unwrap();
            assert_eq!(area.decomposition().unwrap().len(), 1 << n);
            if n >= 2 {
                assert_eq!(area.upsilon_decomposition().unwrap().len(), 1 << (n - 1));
            }
        }
        assert!(matches!(Area::new(1).unwrap().upsilon_decomposition(), Err(Error::Domain(_))));
    }

    #[test]
    fn subcells() {
        let area = Area::new(4).unwrap();
        for cell in area.decomposition().unwrap() {
            let (g1, g2) = area.subcell_split(&cell.members).unwrap();
            assert_eq!(g1.len() + g2.len(), cell.members.len());
        }
        assert!(matches!(area.subcell_split(&[SignedPerm::identity(4)]), Err(Error::Domain(_))));
    }

    #[test]
    fn domain_errors() {
        let area = Area::new(3).unwrap();
        assert!(matches!(area.upsilon(&SignedPerm::identity(3)), Err(Error::Domain(_))));
        let not_suffix = SignedPerm::identity(3).mul_gen_right(Gen::T);
        assert!(matches!(area.asymptotic_cell(1, &not_suffix), Err(Error::Domain(_))));
    }

    #[test]
    fn report_format() {
        let area = Area::new(2).unwrap();
        let tsv = decomposition_tsv(&area.decomposition().unwrap());
        assert!(tsv.starts_with("q\ttau\tcount\tmembers\n"));
        assert_eq!(tsv.lines().count(), 5);
    }
}
