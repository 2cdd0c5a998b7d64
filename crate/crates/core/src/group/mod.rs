//! The hyperoctahedral group `W_n` realised as signed permutations.
//!
//! An element is stored in window notation `(w(1), ..., w(n))`. The
//! generators act as `t = (1,-1)` and `s_i = (i,i+1)(-i,-i-1)`, so right
//! multiplication by `t` negates the first entry and right multiplication by
//! `s_i` swaps entries `i` and `i+1`.

mod coset;
mod enumerate;
mod order;
mod tables;

pub use coset::{coset_decompose, CosetDecomposition, Parabolic};
pub use enumerate::{element_at, enumerate, group_order, index_of, MAX_ENUM_RANK};
pub use order::{bruhat_leq, is_suffix, suffixes};
pub use tables::CoxeterTables;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Storage capacity of a window.
pub const MAX_RANK: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    n: u8,
    w: [i8; MAX_RANK],
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_RANK, "rank {n} exceeds storage capacity");
        let mut w = [0i8; MAX_RANK];
        for (i, x) in w.iter_mut().enumerate().take(n) {
            *x = i as i8 + 1;
        }
        SignedPerm { n: n as u8, w }
    }

    pub fn from_window(window: &[i8]) -> Result<Self> {
        let n = window.len();
        if n > MAX_RANK {
            return Err(Error::InvalidRank(n, "0..=8"));
        }
        let mut seen = [false; MAX_RANK + 1];
        let mut w = [0i8; MAX_RANK];
        for (i, &x) in window.iter().enumerate() {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidInput(format!(
                    "window {window:?} is not a signed permutation"
                )));
            }
            seen[a] = true;
            w[i] = x;
        }
        Ok(SignedPerm { n: n as u8, w })
    }

    /// Builds an element without validating the window.
    pub(crate) fn from_window_unchecked(window: &[i8]) -> Self {
        let mut w = [0i8; MAX_RANK];
        w[..window.len()].copy_from_slice(window);
        SignedPerm { n: window.len() as u8, w }
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn window(&self) -> &[i8] {
        &self.w[..self.n as usize]
    }

    /// `w(i)` for `i` in `{±1, ..., ±n}`.
    #[inline]
    pub fn apply(&self, i: i8) -> i8 {
        if i > 0 {
            self.w[i as usize - 1]
        } else {
            -self.w[(-i) as usize - 1]
        }
    }

    /// Value at 1-based position `i`.
    #[inline]
    pub fn at(&self, i: usize) -> i8 {
        self.w[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.window().iter().enumerate().all(|(i, &x)| x == i as i8 + 1)
    }

    /// Composition `self · other`, i.e. `i ↦ self(other(i))`.
    pub fn mul(&self, other: &SignedPerm) -> SignedPerm {
        debug_assert_eq!(self.n, other.n);
        let mut w = [0i8; MAX_RANK];
        for (i, x) in w.iter_mut().enumerate().take(self.rank()) {
            *x = self.apply(other.w[i]);
        }
        SignedPerm { n: self.n, w }
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut w = [0i8; MAX_RANK];
        for (i, &x) in self.window().iter().enumerate() {
            let pos = x.unsigned_abs() as usize - 1;
            w[pos] = if x > 0 { i as i8 + 1 } else { -(i as i8 + 1) };
        }
        SignedPerm { n: self.n, w }
    }

    pub fn mul_gen_right(&self, g: Gen) -> SignedPerm {
        let mut r = *self;
        match g.0 {
            0 => r.w[0] = -r.w[0],
            i => r.w.swap(i as usize - 1, i as usize),
        }
        r
    }

    pub fn mul_gen_left(&self, g: Gen) -> SignedPerm {
        let mut r = *self;
        for x in r.w.iter_mut().take(self.rank()) {
            let a = x.abs();
            match g.0 {
                0 if a == 1 => *x = -*x,
                0 => {}
                i if a == i as i8 => *x = x.signum() * (a + 1),
                i if a == i as i8 + 1 => *x = x.signum() * (a - 1),
                _ => {}
            }
        }
        r
    }

    /// Coxeter length: `inv(w) + Σ_{w(i) < 0} |w(i)|`.
    pub fn length(&self) -> usize {
        let w = self.window();
        let mut len = 0usize;
        for i in 0..w.len() {
            if w[i] < 0 {
                len += (-w[i]) as usize;
            }
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    len += 1;
                }
            }
        }
        len
    }

    /// Number of occurrences of `t` in any reduced word.
    pub fn length_t(&self) -> usize {
        self.window().iter().filter(|&&x| x < 0).count()
    }

    pub fn is_right_descent(&self, g: Gen) -> bool {
        match g.0 {
            0 => self.w[0] < 0,
            i => self.w[i as usize] < self.w[i as usize - 1],
        }
    }

    pub fn is_left_descent(&self, g: Gen) -> bool {
        self.inverse().is_right_descent(g)
    }

    pub fn right_descents(&self) -> GenSet {
        let mut set = GenSet::EMPTY;
        for g in Gen::all(self.rank()) {
            if self.is_right_descent(g) {
                set.insert(g);
            }
        }
        set
    }

    pub fn left_descents(&self) -> GenSet {
        self.inverse().right_descents()
    }

    /// Whether `ℓ(w t_j) < ℓ(w)` where `t_j = (j, -j)`.
    #[inline]
    pub fn is_descent_tj(&self, j: usize) -> bool {
        self.w[j - 1] < 0
    }

    /// The reflection `t_j = s_{j-1} ⋯ s_1 t s_1 ⋯ s_{j-1}`.
    pub fn reflection_t(n: usize, j: usize) -> SignedPerm {
        let mut r = SignedPerm::identity(n);
        r.w[j - 1] = -(j as i8);
        r
    }

    /// Longest element `w_0 = (-1, ..., -n)`.
    pub fn longest(n: usize) -> SignedPerm {
        let mut r = SignedPerm::identity(n);
        for x in r.w.iter_mut().take(n) {
            *x = -*x;
        }
        r
    }

    /// Longest element `w_J = (n, ..., 1)` of the symmetric group `W_J`.
    pub fn longest_symmetric(n: usize) -> SignedPerm {
        let mut r = SignedPerm::identity(n);
        for (i, x) in r.w.iter_mut().enumerate().take(n) {
            *x = (n - i) as i8;
        }
        r
    }

    /// A reduced word, built by stripping right descents of smallest index.
    pub fn reduced_word(&self) -> GenWord {
        let mut letters = Vec::with_capacity(self.length());
        let mut cur = *self;
        while let Some(g) = Gen::all(self.rank()).find(|&g| cur.is_right_descent(g)) {
            letters.push(g);
            cur = cur.mul_gen_right(g);
        }
        letters.reverse();
        GenWord(letters)
    }

    /// Generators occurring in a reduced expression.
    pub fn support(&self) -> GenSet {
        let mut set = GenSet::EMPTY;
        for g in self.reduced_word().0 {
            set.insert(g);
        }
        set
    }

    /// Embeds an element of `W_m` into `W_n` (`m ≤ n`) fixing `m+1, ..., n`.
    pub fn extend_to(&self, n: usize) -> SignedPerm {
        let mut r = *self;
        for i in self.rank()..n {
            r.w[i] = i as i8 + 1;
        }
        r.n = n as u8;
        r
    }

    /// Restricts an element fixing `m+1, ..., n` to `W_m`.
    pub fn restrict_to(&self, m: usize) -> SignedPerm {
        debug_assert!(self.window()[m..].iter().enumerate().all(|(i, &x)| x == (m + i + 1) as i8));
        let mut r = *self;
        for x in r.w.iter_mut().skip(m) {
            *x = 0;
        }
        r.n = m as u8;
        r
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in self.window() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for SignedPerm {
    type Err = Error;

    /// Parses comma-separated window notation, e.g. `-7,-5,6,4,3,-2,1`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return SignedPerm::from_window(&[]);
        }
        let window = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i8>()
                    .map_err(|_| Error::Parse(format!("bad window entry {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPerm::from_window(&window)
    }
}

/// A Coxeter generator: `Gen(0)` is `t`, `Gen(i)` is `s_i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Gen(pub u8);

impl Gen {
    pub const T: Gen = Gen(0);

    pub fn s(i: usize) -> Gen {
        Gen(i as u8)
    }

    pub fn is_t(self) -> bool {
        self.0 == 0
    }

    /// All generators of `W_n`, `t` first.
    pub fn all(n: usize) -> impl Iterator<Item = Gen> + Clone {
        (0..n as u8).map(Gen)
    }

    pub fn valid_for(self, n: usize) -> bool {
        (self.0 as usize) < n
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => f.write_str("t"),
            i => write!(f, "s{i}"),
        }
    }
}

impl FromStr for Gen {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "t" => Ok(Gen::T),
            _ => s
                .strip_prefix('s')
                .and_then(|i| i.parse::<u8>().ok())
                .filter(|&i| i >= 1)
                .map(Gen)
                .ok_or_else(|| Error::Parse(format!("bad generator {s:?}"))),
        }
    }
}

/// A set of generators as a bitmask (bit 0 is `t`, bit `i` is `s_i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct GenSet(pub u16);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn insert(&mut self, g: Gen) {
        self.0 |= 1 << g.0;
    }

    pub fn contains(self, g: Gen) -> bool {
        self.0 & (1 << g.0) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Gen> {
        (0..16u8).filter(move |i| self.0 & (1 << i) != 0).map(Gen)
    }

    pub fn from_gens(gens: impl IntoIterator<Item = Gen>) -> GenSet {
        let mut s = GenSet::EMPTY;
        for g in gens {
            s.insert(g);
        }
        s
    }
}

impl fmt::Display for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        let names: Vec<String> = self.iter().map(|g| g.to_string()).collect();
        f.write_str(&names.join(","))
    }
}

/// A word over `{t, s_1, ..., s_{n-1}}`, read left to right as a product.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GenWord(pub Vec<Gen>);

impl GenWord {
    pub fn new(letters: Vec<Gen>) -> Self {
        GenWord(letters)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn evaluate(&self, n: usize) -> Result<SignedPerm> {
        let mut w = SignedPerm::identity(n);
        for &g in &self.0 {
            if !g.valid_for(n) {
                return Err(Error::InvalidLetter { letter: g.to_string(), rank: n });
            }
            w = w.mul_gen_right(g);
        }
        Ok(w)
    }

    pub fn is_reduced(&self, n: usize) -> Result<bool> {
        Ok(self.evaluate(n)?.length() == self.len())
    }

    pub fn concat(&self, other: &GenWord) -> GenWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        GenWord(v)
    }

    pub fn reversed(&self) -> GenWord {
        GenWord(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let names: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        f.write_str(&names.join(" "))
    }
}

impl FromStr for GenWord {
    type Err = Error;

    /// Whitespace-separated letters, e.g. `t s1 s2`; `e` or the empty string is the identity.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(GenWord::default());
        }
        s.split_whitespace().map(Gen::from_str).collect::<Result<Vec<_>>>().map(GenWord)
    }
}

/// Convenience for building `GenWord`s in code: `word(&[0, 1, 0, 1])`.
pub fn word(letters: &[u8]) -> GenWord {
    GenWord(letters.iter().map(|&i| Gen(i)).collect())
}

/// Product of a descending run `s_hi s_{hi-1} ⋯ s_lo` (`t` when an index is 0).
pub fn descending_run(hi: usize, lo: usize) -> GenWord {
    if hi < lo {
        return GenWord::default();
    }
    GenWord((lo..=hi).rev().map(Gen::s).collect())
}

/// Product of an ascending run `s_lo s_{lo+1} ⋯ s_hi`.
pub fn ascending_run(lo: usize, hi: usize) -> GenWord {
    if hi < lo {
        return GenWord::default();
    }
    GenWord((lo..=hi).map(Gen::s).collect())
}

/// Weight function with `L(s_i) = a` and `L(t) = b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, serde::Serialize, serde::Deserialize)]
pub struct WeightFunction {
    pub a: u32,
    pub b: u32,
}

/// Where the slope `b/a` sits relative to the rank.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// `b/a > n-1`
    Asymptotic,
    /// `b/a = n-1`
    Intermediate,
    /// `n-2 < b/a < n-1`
    SubAsymptotic,
    /// `b/a ≤ n-2`
    Below,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::Asymptotic => "asymptotic",
            Regime::Intermediate => "intermediate",
            Regime::SubAsymptotic => "sub-asymptotic",
            Regime::Below => "below",
        })
    }
}

impl WeightFunction {
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidInput(format!("weights must be positive, got a={a}, b={b}")));
        }
        Ok(WeightFunction { a, b })
    }

    /// `(1, n)`, an asymptotic representative for rank `n`.
    pub fn asymptotic(n: usize) -> Self {
        WeightFunction { a: 1, b: n as u32 }
    }

    /// `(1, n-1)`, the intermediate weight for rank `n`.
    pub fn intermediate(n: usize) -> Self {
        WeightFunction { a: 1, b: (n as u32).saturating_sub(1).max(1) }
    }

    #[inline]
    pub fn of(&self, g: Gen) -> u32 {
        if g.is_t() {
            self.b
        } else {
            self.a
        }
    }

    /// Exact test of `b/a > k`.
    #[inline]
    pub fn slope_exceeds(&self, k: i64) -> bool {
        (self.b as i64) > k * self.a as i64
    }

    /// Exact test of `b/a = k`.
    #[inline]
    pub fn slope_equals(&self, k: i64) -> bool {
        (self.b as i64) == k * self.a as i64
    }

    pub fn regime(&self, n: usize) -> Regime {
        let n = n as i64;
        if self.slope_exceeds(n - 1) {
            Regime::Asymptotic
        } else if self.slope_equals(n - 1) {
            Regime::Intermediate
        } else if self.slope_exceeds(n - 2) {
            Regime::SubAsymptotic
        } else {
            Regime::Below
        }
    }
}

impl fmt::Display for WeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a={}, b={})", self.a, self.b)
    }
}
