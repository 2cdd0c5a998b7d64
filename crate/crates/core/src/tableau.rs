//! Young tableaux, Robinson–Schensted and its type-B generalisation.
//!
//! The generalised correspondence splits the window of `w` by sign, keeping
//! positions. Positive values are row-inserted into `A.plus` with their
//! positions recorded in `B.plus`; absolute values of negative entries go
//! into `A.minus`, with positions recorded in `B.minus`.
//!
//! Text format: rows joined by `;`, entries by spaces, the two halves of a
//! bitableau by ` | `, and `∅` for an empty tableau (`-` is also accepted).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::SignedPerm;

pub type Partition = Vec<usize>;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct StandardTableau {
    rows: Vec<Vec<u8>>,
}

impl StandardTableau {
    pub fn empty() -> Self {
        StandardTableau::default()
    }

    /// Validates that rows and columns strictly increase and rows are non-empty
    /// with weakly decreasing lengths.
    pub fn from_rows(rows: Vec<Vec<u8>>) -> Result<Self> {
        let bad = |why: &str| Error::InvalidInput(format!("not a standard tableau ({why}): {rows:?}"));
        let mut seen = std::collections::HashSet::new();
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(bad("empty row"));
            }
            if r > 0 && row.len() > rows[r - 1].len() {
                return Err(bad("row lengths increase"));
            }
            if row.windows(2).any(|p| p[0] >= p[1]) {
                return Err(bad("row not increasing"));
            }
            if r > 0 && row.iter().zip(&rows[r - 1]).any(|(x, above)| x <= above) {
                return Err(bad("column not increasing"));
            }
            if row.iter().any(|&x| x == 0 || !seen.insert(x)) {
                return Err(bad("repeated or zero entry"));
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = u8> + '_ {
        self.rows.iter().flatten().copied()
    }

    /// Row insertion of `x`; returns the row that grew.
    fn insert(&mut self, mut x: u8) -> usize {
        for (r, row) in self.rows.iter_mut().enumerate() {
            match row.iter().position(|&y| y > x) {
                Some(j) => x = std::mem::replace(&mut row[j], x),
                None => {
                    row.push(x);
                    return r;
                }
            }
        }
        self.rows.push(vec![x]);
        self.rows.len() - 1
    }

    /// Inverse of [`insert`](Self::insert) starting from the last box of row `r`.
    fn uninsert(&mut self, r: usize) -> u8 {
        let mut x = self.rows[r].pop().expect("row is non-empty");
        if self.rows[r].is_empty() {
            self.rows.pop();
        }
        for row in self.rows[..r].iter_mut().rev() {
            let j = row.iter().rposition(|&y| y < x).expect("reverse bump has a target");
            x = std::mem::replace(&mut row[j], x);
        }
        x
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("∅");
        }
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(u8::to_string).collect::<Vec<_>>().join(" ")).collect();
        f.write_str(&rows.join(";"))
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for StandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "∅" || s == "-" || s.is_empty() {
            return Ok(StandardTableau::empty());
        }
        let rows = s
            .split(';')
            .map(|row| {
                row.split_whitespace()
                    .map(|x| x.parse::<u8>().map_err(|_| Error::Parse(format!("bad tableau entry {x:?}"))))
                    .collect::<Result<Vec<u8>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        StandardTableau::from_rows(rows)
    }
}

/// RS on a sequence of `(value, label)` pairs: values are inserted, labels recorded.
fn rs_pairs(seq: impl IntoIterator<Item = (u8, u8)>) -> (StandardTableau, StandardTableau) {
    let mut p = StandardTableau::empty();
    let mut q = StandardTableau::empty();
    for (value, label) in seq {
        let r = p.insert(value);
        if r == q.rows.len() {
            q.rows.push(Vec::new());
        }
        q.rows[r].push(label);
    }
    (p, q)
}

/// Inverse of [`rs_pairs`]; returns `(label, value)` pairs in increasing label order.
fn rs_pairs_inverse(p: &StandardTableau, q: &StandardTableau) -> Result<Vec<(u8, u8)>> {
    if p.shape() != q.shape() {
        return Err(Error::InvalidInput(format!("shapes differ: {p} vs {q}")));
    }
    let (mut p, mut q) = (p.clone(), q.clone());
    let mut out = Vec::with_capacity(p.size());
    while !q.is_empty() {
        let (r, _) = q
            .rows
            .iter()
            .enumerate()
            .map(|(r, row)| (r, *row.last().unwrap()))
            .max_by_key(|&(_, x)| x)
            .unwrap();
        let label = q.rows[r].pop().unwrap();
        if q.rows[r].is_empty() {
            q.rows.pop();
        }
        out.push((label, p.uninsert(r)));
    }
    out.reverse();
    Ok(out)
}

/// Classic RS for a permutation `u` of `1..=n` in one-line notation.
pub fn rs_classic(u: &[u8]) -> (StandardTableau, StandardTableau) {
    rs_pairs(u.iter().enumerate().map(|(i, &x)| (x, i as u8 + 1)))
}

pub fn rs_classic_inverse(p: &StandardTableau, q: &StandardTableau) -> Result<Vec<u8>> {
    Ok(rs_pairs_inverse(p, q)?.into_iter().map(|(_, v)| v).collect())
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bitableau {
    pub plus: StandardTableau,
    pub minus: StandardTableau,
}

impl Bitableau {
    pub fn shape(&self) -> Bipartition {
        Bipartition { plus: self.plus.shape(), minus: self.minus.shape() }
    }

    pub fn size(&self) -> usize {
        self.plus.size() + self.minus.size()
    }
}

impl fmt::Display for Bitableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.plus, self.minus)
    }
}

impl fmt::Debug for Bitableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Bitableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s.split_once('|').ok_or_else(|| Error::Parse(format!("bitableau needs '|': {s:?}")))?;
        Ok(Bitableau { plus: a.parse()?, minus: b.parse()? })
    }
}

/// `w ↦ (A_n(w), B_n(w))`.
pub fn rs_generalized(w: &SignedPerm) -> (Bitableau, Bitableau) {
    let win = w.window();
    let pos = win.iter().enumerate().filter(|(_, &x)| x > 0).map(|(i, &x)| (x as u8, i as u8 + 1));
    let neg = win.iter().enumerate().filter(|(_, &x)| x < 0).map(|(i, &x)| (x.unsigned_abs(), i as u8 + 1));
    let (ap, bp) = rs_pairs(pos);
    let (am, bm) = rs_pairs(neg);
    (Bitableau { plus: ap, minus: am }, Bitableau { plus: bp, minus: bm })
}

pub fn insertion_bitableau(w: &SignedPerm) -> Bitableau {
    rs_generalized(w).0
}

pub fn recording_bitableau(w: &SignedPerm) -> Bitableau {
    rs_generalized(w).1
}

pub fn rs_generalized_inverse(a: &Bitableau, b: &Bitableau) -> Result<SignedPerm> {
    let n = a.size();
    let covers = |t: &Bitableau| {
        let mut e: Vec<u8> = t.plus.entries().chain(t.minus.entries()).collect();
        e.sort_unstable();
        e == (1..=n as u8).collect::<Vec<_>>()
    };
    if !covers(a) || !covers(b) {
        return Err(Error::InvalidInput(format!("bitableaux must each contain 1..={n}: {a} / {b}")));
    }
    let mut win = vec![0i8; n];
    for (label, value) in rs_pairs_inverse(&a.plus, &b.plus)? {
        win[label as usize - 1] = value as i8;
    }
    for (label, value) in rs_pairs_inverse(&a.minus, &b.minus)? {
        win[label as usize - 1] = -(value as i8);
    }
    SignedPerm::from_window(&win)
}

/// `sh(w)`, the shape of `A_n(w)`.
pub fn shape(w: &SignedPerm) -> Bipartition {
    insertion_bitableau(w).shape()
}

/// A pair of partitions `(λ⁺ | λ⁻)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Bipartition {
    pub plus: Partition,
    pub minus: Partition,
}

impl Bipartition {
    pub fn new(plus: Partition, minus: Partition) -> Result<Self> {
        for p in [&plus, &minus] {
            if p.contains(&0) || p.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidInput(format!("{p:?} is not a partition")));
            }
        }
        Ok(Bipartition { plus, minus })
    }

    /// `ζ_q = (1^{n-q} | 1^q)`.
    pub fn zeta(n: usize, q: usize) -> Self {
        Bipartition { plus: vec![1; n - q], minus: vec![1; q] }
    }

    pub fn size(&self) -> usize {
        self.plus.iter().sum::<usize>() + self.minus.iter().sum::<usize>()
    }

    /// `λ' = ((λ⁻)' | (λ⁺)')`.
    pub fn conjugate(&self) -> Self {
        Bipartition { plus: conjugate(&self.minus), minus: conjugate(&self.plus) }
    }

    /// Number of standard bitableaux of this shape on `1..=n`.
    pub fn count_standard(&self) -> u64 {
        let n = self.size() as u64;
        let k = self.plus.iter().sum::<usize>() as u64;
        binomial(n, k) * count_standard_tableaux(&self.plus) * count_standard_tableaux(&self.minus)
    }
}

fn fmt_partition(p: &[usize]) -> String {
    if p.is_empty() {
        return "∅".into();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < p.len() {
        let j = p[i..].iter().take_while(|&&x| x == p[i]).count();
        parts.push(if j == 1 { p[i].to_string() } else { format!("{}^{}", p[i], j) });
        i += j;
    }
    parts.join(" ")
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", fmt_partition(&self.plus), fmt_partition(&self.minus))
    }
}

pub fn conjugate(p: &[usize]) -> Partition {
    let len = p.first().copied().unwrap_or(0);
    (1..=len).map(|i| p.iter().filter(|&&x| x >= i).count()).collect()
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Partition, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            cur.push(k);
            go(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn bipartitions(n: usize) -> Vec<Bipartition> {
    (0..=n)
        .flat_map(|k| {
            let minus = partitions(n - k);
            partitions(k)
                .into_iter()
                .flat_map(move |p| minus.clone().into_iter().map(move |m| Bipartition { plus: p.clone(), minus: m }))
        })
        .collect()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `f^λ = |λ|! / Π hooks`.
pub fn count_standard_tableaux(p: &[usize]) -> u64 {
    let n: usize = p.iter().sum();
    let conj = conjugate(p);
    let hooks: u128 = p
        .iter()
        .enumerate()
        .flat_map(|(i, &row)| {
            let conj = &conj;
            (0..row).map(move |j| (row - j - 1 + conj[j] - i - 1 + 1) as u128)
        })
        .product();
    ((1..=n as u128).product::<u128>() / hooks) as u64
}

/// YBT: the number of standard bitableaux of size `n`.
pub fn count_standard_bitableaux(n: usize) -> u64 {
    bipartitions(n).iter().map(Bipartition::count_standard).sum()
}

/// All standard tableaux of shape `p` on the entries `1..=|p|`, sorted.
pub fn standard_tableaux(p: &[usize]) -> Vec<StandardTableau> {
    let n: usize = p.iter().sum();
    if n == 0 {
        return vec![StandardTableau::empty()];
    }
    let mut out = Vec::new();
    // Remove the largest entry from each corner and recurse.
    for r in 0..p.len() {
        let is_corner = p.get(r + 1).is_none_or(|&below| below < p[r]);
        if !is_corner {
            continue;
        }
        let mut smaller = p.to_vec();
        smaller[r] -= 1;
        if smaller[r] == 0 {
            smaller.pop();
        }
        for mut t in standard_tableaux(&smaller) {
            if r == t.rows.len() {
                t.rows.push(Vec::new());
            }
            t.rows[r].push(n as u8);
            out.push(t);
        }
    }
    out.sort();
    out
}

/// `w_λ = w_{I(λ)} · w_q`: reverse consecutive blocks of sizes
/// `λ⁺_1, ..., λ⁺_f, λ⁻_1, ..., λ⁻_g` after negating the first `q = |λ⁺|` letters.
pub fn canonical_element(lambda: &Bipartition) -> SignedPerm {
    let n = lambda.size();
    let q: usize = lambda.plus.iter().sum();
    let mut w_i = vec![0i8; n];
    let mut start = 0;
    for &len in lambda.plus.iter().chain(&lambda.minus) {
        for j in 0..len {
            w_i[start + j] = (start + len - j) as i8;
        }
        start += len;
    }
    let win: Vec<i8> = (0..n).map(|i| if i < q { -w_i[i] } else { w_i[i] }).collect();
    SignedPerm::from_window(&win).expect("w_λ is a signed permutation")
}

/// Lexicographic rank of a permutation of `1..=n` (Lehmer code).
pub fn lehmer_rank(u: &[u8]) -> usize {
    let n = u.len();
    let mut rank = 0usize;
    for i in 0..n {
        let smaller = u[i + 1..].iter().filter(|&&x| x < u[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

pub fn lehmer_unrank(n: usize, mut rank: usize) -> Vec<u8> {
    let mut digits = vec![0usize; n];
    for i in (0..n).rev() {
        let base = n - i;
        digits[i] = rank % base;
        rank /= base;
    }
    let mut pool: Vec<u8> = (1..=n as u8).collect();
    digits.into_iter().map(|d| pool.remove(d)).collect()
}
