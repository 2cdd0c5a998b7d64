//! Test-side oracles built straight from the definitions, sharing no code
//! with the library beyond the window type used to exchange elements.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};
use std::hash::Hash;

use bcells::group::index_of;
use bcells::SignedPerm;

pub type Window = Vec<i8>;

/// Every signed permutation of rank `n`, in no particular order.
pub fn all_windows(n: usize) -> Vec<Window> {
    fn go(n: usize, cur: &mut Window, used: &mut [bool], out: &mut Vec<Window>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n {
            if used[v] {
                continue;
            }
            used[v] = true;
            for s in [1i8, -1] {
                cur.push(s * v as i8);
                go(n, cur, used, out);
                cur.pop();
            }
            used[v] = false;
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut vec![false; n + 1], &mut out);
    out
}

/// `inv(w) + #{i < j : w(i) + w(j) < 0} + #{i : w(i) < 0}`.
pub fn length(w: &[i8]) -> usize {
    let mut l = w.iter().filter(|&&x| x < 0).count();
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            l += usize::from(w[i] > w[j]) + usize::from(w[i] + w[j] < 0);
        }
    }
    l
}

/// `w·s_i` for `i ≥ 1`, `w·t` for `i = 0`.
pub fn times_gen(w: &[i8], i: usize) -> Window {
    let mut out = w.to_vec();
    if i == 0 {
        out[0] = -out[0];
    } else {
        out.swap(i - 1, i);
    }
    out
}

/// `w·t_k`, which negates position `k`.
pub fn times_tk(w: &[i8], k: usize) -> Window {
    let mut out = w.to_vec();
    out[k - 1] = -out[k - 1];
    out
}

/// `R^Ξ` for `b ≥ a` from length comparisons: generator indices `0..n`, then `t_k` as `n + k`.
pub fn rxi_by_length(w: &[i8], a: u32, b: u32) -> Vec<usize> {
    let n = w.len();
    let l = length(w);
    let mut out: Vec<usize> = (0..n).filter(|&i| length(&times_gen(w, i)) < l).collect();
    for k in 2..=n {
        if b > (k as u32 - 1) * a && length(&times_tk(w, k)) < l {
            out.push(n + k);
        }
    }
    out
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Standard Young tableaux of a shape, by removing corners.
pub fn syt_count(shape: &[usize], memo: &mut HashMap<Vec<usize>, u64>) -> u64 {
    let shape: Vec<usize> = shape.iter().copied().filter(|&r| r > 0).collect();
    if shape.iter().sum::<usize>() <= 1 {
        return 1;
    }
    if let Some(&c) = memo.get(&shape) {
        return c;
    }
    let mut total = 0;
    for r in 0..shape.len() {
        if r + 1 == shape.len() || shape[r + 1] < shape[r] {
            let mut smaller = shape.clone();
            smaller[r] -= 1;
            total += syt_count(&smaller, memo);
        }
    }
    memo.insert(shape, total);
    total
}

pub fn integer_partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in integer_partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Standard bitableaux of size `n`: `Σ C(n, k) f^λ f^μ` over `|λ| = k`, `|μ| = n - k`.
pub fn standard_bitableaux(n: usize) -> u64 {
    let mut memo = HashMap::new();
    let mut total = 0;
    for k in 0..=n {
        let left: u64 = integer_partitions(k, k).iter().map(|p| syt_count(p, &mut memo)).sum();
        let right: u64 = integer_partitions(n - k, n - k).iter().map(|p| syt_count(p, &mut memo)).sum();
        total += binomial(n, k) * left * right;
    }
    total
}

#[allow(clippy::upper_case_acronyms)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kind {
    I,
    II,
    III,
}

/// Knuth neighbours of `w` for the given `(kind, level)` pairs.
pub fn knuth_neighbours(w: &[i8], kinds: &[(Kind, usize)]) -> Vec<Window> {
    let mut out = Vec::new();
    for &(kind, k) in kinds {
        match kind {
            Kind::I | Kind::II => {
                for i in 0..k.saturating_sub(2) {
                    let (x, y, z) = (w[i], w[i + 1], w[i + 2]);
                    if kind == Kind::I && ((y < x && x < z) || (z < x && x < y)) {
                        out.push(swap(w, i + 1));
                    }
                    if kind == Kind::II && ((y < z && z < x) || (x < z && z < y)) {
                        out.push(swap(w, i));
                    }
                }
            }
            Kind::III => {
                for i in 0..k.saturating_sub(1) {
                    if (w[i] < 0) != (w[i + 1] < 0) {
                        out.push(swap(w, i));
                    }
                }
            }
        }
    }
    out
}

fn swap(w: &[i8], i: usize) -> Window {
    let mut out = w.to_vec();
    out.swap(i, i + 1);
    out
}

/// Connected components of the Knuth graph by breadth-first search.
pub fn knuth_components(n: usize, kinds: &[(Kind, usize)]) -> Vec<HashSet<Window>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for w in all_windows(n) {
        if !seen.insert(w.clone()) {
            continue;
        }
        let mut comp = HashSet::from([w.clone()]);
        let mut queue = VecDeque::from([w]);
        while let Some(x) = queue.pop_front() {
            for y in knuth_neighbours(&x, kinds) {
                if seen.insert(y.clone()) {
                    comp.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        out.push(comp);
    }
    out
}

pub fn perm(w: &[i8]) -> SignedPerm {
    SignedPerm::from_window(w).expect("valid window")
}

pub fn index(w: &[i8]) -> usize {
    index_of(&perm(w))
}

/// A partition given by labels, as a set of index sets.
pub fn blocks<K: Hash + Eq>(labels: impl IntoIterator<Item = (usize, K)>) -> HashSet<Vec<usize>> {
    let mut map: HashMap<K, Vec<usize>> = HashMap::new();
    for (i, k) in labels {
        map.entry(k).or_default().push(i);
    }
    map.into_values()
        .map(|mut v| {
            v.sort_unstable();
            v
        })
        .collect()
}

pub fn blocks_of(p: &bcells::GroupPartition) -> HashSet<Vec<usize>> {
    blocks(p.labels().iter().enumerate().map(|(i, &l)| (i, l)))
}
