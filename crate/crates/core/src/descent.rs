//! Right descent sets and the weight-sensitive refinement `R^Ξ`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::Result;
use crate::group::{enumerate, Gen, GenSet, SignedPerm, WeightFunction};
use crate::partition::GroupPartition;

pub fn rdes(w: &SignedPerm) -> GenSet {
    w.right_descents()
}

/// `t s_1 t`, the extra member of `S^L` when `L(s_1) > L(t)`.
fn ts1t(n: usize) -> SignedPerm {
    SignedPerm::identity(n).mul_gen_right(Gen::T).mul_gen_right(Gen(1)).mul_gen_right(Gen::T)
}

/// Enhanced right descent set over `S^L = S ∪ {sts : L(t) > L(s)}`.
///
/// In type `B_n` the only candidates are `s_1 t s_1 = t_2` (when `b > a`)
/// and `t s_1 t` (when `a > b`).
pub fn rdes_enhanced(w: &SignedPerm, weight: WeightFunction) -> XiDescentSet {
    let n = w.rank();
    let mut out = XiDescentSet { classical: rdes(w), ..Default::default() };
    if n < 2 {
        return out;
    }
    if weight.b > weight.a && w.is_descent_tj(2) {
        out.extended |= 1 << 2;
    } else if weight.a > weight.b {
        out.ts1t = w.mul(&ts1t(n)).length() < w.length();
    }
    out
}

/// A member of `R^Ξ` or of the enhanced set, stored as explicit membership bits.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct XiDescentSet {
    pub classical: GenSet,
    /// Bit `k` set means `t_k` is a member (`2 ≤ k ≤ n`).
    pub extended: u16,
    /// Only ever set by the `b < a` fallback.
    pub ts1t: bool,
}

impl XiDescentSet {
    pub fn contains_tk(&self, k: usize) -> bool {
        if k == 1 {
            self.classical.contains(Gen::T)
        } else {
            self.extended & (1 << k) != 0
        }
    }

    /// `R^Ξ(w) ∩ {t_1, ..., t_n}` as a bitmask (bit `k` for `t_k`).
    pub fn t_part(&self) -> u16 {
        self.extended | u16::from(self.classical.contains(Gen::T)) << 1
    }

    pub fn len(&self) -> usize {
        self.classical.0.count_ones() as usize + self.extended.count_ones() as usize + usize::from(self.ts1t)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl fmt::Display for XiDescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut names: Vec<String> = self.classical.iter().map(|g| g.to_string()).collect();
        names.extend((2..16).filter(|&k| self.extended & (1 << k) != 0).map(|k| format!("t{k}")));
        if self.ts1t {
            names.push("ts1t".into());
        }
        if names.is_empty() {
            return f.write_str("∅");
        }
        f.write_str(&names.join(","))
    }
}

/// `R^Ξ(w) = R(w) ∪ {t_k : b > (k-1)a, w(k) < 0}` for `b ≥ a`.
/// For `b < a` this is the enhanced set, which then contains `t s_1 t` instead.
pub fn rxi(w: &SignedPerm, weight: WeightFunction) -> XiDescentSet {
    if weight.b < weight.a {
        return rdes_enhanced(w, weight);
    }
    let mut extended = 0u16;
    for k in 2..=w.rank() {
        if weight.slope_exceeds(k as i64 - 1) && w.is_descent_tj(k) {
            extended |= 1 << k;
        }
    }
    XiDescentSet { classical: rdes(w), extended, ts1t: false }
}

/// `R^Ξ` for every element, in canonical enumeration order.
pub fn rxi_all(n: usize, weight: WeightFunction) -> Result<Vec<XiDescentSet>> {
    Ok(enumerate(n)?.par_iter().map(|w| rxi(w, weight)).collect())
}

pub fn rxi_partition(n: usize, weight: WeightFunction) -> Result<GroupPartition> {
    Ok(GroupPartition::from_labels(n, &rxi_all(n, weight)?))
}

/// Non-empty fibers of `R^Ξ` with their sizes, sorted by label.
pub fn rxi_fibers(n: usize, weight: WeightFunction) -> Result<BTreeMap<XiDescentSet, usize>> {
    let mut out = BTreeMap::new();
    for x in rxi_all(n, weight)? {
        *out.entry(x).or_insert(0) += 1;
    }
    Ok(out)
}

/// Fiber report: one `label<TAB>size` line per non-empty fiber.
pub fn fiber_tsv(fibers: &BTreeMap<XiDescentSet, usize>) -> String {
    let mut out = String::from("fiber\tsize\n");
    for (x, c) in fibers {
        out.push_str(&format!("{x}\t{c}\n"));
    }
    out
}

/// Expected fiber count: `2·3^{n-1}` when asymptotic, `2^{n-k}·3^k` for `b/a ∈ (k, k+1]`.
pub fn expected_fiber_count(n: usize, weight: WeightFunction) -> Option<u64> {
    if weight.slope_exceeds(n as i64 - 1) {
        return Some(2 * 3u64.pow(n as u32 - 1));
    }
    let k = (1..n).find(|&k| weight.slope_exceeds(k as i64) && !weight.slope_exceeds(k as i64 + 1))?;
    Some(2u64.pow((n - k) as u32) * 3u64.pow(k as u32))
}
