//! Knuth relations of types I, II and III on signed permutations.
//!
//! A move of kind I or II at level `k` looks at three consecutive window
//! entries `i, i+1, i+2` with `i + 2 ≤ k`; a move of kind III swaps two
//! adjacent entries of opposite sign with `i + 1 ≤ k`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::area::in_area;
use crate::error::{Error, Result};
use crate::graph::union_find_labels;
use crate::group::{enumerate, index_of, Gen, SignedPerm};
use crate::partition::GroupPartition;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum KnuthKind {
    I,
    II,
    III,
}

impl fmt::Display for KnuthKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KnuthKind::I => "I",
            KnuthKind::II => "II",
            KnuthKind::III => "III",
        })
    }
}

impl FromStr for KnuthKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" => Ok(KnuthKind::I),
            "II" => Ok(KnuthKind::II),
            "III" => Ok(KnuthKind::III),
            _ => Err(Error::Parse(format!("unknown Knuth move kind {s:?}"))),
        }
    }
}

/// A relation kind together with its level `k`.
pub type MoveKind = (KnuthKind, usize);

/// Prints as `kind@i`; the level is not part of the text form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct KnuthMove {
    pub kind: KnuthKind,
    pub level: usize,
    pub pos: usize,
}

impl KnuthMove {
    fn in_range(&self) -> bool {
        let span = if self.kind == KnuthKind::III { 1 } else { 2 };
        self.pos >= 1 && self.pos + span <= self.level
    }

    /// The generator `s` with `w' = w·s`.
    pub fn generator(&self) -> Gen {
        match self.kind {
            KnuthKind::I => Gen::s(self.pos + 1),
            KnuthKind::II | KnuthKind::III => Gen::s(self.pos),
        }
    }

    /// Whether the window condition holds for `w` (range included).
    pub fn applies_to(&self, w: &SignedPerm) -> bool {
        if !self.in_range() || self.level > w.rank() {
            return false;
        }
        let i = self.pos;
        match self.kind {
            KnuthKind::I => {
                let (a, b, c) = (w.at(i), w.at(i + 1), w.at(i + 2));
                (b < a && a < c) || (c < a && a < b)
            }
            KnuthKind::II => {
                let (a, b, c) = (w.at(i), w.at(i + 1), w.at(i + 2));
                (b < c && c < a) || (a < c && c < b)
            }
            KnuthKind::III => (w.at(i) < 0) != (w.at(i + 1) < 0),
        }
    }

    pub fn apply(&self, w: &SignedPerm) -> Option<SignedPerm> {
        self.applies_to(w).then(|| w.mul_gen_right(self.generator()))
    }
}

impl fmt::Display for KnuthMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.kind, self.pos)
    }
}

pub fn format_moves(moves: &[KnuthMove]) -> String {
    moves.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// Parses `III@4, I@2`; each kind is assigned its level from `levels`.
pub fn parse_moves(text: &str, levels: &[MoveKind]) -> Result<Vec<KnuthMove>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|tok| {
            let (kind, pos) = tok.split_once('@').ok_or_else(|| Error::Parse(format!("bad move {tok:?}")))?;
            let kind: KnuthKind = kind.parse()?;
            let pos: usize = pos.parse().map_err(|_| Error::Parse(format!("bad move position in {tok:?}")))?;
            let level = levels
                .iter()
                .find(|(k, _)| *k == kind)
                .map(|&(_, l)| l)
                .ok_or_else(|| Error::InvalidInput(format!("no level given for kind {kind}")))?;
            Ok(KnuthMove { kind, level, pos })
        })
        .collect()
}

/// Applies a move list in order, failing on the first inapplicable move.
pub fn replay(w: &SignedPerm, moves: &[KnuthMove]) -> Result<SignedPerm> {
    moves.iter().try_fold(*w, |cur, m| {
        m.apply(&cur).ok_or_else(|| Error::InvalidInput(format!("move {m} does not apply to {cur}")))
    })
}

/// All moves of the given kinds that apply to `w`, with their results.
pub fn applicable_moves(w: &SignedPerm, kinds: &[MoveKind]) -> Vec<(KnuthMove, SignedPerm)> {
    let mut out = Vec::new();
    for &(kind, level) in kinds {
        for pos in 1..=level.min(w.rank()) {
            let m = KnuthMove { kind, level, pos };
            if let Some(x) = m.apply(w) {
                out.push((m, x));
            }
        }
    }
    out
}

/// Connected components of the move graph on `W_n`.
pub fn knuth_classes(n: usize, kinds: &[MoveKind]) -> Result<GroupPartition> {
    let elements = enumerate(n)?;
    let pairs: Vec<(u32, u32)> = elements
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, w)| applicable_moves(w, kinds).into_iter().map(move |(_, x)| (i as u32, index_of(&x) as u32)))
        .collect();
    let labels = union_find_labels(elements.len(), pairs);
    Ok(GroupPartition::from_labels(n, &labels))
}

/// `{I_k, II_k, III_k}`.
pub fn all_kinds(k: usize) -> [MoveKind; 3] {
    [(KnuthKind::I, k), (KnuthKind::II, k), (KnuthKind::III, k)]
}

/// Kinds `I_n`, `II_n` and `III_{n-1}`.
pub fn bridge_kinds(n: usize) -> [MoveKind; 3] {
    [(KnuthKind::I, n), (KnuthKind::II, n), (KnuthKind::III, n.saturating_sub(1))]
}

/// A move sequence from `w` to `w·s_{n-1}` using only `I_n`, `II_n` and
/// `III_{n-1}`, for `w ∉ Area_n` whose last two entries differ in sign.
/// Breadth-first, so the sequence is a shortest one; ties follow move order.
pub fn knuth_bridge(w: &SignedPerm) -> Result<Vec<KnuthMove>> {
    let n = w.rank();
    if n < 2 || in_area(w) || (w.at(n - 1) < 0) == (w.at(n) < 0) {
        return Err(Error::Domain(format!(
            "{w} must lie outside Area_n and end in two entries of opposite sign"
        )));
    }
    let target = w.mul_gen_right(Gen::s(n - 1));
    let kinds = bridge_kinds(n);
    let mut parent: HashMap<SignedPerm, Option<(SignedPerm, KnuthMove)>> = HashMap::from([(*w, None)]);
    let mut queue = VecDeque::from([*w]);
    while let Some(cur) = queue.pop_front() {
        if cur == target {
            let mut path = Vec::new();
            let mut at = cur;
            while let Some(&Some((prev, m))) = parent.get(&at) {
                path.push(m);
                at = prev;
            }
            path.reverse();
            return Ok(path);
        }
        for (m, next) in applicable_moves(&cur, &kinds) {
            parent.entry(next).or_insert_with(|| {
                queue.push_back(next);
                Some((cur, m))
            });
        }
    }
    Err(Error::InvariantViolation(format!("no bridge from {w} to {target}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::{insertion_bitableau, rs_classic};

    fn w(s: &str) -> SignedPerm {
        s.parse().unwrap()
    }

    #[test]
    fn identity_has_no_type_three_moves() {
        assert!(applicable_moves(&SignedPerm::identity(4), &[(KnuthKind::III, 4)]).is_empty());
    }

    #[test]
    fn sign_swap_in_rank_two() {
        let moves = applicable_moves(&w("-1,2"), &[(KnuthKind::III, 2)]);
        assert_eq!(moves.len(), 1);
        assert_eq!(moves[0].0, KnuthMove { kind: KnuthKind::III, level: 2, pos: 1 });
        assert_eq!(moves[0].1, w("2,-1"));
    }

    #[test]
    fn moves_are_involutive() {
        for n in 1..=4 {
            for x in enumerate(n).unwrap() {
                for (m, y) in applicable_moves(&x, &all_kinds(n)) {
                    assert_eq!(m.apply(&y), Some(x), "{m} on {x}");
                    assert_eq!(y.length_t(), x.length_t());
                }
            }
        }
    }

    #[test]
    fn classic_knuth_classes_are_p_fibers() {
        let classes = knuth_classes(3, &[(KnuthKind::I, 3), (KnuthKind::II, 3)]).unwrap();
        let elements = enumerate(3).unwrap();
        for (i, x) in elements.iter().enumerate() {
            for (j, y) in elements.iter().enumerate() {
                if x.window().iter().all(|&v| v > 0) && y.window().iter().all(|&v| v > 0) {
                    let px = rs_classic(&x.window().iter().map(|&v| v as u8).collect::<Vec<_>>()).0;
                    let py = rs_classic(&y.window().iter().map(|&v| v as u8).collect::<Vec<_>>()).0;
                    assert_eq!(classes.class_of(i) == classes.class_of(j), px == py);
                }
            }
        }
    }

    #[test]
    fn full_closure_is_insertion_fibers_small() {
        for n in 1..=4 {
            let classes = knuth_classes(n, &all_kinds(n)).unwrap();
            let fibers = GroupPartition::from_labels(
                n,
                &enumerate(n).unwrap().iter().map(insertion_bitableau).collect::<Vec<_>>(),
            );
            assert_eq!(classes, fibers);
        }
    }

    #[test]
    fn no_kinds_gives_singletons() {
        assert_eq!(knuth_classes(3, &[]).unwrap().num_classes(), 48);
    }

    #[test]
    fn bridges_in_rank_three() {
        let mut count = 0;
        for x in enumerate(3).unwrap() {
            match knuth_bridge(&x) {
                Ok(path) => {
                    count += 1;
                    assert_eq!(replay(&x, &path).unwrap(), x.mul_gen_right(Gen::s(2)));
                    let text = format_moves(&path);
                    assert_eq!(parse_moves(&text, &bridge_kinds(3)).unwrap(), path);
                }
                Err(Error::Domain(_)) => {}
                Err(e) => panic!("{x}: {e}"),
            }
        }
        assert!(count > 0);
    }

    #[test]
    fn bridge_rejects_ineligible_elements() {
        assert!(matches!(knuth_bridge(&SignedPerm::identity(3)), Err(Error::Domain(_))));
        assert!(matches!(knuth_bridge(&w("3,2,1")), Err(Error::Domain(_))));
    }

    #[test]
    fn move_text() {
        let ms = parse_moves("III@4, I@2", &all_kinds(5)).unwrap();
        assert_eq!(format_moves(&ms), "III@4, I@2");
        assert!(parse_moves("IV@1", &all_kinds(5)).is_err());
        assert!(replay(&SignedPerm::identity(5), &ms).is_err());
    }
}
