use std::collections::HashMap;
use std::hash::Hash;

use crate::graph::canonical_labels;

/// A labelled partition of `{0, ..., len-1}`, normally the canonical indices
/// of `W_n`. Class ids are dense and ordered by smallest member, so two
/// partitions are equal exactly when their label vectors are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPartition {
    rank: usize,
    labels: Vec<u32>,
    num_classes: usize,
}

impl GroupPartition {
    /// Groups indices by an arbitrary key.
    pub fn from_labels<K: Hash + Eq + Clone>(rank: usize, raw: &[K]) -> Self {
        let labels = canonical_labels(raw);
        let num_classes = labels.iter().max().map_or(0, |&m| m as usize + 1);
        GroupPartition { rank, labels, num_classes }
    }

    pub fn discrete(rank: usize, len: usize) -> Self {
        GroupPartition { rank, labels: (0..len as u32).collect(), num_classes: len }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn num_classes(&self) -> usize {
        self.num_classes
    }

    #[inline]
    pub fn class_of(&self, i: usize) -> u32 {
        self.labels[i]
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Members of each class, ascending, indexed by class id.
    pub fn classes(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); self.num_classes];
        for (i, &c) in self.labels.iter().enumerate() {
            out[c as usize].push(i as u32);
        }
        out
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.num_classes];
        for &c in &self.labels {
            out[c as usize] += 1;
        }
        out
    }

    /// Whether every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &GroupPartition) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let mut image: Vec<Option<u32>> = vec![None; self.num_classes];
        self.labels.iter().zip(&other.labels).all(|(&a, &b)| *image[a as usize].get_or_insert(b) == b)
    }

    /// The coarsest common refinement.
    pub fn meet(&self, other: &GroupPartition) -> GroupPartition {
        let keys: Vec<(u32, u32)> = self.labels.iter().copied().zip(other.labels.iter().copied()).collect();
        GroupPartition::from_labels(self.rank, &keys)
    }

    /// Classes of `self` that are not classes of `other`.
    pub fn classes_missing_from(&self, other: &GroupPartition) -> Vec<Vec<u32>> {
        let theirs: std::collections::HashSet<Vec<u32>> = other.classes().into_iter().collect();
        self.classes().into_iter().filter(|c| !theirs.contains(c)).collect()
    }

    /// Non-empty intersections of the classes with `subset`, in class order.
    pub fn restricted_classes(&self, subset: &[u32]) -> Vec<Vec<u32>> {
        let mut by_class: HashMap<u32, Vec<u32>> = HashMap::new();
        for &i in subset {
            by_class.entry(self.labels[i as usize]).or_default().push(i);
        }
        let mut out: Vec<(u32, Vec<u32>)> = by_class.into_iter().collect();
        out.sort_unstable_by_key(|(c, _)| *c);
        out.into_iter()
            .map(|(_, mut v)| {
                v.sort_unstable();
                v
            })
            .collect()
    }

    /// Whether `subset` is a union of classes.
    pub fn saturates(&self, subset: &[u32]) -> bool {
        let sizes = self.sizes();
        self.restricted_classes(subset).iter().all(|c| c.len() == sizes[self.labels[c[0] as usize] as usize])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_relabelling() {
        let p = GroupPartition::from_labels(0, &["x", "y", "x", "z"]);
        assert_eq!(p.labels(), &[0, 1, 0, 2]);
        assert_eq!(p.classes(), vec![vec![0, 2], vec![1], vec![3]]);
        assert_eq!(p, GroupPartition::from_labels(0, &[7, 3, 7, 1]));
    }

    #[test]
    fn refinement_and_meet() {
        let fine = GroupPartition::from_labels(0, &[0, 1, 2, 2]);
        let coarse = GroupPartition::from_labels(0, &[0, 0, 1, 1]);
        assert!(fine.refines(&coarse));
        assert!(!coarse.refines(&fine));
        assert_eq!(fine.meet(&coarse), fine);
        assert_eq!(coarse.classes_missing_from(&fine), vec![vec![0, 1]]);
        assert!(coarse.saturates(&[2, 3]));
        assert!(!coarse.saturates(&[1, 2, 3]));
        assert_eq!(coarse.restricted_classes(&[3, 1]), vec![vec![1], vec![3]]);
    }
}
