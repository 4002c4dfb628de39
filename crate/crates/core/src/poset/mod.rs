//! Finite posets on the labels `1..=d` and the combinatorics built on them:
//! order ideals, antichains, maximal chains, linear extensions, induced
//! subposets and the signed ordinal sums `P_W ⊕ Q_{complement of W}`.
//!
//! Elements are addressed by 0-based index in the Rust API. Poset files and
//! every `Display` impl use 1-based labels.

mod enumerate;
mod extensions;
mod labels;
mod parse;

use std::fmt;

use crate::error::{Error, Result};

pub use enumerate::{antichains, enumerate_posets, ideals, maximal_chains, MAX_ENUMERATION_SIZE};
pub use extensions::{
    count_linear_extensions, count_linear_extensions_signed, has_common_linear_extension,
    MAX_EXTENSION_SIZE,
};
pub use labels::{Indices, LabelSet, SubsetList, MAX_ELEMENTS};
pub use parse::parse_poset;

/// A strict partial order on a ground set of labels drawn from `0..d`.
///
/// The relation is stored transitively closed: `up[i]` holds every `j`
/// with `p_i < p_j`. Posets built from a file have ground set `0..d`;
/// induced subposets keep the original labels and shrink the ground set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    d: usize,
    ground: LabelSet,
    up: Vec<u64>,
}

impl Poset {
    /// The `d`-element antichain.
    pub fn antichain(d: usize) -> Self {
        assert!(d <= MAX_ELEMENTS);
        Poset {
            d,
            ground: LabelSet::full(d),
            up: vec![0; d],
        }
    }

    /// The chain `p_1 < p_2 < ... < p_d`.
    pub fn chain(d: usize) -> Self {
        assert!(d <= MAX_ELEMENTS);
        let full = LabelSet::full(d).bits();
        let up = (0..d)
            .map(|i| full & !LabelSet::full(i + 1).bits())
            .collect();
        Poset {
            d,
            ground: LabelSet::full(d),
            up,
        }
    }

    /// Builds the transitive closure of `relations`, given as 0-based
    /// pairs `(i, j)` meaning `p_i < p_j`.
    pub fn from_relations<I>(d: usize, relations: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if d > MAX_ELEMENTS {
            return Err(Error::capacity("poset size", d, MAX_ELEMENTS));
        }
        let mut up = vec![0u64; d];
        for (i, j) in relations {
            for l in [i, j] {
                if l >= d {
                    return Err(Error::LabelOutOfRange { label: l + 1, d });
                }
            }
            up[i] |= 1 << j;
        }
        close_transitively(&mut up);
        if let Some(i) = (0..d).find(|&i| up[i] >> i & 1 == 1) {
            return Err(Error::NotPartialOrder(i + 1));
        }
        Ok(Poset {
            d,
            ground: LabelSet::full(d),
            up,
        })
    }

    /// Wraps an already closed relation; `None` if it violates a poset axiom.
    pub fn from_closed_relation(up: Vec<u64>) -> Option<Self> {
        let d = up.len();
        if d > MAX_ELEMENTS {
            return None;
        }
        let mut closed = up.clone();
        close_transitively(&mut closed);
        let in_range = up.iter().all(|&row| row & !LabelSet::full(d).bits() == 0);
        let irreflexive = (0..d).all(|i| up[i] >> i & 1 == 0);
        (in_range && irreflexive && closed == up).then(|| Poset {
            d,
            ground: LabelSet::full(d),
            up,
        })
    }

    /// Size of the label universe `0..d`.
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn ground(&self) -> LabelSet {
        self.ground
    }

    /// Number of elements actually in the poset.
    pub fn size(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    /// `p_i < p_j`.
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.ground.contains(i) && self.up[i] >> j & 1 == 1
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        i == j || self.lt(i, j) || self.lt(j, i)
    }

    /// Elements strictly above `p_i`.
    pub fn above(&self, i: usize) -> LabelSet {
        LabelSet::from_bits(self.up[i]).intersection(self.ground)
    }

    /// Elements strictly below `p_i`.
    pub fn below(&self, i: usize) -> LabelSet {
        LabelSet::from_indices(self.ground.indices().filter(|&j| self.up[j] >> i & 1 == 1))
    }

    /// All pairs `(i, j)` with `p_i < p_j`, in index order.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        self.ground
            .indices()
            .flat_map(|i| self.above(i).indices().map(move |j| (i, j)))
            .collect()
    }

    /// Pairs `(i, j)` where `p_j` covers `p_i`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.relations()
            .into_iter()
            .filter(|&(i, j)| self.above(i).intersection(self.below(j)).is_empty())
            .collect()
    }

    pub fn minimal_elements(&self) -> LabelSet {
        LabelSet::from_indices(self.ground.indices().filter(|&i| self.below(i).is_empty()))
    }

    pub fn maximal_elements(&self) -> LabelSet {
        LabelSet::from_indices(self.ground.indices().filter(|&i| self.above(i).is_empty()))
    }

    /// The induced subposet on `w`, keeping the original labels.
    pub fn induced_subposet(&self, w: LabelSet) -> Result<Poset> {
        if let Some(i) = w.indices().find(|&i| i >= self.d) {
            return Err(Error::LabelOutOfRange {
                label: i + 1,
                d: self.d,
            });
        }
        let ground = self.ground.intersection(w);
        let up = self
            .up
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                if ground.contains(i) {
                    row & ground.bits()
                } else {
                    0
                }
            })
            .collect();
        Ok(Poset {
            d: self.d,
            ground,
            up,
        })
    }

    /// Same order with labels moved: element `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Poset {
        assert_eq!(perm.len(), self.d);
        let mut up = vec![0u64; self.d];
        for (i, j) in self.relations() {
            up[perm[i]] |= 1 << perm[j];
        }
        Poset {
            d: self.d,
            ground: LabelSet::from_indices(self.ground.indices().map(|i| perm[i])),
            up,
        }
    }

    /// Renders the poset in the line-based file format, listing cover relations only.
    pub fn to_file_string(&self) -> String {
        let mut out = format!("d {}\n", self.d);
        for (i, j) in self.covers() {
            out.push_str(&format!("rel {} {}\n", i + 1, j + 1));
        }
        out
    }

    fn raw_rows(&self) -> &[u64] {
        &self.up
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .covers()
            .into_iter()
            .map(|(i, j)| format!("{}<{}", i + 1, j + 1))
            .collect();
        write!(
            f,
            "Poset(d={}, ground={}, [{}])",
            self.d,
            self.ground,
            covers.join(" ")
        )
    }
}

fn close_transitively(up: &mut [u64]) {
    let d = up.len();
    for k in 0..d {
        let through = up[k];
        for row in up.iter_mut() {
            if *row >> k & 1 == 1 {
                *row |= through;
            }
        }
    }
}

/// A poset on `0..d` whose elements carry a sign: `+1` on `W`, `-1` on the
/// complement. Produced by [`delta`], where every plus element lies below
/// every minus element.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignedPoset {
    poset: Poset,
    plus: LabelSet,
}

impl SignedPoset {
    /// Fails if the sign pattern is not an ordinal sum of plus below minus.
    pub fn new(poset: Poset, plus: LabelSet) -> Result<Self> {
        let d = poset.d();
        if poset.ground() != LabelSet::full(d) || !plus.is_subset(LabelSet::full(d)) {
            return Err(Error::Shape(
                "signed poset must cover all labels 1..d".into(),
            ));
        }
        let minus = plus.complement(d);
        for i in plus.indices() {
            if !minus.is_subset(poset.above(i)) {
                return Err(Error::Shape(format!(
                    "p{} is not below every minus element",
                    i + 1
                )));
            }
        }
        Ok(SignedPoset { poset, plus })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn d(&self) -> usize {
        self.poset.d()
    }

    /// The set `W` of plus-signed labels.
    pub fn plus(&self) -> LabelSet {
        self.plus
    }

    pub fn minus(&self) -> LabelSet {
        self.plus.complement(self.d())
    }

    pub fn sign(&self, i: usize) -> i8 {
        if self.plus.contains(i) {
            1
        } else {
            -1
        }
    }
}

/// `P_W ⊕ Q_{W̄}` on the shared labels `0..d`: `P`'s order inside `w`,
/// `Q`'s order inside the complement, and every `w` label below every
/// complement label.
pub fn delta(p: &Poset, q: &Poset, w: LabelSet) -> Result<SignedPoset> {
    if p.d() != q.d() {
        return Err(Error::SizeMismatch {
            left: p.d(),
            right: q.d(),
        });
    }
    let d = p.d();
    if let Some(i) = w.indices().find(|&i| i >= d) {
        return Err(Error::LabelOutOfRange { label: i + 1, d });
    }
    let lower = p.induced_subposet(w)?;
    let upper = q.induced_subposet(w.complement(d))?;
    let minus = w.complement(d);
    let up = (0..d)
        .map(|i| {
            if w.contains(i) {
                lower.raw_rows()[i] | minus.bits()
            } else {
                upper.raw_rows()[i]
            }
        })
        .collect();
    let poset = Poset {
        d,
        ground: LabelSet::full(d),
        up,
    };
    Ok(SignedPoset { poset, plus: w })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `p2 < p1`, `p3 < p1`.
    fn lambda() -> Poset {
        Poset::from_relations(3, [(1, 0), (2, 0)]).unwrap()
    }

    #[test]
    fn chain_closure() {
        let c = Poset::chain(3);
        assert!(c.lt(0, 2));
        assert!(!c.lt(2, 0));
        assert_eq!(c.covers(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn cycle_is_rejected() {
        let err = Poset::from_relations(2, [(0, 1), (1, 0)]).unwrap_err();
        assert!(matches!(err, Error::NotPartialOrder(_)));
        let err = Poset::from_relations(2, [(1, 1)]).unwrap_err();
        assert_eq!(err, Error::NotPartialOrder(2));
    }

    #[test]
    fn out_of_range_relation() {
        let err = Poset::from_relations(2, [(0, 2)]).unwrap_err();
        assert_eq!(err, Error::LabelOutOfRange { label: 3, d: 2 });
    }

    #[test]
    fn closed_relation_checks_axioms() {
        assert!(Poset::from_closed_relation(vec![0b10, 0]).is_some());
        assert!(Poset::from_closed_relation(vec![0b10, 0b01]).is_none());
        // 1<2, 2<3 without 1<3 is not closed.
        assert!(Poset::from_closed_relation(vec![0b010, 0b100, 0]).is_none());
    }

    #[test]
    fn induced_on_bottom_of_lambda_is_antichain() {
        let sub = lambda()
            .induced_subposet(LabelSet::from_labels([2, 3]))
            .unwrap();
        assert_eq!(sub.size(), 2);
        assert!(sub.relations().is_empty());
        assert_eq!(sub.ground(), LabelSet::from_labels([2, 3]));
    }

    #[test]
    fn induced_extremes() {
        let p = lambda();
        assert_eq!(p.induced_subposet(LabelSet::full(3)).unwrap(), p);
        let empty = p.induced_subposet(LabelSet::EMPTY).unwrap();
        assert!(empty.is_empty());
        assert!(p.induced_subposet(LabelSet::from_labels([4])).is_err());
    }

    #[test]
    fn delta_of_full_and_empty_w() {
        let p = lambda();
        let q = Poset::chain(3);
        let full = delta(&p, &q, LabelSet::full(3)).unwrap();
        assert_eq!(full.poset(), &p);
        assert_eq!(full.minus(), LabelSet::EMPTY);
        let none = delta(&p, &q, LabelSet::EMPTY).unwrap();
        assert_eq!(none.poset(), &q);
        assert_eq!(none.sign(0), -1);
    }

    #[test]
    fn delta_two_of_three_is_chain() {
        // W = {1,2}: p2 < p1 < q3.
        let sp = delta(&lambda(), &lambda(), LabelSet::from_labels([1, 2])).unwrap();
        let expected = Poset::from_relations(3, [(1, 0), (0, 2)]).unwrap();
        assert_eq!(sp.poset(), &expected);
        assert_eq!(sp.sign(2), -1);
        assert!(SignedPoset::new(sp.poset().clone(), sp.plus()).is_ok());
    }

    #[test]
    fn delta_size_mismatch() {
        let err = delta(&Poset::chain(2), &Poset::chain(3), LabelSet::EMPTY).unwrap_err();
        assert_eq!(err, Error::SizeMismatch { left: 2, right: 3 });
    }

    #[test]
    fn signed_poset_rejects_non_ordinal_sum() {
        assert!(SignedPoset::new(Poset::antichain(2), LabelSet::from_labels([1])).is_err());
        assert!(SignedPoset::new(Poset::chain(2), LabelSet::from_labels([1])).is_ok());
        assert!(SignedPoset::new(Poset::chain(2), LabelSet::from_labels([2])).is_err());
    }

    #[test]
    fn relabel_moves_relations() {
        let p = Poset::from_relations(3, [(0, 1)]).unwrap();
        let r = p.relabel(&[2, 0, 1]);
        assert!(r.lt(2, 0));
        assert_eq!(r.relations().len(), 1);
    }

    #[test]
    fn file_string_round_trips() {
        let p = lambda();
        assert_eq!(parse_poset(&p.to_file_string()).unwrap(), p);
    }
}
