use crate::error::{Error, Result};

use super::{LabelSet, Poset, SubsetList};

/// Largest `d` accepted by [`enumerate_posets`].
pub const MAX_ENUMERATION_SIZE: usize = 4;

/// All order ideals (down-closed subsets), including `∅` and the ground set.
pub fn ideals(p: &Poset) -> SubsetList {
    let order = topological_order(p);
    let mut out = Vec::new();
    grow_ideals(p, &order, 0, LabelSet::EMPTY, &mut out);
    SubsetList::new(out)
}

fn grow_ideals(p: &Poset, order: &[usize], at: usize, ideal: LabelSet, out: &mut Vec<LabelSet>) {
    let Some(&i) = order.get(at) else {
        out.push(ideal);
        return;
    };
    grow_ideals(p, order, at + 1, ideal, out);
    // Everything below `i` precedes it in `order`, so it has already been decided.
    if p.below(i).is_subset(ideal) {
        grow_ideals(p, order, at + 1, ideal.with(i), out);
    }
}

fn topological_order(p: &Poset) -> Vec<usize> {
    let mut order: Vec<usize> = p.ground().indices().collect();
    order.sort_by_key(|&i| p.below(i).len());
    order
}

/// All subsets of pairwise incomparable elements, including `∅` and singletons.
pub fn antichains(p: &Poset) -> SubsetList {
    let elements: Vec<usize> = p.ground().indices().collect();
    let mut out = Vec::new();
    grow_antichains(p, &elements, LabelSet::EMPTY, p.ground(), &mut out);
    SubsetList::new(out)
}

fn grow_antichains(
    p: &Poset,
    elements: &[usize],
    chosen: LabelSet,
    allowed: LabelSet,
    out: &mut Vec<LabelSet>,
) {
    out.push(chosen);
    for (k, &i) in elements.iter().enumerate() {
        if allowed.contains(i) {
            let allowed = allowed.difference(p.above(i)).difference(p.below(i));
            grow_antichains(p, &elements[k + 1..], chosen.with(i), allowed, out);
        }
    }
}

/// All inclusion-maximal chains, as label sets.
///
/// A maximal chain runs from a minimal to a maximal element along cover
/// relations.
pub fn maximal_chains(p: &Poset) -> SubsetList {
    let mut upper_covers = vec![LabelSet::EMPTY; p.d()];
    for (i, j) in p.covers() {
        upper_covers[i].insert(j);
    }
    let mut out = Vec::new();
    for start in p.minimal_elements().indices() {
        walk_chains(&upper_covers, start, LabelSet::EMPTY.with(start), &mut out);
    }
    SubsetList::new(out)
}

fn walk_chains(upper_covers: &[LabelSet], at: usize, chain: LabelSet, out: &mut Vec<LabelSet>) {
    if upper_covers[at].is_empty() {
        out.push(chain);
        return;
    }
    for next in upper_covers[at].indices() {
        walk_chains(upper_covers, next, chain.with(next), out);
    }
}

/// Every labeled poset on `1..=d`, ordered by the bit pattern of the strict
/// relation over the off-diagonal pairs `(1,2), (1,3), ..., (d,d-1)`.
pub fn enumerate_posets(d: usize) -> Result<Vec<Poset>> {
    if d > MAX_ENUMERATION_SIZE {
        return Err(Error::capacity(
            "poset enumeration size",
            d,
            MAX_ENUMERATION_SIZE,
        ));
    }
    let pairs: Vec<(usize, usize)> = (0..d)
        .flat_map(|i| (0..d).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for pattern in 0u32..1 << pairs.len() {
        let mut up = vec![0u64; d];
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if pattern >> bit & 1 == 1 {
                up[i] |= 1 << j;
            }
        }
        let antisymmetric = pairs
            .iter()
            .all(|&(i, j)| !(up[i] >> j & 1 == 1 && up[j] >> i & 1 == 1));
        if !antisymmetric {
            continue;
        }
        if let Some(p) = Poset::from_closed_relation(up) {
            out.push(p);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lambda() -> Poset {
        Poset::from_relations(3, [(1, 0), (2, 0)]).unwrap()
    }

    fn sets(lists: &[&[usize]]) -> SubsetList {
        lists
            .iter()
            .map(|labels| LabelSet::from_labels(labels.iter().copied()))
            .collect()
    }

    // Brute-force oracles over all 2^n subsets of the ground set.

    fn all_subsets(p: &Poset) -> Vec<LabelSet> {
        (0u64..1 << p.d())
            .map(LabelSet::from_bits)
            .filter(|s| s.is_subset(p.ground()))
            .collect()
    }

    fn brute_ideals(p: &Poset) -> SubsetList {
        all_subsets(p)
            .into_iter()
            .filter(|s| {
                s.indices()
                    .all(|i| p.ground().indices().all(|j| !p.lt(j, i) || s.contains(j)))
            })
            .collect()
    }

    fn brute_antichains(p: &Poset) -> SubsetList {
        all_subsets(p)
            .into_iter()
            .filter(|s| {
                s.indices()
                    .all(|i| s.indices().all(|j| i == j || !p.comparable(i, j)))
            })
            .collect()
    }

    fn brute_maximal_chains(p: &Poset) -> SubsetList {
        let chains: Vec<LabelSet> = all_subsets(p)
            .into_iter()
            .filter(|s| !s.is_empty())
            .filter(|s| s.indices().all(|i| s.indices().all(|j| p.comparable(i, j))))
            .collect();
        chains
            .iter()
            .copied()
            .filter(|&c| !chains.iter().any(|&o| o != c && c.is_subset(o)))
            .collect()
    }

    #[test]
    fn chain_ideals_are_prefixes() {
        assert_eq!(ideals(&Poset::chain(2)), sets(&[&[], &[1], &[1, 2]]));
    }

    #[test]
    fn antichain_has_every_subset_as_ideal() {
        assert_eq!(ideals(&Poset::antichain(3)).len(), 8);
        assert_eq!(antichains(&Poset::antichain(3)).len(), 8);
    }

    #[test]
    fn lambda_ideals_and_antichains() {
        let p = lambda();
        assert_eq!(ideals(&p), brute_ideals(&p));
        assert_eq!(ideals(&p), sets(&[&[], &[2], &[3], &[2, 3], &[1, 2, 3]]));
        assert_eq!(antichains(&p), brute_antichains(&p));
        assert_eq!(antichains(&p), sets(&[&[], &[1], &[2], &[3], &[2, 3]]));
    }

    #[test]
    fn lambda_maximal_chains() {
        let p = lambda();
        assert_eq!(maximal_chains(&p), brute_maximal_chains(&p));
        assert_eq!(maximal_chains(&p), sets(&[&[1, 2], &[1, 3]]));
    }

    #[test]
    fn chain_and_antichain_maximal_chains() {
        assert_eq!(maximal_chains(&Poset::chain(4)), sets(&[&[1, 2, 3, 4]]));
        assert_eq!(
            maximal_chains(&Poset::antichain(3)),
            sets(&[&[1], &[2], &[3]])
        );
        assert_eq!(antichains(&Poset::chain(3)), sets(&[&[], &[1], &[2], &[3]]));
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (1..=4)
            .map(|d| enumerate_posets(d).unwrap().len())
            .collect();
        // d = 3 value frozen from brute-force filtering in `brute_poset_count`.
        assert_eq!(counts, vec![1, 3, 19, 219]);
        assert_eq!(enumerate_posets(0).unwrap().len(), 1);
        assert!(enumerate_posets(5).unwrap_err().is_capacity());
    }

    #[test]
    fn brute_poset_count() {
        // Independent filter: every 0/1 matrix, checked entrywise for the axioms.
        let d = 3;
        let mut count = 0;
        for m in 0u32..1 << (d * d) {
            let r = |i: usize, j: usize| m >> (i * d + j) & 1 == 1;
            let irreflexive = (0..d).all(|i| !r(i, i));
            let antisym = (0..d).all(|i| (0..d).all(|j| !(r(i, j) && r(j, i))));
            let trans =
                (0..d).all(|i| (0..d).all(|j| (0..d).all(|k| !(r(i, j) && r(j, k)) || r(i, k))));
            if irreflexive && antisym && trans {
                count += 1;
            }
        }
        assert_eq!(count, 19);
    }

    #[test]
    fn enumeration_is_exhaustive_and_distinct() {
        let posets = enumerate_posets(3).unwrap();
        let distinct: std::collections::HashSet<_> = posets.iter().cloned().collect();
        assert_eq!(distinct.len(), posets.len());
        assert!(posets.contains(&Poset::antichain(3)));
        assert!(posets.contains(&Poset::chain(3)));
        assert!(posets.contains(&lambda()));
    }

    #[test]
    fn all_small_posets_match_brute_force() {
        for d in 1..=4 {
            for p in enumerate_posets(d).unwrap() {
                assert_eq!(ideals(&p), brute_ideals(&p), "{p:?}");
                assert_eq!(antichains(&p), brute_antichains(&p), "{p:?}");
                assert_eq!(maximal_chains(&p), brute_maximal_chains(&p), "{p:?}");
                assert_eq!(ideals(&p).len(), antichains(&p).len(), "{p:?}");
            }
        }
    }

    #[test]
    fn induced_subposet_enumeration_stays_in_ground() {
        let p = Poset::chain(4)
            .induced_subposet(LabelSet::from_labels([2, 4]))
            .unwrap();
        assert_eq!(antichains(&p), sets(&[&[], &[2], &[4]]));
        assert_eq!(ideals(&p), sets(&[&[], &[2], &[2, 4]]));
        assert_eq!(maximal_chains(&p), sets(&[&[2, 4]]));
        let empty = p.induced_subposet(LabelSet::EMPTY).unwrap();
        assert_eq!(antichains(&empty), sets(&[&[]]));
        assert!(maximal_chains(&empty).is_empty());
    }
}
