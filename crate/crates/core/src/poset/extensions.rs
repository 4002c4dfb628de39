use std::collections::HashMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};

use super::{LabelSet, Poset, SignedPoset};

/// Largest poset size accepted by the linear-extension counter.
pub const MAX_EXTENSION_SIZE: usize = 20;

/// Number of linear extensions `e(P)`.
///
/// Counts saturated chains `∅ = I_0 ⊂ I_1 ⊂ ... ⊂ I_n = P` of order ideals,
/// memoized on the ideal bitmask. Only ideals reachable from `∅` are visited.
pub fn count_linear_extensions(p: &Poset) -> Result<BigUint> {
    if p.size() > MAX_EXTENSION_SIZE {
        return Err(Error::capacity(
            "linear extension counting size",
            p.size(),
            MAX_EXTENSION_SIZE,
        ));
    }
    // 20! < 2^62, so u64 never overflows within the bound.
    let below: Vec<u64> = (0..p.d()).map(|i| p.below(i).bits()).collect();
    let mut memo: HashMap<u64, u64> = HashMap::new();
    let count = completions(p.ground().bits(), &below, 0, &mut memo);
    Ok(BigUint::from(count))
}

fn completions(ground: u64, below: &[u64], ideal: u64, memo: &mut HashMap<u64, u64>) -> u64 {
    if ideal == ground {
        return 1;
    }
    if let Some(&n) = memo.get(&ideal) {
        return n;
    }
    let mut total = 0;
    for i in LabelSet::from_bits(ground & !ideal).indices() {
        if below[i] & !ideal == 0 {
            total += completions(ground, below, ideal | 1 << i, memo);
        }
    }
    memo.insert(ideal, total);
    total
}

/// `e(Δ_W(P,Q))`: linear extensions of the underlying relation.
pub fn count_linear_extensions_signed(sp: &SignedPoset) -> Result<BigUint> {
    count_linear_extensions(sp.poset())
}

/// Whether a single permutation is a linear extension of both posets,
/// i.e. whether the union of the two relations is acyclic.
pub fn has_common_linear_extension(p: &Poset, q: &Poset) -> Result<bool> {
    if p.d() != q.d() {
        return Err(Error::SizeMismatch {
            left: p.d(),
            right: q.d(),
        });
    }
    let d = p.d();
    let ground = p.ground().union(q.ground());
    let mut pending = ground;
    // Kahn: repeatedly strip an element with nothing pending below it.
    while !pending.is_empty() {
        let next = pending.indices().find(|&i| {
            p.below(i).intersection(pending).is_empty()
                && q.below(i).intersection(pending).is_empty()
        });
        match next {
            Some(i) => pending = pending.difference(LabelSet::from_indices([i])),
            None => return Ok(false),
        }
    }
    debug_assert!(ground.is_subset(LabelSet::full(d)));
    Ok(true)
}
