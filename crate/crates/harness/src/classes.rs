//! One representative per isomorphism class of graphs on `n ≤ 7` vertices.
//!
//! Edge masks are scanned in increasing order; each unvisited mask is the
//! smallest member of its orbit under vertex permutations, so it is kept and
//! its whole orbit is marked.

use anyhow::{bail, Result};
use moddom_core::families::{graph_from_pair_mask, pair_count, MAX_ENUMERATION_ORDER};
use moddom_core::Graph;

fn pair_bit(u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    v * (v - 1) / 2 + u
}

/// Calls `f` on every permutation of `0..n` (Heap's algorithm).
fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    f(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            f(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Class representatives as edge masks, ascending.
pub fn class_masks(n: usize) -> Result<Vec<u64>> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        bail!("isomorphism classes are available for 1 ≤ n ≤ {MAX_ENUMERATION_ORDER}");
    }
    let bits = pair_count(n);
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let mut perms = Vec::new();
    for_each_permutation(n, |p| {
        perms.push(pairs.iter().map(|&(u, v)| pair_bit(p[u], p[v])).collect::<Vec<_>>())
    });
    let total = 1usize << bits;
    let mut seen = vec![false; total];
    let mut reps = Vec::new();
    for mask in 0..total {
        if seen[mask] {
            continue;
        }
        reps.push(mask as u64);
        for image in &perms {
            let mut out = 0usize;
            for (bit, &to) in image.iter().enumerate() {
                out |= (mask >> bit & 1) << to;
            }
            seen[out] = true;
        }
    }
    Ok(reps)
}

pub fn class_representatives(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    Ok(class_masks(n)?
        .into_iter()
        .map(|m| graph_from_pair_mask(n, m).expect("n ≤ 7"))
        .filter(|g| !connected_only || g.is_connected())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let all: Vec<usize> = (1..=6).map(|n| class_masks(n).unwrap().len()).collect();
        assert_eq!(all, [1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = (1..=6)
            .map(|n| class_representatives(n, true).unwrap().len())
            .collect();
        assert_eq!(connected, [1, 1, 2, 6, 21, 112]);
        assert!(class_masks(8).is_err());
    }

    #[test]
    fn representatives_are_pairwise_non_isomorphic() {
        use moddom_core::products::are_isomorphic;
        let reps = class_representatives(5, false).unwrap();
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                assert!(!are_isomorphic(a, b).unwrap());
            }
        }
    }
}
