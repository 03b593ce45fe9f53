use std::collections::BTreeMap;

use serde::Serialize;

use super::group::Group;

/// Isomorphism invariants; equal fingerprints are necessary, not
/// sufficient, for isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    /// element order → number of elements of that order
    pub element_orders: BTreeMap<usize, usize>,
    /// class size → number of classes of that size
    pub class_sizes: BTreeMap<usize, usize>,
    pub center_order: usize,
    pub derived_order: usize,
    /// Orders of the cyclic factors of G/[G,G], ascending.
    pub abelianization: Vec<usize>,
}

pub fn isomorphism_fingerprint(g: &Group) -> Fingerprint {
    let n = g.order();
    let mut element_orders = BTreeMap::new();
    for i in 0..n {
        *element_orders.entry(g.element_order_idx(i)).or_insert(0) += 1;
    }
    let mut class_sizes = BTreeMap::new();
    for c in g.conjugacy_classes() {
        *class_sizes.entry(c.size()).or_insert(0) += 1;
    }
    let derived = g.derived_subgroup();
    let in_derived: Vec<bool> = g.elements().iter().map(|e| derived.contains(e)).collect();

    // In G/[G,G], count elements killed by each power of each prime dividing
    // the quotient order. For an abelian p-group with factors p^e_i, the
    // number killed by p^k is p^(Σ min(k, e_i)).
    let q = n / derived.order();
    let mut abelianization = Vec::new();
    for p in prime_factors(q) {
        let coset_count = |k: u32| -> usize {
            let e = p.pow(k);
            let killed = (0..n).filter(|&i| in_derived[pow_idx(g, i, e)]).count();
            killed / derived.order()
        };
        let mut logs = vec![0u32];
        let mut k = 1;
        loop {
            let c = coset_count(k);
            logs.push(ilog(c, p));
            if logs[k as usize] == logs[k as usize - 1] {
                break;
            }
            k += 1;
        }
        // Number of factors with exponent ≥ k is logs[k] − logs[k−1].
        let ge: Vec<u32> = (1..logs.len()).map(|k| logs[k] - logs[k - 1]).collect();
        for k in 0..ge.len() {
            let next = ge.get(k + 1).copied().unwrap_or(0);
            for _ in 0..ge[k] - next {
                abelianization.push(p.pow(k as u32 + 1));
            }
        }
    }
    abelianization.sort_unstable();
    Fingerprint {
        order: n,
        element_orders,
        class_sizes,
        center_order: g.center().order(),
        derived_order: derived.order(),
        abelianization,
    }
}

fn pow_idx(g: &Group, i: usize, e: usize) -> usize {
    (0..e).fold(0, |acc, _| g.mul_idx(acc, i))
}

fn ilog(mut x: usize, p: usize) -> u32 {
    let mut k = 0;
    while x > 1 {
        x /= p;
        k += 1;
    }
    k
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while n > 1 {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    out
}
