//! Conjugacy classes, class sizes, element orders and power maps.

use num_integer::Integer;

use super::enumerate::{GroupEnum, Key};
use crate::error::Result;
use crate::linalg;

#[derive(Clone, Debug)]
pub struct ConjData {
    /// Element index of each class representative.
    pub reps: Vec<usize>,
    pub sizes: Vec<u64>,
    pub orders: Vec<u64>,
    /// Class of each element, by element index.
    pub class_of: Vec<u32>,
    /// `powers[c][m]` is the class of g_c^m, for 0 <= m < |g_c|.
    pub powers: Vec<Vec<usize>>,
    /// Class of the inverses.
    pub inverse: Vec<usize>,
    pub exponent: u64,
}

impl ConjData {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Class of g^m for any integer m.
    pub fn power(&self, c: usize, m: i64) -> usize {
        let o = self.orders[c] as i64;
        self.powers[c][m.rem_euclid(o) as usize]
    }

    pub fn class_of_key(&self, g: &GroupEnum, k: Key) -> Option<usize> {
        g.index_of(k).map(|i| self.class_of[i] as usize)
    }
}

/// Classes as orbits under conjugation by the generators.
///
/// Classes are ordered by element order, then class size, then the breadth-first index of
/// the representative (the first element of the class met in enumeration order).
pub fn conjugacy(g: &GroupEnum) -> Result<ConjData> {
    let size = g.size();
    let k = &*g.codec.field;
    let gens: Vec<(Key, Key)> = g
        .gens
        .iter()
        .map(|&s| {
            let m = g.codec.unpack(s);
            let inv = linalg::inverse(k, &m).expect("generators are invertible");
            (s, g.codec.pack(&inv))
        })
        .collect();
    const NONE: u32 = u32::MAX;
    let mut raw = vec![NONE; size];
    let mut found: Vec<(usize, u64)> = Vec::new();
    let mut queue: Vec<usize> = Vec::new();
    for start in 0..size {
        if raw[start] != NONE {
            continue;
        }
        let c = found.len() as u32;
        raw[start] = c;
        queue.clear();
        queue.push(start);
        let mut head = 0;
        while head < queue.len() {
            let x = g.elems[queue[head]];
            head += 1;
            for &(s, si) in &gens {
                let y = g.mul(g.mul(si, x), s);
                let j = g.index_of(y).expect("conjugate lies in the group");
                if raw[j] == NONE {
                    raw[j] = c;
                    queue.push(j);
                }
            }
        }
        found.push((start, queue.len() as u64));
    }
    // deterministic ordering
    let orders: Vec<u64> = found.iter().map(|&(r, _)| g.order_of(g.elems[r])).collect();
    let mut perm: Vec<usize> = (0..found.len()).collect();
    perm.sort_by_key(|&c| (orders[c], found[c].1, found[c].0));
    let mut relabel = vec![0u32; found.len()];
    for (new, &old) in perm.iter().enumerate() {
        relabel[old] = new as u32;
    }
    let class_of: Vec<u32> = raw.iter().map(|&c| relabel[c as usize]).collect();
    let reps: Vec<usize> = perm.iter().map(|&c| found[c].0).collect();
    let sizes: Vec<u64> = perm.iter().map(|&c| found[c].1).collect();
    let orders: Vec<u64> = perm.iter().map(|&c| orders[c]).collect();
    let mut powers = Vec::with_capacity(reps.len());
    for (c, &r) in reps.iter().enumerate() {
        let x = g.elems[r];
        let mut y = g.elems[0];
        let mut row = Vec::with_capacity(orders[c] as usize);
        for _ in 0..orders[c] {
            row.push(class_of[g.index_of(y).unwrap()] as usize);
            y = g.mul(y, x);
        }
        powers.push(row);
    }
    let inverse: Vec<usize> = (0..reps.len())
        .map(|c| powers[c][(orders[c] as usize - 1) % orders[c] as usize])
        .collect();
    let exponent = orders.iter().fold(1u64, |a, &o| a.lcm(&o));
    Ok(ConjData {
        reps,
        sizes,
        orders,
        class_of,
        powers,
        inverse,
        exponent,
    })
}
