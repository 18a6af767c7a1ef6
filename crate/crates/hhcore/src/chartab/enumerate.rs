//! Closure of a matrix generating set, with packed-key element lookup.

use rustc_hash::FxHashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactnum::{Fe, Field};
use crate::linalg::{self, Mat};

/// A matrix packed row-major into a `u128`, `bits` bits per entry.
pub type Key = u128;

/// Packs and multiplies n x n matrices over one field.
#[derive(Clone, Debug)]
pub struct Codec {
    pub field: Arc<Field>,
    pub n: usize,
    bits: u32,
    mask: u128,
    binary: bool,
}

impl Codec {
    pub fn new(field: Arc<Field>, n: usize) -> Result<Codec> {
        let q = field.q();
        let bits = 32 - (q - 1).leading_zeros();
        let bits = bits.max(1);
        if bits as usize * n * n > 128 || n > 8 {
            return Err(Error::TooLarge(format!(
                "{n}x{n} matrices over GF({q}) do not fit a 128-bit key"
            )));
        }
        let binary = q == 2;
        Ok(Codec {
            field,
            n,
            bits,
            mask: (1u128 << bits) - 1,
            binary,
        })
    }

    pub fn pack(&self, m: &Mat) -> Key {
        debug_assert_eq!((m.rows, m.cols), (self.n, self.n));
        let mut k = 0u128;
        for (i, &x) in m.data.iter().enumerate() {
            k |= (x as u128) << (i as u32 * self.bits);
        }
        k
    }

    pub fn unpack(&self, k: Key) -> Mat {
        let nn = self.n * self.n;
        let data = (0..nn)
            .map(|i| ((k >> (i as u32 * self.bits)) & self.mask) as Fe)
            .collect();
        Mat {
            rows: self.n,
            cols: self.n,
            data,
        }
    }

    #[inline]
    fn entry(&self, k: Key, i: usize) -> Fe {
        ((k >> (i as u32 * self.bits)) & self.mask) as Fe
    }

    /// Product of packed matrices.
    pub fn mul(&self, a: Key, b: Key) -> Key {
        let n = self.n;
        if self.binary {
            let rmask = (1u128 << n) - 1;
            let mut out = 0u128;
            for i in 0..n {
                let row = (a >> (i * n)) & rmask;
                let mut acc = 0u128;
                let mut r = row;
                while r != 0 {
                    let l = r.trailing_zeros() as usize;
                    acc ^= (b >> (l * n)) & rmask;
                    r &= r - 1;
                }
                out |= acc << (i * n);
            }
            return out;
        }
        let k = &*self.field;
        let mut av = [0 as Fe; 64];
        let mut bv = [0 as Fe; 64];
        for i in 0..n * n {
            av[i] = self.entry(a, i);
            bv[i] = self.entry(b, i);
        }
        let mut out = 0u128;
        for i in 0..n {
            for j in 0..n {
                let mut s = 0;
                for l in 0..n {
                    let x = av[i * n + l];
                    if x != 0 {
                        s = k.add(s, k.mul(x, bv[l * n + j]));
                    }
                }
                out |= (s as u128) << ((i * n + j) as u32 * self.bits);
            }
        }
        out
    }

    pub fn identity(&self) -> Key {
        self.pack(&Mat::identity(self.n))
    }
}

/// All elements of the group generated by a set of matrices.
#[derive(Clone, Debug)]
pub struct GroupEnum {
    pub codec: Codec,
    pub gens: Vec<Key>,
    /// Elements in breadth-first order from the identity; index 0 is the identity.
    pub elems: Vec<Key>,
    index: FxHashMap<Key, u32>,
}

impl GroupEnum {
    pub fn size(&self) -> usize {
        self.elems.len()
    }

    pub fn index_of(&self, k: Key) -> Option<usize> {
        self.index.get(&k).map(|&i| i as usize)
    }

    pub fn index_of_mat(&self, m: &Mat) -> Option<usize> {
        self.index_of(self.codec.pack(m))
    }

    pub fn elem(&self, i: usize) -> Mat {
        self.codec.unpack(self.elems[i])
    }

    pub fn mul(&self, a: Key, b: Key) -> Key {
        self.codec.mul(a, b)
    }

    pub fn order_of(&self, k: Key) -> u64 {
        let id = self.elems[0];
        let mut x = k;
        let mut o = 1;
        while x != id {
            x = self.codec.mul(x, k);
            o += 1;
        }
        o
    }

    pub fn pow(&self, k: Key, mut e: u64) -> Key {
        let mut r = self.elems[0];
        let mut b = k;
        while e > 0 {
            if e & 1 == 1 {
                r = self.codec.mul(r, b);
            }
            b = self.codec.mul(b, b);
            e >>= 1;
        }
        r
    }
}

/// Breadth-first closure of the generators; fails once more than `cap` elements are found.
pub fn enumerate(field: &Arc<Field>, gens: &[Mat], cap: usize) -> Result<GroupEnum> {
    let n = gens.first().map_or(1, |g| g.rows);
    let codec = Codec::new(field.clone(), n)?;
    for g in gens {
        if !g.is_square() || g.rows != n {
            return Err(Error::Precondition("generators of different shapes".into()));
        }
        if linalg::det(field, g) == 0 {
            return Err(Error::Precondition("singular generator".into()));
        }
    }
    let mut gk: Vec<Key> = gens.iter().map(|g| codec.pack(g)).collect();
    gk.sort_unstable();
    gk.dedup();
    let id = codec.identity();
    gk.retain(|&g| g != id);
    let mut elems = vec![id];
    let mut index = FxHashMap::default();
    index.insert(id, 0u32);
    let mut head = 0;
    while head < elems.len() {
        let x = elems[head];
        head += 1;
        for &s in &gk {
            let y = codec.mul(x, s);
            if let std::collections::hash_map::Entry::Vacant(e) = index.entry(y) {
                if elems.len() >= cap {
                    return Err(Error::Cap(format!("group exceeds {cap} elements")));
                }
                e.insert(elems.len() as u32);
                elems.push(y);
            }
        }
    }
    Ok(GroupEnum {
        codec,
        gens: gk,
        elems,
        index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ff_make;

    #[test]
    fn pack_roundtrip_and_product() {
        for (p, f, n) in [(2, 1, 6), (3, 2, 3), (5, 1, 4), (2, 2, 4)] {
            let k = ff_make(p, f).unwrap();
            let c = Codec::new(k.clone(), n).unwrap();
            let q = k.q();
            let a = Mat {
                rows: n,
                cols: n,
                data: (0..n * n).map(|i| (i as u32 * 7 + 3) % q).collect(),
            };
            let b = Mat {
                rows: n,
                cols: n,
                data: (0..n * n).map(|i| (i as u32 * 5 + 1) % q).collect(),
            };
            assert_eq!(c.unpack(c.pack(&a)), a);
            assert_eq!(
                c.unpack(c.mul(c.pack(&a), c.pack(&b))),
                linalg::mul(&k, &a, &b)
            );
        }
    }

    #[test]
    fn identity_only() {
        let k = ff_make(3, 1).unwrap();
        let g = enumerate(&k, &[Mat::identity(2)], 10).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let k = ff_make(5, 1).unwrap();
        let a = Mat::from_rows(&[vec![1, 1], vec![0, 1]]);
        let b = Mat::from_rows(&[vec![1, 0], vec![1, 1]]);
        assert!(matches!(enumerate(&k, &[a, b], 50), Err(Error::Cap(_))));
    }
}
