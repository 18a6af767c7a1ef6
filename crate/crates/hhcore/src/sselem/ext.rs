//! A field extension GF(Q^d) / GF(Q) with an explicit embedding.

use rustc_hash::FxHashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactnum::field::embedding;
use crate::exactnum::{ff_make, Fe, Field};

pub struct Ext {
    pub small: Arc<Field>,
    pub big: Arc<Field>,
    pub deg: u32,
    emb: Vec<Fe>,
    back: FxHashMap<Fe, Fe>,
}

impl Ext {
    pub fn new(small: &Arc<Field>, deg: u32) -> Result<Ext> {
        let f = small
            .f()
            .checked_mul(deg)
            .ok_or_else(|| Error::Cap("extension degree overflow".into()))?;
        let big = ff_make(small.p(), f)?;
        let emb = embedding(small, &big)?;
        let back = emb.iter().enumerate().map(|(i, &b)| (b, i as Fe)).collect();
        Ok(Ext {
            small: small.clone(),
            big,
            deg,
            emb,
            back,
        })
    }

    pub fn up(&self, a: Fe) -> Fe {
        self.emb[a as usize]
    }

    pub fn down(&self, a: Fe) -> Option<Fe> {
        self.back.get(&a).copied()
    }

    /// x -> x^(Q^i)
    pub fn frob(&self, a: Fe, i: u32) -> Fe {
        self.big.frob(a, self.small.f() * i)
    }

    /// Trace to the small field, already pulled back.
    pub fn trace(&self, a: Fe) -> Fe {
        let t = self.big.trace_to(a, self.small.f());
        self.down(t).expect("trace lies in the subfield")
    }

    /// sum of a^(Q^i) for i < terms, pulled back; a must lie in GF(Q^terms).
    pub fn partial_trace(&self, a: Fe, terms: u32) -> Fe {
        let big = &*self.big;
        let mut s = 0;
        let mut x = a;
        for _ in 0..terms {
            s = big.add(s, x);
            x = self.frob(x, 1);
        }
        self.down(s).expect("partial trace lies in the subfield")
    }
}
