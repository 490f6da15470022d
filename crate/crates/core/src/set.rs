//! Subsets of GF(2^m) as bitsets over 2^m slots.
//!
//! Value-sets, difference sets, trace sets T_n and code-defining sets are all
//! carried in this one representation. Multiplicative-group operations require
//! slot 0 to be clear; Boolean-function supports may use it.

use crate::gf2m::{Fe, FieldCtx};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementSet {
    words: Vec<u64>,
    universe: u64,
    len: u64,
}

impl ElementSet {
    /// Empty subset of a field with 2^m slots.
    pub fn empty(ctx: &FieldCtx) -> ElementSet {
        let universe = ctx.field_size();
        ElementSet {
            words: vec![0; (universe as usize).div_ceil(64)],
            universe,
            len: 0,
        }
    }

    /// The whole multiplicative group F*.
    pub fn full_group(ctx: &FieldCtx) -> ElementSet {
        let mut s = ElementSet::empty(ctx);
        for x in ctx.nonzero_elements() {
            s.insert(x);
        }
        s
    }

    pub fn from_elements<I: IntoIterator<Item = Fe>>(ctx: &FieldCtx, iter: I) -> ElementSet {
        let mut s = ElementSet::empty(ctx);
        for x in iter {
            s.insert(x);
        }
        s
    }

    #[inline]
    pub fn universe(&self) -> u64 {
        self.universe
    }

    #[inline]
    pub fn len(&self) -> u64 {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn contains(&self, x: Fe) -> bool {
        let b = x.bits();
        debug_assert!(b < self.universe);
        (self.words[(b / 64) as usize] >> (b % 64)) & 1 == 1
    }

    /// Insert; returns true if the element was new.
    pub fn insert(&mut self, x: Fe) -> bool {
        let b = x.bits();
        assert!(b < self.universe, "element out of universe");
        let w = &mut self.words[(b / 64) as usize];
        let mask = 1u64 << (b % 64);
        if *w & mask == 0 {
            *w |= mask;
            self.len += 1;
            true
        } else {
            false
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.words[0] & 1 == 1
    }

    /// Ascending members.
    pub fn iter(&self) -> impl Iterator<Item = Fe> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            let base = wi as u64 * 64;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as u64;
                    w &= w - 1;
                    Some(Fe((base + b) as u32))
                }
            })
        })
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & b == 0)
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        assert_eq!(self.universe, other.universe);
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        let len = words.iter().map(|w| w.count_ones() as u64).sum();
        ElementSet {
            words,
            universe: self.universe,
            len,
        }
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        assert_eq!(self.universe, other.universe);
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        let len = words.iter().map(|w| w.count_ones() as u64).sum();
        ElementSet {
            words,
            universe: self.universe,
            len,
        }
    }
}
