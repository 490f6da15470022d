//! Rational maps on the multiplicative group of GF(2^m): catalog, value
//! sets, preimage profiles and value-set equivalence.

mod catalog;
pub mod expr;

pub use catalog::{catalog, quotient_reference, CATALOG_IDS};

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gf2m::{Fe, FieldCtx};
use crate::set::ElementSet;
use expr::ExponentExpr;

/// A GF(2)-sum of monomials x^e with symbolic exponents. A term with e = 0
/// denotes the constant 1.
#[derive(Debug, Clone)]
pub struct RationalMap {
    name: String,
    terms: Vec<ExponentExpr>,
}

impl RationalMap {
    pub fn new(name: impl Into<String>, terms: Vec<ExponentExpr>) -> RationalMap {
        RationalMap {
            name: name.into(),
            terms,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn terms(&self) -> &[ExponentExpr] {
        &self.terms
    }

    /// Instantiate the exponents at the context's degree. Equal residues
    /// cancel pairwise (GF(2) coefficients).
    pub fn compile(&self, ctx: &FieldCtx) -> Result<CompiledMap> {
        let mut values = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            values.push(t.eval(ctx, &self.name)?);
        }
        let mut exps: Vec<u64> = values.iter().map(|v| v.residue(ctx)).collect();
        exps.sort_unstable();
        let mut dedup: Vec<u64> = Vec::with_capacity(exps.len());
        for e in exps {
            if dedup.last() == Some(&e) {
                dedup.pop();
            } else {
                dedup.push(e);
            }
        }
        // The value at zero exists only when every exponent is a plain
        // nonnegative integer; it is computed from the raw terms because the
        // mod-order cancellation above is only valid on F*.
        let at_zero = values
            .iter()
            .try_fold(Fe::ZERO, |acc, v| match v.plain() {
                Some(0) => Some(acc ^ Fe::ONE),
                Some(e) if e > 0 => Some(acc),
                _ => None,
            });
        Ok(CompiledMap {
            name: self.name.clone(),
            exps: dedup,
            at_zero,
        })
    }
}

/// A map with exponents fixed in Z/(2^m - 1), ready for sweeps.
#[derive(Debug, Clone)]
pub struct CompiledMap {
    name: String,
    exps: Vec<u64>,
    at_zero: Option<Fe>,
}

impl CompiledMap {
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Canonical (sorted, cancelled) exponent residues.
    pub fn exponents(&self) -> &[u64] {
        &self.exps
    }

    /// Evaluate on the multiplicative group.
    #[inline]
    pub fn eval_nonzero(&self, ctx: &FieldCtx, x: Fe) -> Fe {
        debug_assert!(!x.is_zero());
        let mut acc = Fe::ZERO;
        for &e in &self.exps {
            acc ^= ctx.pow(x, e);
        }
        acc
    }

    /// Evaluate anywhere it is defined: on F*, and at 0 for maps whose
    /// exponents are plain nonnegative integers.
    pub fn eval(&self, ctx: &FieldCtx, x: Fe) -> Result<Fe> {
        if x.is_zero() {
            return self.at_zero.ok_or_else(|| Error::ZeroNotInDomain {
                map: self.name.clone(),
            });
        }
        Ok(self.eval_nonzero(ctx, x))
    }

    /// The value at 0, when the map extends there.
    pub fn value_at_zero(&self) -> Option<Fe> {
        self.at_zero
    }
}

/// Evaluate a catalog map at a nonzero point.
pub fn eval_map(f: &RationalMap, x: Fe, ctx: &FieldCtx) -> Result<Fe> {
    if x.is_zero() {
        return Err(Error::ZeroNotInDomain {
            map: f.name.clone(),
        });
    }
    Ok(f.compile(ctx)?.eval_nonzero(ctx, x))
}

/// Preimage structure of a map over the domain F*.
///
/// `per_value` records, for every attained nonzero value, how many x in F*
/// map to it; hits on the value 0 are tracked in the separate `zero_preimages`
/// bucket. The counts therefore sum to 2^m - 1.
#[derive(Debug, Clone)]
pub struct ValueProfile {
    value_set: ElementSet,
    counts: Vec<u32>,
    zero_preimages: u64,
    histogram: BTreeMap<u64, u64>,
}

impl ValueProfile {
    /// The punctured value-set (attained nonzero values).
    pub fn value_set(&self) -> &ElementSet {
        &self.value_set
    }

    /// Number of F*-preimages of a nonzero value (0 if not attained).
    pub fn preimage_count(&self, v: Fe) -> u64 {
        self.counts[v.bits() as usize] as u64
    }

    /// Number of x in F* mapping to 0.
    pub fn zero_preimages(&self) -> u64 {
        self.zero_preimages
    }

    /// multiplicity -> number of attained nonzero values with it.
    pub fn histogram(&self) -> &BTreeMap<u64, u64> {
        &self.histogram
    }

    /// multiplicity -> number of values over the whole field (all 2^m of
    /// them), counting preimages within F*. Unattained values, and 0 when the
    /// map never vanishes, land in the 0 bucket.
    pub fn full_field_histogram(&self, ctx: &FieldCtx) -> BTreeMap<u64, u64> {
        let mut hist = self.histogram.clone();
        *hist.entry(self.zero_preimages).or_insert(0) += 1;
        let attained: u64 = hist.values().sum();
        let missing = ctx.field_size() - attained;
        if missing > 0 {
            *hist.entry(0).or_insert(0) += missing;
        }
        if hist.get(&0) == Some(&0) {
            hist.remove(&0);
        }
        hist
    }
}

/// Sweep F* and collect the full preimage profile.
pub fn preimage_profile(f: &RationalMap, ctx: &FieldCtx) -> Result<ValueProfile> {
    let compiled = f.compile(ctx)?;
    let mut counts = vec![0u32; ctx.field_size() as usize];
    for x in ctx.nonzero_elements() {
        counts[compiled.eval_nonzero(ctx, x).bits() as usize] += 1;
    }
    let zero_preimages = counts[0] as u64;
    counts[0] = 0;
    let mut value_set = ElementSet::empty(ctx);
    let mut histogram = BTreeMap::new();
    for (bits, &c) in counts.iter().enumerate() {
        if c > 0 {
            value_set.insert(ctx.element(bits as u64));
            *histogram.entry(c as u64).or_insert(0) += 1;
        }
    }
    Ok(ValueProfile {
        value_set,
        counts,
        zero_preimages,
        histogram,
    })
}

/// The punctured value-set {f(x) : x in F*} \ {0}.
pub fn punctured_value_set(f: &RationalMap, ctx: &FieldCtx) -> Result<ElementSet> {
    let compiled = f.compile(ctx)?;
    let mut set = ElementSet::empty(ctx);
    for x in ctx.nonzero_elements() {
        let v = compiled.eval_nonzero(ctx, x);
        if !v.is_zero() {
            set.insert(v);
        }
    }
    Ok(set)
}

/// Value-set equivalence: identical punctured value-sets.
pub fn value_set_equal(f: &RationalMap, g: &RationalMap, ctx: &FieldCtx) -> Result<bool> {
    Ok(punctured_value_set(f, ctx)? == punctured_value_set(g, ctx)?)
}

/// The map f(x)/x + 1: every exponent drops by one and the constant 1 joins
/// the term list. For the catalog trinomials the x/x term cancels against the
/// constant after instantiation, leaving a binomial.
pub fn quotient_plus_one(f: &RationalMap) -> RationalMap {
    let mut terms: Vec<ExponentExpr> = f.terms.iter().map(|t| t.clone().minus(1)).collect();
    terms.push(ExponentExpr::constant(0));
    RationalMap::new(format!("{}/x+1", f.name), terms)
}
