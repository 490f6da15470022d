//! Binary linear codes defined by trace evaluations over a subset of GF(2^m),
//! their weight distributions (by direct enumeration and through the Walsh
//! transform of the defining set's indicator), weight enumerator strings, and
//! the first three dual weights via power moments and direct column analysis.
//!
//! The code of a defining set D = {d_1 < ... < d_n} is
//! C_D = {(Tr(x d_1), ..., Tr(x d_n)) : x in F_{2^m}}; its dimension is the
//! GF(2) rank of D's coordinate vectors because the trace pairing is
//! nondegenerate.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gf2m::{Fe, FieldCtx};
use crate::set::ElementSet;

/// Walsh transform of the indicator of a support set, tabulated over all w.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalshSpectrum {
    values: Vec<i64>,
    support_size: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalshMethod {
    /// The literal double character sum, O(4^m). Serves as the oracle.
    Direct,
    /// 2^m-point fast transform with trace-pairing re-indexing, O(m 2^m).
    Fast,
}

impl WalshSpectrum {
    #[inline]
    pub fn value(&self, w: Fe) -> i64 {
        self.values[w.bits() as usize]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn support_size(&self) -> u64 {
        self.support_size
    }

    /// Sum of squared values; always 2^(2m).
    pub fn parseval_sum(&self) -> i128 {
        self.values.iter().map(|&v| v as i128 * v as i128).sum()
    }
}

/// chi_hat(w) = sum_x (-1)^(chi_S(x) + Tr(wx)).
pub fn walsh_spectrum(support: &ElementSet, ctx: &FieldCtx, method: WalshMethod) -> WalshSpectrum {
    let spectrum = match method {
        WalshMethod::Direct => walsh_direct(support, ctx),
        WalshMethod::Fast => walsh_fast(support, ctx),
    };
    debug_assert_eq!(spectrum.parseval_sum(), 1i128 << (2 * ctx.m()));
    debug_assert_eq!(
        spectrum.values[0],
        ctx.field_size() as i64 - 2 * support.len() as i64
    );
    spectrum
}

fn walsh_direct(support: &ElementSet, ctx: &FieldCtx) -> WalshSpectrum {
    let q = ctx.field_size();
    let mut values = Vec::with_capacity(q as usize);
    for w in ctx.elements() {
        let mut acc = 0i64;
        for x in ctx.elements() {
            let sign = (support.contains(x) as u8) ^ ctx.trace(ctx.mul(w, x));
            acc += 1 - 2 * sign as i64;
        }
        values.push(acc);
    }
    WalshSpectrum {
        values,
        support_size: support.len(),
    }
}

/// Tr(wx) is a nondegenerate bilinear form; with G[i][j] = Tr(b_i b_j) over
/// the polynomial basis, Tr(wx) = <G w, x>, so the field-indexed transform is
/// the standard sign transform read out at index G*w.
fn walsh_fast(support: &ElementSet, ctx: &FieldCtx) -> WalshSpectrum {
    let m = ctx.m() as usize;
    let q = ctx.field_size() as usize;
    // Gram matrix rows as bitmasks.
    let gram: Vec<u64> = (0..m)
        .map(|i| {
            let mut row = 0u64;
            for j in 0..m {
                let prod = ctx.mul(ctx.element(1 << i), ctx.element(1 << j));
                row |= (ctx.trace(prod) as u64) << j;
            }
            row
        })
        .collect();
    // The trace form is nondegenerate, so G must be invertible; confirm by
    // GF(2) elimination.
    debug_assert_eq!(gf2_rank(gram.clone()), m);

    let mut table: Vec<i64> = (0..q)
        .map(|x| if support.contains(ctx.element(x as u64)) { -1 } else { 1 })
        .collect();
    // In-place sign transform.
    let mut half = 1usize;
    while half < q {
        for block in (0..q).step_by(2 * half) {
            for i in block..block + half {
                let (a, b) = (table[i], table[i + half]);
                table[i] = a + b;
                table[i + half] = a - b;
            }
        }
        half *= 2;
    }
    let values = (0..q)
        .map(|w| {
            let mut u = 0u64;
            let mut bits = w as u64;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                u ^= gram[i];
                bits &= bits - 1;
            }
            table[u as usize]
        })
        .collect();
    WalshSpectrum {
        values,
        support_size: support.len(),
    }
}

fn gf2_rank(mut rows: Vec<u64>) -> usize {
    let mut rank = 0;
    for col in 0..64 {
        let mask = 1u64 << col;
        if let Some(pos) = (rank..rows.len()).find(|&r| rows[r] & mask != 0) {
            rows.swap(rank, pos);
            let pivot = rows[rank];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && *row & mask != 0 {
                    *row ^= pivot;
                }
            }
            rank += 1;
        }
    }
    rank
}

/// Sparse weight -> count table for a code of length n and dimension k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    pub n: u64,
    pub k: u32,
    pub counts: BTreeMap<u64, u64>,
}

impl WeightDistribution {
    pub fn codewords(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Minimum nonzero weight.
    pub fn min_distance(&self) -> Option<u64> {
        self.counts.keys().copied().find(|&w| w > 0)
    }
}

/// Dimension of C_D: the GF(2) rank of the defining set.
pub fn code_dimension(d: &ElementSet, _ctx: &FieldCtx) -> u32 {
    gf2_rank(d.iter().map(|x| x.bits()).collect()) as u32
}

/// A defining set together with the code parameters it induces. Columns are
/// ordered by ascending element value, so reports diff byte-exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSpec {
    pub defining_set: ElementSet,
    pub n: u64,
    pub k: u32,
}

impl CodeSpec {
    pub fn new(defining_set: ElementSet, ctx: &FieldCtx) -> CodeSpec {
        let n = defining_set.len();
        let k = code_dimension(&defining_set, ctx);
        CodeSpec { defining_set, n, k }
    }
}

/// Weight distribution through the Walsh spectrum: the nonzero codewords c_x
/// (x != 0) have weight (2 n_f + chi_hat(x))/4, and the zero word contributes
/// weight 0. Requires the hypothesis 2 n_f + chi_hat(w) != 0 for all w, which
/// forces dimension m.
pub fn weight_distribution(d: &ElementSet, ctx: &FieldCtx) -> Result<WeightDistribution> {
    let spectrum = walsh_spectrum(d, ctx, WalshMethod::Fast);
    weight_distribution_from_spectrum(d, &spectrum, ctx)
}

/// Same assembly from an already-computed spectrum.
pub fn weight_distribution_from_spectrum(
    d: &ElementSet,
    spectrum: &WalshSpectrum,
    ctx: &FieldCtx,
) -> Result<WeightDistribution> {
    let n_f = d.len() as i64;
    for w in ctx.elements() {
        if 2 * n_f + spectrum.value(w) == 0 {
            return Err(Error::CodeHypothesis { w: w.bits() });
        }
    }
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    counts.insert(0, 1);
    for w in ctx.nonzero_elements() {
        let num = 2 * n_f + spectrum.value(w);
        debug_assert!(num > 0 && num % 4 == 0);
        *counts.entry(num as u64 / 4).or_insert(0) += 1;
    }
    Ok(WeightDistribution {
        n: d.len(),
        k: ctx.m(),
        counts,
    })
}

/// Weight distribution by enumerating trace vectors. Each codeword is hit by
/// exactly 2^(m-k) values of x, so multiplicities divide out exactly.
pub fn weight_distribution_direct(d: &ElementSet, ctx: &FieldCtx) -> WeightDistribution {
    let columns: Vec<Fe> = d.iter().collect();
    let k = code_dimension(d, ctx);
    let fiber = 1u64 << (ctx.m() - k);
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for x in ctx.elements() {
        let weight = columns
            .iter()
            .map(|&c| ctx.trace(ctx.mul(x, c)) as u64)
            .sum::<u64>();
        *counts.entry(weight).or_insert(0) += 1;
    }
    for v in counts.values_mut() {
        debug_assert_eq!(*v % fiber, 0);
        *v /= fiber;
    }
    WeightDistribution {
        n: d.len(),
        k,
        counts,
    }
}

/// Canonical ascending-power rendering "1 + A_w z^w + ...".
pub fn enumerator_string(dist: &WeightDistribution) -> String {
    let mut out = String::new();
    for (&w, &a) in &dist.counts {
        if a == 0 {
            continue;
        }
        if w == 0 {
            out.push_str(&a.to_string());
            continue;
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        if a == 1 {
            out.push_str(&format!("z^{w}"));
        } else {
            out.push_str(&format!("{a}z^{w}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// First three dual weights solved from the power-moment identities,
/// in exact integer arithmetic:
///   sum A_i          = 2^k
///   sum i A_i        = 2^(k-1) (n - A1)
///   sum i^2 A_i      = 2^(k-2) (n(n+1) - 2n A1 + 2 A2)
///   sum i^3 A_i      = 2^(k-3) (n^2(n+3) - (3n^2+3n-2) A1 + 6n A2 - 6 A3)
pub fn dual_low_weights(dist: &WeightDistribution) -> Result<(u64, u64, u64)> {
    let n = dist.n as i128;
    let k = dist.k;
    let two_k = 1i128 << k;
    let inconsistent = |detail: String| Error::InconsistentMoments { detail };

    let total: i128 = dist.counts.values().map(|&a| a as i128).sum();
    if total != two_k {
        return Err(inconsistent(format!(
            "codeword count {total} differs from 2^k = {two_k}"
        )));
    }
    let moment = |p: u32| -> i128 {
        dist.counts
            .iter()
            .map(|(&w, &a)| (w as i128).pow(p) * a as i128)
            .sum()
    };
    let (m1, m2, m3) = (moment(1), moment(2), moment(3));

    // scaled to avoid fractional powers of two when k < 3
    let exact_div = |num: i128, den: i128, what: &str| -> Result<i128> {
        if num % den != 0 {
            return Err(inconsistent(format!("{what} is not integral")));
        }
        Ok(num / den)
    };
    let a1 = n - exact_div(2 * m1, two_k, "A1_perp")?;
    let a2 = exact_div(
        exact_div(4 * m2, two_k, "A2_perp")? - n * (n + 1) + 2 * n * a1,
        2,
        "A2_perp",
    )?;
    let a3 = exact_div(
        n * n * (n + 3) - (3 * n * n + 3 * n - 2) * a1 + 6 * n * a2
            - exact_div(8 * m3, two_k, "A3_perp")?,
        6,
        "A3_perp",
    )?;
    for (name, v) in [("A1_perp", a1), ("A2_perp", a2), ("A3_perp", a3)] {
        if v < 0 {
            return Err(inconsistent(format!("{name} = {v} is negative")));
        }
    }
    Ok((a1 as u64, a2 as u64, a3 as u64))
}

/// First three dual weights by direct column analysis: a weight-1 dual word
/// needs a zero column (d = 0), weight 2 needs a repeated column (impossible
/// for a set of distinct elements), and weight 3 counts unordered triples
/// with d_i + d_j + d_k = 0, found by pair-sum membership lookup.
pub fn dual_triples_direct(d: &ElementSet, _ctx: &FieldCtx) -> (u64, u64, u64) {
    let a1 = d.contains_zero() as u64;
    let a2 = 0u64;
    let members: Vec<u64> = d.iter().map(|x| x.bits()).collect();
    let mut a3 = 0u64;
    for (i, &di) in members.iter().enumerate() {
        for &dj in &members[i + 1..] {
            let s = di ^ dj;
            if s > dj && d.contains(Fe(s as u32)) {
                a3 += 1;
            }
        }
    }
    (a1, a2, a3)
}

/// The tri-weight distribution published for the trinomial codes:
/// weights 2^(m-2) -+ 2^((m-3)/2) and 2^(m-2), with counts
/// 2^(m-2) - 2^((m-3)/2), 2^(m-1) - 1, 2^(m-2) + 2^((m-3)/2).
pub fn expected_triweight(m: u32) -> WeightDistribution {
    assert!(m >= 5 && m % 2 == 1);
    let mid = 1u64 << (m - 2);
    let dev = 1u64 << ((m - 3) / 2);
    let mut counts = BTreeMap::new();
    counts.insert(0, 1);
    counts.insert(mid - dev, mid - dev);
    counts.insert(mid, (1 << (m - 1)) - 1);
    counts.insert(mid + dev, mid + dev);
    WeightDistribution {
        n: 1 << (m - 1),
        k: m,
        counts,
    }
}

/// The same tri-weight shape with the two extreme counts swapped, as carried
/// by the length 2^(m-1) - 1 codes from the sextic value-set.
pub fn expected_triweight_swapped(m: u32) -> WeightDistribution {
    let mut dist = expected_triweight(m);
    let mid = 1u64 << (m - 2);
    let dev = 1u64 << ((m - 3) / 2);
    dist.n -= 1;
    let low = *dist.counts.get(&(mid - dev)).unwrap();
    let high = *dist.counts.get(&(mid + dev)).unwrap();
    dist.counts.insert(mid - dev, high);
    dist.counts.insert(mid + dev, low);
    dist
}

/// CSV export: header `weight,count`, rows ascending by weight.
pub fn distribution_csv(dist: &WeightDistribution) -> String {
    let mut out = String::from("weight,count\n");
    for (w, a) in &dist.counts {
        out.push_str(&format!("{w},{a}\n"));
    }
    out
}

/// JSON export embedding n, k, the distribution, the first three dual
/// weights, and the enumerator string.
pub fn distribution_json(dist: &WeightDistribution) -> Result<String> {
    let (a1, a2, a3) = dual_low_weights(dist)?;
    let rows: Vec<String> = dist
        .counts
        .iter()
        .map(|(w, a)| format!("[{w},{a}]"))
        .collect();
    Ok(format!(
        "{{\"n\":{},\"k\":{},\"distribution\":[{}],\"dual\":[{a1},{a2},{a3}],\"enumerator\":\"{}\"}}",
        dist.n,
        dist.k,
        rows.join(","),
        enumerator_string(dist)
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffset::trace_power_set;
    use crate::polyfun::{catalog, punctured_value_set};

    fn f11_set(ctx: &FieldCtx) -> ElementSet {
        punctured_value_set(&catalog("f11", ctx).unwrap(), ctx).unwrap()
    }

    #[test]
    fn walsh_of_empty_and_full_supports() {
        let f = FieldCtx::new(5).unwrap();
        let empty = ElementSet::empty(&f);
        let s = walsh_spectrum(&empty, &f, WalshMethod::Direct);
        assert_eq!(s.value(Fe::ZERO), 32);
        assert!(f.nonzero_elements().all(|w| s.value(w) == 0));
        let mut full = ElementSet::full_group(&f);
        full.insert(Fe::ZERO);
        let s = walsh_spectrum(&full, &f, WalshMethod::Fast);
        assert_eq!(s.value(Fe::ZERO), -32);
        assert!(f.nonzero_elements().all(|w| s.value(w) == 0));
    }

    #[test]
    fn fast_equals_direct_m5_and_m7() {
        for m in [5u32, 7] {
            let f = FieldCtx::new(m).unwrap();
            for id in ["f11", "sextic1", "canon_c"] {
                let d = punctured_value_set(&catalog(id, &f).unwrap(), &f).unwrap();
                let direct = walsh_spectrum(&d, &f, WalshMethod::Direct);
                let fast = walsh_spectrum(&d, &f, WalshMethod::Fast);
                assert_eq!(direct, fast, "{id} at m = {m}");
            }
        }
    }

    #[test]
    fn f11_code_m5() {
        let f = FieldCtx::new(5).unwrap();
        let d = f11_set(&f);
        let dist = weight_distribution(&d, &f).unwrap();
        assert_eq!((dist.n, dist.k), (16, 5));
        let want: BTreeMap<u64, u64> = [(0, 1), (6, 6), (8, 15), (10, 10)].into_iter().collect();
        assert_eq!(dist.counts, want);
        assert_eq!(dist, weight_distribution_direct(&d, &f));
        assert_eq!(dist, expected_triweight(5));
        assert_eq!(enumerator_string(&dist), "1 + 6z^6 + 15z^8 + 10z^10");
    }

    #[test]
    fn sextic1_code_m5() {
        let f = FieldCtx::new(5).unwrap();
        let d = punctured_value_set(&catalog("sextic1", &f).unwrap(), &f).unwrap();
        let dist = weight_distribution(&d, &f).unwrap();
        assert_eq!((dist.n, dist.k), (15, 5));
        let want: BTreeMap<u64, u64> = [(0, 1), (6, 10), (8, 15), (10, 6)].into_iter().collect();
        assert_eq!(dist.counts, want);
        assert_eq!(dist, expected_triweight_swapped(5));
        assert_eq!(enumerator_string(&dist), "1 + 10z^6 + 15z^8 + 6z^10");
    }

    #[test]
    fn singleton_set_fails_hypothesis_but_enumerates() {
        // The single-column code has dimension 1 < m: the spectrum hits
        // 2 n_f + walsh(w) = 0, and direct enumeration gives the two
        // codewords.
        let f = FieldCtx::new(5).unwrap();
        let d = ElementSet::from_elements(&f, [Fe::ONE]);
        match weight_distribution(&d, &f) {
            Err(Error::CodeHypothesis { w }) => {
                assert_ne!(w, 0);
                assert_eq!(f.trace(f.element(w)), 0);
            }
            other => panic!("expected hypothesis failure, got {other:?}"),
        }
        let dist = weight_distribution_direct(&d, &f);
        assert_eq!((dist.n, dist.k), (1, 1));
        let want: BTreeMap<u64, u64> = [(0, 1), (1, 1)].into_iter().collect();
        assert_eq!(dist.counts, want);
        assert_eq!(enumerator_string(&dist), "1 + z^1");
    }

    #[test]
    fn dual_weights_f11_m5() {
        let f = FieldCtx::new(5).unwrap();
        let d = f11_set(&f);
        let dist = weight_distribution(&d, &f).unwrap();
        // (2^(2m-4) - 2^(m-3))/3 = 20 at m = 5
        assert_eq!(dual_low_weights(&dist).unwrap(), (0, 0, 20));
        assert_eq!(dual_triples_direct(&d, &f), (0, 0, 20));
        assert_eq!(dist.min_distance(), Some(6));
    }

    #[test]
    fn dual_weights_toy_codes() {
        // repetition-style {0: 1, 3: 1} with k = 1: duals (0, 3, 0)
        let dist = WeightDistribution {
            n: 3,
            k: 1,
            counts: [(0, 1), (3, 1)].into_iter().collect(),
        };
        assert_eq!(dual_low_weights(&dist).unwrap(), (0, 3, 0));
        // all-zero code with k = 0: dual is the full space
        let dist = WeightDistribution {
            n: 4,
            k: 0,
            counts: [(0, 1)].into_iter().collect(),
        };
        assert_eq!(dual_low_weights(&dist).unwrap(), (4, 6, 4));
        assert_eq!(enumerator_string(&dist), "1");
    }

    #[test]
    fn code_spec_dimensions() {
        let f = FieldCtx::new(5).unwrap();
        let spec = CodeSpec::new(f11_set(&f), &f);
        assert_eq!((spec.n, spec.k), (16, 5));
        let tiny = CodeSpec::new(ElementSet::from_elements(&f, [Fe::ONE, Fe::X]), &f);
        assert_eq!((tiny.n, tiny.k), (2, 2));
    }

    #[test]
    fn dual_weights_inconsistent_distribution() {
        // no binary linear [3, 2] code has three weight-1 words and nothing
        // else: the first moment comes out fractional
        let dist = WeightDistribution {
            n: 3,
            k: 2,
            counts: [(0, 1), (1, 3)].into_iter().collect(),
        };
        assert!(matches!(
            dual_low_weights(&dist),
            Err(Error::InconsistentMoments { .. })
        ));
        let dist = WeightDistribution {
            n: 3,
            k: 2,
            counts: [(0, 1), (1, 1)].into_iter().collect(),
        };
        assert!(matches!(
            dual_low_weights(&dist),
            Err(Error::InconsistentMoments { .. })
        ));
    }

    #[test]
    fn forced_triple() {
        let f = FieldCtx::new(5).unwrap();
        let a = f.element(5);
        let b = f.element(9);
        let d = ElementSet::from_elements(&f, [a, b, a ^ b]);
        assert_eq!(dual_triples_direct(&d, &f), (0, 0, 1));
    }

    #[test]
    fn pless_equals_direct_for_t1_m5() {
        let f = FieldCtx::new(5).unwrap();
        let d = trace_power_set(1, &f);
        let dist = weight_distribution(&d, &f).unwrap();
        let pless = dual_low_weights(&dist).unwrap();
        assert_eq!(pless, dual_triples_direct(&d, &f));
    }

    #[test]
    fn complement_code_swap_and_antisymmetry_m5() {
        // A = D(x^6+x)* with 0 adjoined; B its complement in the field.
        let f = FieldCtx::new(5).unwrap();
        let d6 = punctured_value_set(&catalog("sextic1", &f).unwrap(), &f).unwrap();
        let mut a = d6.clone();
        a.insert(Fe::ZERO);
        let mut b = ElementSet::empty(&f);
        for x in f.elements() {
            if !a.contains(x) {
                b.insert(x);
            }
        }
        let sa = walsh_spectrum(&a, &f, WalshMethod::Fast);
        let sb = walsh_spectrum(&b, &f, WalshMethod::Fast);
        for w in f.elements() {
            assert_eq!(sa.value(w), -sb.value(w));
        }
        let dist_d6 = weight_distribution(&d6, &f).unwrap();
        let dist_b = weight_distribution(&b, &f).unwrap();
        assert_eq!(dist_b, expected_triweight(5));
        assert_eq!(dist_d6, expected_triweight_swapped(5));
    }

    #[test]
    fn trace_set_codes_are_triweight_m5() {
        // T_(2^k+1) for k = 1, 2, (m+1)/2: actual length is 2^(m-1).
        let f = FieldCtx::new(5).unwrap();
        for n in [3u64, 5, f.sigma() + 1] {
            let d = trace_power_set(n, &f);
            assert_eq!(d.len(), 16);
            let dist = weight_distribution(&d, &f).unwrap();
            assert_eq!(dist, expected_triweight(5), "T_{n}");
        }
    }

    #[test]
    fn csv_and_json_exports() {
        let f = FieldCtx::new(5).unwrap();
        let dist = weight_distribution(&f11_set(&f), &f).unwrap();
        assert_eq!(
            distribution_csv(&dist),
            "weight,count\n0,1\n6,6\n8,15\n10,10\n"
        );
        let json = distribution_json(&dist).unwrap();
        assert!(json.contains("\"n\":16"));
        assert!(json.contains("\"dual\":[0,0,20]"));
        assert!(json.contains("1 + 6z^6 + 15z^8 + 10z^10"));
    }
}
