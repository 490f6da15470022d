//! Symbolic exponents over the degree parameter m.
//!
//! Catalog maps are GF(2)-sums of monomials x^e where e is an integer
//! expression in m, e.g. 2^m - 17 or (2^m + 19)/3 or -(sigma - 1)/2 with
//! sigma = 2^((m+1)/2). Evaluation at a concrete odd m produces a residue in
//! Z/(2^m - 1). Divisions are either exact (remainder must vanish, as in
//! (2^m + 19)/3) or modular (multiply by the divisor's inverse mod 2^m - 1,
//! which is how half-integer exponents act on the multiplicative group).

use crate::error::{Error, Result};
use crate::gf2m::FieldCtx;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DivMode {
    /// Integer division that must leave no remainder.
    Exact,
    /// Multiplication by the divisor's inverse in Z/(2^m - 1).
    Modular,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExponentExpr {
    Const(i64),
    /// The degree symbol m.
    M,
    Add(Box<ExponentExpr>, Box<ExponentExpr>),
    Sub(Box<ExponentExpr>, Box<ExponentExpr>),
    Mul(Box<ExponentExpr>, Box<ExponentExpr>),
    /// 2^((a*m + b)/c) with c = 1 or 2; the inner exponent must come out a
    /// nonnegative integer (parity is validated when halved).
    Pow2 {
        m_coeff: i64,
        offset: i64,
        halved: bool,
    },
    Div {
        num: Box<ExponentExpr>,
        divisor: i64,
        mode: DivMode,
    },
}

/// Evaluation result: either a plain integer (usable at x = 0 with integer
/// semantics) or a residue in Z/(2^m - 1) that only makes sense on F*.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExponentValue {
    Plain(i128),
    Residue(u64),
}

impl ExponentValue {
    /// Canonical residue in Z/(2^m - 1).
    pub fn residue(self, ctx: &FieldCtx) -> u64 {
        match self {
            ExponentValue::Plain(v) => ctx.reduce_exponent(v),
            ExponentValue::Residue(r) => r,
        }
    }

    /// The plain integer value, when no modular step was involved.
    pub fn plain(self) -> Option<i128> {
        match self {
            ExponentValue::Plain(v) => Some(v),
            ExponentValue::Residue(_) => None,
        }
    }
}

impl ExponentExpr {
    pub fn constant(v: i64) -> ExponentExpr {
        ExponentExpr::Const(v)
    }

    /// 2^(a*m + b)
    pub fn pow2(m_coeff: i64, offset: i64) -> ExponentExpr {
        ExponentExpr::Pow2 {
            m_coeff,
            offset,
            halved: false,
        }
    }

    /// 2^((a*m + b)/2)
    pub fn pow2_half(m_coeff: i64, offset: i64) -> ExponentExpr {
        ExponentExpr::Pow2 {
            m_coeff,
            offset,
            halved: true,
        }
    }

    /// sigma = 2^((m+1)/2)
    pub fn sigma() -> ExponentExpr {
        ExponentExpr::pow2_half(1, 1)
    }

    // Builder methods named after the tree nodes they produce; the expression
    // type is not numeric, so the operator traits stay unimplemented.
    #[allow(clippy::should_implement_trait)]
    pub fn add(self, rhs: ExponentExpr) -> ExponentExpr {
        ExponentExpr::Add(Box::new(self), Box::new(rhs))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(self, rhs: ExponentExpr) -> ExponentExpr {
        ExponentExpr::Sub(Box::new(self), Box::new(rhs))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, rhs: ExponentExpr) -> ExponentExpr {
        ExponentExpr::Mul(Box::new(self), Box::new(rhs))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> ExponentExpr {
        ExponentExpr::Const(0).sub(self)
    }

    pub fn plus(self, v: i64) -> ExponentExpr {
        self.add(ExponentExpr::Const(v))
    }

    pub fn minus(self, v: i64) -> ExponentExpr {
        self.sub(ExponentExpr::Const(v))
    }

    pub fn times(self, v: i64) -> ExponentExpr {
        ExponentExpr::Const(v).mul(self)
    }

    pub fn div_exact(self, divisor: i64) -> ExponentExpr {
        ExponentExpr::Div {
            num: Box::new(self),
            divisor,
            mode: DivMode::Exact,
        }
    }

    pub fn div_modular(self, divisor: i64) -> ExponentExpr {
        ExponentExpr::Div {
            num: Box::new(self),
            divisor,
            mode: DivMode::Modular,
        }
    }

    /// Evaluate at the context's degree. `map` names the owning map for error
    /// reporting.
    pub fn eval(&self, ctx: &FieldCtx, map: &str) -> Result<ExponentValue> {
        let m = ctx.m();
        let order = ctx.order();
        Ok(match self {
            ExponentExpr::Const(v) => ExponentValue::Plain(*v as i128),
            ExponentExpr::M => ExponentValue::Plain(m as i128),
            ExponentExpr::Add(a, b) => combine(ctx, a.eval(ctx, map)?, b.eval(ctx, map)?, |x, y| x + y),
            ExponentExpr::Sub(a, b) => combine(ctx, a.eval(ctx, map)?, b.eval(ctx, map)?, |x, y| x - y),
            ExponentExpr::Mul(a, b) => combine(ctx, a.eval(ctx, map)?, b.eval(ctx, map)?, |x, y| x * y),
            ExponentExpr::Pow2 {
                m_coeff,
                offset,
                halved,
            } => {
                let num = m_coeff * m as i64 + offset;
                let den = if *halved { 2 } else { 1 };
                if num < 0 || num % den != 0 {
                    return Err(Error::InvalidPowerOfTwo {
                        map: map.to_string(),
                        m,
                        num,
                        den,
                    });
                }
                ExponentValue::Plain(1i128 << (num / den))
            }
            ExponentExpr::Div { num, divisor, mode } => {
                let inner = num.eval(ctx, map)?;
                match mode {
                    DivMode::Exact => {
                        let v = inner.plain().ok_or_else(|| Error::ExponentNotExact {
                            map: map.to_string(),
                            m,
                            num: 0,
                            divisor: *divisor,
                        })?;
                        if *divisor == 0 || v % *divisor as i128 != 0 {
                            return Err(Error::ExponentNotExact {
                                map: map.to_string(),
                                m,
                                num: v,
                                divisor: *divisor,
                            });
                        }
                        ExponentValue::Plain(v / *divisor as i128)
                    }
                    DivMode::Modular => {
                        let inv = ctx
                            .exponent_inverse(*divisor)
                            .ok_or(Error::DivisorNotInvertible { m, divisor: *divisor })?;
                        let r = inner.residue(ctx);
                        ExponentValue::Residue((r as u128 * inv as u128 % order as u128) as u64)
                    }
                }
            }
        })
    }
}

fn combine(
    ctx: &FieldCtx,
    a: ExponentValue,
    b: ExponentValue,
    op: fn(i128, i128) -> i128,
) -> ExponentValue {
    match (a, b) {
        (ExponentValue::Plain(x), ExponentValue::Plain(y)) => ExponentValue::Plain(op(x, y)),
        _ => {
            let x = a.residue(ctx) as i128;
            let y = b.residue(ctx) as i128;
            ExponentValue::Residue(ctx.reduce_exponent(op(x, y)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2m::FieldCtx;

    #[test]
    fn exact_division_by_three_works_for_odd_m() {
        // 2^m = 2 mod 3 for odd m, so 2^m + 19 = 21 = 0 mod 3
        for m in [5u32, 7, 9, 11] {
            let f = FieldCtx::new(m).unwrap();
            let e = ExponentExpr::pow2(1, 0).plus(19).div_exact(3);
            let v = e.eval(&f, "t").unwrap().plain().unwrap();
            assert_eq!(v * 3, (1i128 << m) + 19);
        }
    }

    #[test]
    fn exact_division_failure_is_reported() {
        let f = FieldCtx::new(5).unwrap();
        let e = ExponentExpr::pow2(1, 0).div_exact(3); // 32 / 3
        assert!(matches!(
            e.eval(&f, "t"),
            Err(Error::ExponentNotExact { m: 5, num: 32, divisor: 3, .. })
        ));
    }

    #[test]
    fn modular_and_exact_division_agree_when_exact() {
        for m in [5u32, 7, 9] {
            let f = FieldCtx::new(m).unwrap();
            let exact = ExponentExpr::pow2(1, 0)
                .plus(19)
                .div_exact(3)
                .eval(&f, "t")
                .unwrap()
                .residue(&f);
            let modular = ExponentExpr::pow2(1, 0)
                .plus(19)
                .div_modular(3)
                .eval(&f, "t")
                .unwrap()
                .residue(&f);
            assert_eq!(exact, modular);
        }
    }

    #[test]
    fn half_exponents_reduce_as_expected() {
        // -(sigma - 1)/2 at m = 5: inv(2) = 16, 7 * 16 = 112 = 19, -19 = 12 mod 31
        let f = FieldCtx::new(5).unwrap();
        let e = ExponentExpr::sigma().minus(1).neg().div_modular(2);
        assert_eq!(e.eval(&f, "t").unwrap().residue(&f), 12);
        // -sigma/2 = -4 = 27 mod 31, expressible as a plain power of two
        let e = ExponentExpr::pow2_half(1, -1).neg();
        assert_eq!(e.eval(&f, "t").unwrap().residue(&f), 27);
    }

    #[test]
    fn pow2_parity_violation_errors() {
        let f = FieldCtx::new(5).unwrap();
        // 2^(m/2) with odd m has no integer exponent
        let e = ExponentExpr::pow2_half(1, 0);
        assert!(matches!(e.eval(&f, "t"), Err(Error::InvalidPowerOfTwo { .. })));
    }
}
