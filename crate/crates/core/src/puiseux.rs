//! Truncated Puiseux series over the rationals.
//!
//! A scalar is a finite sum of terms `c * t^(e/N)` with exact rational
//! coefficients, a ramification index `N`, and a precision marker: either
//! the value is exact (all omitted terms are zero) or it is known modulo
//! `O(t^(K/N))`. The degeneration parameter `t` plays the role of `1/n`
//! throughout: valuations of these scalars decide every collision and
//! convergence question downstream.
//!
//! Precision is propagated pessimistically (min-rule). A scalar is
//! *provably zero* only when it was constructed exactly or when a
//! subtraction cancels two structurally equal operands; a truncated
//! all-cancelled scalar is "zero to known precision" and any question
//! that needs its valuation answers `InsufficientPrecision` instead of
//! guessing.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::ops::{Add, Div, Mul, Neg, Sub};

pub type Q = BigRational;

/// Parse `"p/q"` or `"p"` into an exact rational.
pub fn q_parse(s: &str) -> Result<Q> {
    let mk = |n: &str| -> Result<BigInt> {
        n.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::domain(format!("bad rational literal {s:?}")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let den = mk(q)?;
            if den.is_zero() {
                return Err(Error::domain("zero denominator"));
            }
            Ok(Q::new(mk(p)?, den))
        }
        None => Ok(Q::from_integer(mk(s)?)),
    }
}

/// Canonical `"p/q"` (or `"p"` for integers) formatting.
pub fn q_string(q: &Q) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_ratio(p: i64, q: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(q))
}

/// A rational exponent `num/den` in units of `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exp {
    pub num: i64,
    pub den: u32,
}

impl Exp {
    pub fn new(num: i64, den: u32) -> Self {
        assert!(den > 0);
        let g = (num.unsigned_abs().gcd(&(den as u64))).max(1);
        Exp {
            num: num / g as i64,
            den: den / g as u32,
        }
    }

    pub fn int(n: i64) -> Self {
        Exp { num: n, den: 1 }
    }

    pub fn zero() -> Self {
        Exp::int(0)
    }

    pub fn to_q(self) -> Q {
        Q::new(BigInt::from(self.num), BigInt::from(self.den))
    }

    pub fn is_positive(self) -> bool {
        self.num > 0
    }

    pub fn is_negative(self) -> bool {
        self.num < 0
    }
}

impl PartialOrd for Exp {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Exp {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl Add for Exp {
    type Output = Exp;
    fn add(self, rhs: Exp) -> Exp {
        let den = lcm_u32(self.den, rhs.den);
        Exp::new(
            self.num * (den / self.den) as i64 + rhs.num * (den / rhs.den) as i64,
            den,
        )
    }
}

impl Sub for Exp {
    type Output = Exp;
    fn sub(self, rhs: Exp) -> Exp {
        self + Exp::new(-rhs.num, rhs.den)
    }
}

impl std::fmt::Display for Exp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Valuation of a scalar: order of vanishing at `t = 0`, `+infinity` for
/// the provably-zero scalar.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Val {
    Finite(Exp),
    Infinite,
}

impl Val {
    pub fn finite(self) -> Option<Exp> {
        match self {
            Val::Finite(e) => Some(e),
            Val::Infinite => None,
        }
    }

    pub fn is_positive(self) -> bool {
        match self {
            Val::Finite(e) => e.is_positive(),
            Val::Infinite => true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Prec {
    /// All omitted terms are zero.
    Exact,
    /// Known modulo `O(t^(k/ram))`; `k` is in the scalar's own ram units.
    Trunc(i64),
}

/// Default truncation depth when exactness is lost: 16 exponent steps
/// above the lowest relevant valuation, in units of `1/ram`.
pub const DEFAULT_PREC_STEPS: i64 = 16;

/// A truncated Puiseux series over `Q`.
///
/// Invariants: term exponents strictly increasing, all coefficients
/// nonzero, every exponent below the precision bound, and the
/// representation is canonical (minimal ramification).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Puiseux {
    ram: u32,
    /// `(exponent numerator, coefficient)`, exponent meaning `num/ram`.
    terms: Vec<(i64, Q)>,
    prec: Prec,
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    (a as u64 * (b as u64 / a.gcd(&b) as u64)) as u32
}

impl Puiseux {
    fn make(ram: u32, mut terms: Vec<(i64, Q)>, prec: Prec) -> Self {
        assert!(ram > 0);
        terms.retain(|(_, c)| !c.is_zero());
        terms.sort_by_key(|&(e, _)| e);
        if let Prec::Trunc(k) = prec {
            terms.retain(|&(e, _)| e < k);
        }
        for w in terms.windows(2) {
            assert!(w[0].0 < w[1].0, "duplicate exponent");
        }
        let mut s = Puiseux { ram, terms, prec };
        s.canonicalize();
        s
    }

    fn canonicalize(&mut self) {
        if self.ram == 1 {
            return;
        }
        let mut g = self.ram as u64;
        for &(e, _) in &self.terms {
            g = g.gcd(&e.unsigned_abs());
        }
        if let Prec::Trunc(k) = self.prec {
            g = g.gcd(&k.unsigned_abs());
        }
        if g > 1 {
            let g = g as i64;
            self.ram /= g as u32;
            for t in &mut self.terms {
                t.0 /= g;
            }
            if let Prec::Trunc(k) = self.prec {
                self.prec = Prec::Trunc(k / g);
            }
        }
    }

    /// The exact zero.
    pub fn zero() -> Self {
        Puiseux {
            ram: 1,
            terms: Vec::new(),
            prec: Prec::Exact,
        }
    }

    /// Zero up to `O(t^(k/den))`: nothing is known below that order.
    pub fn zero_to(k: i64, den: u32) -> Self {
        Puiseux::make(den, Vec::new(), Prec::Trunc(k))
    }

    pub fn one() -> Self {
        Puiseux::from_q(Q::one())
    }

    pub fn from_q(c: Q) -> Self {
        if c.is_zero() {
            Puiseux::zero()
        } else {
            Puiseux {
                ram: 1,
                terms: vec![(0, c)],
                prec: Prec::Exact,
            }
        }
    }

    pub fn from_int(n: i64) -> Self {
        Puiseux::from_q(q_int(n))
    }

    /// The monomial `c * t^(num/den)`.
    pub fn monomial(c: Q, num: i64, den: u32) -> Self {
        if c.is_zero() {
            return Puiseux::zero();
        }
        Puiseux::make(den, vec![(num, c)], Prec::Exact)
    }

    /// The parameter `t` itself.
    pub fn t() -> Self {
        Puiseux::monomial(Q::one(), 1, 1)
    }

    /// Exact terms with explicit truncation, exponents in `1/den` units.
    pub fn with_terms(den: u32, terms: Vec<(i64, Q)>, prec: Option<i64>) -> Self {
        Puiseux::make(
            den,
            terms,
            match prec {
                Some(k) => Prec::Trunc(k),
                None => Prec::Exact,
            },
        )
    }

    pub fn ram(&self) -> u32 {
        self.ram
    }

    pub fn is_exact(&self) -> bool {
        self.prec == Prec::Exact
    }

    /// Precision bound as an exponent, when truncated.
    pub fn prec_exp(&self) -> Option<Exp> {
        match self.prec {
            Prec::Exact => None,
            Prec::Trunc(k) => Some(Exp::new(k, self.ram)),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exp, &Q)> + '_ {
        self.terms.iter().map(|(e, c)| (Exp::new(*e, self.ram), c))
    }

    /// Provably zero: no terms and exact.
    pub fn is_provably_zero(&self) -> bool {
        self.terms.is_empty() && self.prec == Prec::Exact
    }

    /// No resolved terms (may still be nonzero below the precision bound).
    pub fn is_zero_to_prec(&self) -> bool {
        self.terms.is_empty()
    }

    /// Valuation: exponent of the lowest nonzero term, `Infinite` for the
    /// provably-zero scalar, error when unresolved.
    pub fn val(&self) -> Result<Val> {
        match self.terms.first() {
            Some(&(e, _)) => Ok(Val::Finite(Exp::new(e, self.ram))),
            None => {
                if self.prec == Prec::Exact {
                    Ok(Val::Infinite)
                } else {
                    Err(Error::insufficient_at(
                        "valuation",
                        format!("t^{}", self.prec_exp().unwrap()),
                    ))
                }
            }
        }
    }

    /// Leading coefficient, when the valuation is resolved and finite.
    pub fn leading_coeff(&self) -> Option<&Q> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Limit on the residue sphere as `t -> 0`: `0` for positive valuation,
    /// the leading coefficient at valuation zero, `None` (infinity) for
    /// negative valuation.
    pub fn residue_limit(&self) -> Result<Option<Q>> {
        match self.val()? {
            Val::Infinite => Ok(Some(Q::zero())),
            Val::Finite(e) => {
                if e.is_positive() {
                    Ok(Some(Q::zero()))
                } else if e.is_negative() {
                    Ok(None)
                } else {
                    Ok(Some(self.terms[0].1.clone()))
                }
            }
        }
    }

    /// The coefficient at `t^0` implied up to precision (zero if absent),
    /// or an error when the constant term sits below the truncation bound.
    pub fn residue_coeff(&self) -> Result<Q> {
        if let Prec::Trunc(k) = self.prec {
            if k <= 0 {
                return Err(Error::insufficient("residue coefficient"));
            }
        }
        Ok(self
            .terms
            .iter()
            .find(|&&(e, _)| e == 0)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Q::zero))
    }

    fn upscale(&self, ram: u32) -> (Vec<(i64, Q)>, Prec) {
        assert_eq!(ram % self.ram, 0);
        let f = (ram / self.ram) as i64;
        let terms = self.terms.iter().map(|(e, c)| (e * f, c.clone())).collect();
        let prec = match self.prec {
            Prec::Exact => Prec::Exact,
            Prec::Trunc(k) => Prec::Trunc(k * f),
        };
        (terms, prec)
    }

    /// Reinterpret in a finer ramification without changing the value.
    pub fn with_ram(&self, ram: u32) -> Puiseux {
        let ram = lcm_u32(self.ram, ram);
        let (terms, prec) = self.upscale(ram);
        Puiseux { ram, terms, prec }
    }

    /// Substitute `t -> t^k` (reparametrization of the family).
    pub fn reparametrize(&self, k: u32) -> Puiseux {
        assert!(k > 0);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e * k as i64, c.clone()))
            .collect();
        let prec = match self.prec {
            Prec::Exact => Prec::Exact,
            Prec::Trunc(p) => Prec::Trunc(p * k as i64),
        };
        Puiseux::make(self.ram, terms, prec)
    }

    /// Multiply by the monomial `t^(num/den)`.
    pub fn shift(&self, num: i64, den: u32) -> Puiseux {
        let ram = lcm_u32(self.ram, den);
        let (mut terms, prec) = self.upscale(ram);
        let d = num * (ram / den) as i64;
        for t in &mut terms {
            t.0 += d;
        }
        let prec = match prec {
            Prec::Exact => Prec::Exact,
            Prec::Trunc(k) => Prec::Trunc(k + d),
        };
        Puiseux::make(ram, terms, prec)
    }

    /// Truncate to `O(t^e)` (tightening only).
    pub fn truncated(&self, e: Exp) -> Puiseux {
        let ram = lcm_u32(self.ram, e.den);
        let (terms, prec) = self.upscale(ram);
        let k = e.num * (ram / e.den) as i64;
        let k = match prec {
            Prec::Exact => k,
            Prec::Trunc(p) => p.min(k),
        };
        Puiseux::make(ram, terms, Prec::Trunc(k))
    }

    fn binop(&self, rhs: &Puiseux, f: impl Fn(&Q, &Q) -> Q) -> Puiseux {
        let ram = lcm_u32(self.ram, rhs.ram);
        let (a, pa) = self.upscale(ram);
        let (b, pb) = rhs.upscale(ram);
        let prec = match (pa, pb) {
            (Prec::Exact, Prec::Exact) => Prec::Exact,
            (Prec::Exact, Prec::Trunc(k)) | (Prec::Trunc(k), Prec::Exact) => Prec::Trunc(k),
            (Prec::Trunc(j), Prec::Trunc(k)) => Prec::Trunc(j.min(k)),
        };
        let mut terms: Vec<(i64, Q)> = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let pick_a = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => {
                    if x.0 == y.0 {
                        terms.push((x.0, f(&x.1, &y.1)));
                        i += 1;
                        j += 1;
                        continue;
                    }
                    x.0 < y.0
                }
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => unreachable!(),
            };
            if pick_a {
                terms.push((a[i].0, f(&a[i].1, &Q::zero())));
                i += 1;
            } else {
                terms.push((b[j].0, f(&Q::zero(), &b[j].1)));
                j += 1;
            }
        }
        Puiseux::make(ram, terms, prec)
    }

    pub fn mul_q(&self, c: &Q) -> Puiseux {
        if c.is_zero() {
            return Puiseux::zero();
        }
        Puiseux::make(
            self.ram,
            self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
            self.prec,
        )
    }

    /// Multiplicative inverse truncated `steps` exponent steps (units of
    /// the result's ramification) past its own valuation.
    pub fn recip_to(&self, steps: i64) -> Result<Puiseux> {
        let v = match self.val() {
            Ok(Val::Finite(e)) => e,
            Ok(Val::Infinite) => return Err(Error::domain("division by zero scalar")),
            Err(_) => {
                return Err(Error::insufficient(
                    "reciprocal: no resolved leading term in divisor",
                ))
            }
        };
        // self = c * t^v * (1 + u), val(u) > 0
        let c = self.terms[0].1.clone();
        let unit = self.shift(-v.num, v.den).mul_q(&c.recip());
        let mut u = unit.binop(&Puiseux::one(), |a, b| a - b); // val > 0
        // Available order for the geometric series: limited by the input
        // precision (relative to its valuation) and the requested steps.
        let rel_prec = match unit.prec {
            Prec::Exact => Exp::new(steps, unit.ram.max(self.ram)),
            Prec::Trunc(k) => Exp::new(k, unit.ram).min(Exp::new(steps, unit.ram.max(self.ram))),
        };
        u = u.truncated(rel_prec);
        let mut acc = Puiseux::one().truncated(rel_prec);
        let mut pow = Puiseux::one();
        if !u.is_zero_to_prec() {
            let uval = u.val()?.finite().expect("val(u) > 0");
            let mut k_exp = Exp::zero();
            loop {
                k_exp = k_exp + uval;
                if k_exp >= rel_prec {
                    break;
                }
                pow = (&pow * &u).truncated(rel_prec);
                if pow.is_zero_to_prec() && pow.is_exact() {
                    break;
                }
                let signed = if (acc_len_parity(&k_exp, uval)) % 2 == 1 {
                    pow.neg_ref()
                } else {
                    pow.clone()
                };
                acc = acc.binop(&signed, |a, b| a + b);
                if pow.is_zero_to_prec() {
                    break;
                }
            }
        } else if !u.is_exact() {
            // unit = 1 + O(t^rel): the inverse is 1 + O(t^rel) as well
            acc = Puiseux::one().truncated(rel_prec);
        }
        // (c t^v (1+u))^{-1} = c^{-1} t^{-v} sum (-u)^k
        Ok(acc.mul_q(&c.recip()).shift(-v.num, v.den))
    }

    pub fn recip(&self) -> Result<Puiseux> {
        self.recip_to(DEFAULT_PREC_STEPS)
    }

    pub fn div_to(&self, rhs: &Puiseux, steps: i64) -> Result<Puiseux> {
        if self.is_provably_zero() {
            if rhs.is_provably_zero() {
                return Err(Error::domain("0/0"));
            }
            return Ok(Puiseux::zero());
        }
        Ok(self * &rhs.recip_to(steps)?)
    }

    fn neg_ref(&self) -> Puiseux {
        Puiseux::make(
            self.ram,
            self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
            self.prec,
        )
    }

    pub fn pow(&self, n: u32) -> Puiseux {
        let mut acc = Puiseux::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluate numerically at a small `t0 > 0`. Test-oracle use only.
    pub fn eval_f64(&self, t0: f64) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| c.to_f64().unwrap_or(f64::NAN) * t0.powf(*e as f64 / self.ram as f64))
            .sum()
    }
}

fn acc_len_parity(k_exp: &Exp, uval: Exp) -> i64 {
    // number of u-factors accumulated so far = k_exp / uval
    let num = k_exp.num as i128 * uval.den as i128;
    let den = uval.num as i128 * k_exp.den as i128;
    debug_assert!(den != 0 && num % den == 0);
    (num / den) as i64
}

impl Add for &Puiseux {
    type Output = Puiseux;
    fn add(self, rhs: &Puiseux) -> Puiseux {
        self.binop(rhs, |a, b| a + b)
    }
}

impl Sub for &Puiseux {
    type Output = Puiseux;
    fn sub(self, rhs: &Puiseux) -> Puiseux {
        // Cancelling two structurally equal operands is a provable zero
        // even when both carry truncation.
        if self == rhs {
            return Puiseux::zero();
        }
        self.binop(rhs, |a, b| a - b)
    }
}

impl Neg for &Puiseux {
    type Output = Puiseux;
    fn neg(self) -> Puiseux {
        self.neg_ref()
    }
}

impl Mul for &Puiseux {
    type Output = Puiseux;
    fn mul(self, rhs: &Puiseux) -> Puiseux {
        let ram = lcm_u32(self.ram, rhs.ram);
        let (a, pa) = self.upscale(ram);
        let (b, pb) = rhs.upscale(ram);
        // error(ab) = A*O(t^qb) + B*O(t^qa) + O(t^(qa+qb))
        let prec = {
            let va = a.first().map(|t| t.0);
            let vb = b.first().map(|t| t.0);
            let mut bound: Option<i64> = None;
            let mut upd = |k: Option<i64>| {
                bound = match (bound, k) {
                    (None, x) => x,
                    (x, None) => x,
                    (Some(x), Some(y)) => Some(x.min(y)),
                }
            };
            match (pa, pb) {
                (Prec::Exact, Prec::Exact) => {}
                (Prec::Exact, Prec::Trunc(qb)) => match va {
                    Some(va) => upd(Some(va + qb)),
                    // exact zero times anything is exact zero
                    None => return Puiseux::zero(),
                },
                (Prec::Trunc(qa), Prec::Exact) => match vb {
                    Some(vb) => upd(Some(vb + qa)),
                    None => return Puiseux::zero(),
                },
                (Prec::Trunc(qa), Prec::Trunc(qb)) => {
                    upd(Some(qa + qb));
                    if let Some(va) = va {
                        upd(Some(va + qb));
                    }
                    if let Some(vb) = vb {
                        upd(Some(vb + qa));
                    }
                    // all-unresolved times all-unresolved: O(t^(qa+qb))
                }
            }
            match bound {
                None => Prec::Exact,
                Some(k) => Prec::Trunc(k),
            }
        };
        let mut acc: std::collections::BTreeMap<i64, Q> = std::collections::BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                if let Prec::Trunc(k) = prec {
                    if ea + eb >= k {
                        continue;
                    }
                }
                let entry = acc.entry(ea + eb).or_insert_with(Q::zero);
                *entry += ca * cb;
            }
        }
        Puiseux::make(ram, acc.into_iter().collect(), prec)
    }
}

impl Div for &Puiseux {
    type Output = Puiseux;
    /// Division at the default working precision. Panics on unresolved
    /// divisors; use [`Puiseux::div_to`] for a fallible version.
    fn div(self, rhs: &Puiseux) -> Puiseux {
        self.div_to(rhs, DEFAULT_PREC_STEPS)
            .expect("division by unresolved or zero scalar")
    }
}

impl std::fmt::Display for Puiseux {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            write!(f, "0")?;
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let exp = Exp::new(*e, self.ram);
            if i > 0 {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            if exp.num == 0 {
                write!(f, "{}", q_string(&a))?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", q_string(&a))?;
                }
                if exp == Exp::int(1) {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{exp}")?;
                }
            }
        }
        if let Some(p) = self.prec_exp() {
            write!(f, " + O(t^{p})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> Puiseux {
        Puiseux::t()
    }

    #[test]
    fn monomial_shift_mul() {
        // (t + t^2) * t^-1 = 1 + t
        let a = &t() + &t().pow(2);
        let b = a.shift(-1, 1);
        let expect = &Puiseux::one() + &t();
        assert_eq!(b, expect);
        let c = &a * &Puiseux::monomial(Q::one(), -1, 1);
        assert_eq!(c, expect);
    }

    #[test]
    fn geometric_series_inverse() {
        // 1 / (1 - t) = 1 + t + t^2 + ...
        let one_minus_t = &Puiseux::one() - &t();
        let inv = one_minus_t.recip().unwrap();
        for k in 0..DEFAULT_PREC_STEPS {
            assert!(
                inv.terms().any(|(e, c)| e == Exp::int(k) && c.is_one()),
                "missing t^{k} in {inv}"
            );
        }
        assert_eq!(inv.prec_exp(), Some(Exp::int(DEFAULT_PREC_STEPS)));
        // a * (1/a) = 1 + O(t^prec)
        let prod = &one_minus_t * &inv;
        let delta = &prod - &Puiseux::one();
        assert!(delta.is_zero_to_prec());
    }

    #[test]
    fn valuation_examples() {
        // 2t^3 - t^5 -> 3
        let a = &Puiseux::monomial(q_int(2), 3, 1) - &t().pow(5);
        assert_eq!(a.val().unwrap(), Val::Finite(Exp::int(3)));
        assert_eq!(Puiseux::from_int(5).val().unwrap(), Val::Finite(Exp::zero()));
        // t - t: provable zero
        let z = &t() - &t();
        assert!(z.is_provably_zero());
        assert_eq!(z.val().unwrap(), Val::Infinite);
        // val-mixing sum has valuation -1
        let m = &(&Puiseux::monomial(Q::one(), -1, 1) + &Puiseux::one()) + &t();
        assert_eq!(m.val().unwrap(), Val::Finite(Exp::int(-1)));
    }

    #[test]
    fn unresolved_zero_errors() {
        let z = Puiseux::zero_to(4, 1);
        assert!(z.val().is_err());
        assert!(!z.is_provably_zero());
        assert!(z.is_zero_to_prec());
        // structurally equal truncated operands cancel to a provable zero
        let a = (&Puiseux::one() - &t()).recip().unwrap();
        let diff = &a - &a.clone();
        assert!(diff.is_provably_zero());
    }

    #[test]
    fn residue_limits() {
        let a = &Puiseux::from_int(3) + &t();
        assert_eq!(a.residue_limit().unwrap(), Some(q_int(3)));
        let b = Puiseux::monomial(Q::one(), -1, 1);
        assert_eq!(b.residue_limit().unwrap(), None);
        // t * (1/t) -> 1
        let c = &t() * &b;
        assert_eq!(c.residue_limit().unwrap(), Some(Q::one()));
    }

    #[test]
    fn residue_limit_multiplicative() {
        let a = &(&Puiseux::from_int(2) + &t()) * &t(); // val 1 -> 0
        let b = Puiseux::monomial(q_int(3), -1, 1); // -> inf
        let prod = &a * &b; // val 0, leading 6
        assert_eq!(prod.residue_limit().unwrap(), Some(q_int(6)));
    }

    #[test]
    fn precision_min_rule() {
        let a = Puiseux::with_terms(1, vec![(0, Q::one())], Some(3));
        let b = Puiseux::with_terms(1, vec![(0, Q::one()), (5, Q::one())], None);
        let s = &a + &b;
        assert_eq!(s.prec_exp(), Some(Exp::int(3)));
        // the t^5 term is beyond precision and must be dropped
        assert!(s.terms().all(|(e, _)| e < Exp::int(3)));
        // multiplication: val(b) + prec(a)
        let p = &a * &Puiseux::monomial(Q::one(), 2, 1);
        assert_eq!(p.prec_exp(), Some(Exp::int(5)));
    }

    #[test]
    fn ramified_arithmetic() {
        let h = Puiseux::monomial(Q::one(), 1, 2); // t^(1/2)
        assert_eq!((&h * &h), t());
        let sum = &h + &t();
        assert_eq!(sum.val().unwrap(), Val::Finite(Exp::new(1, 2)));
        assert_eq!(sum.ram(), 2);
        // canonical ram drops back when half-powers cancel
        let d = &sum - &h;
        assert_eq!(d, t());
        assert_eq!(d.ram(), 1);
    }

    #[test]
    fn division_by_unresolved_is_an_error() {
        let z = Puiseux::zero_to(4, 1);
        assert!(Puiseux::one().div_to(&z, 16).is_err());
        assert!(matches!(
            Puiseux::one().div_to(&Puiseux::zero(), 16),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn display_roundtrip_smoke() {
        let a = &(&Puiseux::one() - &t()) + &Puiseux::monomial(q_ratio(3, 8), 5, 2);
        let s = a.to_string();
        assert!(s.contains("t^5/2"), "{s}");
    }
}
