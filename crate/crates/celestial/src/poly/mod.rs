//! Sparse multivariate polynomials over exact rationals.
//!
//! A [`MultiPoly`] carries its [`Context`] (ordered variable names plus a
//! monomial order); terms are kept sorted descending in that order with no
//! zero coefficients, so equal polynomials have identical representations.
//! Cross-context arithmetic is an error, never a silent re-mapping.

mod gcd;
mod monomial;
mod parse;

pub use gcd::gcd_poly;
pub use monomial::{CompiledOrder, Monomial, MonomialOrder};
pub use parse::parse_poly;

use crate::arith::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials belong to different variable contexts")]
    ContextMismatch,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("unsupported: operation limited to {limit} variables, got {got}")]
    TooManyVariables { limit: usize, got: usize },
    #[error("no variable named `{0}` in this context")]
    NoSuchVariable(String),
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, PartialEq, Eq)]
struct ContextInner {
    vars: Vec<String>,
    order: MonomialOrder,
    compiled: CompiledOrder,
}

/// Shared variable context: ordered unique names plus a monomial order.
#[derive(Debug, Clone)]
pub struct Context(Arc<ContextInner>);

impl PartialEq for Context {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.vars == other.0.vars && self.0.order == other.0.order)
    }
}
impl Eq for Context {}

impl Context {
    pub fn new(vars: &[&str], order: MonomialOrder) -> Context {
        let names: Vec<String> = vars.iter().map(|s| s.to_string()) .collect();
        let mut seen = std::collections::HashSet::new();
        for n in &names {
            assert!(seen.insert(n.clone()), "duplicate variable name `{n}`");
        }
        let compiled = order.compile(names.len());
        Context(Arc::new(ContextInner { vars: names, order, compiled }))
    }

    /// Same variables, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Context {
        let compiled = order.compile(self.0.vars.len());
        Context(Arc::new(ContextInner {
            vars: self.0.vars.clone(),
            order,
            compiled,
        }))
    }

    /// Block order eliminating exactly the named variables, grevlex inside
    /// both blocks.
    pub fn elimination_order(&self, drop: &[&str]) -> Result<Context, PolyError> {
        let mut elim = vec![false; self.nvars()];
        for name in drop {
            let idx = self.var_index(name).ok_or_else(|| PolyError::NoSuchVariable(name.to_string()))?;
            elim[idx] = true;
        }
        Ok(self.with_order(MonomialOrder::Block {
            elim,
            inner: Box::new(MonomialOrder::GrevLex),
        }))
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.0.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.0.order
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.0.compiled.cmp(a, b)
    }

    pub fn zero(&self) -> MultiPoly {
        MultiPoly { ctx: self.clone(), terms: Vec::new() }
    }

    pub fn constant(&self, c: BigRational) -> MultiPoly {
        let mut terms = Vec::new();
        if !c.is_zero() {
            terms.push((Monomial::one(self.nvars()), c));
        }
        MultiPoly { ctx: self.clone(), terms }
    }

    pub fn one(&self) -> MultiPoly {
        self.constant(BigRational::one())
    }

    pub fn var(&self, name: &str) -> MultiPoly {
        let idx = self
            .var_index(name)
            .unwrap_or_else(|| panic!("no variable `{name}` in context"));
        MultiPoly {
            ctx: self.clone(),
            terms: vec![(Monomial::var(self.nvars(), idx), BigRational::one())],
        }
    }

    /// Builds a polynomial from raw (monomial, coefficient) pairs.
    pub fn from_terms(&self, terms: Vec<(Monomial, BigRational)>) -> MultiPoly {
        let mut map: HashMap<Monomial, BigRational> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.0.len(), self.nvars());
            let entry = map.entry(m).or_insert_with(BigRational::zero);
            *entry += c;
        }
        let mut terms: Vec<(Monomial, BigRational)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| self.cmp_monomials(&b.0, &a.0));
        MultiPoly { ctx: self.clone(), terms }
    }
}

/// Sparse polynomial in canonical form: terms sorted descending by the
/// context order, no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    ctx: Context,
    terms: Vec<(Monomial, BigRational)>,
}

impl MultiPoly {
    pub fn context(&self) -> &Context {
        &self.ctx
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            Some(BigRational::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.total_degree()).max().unwrap_or(0)
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.0[var] as u32).max().unwrap_or(0)
    }

    /// Indices of variables actually appearing.
    pub fn used_vars(&self) -> Vec<usize> {
        let n = self.ctx.nvars();
        let mut used = vec![false; n];
        for (m, _) in &self.terms {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        (0..n).filter(|&i| used[i]).collect()
    }

    fn check_ctx(&self, other: &MultiPoly) -> Result<(), PolyError> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(PolyError::ContextMismatch)
        }
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_ctx(other)?;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.ctx.cmp_monomials(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(MultiPoly { ctx: self.ctx.clone(), terms: out })
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_ctx(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.ctx.zero());
        }
        let mut map: HashMap<Monomial, BigRational> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                let entry = map.entry(m).or_insert_with(BigRational::zero);
                *entry += c;
            }
        }
        let mut terms: Vec<(Monomial, BigRational)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| self.ctx.cmp_monomials(&b.0, &a.0));
        Ok(MultiPoly { ctx: self.ctx.clone(), terms })
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return self.ctx.zero();
        }
        MultiPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_term(&self, mono: &Monomial, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return self.ctx.zero();
        }
        MultiPoly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.mul(mono), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut acc = self.ctx.one();
        for _ in 0..n {
            acc = acc.mul(self).expect("same context");
        }
        acc
    }

    /// Normal form of `self` against the list `G`: no term of the result is
    /// divisible by any leading term of `G`. Divisors are tried in list
    /// order, so the result is deterministic for a fixed `G`.
    pub fn reduce(&self, basis: &[MultiPoly]) -> Result<MultiPoly, PolyError> {
        for g in basis {
            self.check_ctx(g)?;
        }
        let divisors: Vec<&MultiPoly> = basis.iter().filter(|g| !g.is_zero()).collect();
        let mut p = self.clone();
        let mut remainder: Vec<(Monomial, BigRational)> = Vec::new();
        'outer: while let Some((lm, lc)) = p.leading_term() {
            for g in &divisors {
                let (gm, gc) = g.leading_term().unwrap();
                if gm.divides(lm) {
                    let factor = lc / gc;
                    let shift = gm.div(lm);
                    p = p.sub(&g.mul_term(&shift, &factor))?;
                    continue 'outer;
                }
            }
            remainder.push((lm.clone(), lc.clone()));
            let lead = MultiPoly {
                ctx: self.ctx.clone(),
                terms: vec![(lm.clone(), lc.clone())],
            };
            p = p.sub(&lead)?;
        }
        Ok(MultiPoly { ctx: self.ctx.clone(), terms: remainder })
    }

    /// Bidegree `(α, β)`: total degree in `left` and in `right` variables.
    /// Every variable of `self` must belong to one of the two groups.
    pub fn bidegree(&self, left: &[usize], right: &[usize]) -> Result<(u32, u32), PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        for i in self.used_vars() {
            if !left.contains(&i) && !right.contains(&i) {
                return Err(PolyError::NoSuchVariable(self.ctx.var_names()[i].clone()));
            }
        }
        let a = self.terms.iter().map(|(m, _)| m.degree_in(left)).max().unwrap();
        let b = self.terms.iter().map(|(m, _)| m.degree_in(right)).max().unwrap();
        Ok((a, b))
    }

    /// Coefficients of `self` viewed as a univariate polynomial in `var`,
    /// lowest degree first. The coefficients live in the same context with
    /// `var` cleared.
    pub fn coefficients_in(&self, var: usize) -> Vec<MultiPoly> {
        let d = self.degree_in(var) as usize;
        let mut buckets: Vec<Vec<(Monomial, BigRational)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            let mut stripped = m.clone();
            stripped.0[var] = 0;
            buckets[e].push((stripped, c.clone()));
        }
        buckets
            .into_iter()
            .map(|terms| self.ctx.from_terms(terms))
            .collect()
    }

    /// Rebuilds from univariate-in-`var` coefficients (lowest first).
    pub fn from_coefficients_in(ctx: &Context, var: usize, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut terms = Vec::new();
        for (e, c) in coeffs.iter().enumerate() {
            for (m, k) in &c.terms {
                let mut m = m.clone();
                m.0[var] += e as u16;
                terms.push((m, k.clone()));
            }
        }
        ctx.from_terms(terms)
    }

    /// Content with respect to `vars`: the gcd of the coefficients of
    /// `self` viewed as a polynomial in `vars` (coefficients lie in the
    /// remaining variables).
    pub fn content_in(&self, vars: &[usize]) -> Result<MultiPoly, PolyError> {
        if self.is_zero() {
            return Ok(self.ctx.zero());
        }
        let mut buckets: HashMap<Monomial, Vec<(Monomial, BigRational)>> = HashMap::new();
        for (m, c) in &self.terms {
            let mut in_part = Monomial::one(self.ctx.nvars());
            let mut out_part = m.clone();
            for &v in vars {
                in_part.0[v] = m.0[v];
                out_part.0[v] = 0;
            }
            buckets.entry(in_part).or_default().push((out_part, c.clone()));
        }
        let mut content = self.ctx.zero();
        let mut coeffs: Vec<(Monomial, Vec<(Monomial, BigRational)>)> = buckets.into_iter().collect();
        coeffs.sort_unstable_by(|a, b| self.ctx.cmp_monomials(&b.0, &a.0));
        for (_, terms) in coeffs {
            let coeff = self.ctx.from_terms(terms);
            content = gcd_poly(&content, &coeff)?;
            if content.is_constant() {
                break;
            }
        }
        Ok(content)
    }

    /// Exact partial evaluation; unassigned variables remain symbolic.
    pub fn eval(&self, point: &[(usize, BigRational)]) -> MultiPoly {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut mono = m.clone();
            for (v, val) in point {
                let e = mono.0[*v];
                if e > 0 {
                    let mut p = BigRational::one();
                    for _ in 0..e {
                        p *= val;
                    }
                    coeff *= p;
                    mono.0[*v] = 0;
                }
            }
            terms.push((mono, coeff));
        }
        self.ctx.from_terms(terms)
    }

    /// Full evaluation at a rational point given by variable name order.
    pub fn eval_all(&self, values: &[BigRational]) -> BigRational {
        assert_eq!(values.len(), self.ctx.nvars());
        let point: Vec<(usize, BigRational)> =
            values.iter().cloned().enumerate().collect();
        self.eval(&point)
            .as_constant()
            .expect("full evaluation yields a constant")
    }

    pub fn derivative(&self, var: usize) -> MultiPoly {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e > 0 {
                let mut m2 = m.clone();
                m2.0[var] = e - 1;
                terms.push((m2, c * BigRational::from_integer(e.into())));
            }
        }
        self.ctx.from_terms(terms)
    }

    /// Exact division: returns `self / g` when `g` divides `self`.
    pub fn div_exact(&self, g: &MultiPoly) -> Option<MultiPoly> {
        if g.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.ctx.zero());
        }
        let mut p = self.clone();
        let mut quot: Vec<(Monomial, BigRational)> = Vec::new();
        let (gm, gc) = g.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        while let Some((lm, lc)) = p.leading_term() {
            if !gm.divides(lm) {
                return None;
            }
            let mono = gm.div(lm);
            let coeff = lc / &gc;
            p = p.sub(&g.mul_term(&mono, &coeff)).expect("same context");
            quot.push((mono, coeff));
        }
        Some(MultiPoly { ctx: self.ctx.clone(), terms: quot })
    }

    /// Rational content: gcd of numerators over lcm of denominators, signed
    /// so that dividing by it gives integer coprime coefficients with a
    /// positive leading one.
    pub fn rational_content(&self) -> BigRational {
        use num_integer::Integer;
        if self.is_zero() {
            return BigRational::zero();
        }
        let mut num = num_bigint::BigInt::zero();
        let mut den = num_bigint::BigInt::one();
        for (_, c) in &self.terms {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        let mut content = BigRational::new(num, den);
        if self.terms[0].1.is_negative() {
            content = -content;
        }
        content
    }

    /// Scales to integer coprime coefficients with positive leading one.
    pub fn primitive_part(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.rational_content();
        self.scale(&c.recip())
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> MultiPoly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.clone().recip();
                self.scale(&inv)
            }
        }
    }

    /// Re-expresses `self` in another context by variable name. Fails if a
    /// used variable is missing in the target.
    pub fn into_context(&self, target: &Context) -> Result<MultiPoly, PolyError> {
        let mut mapping: Vec<Option<usize>> = Vec::with_capacity(self.ctx.nvars());
        for name in self.ctx.var_names() {
            mapping.push(target.var_index(name));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut out = Monomial::one(target.nvars());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    match mapping[i] {
                        Some(j) => out.0[j] = e,
                        None => {
                            return Err(PolyError::NoSuchVariable(
                                self.ctx.var_names()[i].clone(),
                            ))
                        }
                    }
                }
            }
            terms.push((out, c.clone()));
        }
        Ok(target.from_terms(terms))
    }

    /// Substitutes a polynomial for a variable.
    pub fn substitute(&self, var: usize, value: &MultiPoly) -> Result<MultiPoly, PolyError> {
        if self.ctx != *value.context() {
            return Err(PolyError::ContextMismatch);
        }
        let coeffs = self.coefficients_in(var);
        let mut acc = self.ctx.zero();
        let mut power = self.ctx.one();
        for c in coeffs {
            acc = acc.add(&c.mul(&power)?)?;
            power = power.mul(value)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = self.ctx.var_names();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                parts.push(crate::arith::format_rational(&abs));
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(names[i].clone()),
                    _ => parts.push(format!("{}^{}", names[i], e)),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn ctx_st() -> Context {
        Context::new(&["s", "t"], MonomialOrder::Lex)
    }

    fn p(ctx: &Context, src: &str) -> MultiPoly {
        parse_poly(ctx, src).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let ctx = ctx_st();
        let a = p(&ctx, "s + t");
        let b = p(&ctx, "s - t");
        assert_eq!(a.mul(&b).unwrap(), p(&ctx, "s^2 - t^2"));
        let st1 = p(&ctx, "s*t + 1");
        assert_eq!(st1.add(&ctx.zero()).unwrap(), st1);
        assert_eq!(
            p(&ctx, "s^2*t").sub(&p(&ctx, "s*t^2")).unwrap(),
            p(&ctx, "s^2*t - s*t^2")
        );
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let a = ctx_st().one();
        let other = Context::new(&["u", "v"], MonomialOrder::Lex);
        assert_eq!(a.add(&other.one()), Err(PolyError::ContextMismatch));
    }

    #[test]
    fn canonical_form_cancellation() {
        let ctx = ctx_st();
        let f = p(&ctx, "3*s^2*t - 1/2*s + 7");
        assert!(f.sub(&f).unwrap().is_zero());
    }

    #[test]
    fn reduce_examples() {
        let ctx = ctx_st();
        // s^2 reduced by [s] vanishes.
        let r = p(&ctx, "s^2").reduce(&[p(&ctx, "s")]).unwrap();
        assert!(r.is_zero());
        // st+1 reduced by [s-t] -> t^2+1 (hand division).
        let r = p(&ctx, "s*t + 1").reduce(&[p(&ctx, "s - t")]).unwrap();
        assert_eq!(r, p(&ctx, "t^2 + 1"));
        // t is irreducible by [s].
        let r = p(&ctx, "t").reduce(&[p(&ctx, "s")]).unwrap();
        assert_eq!(r, p(&ctx, "t"));
    }

    #[test]
    fn bidegree_examples() {
        let ctx = ctx_st();
        let left = [0usize];
        let right = [1usize];
        assert_eq!(p(&ctx, "s^2*t^2 + s").bidegree(&left, &right).unwrap(), (2, 2));
        assert_eq!(p(&ctx, "s*t + 1").bidegree(&left, &right).unwrap(), (1, 1));
        assert_eq!(p(&ctx, "s + 3").bidegree(&left, &right).unwrap(), (1, 0));
        assert_eq!(ctx.zero().bidegree(&left, &right), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn bidegree_is_additive() {
        let ctx = ctx_st();
        let cases = ["s*t + 1", "s^2 - t", "s + t + 1", "t^2 + s*t"];
        for a in cases {
            for b in cases {
                let fa = p(&ctx, a);
                let fb = p(&ctx, b);
                let (a1, b1) = fa.bidegree(&[0], &[1]).unwrap();
                let (a2, b2) = fb.bidegree(&[0], &[1]).unwrap();
                let prod = fa.mul(&fb).unwrap();
                assert_eq!(prod.bidegree(&[0], &[1]).unwrap(), (a1 + a2, b1 + b2));
            }
        }
    }

    #[test]
    fn content_examples() {
        let ctx = ctx_st();
        let f = p(&ctx, "(s^2 - 1)*t^2 + s^2 - 1");
        assert_eq!(f.content_in(&[1]).unwrap(), p(&ctx, "s^2 - 1"));
        assert_eq!(p(&ctx, "s*t + 1").content_in(&[1]).unwrap(), ctx.one());
        assert!(ctx.zero().content_in(&[1]).unwrap().is_zero());
    }

    #[test]
    fn eval_examples() {
        let ctx = ctx_st();
        let f = p(&ctx, "s^2 + t");
        assert_eq!(f.eval(&[(0, rat(1, 2))]), p(&ctx, "t + 1/4"));
        assert_eq!(p(&ctx, "s*t").eval(&[(0, int(0))]), ctx.zero());
        assert_eq!(p(&ctx, "s + t").eval_all(&[int(1), int(2)]), int(3));
    }

    #[test]
    fn division_and_content_normalization() {
        let ctx = ctx_st();
        let f = p(&ctx, "2*s^2*t + 4*s");
        let g = p(&ctx, "2*s");
        assert_eq!(f.div_exact(&g).unwrap(), p(&ctx, "s*t + 2"));
        assert!(p(&ctx, "s*t + 1").div_exact(&g).is_none());
        assert_eq!(f.primitive_part(), p(&ctx, "s^2*t + 2*s"));
        assert_eq!(p(&ctx, "-3*s - 6").primitive_part(), p(&ctx, "s + 2"));
    }

    #[test]
    fn display_round_trip() {
        let ctx = ctx_st();
        let f = p(&ctx, "-s^2*t + 1/2*s - 3");
        let printed = f.to_string();
        assert_eq!(p(&ctx, &printed), f);
        assert_eq!(printed, "-s^2*t + 1/2*s - 3");
    }

    #[test]
    fn substitution() {
        let ctx = ctx_st();
        let f = p(&ctx, "s^2 + t");
        let g = p(&ctx, "t + 1");
        assert_eq!(f.substitute(0, &g).unwrap(), p(&ctx, "t^2 + 3*t + 1"));
    }
}
