//! Polynomial gcd for the univariate and bivariate cases the pipeline needs.
//!
//! Bivariate gcds run a primitive-part pseudo-remainder sequence in the main
//! variable with coefficients in the other, which keeps all arithmetic in
//! integer primitive parts internally. Only the monic result is contracted.

use super::{MonomialOrder, MultiPoly, PolyError};
#[cfg(test)]
use super::Context;

/// Leading coefficient of `f` under plain lex on its context variables.
fn lex_leading_coeff(f: &MultiPoly) -> crate::arith::BigRational {
    let order = MonomialOrder::Lex.compile(f.context().nvars());
    f.terms()
        .iter()
        .max_by(|a, b| order.cmp(&a.0, &b.0))
        .map(|(_, c)| c.clone())
        .expect("nonzero polynomial")
}

fn normalize_monic_lex(f: &MultiPoly) -> MultiPoly {
    if f.is_zero() {
        return f.clone();
    }
    let lc = lex_leading_coeff(f);
    f.scale(&lc.recip())
}

/// Pseudo-remainder of `a` by `b` in variable `x` (both nonzero,
/// `deg_x a >= deg_x b`). The result is `lc_x(b)^k * a mod b` for some `k`.
fn pseudo_rem(a: &MultiPoly, b: &MultiPoly, x: usize) -> MultiPoly {
    let db = b.degree_in(x);
    let lb = b.coefficients_in(x).pop().expect("nonzero");
    let ctx = a.context().clone();
    let mut r = a.clone();
    while !r.is_zero() {
        let dr = r.degree_in(x);
        if dr < db {
            break;
        }
        let lr = r.coefficients_in(x).pop().expect("nonzero");
        let shift = super::Monomial::var(ctx.nvars(), x);
        let mut xpow = ctx.one();
        for _ in 0..(dr - db) {
            xpow = xpow.mul_term(&shift, &crate::arith::int(1));
        }
        // r := lb*r - lr*x^(dr-db)*b
        let lhs = lb.mul(&r).expect("ctx");
        let rhs = lr.mul(&xpow).expect("ctx").mul(b).expect("ctx");
        r = lhs.sub(&rhs).expect("ctx");
    }
    r
}

/// Primitive part with respect to variable `x`: divides out the gcd of the
/// coefficient polynomials.
fn primitive_in(f: &MultiPoly, x: usize) -> Result<MultiPoly, PolyError> {
    if f.is_zero() {
        return Ok(f.clone());
    }
    let content = f.content_in(&[x])?;
    Ok(f.div_exact(&content).expect("content divides").primitive_part())
}

fn gcd_univariate(f: &MultiPoly, g: &MultiPoly, x: usize) -> MultiPoly {
    let mut a = f.primitive_part();
    let mut b = g.primitive_part();
    if a.degree_in(x) < b.degree_in(x) {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b, x).primitive_part();
        a = b;
        b = r;
    }
    normalize_monic_lex(&a)
}

fn gcd_bivariate(f: &MultiPoly, g: &MultiPoly, x: usize, _y: usize) -> Result<MultiPoly, PolyError> {
    // Split into content (a polynomial in y alone) and primitive part in x.
    let cf = f.content_in(&[x])?;
    let cg = g.content_in(&[x])?;
    let content_gcd = gcd_poly(&cf, &cg)?;
    let mut a = primitive_in(f, x)?;
    let mut b = primitive_in(g, x)?;
    if a.degree_in(x) < b.degree_in(x) {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() && b.degree_in(x) > 0 {
        let r = pseudo_rem(&a, &b, x);
        if r.is_zero() {
            b = primitive_in(&b, x)?;
            let out = content_gcd.mul(&b)?;
            return Ok(normalize_monic_lex(&out));
        }
        a = b;
        b = primitive_in(&r, x)?;
    }
    if b.is_zero() {
        let out = content_gcd.mul(&a)?;
        Ok(normalize_monic_lex(&out))
    } else {
        // Primitive parts are coprime in x.
        Ok(normalize_monic_lex(&content_gcd))
    }
}

/// Monic gcd of two polynomials in at most two (appearing) variables.
/// `gcd(f, 0)` is the monic normalization of `f`; `gcd(0, 0) = 0`.
pub fn gcd_poly(f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly, PolyError> {
    if f.context() != g.context() {
        return Err(PolyError::ContextMismatch);
    }
    if f.is_zero() {
        return Ok(normalize_monic_lex_or_zero(g));
    }
    if g.is_zero() {
        return Ok(normalize_monic_lex_or_zero(f));
    }
    let mut used = f.used_vars();
    for v in g.used_vars() {
        if !used.contains(&v) {
            used.push(v);
        }
    }
    used.sort_unstable();
    match used.len() {
        0 => Ok(f.context().one()),
        1 => Ok(gcd_univariate(f, g, used[0])),
        2 => gcd_bivariate(f, g, used[0], used[1]),
        n => Err(PolyError::TooManyVariables { limit: 2, got: n }),
    }
}

fn normalize_monic_lex_or_zero(f: &MultiPoly) -> MultiPoly {
    if f.is_zero() {
        f.clone()
    } else {
        normalize_monic_lex(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn ctx() -> Context {
        Context::new(&["s", "t"], MonomialOrder::Lex)
    }

    fn p(c: &Context, s: &str) -> MultiPoly {
        parse_poly(c, s).unwrap()
    }

    #[test]
    fn gcd_examples() {
        let c = ctx();
        assert_eq!(
            gcd_poly(&p(&c, "s^2 - t^2"), &p(&c, "s - t")).unwrap(),
            p(&c, "s - t")
        );
        assert_eq!(gcd_poly(&p(&c, "s*t + 1"), &p(&c, "s + t")).unwrap(), c.one());
        assert_eq!(
            gcd_poly(&p(&c, "(s*t - 1)^2"), &p(&c, "s*t - 1")).unwrap(),
            p(&c, "s*t - 1")
        );
    }

    #[test]
    fn gcd_with_zero_normalizes() {
        let c = ctx();
        assert_eq!(
            gcd_poly(&c.zero(), &p(&c, "2*s + 2")).unwrap(),
            p(&c, "s + 1")
        );
        assert!(gcd_poly(&c.zero(), &c.zero()).unwrap().is_zero());
    }

    #[test]
    fn gcd_univariate_cases() {
        let c = ctx();
        assert_eq!(
            gcd_poly(&p(&c, "s^2 - 1"), &p(&c, "s^2 - 2*s + 1")).unwrap(),
            p(&c, "s - 1")
        );
        assert_eq!(
            gcd_poly(&p(&c, "t^3 - t"), &p(&c, "t^2 - 1")).unwrap(),
            p(&c, "t^2 - 1")
        );
    }

    #[test]
    fn too_many_variables_is_an_error() {
        let c = Context::new(&["s", "t", "u"], MonomialOrder::Lex);
        let f = p(&c, "s*t*u + 1");
        assert!(matches!(
            gcd_poly(&f, &f),
            Err(PolyError::TooManyVariables { .. })
        ));
    }

    #[test]
    fn gcd_respects_common_factor() {
        // gcd(f*h, g*h) = normalize(h) * gcd(f, g) on a spread of triples.
        let c = ctx();
        let fs = ["s + 1", "s*t - 1", "t^2 + s"];
        let gs = ["s - t", "t + 2", "s^2 + 1"];
        let hs = ["s + t", "s*t + 2", "2*t - 1"];
        for f in fs {
            for g in gs {
                for h in hs {
                    let (f, g, h) = (p(&c, f), p(&c, g), p(&c, h));
                    let lhs = gcd_poly(&f.mul(&h).unwrap(), &g.mul(&h).unwrap()).unwrap();
                    let rhs = gcd_poly(&f, &g)
                        .unwrap()
                        .mul(&super::normalize_monic_lex(&h))
                        .unwrap();
                    assert_eq!(lhs, rhs, "f={f} g={g} h={h}");
                }
            }
        }
    }
}
