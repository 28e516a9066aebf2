//! Greatest common divisors in `Z[q]` and `Z[q, t]`.
//!
//! Bivariate inputs are viewed as polynomials in one main variable with
//! coefficients in `Z[other]`; the gcd is assembled from the gcd of contents
//! and a primitive pseudo-remainder sequence on the primitive parts.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;

type UPoly = Vec<BigInt>;
type BPoly = Vec<UPoly>;

fn u_trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn u_is_zero(p: &UPoly) -> bool {
    p.is_empty()
}

fn u_content(p: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn u_div_scalar(p: &UPoly, c: &BigInt) -> UPoly {
    p.iter().map(|x| x / c).collect()
}

/// Primitive part with positive leading coefficient.
fn u_pp(p: &UPoly) -> UPoly {
    if p.is_empty() {
        return UPoly::new();
    }
    let mut c = u_content(p);
    if p.last().unwrap().is_negative() {
        c = -c;
    }
    if c.is_one() {
        p.clone()
    } else {
        u_div_scalar(p, &c)
    }
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return UPoly::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    u_trim(&mut out);
    out
}

fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let mut out: UPoly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            let y = b.get(i).cloned().unwrap_or_default();
            x - y
        })
        .collect();
    u_trim(&mut out);
    out
}

/// Exact division in `Z[x]`; `None` if not exact.
fn u_div_exact(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    assert!(!b.is_empty());
    if a.is_empty() {
        return Some(UPoly::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a.clone();
    let db = b.len() - 1;
    let lb = &b[db];
    let mut quot = vec![BigInt::zero(); a.len() - b.len() + 1];
    while !rem.is_empty() && rem.len() > db {
        let dr = rem.len() - 1;
        let (c, r) = rem[dr].div_rem(lb);
        if !r.is_zero() {
            return None;
        }
        let shift = dr - db;
        for (j, y) in b.iter().enumerate() {
            rem[shift + j] -= &c * y;
        }
        quot[shift] = c;
        u_trim(&mut rem);
    }
    if rem.is_empty() {
        u_trim(&mut quot);
        Some(quot)
    } else {
        None
    }
}

fn u_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (j, y) in b.iter().enumerate() {
            r[shift + j] -= &lr * y;
        }
        u_trim(&mut r);
    }
    r
}

/// gcd in `Z[x]`, normalised to a positive leading coefficient.
fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return u_pp_keep_content(b);
    }
    if b.is_empty() {
        return u_pp_keep_content(a);
    }
    let c = u_content(a).gcd(&u_content(b));
    let (mut x, mut y) = if a.len() >= b.len() {
        (u_pp(a), u_pp(b))
    } else {
        (u_pp(b), u_pp(a))
    };
    while !y.is_empty() {
        if y.len() == 1 {
            x = vec![BigInt::one()];
            break;
        }
        let r = u_prem(&x, &y);
        x = y;
        y = u_pp(&r);
    }
    let g = u_pp(&x);
    g.into_iter().map(|v| v * &c).collect()
}

fn u_pp_keep_content(p: &UPoly) -> UPoly {
    if p.last().is_some_and(|c| c.is_negative()) {
        p.iter().map(|c| -c).collect()
    } else {
        p.clone()
    }
}

fn b_trim(p: &mut BPoly) {
    while p.last().is_some_and(u_is_zero) {
        p.pop();
    }
}

fn b_content(p: &BPoly) -> UPoly {
    let mut g = UPoly::new();
    for c in p {
        if c.is_empty() {
            continue;
        }
        g = u_gcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn b_pp(p: &BPoly) -> BPoly {
    let c = b_content(p);
    if c.len() == 1 && c[0].is_one() {
        return p.clone();
    }
    p.iter()
        .map(|x| u_div_exact(x, &c).expect("content divides every coefficient"))
        .collect()
}

fn b_prem(a: &BPoly, b: &BPoly) -> BPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for x in r.iter_mut() {
            *x = u_mul(x, lb);
        }
        for (j, y) in b.iter().enumerate() {
            let prod = u_mul(&lr, y);
            r[shift + j] = u_sub(&r[shift + j], &prod);
        }
        b_trim(&mut r);
    }
    r
}

/// Converts to a polynomial in `t` whose coefficients are polynomials in `q`.
fn to_dense(p: &IntPoly) -> BPoly {
    let mut out: BPoly = vec![UPoly::new(); p.degree_t() as usize + 1];
    for ((a, b), c) in p.map() {
        let row = &mut out[*b as usize];
        if row.len() <= *a as usize {
            row.resize(*a as usize + 1, BigInt::zero());
        }
        row[*a as usize] = c.clone();
    }
    for row in out.iter_mut() {
        u_trim(row);
    }
    b_trim(&mut out);
    out
}

fn from_dense(p: &BPoly) -> IntPoly {
    let mut m = BTreeMap::new();
    for (b, row) in p.iter().enumerate() {
        for (a, c) in row.iter().enumerate() {
            if !c.is_zero() {
                m.insert((a as u32, b as u32), c.clone());
            }
        }
    }
    IntPoly::from_map(m)
}

fn b_gcd_dense(a: &BPoly, b: &BPoly) -> BPoly {
    let ca = b_content(a);
    let cb = b_content(b);
    let c = u_gcd(&ca, &cb);
    let (mut x, mut y) = if a.len() >= b.len() {
        (b_pp(a), b_pp(b))
    } else {
        (b_pp(b), b_pp(a))
    };
    while !y.is_empty() {
        if y.len() == 1 {
            // y is a nonzero element of Z[q] and both sides are primitive in t.
            x = vec![vec![BigInt::one()]];
            break;
        }
        let r = b_prem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { b_pp(&r) };
    }
    x.iter().map(|row| u_mul(row, &c)).collect()
}

/// The gcd of two polynomials in `Z[q, t]`, normalised so that the integer
/// content is positive and the canonical leading term is positive.
pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() {
        return normalize_sign(a.clone());
    }
    if a.is_constant() || b.is_constant() {
        let g = a.content().gcd(&b.content());
        return IntPoly::constant(g);
    }
    let (ma, mb) = (a.min_exponents(), b.min_exponents());
    let mono = (ma.0.min(mb.0), ma.1.min(mb.1));
    let a = a.shift_down(ma.0, ma.1);
    let b = b.shift_down(mb.0, mb.1);
    if a.is_constant() || b.is_constant() {
        let g = a.content().gcd(&b.content());
        return IntPoly::monomial(g, mono.0, mono.1);
    }
    let ca = a.content();
    let cb = b.content();
    let cg = ca.gcd(&cb);
    let (pa, pb) = (a.div_scalar_exact(&ca), b.div_scalar_exact(&cb));
    if let Some(g) = heuristic_gcd(&pa, &pb) {
        return normalize_sign(g.scale(&cg).shift_up(mono.0, mono.1));
    }
    // Work in the variable of smaller degree as the main one.
    let swap = a.degree_t().max(b.degree_t()) > a.degree_q().max(b.degree_q());
    let (a, b) = if swap { (a.swap_qt(), b.swap_qt()) } else { (a, b) };
    let g = from_dense(&b_gcd_dense(&to_dense(&a), &to_dense(&b)));
    let g = if swap { g.swap_qt() } else { g };
    normalize_sign(g.shift_up(mono.0, mono.1))
}

fn max_norm(p: &IntPoly) -> BigInt {
    p.map().values().map(|c| c.abs()).max().unwrap_or_default()
}

fn u_max_norm(p: &UPoly) -> BigInt {
    p.iter().map(|c| c.abs()).max().unwrap_or_default()
}

/// Symmetric remainder in `(-xi/2, xi/2]`.
fn sym_mod(c: &BigInt, xi: &BigInt) -> BigInt {
    let r = c.mod_floor(xi);
    if &r * 2 > *xi {
        r - xi
    } else {
        r
    }
}

fn next_xi(xi: &BigInt) -> BigInt {
    xi * 73794 / 27011 + 1
}

/// `p(xi)` for a dense univariate polynomial.
fn u_eval(p: &UPoly, xi: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * xi + c)
}

/// Inverse of evaluation at `xi` for a polynomial with small coefficients.
fn u_reconstruct(mut g: BigInt, xi: &BigInt) -> UPoly {
    let mut out = UPoly::new();
    while !g.is_zero() {
        let d = sym_mod(&g, xi);
        g = (g - &d) / xi;
        out.push(d);
    }
    out
}

/// Full gcd in `Z[x]` (content included), via evaluation at a large integer.
fn u_heuristic_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return u_pp_keep_content(if a.is_empty() { b } else { a });
    }
    let c = u_content(a).gcd(&u_content(b));
    let (pa, pb) = (u_pp(a), u_pp(b));
    if pa.len() == 1 || pb.len() == 1 {
        return vec![c];
    }
    let mut xi = u_max_norm(&pa).min(u_max_norm(&pb)) * 2 + 29;
    for _ in 0..6 {
        let gamma = u_eval(&pa, &xi).gcd(&u_eval(&pb, &xi));
        let g = u_pp(&u_reconstruct(gamma, &xi));
        if !g.is_empty() && u_div_exact(&pa, &g).is_some() && u_div_exact(&pb, &g).is_some() {
            return g.into_iter().map(|v| v * &c).collect();
        }
        xi = next_xi(&xi);
    }
    u_gcd(a, b)
}

/// gcd of two polynomials of integer content one, or `None` if the
/// heuristic does not certify an answer.
fn heuristic_gcd(a: &IntPoly, b: &IntPoly) -> Option<IntPoly> {
    let mut xi = max_norm(a).min(max_norm(b)) * 2 + 29;
    let dt = a.degree_t().max(b.degree_t()) as usize;
    for _ in 0..6 {
        // evaluate q = xi; what remains is a polynomial in t
        let ea = eval_q(a, &xi, dt);
        let eb = eval_q(b, &xi, dt);
        if !ea.is_empty() && !eb.is_empty() {
            let gamma = u_heuristic_gcd(&ea, &eb);
            let g = reconstruct_q(&gamma, &xi);
            if !g.is_zero() {
                let g = g.div_scalar_exact(&g.content());
                if a.div_exact(&g).is_some() && b.div_exact(&g).is_some() {
                    return Some(g);
                }
            }
        }
        xi = next_xi(&xi);
    }
    None
}

fn eval_q(p: &IntPoly, xi: &BigInt, deg_t: usize) -> UPoly {
    let mut out = vec![BigInt::zero(); deg_t + 1];
    let mut pow_cache: Vec<BigInt> = vec![BigInt::one()];
    for ((i, j), c) in p.map() {
        while pow_cache.len() <= *i as usize {
            let next = pow_cache.last().unwrap() * xi;
            pow_cache.push(next);
        }
        out[*j as usize] += c * &pow_cache[*i as usize];
    }
    u_trim(&mut out);
    out
}

/// Coefficientwise inverse of [`eval_q`].
fn reconstruct_q(gamma: &UPoly, xi: &BigInt) -> IntPoly {
    let mut m = BTreeMap::new();
    for (j, c) in gamma.iter().enumerate() {
        for (i, d) in u_reconstruct(c.clone(), xi).into_iter().enumerate() {
            if !d.is_zero() {
                m.insert((i as u32, j as u32), d);
            }
        }
    }
    IntPoly::from_map(m)
}

fn normalize_sign(p: IntPoly) -> IntPoly {
    match p.leading() {
        Some((_, c)) if c.is_negative() => -p,
        _ => p,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(u32, u32, i64)]) -> IntPoly {
        IntPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn gcd_of_products() {
        let f = p(&[(0, 0, 1), (1, 0, -1)]); // 1 - q
        let g = p(&[(0, 0, 1), (0, 1, -1)]); // 1 - t
        let h = p(&[(1, 0, 1), (0, 2, -1)]); // q - t^2
        let a = &(&f * &g) * &h;
        let b = &(&g * &h) * &p(&[(0, 0, 2), (3, 1, 1)]);
        let d = gcd(&a, &b);
        let expected = normalize_sign(&g * &h);
        assert_eq!(d, expected);
    }

    #[test]
    fn gcd_with_monomials_and_content() {
        let a = p(&[(2, 1, 6), (3, 1, 6)]);
        let b = p(&[(1, 2, 4), (2, 2, 4)]);
        assert_eq!(gcd(&a, &b), p(&[(1, 1, 2), (2, 1, 2)]));
        assert_eq!(gcd(&a, &IntPoly::zero()), a);
    }

    #[test]
    fn coprime() {
        let a = p(&[(0, 0, 1), (1, 1, -1)]);
        let b = p(&[(0, 0, 1), (1, 0, 1), (0, 1, 1)]);
        assert_eq!(gcd(&a, &b), IntPoly::one());
    }
}
