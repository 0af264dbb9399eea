use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::Field;
use super::poly::Poly;
use crate::error::{Error, Result};

/// Yun's squarefree decomposition: `f = lc · Π aᵢ^i` with the `aᵢ` monic,
/// squarefree and pairwise coprime. Entry `k` of the result is `a_{k+1}`.
pub fn squarefree_decomposition<F: Field>(f: &Poly<F>) -> Result<Vec<Poly<F>>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = f.monic();
    let mut out = Vec::new();
    if f.is_constant() {
        return Ok(out);
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0)?;
    let mut c = df.exact_div(&a0)?;
    let mut d = &c - &b.derivative();
    while !b.is_constant() {
        let a = b.gcd(&d);
        b = b.exact_div(&a)?;
        c = d.exact_div(&a)?;
        d = &c - &b.derivative();
        out.push(a);
    }
    Ok(out)
}

/// Product of the monic irreducible factors of `f` that occur to odd
/// multiplicity.
pub fn squarefree_part<F: Field>(f: &Poly<F>) -> Result<Poly<F>> {
    let parts = squarefree_decomposition(f)?;
    Ok(parts
        .iter()
        .step_by(2)
        .fold(Poly::one(), |acc, a| &acc * a))
}

/// Product of all distinct monic irreducible factors (the radical).
pub fn radical<F: Field>(f: &Poly<F>) -> Result<Poly<F>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    f.monic().exact_div(&f.gcd(&f.derivative()))
}

/// True iff `f` is a nonzero constant times a square.
pub fn is_square_up_to_constant<F: Field>(f: &Poly<F>) -> Result<bool> {
    Ok(squarefree_part(f)?.is_constant())
}

/// Sign of `2^d · p((2k+1)/2)` for an integer polynomial of degree `d`.
fn sign_at_half(cs: &[BigInt], k: &BigInt) -> i8 {
    let x = BigInt::from(2) * k + BigInt::one();
    let mut acc = BigInt::zero();
    let mut two_pow = BigInt::one();
    // Horner in x with the weights 2^(d-i) folded in from the top.
    for c in cs.iter().rev() {
        acc = acc * &x + c * &two_pow;
        two_pow <<= 1usize;
    }
    if acc.is_positive() {
        1
    } else if acc.is_negative() {
        -1
    } else {
        0
    }
}

/// Sturm chain of `p`, each member scaled to a primitive integer polynomial
/// by a positive constant (which preserves all signs).
fn sturm_chain(p: &Poly<BigRational>) -> Vec<Vec<BigInt>> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]).expect("nonzero");
        if r.is_zero() {
            break;
        }
        // Positive rescaling keeps coefficient growth in check.
        chain.push(Poly::from_integers(&positive_integer_form(&-&r)));
    }
    chain.iter().map(positive_integer_form).collect()
}

fn positive_integer_form(p: &Poly<BigRational>) -> Vec<BigInt> {
    let v = p.primitive_integer();
    if p.lc().unwrap().is_positive() {
        v
    } else {
        v.into_iter().map(|c| -c).collect()
    }
}

fn sign_changes(chain: &[Vec<BigInt>], k: &BigInt) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in chain {
        let s = sign_at_half(p, k);
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Fujiwara bound for the roots of a monic integer polynomial.
fn root_bound(h: &[BigInt]) -> BigInt {
    let n = h.len() - 1;
    let mut m = BigInt::zero();
    for i in 1..=n {
        let c = h[n - i].abs();
        if c.is_zero() {
            continue;
        }
        let c = if i == n { c * BigInt::from(2) } else { c };
        m = m.max(c.nth_root(i as u32) + BigInt::one());
    }
    BigInt::from(2) * m + BigInt::one()
}

/// Exact set of rational roots of `f`.
///
/// The distinct-root part of `f` is made primitive over Z and transformed to
/// the monic polynomial `h(y) = aₙ^{n−1} f(y / aₙ)`, whose rational roots are
/// integers. These are isolated by Sturm bisection between half-integers,
/// which can never be roots of `h`.
pub fn rational_roots(f: &Poly<BigRational>) -> Result<BTreeSet<BigRational>> {
    let g = radical(f)?;
    let mut out = BTreeSet::new();
    let n = match g.degree() {
        Some(0) => return Ok(out),
        Some(n) => n,
        None => unreachable!(),
    };
    let cs = g.primitive_integer();
    let an = cs[n].clone();
    let mut pow = BigInt::one();
    let mut h = vec![BigInt::zero(); n + 1];
    for i in (0..n).rev() {
        h[i] = &cs[i] * &pow;
        pow *= &an;
    }
    h[n] = BigInt::one();
    let hp = Poly::from_integers(&h);
    let bound = root_bound(&h);
    let chain = sturm_chain(&hp);
    // Intervals (lo + 1/2, hi + 1/2] with integer lo < hi; the endpoints are
    // never roots.
    let mut stack = vec![(-&bound - BigInt::one(), bound.clone())];
    let mut vl = sign_changes(&chain, &stack[0].0);
    let vh = sign_changes(&chain, &stack[0].1);
    let mut pending = vec![(vl, vh)];
    while let Some((lo, hi)) = stack.pop() {
        let (l, r) = pending.pop().unwrap();
        if l == r {
            continue;
        }
        if &hi - &lo == BigInt::one() {
            let y = BigRational::from_integer(hi.clone());
            if hp.eval(&y).is_zero() {
                out.insert(BigRational::new(hi, an.clone()));
            }
            continue;
        }
        let mid: BigInt = (&lo + &hi) >> 1usize;
        vl = sign_changes(&chain, &mid);
        stack.push((lo, mid.clone()));
        pending.push((l, vl));
        stack.push((mid, hi));
        pending.push((vl, r));
    }
    Ok(out)
}

/// Rational roots of a polynomial over any of the supported fields: the
/// common rational roots of its coordinate polynomials over Q.
pub fn rational_roots_in<F: Field>(f: &Poly<F>) -> Result<BTreeSet<BigRational>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let k = f.coeffs()[0].q_coords().len();
    let mut g = Poly::<BigRational>::zero();
    for j in 0..k {
        let part = Poly::new(f.coeffs().iter().map(|c| c.q_coords()[j].clone()).collect());
        g = g.gcd(&part);
    }
    rational_roots(&g)
}

/// Integral members of [`rational_roots`].
pub fn integer_roots(f: &Poly<BigRational>) -> Result<BTreeSet<BigInt>> {
    Ok(rational_roots(f)?
        .into_iter()
        .filter(|r| r.is_integer())
        .map(|r| r.to_integer())
        .collect())
}
